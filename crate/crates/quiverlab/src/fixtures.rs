//! Reference radical filtrations for every family, pinning the computed
//! algebras to the known block structure at every trusted vertex.

use crate::families::{block_algebra, canonical_descriptor, families, BlockFamily};
use crate::quiver::Quiver;
use crate::Error;

/// Chain vertex: the radical puts both neighbours one layer down and the
/// vertex itself at the bottom.
fn chain_rule(v: usize, n: usize) -> Vec<Vec<usize>> {
    let mut middle = Vec::new();
    if v > 0 {
        middle.push(v - 1);
    }
    if v + 1 < n {
        middle.push(v + 1);
    }
    vec![vec![v], middle, vec![v]]
}

/// Chain with a loop at the head: the head and its neighbour interleave for
/// two layers; past the junction the plain chain rule applies.
fn junction_rule(v: usize) -> Vec<Vec<usize>> {
    match v {
        0 => vec![vec![0], vec![0, 1], vec![0, 1], vec![0]],
        1 => vec![vec![1], vec![0, 2], vec![0], vec![1]],
        k => vec![vec![k], vec![k - 1, k + 1], vec![k]],
    }
}

/// Two-row ladder: columns 1..3 carry the braided head, columns >= 4 the
/// plain chain rule within their row.
fn ladder_rule(v: usize) -> Vec<Vec<usize>> {
    let row = v % 2;
    let col = v / 2 + 1;
    let same = |k: usize| 2 * (k - 1) + row;
    let cross = |k: usize| 2 * (k - 1) + (1 - row);
    match col {
        1 => vec![vec![v], vec![cross(2)], vec![same(3)], vec![same(2)], vec![v]],
        2 => vec![
            vec![v],
            vec![same(1), cross(3)],
            vec![cross(2), cross(2)],
            vec![same(3), cross(1)],
            vec![v],
        ],
        3 => vec![vec![v], vec![same(2), same(4)], vec![same(1)], vec![cross(2)], vec![v]],
        k => vec![vec![v], vec![same(k - 1), same(k + 1)], vec![v]],
    }
}

/// Tensoring with a square-zero odd loop: each layer gains the parity twin of
/// the layer above it, and the filtration deepens by one.
fn convolve_with_twin(base: Vec<Vec<usize>>, twin: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); base.len() + 1];
    for (j, layer) in base.iter().enumerate() {
        out[j].extend(layer.iter().copied());
        out[j + 1].extend(layer.iter().map(|&i| twin[i]));
    }
    out
}

/// The reference radical filtration of P(vertex) as sorted label layers, or
/// None when the vertex is too close to the cut for the reference to apply.
pub fn expected_filtration(quiver: &Quiver, vertex: usize) -> Option<Vec<Vec<String>>> {
    if !quiver.vertices[vertex].trusted {
        return None;
    }
    let n = quiver.vertices.len();
    let indices = match quiver.family {
        "sq-typical" | "q-strongly-typical" => vec![vec![vertex]],
        "sq-typical-loop" => vec![vec![vertex], vec![vertex]],
        "q-typical" => vec![vec![vertex], vec![quiver.involution[vertex]]],
        "sq-half-standard" | "q-half-standard" | "sq-standard" => chain_rule(vertex, n),
        "q-standard" => junction_rule(vertex),
        "sq-principal" => ladder_rule(vertex),
        "q-principal" => convolve_with_twin(ladder_rule(vertex), &quiver.involution),
        _ => return None,
    };
    Some(
        indices
            .into_iter()
            .map(|layer| {
                let mut labels: Vec<String> =
                    layer.into_iter().map(|i| quiver.vertices[i].label()).collect();
                labels.sort();
                labels
            })
            .collect(),
    )
}

/// Outcome of checking one family against its reference filtrations.
#[derive(Debug)]
pub struct FixtureReport {
    pub family: &'static str,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// Builds the family's canonical block at the given truncation and compares
/// the radical filtration of every trusted projective with the reference.
pub fn verify_family(
    family: &dyn BlockFamily,
    cutoff: usize,
    length_cap: usize,
) -> Result<FixtureReport, Error> {
    let descriptor = canonical_descriptor(family)?;
    let algebra = block_algebra(&descriptor, cutoff.max(family.min_cutoff()), length_cap)?;
    let quiver = &algebra.quiver;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for v in 0..quiver.vertices.len() {
        let Some(expected) = expected_filtration(quiver, v) else { continue };
        checked += 1;
        let got = algebra.radical_filtration(v).layer_labels(quiver);
        if got != expected {
            mismatches.push(format!(
                "P({} at {v}): expected {expected:?}, got {got:?}",
                quiver.vertices[v].label()
            ));
        }
    }
    Ok(FixtureReport { family: family.name(), checked, mismatches })
}

/// Checks every registered family at one truncation.
pub fn verify_all(cutoff: usize, length_cap: usize) -> Result<Vec<FixtureReport>, Error> {
    families().iter().map(|family| verify_family(*family, cutoff, length_cap)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_by_name;

    #[test]
    fn all_families_match_their_reference_filtrations() {
        for report in verify_all(6, 10).unwrap() {
            assert!(report.checked > 0, "{} checked nothing", report.family);
            assert!(
                report.mismatches.is_empty(),
                "{}: {}",
                report.family,
                report.mismatches.join("; ")
            );
        }
    }

    #[test]
    fn vertical_arrows_double_every_principal_hom_space() {
        let sq = family_by_name("sq-principal").unwrap();
        let q = family_by_name("q-principal").unwrap();
        let sq_alg = block_algebra(&canonical_descriptor(sq).unwrap(), 6, 10).unwrap();
        let q_alg = block_algebra(&canonical_descriptor(q).unwrap(), 6, 10).unwrap();
        let twin = &q_alg.quiver.involution;
        for (s, &twin_s) in twin.iter().enumerate().take(12) {
            for t in 0..12 {
                if !(q_alg.quiver.vertices[s].trusted && q_alg.quiver.vertices[t].trusted) {
                    continue;
                }
                assert_eq!(
                    q_alg.dim_hom(s, t),
                    sq_alg.dim_hom(s, t) + sq_alg.dim_hom(twin_s, t),
                    "pair ({s},{t})"
                );
            }
        }
        // End of the trivial projective: 2 without the vertical arrows, 4 with.
        assert_eq!(sq_alg.dim_hom(2, 2), 2);
        assert_eq!(sq_alg.dim_hom(2, 3), 2);
        assert_eq!(sq_alg.dim_hom(4, 4), 2);
        assert_eq!(q_alg.dim_hom(2, 2), 4);
        assert_eq!(q_alg.nilpotency(), sq_alg.nilpotency() + 1);
    }

    #[test]
    fn zigzag_socle_loop_survives_at_the_half_chain_head() {
        let family = family_by_name("sq-half-standard").unwrap();
        let algebra = block_algebra(&canonical_descriptor(family).unwrap(), 6, 8).unwrap();
        assert_eq!(algebra.dim_hom(0, 0), 2);
        assert_eq!(algebra.dim_hom(1, 1), 2);
        assert_eq!(algebra.dim_hom(0, 1), 1);
        assert_eq!(algebra.dim_hom(1, 0), 1);
        assert_eq!(algebra.dim_hom(0, 2), 0);
        assert_eq!(algebra.nilpotency(), 3);
    }

    #[test]
    fn mirrored_chain_separates_parities_away_from_the_center() {
        let family = family_by_name("sq-standard").unwrap();
        let algebra = block_algebra(&canonical_descriptor(family).unwrap(), 6, 8).unwrap();
        let n = algebra.quiver.vertices.len();
        let center = n / 2;
        for i in 0..n {
            if !algebra.quiver.vertices[i].trusted || i == center {
                continue;
            }
            assert_eq!(algebra.dim_hom(i, n - 1 - i), 0, "vertex {i}");
        }
        assert_eq!(algebra.dim_hom(center, center), 2);
        assert_eq!(algebra.dim_hom(center, center + 1), 1);
        assert_eq!(algebra.dim_hom(center + 1, center), 1);
    }

    #[test]
    fn junction_chain_doubles_only_at_the_head() {
        let family = family_by_name("q-standard").unwrap();
        let algebra = block_algebra(&canonical_descriptor(family).unwrap(), 6, 10).unwrap();
        assert_eq!(algebra.dim_hom(0, 0), 4);
        assert_eq!(algebra.dim_hom(1, 1), 2);
        assert_eq!(algebra.dim_hom(0, 1), 2);
        assert_eq!(algebra.dim_hom(1, 0), 2);
        assert_eq!(algebra.dim_hom(2, 2), 2);
        assert_eq!(algebra.nilpotency(), 4);
    }
}
