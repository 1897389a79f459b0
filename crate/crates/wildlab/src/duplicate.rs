//! Vertex doubling of a quiver into a bipartite arrow diagram.

use quiverlab::Quiver;

use crate::graph::UndirectedGraph;

/// Bipartite double of a quiver: every vertex gains a primed copy and every
/// arrow u -> v is redirected to end at the primed copy v'. The double
/// carries no relations by construction.
#[derive(Debug, Clone)]
pub struct DuplicatedQuiver {
    /// Number of unprimed vertices; primed copies follow at `originals + i`.
    pub originals: usize,
    pub labels: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
}

/// Doubles the vertex set and reroutes each arrow to the primed copy of its
/// target.
pub fn duplicate_quiver(quiver: &Quiver) -> DuplicatedQuiver {
    let n = quiver.vertices.len();
    let mut labels: Vec<String> = quiver.vertices.iter().map(|v| v.label()).collect();
    labels.extend(quiver.vertices.iter().map(|v| format!("{}'", v.label())));
    let arrows = quiver.arrows.iter().map(|a| (a.source, n + a.target)).collect();
    DuplicatedQuiver { originals: n, labels, arrows }
}

impl DuplicatedQuiver {
    /// Forgets arrow directions.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        UndirectedGraph { labels: self.labels.clone(), edges: self.arrows.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiverlab::{canonical_descriptor, families, family_quiver, Arrow, Vertex};
    use weightlab::Weight;

    fn quiver(n: usize, arrows: &[(char, usize, usize)]) -> Quiver {
        Quiver {
            family: "test",
            vertices: (0..n)
                .map(|i| Vertex {
                    weight: Weight::from_integers(&[i as i64]),
                    parity: false,
                    trusted: true,
                })
                .collect(),
            arrows: arrows
                .iter()
                .map(|&(name, source, target)| Arrow { name, source, target })
                .collect(),
            involution: (0..n).collect(),
        }
    }

    #[test]
    fn a_loop_becomes_a_single_crossing_arrow() {
        let double = duplicate_quiver(&quiver(1, &[('h', 0, 0)]));
        assert_eq!(double.originals, 1);
        assert_eq!(double.labels, vec!["L(0)".to_string(), "L(0)'".to_string()]);
        assert_eq!(double.arrows, vec![(0, 1)]);
    }

    #[test]
    fn a_two_cycle_separates() {
        let double = duplicate_quiver(&quiver(2, &[('a', 0, 1), ('b', 1, 0)]));
        assert_eq!(double.arrows, vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn doubling_every_family_is_bipartite() {
        for &family in families() {
            let descriptor = canonical_descriptor(family).unwrap();
            let cutoff = family.min_cutoff().max(6);
            let (quiver, _) = family_quiver(family, &descriptor, cutoff).unwrap();
            let double = duplicate_quiver(&quiver);
            let n = double.originals;
            assert_eq!(double.labels.len(), 2 * n);
            for &(source, target) in &double.arrows {
                assert!(source < n && target >= n, "{} edge crosses wrong", family.name());
            }
        }
    }
}
