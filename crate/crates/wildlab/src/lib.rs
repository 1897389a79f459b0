//! Representation-type verdicts for block quivers: a special biserial test
//! certifying tameness and a bipartite-doubling graph argument certifying
//! wildness.

mod biserial;
mod duplicate;
mod graph;

pub use biserial::{is_special_biserial, BiserialReport, BiserialViolation, ViolationKind};
pub use duplicate::{duplicate_quiver, DuplicatedQuiver};
pub use graph::{classify_graph, ComponentClass, GraphClass, UndirectedGraph};

use quiverlab::{block_quiver, Arrow, Quiver, RelationSet};
use weightlab::BlockDescriptor;

#[derive(Debug)]
pub enum Error {
    Quiver(quiverlab::Error),
    /// Neither test concludes: the presentation is not special biserial yet
    /// its double stays within the Dynkin and Euclidean lists.
    Undecided(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Quiver(e) => write!(f, "{e}"),
            Error::Undecided(family) => write!(
                f,
                "representation type undecided for {family}: the special biserial \
                 test fails yet the doubled graph stays within the Dynkin and \
                 Euclidean lists"
            ),
        }
    }
}

impl std::error::Error for Error {}

impl From<quiverlab::Error> for Error {
    fn from(e: quiverlab::Error) -> Self {
        Error::Quiver(e)
    }
}

pub(crate) fn describe_arrow(quiver: &Quiver, arrow: &Arrow) -> String {
    format!(
        "{}: {} -> {}",
        arrow.name,
        quiver.vertices[arrow.source].label(),
        quiver.vertices[arrow.target].label()
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationType {
    Tame,
    Wild,
}

impl RepresentationType {
    pub fn name(self) -> &'static str {
        match self {
            RepresentationType::Tame => "tame",
            RepresentationType::Wild => "wild",
        }
    }
}

impl std::fmt::Display for RepresentationType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A branch node certifying that some component of the doubled graph falls
/// outside the Dynkin and Euclidean lists.
#[derive(Debug, Clone)]
pub struct WildWitness {
    /// Node label in the doubled graph (primed labels possible).
    pub vertex: String,
    pub degree: usize,
    /// The quiver arrows meeting that node.
    pub arrows: Vec<String>,
    pub component_size: usize,
}

/// A representation-type verdict with its justification trace.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub family: &'static str,
    pub verdict: RepresentationType,
    pub biserial: BiserialReport,
    pub wild_witness: Option<WildWitness>,
    pub trace: Vec<String>,
}

/// Decides tame against wild for one block presentation.
///
/// A special biserial presentation certifies tameness directly. Otherwise
/// the quiver is doubled after passing to the quotient in which all
/// length-two paths vanish; a connected component of the underlying graph
/// outside the Dynkin and Euclidean lists certifies wildness.
pub fn representation_type(
    quiver: &Quiver,
    relations: &RelationSet,
) -> Result<Verdict, Error> {
    let biserial = is_special_biserial(quiver, relations);
    let zero_count = relations.instances.iter().filter(|r| r.rhs.is_none()).count();
    let mut trace = vec![format!(
        "monomial ideal built from {zero_count} zero relations; {} identifications set aside",
        biserial.binomial_instances
    )];
    if biserial.special_biserial {
        trace.push("every vertex meets at most two incoming and two outgoing arrows".into());
        trace.push(
            "every arrow has at most one alive continuation and at most one alive predecessor"
                .into(),
        );
        trace.push("the presentation is special biserial, which certifies tame type".into());
        return Ok(Verdict {
            family: quiver.family,
            verdict: RepresentationType::Tame,
            biserial,
            wild_witness: None,
            trace,
        });
    }

    let violation = biserial.violation.clone().expect("failed check carries a violation");
    trace.push(format!("special biserial fails: {violation}"));
    trace.push(
        "pass to the quotient where every length-two path vanishes, then double: \
         each arrow u -> v is rerouted to the primed copy v'"
            .into(),
    );
    let double = duplicate_quiver(quiver);
    let graph = double.underlying_graph();
    let components = classify_graph(&graph);
    if components.iter().all(|c| c.class != GraphClass::Neither) {
        return Err(Error::Undecided(quiver.family.to_string()));
    }

    let mut degree = vec![0usize; graph.labels.len()];
    for &(a, b) in &graph.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let n = double.originals;
    // Witness node: prefer a trusted unprimed branch node, then higher degree,
    // then higher index; all choices live in components classified Neither.
    let mut best: Option<(bool, usize, usize)> = None;
    let mut best_component = 0usize;
    for (c, component) in components.iter().enumerate() {
        if component.class != GraphClass::Neither {
            continue;
        }
        for &node in &component.nodes {
            if degree[node] == 0 {
                continue;
            }
            let preferred =
                node < n && quiver.vertices[node].trusted && degree[node] >= 3;
            let key = (preferred, degree[node], node);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
                best_component = c;
            }
        }
    }
    let (_, node_degree, node) = best.expect("a component outside the lists has edges");
    let arrows: Vec<String> = if node < n {
        quiver.arrows_from(node).map(|(_, a)| describe_arrow(quiver, a)).collect()
    } else {
        quiver.arrows_into(node - n).map(|(_, a)| describe_arrow(quiver, a)).collect()
    };
    let witness = WildWitness {
        vertex: graph.labels[node].clone(),
        degree: node_degree,
        arrows,
        component_size: components[best_component].nodes.len(),
    };
    trace.push(format!(
        "the doubled graph splits into {} components; the one through {} \
         ({} nodes) is neither a Dynkin nor a Euclidean diagram",
        components.len(),
        witness.vertex,
        witness.component_size
    ));
    trace.push(format!(
        "{} meets {} edges there ({})",
        witness.vertex,
        witness.degree,
        witness.arrows.join("; ")
    ));
    trace.push(
        "a component outside the Dynkin and Euclidean lists certifies wild type".into(),
    );
    Ok(Verdict {
        family: quiver.family,
        verdict: RepresentationType::Wild,
        biserial,
        wild_witness: Some(witness),
        trace,
    })
}

/// Convenience wrapper: builds the block quiver, then classifies it.
pub fn block_verdict(descriptor: &BlockDescriptor, cutoff: usize) -> Result<Verdict, Error> {
    let (quiver, relations) = block_quiver(descriptor, cutoff)?;
    representation_type(&quiver, &relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiverlab::{canonical_descriptor, families, family_by_name, family_quiver, Orientation, Vertex};
    use weightlab::Weight;

    #[test]
    fn nine_families_are_tame_via_special_biserial() {
        for &family in families() {
            if family.name() == "q-principal" {
                continue;
            }
            let descriptor = canonical_descriptor(family).unwrap();
            let cutoff = family.min_cutoff().max(6);
            let (quiver, relations) = family_quiver(family, &descriptor, cutoff).unwrap();
            let verdict = representation_type(&quiver, &relations).unwrap();
            assert_eq!(verdict.verdict, RepresentationType::Tame, "{}", family.name());
            assert!(verdict.biserial.special_biserial);
            assert!(verdict.wild_witness.is_none());
        }
    }

    #[test]
    fn the_doubled_ladder_is_wild_with_a_branch_witness() {
        let family = family_by_name("q-principal").unwrap();
        let descriptor = canonical_descriptor(family).unwrap();
        let (quiver, relations) = family_quiver(family, &descriptor, 6).unwrap();
        let verdict = representation_type(&quiver, &relations).unwrap();
        assert_eq!(verdict.verdict, RepresentationType::Wild);
        let violation = verdict.biserial.violation.as_ref().unwrap();
        assert_eq!(violation.kind, ViolationKind::TooManyOut);
        assert!(verdict.biserial.binomial_instances > 0);
        let witness = verdict.wild_witness.unwrap();
        assert!(witness.degree >= 3, "degree {}", witness.degree);
        assert_eq!(witness.arrows.len(), witness.degree);
        for name in ["x:", "y:", "θ:"] {
            assert!(
                witness.arrows.iter().any(|a| a.starts_with(name)),
                "missing {name} in {:?}",
                witness.arrows
            );
        }
        assert!(verdict.trace.iter().any(|l| l.contains("neither a Dynkin")));
    }

    #[test]
    fn wildness_is_stable_in_the_cutoff() {
        let family = family_by_name("q-principal").unwrap();
        let descriptor = canonical_descriptor(family).unwrap();
        for cutoff in 6..=8 {
            let verdict = block_verdict(&descriptor, cutoff).unwrap();
            assert_eq!(verdict.verdict, RepresentationType::Wild, "cutoff {cutoff}");
        }
    }

    #[test]
    fn an_undecided_presentation_is_reported() {
        // Three arrows out of one vertex, no relations: not special biserial,
        // but the double is a Dynkin star plus isolated nodes.
        let quiver = Quiver {
            family: "test",
            vertices: (0..4)
                .map(|i| Vertex {
                    weight: Weight::from_integers(&[i as i64]),
                    parity: false,
                    trusted: true,
                })
                .collect(),
            arrows: vec![
                quiverlab::Arrow { name: 'a', source: 0, target: 1 },
                quiverlab::Arrow { name: 'b', source: 0, target: 2 },
                quiverlab::Arrow { name: 'c', source: 0, target: 3 },
            ],
            involution: (0..4).collect(),
        };
        let relations =
            RelationSet { orientation: Orientation::RightToLeft, instances: Vec::new() };
        let err = representation_type(&quiver, &relations).unwrap_err();
        assert!(matches!(err, Error::Undecided(_)), "{err}");
    }
}
