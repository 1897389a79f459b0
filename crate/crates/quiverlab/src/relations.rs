//! Relation words on a quiver: composition-orientation resolution and positional instantiation.

use crate::quiver::Quiver;
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;

/// A relation as written for a block family: words in arrow names, with the
/// composition order of juxtaposition left implicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawRelation {
    /// The word vanishes wherever it composes.
    Zero(&'static str),
    /// The words agree wherever both compose between the same endpoints.
    Equal(&'static str, &'static str),
}

impl fmt::Display for RawRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawRelation::Zero(w) => write!(f, "{w} = 0"),
            RawRelation::Equal(p, q) => write!(f, "{p} = {q}"),
        }
    }
}

/// Reading convention for juxtaposed arrow names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// The rightmost letter acts first (function composition).
    RightToLeft,
    /// The leftmost letter acts first.
    LeftToRight,
}

/// One positional instance of a relation: concrete arrow id sequences in
/// execution order (first-applied arrow first). `rhs` is absent for zero
/// relations. All scalars are 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelationInstance {
    pub source: usize,
    pub target: usize,
    pub lhs: Vec<usize>,
    pub rhs: Option<Vec<usize>>,
}

/// Relations resolved against a quiver: a fixed reading plus every positional
/// instance on the current window.
#[derive(Debug, Clone)]
pub struct RelationSet {
    pub orientation: Orientation,
    pub instances: Vec<RelationInstance>,
}

fn exec_order(word: &str, orientation: Orientation) -> Vec<char> {
    match orientation {
        Orientation::RightToLeft => word.chars().rev().collect(),
        Orientation::LeftToRight => word.chars().collect(),
    }
}

/// All concrete arrow sequences spelling `word` under the given reading,
/// as (source, target, arrows-in-execution-order).
fn enumerate_word(
    quiver: &Quiver,
    word: &str,
    orientation: Orientation,
) -> Vec<(usize, usize, Vec<usize>)> {
    let exec = exec_order(word, orientation);
    let mut partial: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (step, &name) in exec.iter().enumerate() {
        let mut next = Vec::new();
        for (id, arrow) in quiver.arrows.iter().enumerate() {
            if arrow.name != name {
                continue;
            }
            if step == 0 {
                next.push((arrow.source, arrow.target, vec![id]));
                continue;
            }
            for (src, tgt, seq) in &partial {
                if *tgt == arrow.source {
                    let mut seq = seq.clone();
                    seq.push(id);
                    next.push((*src, arrow.target, seq));
                }
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    partial
}

/// All instances of one relation on `quiver` under a fixed reading. Zero
/// relations instantiate at every composable position; binomial relations
/// only at endpoint pairs where both sides compose, and there each side must
/// compose uniquely. An empty list is legal on a truncated window.
pub fn instantiate(
    relation: RawRelation,
    quiver: &Quiver,
    orientation: Orientation,
) -> Result<Vec<RelationInstance>, Error> {
    match relation {
        RawRelation::Zero(w) => Ok(enumerate_word(quiver, w, orientation)
            .into_iter()
            .map(|(source, target, lhs)| RelationInstance { source, target, lhs, rhs: None })
            .collect()),
        RawRelation::Equal(p, q) => {
            // Instances of each side, bucketed by (source, target).
            type EndBuckets = BTreeMap<(usize, usize), (Vec<Vec<usize>>, Vec<Vec<usize>>)>;
            let mut by_ends: EndBuckets = BTreeMap::new();
            for (s, t, seq) in enumerate_word(quiver, p, orientation) {
                by_ends.entry((s, t)).or_default().0.push(seq);
            }
            for (s, t, seq) in enumerate_word(quiver, q, orientation) {
                by_ends.entry((s, t)).or_default().1.push(seq);
            }
            let mut out = Vec::new();
            for ((source, target), (lhs, rhs)) in by_ends {
                if lhs.is_empty() || rhs.is_empty() {
                    continue;
                }
                if lhs.len() != 1 || rhs.len() != 1 {
                    return Err(Error::InstanceMismatch(format!(
                        "{relation} composes {}x{} ways between vertices {source} and {target}",
                        lhs.len(),
                        rhs.len()
                    )));
                }
                out.push(RelationInstance {
                    source,
                    target,
                    lhs: lhs.into_iter().next().unwrap(),
                    rhs: rhs.into_iter().next(),
                });
            }
            Ok(out)
        }
    }
}

///// Canonical form for comparing instance sets across readings: endpoint pair
/// plus the side sequences as an unordered pair.
fn canonical(mut inst: RelationInstance) -> RelationInstance {
    if let Some(rhs) = inst.rhs.take() {
        let (lo, hi) = if rhs < inst.lhs { (rhs, inst.lhs) } else { (inst.lhs, rhs) };
        inst.lhs = lo;
        inst.rhs = Some(hi);
    }
    inst
}

///// Picks the reading convention mechanically: a reading is viable when every
/// relation composes under it (binomial sides meeting at least once). If only
/// one reading is viable it wins; if both are, they must induce the same
/// instances, and right-to-left is used.
pub fn resolve_orientation(
    relations: &[RawRelation],
    quiver: &Quiver,
) -> Result<RelationSet, Error> {
    let readings = [Orientation::RightToLeft, Orientation::LeftToRight];
    let mut viable = [true, true];
    let mut sets: [Vec<RelationInstance>; 2] = [Vec::new(), Vec::new()];
    for &relation in relations {
        let mut composes = [false, false];
        for (i, &reading) in readings.iter().enumerate() {
            if !viable[i] {
                continue;
            }
            match instantiate(relation, quiver, reading) {
                Ok(instances) if !instances.is_empty() => {
                    composes[i] = true;
                    sets[i].extend(instances);
                }
                _ => viable[i] = false,
            }
        }
        if !composes[0] && !composes[1] {
            return Err(Error::NonComposable(relation.to_string()));
        }
    }
    match (viable[0], viable[1]) {
        (true, false) => Ok(RelationSet {
            orientation: Orientation::RightToLeft,
            instances: sets[0].clone(),
        }),
        (false, true) => Ok(RelationSet {
            orientation: Orientation::LeftToRight,
            instances: sets[1].clone(),
        }),
        (false, false) => Err(Error::NonComposable(
            "no single reading makes every relation compose".into(),
        )),
        (true, true) => {
            let mut a: Vec<_> = sets[0].iter().cloned().map(canonical).collect();
            let mut b: Vec<_> = sets[1].iter().cloned().map(canonical).collect();
            a.sort();
            b.sort();
            if a == b {
                Ok(RelationSet {
                    orientation: Orientation::RightToLeft,
                    instances: sets[0].clone(),
                })
            } else {
                Err(Error::AmbiguousOrientation(
                    "both readings compose but induce different instances".into(),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Arrow, Vertex};
    use weightlab::Weight;

    fn vx(coords: &[i64]) -> Vertex {
        Vertex { weight: Weight::from_integers(coords), parity: false, trusted: true }
    }

    /// v0 <-> v1 <-> v2 with rightward arrows a and leftward arrows b.
    fn chain3() -> Quiver {
        Quiver {
            family: "test",
            vertices: vec![vx(&[1, 0, 0]), vx(&[2, 1, -2]), vx(&[3, 1, -3])],
            arrows: vec![
                Arrow { name: 'a', source: 0, target: 1 },
                Arrow { name: 'a', source: 1, target: 2 },
                Arrow { name: 'b', source: 1, target: 0 },
                Arrow { name: 'b', source: 2, target: 1 },
            ],
            involution: vec![0, 1, 2],
        }
    }

    #[test]
    fn symmetric_chain_relations_resolve_to_right_to_left() {
        let q = chain3();
        let rel = [RawRelation::Zero("aa"), RawRelation::Zero("bb"), RawRelation::Equal("ab", "ba")];
        let set = resolve_orientation(&rel, &q).unwrap();
        assert_eq!(set.orientation, Orientation::RightToLeft);
        // aa composes once, bb once, and ab = ba pairs only at the middle vertex.
        assert_eq!(set.instances.len(), 3);
        let pair = set.instances.iter().find(|i| i.rhs.is_some()).unwrap();
        assert_eq!((pair.source, pair.target), (1, 1));
    }

    #[test]
    fn one_sided_binomial_position_is_not_instantiated() {
        // On the chain, "ab" composes at vertices 1 and 2 but "ba" only at 0 and 1,
        // so the endpoint loops of the window carry no relation instance.
        let q = chain3();
        let set =
            resolve_orientation(&[RawRelation::Equal("ab", "ba")], &q).unwrap();
        assert_eq!(set.instances.len(), 1);
        let only = &set.instances[0];
        assert_eq!((only.source, only.target), (1, 1));
        assert_eq!(only.lhs.len(), 2);
        assert_eq!(only.rhs.as_ref().unwrap().len(), 2);
        assert_ne!(only.lhs, *only.rhs.as_ref().unwrap());
    }

    #[test]
    fn decisive_relation_fixes_the_reading() {
        // h is a loop at v0 and a points away from v0, so "ah" only composes
        // right-to-left while "ha" only composes left-to-right.
        let mut q = chain3();
        q.arrows.push(Arrow { name: 'h', source: 0, target: 0 });
        let set = resolve_orientation(&[RawRelation::Zero("ah")], &q).unwrap();
        assert_eq!(set.orientation, Orientation::RightToLeft);
        let set = resolve_orientation(&[RawRelation::Zero("ha")], &q).unwrap();
        assert_eq!(set.orientation, Orientation::LeftToRight);
    }

    #[test]
    fn unknown_name_is_non_composable() {
        let q = chain3();
        let err = resolve_orientation(&[RawRelation::Zero("az")], &q).unwrap_err();
        assert!(matches!(err, Error::NonComposable(_)));
    }

    #[test]
    fn conflicting_decisive_relations_are_rejected() {
        let mut q = chain3();
        q.arrows.push(Arrow { name: 'h', source: 0, target: 0 });
        let err =
            resolve_orientation(&[RawRelation::Zero("ah"), RawRelation::Zero("ha")], &q)
                .unwrap_err();
        assert!(matches!(err, Error::NonComposable(_)));
    }
}
