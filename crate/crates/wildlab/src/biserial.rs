//! Width-two and unique-continuation test for special biserial presentations.

use std::collections::HashSet;

use quiverlab::{Quiver, RelationSet};

use crate::describe_arrow;

/// The first condition a quiver presentation breaks, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    TooManyOut,
    TooManyIn,
    ForkedContinuation,
    ForkedPredecessor,
}

/// A concrete configuration breaking the special biserial conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiserialViolation {
    pub kind: ViolationKind,
    /// Vertex label or arrow description the violation is anchored at.
    pub subject: String,
    pub arrows: Vec<String>,
}

impl std::fmt::Display for BiserialViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = self.arrows.join("; ");
        match self.kind {
            ViolationKind::TooManyOut => {
                write!(f, "vertex {} emits {} arrows ({list})", self.subject, self.arrows.len())
            }
            ViolationKind::TooManyIn => {
                write!(f, "vertex {} receives {} arrows ({list})", self.subject, self.arrows.len())
            }
            ViolationKind::ForkedContinuation => {
                write!(f, "arrow {} has {} alive continuations ({list})", self.subject, self.arrows.len())
            }
            ViolationKind::ForkedPredecessor => {
                write!(f, "arrow {} has {} alive predecessors ({list})", self.subject, self.arrows.len())
            }
        }
    }
}

/// Outcome of the special biserial test.
#[derive(Debug, Clone)]
pub struct BiserialReport {
    pub special_biserial: bool,
    /// Identifications of paths set aside when forming the monomial ideal.
    pub binomial_instances: usize,
    pub violation: Option<BiserialViolation>,
}

/// Decides whether the presentation is special biserial: at most two arrows
/// in and out of every vertex, and along every arrow at most one way to
/// continue, and one to arrive, without entering the monomial ideal.
///
/// Only zero relations feed the ideal; identifications of parallel paths are
/// counted in the report but kill nothing.
pub fn is_special_biserial(quiver: &Quiver, relations: &RelationSet) -> BiserialReport {
    let binomial_instances =
        relations.instances.iter().filter(|r| r.rhs.is_some()).count();
    let forbidden: HashSet<&[usize]> = relations
        .instances
        .iter()
        .filter(|r| r.rhs.is_none() && r.lhs.len() <= 2)
        .map(|r| r.lhs.as_slice())
        .collect();
    let alive = |first: usize, second: usize| {
        !forbidden.contains([first].as_slice())
            && !forbidden.contains([second].as_slice())
            && !forbidden.contains([first, second].as_slice())
    };

    let mut violation = None;
    'scan: {
        for v in 0..quiver.vertices.len() {
            let out: Vec<String> =
                quiver.arrows_from(v).map(|(_, a)| describe_arrow(quiver, a)).collect();
            if out.len() > 2 {
                violation = Some(BiserialViolation {
                    kind: ViolationKind::TooManyOut,
                    subject: quiver.vertices[v].label(),
                    arrows: out,
                });
                break 'scan;
            }
            let into: Vec<String> =
                quiver.arrows_into(v).map(|(_, a)| describe_arrow(quiver, a)).collect();
            if into.len() > 2 {
                violation = Some(BiserialViolation {
                    kind: ViolationKind::TooManyIn,
                    subject: quiver.vertices[v].label(),
                    arrows: into,
                });
                break 'scan;
            }
        }
        for (i, arrow) in quiver.arrows.iter().enumerate() {
            let continuations: Vec<String> = quiver
                .arrows_from(arrow.target)
                .filter(|&(j, _)| alive(i, j))
                .map(|(_, a)| describe_arrow(quiver, a))
                .collect();
            if continuations.len() > 1 {
                violation = Some(BiserialViolation {
                    kind: ViolationKind::ForkedContinuation,
                    subject: describe_arrow(quiver, arrow),
                    arrows: continuations,
                });
                break 'scan;
            }
            let predecessors: Vec<String> = quiver
                .arrows_into(arrow.source)
                .filter(|&(j, _)| alive(j, i))
                .map(|(_, a)| describe_arrow(quiver, a))
                .collect();
            if predecessors.len() > 1 {
                violation = Some(BiserialViolation {
                    kind: ViolationKind::ForkedPredecessor,
                    subject: describe_arrow(quiver, arrow),
                    arrows: predecessors,
                });
                break 'scan;
            }
        }
    }

    BiserialReport {
        special_biserial: violation.is_none(),
        binomial_instances,
        violation,
    }
}
