//! Quiver data model: weighted vertices, named arrows, parity involution, DOT output.

use crate::Error;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use weightlab::Weight;

/// A vertex of a block quiver: a simple module, possibly a parity-shifted copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub weight: Weight,
    /// True for the parity-shifted copy of the simple with this weight.
    pub parity: bool,
    /// False near the truncation edge of an infinite block shape; dimensions
    /// and filtrations at untrusted vertices carry truncation artifacts.
    pub trusted: bool,
}

impl Vertex {
    pub fn label(&self) -> String {
        if self.parity {
            format!("\u{03a0}L({})", self.weight)
        } else {
            format!("L({})", self.weight)
        }
    }
}

/// A named arrow. Names are single characters and may be reused by several
/// arrows of the same family (chain tails, parity-mirror copies).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub name: char,
    pub source: usize,
    pub target: usize,
}

/// A finite window of a block quiver.
#[derive(Debug, Clone)]
pub struct Quiver {
    /// Registry name of the block family this window was cut from.
    pub family: &'static str,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    /// The parity involution as a vertex bijection (identity on self-dual vertices).
    pub involution: Vec<usize>,
}

impl Quiver {
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v)
    }

    /// At most one arrow joins any ordered vertex pair in every block family;
    /// this is what makes the involution's action on arrows well defined.
    pub fn arrow_between(&self, source: usize, target: usize) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.source == source && a.target == target)
    }

    /// Checks that `involution` is an involutive vertex bijection carrying the
    /// arrow set to itself and inducing an involution on arrow names.
    pub fn check_involution(&self) -> Result<(), Error> {
        let n = self.vertices.len();
        if self.involution.len() != n {
            return Err(Error::BadInvolution("length mismatch".into()));
        }
        for (v, &w) in self.involution.iter().enumerate() {
            if w >= n || self.involution[w] != v {
                return Err(Error::BadInvolution(format!("not involutive at vertex {v}")));
            }
            if self.vertices[v].weight != self.vertices[w].weight {
                return Err(Error::BadInvolution(format!(
                    "vertex {v} and its image carry different weights"
                )));
            }
        }
        let mut name_map: BTreeMap<char, char> = BTreeMap::new();
        for arrow in &self.arrows {
            let (s, t) = (self.involution[arrow.source], self.involution[arrow.target]);
            let Some(image) = self.arrow_between(s, t) else {
                return Err(Error::BadInvolution(format!(
                    "arrow {} {}->{} has no image arrow",
                    arrow.name, arrow.source, arrow.target
                )));
            };
            let prev = name_map.insert(arrow.name, image.name);
            if prev.is_some_and(|p| p != image.name) {
                return Err(Error::BadInvolution(format!(
                    "inconsistent name image for arrow {}",
                    arrow.name
                )));
            }
        }
        for (&a, &b) in &name_map {
            if name_map.get(&b) != Some(&a) {
                return Err(Error::BadInvolution(format!(
                    "name map {a}->{b} is not an involution"
                )));
            }
        }
        Ok(())
    }

    /// Emits the quiver as a GraphViz digraph, vertices labeled by weight and
    /// parity, arrows by name.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.family);
        let _ = writeln!(out, "  rankdir=LR;");
        for (i, v) in self.vertices.iter().enumerate() {
            let style = if v.trusted { "" } else { ", style=dashed" };
            let _ = writeln!(out, "  v{i} [label=\"{}\"{}];", v.label(), style);
        }
        for a in &self.arrows {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", a.source, a.target, a.name);
        }
        out.push_str("}\n");
        out
    }
}
