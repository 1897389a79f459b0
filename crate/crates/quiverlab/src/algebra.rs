//! Path-algebra quotients: degreewise ideal closure, Hom dimensions, radical filtrations.

use crate::quiver::Quiver;
use crate::relations::RelationSet;
use crate::Error;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

/// A path recorded during enumeration, in execution order.
struct PathRec {
    src: u32,
    tgt: u32,
    arrows: Vec<u16>,
}

/// Union-find over path ids with signs and a zero marker per class. Every
/// relation generator is a difference of at most two paths with unit
/// coefficients, so Gaussian elimination over the exact rationals specializes
/// to this structure and all ranks stay exact.
struct Classes {
    parent: Vec<u32>,
    sign: Vec<i8>,
    size: Vec<u32>,
    zero: Vec<bool>,
    max_len: Vec<u16>,
}

impl Classes {
    fn new() -> Classes {
        Classes { parent: Vec::new(), sign: Vec::new(), size: Vec::new(), zero: Vec::new(), max_len: Vec::new() }
    }

    fn add(&mut self, len: u16) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.sign.push(1);
        self.size.push(1);
        self.zero.push(false);
        self.max_len.push(len);
        id
    }

    /// Returns (root, sign of x relative to the root), compressing the chain.
    fn find(&mut self, x: u32) -> (u32, i8) {
        let mut chain = Vec::new();
        let mut r = x as usize;
        while self.parent[r] as usize != r {
            chain.push(r);
            r = self.parent[r] as usize;
        }
        let mut acc = 1i8;
        for &node in chain.iter().rev() {
            acc *= self.sign[node];
            self.parent[node] = r as u32;
            self.sign[node] = acc;
        }
        let s = if x as usize == r { 1 } else { self.sign[x as usize] };
        (r as u32, s)
    }

    /// Imposes value(a) = value(b). A sign conflict forces the class to zero.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        if ra == rb {
            if sa != sb {
                self.zero[ra as usize] = true;
            }
            return;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] { (ra, rb) } else { (rb, ra) };
        self.parent[small as usize] = big;
        self.sign[small as usize] = sa * sb;
        self.size[big as usize] += self.size[small as usize];
        self.zero[big as usize] |= self.zero[small as usize];
        self.max_len[big as usize] = self.max_len[big as usize].max(self.max_len[small as usize]);
    }

    fn set_zero(&mut self, x: u32) {
        let (r, _) = self.find(x);
        self.zero[r as usize] = true;
    }

    fn is_zero(&mut self, x: u32) -> bool {
        let (r, _) = self.find(x);
        self.zero[r as usize]
    }
}

#[derive(Debug)]
struct HomBlock {
    dim: usize,
    /// Entry k: number of independent classes whose top representative has
    /// length k; the class contributes to radical layer k.
    layer_counts: Vec<usize>,
}

/// The capped quotient of the path algebra of a block quiver.
#[derive(Debug)]
pub struct PathAlgebra {
    pub quiver: Quiver,
    pub length_cap: usize,
    /// Least L with rad^L = 0, the nilpotency witness for cap stability.
    nilpotency: usize,
    blocks: BTreeMap<(usize, usize), HomBlock>,
}

/// Radical filtration of one projective: layer k maps source vertices to
/// multiplicities in rad^k P / rad^{k+1} P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalFiltration {
    pub vertex: usize,
    pub layers: Vec<BTreeMap<usize, usize>>,
}

impl RadicalFiltration {
    /// Layers as sorted label lists with multiplicities expanded.
    pub fn layer_labels(&self, quiver: &Quiver) -> Vec<Vec<String>> {
        self.layers
            .iter()
            .map(|layer| {
                let mut labels = Vec::new();
                for (&v, &mult) in layer {
                    for _ in 0..mult {
                        labels.push(quiver.vertices[v].label());
                    }
                }
                labels.sort();
                labels
            })
            .collect()
    }

    /// Total multiplicity of each source vertex across all layers.
    pub fn totals(&self) -> BTreeMap<usize, usize> {
        let mut totals = BTreeMap::new();
        for layer in &self.layers {
            for (&v, &mult) in layer {
                *totals.entry(v).or_insert(0) += mult;
            }
        }
        totals
    }
}

fn ends_with_forbidden(seq: &[u16], forbidden_by_last: &HashMap<u16, Vec<Vec<u16>>>) -> bool {
    let Some(&last) = seq.last() else { return false };
    let Some(candidates) = forbidden_by_last.get(&last) else { return false };
    candidates.iter().any(|f| seq.len() >= f.len() && seq[seq.len() - f.len()..] == f[..])
}

fn contains_forbidden(seq: &[u16], forbidden: &[Vec<u16>]) -> bool {
    forbidden.iter().any(|f| {
        !f.is_empty() && seq.len() >= f.len() && seq.windows(f.len()).any(|w| w == &f[..])
    })
}

/// Builds the capped quotient. The ideal is generated degreewise: every
/// composite prefix * relation * suffix up to an internal cap raised by the
/// maximum length difference across binomial relations, so mixed-length
/// relations act fully before truncation. Construction stops once an entire
/// path length level dies (every longer path then contains a dead prefix and
/// later generators relate provably-zero paths only); the witness level must
/// fall below the cap or the build reports instability.
pub fn build_algebra(
    quiver: Quiver,
    relations: &RelationSet,
    length_cap: usize,
) -> Result<PathAlgebra, Error> {
    let nv = quiver.vertices.len();
    let mut forbidden: Vec<Vec<u16>> = Vec::new();
    let mut binomials: Vec<(usize, usize, Vec<u16>, Vec<u16>)> = Vec::new();
    for inst in &relations.instances {
        let lhs: Vec<u16> = inst.lhs.iter().map(|&a| a as u16).collect();
        match &inst.rhs {
            None => forbidden.push(lhs),
            Some(rhs) => binomials.push((
                inst.source,
                inst.target,
                lhs,
                rhs.iter().map(|&a| a as u16).collect(),
            )),
        }
    }
    let maxdiff =
        binomials.iter().map(|(_, _, l, r)| l.len().abs_diff(r.len())).max().unwrap_or(0);
    let internal_cap = length_cap + maxdiff;
    let mut forbidden_by_last: HashMap<u16, Vec<Vec<u16>>> = HashMap::new();
    for f in &forbidden {
        if let Some(&last) = f.last() {
            forbidden_by_last.entry(last).or_default().push(f.clone());
        }
    }

    let mut paths: Vec<PathRec> = Vec::new();
    let mut ids: HashMap<(u32, Vec<u16>), u32> = HashMap::new();
    let mut by_level: Vec<Vec<u32>> = Vec::new();
    let mut out_by: Vec<Vec<Vec<u32>>> = vec![Vec::new(); nv];
    let mut in_by: Vec<Vec<Vec<u32>>> = vec![Vec::new(); nv];
    let mut classes = Classes::new();

    let add_path = |src: u32,
                        tgt: u32,
                        arrows: Vec<u16>,
                        level: usize,
                        paths: &mut Vec<PathRec>,
                        ids: &mut HashMap<(u32, Vec<u16>), u32>,
                        by_level: &mut Vec<Vec<u32>>,
                        out_by: &mut Vec<Vec<Vec<u32>>>,
                        in_by: &mut Vec<Vec<Vec<u32>>>,
                        classes: &mut Classes| {
        let id = classes.add(level as u16);
        ids.insert((src, arrows.clone()), id);
        paths.push(PathRec { src, tgt, arrows });
        while by_level.len() <= level {
            by_level.push(Vec::new());
        }
        by_level[level].push(id);
        for store in [&mut out_by[src as usize], &mut in_by[tgt as usize]] {
            while store.len() <= level {
                store.push(Vec::new());
            }
        }
        out_by[src as usize][level].push(id);
        in_by[tgt as usize][level].push(id);
    };

    for v in 0..nv {
        add_path(
            v as u32,
            v as u32,
            Vec::new(),
            0,
            &mut paths,
            &mut ids,
            &mut by_level,
            &mut out_by,
            &mut in_by,
            &mut classes,
        );
    }

    let mut witness: Option<usize> = None;
    for level in 1..=internal_cap {
        let previous: Vec<u32> = by_level.get(level - 1).cloned().unwrap_or_default();
        for pid in previous {
            let (tgt, base) = {
                let p = &paths[pid as usize];
                (p.tgt as usize, p.arrows.clone())
            };
            for (aid, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != tgt {
                    continue;
                }
                let mut arrows = base.clone();
                arrows.push(aid as u16);
                if ends_with_forbidden(&arrows, &forbidden_by_last) {
                    continue;
                }
                let src = paths[pid as usize].src;
                add_path(
                    src,
                    arrow.target as u32,
                    arrows,
                    level,
                    &mut paths,
                    &mut ids,
                    &mut by_level,
                    &mut out_by,
                    &mut in_by,
                    &mut classes,
                );
            }
        }
        // Apply every prefix * relation * suffix combination whose longer side
        // has exactly this total length.
        for (rel_src, rel_tgt, lhs, rhs) in &binomials {
            let widest = lhs.len().max(rhs.len());
            if level < widest {
                continue;
            }
            let budget = level - widest;
            for pre_len in 0..=budget {
                let post_len = budget - pre_len;
                let pres = in_by[*rel_src].get(pre_len).cloned().unwrap_or_default();
                let posts = out_by[*rel_tgt].get(post_len).cloned().unwrap_or_default();
                for &pre in &pres {
                    for &post in &posts {
                        let assemble = |side: &[u16]| -> Option<u32> {
                            let mut seq = paths[pre as usize].arrows.clone();
                            seq.extend_from_slice(side);
                            seq.extend_from_slice(&paths[post as usize].arrows);
                            if contains_forbidden(&seq, &forbidden) {
                                return None;
                            }
                            let src = paths[pre as usize].src;
                            Some(*ids.get(&(src, seq)).expect("alive composite must be enumerated"))
                        };
                        match (assemble(lhs), assemble(rhs)) {
                            (Some(a), Some(b)) => classes.union(a, b),
                            (Some(a), None) => classes.set_zero(a),
                            (None, Some(b)) => classes.set_zero(b),
                            (None, None) => {}
                        }
                    }
                }
            }
        }
        if witness.is_none() {
            for l in 1..=level {
                let dead = by_level
                    .get(l)
                    .map(|ids| ids.iter().all(|&id| classes.is_zero(id)))
                    .unwrap_or(true);
                if dead {
                    witness = Some(l);
                    break;
                }
            }
        }
        if let Some(w) = witness {
            if level >= w + maxdiff {
                break;
            }
        }
    }

    let witness = match witness {
        Some(w) if w <= length_cap.saturating_sub(1) => w,
        _ => {
            return Err(Error::Unstable { family: quiver.family, cap: length_cap });
        }
    };
    // Every path longer than the witness level contains a dead prefix.
    for (id, p) in paths.iter().enumerate() {
        if p.arrows.len() > witness {
            classes.set_zero(id as u32);
        }
    }

    let mut roots: BTreeMap<(usize, usize), HashSet<u32>> = BTreeMap::new();
    for (id, p) in paths.iter().enumerate() {
        let (root, _) = classes.find(id as u32);
        if classes.zero[root as usize] {
            continue;
        }
        roots.entry((p.src as usize, p.tgt as usize)).or_default().insert(root);
    }
    let mut blocks = BTreeMap::new();
    let mut max_layer = 0;
    for ((src, tgt), set) in roots {
        let mut layer_counts = Vec::new();
        for root in set {
            let k = classes.max_len[root as usize] as usize;
            while layer_counts.len() <= k {
                layer_counts.push(0);
            }
            layer_counts[k] += 1;
            max_layer = max_layer.max(k);
        }
        let dim = layer_counts.iter().sum();
        blocks.insert((src, tgt), HomBlock { dim, layer_counts });
    }

    Ok(PathAlgebra { quiver, length_cap, nilpotency: max_layer + 1, blocks })
}

impl PathAlgebra {
    /// dim Hom(P(source), P(target)): independent path classes source -> target.
    pub fn dim_hom(&self, source: usize, target: usize) -> usize {
        self.blocks.get(&(source, target)).map_or(0, |b| b.dim)
    }

    /// Least L with rad^L = 0.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// Nonzero Hom dimensions over pairs of trusted vertices.
    pub fn interior_hom_dims(&self) -> BTreeMap<(usize, usize), usize> {
        self.blocks
            .iter()
            .filter(|((s, t), b)| {
                b.dim > 0 && self.quiver.vertices[*s].trusted && self.quiver.vertices[*t].trusted
            })
            .map(|(&k, b)| (k, b.dim))
            .collect()
    }

    pub fn radical_filtration(&self, vertex: usize) -> RadicalFiltration {
        let mut layers: Vec<BTreeMap<usize, usize>> = Vec::new();
        for ((u, w), block) in &self.blocks {
            if *w != vertex {
                continue;
            }
            for (k, &count) in block.layer_counts.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                while layers.len() <= k {
                    layers.push(BTreeMap::new());
                }
                *layers[k].entry(*u).or_insert(0) += count;
            }
        }
        RadicalFiltration { vertex, layers }
    }

    /// Hom dimensions and radical layers over trusted vertices, for artifacts.
    pub fn dump_json(&self) -> Value {
        let quiver = &self.quiver;
        let hom: Vec<Value> = self
            .interior_hom_dims()
            .into_iter()
            .map(|((s, t), dim)| {
                json!({
                    "source": quiver.vertices[s].label(),
                    "target": quiver.vertices[t].label(),
                    "dim": dim,
                })
            })
            .collect();
        let filtrations: Vec<Value> = (0..quiver.vertices.len())
            .filter(|&v| quiver.vertices[v].trusted)
            .map(|v| {
                let layers = self.radical_filtration(v).layer_labels(quiver);
                json!({ "vertex": quiver.vertices[v].label(), "layers": layers })
            })
            .collect();
        json!({
            "family": quiver.family,
            "length_cap": self.length_cap,
            "nilpotency": self.nilpotency,
            "hom": hom,
            "filtrations": filtrations,
        })
    }

    /// The radical filtration of one projective as a layered DOT digraph.
    /// Edges join members of consecutive layers wherever the quiver has an
    /// arrow between the underlying simples.
    pub fn filtration_dot(&self, vertex: usize) -> String {
        let filt = self.radical_filtration(vertex);
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"P({})\" {{", self.quiver.vertices[vertex].label());
        let _ = writeln!(out, "  edge [dir=none];");
        let mut node_ids: Vec<Vec<(String, usize)>> = Vec::new();
        for (k, layer) in filt.layers.iter().enumerate() {
            let mut row = Vec::new();
            let _ = writeln!(out, "  {{ rank=same;");
            let mut i = 0;
            for (&v, &mult) in layer {
                for _ in 0..mult {
                    let id = format!("n{k}_{i}");
                    let _ = writeln!(out, "    {id} [label=\"{}\"];", self.quiver.vertices[v].label());
                    row.push((id, v));
                    i += 1;
                }
            }
            let _ = writeln!(out, "  }}");
            node_ids.push(row);
        }
        for k in 1..node_ids.len() {
            let (upper, lower) = (&node_ids[k - 1], &node_ids[k]);
            for (uid, u) in upper {
                for (wid, w) in lower {
                    if self.quiver.arrow_between(*w, *u).is_some()
                        || self.quiver.arrow_between(*u, *w).is_some()
                    {
                        let _ = writeln!(out, "  {uid} -> {wid};");
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Arrow, Vertex};
    use crate::relations::{resolve_orientation, RawRelation};
    use weightlab::Weight;

    fn vx(coords: &[i64]) -> Vertex {
        Vertex { weight: Weight::from_integers(coords), parity: false, trusted: true }
    }

    fn build(quiver: Quiver, raw: &[RawRelation], cap: usize) -> PathAlgebra {
        let rels = resolve_orientation(raw, &quiver).unwrap();
        build_algebra(quiver, &rels, cap).unwrap()
    }

    fn two_cycle(extra_loop: bool) -> Quiver {
        let mut arrows = vec![
            Arrow { name: 'a', source: 0, target: 1 },
            Arrow { name: 'b', source: 1, target: 0 },
        ];
        if extra_loop {
            arrows.push(Arrow { name: 'h', source: 0, target: 0 });
        }
        Quiver {
            family: "test",
            vertices: vec![vx(&[2, 1, 0]), vx(&[2, 1, 0])],
            arrows,
            involution: vec![1, 0],
        }
    }

    #[test]
    fn monomial_two_cycle_has_simple_tops() {
        let alg = build(two_cycle(false), &[RawRelation::Zero("ab"), RawRelation::Zero("ba")], 6);
        assert_eq!(alg.dim_hom(0, 0), 1);
        assert_eq!(alg.dim_hom(1, 1), 1);
        assert_eq!(alg.dim_hom(0, 1), 1);
        assert_eq!(alg.dim_hom(1, 0), 1);
        assert_eq!(alg.nilpotency(), 2);
        let filt = alg.radical_filtration(0);
        assert_eq!(filt.layers.len(), 2);
        assert_eq!(filt.layers[0], BTreeMap::from([(0, 1)]));
        assert_eq!(filt.layers[1], BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn loop_with_square_zero_gives_two_classes() {
        let quiver = Quiver {
            family: "test",
            vertices: vec![vx(&[2, 1, -1])],
            arrows: vec![Arrow { name: 'h', source: 0, target: 0 }],
            involution: vec![0],
        };
        let alg = build(quiver, &[RawRelation::Zero("hh")], 6);
        assert_eq!(alg.dim_hom(0, 0), 2);
        let filt = alg.radical_filtration(0);
        assert_eq!(filt.layer_labels(&alg.quiver), vec![vec!["L(2,1,-1)"], vec!["L(2,1,-1)"]]);
    }

    /// Three-vertex window of a doubly linked chain with the zig-zag
    /// relations. The one-sided loop at each window end stays a free class:
    /// binomial relations only act where both sides compose.
    #[test]
    fn one_sided_chain_loops_survive() {
        let quiver = Quiver {
            family: "test",
            vertices: vec![vx(&[1, 0, 0]), vx(&[2, 1, -2]), vx(&[3, 1, -3])],
            arrows: vec![
                Arrow { name: 'a', source: 0, target: 1 },
                Arrow { name: 'a', source: 1, target: 2 },
                Arrow { name: 'b', source: 1, target: 0 },
                Arrow { name: 'b', source: 2, target: 1 },
            ],
            involution: vec![0, 1, 2],
        };
        let raw =
            [RawRelation::Zero("aa"), RawRelation::Zero("bb"), RawRelation::Equal("ab", "ba")];
        let alg = build(quiver, &raw, 6);
        // End(P(v0)) keeps the one-sided loop b a; the middle loop classes merge.
        assert_eq!(alg.dim_hom(0, 0), 2);
        assert_eq!(alg.dim_hom(1, 1), 2);
        assert_eq!(alg.dim_hom(2, 2), 2);
        assert_eq!(alg.dim_hom(0, 1), 1);
        assert_eq!(alg.dim_hom(1, 0), 1);
        assert_eq!(alg.dim_hom(0, 2), 0);
        assert_eq!(alg.dim_hom(2, 0), 0);
        let filt = alg.radical_filtration(1);
        assert_eq!(filt.layers.len(), 3);
        assert_eq!(filt.layers[1], BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(filt.layers[2], BTreeMap::from([(1, 1)]));
    }

    /// A binomial identifying a length-2 loop with a length-3 path through a
    /// square-zero loop: the short path must sink to radical layer 3.
    #[test]
    fn mixed_length_relation_sinks_the_short_path() {
        let quiver = Quiver {
            family: "test",
            vertices: vec![vx(&[1, 0, 0]), vx(&[2, 1, -2]), vx(&[3, 1, -3])],
            arrows: vec![
                Arrow { name: 'h', source: 0, target: 0 },
                Arrow { name: 'a', source: 0, target: 1 },
                Arrow { name: 'b', source: 1, target: 0 },
                Arrow { name: 'x', source: 1, target: 2 },
                Arrow { name: 'y', source: 2, target: 1 },
            ],
            involution: vec![0, 1, 2],
        };
        let raw = [
            RawRelation::Zero("hh"),
            RawRelation::Zero("ab"),
            RawRelation::Zero("xa"),
            RawRelation::Zero("by"),
            RawRelation::Equal("bah", "hba"),
            RawRelation::Equal("yx", "ahb"),
        ];
        let alg = build(quiver, &raw, 8);
        // End(P(v1)) = {1, yx = ahb}: the loop through v2 equals the loop through v0.
        assert_eq!(alg.dim_hom(1, 1), 2);
        let filt = alg.radical_filtration(1);
        let sizes: Vec<usize> =
            filt.layers.iter().map(|l| l.values().sum()).collect();
        assert_eq!(sizes, vec![1, 2, 1, 1]);
        // Layer 2 holds only the path a h from v0; both length-2 loops are gone
        // (ab = 0, and yx sank to layer 3 as ahb).
        assert_eq!(filt.layers[2], BTreeMap::from([(0, 1)]));
        assert_eq!(filt.layers[3], BTreeMap::from([(1, 1)]));
        // End(P(v0)) = {1, h, ba, bah = hba}.
        assert_eq!(alg.dim_hom(0, 0), 4);
    }

    #[test]
    fn too_small_cap_reports_instability() {
        let err_quiver = Quiver {
            family: "test",
            vertices: vec![vx(&[1, 0, 0])],
            arrows: vec![Arrow { name: 'h', source: 0, target: 0 }],
            involution: vec![0],
        };
        let rels = resolve_orientation(&[RawRelation::Zero("hh")], &err_quiver).unwrap();
        let err = build_algebra(err_quiver, &rels, 2).unwrap_err();
        assert!(matches!(err, Error::Unstable { .. }));
    }

    #[test]
    fn json_dump_carries_hom_and_layers() {
        let alg = build(two_cycle(false), &[RawRelation::Zero("ab"), RawRelation::Zero("ba")], 6);
        let dump = alg.dump_json();
        assert_eq!(dump["family"], "test");
        assert_eq!(dump["hom"].as_array().unwrap().len(), 4);
        assert_eq!(dump["filtrations"][0]["layers"][0][0], "L(2,1,0)");
    }
}
