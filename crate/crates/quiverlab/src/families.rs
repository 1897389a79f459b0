//! The ten block quiver families: a registry of strategies, one per block
//! shape of q(3) and sq(3), each building its truncated quiver and relations.

use crate::algebra::{build_algebra, PathAlgebra};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::relations::{instantiate, resolve_orientation, RawRelation, RelationSet};
use crate::Error;
use weightlab::{
    block_descriptor, block_vertices, descriptor_class, Algebra, BlockClass, BlockDescriptor,
    Weight,
};

/// Orientation of relation words is resolved on a window at least this wide,
/// where every relation word composes; the resolved reading is then
/// instantiated on the requested window, which may be too narrow for some
/// words to compose at all.
pub const PROBE_CUTOFF: usize = 6;

/// One block shape: knows its truncated quiver and its relation words.
pub trait BlockFamily: Sync {
    fn name(&self) -> &'static str;
    fn algebra(&self) -> Algebra;
    fn classes(&self) -> &'static [BlockClass];
    fn min_cutoff(&self) -> usize;
    /// A representative dominant weight whose block has this shape.
    fn canonical_weight(&self) -> Weight;
    fn relations(&self) -> &'static [RawRelation];
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error>;
}

fn guard(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<(), Error> {
    if cutoff < family.min_cutoff() {
        return Err(Error::CutoffTooSmall {
            family: family.name(),
            min: family.min_cutoff(),
            got: cutoff,
        });
    }
    let class = descriptor_class(descriptor)?;
    if descriptor.algebra != family.algebra() || !family.classes().contains(&class) {
        return Err(Error::UnknownFamily(format!(
            "descriptor {descriptor} is {class}, not served by family {}",
            family.name()
        )));
    }
    Ok(())
}

fn singleton_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    loop_name: Option<char>,
) -> Result<Quiver, Error> {
    let mut vs = block_vertices(descriptor, 1)?;
    let weight = vs.remove(0);
    let arrows = match loop_name {
        Some(name) => vec![Arrow { name, source: 0, target: 0 }],
        None => Vec::new(),
    };
    Ok(Quiver {
        family: family.name(),
        vertices: vec![Vertex { weight, parity: false, trusted: true }],
        arrows,
        involution: vec![0],
    })
}

/// One simple and its parity shift, linked both ways with both composites zero.
fn doubled_singleton_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
) -> Result<Quiver, Error> {
    let mut vs = block_vertices(descriptor, 1)?;
    let weight = vs.remove(0);
    Ok(Quiver {
        family: family.name(),
        vertices: vec![
            Vertex { weight: weight.clone(), parity: false, trusted: true },
            Vertex { weight, parity: true, trusted: true },
        ],
        arrows: vec![
            Arrow { name: 'a', source: 0, target: 1 },
            Arrow { name: 'b', source: 1, target: 0 },
        ],
        involution: vec![1, 0],
    })
}

/// Half-line of the half-integral chain block, cut after `cutoff` vertices.
fn half_chain_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<Quiver, Error> {
    let vs = block_vertices(descriptor, cutoff as u32)?;
    let vertices: Vec<Vertex> = vs
        .into_iter()
        .enumerate()
        .map(|(i, weight)| Vertex { weight, parity: false, trusted: i + 3 <= cutoff })
        .collect();
    let mut arrows = Vec::new();
    for i in 0..cutoff - 1 {
        arrows.push(Arrow { name: 'a', source: i, target: i + 1 });
        arrows.push(Arrow { name: 'b', source: i + 1, target: i });
    }
    Ok(Quiver { family: family.name(), vertices, arrows, involution: (0..cutoff).collect() })
}

/// Full line through the integral chain block: positions -cutoff..cutoff, the
/// negative side carrying the parity shifts of the positive side, mirrored by
/// the involution.
fn mirrored_chain_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<Quiver, Error> {
    let vs = block_vertices(descriptor, (cutoff + 1) as u32)?;
    let mut vertices = Vec::new();
    for pos in -(cutoff as i64)..=(cutoff as i64) {
        let k = pos.unsigned_abs() as usize;
        vertices.push(Vertex { weight: vs[k].clone(), parity: pos < 0, trusted: k + 2 <= cutoff });
    }
    let n = vertices.len();
    let mut arrows = Vec::new();
    for i in 0..n - 1 {
        arrows.push(Arrow { name: 'a', source: i, target: i + 1 });
        arrows.push(Arrow { name: 'b', source: i + 1, target: i });
    }
    Ok(Quiver {
        family: family.name(),
        vertices,
        arrows,
        involution: (0..n).map(|i| n - 1 - i).collect(),
    })
}

/// Half-line with a loop at the head vertex and a junction after it.
fn junction_chain_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<Quiver, Error> {
    let vs = block_vertices(descriptor, cutoff as u32)?;
    let vertices: Vec<Vertex> = vs
        .into_iter()
        .enumerate()
        .map(|(i, weight)| Vertex { weight, parity: false, trusted: i + 3 <= cutoff })
        .collect();
    let mut arrows = vec![
        Arrow { name: 'h', source: 0, target: 0 },
        Arrow { name: 'a', source: 0, target: 1 },
        Arrow { name: 'b', source: 1, target: 0 },
    ];
    for i in 1..cutoff - 1 {
        arrows.push(Arrow { name: 'x', source: i, target: i + 1 });
        arrows.push(Arrow { name: 'y', source: i + 1, target: i });
    }
    Ok(Quiver { family: family.name(), vertices, arrows, involution: (0..cutoff).collect() })
}

/// Two-row ladder of the principal block. Column 1 carries L(1,0,-1), column
/// 2 the trivial weight, column k >= 3 carries L(k-1,0,-(k-1)); the bottom row
/// is the parity shift of the top row and the involution flips the rows.
/// With `theta` set, vertical arrows are added in both directions everywhere.
fn ladder_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
    theta: bool,
) -> Result<Quiver, Error> {
    let vs = block_vertices(descriptor, (cutoff - 1) as u32)?;
    let top = |col: usize| 2 * (col - 1);
    let bot = |col: usize| 2 * (col - 1) + 1;
    let mut vertices = Vec::new();
    for col in 1..=cutoff {
        let weight = match col {
            1 => vs[1].clone(),
            2 => vs[0].clone(),
            k => vs[k - 1].clone(),
        };
        let trusted = col + 2 <= cutoff;
        vertices.push(Vertex { weight: weight.clone(), parity: false, trusted });
        vertices.push(Vertex { weight, parity: true, trusted });
    }
    let mut arrows = Vec::new();
    type ColIndex = fn(usize) -> usize;
    let rows: [(ColIndex, ColIndex); 2] =
        [(|c| 2 * (c - 1), |c| 2 * (c - 1) + 1), (|c| 2 * (c - 1) + 1, |c| 2 * (c - 1))];
    for (same, cross) in rows {
        arrows.push(Arrow { name: 'a', source: same(1), target: same(2) });
        arrows.push(Arrow { name: 'c', source: same(2), target: cross(1) });
        arrows.push(Arrow { name: 'b', source: same(2), target: same(3) });
        arrows.push(Arrow { name: 'd', source: same(3), target: cross(2) });
        for col in 3..cutoff {
            arrows.push(Arrow { name: 'x', source: same(col), target: same(col + 1) });
            arrows.push(Arrow { name: 'y', source: same(col + 1), target: same(col) });
        }
    }
    if theta {
        for col in 1..=cutoff {
            arrows.push(Arrow { name: 'θ', source: top(col), target: bot(col) });
            arrows.push(Arrow { name: 'θ', source: bot(col), target: top(col) });
        }
    }
    let mut involution = Vec::with_capacity(2 * cutoff);
    for col in 1..=cutoff {
        involution.push(bot(col));
        involution.push(top(col));
    }
    Ok(Quiver { family: family.name(), vertices, arrows, involution })
}

const CHAIN_RELATIONS: [RawRelation; 3] =
    [RawRelation::Zero("aa"), RawRelation::Zero("bb"), RawRelation::Equal("ab", "ba")];

const LOOP_RELATIONS: [RawRelation; 1] = [RawRelation::Zero("hh")];

const DOUBLED_POINT_RELATIONS: [RawRelation; 2] =
    [RawRelation::Zero("ab"), RawRelation::Zero("ba")];

const JUNCTION_CHAIN_RELATIONS: [RawRelation; 9] = [
    RawRelation::Zero("hh"),
    RawRelation::Zero("ab"),
    RawRelation::Zero("xa"),
    RawRelation::Zero("by"),
    RawRelation::Zero("xx"),
    RawRelation::Zero("yy"),
    RawRelation::Equal("xy", "yx"),
    RawRelation::Equal("bah", "hba"),
    RawRelation::Equal("yx", "ahb"),
];

const LADDER_RELATIONS: [RawRelation; 9] = [
    RawRelation::Zero("xx"),
    RawRelation::Zero("yy"),
    RawRelation::Zero("xb"),
    RawRelation::Zero("dy"),
    RawRelation::Zero("bd"),
    RawRelation::Zero("ca"),
    RawRelation::Equal("xy", "yx"),
    RawRelation::Equal("yx", "bacd"),
    RawRelation::Equal("dbac", "acdb"),
];

const DOUBLED_LADDER_RELATIONS: [RawRelation; 16] = [
    RawRelation::Zero("xx"),
    RawRelation::Zero("yy"),
    RawRelation::Zero("xb"),
    RawRelation::Zero("dy"),
    RawRelation::Zero("bd"),
    RawRelation::Zero("ca"),
    RawRelation::Equal("xy", "yx"),
    RawRelation::Equal("yx", "bacd"),
    RawRelation::Equal("dbac", "acdb"),
    RawRelation::Zero("θθ"),
    RawRelation::Equal("θa", "aθ"),
    RawRelation::Equal("θb", "bθ"),
    RawRelation::Equal("θc", "cθ"),
    RawRelation::Equal("θd", "dθ"),
    RawRelation::Equal("θx", "xθ"),
    RawRelation::Equal("θy", "yθ"),
];

struct SqTypical;
struct SqTypicalLoop;
struct SqHalfStandard;
struct SqStandard;
struct SqPrincipal;
struct QStronglyTypical;
struct QTypical;
struct QHalfStandard;
struct QStandard;
struct QPrincipal;

impl BlockFamily for SqTypical {
    fn name(&self) -> &'static str {
        "sq-typical"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Sq
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Typical, BlockClass::StronglyTypical]
    }
    fn min_cutoff(&self) -> usize {
        1
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[2, 1, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &[]
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        singleton_quiver(self, descriptor, None)
    }
}

impl BlockFamily for SqTypicalLoop {
    fn name(&self) -> &'static str {
        "sq-typical-loop"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Sq
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::SqTypicalLoop]
    }
    fn min_cutoff(&self) -> usize {
        1
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[6, 3, -2])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &LOOP_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        singleton_quiver(self, descriptor, Some('h'))
    }
}

impl BlockFamily for SqHalfStandard {
    fn name(&self) -> &'static str {
        "sq-half-standard"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Sq
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::HalfStandard]
    }
    fn min_cutoff(&self) -> usize {
        3
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_doubled(vec![3, 1, -1]).unwrap()
    }
    fn relations(&self) -> &'static [RawRelation] {
        &CHAIN_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        half_chain_quiver(self, descriptor, cutoff)
    }
}

impl BlockFamily for SqStandard {
    fn name(&self) -> &'static str {
        "sq-standard"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Sq
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Standard]
    }
    fn min_cutoff(&self) -> usize {
        2
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[1, 0, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &CHAIN_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        mirrored_chain_quiver(self, descriptor, cutoff)
    }
}

impl BlockFamily for SqPrincipal {
    fn name(&self) -> &'static str {
        "sq-principal"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Sq
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Principal]
    }
    fn min_cutoff(&self) -> usize {
        4
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[0, 0, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &LADDER_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        ladder_quiver(self, descriptor, cutoff, false)
    }
}

impl BlockFamily for QStronglyTypical {
    fn name(&self) -> &'static str {
        "q-strongly-typical"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Q
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::StronglyTypical]
    }
    fn min_cutoff(&self) -> usize {
        1
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[3, 2, 1])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &[]
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        singleton_quiver(self, descriptor, None)
    }
}

impl BlockFamily for QTypical {
    fn name(&self) -> &'static str {
        "q-typical"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Q
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Typical]
    }
    fn min_cutoff(&self) -> usize {
        1
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[2, 1, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &DOUBLED_POINT_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        doubled_singleton_quiver(self, descriptor)
    }
}

impl BlockFamily for QHalfStandard {
    fn name(&self) -> &'static str {
        "q-half-standard"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Q
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::HalfStandard]
    }
    fn min_cutoff(&self) -> usize {
        3
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_doubled(vec![3, 1, -1]).unwrap()
    }
    fn relations(&self) -> &'static [RawRelation] {
        &CHAIN_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        half_chain_quiver(self, descriptor, cutoff)
    }
}

impl BlockFamily for QStandard {
    fn name(&self) -> &'static str {
        "q-standard"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Q
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Standard]
    }
    fn min_cutoff(&self) -> usize {
        3
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[1, 0, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &JUNCTION_CHAIN_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        junction_chain_quiver(self, descriptor, cutoff)
    }
}

impl BlockFamily for QPrincipal {
    fn name(&self) -> &'static str {
        "q-principal"
    }
    fn algebra(&self) -> Algebra {
        Algebra::Q
    }
    fn classes(&self) -> &'static [BlockClass] {
        &[BlockClass::Principal]
    }
    fn min_cutoff(&self) -> usize {
        4
    }
    fn canonical_weight(&self) -> Weight {
        Weight::from_integers(&[0, 0, 0])
    }
    fn relations(&self) -> &'static [RawRelation] {
        &DOUBLED_LADDER_RELATIONS
    }
    fn quiver(&self, descriptor: &BlockDescriptor, cutoff: usize) -> Result<Quiver, Error> {
        guard(self, descriptor, cutoff)?;
        ladder_quiver(self, descriptor, cutoff, true)
    }
}

static FAMILIES: [&dyn BlockFamily; 10] = [
    &SqTypical,
    &SqTypicalLoop,
    &SqHalfStandard,
    &SqStandard,
    &SqPrincipal,
    &QStronglyTypical,
    &QTypical,
    &QHalfStandard,
    &QStandard,
    &QPrincipal,
];

pub fn families() -> &'static [&'static dyn BlockFamily] {
    &FAMILIES
}

pub fn family_by_name(name: &str) -> Result<&'static dyn BlockFamily, Error> {
    FAMILIES
        .iter()
        .copied()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

pub fn family_for(algebra: Algebra, class: BlockClass) -> Result<&'static dyn BlockFamily, Error> {
    FAMILIES
        .iter()
        .copied()
        .find(|f| f.algebra() == algebra && f.classes().contains(&class))
        .ok_or_else(|| Error::UnknownFamily(format!("{} {}", algebra.name(), class)))
}

/// The representative block descriptor a family describes.
pub fn canonical_descriptor(family: &dyn BlockFamily) -> Result<BlockDescriptor, Error> {
    Ok(block_descriptor(family.algebra(), &family.canonical_weight())?)
}

/// Builds the truncated quiver of one family together with its instantiated
/// relations, resolving the reading convention on a probe window first.
pub fn family_quiver(
    family: &dyn BlockFamily,
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<(Quiver, RelationSet), Error> {
    if cutoff < family.min_cutoff() {
        return Err(Error::CutoffTooSmall {
            family: family.name(),
            min: family.min_cutoff(),
            got: cutoff,
        });
    }
    let probe_cutoff = cutoff.max(PROBE_CUTOFF);
    let probe = family.quiver(descriptor, probe_cutoff)?;
    probe.check_involution()?;
    let resolved = resolve_orientation(family.relations(), &probe)?;
    let quiver = family.quiver(descriptor, cutoff)?;
    if quiver.vertices.len() == probe.vertices.len() {
        return Ok((probe, resolved));
    }
    quiver.check_involution()?;
    let mut instances = Vec::new();
    for &relation in family.relations() {
        instances.extend(instantiate(relation, &quiver, resolved.orientation)?);
    }
    Ok((quiver, RelationSet { orientation: resolved.orientation, instances }))
}

/// Quiver and relations for the block of `descriptor`, dispatched by class.
pub fn block_quiver(
    descriptor: &BlockDescriptor,
    cutoff: usize,
) -> Result<(Quiver, RelationSet), Error> {
    let class = descriptor_class(descriptor)?;
    let family = family_for(descriptor.algebra, class)?;
    family_quiver(family, descriptor, cutoff)
}

/// The capped path-algebra quotient for the block of `descriptor`.
pub fn block_algebra(
    descriptor: &BlockDescriptor,
    cutoff: usize,
    length_cap: usize,
) -> Result<PathAlgebra, Error> {
    let (quiver, relations) = block_quiver(descriptor, cutoff)?;
    build_algebra(quiver, &relations, length_cap)
}
