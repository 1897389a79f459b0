//! Block classification: every dominant weight of rank 3 lands in one of six
//! block shapes, determined by its central character weight and, for sq, by
//! the vanishing of the reciprocal coordinate sum.

use crate::{central_weight, Algebra, CentralCharacterWeight, Error, Weight};
use std::fmt;

/// The six block shapes over rank 3.
///
/// `Principal` holds the trivial weight and the chain (a,0,-a); `Standard`
/// holds (1,0,0) and the chain (a,1,-a); `HalfStandard` is the half-integral
/// analogue. `Typical` blocks have a central character weight of size two
/// (exactly one vanishing coordinate) and `StronglyTypical` of size three.
/// `SqTypicalLoop` is the sq-only degeneration of a strongly typical block
/// where the reciprocal coordinate sum vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockClass {
    Principal,
    Standard,
    HalfStandard,
    Typical,
    StronglyTypical,
    SqTypicalLoop,
}

impl BlockClass {
    pub fn name(self) -> &'static str {
        match self {
            BlockClass::Principal => "principal",
            BlockClass::Standard => "standard",
            BlockClass::HalfStandard => "half-standard",
            BlockClass::Typical => "typical",
            BlockClass::StronglyTypical => "strongly-typical",
            BlockClass::SqTypicalLoop => "sq-typical-loop",
        }
    }
}

impl fmt::Display for BlockClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A block, identified by the algebra and the central character weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDescriptor {
    pub algebra: Algebra,
    pub wt: CentralCharacterWeight,
}

impl fmt::Display for BlockDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra.name(), self.wt)
    }
}

fn require_classifiable(lambda: &Weight) -> Result<(), Error> {
    if lambda.rank() != 3 {
        return Err(Error::WrongRank { expected: 3, found: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Classifies the block of a dominant rank-3 weight.
pub fn block_class(algebra: Algebra, lambda: &Weight) -> Result<BlockClass, Error> {
    require_classifiable(lambda)?;
    let wt = central_weight(lambda);
    Ok(match wt.len() {
        0 => BlockClass::Principal,
        1 => {
            if lambda.is_integral() {
                BlockClass::Standard
            } else {
                BlockClass::HalfStandard
            }
        }
        2 => BlockClass::Typical,
        3 => {
            if algebra == Algebra::Sq
                && lambda.count_zero() == 0
                && lambda.reciprocal_sum_is_zero()?
            {
                BlockClass::SqTypicalLoop
            } else {
                BlockClass::StronglyTypical
            }
        }
        n => unreachable!("central character weight of size {n} from a rank-3 weight"),
    })
}

/// The block descriptor of a dominant rank-3 weight.
pub fn block_descriptor(algebra: Algebra, lambda: &Weight) -> Result<BlockDescriptor, Error> {
    require_classifiable(lambda)?;
    Ok(BlockDescriptor { algebra, wt: central_weight(lambda) })
}

/// The class of the block itself, reconstructed from the descriptor.
pub fn descriptor_class(desc: &BlockDescriptor) -> Result<BlockClass, Error> {
    let vertices = block_vertices(desc, 1)?;
    block_class(desc.algebra, &vertices[0])
}

/// Enumerates the dominant weights of a block, smallest first.
///
/// For the infinite block shapes the chain is cut at `bound`: the principal
/// block yields (0,0,0) and (a,0,-a) for 1 <= a <= bound, the standard block
/// (1,0,0) and (a,1,-a) for 2 <= a <= bound, and the half-standard block its
/// chain of `bound` weights. Typical blocks yield their single weight.
///
/// Only the base blocks of the three chain shapes are materialized here; a
/// standard-class block around a higher central character weight is rejected
/// as unsupported rather than silently relabelled.
pub fn block_vertices(desc: &BlockDescriptor, bound: u32) -> Result<Vec<Weight>, Error> {
    let entries = desc.wt.entries();
    let unsupported = || Err(Error::UnsupportedBlock(desc.to_string()));
    let odd = entries.iter().filter(|e| e.rem_euclid(2) == 1).count();
    if odd > 0 && odd < entries.len() {
        return unsupported();
    }
    let half_integral = odd > 0;
    match entries.len() {
        0 => {
            let mut vs = vec![Weight::from_integers(&[0, 0, 0])];
            for a in 1..=bound as i64 {
                vs.push(Weight::from_integers(&[a, 0, -a]));
            }
            Ok(vs)
        }
        1 if !half_integral => {
            if entries != [2] {
                return unsupported();
            }
            let mut vs = vec![Weight::from_integers(&[1, 0, 0])];
            for a in 2..=bound as i64 {
                vs.push(Weight::from_integers(&[a, 1, -a]));
            }
            Ok(vs)
        }
        1 => {
            if entries != [3] {
                return unsupported();
            }
            let mut vs = vec![Weight::from_doubled(vec![3, 1, -1]).unwrap()];
            for k in 2..=bound as i64 {
                vs.push(Weight::from_doubled(vec![2 * k + 1, 3, -(2 * k + 1)]).unwrap());
            }
            Ok(vs)
        }
        2 | 3 => {
            let mut coords = entries.to_vec();
            while coords.len() < 3 {
                coords.push(0);
            }
            coords.sort_unstable_by(|a, b| b.cmp(a));
            let Ok(lambda) = Weight::from_doubled(coords) else {
                return unsupported();
            };
            if !lambda.is_dominant() || central_weight(&lambda) != desc.wt {
                return unsupported();
            }
            Ok(vec![lambda])
        }
        _ => unsupported(),
    }
}
