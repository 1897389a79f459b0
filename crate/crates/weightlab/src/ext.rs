//! First self-extensions of simple modules, the restriction/induction
//! behaviour between q and sq, the reduction map on standard-block weights,
//! and the extension dimensions of the trivial module.

use crate::{clifford_data, Algebra, Error, SimpleType, Weight};

/// Dimensions of the first extension groups of a simple by itself and by its
/// parity twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfExtensions {
    pub plain: u32,
    pub twisted: u32,
}

/// Computes dim Ext^1(L, L) and dim Ext^1(L, Pi L) for the simple of highest
/// weight `lambda`.
///
/// The twisted group is one-dimensional exactly when, for q, some coordinate
/// vanishes and, for sq, all coordinates are nonzero with vanishing
/// reciprocal sum; it vanishes otherwise. The plain group agrees with the
/// twisted one for type Q simples and vanishes for type M.
pub fn self_ext(algebra: Algebra, lambda: &Weight) -> Result<SelfExtensions, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let twisted = match algebra {
        Algebra::Q => u32::from(lambda.count_zero() > 0),
        Algebra::Sq => {
            u32::from(lambda.count_zero() == 0 && lambda.reciprocal_sum_is_zero()?)
        }
    };
    let plain = match clifford_data(algebra, lambda)?.simple_type {
        SimpleType::Q => twisted,
        SimpleType::M => 0,
    };
    Ok(SelfExtensions { plain, twisted })
}

/// How a simple behaves under restriction from q to sq, or under induction
/// from sq to q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictionType {
    /// Stays simple.
    Irreducible,
    /// Splits as L + Pi L.
    Split,
    /// A nonsplit extension of L by Pi L.
    Nonsplit,
}

impl RestrictionType {
    pub fn name(self) -> &'static str {
        match self {
            RestrictionType::Irreducible => "irreducible",
            RestrictionType::Split => "split",
            RestrictionType::Nonsplit => "nonsplit",
        }
    }
}

/// Classifies (restriction of the q-simple to sq, induction of the sq-simple
/// to q) at the weight `lambda`.
///
/// With a vanishing coordinate the restriction stays simple and the induced
/// module is a nonsplit self-extension. With all coordinates nonzero the
/// induced module is simple, and the restriction splits unless the
/// reciprocal coordinate sum vanishes, in which case it is a nonsplit
/// self-extension.
pub fn restrict_induce_class(
    lambda: &Weight,
) -> Result<(RestrictionType, RestrictionType), Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    if lambda.count_zero() > 0 {
        return Ok((RestrictionType::Irreducible, RestrictionType::Nonsplit));
    }
    let res = if lambda.reciprocal_sum_is_zero()? {
        RestrictionType::Nonsplit
    } else {
        RestrictionType::Split
    };
    Ok((res, RestrictionType::Irreducible))
}

/// The rank-lowering bijection on standard-block weights: (1,0,0) maps to
/// (0,0) and (a,1,-a) to (a-1,1-a). Any other shape is rejected.
pub fn standard_reduction(lambda: &Weight) -> Result<Weight, Error> {
    let bad = || Err(Error::NotStandardShape(lambda.to_string()));
    if lambda.rank() != 3 || !lambda.is_integral() {
        return bad();
    }
    let d = lambda.doubled();
    if d == [2, 0, 0] {
        return Ok(Weight::from_integers(&[0, 0]));
    }
    if d[1] == 2 && d[0] >= 4 && d[2] == -d[0] {
        let a = d[0] / 2;
        return Ok(Weight::from_integers(&[a - 1, 1 - a]));
    }
    bad()
}

/// dim Ext^i of the trivial module by itself (plain) or by its parity twist
/// (twisted) over q(n) or sq(n): the number of partitions of i into parts of
/// size at most n when the parity of i matches the twist, zero otherwise.
pub fn ext_trivial_dim(n: u32, i: u32, twisted: bool) -> u64 {
    if (i % 2 == 1) != twisted {
        return 0;
    }
    partitions_bounded(i as usize, n as usize)
}

/// Number of partitions of `i` into parts of size at most `n`.
fn partitions_bounded(i: usize, n: usize) -> u64 {
    let mut count = vec![0u64; i + 1];
    count[0] = 1;
    for part in 1..=n.min(i.max(1)) {
        for total in part..=i {
            count[total] += count[total - part];
        }
    }
    count[i]
}
