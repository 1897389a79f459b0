//! Weights in doubled coordinates and central character data.

use crate::Error;
use std::fmt;

/// A weight of gl-type rank n, stored as doubled coordinates so that
/// half-integral weights stay exact: entry i holds 2*lambda_i.
///
/// All coordinates must share one parity; even entries encode an integral
/// weight, odd entries a half-integral one. Mixed parities do not lie in the
/// weight lattice of the category and are rejected at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    /// Builds a weight from doubled coordinates, enforcing uniform parity.
    pub fn from_doubled(doubled: Vec<i64>) -> Result<Weight, Error> {
        if doubled.is_empty() {
            return Err(Error::EmptyWeight);
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|c| c.rem_euclid(2) != parity) {
            return Err(Error::MixedParity(doubled));
        }
        Ok(Weight { doubled })
    }

    /// Builds an integral weight from plain coordinates.
    pub fn from_integers(coords: &[i64]) -> Weight {
        Weight { doubled: coords.iter().map(|c| 2 * c).collect() }
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// True when every coordinate is an integer (all doubled entries even).
    pub fn is_integral(&self) -> bool {
        self.doubled[0] % 2 == 0
    }

    /// Dominance: weakly decreasing coordinates, and a repeated value only at 0.
    pub fn is_dominant(&self) -> bool {
        self.doubled.windows(2).all(|w| w[0] >= w[1] && (w[0] != w[1] || w[0] == 0))
    }

    /// Regular dominant: dominant with pairwise distinct coordinates.
    pub fn is_regular_dominant(&self) -> bool {
        self.doubled.windows(2).all(|w| w[0] > w[1])
    }

    /// The dominant representative of the symmetric-group orbit, when one
    /// exists (sorting descending; the orbit has none if a nonzero value
    /// repeats).
    pub fn sorted_descending(&self) -> Weight {
        let mut d = self.doubled.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        Weight { doubled: d }
    }

    pub fn count_zero(&self) -> usize {
        self.doubled.iter().filter(|&&c| c == 0).count()
    }

    pub fn count_nonzero(&self) -> usize {
        self.rank() - self.count_zero()
    }

    /// Whether 1/lambda_1 + ... + 1/lambda_n = 0; only defined with every
    /// coordinate nonzero. Uses the elementary symmetric function e_{n-1},
    /// which is proportional to the sum of reciprocals.
    pub fn reciprocal_sum_is_zero(&self) -> Result<bool, Error> {
        if self.count_zero() > 0 {
            return Err(Error::NotRegular(self.to_string()));
        }
        let n = self.rank();
        let mut total: i128 = 0;
        for skip in 0..n {
            let mut prod: i128 = 1;
            for (i, &c) in self.doubled.iter().enumerate() {
                if i != skip {
                    prod = prod.checked_mul(c as i128).ok_or(Error::Overflow("e_{n-1}"))?;
                }
            }
            total = total.checked_add(prod).ok_or(Error::Overflow("e_{n-1}"))?;
        }
        Ok(total == 0)
    }
}

impl fmt::Display for Weight {
    /// Renders as plain coordinates, halves shown as `k/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

/// The central character datum of a weight: the reduced signed multiset
/// wt(lambda) = sum of delta_{lambda_i}, where delta_{-a} = -delta_a and
/// delta_0 = 0. Two weights lie in the same block exactly when these agree.
///
/// Entries are stored as signed doubled values (+d for delta_{d/2}, -d for
/// -delta_{d/2}), sorted ascending, with cancelling pairs removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralCharacterWeight {
    entries: Vec<i64>,
}

impl CentralCharacterWeight {
    /// Signed doubled entries, sorted ascending.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// The number of surviving delta terms, the degree of typicality.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for CentralCharacterWeight {
    /// Renders as e.g. `{+1,-2}` in plain coordinates (`+3/2` for halves).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let sign = if e >= 0 { "+" } else { "-" };
            let a = e.abs();
            if a % 2 == 0 {
                write!(f, "{sign}{}", a / 2)?;
            } else {
                write!(f, "{sign}{a}/2")?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CentralCharacterWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wt{self}")
    }
}

/// Computes wt(lambda). Defined for every weight and invariant under
/// coordinate permutations.
pub fn central_weight(lambda: &Weight) -> CentralCharacterWeight {
    // Net coefficient of delta_{a} per absolute value a > 0.
    let mut net: std::collections::BTreeMap<i64, i64> = std::collections::BTreeMap::new();
    for &c in lambda.doubled() {
        if c != 0 {
            *net.entry(c.abs()).or_insert(0) += c.signum();
        }
    }
    let mut entries = Vec::new();
    for (a, k) in net {
        for _ in 0..k.abs() {
            entries.push(a * k.signum());
        }
    }
    entries.sort_unstable();
    CentralCharacterWeight { entries }
}
