//! Sparse formal characters over Z[eps]/(eps^2 = 1) with truncation
//! bookkeeping.
//!
//! Exponents are doubled weight coordinates. Truncation is tracked per
//! partial-sum functional h_i(key) = key_1 + ... + key_i (i < rank): a
//! character with floor f_i holds exactly the terms of the underlying series
//! whose functionals all satisfy h_i >= f_i, and nothing else. `leads` is a
//! certified upper bound for each functional over the full (untruncated)
//! support; products use it to push floors through correctly.

use crate::{EpsCoeff, Error};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    rank: usize,
    terms: BTreeMap<Vec<i64>, EpsCoeff>,
    floors: Vec<Option<i64>>,
    leads: Vec<i64>,
}

fn functionals(key: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(key.len().saturating_sub(1));
    let mut acc = 0i64;
    for &c in &key[..key.len() - 1] {
        acc += c;
        out.push(acc);
    }
    out
}

impl FormalCharacter {
    pub fn zero(rank: usize) -> FormalCharacter {
        FormalCharacter {
            rank,
            terms: BTreeMap::new(),
            floors: vec![None; rank - 1],
            leads: vec![0; rank - 1],
        }
    }

    /// An exact character from raw terms; zero coefficients are dropped and
    /// the lead bounds are read off the support.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<FormalCharacter, Error>
    where
        I: IntoIterator<Item = (Vec<i64>, EpsCoeff)>,
    {
        let mut map: BTreeMap<Vec<i64>, EpsCoeff> = BTreeMap::new();
        for (key, c) in terms {
            if key.len() != rank {
                return Err(Error::RankMismatch { left: rank, right: key.len() });
            }
            let entry = map.entry(key).or_insert_with(EpsCoeff::zero);
            *entry = entry.checked_add(c)?;
        }
        map.retain(|_, c| !c.is_zero());
        let mut leads = vec![i64::MIN; rank - 1];
        for key in map.keys() {
            for (i, h) in functionals(key).into_iter().enumerate() {
                leads[i] = leads[i].max(h);
            }
        }
        for l in &mut leads {
            if *l == i64::MIN {
                *l = 0;
            }
        }
        Ok(FormalCharacter { rank, terms: map, floors: vec![None; rank - 1], leads })
    }

    pub fn monomial(key: Vec<i64>, coeff: EpsCoeff) -> Result<FormalCharacter, Error> {
        let rank = key.len();
        FormalCharacter::from_terms(rank, [(key, coeff)])
    }

    /// A truncated character: `floors` and `leads` are asserted by the
    /// caller, and terms violating the floors are discarded.
    pub(crate) fn with_truncation(
        rank: usize,
        terms: BTreeMap<Vec<i64>, EpsCoeff>,
        floors: Vec<i64>,
        leads: Vec<i64>,
    ) -> FormalCharacter {
        let mut ch = FormalCharacter {
            rank,
            terms,
            floors: floors.into_iter().map(Some).collect(),
            leads,
        };
        ch.trim();
        ch
    }

    fn trim(&mut self) {
        let floors = self.floors.clone();
        self.terms.retain(|key, c| {
            !c.is_zero()
                && functionals(key)
                    .iter()
                    .zip(&floors)
                    .all(|(h, f)| f.is_none_or(|f| *h >= f))
        });
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_complete(&self) -> bool {
        self.floors.iter().all(Option::is_none)
    }

    pub fn floors(&self) -> &[Option<i64>] {
        &self.floors
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], EpsCoeff)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), *c))
    }

    /// Slack between the present support and the truncation floors: how far
    /// the computation could be trusted below the lowest term. `None` for a
    /// complete character.
    pub fn window(&self) -> Option<i64> {
        if self.is_complete() {
            return None;
        }
        let mut window = i64::MAX;
        for (i, f) in self.floors.iter().enumerate() {
            let Some(f) = f else { continue };
            let lower = self
                .terms
                .keys()
                .map(|k| functionals(k)[i])
                .min()
                .unwrap_or(*f);
            window = window.min(lower - f);
        }
        Some(window)
    }

    /// The coefficient at `key`; an error if `key` lies in the truncated
    /// (unknown) region.
    pub fn coeff(&self, key: &[i64]) -> Result<EpsCoeff, Error> {
        if key.len() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: key.len() });
        }
        for (h, f) in functionals(key).iter().zip(&self.floors) {
            if let Some(f) = f {
                if h < f {
                    return Err(Error::Incomplete(format!(
                        "read the coefficient at {key:?}"
                    )));
                }
            }
        }
        Ok(self.terms.get(key).copied().unwrap_or_else(EpsCoeff::zero))
    }

    fn check_rank(&self, other: &FormalCharacter) -> Result<(), Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalCharacter) -> Result<FormalCharacter, Error> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &FormalCharacter) -> Result<FormalCharacter, Error> {
        self.combine(other, true)
    }

    fn combine(&self, other: &FormalCharacter, negate: bool) -> Result<FormalCharacter, Error> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (key, c) in &other.terms {
            let c = if negate { EpsCoeff::zero().checked_sub(*c)? } else { *c };
            let entry = terms.entry(key.clone()).or_insert_with(EpsCoeff::zero);
            *entry = entry.checked_add(c)?;
        }
        let floors = self
            .floors
            .iter()
            .zip(&other.floors)
            .map(|(a, b)| match (a, b) {
                (None, None) => None,
                (Some(f), None) | (None, Some(f)) => Some(*f),
                (Some(f), Some(g)) => Some(*f.max(g)),
            })
            .collect();
        let leads = self.leads.iter().zip(&other.leads).map(|(a, b)| *a.max(b)).collect();
        let mut out = FormalCharacter { rank: self.rank, terms, floors, leads };
        out.trim();
        Ok(out)
    }

    pub fn mul(&self, other: &FormalCharacter) -> Result<FormalCharacter, Error> {
        self.check_rank(other)?;
        let mut terms: BTreeMap<Vec<i64>, EpsCoeff> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key: Option<Vec<i64>> =
                    ka.iter().zip(kb).map(|(x, y)| x.checked_add(*y)).collect();
                let key = key.ok_or(Error::Overflow("exponent addition"))?;
                let c = ca.checked_mul(*cb)?;
                let entry = terms.entry(key).or_insert_with(EpsCoeff::zero);
                *entry = entry.checked_add(c)?;
            }
        }
        let mut floors = Vec::with_capacity(self.rank - 1);
        let mut leads = Vec::with_capacity(self.rank - 1);
        for i in 0..self.rank - 1 {
            let from_self = self.floors[i].map(|f| f + other.leads[i]);
            let from_other = other.floors[i].map(|f| f + self.leads[i]);
            floors.push(match (from_self, from_other) {
                (None, None) => None,
                (Some(f), None) | (None, Some(f)) => Some(f),
                (Some(f), Some(g)) => Some(f.max(g)),
            });
            leads.push(
                self.leads[i]
                    .checked_add(other.leads[i])
                    .ok_or(Error::Overflow("lead bound addition"))?,
            );
        }
        let mut out = FormalCharacter { rank: self.rank, terms, floors, leads };
        out.trim();
        Ok(out)
    }

    pub fn scale_coeff(&self, c: EpsCoeff) -> Result<FormalCharacter, Error> {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.checked_mul(c)?;
        }
        out.trim();
        Ok(out)
    }

    pub fn scale_int(&self, k: i64) -> Result<FormalCharacter, Error> {
        self.scale_coeff(EpsCoeff::new(k, 0))
    }

    /// Collapses each coefficient to its parity-summed total (in the even
    /// slot). Truncation data is unchanged.
    pub fn totalize(&self) -> Result<FormalCharacter, Error> {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = EpsCoeff::new(v.total()?, 0);
        }
        out.trim();
        Ok(out)
    }

    /// Declares the character complete given a certified lower bound for
    /// each functional over the true support. Fails if some floor sits above
    /// its bound, i.e. the truncation may have eaten real terms.
    pub fn certify_above(mut self, bounds: &[i64]) -> Result<FormalCharacter, Error> {
        if bounds.len() != self.rank - 1 {
            return Err(Error::RankMismatch { left: self.rank - 1, right: bounds.len() });
        }
        for (i, f) in self.floors.iter_mut().enumerate() {
            if let Some(fv) = *f {
                if fv > bounds[i] {
                    return Err(Error::DepthTooShallow {
                        functional: i + 1,
                        floor: fv,
                        needed: bounds[i],
                    });
                }
                *f = None;
            }
        }
        Ok(self)
    }

    pub fn character_stats(&self) -> Result<CharacterStats, Error> {
        if !self.is_complete() {
            return Err(Error::Incomplete("take statistics".into()));
        }
        let mut total = 0i64;
        let mut sdim = 0i64;
        let mut nonneg = true;
        for c in self.terms.values() {
            total = total.checked_add(c.total()?).ok_or(Error::Overflow("total dimension"))?;
            sdim = sdim.checked_add(c.super_dim()?).ok_or(Error::Overflow("super dimension"))?;
            nonneg &= c.even >= 0 && c.odd >= 0;
        }
        Ok(CharacterStats {
            total_dim: total,
            super_dim: sdim,
            is_sn_invariant: self.is_sn_invariant(),
            is_nonnegative: nonneg,
            term_count: self.terms.len(),
        })
    }

    /// True when every permutation of every exponent carries the same
    /// coefficient.
    fn is_sn_invariant(&self) -> bool {
        for (key, c) in &self.terms {
            let mut perm = key.clone();
            perm.sort_unstable();
            // Check every distinct permutation of the sorted key.
            loop {
                if self.terms.get(&perm).copied().unwrap_or_else(EpsCoeff::zero) != *c {
                    return false;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        true
    }

    /// One line per term, `k1,...,kn;even,odd`, keys ascending.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (key, c) in &self.terms {
            if !out.is_empty() {
                out.push('\n');
            }
            for (i, k) in key.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{k}");
            }
            let _ = write!(out, ";{},{}", c.even, c.odd);
        }
        out
    }
}

/// In-place lexicographic successor; false once the sequence is descending.
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterStats {
    pub total_dim: i64,
    pub super_dim: i64,
    pub is_sn_invariant: bool,
    pub is_nonnegative: bool,
    pub term_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(key: &[i64], even: i64, odd: i64) -> FormalCharacter {
        FormalCharacter::monomial(key.to_vec(), EpsCoeff::new(even, odd)).unwrap()
    }

    #[test]
    fn arithmetic_and_stats() {
        let a = mono(&[2, 0, -2], 1, 1);
        let b = mono(&[0, 0, 0], 1, 0);
        let s = a.add(&b).unwrap();
        assert_eq!(s.term_count(), 2);
        let st = s.character_stats().unwrap();
        assert_eq!(st.total_dim, 3);
        assert_eq!(st.super_dim, 1);
        assert!(!st.is_sn_invariant);
        let p = a.mul(&a).unwrap();
        assert_eq!(p.coeff(&[4, 0, -4]).unwrap(), EpsCoeff::new(2, 2));
        let d = s.sub(&b).unwrap();
        assert_eq!(d, a);
    }

    #[test]
    fn sn_invariance_detection() {
        let mut ch = FormalCharacter::zero(3);
        for key in [[2, 0, 0], [0, 2, 0], [0, 0, 2]] {
            ch = ch.add(&mono(&key, 1, 1)).unwrap();
        }
        assert!(ch.character_stats().unwrap().is_sn_invariant);
        ch = ch.add(&mono(&[2, 0, 0], 1, 0)).unwrap();
        assert!(!ch.character_stats().unwrap().is_sn_invariant);
    }

    #[test]
    fn truncation_floors_flow_through_products() {
        // A series known only above h1 >= 0, support bounded by h1 <= 2.
        let mut terms = BTreeMap::new();
        terms.insert(vec![2, 0], EpsCoeff::one());
        terms.insert(vec![0, 2], EpsCoeff::one());
        let t = FormalCharacter::with_truncation(2, terms, vec![0], vec![2]);
        assert!(!t.is_complete());
        assert!(t.coeff(&[-2, 0]).is_err());
        assert_eq!(t.coeff(&[2, 0]).unwrap(), EpsCoeff::one());
        let sq = t.mul(&t).unwrap();
        // Floor of the square: 0 + 2 = 2; the (0,4) term is below it.
        assert_eq!(sq.floors(), &[Some(2)]);
        assert_eq!(sq.coeff(&[4, 0]).unwrap(), EpsCoeff::one());
        assert_eq!(sq.coeff(&[2, 2]).unwrap(), EpsCoeff::new(2, 0));
        assert!(sq.coeff(&[0, 4]).is_err());
        assert!(sq.character_stats().is_err());
        // Certification: a support reaching down to 1 sits below the floor
        // of 2, so refuse; a support bounded below by 2 is fine.
        assert!(sq.clone().certify_above(&[1]).is_err());
        let ok = sq.certify_above(&[2]).unwrap();
        assert!(ok.is_complete());
    }

    #[test]
    fn dump_is_sorted_and_stable() {
        let ch = mono(&[2, -2], 1, 0).add(&mono(&[-2, 2], -1, 2)).unwrap();
        assert_eq!(ch.dump(), "-2,2;-1,2\n2,-2;1,0");
    }

    #[test]
    fn permutation_helper_orders_correctly() {
        let mut v = vec![1, 0, 0];
        v.sort_unstable();
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }
}
