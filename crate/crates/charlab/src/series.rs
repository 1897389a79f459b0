//! The Weyl-group numerator, the odd denominator series, and Euler
//! characters.

use crate::character::next_permutation;
use crate::{EpsCoeff, Error, FormalCharacter};
use std::collections::BTreeMap;
use weightlab::{clifford_data, Algebra, Weight};

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The alternating orbit sum over the symmetric group acting on the
/// coordinates of `lambda` (no shift). Weights with a repeated coordinate
/// give zero.
pub fn weyl_numerator(lambda: &Weight) -> Result<FormalCharacter, Error> {
    let n = lambda.rank();
    let d = lambda.doubled();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut terms = Vec::new();
    loop {
        let key: Vec<i64> = idx.iter().map(|&i| d[i]).collect();
        terms.push((key, EpsCoeff::new(permutation_sign(&idx), 0)));
        if !next_permutation(&mut idx) {
            break;
        }
    }
    FormalCharacter::from_terms(n, terms)
}

/// The odd denominator series over the positive roots e_i - e_j: the product
/// of (1 + 2 sum_{k>=1} x^(-k alpha)), expanded exactly on the box where
/// every partial-sum functional is at least -2 * depth and truncated outside
/// it.
pub fn d_series(rank: usize, depth: u32) -> Result<FormalCharacter, Error> {
    let mut roots: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let mut r = vec![0i64; rank];
            r[i] = 2;
            r[j] = -2;
            roots.push(r);
        }
    }
    let floor = -2 * depth as i64;
    let mut terms: BTreeMap<Vec<i64>, EpsCoeff> = BTreeMap::new();
    let mut key = vec![0i64; rank];
    expand(&roots, depth as i64, floor, &mut key, 1, &mut terms)?;
    Ok(FormalCharacter::with_truncation(
        rank,
        terms,
        vec![floor; rank - 1],
        vec![0; rank - 1],
    ))
}

fn expand(
    roots: &[Vec<i64>],
    depth: i64,
    floor: i64,
    key: &mut Vec<i64>,
    coeff: i64,
    terms: &mut BTreeMap<Vec<i64>, EpsCoeff>,
) -> Result<(), Error> {
    // Prune: exponents only push functionals further down.
    let mut acc = 0i64;
    for &c in &key[..key.len() - 1] {
        acc += c;
        if acc < floor {
            return Ok(());
        }
    }
    let Some((root, rest)) = roots.split_first() else {
        let entry = terms.entry(key.clone()).or_insert_with(EpsCoeff::zero);
        *entry = entry.checked_add(EpsCoeff::new(coeff, 0))?;
        return Ok(());
    };
    for k in 0..=depth {
        let factor = if k == 0 { 1 } else { 2 };
        for (c, r) in key.iter_mut().zip(root) {
            *c -= k * r;
        }
        expand(rest, depth, floor, key, coeff * factor, terms)?;
        for (c, r) in key.iter_mut().zip(root) {
            *c += k * r;
        }
    }
    Ok(())
}

/// The Euler character at `lambda`: the Clifford dimension times the odd
/// denominator series times the alternating orbit sum. The result is
/// certified complete against the convex hull of the orbit of `lambda`; if
/// `depth` is too small for that, an error is returned instead of a silently
/// truncated character.
pub fn euler_character(
    algebra: Algebra,
    lambda: &Weight,
    depth: u32,
) -> Result<FormalCharacter, Error> {
    let rank = lambda.rank();
    let v: EpsCoeff = clifford_data(algebra, lambda)?.simple_dim.into();
    let num = weyl_numerator(lambda)?;
    let series = d_series(rank, depth)?;
    let product = series.mul(&num)?.scale_coeff(v)?;
    let mut asc = lambda.doubled().to_vec();
    asc.sort_unstable();
    let mut bounds = Vec::with_capacity(rank - 1);
    let mut acc = 0i64;
    for &c in &asc[..rank - 1] {
        acc += c;
        bounds.push(acc);
    }
    product.certify_above(&bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: &[i64]) -> Weight {
        Weight::from_integers(coords)
    }

    #[test]
    fn numerator_golden() {
        let n = weyl_numerator(&w(&[1, 0, -1])).unwrap();
        assert!(n.is_complete());
        assert_eq!(
            n.dump(),
            "-2,0,2;-1,0\n-2,2,0;1,0\n0,-2,2;1,0\n0,2,-2;-1,0\n2,-2,0;-1,0\n2,0,-2;1,0"
        );
    }

    #[test]
    fn numerator_vanishes_on_stabilized_weights() {
        assert!(weyl_numerator(&w(&[0, 0, 0])).unwrap().is_zero());
        assert!(weyl_numerator(&w(&[1, 0, 0])).unwrap().is_zero());
        assert!(weyl_numerator(&w(&[2, 1, 1])).unwrap().is_zero());
    }

    #[test]
    fn numerator_is_alternating() {
        let a = weyl_numerator(&w(&[3, 1, -2])).unwrap();
        let b = weyl_numerator(&w(&[1, 3, -2])).unwrap();
        assert_eq!(b, a.scale_int(-1).unwrap());
    }

    #[test]
    fn rank_two_series_golden() {
        let d = d_series(2, 3).unwrap();
        assert_eq!(d.dump(), "-6,6;2,0\n-4,4;2,0\n-2,2;2,0\n0,0;1,0");
        assert_eq!(d.floors(), &[Some(-6)]);
    }

    #[test]
    fn rank_three_series_small_coefficients() {
        let d = d_series(3, 8).unwrap();
        assert_eq!(d.coeff(&[0, 0, 0]).unwrap(), EpsCoeff::new(1, 0));
        assert_eq!(d.coeff(&[-2, 2, 0]).unwrap(), EpsCoeff::new(2, 0));
        assert_eq!(d.coeff(&[0, -2, 2]).unwrap(), EpsCoeff::new(2, 0));
        // Two routes to e_1 - e_3: the product of the two simple factors
        // (2 * 2) plus the long root factor itself (2).
        assert_eq!(d.coeff(&[-2, 0, 2]).unwrap(), EpsCoeff::new(6, 0));
    }

    /// Independent expansion of the same product with plain nested loops.
    #[test]
    fn rank_three_series_matches_brute_force() {
        let depth = 4i64;
        let mut brute: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        let wgt = |k: i64| if k == 0 { 1 } else { 2 };
        for a in 0..=10i64 {
            for b in 0..=10i64 {
                for c in 0..=10i64 {
                    let key = vec![-2 * a - 2 * c, 2 * a - 2 * b, 2 * b + 2 * c];
                    if a + c <= depth && b + c <= depth {
                        *brute.entry(key).or_insert(0) += wgt(a) * wgt(b) * wgt(c);
                    }
                }
            }
        }
        let d = d_series(3, depth as u32).unwrap();
        assert_eq!(d.term_count(), brute.len());
        assert_eq!(brute.len(), 25);
        for (key, total) in brute {
            assert_eq!(d.coeff(&key).unwrap(), EpsCoeff::new(total, 0), "key {key:?}");
        }
    }

    #[test]
    fn euler_vanishes_on_stabilized_weights() {
        for alg in [Algebra::Q, Algebra::Sq] {
            let e0 = euler_character(alg, &w(&[0, 0, 0]), 20).unwrap();
            assert!(e0.is_complete() && e0.is_zero());
            let e1 = euler_character(alg, &w(&[1, 0, 0]), 20).unwrap();
            assert!(e1.is_complete() && e1.is_zero());
        }
    }

    #[test]
    fn euler_base_of_principal_block() {
        let e = euler_character(Algebra::Sq, &w(&[1, 0, -1]), 8).unwrap();
        let st = e.character_stats().unwrap();
        assert_eq!(st.total_dim, 16);
        assert_eq!(st.super_dim, 0);
        assert!(st.is_sn_invariant);
        assert!(st.is_nonnegative);
        // Same character for q at this weight: the Clifford module has the
        // same size.
        assert_eq!(euler_character(Algebra::Q, &w(&[1, 0, -1]), 8).unwrap(), e);
    }

    #[test]
    fn euler_scales_with_clifford_dimension() {
        let lam = w(&[2, 1, -2]);
        let eq = euler_character(Algebra::Q, &lam, 10).unwrap();
        let esq = euler_character(Algebra::Sq, &lam, 10).unwrap();
        assert_eq!(eq, esq.scale_int(2).unwrap());
    }

    #[test]
    fn euler_is_sign_equivariant() {
        let dom = euler_character(Algebra::Q, &w(&[1, 0, -1]), 6).unwrap();
        let swapped = euler_character(Algebra::Q, &w(&[0, 1, -1]), 6).unwrap();
        assert_eq!(swapped, dom.scale_int(-1).unwrap());
    }

    #[test]
    fn euler_depth_is_certified() {
        let lam = w(&[1, 0, -1]);
        assert!(matches!(
            euler_character(Algebra::Q, &lam, 1),
            Err(Error::DepthTooShallow { .. })
        ));
        let shallow = euler_character(Algebra::Q, &lam, 2).unwrap();
        let deep = euler_character(Algebra::Q, &lam, 20).unwrap();
        assert_eq!(shallow, deep);
    }

    #[test]
    fn typical_euler_is_a_nonnegative_invariant_character() {
        for alg in [Algebra::Q, Algebra::Sq] {
            let e = euler_character(alg, &w(&[3, 2, -1]), 12).unwrap();
            let st = e.character_stats().unwrap();
            assert!(st.is_nonnegative);
            assert!(st.is_sn_invariant);
            assert!(st.total_dim > 0);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn euler_equivariance_under_transpositions(
                c in proptest::collection::vec(-5i64..=5, 3),
                swap in 0usize..3,
            ) {
                let lam = Weight::from_integers(&c);
                let mut p = c.clone();
                let (i, j) = [(0, 1), (0, 2), (1, 2)][swap];
                p.swap(i, j);
                let per = Weight::from_integers(&p);
                let a = euler_character(Algebra::Q, &lam, 14).unwrap();
                let b = euler_character(Algebra::Q, &per, 14).unwrap();
                prop_assert_eq!(b, a.scale_int(-1).unwrap());
            }
        }
    }
}
