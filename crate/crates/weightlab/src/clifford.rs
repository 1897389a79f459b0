//! Clifford-algebra data attached to a weight: the rank of the induced
//! symmetric form, its kernel, and the size and type of the simple
//! highest-weight module over the Cartan.

use crate::{Algebra, Error, Weight};

/// A super vector space dimension (even part, odd part).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperDim {
    pub even: i64,
    pub odd: i64,
}

impl SuperDim {
    pub fn total(self) -> i64 {
        self.even + self.odd
    }

    pub fn super_dim(self) -> i64 {
        self.even - self.odd
    }
}

/// Type of a simple supermodule: M when not isomorphic to its parity shift,
/// Q when it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleType {
    M,
    Q,
}

/// The form data of a weight.
///
/// For q the form lives on the full odd Cartan (rank n); for sq on the odd
/// traceless part (rank n-1). `dim_e` is the rank of the form restricted to
/// that space, `dim_kernel` its kernel, so dim_e + dim_kernel = n for q and
/// n-1 for sq. The simple Clifford supermodule v(lambda) has super dimension
/// (2^floor((m-1)/2), 2^floor((m-1)/2)) for m = dim_e > 0, and (1, 0) for
/// m = 0; its type is Q exactly when m is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliffordData {
    pub dim_e: u32,
    pub dim_kernel: u32,
    pub simple_dim: SuperDim,
    pub simple_type: SimpleType,
}

/// Computes the Clifford data of any weight (the data only depends on the
/// multiset of coordinates).
///
/// The rank of the form: with some coordinate zero it is the number of
/// nonzero coordinates for both algebras; with all coordinates nonzero it is
/// n for q, and for sq it is n-1 when the reciprocal coordinate sum is
/// nonzero, n-2 when that sum vanishes.
pub fn clifford_data(algebra: Algebra, lambda: &Weight) -> Result<CliffordData, Error> {
    let n = lambda.rank() as u32;
    let nonzero = lambda.count_nonzero() as u32;
    let ambient = match algebra {
        Algebra::Q => n,
        Algebra::Sq => n - 1,
    };
    let dim_e = if nonzero < n {
        nonzero.min(ambient)
    } else {
        match algebra {
            Algebra::Q => n,
            Algebra::Sq => {
                if lambda.reciprocal_sum_is_zero()? {
                    n - 2
                } else {
                    n - 1
                }
            }
        }
    };
    let m = dim_e;
    let simple_dim = if m == 0 {
        SuperDim { even: 1, odd: 0 }
    } else {
        let half = 1i64 << ((m - 1) / 2);
        SuperDim { even: half, odd: half }
    };
    let simple_type = if m % 2 == 1 { SimpleType::Q } else { SimpleType::M };
    Ok(CliffordData { dim_e, dim_kernel: ambient - dim_e, simple_dim, simple_type })
}

/// The reciprocity factor gamma of a regular dominant weight: 2 when the
/// form on the relevant odd Cartan space has a kernel, 1 otherwise.
/// Equivalently, for q it is 2 exactly when some coordinate vanishes, and
/// for sq exactly when the reciprocal coordinate sum vanishes.
pub fn gamma(algebra: Algebra, mu: &Weight) -> Result<u32, Error> {
    if !mu.is_regular_dominant() {
        return Err(Error::NotRegular(mu.to_string()));
    }
    let data = clifford_data(algebra, mu)?;
    Ok(if data.dim_kernel > 0 { 2 } else { 1 })
}

/// The reciprocity exponent t(lambda): 1 for type M weights, 0 for type Q.
/// It enters projective multiplicities through the factor
/// 2^(t(mu) - t(lambda)).
pub fn t_exponent(algebra: Algebra, lambda: &Weight) -> Result<i64, Error> {
    let data = clifford_data(algebra, lambda)?;
    Ok(match data.simple_type {
        SimpleType::M => 1,
        SimpleType::Q => 0,
    })
}
