//! Coefficients in Z[eps]/(eps^2 = 1): a weight multiplicity split into its
//! even and odd parts. All arithmetic is checked; overflow is an error.

use crate::Error;
use weightlab::SuperDim;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EpsCoeff {
    pub even: i64,
    pub odd: i64,
}

impl EpsCoeff {
    pub fn new(even: i64, odd: i64) -> EpsCoeff {
        EpsCoeff { even, odd }
    }

    pub fn zero() -> EpsCoeff {
        EpsCoeff::new(0, 0)
    }

    pub fn one() -> EpsCoeff {
        EpsCoeff::new(1, 0)
    }

    pub fn is_zero(self) -> bool {
        self.even == 0 && self.odd == 0
    }

    /// Multiplication by eps: swaps the parities.
    pub fn twisted(self) -> EpsCoeff {
        EpsCoeff::new(self.odd, self.even)
    }

    pub fn is_symmetric(self) -> bool {
        self.even == self.odd
    }

    pub fn total(self) -> Result<i64, Error> {
        self.even.checked_add(self.odd).ok_or(Error::Overflow("total dimension"))
    }

    pub fn super_dim(self) -> Result<i64, Error> {
        self.even.checked_sub(self.odd).ok_or(Error::Overflow("super dimension"))
    }

    pub fn checked_add(self, o: EpsCoeff) -> Result<EpsCoeff, Error> {
        let err = Error::Overflow("coefficient addition");
        Ok(EpsCoeff::new(
            self.even.checked_add(o.even).ok_or(err.clone())?,
            self.odd.checked_add(o.odd).ok_or(err)?,
        ))
    }

    pub fn checked_sub(self, o: EpsCoeff) -> Result<EpsCoeff, Error> {
        let err = Error::Overflow("coefficient subtraction");
        Ok(EpsCoeff::new(
            self.even.checked_sub(o.even).ok_or(err.clone())?,
            self.odd.checked_sub(o.odd).ok_or(err)?,
        ))
    }

    /// (a + b eps)(c + d eps) = (ac + bd) + (ad + bc) eps.
    pub fn checked_mul(self, o: EpsCoeff) -> Result<EpsCoeff, Error> {
        let err = Error::Overflow("coefficient multiplication");
        let p = |x: i64, y: i64| x.checked_mul(y).ok_or(err.clone());
        Ok(EpsCoeff::new(
            p(self.even, o.even)?.checked_add(p(self.odd, o.odd)?).ok_or(err.clone())?,
            p(self.even, o.odd)?.checked_add(p(self.odd, o.even)?).ok_or(err)?,
        ))
    }

    pub fn scale(self, k: i64) -> Result<EpsCoeff, Error> {
        let err = Error::Overflow("coefficient scaling");
        Ok(EpsCoeff::new(
            self.even.checked_mul(k).ok_or(err.clone())?,
            self.odd.checked_mul(k).ok_or(err)?,
        ))
    }
}

impl From<SuperDim> for EpsCoeff {
    fn from(d: SuperDim) -> EpsCoeff {
        EpsCoeff::new(d.even, d.odd)
    }
}
