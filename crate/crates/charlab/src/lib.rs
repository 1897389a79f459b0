//! Formal super-characters with exact truncation bookkeeping, and the Euler
//! characters of the blocks of q(3) and sq(3).

mod character;
mod coeff;
mod series;

pub use character::{CharacterStats, FormalCharacter};
pub use coeff::EpsCoeff;
pub use series::{d_series, euler_character, weyl_numerator};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Overflow(&'static str),
    RankMismatch { left: usize, right: usize },
    Incomplete(String),
    DepthTooShallow { functional: usize, floor: i64, needed: i64 },
    Weight(weightlab::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow(what) => write!(f, "integer overflow in {what}"),
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::Incomplete(what) => {
                write!(f, "character is truncated, refusing to {what}")
            }
            Error::DepthTooShallow { functional, floor, needed } => write!(
                f,
                "truncation depth too shallow: functional {functional} is exact above \
                 {floor} but the support reaches down to {needed}"
            ),
            Error::Weight(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<weightlab::Error> for Error {
    fn from(e: weightlab::Error) -> Error {
        Error::Weight(e)
    }
}
