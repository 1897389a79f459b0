//! Block multiplicity data for q(3) and sq(3): the decomposition of Euler
//! characters into simples, reciprocity coefficients, projective multiplicity
//! tables, and the exact-character verification of all of it.

mod data;
mod invert;
mod recip;

pub use data::{b_matrix, block_data, BMatrix, BlockData};
pub use invert::{reconstruct_trivial, simple_characters, BlockCharacters};
pub use recip::{a_coefficients, projective_table, AMatrix, ProjectiveTable};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Weight(weightlab::Error),
    Char(charlab::Error),
    /// The exact-character inversion contradicts the block multiplicity
    /// data.
    Inversion(String),
    /// A reciprocity coefficient failed to be a nonnegative integer.
    BadCoefficient(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Weight(e) => write!(f, "{e}"),
            Error::Char(e) => write!(f, "{e}"),
            Error::Inversion(what) => write!(f, "character inversion failed: {what}"),
            Error::BadCoefficient(what) => write!(f, "bad reciprocity coefficient: {what}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<weightlab::Error> for Error {
    fn from(e: weightlab::Error) -> Error {
        Error::Weight(e)
    }
}

impl From<charlab::Error> for Error {
    fn from(e: charlab::Error) -> Error {
        Error::Char(e)
    }
}
