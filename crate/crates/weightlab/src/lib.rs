//! Weight combinatorics for finite-dimensional representations of q(3) and sq(3).

mod class;
mod clifford;
mod ext;
mod weight;

pub use class::{
    block_class, block_descriptor, block_vertices, descriptor_class, BlockClass, BlockDescriptor,
};
pub use clifford::{clifford_data, gamma, t_exponent, CliffordData, SimpleType, SuperDim};
pub use ext::{
    ext_trivial_dim, restrict_induce_class, self_ext, standard_reduction, RestrictionType,
    SelfExtensions,
};
pub use weight::{central_weight, CentralCharacterWeight, Weight};

use std::fmt;

/// The two algebras under consideration, both of rank 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    /// The queer Lie superalgebra q(3).
    Q,
    /// The subalgebra sq(3) of odd-traceless matrices.
    Sq,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Q => "q",
            Algebra::Sq => "sq",
        }
    }

    pub fn parse(s: &str) -> Result<Algebra, Error> {
        match s {
            "q" | "q(3)" => Ok(Algebra::Q),
            "sq" | "sq(3)" => Ok(Algebra::Sq),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Errors for weight construction and block-level queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Coordinates mix integral and half-integral entries.
    MixedParity(Vec<i64>),
    /// An empty coordinate list.
    EmptyWeight,
    /// The operation needs rank `expected` but the weight has rank `found`.
    WrongRank { expected: usize, found: usize },
    /// The operation requires a dominant weight.
    NotDominant(String),
    /// The operation requires a regular (distinct-coordinate) dominant weight.
    NotRegular(String),
    /// The weight is not of the shape the reduction is defined on.
    NotStandardShape(String),
    /// The block is classified but its finer data is not covered here.
    UnsupportedBlock(String),
    /// An unknown algebra name.
    UnknownAlgebra(String),
    /// Integer overflow in an exact computation.
    Overflow(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedParity(c) => {
                write!(f, "coordinates mix integral and half-integral entries: {c:?} (doubled)")
            }
            Error::EmptyWeight => write!(f, "a weight needs at least one coordinate"),
            Error::WrongRank { expected, found } => {
                write!(f, "expected rank {expected}, found rank {found}")
            }
            Error::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            Error::NotRegular(w) => write!(f, "weight {w} is not regular dominant"),
            Error::NotStandardShape(w) => {
                write!(f, "weight {w} is not of standard shape (1,0,0) or (a,1,-a)")
            }
            Error::UnsupportedBlock(b) => write!(f, "block {b} is not supported for this query"),
            Error::UnknownAlgebra(s) => write!(f, "unknown algebra {s:?} (expected q or sq)"),
            Error::Overflow(what) => write!(f, "integer overflow in {what}"),
        }
    }
}

impl std::error::Error for Error {}
