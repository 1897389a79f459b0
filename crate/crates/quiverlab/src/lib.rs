//! Quivers with relations for the blocks of q(3) and sq(3): block quivers,
//! capped path-algebra quotients, Hom dimensions, and radical filtrations.

mod algebra;
mod families;
mod fixtures;
mod quiver;
mod relations;

pub use algebra::{build_algebra, PathAlgebra, RadicalFiltration};
pub use families::{
    block_algebra, block_quiver, canonical_descriptor, families, family_by_name, family_for,
    family_quiver, BlockFamily, PROBE_CUTOFF,
};
pub use fixtures::{expected_filtration, verify_all, verify_family, FixtureReport};
pub use quiver::{Arrow, Quiver, Vertex};
pub use relations::{
    instantiate, resolve_orientation, Orientation, RawRelation, RelationInstance, RelationSet,
};

use std::fmt;

#[derive(Debug)]
pub enum Error {
    /// Weight or block classification failure from the weight layer.
    Weight(weightlab::Error),
    /// No registered quiver family matches the request.
    UnknownFamily(String),
    /// The requested vertex cutoff is below the family minimum.
    CutoffTooSmall { family: &'static str, min: usize, got: usize },
    /// A relation word composes under no reading convention.
    NonComposable(String),
    /// Both reading conventions compose but induce different relation sets.
    AmbiguousOrientation(String),
    /// A binomial relation composes more than once between two vertices.
    InstanceMismatch(String),
    /// The declared involution does not preserve the quiver.
    BadInvolution(String),
    /// Hom dimensions did not stabilize below the path length cap.
    Unstable { family: &'static str, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Weight(e) => write!(f, "{e}"),
            Error::UnknownFamily(s) => write!(f, "unknown quiver family: {s}"),
            Error::CutoffTooSmall { family, min, got } => {
                write!(f, "family {family} needs a vertex cutoff of at least {min}, got {got}")
            }
            Error::NonComposable(s) => write!(f, "relation does not compose: {s}"),
            Error::AmbiguousOrientation(s) => write!(f, "ambiguous reading convention: {s}"),
            Error::InstanceMismatch(s) => write!(f, "relation instance mismatch: {s}"),
            Error::BadInvolution(s) => write!(f, "bad involution: {s}"),
            Error::Unstable { family, cap } => {
                write!(f, "family {family}: dimensions do not stabilize at length cap {cap}")
            }
        }
    }
}

impl std::error::Error for Error {}

impl From<weightlab::Error> for Error {
    fn from(e: weightlab::Error) -> Error {
        Error::Weight(e)
    }
}
