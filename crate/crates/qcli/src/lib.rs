//! Command-line reports and cross-verification for the block data of q(3) and sq(3).

pub mod checks;
mod cli;
mod report;

pub use cli::dispatch;

/// Default truncation depth for Euler character certificates.
pub const DEFAULT_DEPTH: u32 = 20;
/// Default chain window bound for block tables.
pub const DEFAULT_BOUND: u32 = 8;
/// Default path length cap for quiver algebra quotients.
pub const DEFAULT_CAP: usize = 12;

/// A dispatch failure. Usage errors exit with code 2, computation and
/// verification failures with code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

fn weight_err(e: weightlab::Error) -> CliError {
    match e {
        weightlab::Error::Overflow(_) => CliError::Failure(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn char_err(e: charlab::Error) -> CliError {
    match e {
        charlab::Error::Weight(w) => weight_err(w),
        _ => CliError::Failure(e.to_string()),
    }
}

fn bgg_err(e: bgglab::Error) -> CliError {
    match e {
        bgglab::Error::Weight(w) => weight_err(w),
        bgglab::Error::Char(c) => char_err(c),
        _ => CliError::Failure(e.to_string()),
    }
}

fn quiver_err(e: quiverlab::Error) -> CliError {
    match e {
        quiverlab::Error::Weight(w) => weight_err(w),
        quiverlab::Error::CutoffTooSmall { .. } | quiverlab::Error::UnknownFamily(_) => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Failure(e.to_string()),
    }
}

fn wild_err(e: wildlab::Error) -> CliError {
    match e {
        wildlab::Error::Quiver(q) => quiver_err(q),
        _ => CliError::Failure(e.to_string()),
    }
}
