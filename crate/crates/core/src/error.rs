use core::fmt;

/// Errors raised by the bound, representation and sampling routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A caller-supplied argument is outside the documented domain.
    InvalidArgument(&'static str),
    /// Highest weight entries must be nonincreasing.
    NotDominant,
    /// The Weyl group S_d is larger than the configured enumeration cap.
    WeylCapExceeded { d: usize, cap: usize },
    /// `sum_j j * lambda^s_j` is not divisible by `d`, so no zero-sum U(d) lift exists.
    NoZeroSumLift,
    /// The bound method cannot be applied to the requested gate-set kind.
    IncompatibleMethod,
    /// The log-moment bracket was nonpositive for every admissible theta.
    BoundUnavailable,
    /// The bound failed to decrease monotonically while searching for a minimal size.
    NonMonotone { size: u64 },
    /// Search for a minimal size exceeded the hard limit.
    SearchLimit,
    /// The tensor space `d^(2t)` (or `t!`) is larger than the configured cap.
    DimensionCap { dim: usize, cap: usize },
    /// Power iteration did not reach the requested tolerance.
    NoConvergence { iterations: usize, estimate: f64, rel_change: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NotDominant => f.write_str("highest weight entries must be nonincreasing"),
            Error::WeylCapExceeded { d, cap } => {
                write!(f, "Weyl group S_{d} exceeds the enumeration cap (d <= {cap})")
            }
            Error::NoZeroSumLift => f.write_str("no zero-sum U(d) lift exists for this label"),
            Error::IncompatibleMethod => f.write_str("bound method is not applicable to this gate-set kind"),
            Error::BoundUnavailable => f.write_str("bound unavailable: moment bracket nonpositive"),
            Error::NonMonotone { size } => write!(f, "bound is not monotone in the set size near S = {size}"),
            Error::SearchLimit => f.write_str("minimal size search exceeded its limit"),
            Error::DimensionCap { dim, cap } => write!(f, "dimension {dim} exceeds cap {cap}"),
            Error::NoConvergence { iterations, estimate, rel_change } => write!(
                f,
                "power iteration did not converge after {iterations} iterations \
                 (estimate {estimate:.12}, last relative change {rel_change:.3e})"
            ),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
