//! Numerical toolkit for the two-sided Stechkin inequalities: evaluation of
//! the strong and weak functionals on monotone sequences, closed forms and
//! certified computations for every optimal constant and published bound,
//! extremal-sequence sweeps, continuous (integral) counterparts on step
//! functions, and the sparse-approximation norm equivalences they induce.

pub mod bound;
pub mod catalog;
pub mod certified;
pub mod continuous;
pub mod error;
pub mod exponent;
pub mod extremal;
pub mod functionals;
pub mod kahan;
pub mod sampling;
pub mod sequence;
pub mod sparse;
pub mod verify;

mod quad;
mod roots;

pub use certified::CertifiedValue;
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use functionals::FunctionalValue;
pub use sequence::{rearrange, MonotoneSequence, SuffixPowerTable};
