//! Exact rational and cyclotomic arithmetic, the coefficient field for all
//! matrices, polynomials and series in this crate.

mod cyclotomic;
mod parse;
pub(crate) mod reduce;

pub use cyclotomic::{Cyclotomic, Rational};
pub use parse::parse_cyclotomic;

use num::BigInt;

/// Rational with the given numerator and positive denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
