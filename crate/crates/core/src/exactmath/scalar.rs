//! The base field: arbitrary-precision rationals, always in lowest terms with
//! a positive denominator (`num_rational` maintains both invariants).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact scalar of the whole crate.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Integer as a scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a scalar. Panics on `q == 0`; use [`parse_rat`] for user input.
pub fn ratq(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `p` or `p/q` with optional sign, e.g. `-3`, `5/2`, `-7/3`.
pub fn parse_rat(text: &str) -> Result<Rat, ScalarError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ScalarError::Empty);
    }
    let mut parts = text.splitn(2, '/');
    let numer = parts.next().unwrap();
    let numer: BigInt = numer.parse().map_err(|_| ScalarError::Malformed(text.to_string()))?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(denom) => {
            let denom: BigInt =
                denom.parse().map_err(|_| ScalarError::Malformed(text.to_string()))?;
            if denom.is_zero() {
                return Err(ScalarError::ZeroDenominator(text.to_string()));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Render without spaces, `p` or `p/q`, matching what [`parse_rat`] accepts.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True for scalars that are nonnegative integers.
pub fn is_nonneg_integer(value: &Rat) -> bool {
    value.is_integer() && !value.is_negative()
}
