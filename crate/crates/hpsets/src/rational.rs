//! Exact scalar type and its text form.
//!
//! Every value in this crate is a `Rational`; nothing is ever rounded.
//! The text form is `num` or `num/den` with the denominator omitted
//! when it is 1, which is exactly what `Display` on `BigRational`
//! produces.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `num` or `num/den` with optional leading sign on the numerator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| bad())?;
            let d = BigInt::from_str(den).map_err(|_| bad())?;
            if d < BigInt::one() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}
