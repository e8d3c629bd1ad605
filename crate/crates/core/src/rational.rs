//! Exact rational scalars.
//!
//! Every linear-algebraic computation in this crate runs over arbitrary-precision
//! rationals: numerators and denominators are big integers, values are always kept
//! in lowest terms with a positive denominator, and equality is value equality.
//! `num_rational::BigRational` already guarantees all of that, so it is the scalar
//! type; this module adds the constructors and the `p/q` text form used by the
//! JSON algebra format.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `p/q` (or bare `p`) form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational coefficient `{s}`"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match den_str {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(numer, denom))
}

/// True if `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Signed integer value of an integral rational. Panics on non-integers.
pub fn to_bigint(r: &Rational) -> BigInt {
    assert!(is_integer(r), "expected an integer, got {}", r);
    r.numer().clone()
}

/// Absolute value.
pub fn rat_abs(r: &Rational) -> Rational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}
