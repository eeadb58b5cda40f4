//! Arbitrary-precision rational scalars.
//!
//! `Rational` is the only exact scalar type in the crate. All JSON payloads
//! carry rationals as strings of the form `"p/q"` (see [`format_rational`]);
//! parsing accepts `"p/q"` and plain integers `"p"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` in lowest terms.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `x^e` for a (possibly negative) integer exponent. Requires `x != 0` when `e < 0`.
pub fn rat_pow(x: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = Rational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// Serializes as `"p/q"` with the denominator always present and positive.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"`, `"p"`, with optional surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, RationalError> {
    let t = s.trim();
    let parse_int = |p: &str| -> Result<BigInt, RationalError> {
        p.trim()
            .parse::<BigInt>()
            .map_err(|_| RationalError::Parse(s.to_string()))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(RationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(parse_int(t)?)),
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via the continued-fraction convergents of `x`.
pub fn approximate_f64(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // Convergents p_k/q_k of the continued fraction of x.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(x.floor() as i64), BigInt::one());
    let mut frac = x - x.floor();
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        if !a.is_finite() || a >= 9e15 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > bound {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        frac = inv - a;
    }
    if q1.is_zero() {
        None
    } else {
        Some(Rational::new(p1, q1))
    }
}
