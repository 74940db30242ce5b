//! Text form of exact scalars.
//!
//! Rationals are written `p/q` (or `n` for integers). Gaussian rationals are
//! `p/q+r/si` / `p/q-r/si`; a bare imaginary part (`3/4i`, `-i`) and a bare real
//! part are accepted as shorthands. No whitespace is allowed inside a scalar.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GaussRational, Rational, ScalarError};

fn parse_unsigned_rational(s: &str) -> Option<Rational> {
    if s.is_empty() {
        return None;
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn parse_signed_rational(s: &str) -> Option<Rational> {
    match s.strip_prefix('-') {
        Some(rest) => parse_unsigned_rational(rest).map(|q| -q),
        None => parse_unsigned_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    parse_signed_rational(s).ok_or_else(|| ScalarError::Parse(s.to_string()))
}

fn parse_imaginary(s: &str) -> Option<Rational> {
    let body = s.strip_suffix('i')?;
    match body {
        "" | "+" => Some(Rational::one()),
        "-" => Some(-Rational::one()),
        _ => parse_signed_rational(body),
    }
}

pub fn parse_gauss(s: &str) -> Result<GaussRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    if !s.ends_with('i') {
        return parse_rational(s).map(|re| GaussRational::new(re, Rational::zero()));
    }
    // split at the last sign that is not in leading position
    let split = s
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) => {
            let re = parse_signed_rational(&s[..i]).ok_or_else(err)?;
            let im = parse_imaginary(&s[i..]).ok_or_else(err)?;
            Ok(GaussRational::new(re, im))
        }
        None => {
            let im = parse_imaginary(s).ok_or_else(err)?;
            Ok(GaussRational::new(Rational::zero(), im))
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_gauss(z: &GaussRational) -> String {
    if z.im.is_zero() {
        return format_rational(&z.re);
    }
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_rational(&z.re), sign, format_rational(&z.im.abs()))
}
