//! Exact scalars: rationals, Gaussian rationals and real quadratic surds.
//!
//! Every polynomial routine in this crate is written against the [`Field`]
//! trait, which requires exact arithmetic and an exact sign. Two fields are
//! provided: [`Rational`] and [`QuadSurd`] (elements of `Q(√D)` for one fixed
//! radicand per computation).

mod gauss;
mod grammar;
mod surd;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use gauss::{gauss, GaussRational, GaussExt};
pub use grammar::{format_gauss, format_rational, parse_gauss, parse_rational};
pub use surd::QuadSurd;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("radicand mismatch: √{0} combined with √{1}")]
    RadicandMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_int(v: i32) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::of_int(self.as_i32() * rhs.as_i32())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::of_int(-self.as_i32())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// An exact ordered field.
///
/// Implementors must provide exact arithmetic (no rounding) and an exact sign
/// test; `abs_bounds` supplies rational enclosures of `|x|`, used where a
/// rational bound on roots is needed (Cauchy bounds over `Q(√D)`).
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Send
    + Sync
{
    fn sign(&self) -> Sign;

    fn from_rational(q: Rational) -> Self;

    /// Rational `(lo, hi)` with `lo <= |self| <= hi`, and `lo > 0` whenever
    /// `self != 0`.
    fn abs_bounds(&self) -> (Rational, Rational);

    fn from_i64(v: i64) -> Self {
        Self::from_rational(rat(v, 1))
    }

    fn is_neg(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// A positive scalar that makes the coefficient list small, used to tame
    /// coefficient growth in remainder sequences. Defaults to `1/|lc|`.
    fn normalizer(coeffs: &[Self]) -> Self {
        match coeffs.last() {
            Some(lc) if lc.is_neg() => -(Self::one() / lc),
            Some(lc) if !lc.is_zero() => Self::one() / lc,
            _ => Self::one(),
        }
    }

    /// A positive multiple of `a mod b` (coefficients lowest degree first),
    /// rescaled by [`Field::normalizer`].
    fn scaled_rem(a: &[Self], b: &[Self]) -> Vec<Self> {
        let r = crate::poly::UniPoly::new(a.to_vec()).rem(&crate::poly::UniPoly::new(b.to_vec()));
        let k = Self::normalizer(r.coeffs());
        r.scale(&k).into_coeffs()
    }

    fn is_pos(&self) -> bool {
        self.sign() == Sign::Positive
    }
}

impl Field for Rational {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn abs_bounds(&self) -> (Rational, Rational) {
        let a = self.abs();
        (a.clone(), a)
    }

    /// `lcm(denominators) / gcd(numerators)`: the primitive integer multiple.
    fn normalizer(coeffs: &[Self]) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(den, num)
    }

    /// Pseudo-remainder over the integers after clearing denominators, with
    /// the sign of `lc(b)^steps` undone and the content divided out. No
    /// rational arithmetic happens inside the loop.
    fn scaled_rem(a: &[Self], b: &[Self]) -> Vec<Self> {
        let to_int = |p: &[Rational]| -> Vec<BigInt> {
            let k = Rational::normalizer(p);
            p.iter().map(|c| (c * &k).to_integer()).collect()
        };
        let mut r = to_int(a);
        let b = to_int(b);
        let lb = b.last().expect("nonzero divisor").clone();
        let mut flips = false;
        while r.len() >= b.len() && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - b.len();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (j, d) in b.iter().enumerate() {
                r[shift + j] -= &lr * d;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            flips ^= lb.is_negative();
            let g = r.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            if !g.is_zero() && !g.is_one() {
                for c in r.iter_mut() {
                    *c /= &g;
                }
            }
        }
        r.into_iter()
            .map(|c| Rational::from_integer(if flips { -c } else { c }))
            .collect()
    }
}

/// Shorthand for `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Nearest `f64` to a rational (ties and subnormals are not handled with care;
/// only used for reporting and numeric cross-checks).
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // fall back for huge numerators/denominators
        let n = q.numer().bits() as i64;
        let d = q.denom().bits() as i64;
        let shift = (n.max(d) - 900).max(0) as usize;
        let nn = (q.numer() >> shift).to_f64().unwrap_or(0.0);
        let dd = (q.denom() >> shift).to_f64().unwrap_or(1.0);
        nn / dd
    })
}

/// Exact rational from a finite `f64`.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}
