use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, int, Field, Rational, ScalarError, Sign};

/// `a + b·√d` with rational `a`, `b` and radicand `d >= 0`.
///
/// Canonical form: when `b == 0`, `d == 0` or `d` is the square of a rational,
/// the value is folded into `a` and stored as `(a, 0, 0)`. A value with
/// `b == 0` therefore combines with any radicand; two values with nonzero
/// surd parts must share `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadSurd {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<QuadSurd, ScalarError> {
        if d.is_negative() {
            return Err(ScalarError::NegativeRadicand(format_rational(&d)));
        }
        Ok(Self::normalized(a, b, d))
    }

    /// `√d` for a nonnegative rational `d`.
    pub fn sqrt(d: Rational) -> Result<QuadSurd, ScalarError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational(a: Rational) -> QuadSurd {
        QuadSurd { a, b: Rational::zero(), d: Rational::zero() }
    }

    fn normalized(a: Rational, b: Rational, d: Rational) -> QuadSurd {
        if b.is_zero() || d.is_zero() {
            return QuadSurd::rational(a);
        }
        if let Some(root) = rational_sqrt(&d) {
            return QuadSurd::rational(a + b * root);
        }
        QuadSurd { a, b, d }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    /// The rational value, if the surd part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> QuadSurd {
        QuadSurd { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// Exact sign of `a + b√d`.
    pub fn surd_sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with b²d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * &self.d;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => Sign::Zero,
        }
    }

    fn shared_radicand(&self, other: &QuadSurd) -> Result<Rational, ScalarError> {
        if self.b.is_zero() {
            Ok(other.d.clone())
        } else if other.b.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(ScalarError::RadicandMismatch(
                format_rational(&self.d),
                format_rational(&other.d),
            ))
        }
    }

    pub fn checked_add(&self, other: &QuadSurd) -> Result<QuadSurd, ScalarError> {
        let d = self.shared_radicand(other)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &QuadSurd) -> Result<QuadSurd, ScalarError> {
        let d = self.shared_radicand(other)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &QuadSurd) -> Result<QuadSurd, ScalarError> {
        let d = self.shared_radicand(other)?;
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn checked_inv(&self) -> Result<QuadSurd, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Ok(Self::normalized(&self.a / &norm, -(&self.b / &norm), self.d.clone()))
    }

    pub fn checked_div(&self, other: &QuadSurd) -> Result<QuadSurd, ScalarError> {
        self.shared_radicand(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        super::to_f64(&self.a) + super::to_f64(&self.b) * super::to_f64(&self.d).sqrt()
    }

    /// Rational enclosure `lo <= √d <= hi` with `hi - lo <= 2^-bits`.
    fn sqrt_enclosure(&self, bits: u32) -> (Rational, Rational) {
        // √(p/q) = √(p q) / q; scale by 4^bits before the integer root
        let p = self.d.numer();
        let q = self.d.denom();
        let scale = BigInt::one() << (2 * bits as usize);
        let s = (p * q * &scale).sqrt();
        let den = q * (BigInt::one() << bits as usize);
        let lo = Rational::new(s.clone(), den.clone());
        let hi = Rational::new(s + BigInt::one(), den);
        (lo, hi)
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(d: &Rational) -> Option<Rational> {
    let n = d.numer();
    let m = d.denom();
    let rn = n.sqrt();
    let rm = m.sqrt();
    if &(&rn * &rn) == n && &(&rm * &rm) == m {
        Some(Rational::new(rn, rm))
    } else {
        None
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&format_rational(&self.a));
        }
        write!(
            f,
            "{}{}{}·√{}",
            format_rational(&self.a),
            if self.b.is_negative() { "-" } else { "+" },
            format_rational(&self.b.abs()),
            format_rational(&self.d)
        )
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        QuadSurd::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        QuadSurd::rational(Rational::one())
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { a: -self.a, b: -self.b, d: self.d }
    }
}

macro_rules! forward_checked {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: QuadSurd) -> QuadSurd {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &'a QuadSurd) -> QuadSurd {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, 'b> $trait<&'b QuadSurd> for &'a QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &'b QuadSurd) -> QuadSurd {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_checked!(Add, add, checked_add);
forward_checked!(Sub, sub, checked_sub);
forward_checked!(Mul, mul, checked_mul);
forward_checked!(Div, div, checked_div);

impl Field for QuadSurd {
    fn sign(&self) -> Sign {
        self.surd_sign()
    }

    fn from_rational(q: Rational) -> Self {
        QuadSurd::rational(q)
    }

    fn abs_bounds(&self) -> (Rational, Rational) {
        if self.b.is_zero() {
            let a = self.a.abs();
            return (a.clone(), a);
        }
        let sign = self.surd_sign();
        let mut bits = 16;
        loop {
            let (lo, hi) = self.sqrt_enclosure(bits);
            // a + b·[lo, hi]
            let e1 = &self.a + &self.b * &lo;
            let e2 = &self.a + &self.b * &hi;
            let (min, max) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
            let excludes_zero = min.is_positive() || max.is_negative();
            if excludes_zero || sign == Sign::Zero {
                let (alo, ahi) = if max.is_negative() {
                    (-max, -min)
                } else if min.is_positive() {
                    (min, max)
                } else {
                    (int(0), max.abs().max(min.abs()))
                };
                return (alo, ahi);
            }
            bits *= 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, to_f64};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(a: i64, b: i64, d: i64) -> QuadSurd {
        QuadSurd::new(int(a), int(b), int(d)).unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(s(3, -2, 2).surd_sign(), Sign::Positive);
        assert_eq!(s(0, 0, 7).surd_sign(), Sign::Zero);
        assert_eq!(s(-1, 1, 2).surd_sign(), Sign::Positive);
        assert_eq!(s(1, -1, 2).surd_sign(), Sign::Negative);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s(1, 1, 2) * s(1, -1, 2), s(-1, 0, 2));
        let sum = s(0, 1, 4) + s(0, 0, 4);
        assert_eq!(sum.surd_sign(), Sign::Positive);
        assert_eq!(sum.as_rational(), Some(&int(2)));
        assert_eq!(QuadSurd::one() / s(1, 1, 2), s(-1, 1, 2));
    }

    #[test]
    fn perfect_square_radicand_folds() {
        let x = QuadSurd::new(int(1), int(3), rat(9, 4)).unwrap();
        assert_eq!(x.as_rational(), Some(&rat(11, 2)));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            s(0, 1, 2).checked_add(&s(0, 1, 3)),
            Err(ScalarError::RadicandMismatch(..))
        ));
        assert_eq!(s(0, 0, 2).checked_inv(), Err(ScalarError::DivisionByZero));
        assert!(QuadSurd::new(int(1), int(1), int(-2)).is_err());
        // rational values mix with any radicand
        assert!(s(5, 0, 0).checked_add(&s(0, 1, 3)).is_ok());
    }

    fn random_surd(rng: &mut ChaCha8Rng, d: &Rational) -> QuadSurd {
        let a = rat(rng.gen_range(-50..=50), rng.gen_range(1..=20));
        let b = rat(rng.gen_range(-50..=50), rng.gen_range(1..=20));
        QuadSurd::new(a, b, d.clone()).unwrap()
    }

    #[test]
    fn field_axioms_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let d = rat(rng.gen_range(2..40), rng.gen_range(1..5));
            let x = random_surd(&mut rng, &d);
            let y = random_surd(&mut rng, &d);
            let z = random_surd(&mut rng, &d);
            assert_eq!((&x + &y) + &z, &x + &(&y + &z));
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                assert_eq!(&x * &x.checked_inv().unwrap(), QuadSurd::one());
            }
            assert_ne!((&x * &x).surd_sign(), Sign::Negative);
        }
    }

    #[test]
    fn sign_agrees_with_floating_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        for _ in 0..10_000 {
            let d = int(rng.gen_range(0..200));
            let x = random_surd(&mut rng, &d);
            let v = to_f64(x.a()) + to_f64(x.b()) * to_f64(x.radicand()).sqrt();
            if v.abs() > 1e-30 {
                checked += 1;
                let expected = if v > 0.0 { Sign::Positive } else { Sign::Negative };
                assert_eq!(x.surd_sign(), expected, "{x} ≈ {v}");
            }
        }
        assert!(checked > 9000);
    }

    #[test]
    fn abs_bounds_enclose() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let d = int(rng.gen_range(2..50));
            let x = random_surd(&mut rng, &d);
            let (lo, hi) = x.abs_bounds();
            let v = x.to_f64().abs();
            assert!(to_f64(&lo) <= v + 1e-12 && v <= to_f64(&hi) + 1e-12);
            if !x.is_zero() {
                assert!(lo.is_positive());
            }
        }
    }
}
