//! Nonnegativity of quartics from closed-form coefficient conditions.

mod bundle;


use crate::poly::UniPoly;
use crate::scalar::{int, Field, QuadSurd, Rational, Sign};

pub use bundle::{build_chi, build_g_bundle, build_lambda, one_plus_t2, GBundle};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum QuarticError {
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// `a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0`
#[derive(Debug, Clone, PartialEq)]
pub struct Quartic<F> {
    pub a4: F,
    pub a3: F,
    pub a2: F,
    pub a1: F,
    pub a0: F,
}

impl<F: Field> Quartic<F> {
    pub fn new(a4: F, a3: F, a2: F, a1: F, a0: F) -> Self {
        Quartic { a4, a3, a2, a1, a0 }
    }

    /// Reads a polynomial of degree at most four.
    pub fn from_poly(p: &UniPoly<F>) -> Option<Self> {
        if p.degree().is_some_and(|d| d > 4) {
            return None;
        }
        Some(Quartic::new(p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)))
    }

    pub fn to_poly(&self) -> UniPoly<F> {
        UniPoly::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        ])
    }

    /// `a0 t^4 + a1 t^3 + a2 t^2 + a3 t + a4`
    pub fn reverse(&self) -> Self {
        Quartic::new(
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        )
    }

    /// `I = 12 a4 a0 - 3 a3 a1 + a2^2`
    pub fn invariant_i(&self) -> F {
        let Quartic { a4, a3, a2, a1, a0 } = self;
        F::from_i64(12) * a4 * a0 - F::from_i64(3) * a3.clone() * a1 + a2.clone() * a2
    }

    /// `J = 72 a4 a2 a0 + 9 a3 a2 a1 - 27 a4 a1^2 - 27 a0 a3^2 - 2 a2^3`
    pub fn invariant_j(&self) -> F {
        let Quartic { a4, a3, a2, a1, a0 } = self;
        F::from_i64(72) * a4 * a2 * a0 + F::from_i64(9) * a3 * a2 * a1
            - F::from_i64(27) * a4 * a1 * a1
            - F::from_i64(27) * a0 * a3 * a3
            - F::from_i64(2) * a2 * a2 * a2
    }

    /// `4 I^3 - J^2`, which is 27 times the discriminant.
    pub fn discriminant_form(&self) -> F {
        let i = self.invariant_i();
        let j = self.invariant_j();
        F::from_i64(4) * &i * &i * &i - j.clone() * &j
    }
}

/// The conditions of the quartic criterion, evaluated exactly in
/// `Q(√(a4 a0))` without ever forming fourth roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedConditions {
    pub disc_sign: Sign,
    /// `-2 <= β <= 6`
    pub beta_range_ok: bool,
    /// `β + 2 >= 0` and `(α - γ)^2 <= 16 (β + 2)`
    pub cond_diff_ok: bool,
    /// `β > 6` and `(α + γ)^2 <= 16 (β - 2)`
    pub cond_sum_ok: bool,
}

impl NormalizedConditions {
    pub fn nonneg(&self) -> bool {
        self.disc_sign != Sign::Negative && self.cond_diff_ok && (self.beta_range_ok || self.cond_sum_ok)
    }
}

fn check_ends(q: &Quartic<Rational>) -> Result<(), QuarticError> {
    if q.a4.is_pos() && q.a0.is_pos() {
        Ok(())
    } else {
        Err(QuarticError::Precondition("a4 > 0 and a0 > 0 required"))
    }
}

/// With `P = a4 a0` and `s = √P`, the normalized coefficients satisfy
/// `β = a2 s / P`, `α² = a3² s / (a4 P)`, `γ² = a1² s / (a0 P)` and
/// `αγ = a3 a1 / P`. Every comparison is then between elements of `Q(s)`.
/// Squared forms are only compared after the sign of the right side is known.
pub fn normalized_conditions(q: &Quartic<Rational>) -> Result<NormalizedConditions, QuarticError> {
    check_ends(q)?;
    let p = &q.a4 * &q.a0;
    let s = QuadSurd::sqrt(p.clone()).expect("a4 a0 > 0");
    let r = |x: Rational| QuadSurd::rational(x);
    let beta = s.clone() * r(&q.a2 / &p);
    let alpha2 = s.clone() * r(&q.a3 * &q.a3 / (&q.a4 * &p));
    let gamma2 = s.clone() * r(&q.a1 * &q.a1 / (&q.a0 * &p));
    let alpha_gamma = r(&q.a3 * &q.a1 / &p);
    let two = r(int(2));
    let sixteen = r(int(16));

    let beta_plus_2 = beta.clone() + &two;
    let diff2 = alpha2.clone() + &gamma2 - two.clone() * &alpha_gamma;
    let cond_diff_ok = !beta_plus_2.is_neg() && !(diff2 - sixteen.clone() * &beta_plus_2).is_pos();

    let beta_range_ok = !beta_plus_2.is_neg() && !(beta.clone() - r(int(6))).is_pos();

    let beta_above_6 = (beta.clone() - r(int(6))).is_pos();
    let sum2 = alpha2 + &gamma2 + two.clone() * &alpha_gamma;
    let cond_sum_ok = beta_above_6 && !(sum2 - sixteen * (beta - two)).is_pos();

    Ok(NormalizedConditions {
        disc_sign: q.discriminant_form().sign(),
        beta_range_ok,
        cond_diff_ok,
        cond_sum_ok,
    })
}

/// Decides `q(t) >= 0` for all real `t`, for `a4 > 0` and `a0 > 0`.
pub fn quartic_nonneg(q: &Quartic<Rational>) -> Result<bool, QuarticError> {
    Ok(normalized_conditions(q)?.nonneg())
}

/// Shortcut for the pattern `a3 = -a1`, `a4 = a0 > 0`. Writing
/// `u = t - 1/t`, `q / t^2 = a4 u^2 + a3 u + a2 + 2 a4`, so `q >= 0` iff
/// `a2 + 2 a4 >= 0` and `a3^2 <= 4 a4 (a2 + 2 a4)`. Valid over any field.
pub fn quartic_nonneg_symmetric<F: Field>(q: &Quartic<F>) -> Result<bool, QuarticError> {
    if q.a4 != q.a0 || !q.a4.is_pos() || !(q.a3.clone() + &q.a1).is_zero() {
        return Err(QuarticError::Precondition("a3 = -a1 and a4 = a0 > 0 required"));
    }
    let shifted = q.a2.clone() + F::from_i64(2) * &q.a4;
    let lhs = q.a3.clone() * &q.a3;
    let rhs = F::from_i64(4) * &q.a4 * &shifted;
    Ok(!shifted.is_neg() && !(lhs - rhs).is_pos())
}
