//! Decides `det(X_w) >= 0` for every `w` from the six c-coefficients.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::wpoly::{build_w, Side};
use super::CCoefficients;
use crate::poly::{find_negative_point, nonneg, eval_alternative, Domain, PolyError, UniPoly};
use crate::quartic::{build_chi, build_g_bundle, build_lambda, quartic_nonneg_symmetric, Quartic};
use crate::scalar::{rat, Field, Rational};
use crate::RatPoly;

/// Which condition on the c-coefficients failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DetFailure {
    C1Negative,
    C6Negative,
    /// `c1 = 0, c2 ≠ 0` or `c6 = 0, c5 ≠ 0`: an odd power of `r` dominates.
    OddTerm,
    G5,
    G6,
    Chi,
    GDelta,
    G1,
    G2,
    G34,
}

/// A rational point where `W` (or `V`) is negative.
#[derive(Debug, Clone, PartialEq)]
pub struct DetCounterexample {
    pub side: Side,
    pub r: Rational,
    pub t: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetOutcome {
    pub holds: bool,
    pub failure: Option<DetFailure>,
    pub counterexample: Option<DetCounterexample>,
}

impl DetOutcome {
    fn holds() -> Self {
        DetOutcome { holds: true, failure: None, counterexample: None }
    }
}

/// Internal inconsistency in the polynomial layer; never expected.
#[derive(Debug, thiserror::Error, Clone, PartialEq)]
#[error("internal error: {0}")]
pub struct DetError(pub String);

impl From<PolyError> for DetError {
    fn from(e: PolyError) -> Self {
        DetError(e.to_string())
    }
}

const EPS_STEPS: usize = 64;

/// Decides `W(r, t) >= 0` for all real `r, t`. When it fails a rational
/// counterexample is returned together with the failing condition.
pub fn det_nonneg_all_w(c: &CCoefficients) -> Result<DetOutcome, DetError> {
    let zero = Rational::zero();
    if c.c1.is_negative() {
        // V(0, t) = c1 (1+t²)², i.e. w = (1, 0) rotated to (0, 1)
        return fail(c, DetFailure::C1Negative, Side::V, zero.clone(), zero);
    }
    if c.c6.is_negative() {
        return fail(c, DetFailure::C6Negative, Side::W, zero.clone(), zero);
    }
    if trivially_nonneg(c) {
        return Ok(DetOutcome::holds());
    }

    let c1_zero = c.c1.is_zero();
    let c6_zero = c.c6.is_zero();
    if (c1_zero && !c.c2.is_zero()) || (c6_zero && !c.c5.is_zero()) {
        let lam = if c1_zero && !c.c2.is_zero() { build_lambda(&c.c2) } else { build_lambda(&c.c5) };
        return locate(c, DetFailure::OddTerm, non_root(&lam));
    }
    let chi = build_chi(&c.c3, &c.c4);
    match (c1_zero, c6_zero) {
        (true, true) => check(c, DetFailure::Chi, &chi),
        (true, false) => {
            let l5 = build_lambda(&c.c5);
            check(c, DetFailure::G5, &(chi.scale(&c.c6) - &l5 * &l5))
        }
        (false, true) => {
            let l2 = build_lambda(&c.c2);
            check(c, DetFailure::G6, &(chi.scale(&c.c1) - &l2 * &l2))
        }
        (false, false) => general(c),
    }
}

/// At most one coefficient of `W` in `r` survives and it is nonnegative.
fn trivially_nonneg(c: &CCoefficients) -> bool {
    let rest_zero = c.c2.is_zero() && c.c3.is_zero() && c.c4.is_zero() && c.c5.is_zero();
    (rest_zero && (c.c1.is_zero() || c.c6.is_zero()))
        || (c.c1.is_zero() && c.c2.is_zero() && c.c5.is_zero() && c.c6.is_zero() && nonneg_or_zero(&build_chi(&c.c3, &c.c4)))
}

fn nonneg_or_zero<F: Field>(g: &UniPoly<F>) -> bool {
    g.is_zero() || nonneg(g, &Domain::AllReals)
}

fn check(c: &CCoefficients, why: DetFailure, g: &RatPoly) -> Result<DetOutcome, DetError> {
    if nonneg_or_zero(g) {
        return Ok(DetOutcome::holds());
    }
    let t0 = find_negative_point(g, &Domain::AllReals)?
        .ok_or_else(|| DetError(format!("{why:?} not nonnegative but no negative point found")))?;
    locate(c, why, t0)
}

fn check_surd<F: Field>(c: &CCoefficients, why: DetFailure, g: &UniPoly<F>) -> Result<Option<DetOutcome>, DetError> {
    if nonneg_or_zero(g) {
        return Ok(None);
    }
    let t0 = find_negative_point(g, &Domain::AllReals)?
        .ok_or_else(|| DetError(format!("{why:?} not nonnegative but no negative point found")))?;
    locate(c, why, t0).map(Some)
}

/// `c1 > 0` and `c6 > 0`: pointwise quartic criterion on `W(·, t)`.
fn general(c: &CCoefficients) -> Result<DetOutcome, DetError> {
    let b = build_g_bundle(c).map_err(|e| DetError(e.to_string()))?;
    if let Some(out) = check_surd(c, DetFailure::GDelta, &b.g_delta)? {
        return Ok(out);
    }
    if let Some(out) = check_surd(c, DetFailure::G1, &b.g1)? {
        return Ok(out);
    }
    // g2 always has the palindromic shape a3 = -a1, a4 = a0.
    let g2_ok = match Quartic::from_poly(&b.g2).filter(|q| q.a4.is_pos()) {
        Some(q) => quartic_nonneg_symmetric(&q).map_err(|e| DetError(e.to_string()))?,
        None => nonneg_or_zero(&b.g2),
    };
    if !g2_ok {
        if let Some(out) = check_surd(c, DetFailure::G2, &b.g2)? {
            return Ok(out);
        }
        return Err(DetError("g2 criteria disagree".into()));
    }
    let alt = eval_alternative(&b.g3, &b.g4, &Domain::AllReals)?;
    if alt.holds {
        return Ok(DetOutcome::holds());
    }
    let t0 = alt.witness_point.ok_or_else(|| DetError("alternative failed without a witness".into()))?;
    locate(c, DetFailure::G34, t0)
}

/// A rational point where `p` does not vanish.
fn non_root(p: &RatPoly) -> Rational {
    let mut k = 0i64;
    loop {
        let t = Rational::from_integer(k.into());
        if !p.is_root(&t) {
            return t;
        }
        k += 1;
    }
}

/// Given `t0` where `W(·, t0)` is expected to go negative, finds `r0`. If it
/// does not, walks `t0 ± ε` with `ε = 1/2, 1/4, …`.
fn locate(c: &CCoefficients, why: DetFailure, t0: Rational) -> Result<DetOutcome, DetError> {
    let w = build_w(c);
    let mut candidates = vec![t0.clone()];
    let mut eps = rat(1, 2);
    for _ in 0..EPS_STEPS {
        candidates.push(&t0 + &eps);
        candidates.push(&t0 - &eps);
        eps /= Rational::from_integer(2.into());
    }
    for t in candidates {
        let at = w.at_t(&t);
        if let Some(r) = find_negative_point(&at, &Domain::AllReals)? {
            return fail(c, why, Side::W, r, t);
        }
    }
    Err(DetError(format!("{why:?}: no negative point of W found")))
}

fn fail(c: &CCoefficients, why: DetFailure, side: Side, r: Rational, t: Rational) -> Result<DetOutcome, DetError> {
    let poly = match side {
        Side::W => build_w(c),
        Side::V => build_w(c).reversed(),
    };
    if !poly.eval(&r, &t).is_negative() {
        return Err(DetError(format!("{why:?}: counterexample does not verify")));
    }
    Ok(DetOutcome { holds: false, failure: Some(why), counterexample: Some(DetCounterexample { side, r, t }) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, int};
    use crate::witness::c_coefficients;
    use crate::matrix::BipartiteHermitian;
    use crate::scalar::GaussRational;

    fn cc(c: [i64; 6]) -> CCoefficients {
        let g = |x| gauss(int(x), int(0));
        CCoefficients::from_parts(int(c[0]), g(c[1]), g(c[2]), int(c[3]), g(c[4]), int(c[5]))
    }

    #[test]
    fn examples() {
        assert!(det_nonneg_all_w(&cc([1, 0, 0, 2, 0, 1])).unwrap().holds);
        let swap = c_coefficients(&BipartiteHermitian::swap(2)).unwrap();
        assert!(det_nonneg_all_w(&swap).unwrap().holds);
        let out = det_nonneg_all_w(&cc([-1, 0, 0, 2, 0, 1])).unwrap();
        assert!(!out.holds);
        assert_eq!(out.failure, Some(DetFailure::C1Negative));
    }

    #[test]
    fn trivial_cases() {
        for c in [[0, 0, 0, 0, 0, 0], [3, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 2], [0, 0, 0, 1, 0, 0]] {
            assert!(det_nonneg_all_w(&cc(c)).unwrap().holds, "{c:?}");
        }
        // χ(t, 1, 0) = 2t⁴ - 12t² + 2 dips below zero
        let out = det_nonneg_all_w(&cc([0, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(out.failure, Some(DetFailure::Chi));
    }

    #[test]
    fn degenerate_branches() {
        let out = det_nonneg_all_w(&cc([0, 1, 0, 2, 0, 1])).unwrap();
        assert_eq!(out.failure, Some(DetFailure::OddTerm));
        let out = det_nonneg_all_w(&cc([1, 0, 0, 2, 1, 0])).unwrap();
        assert_eq!(out.failure, Some(DetFailure::OddTerm));
        // c1 = c2 = 0: W = c4 u² r² - 2uΛ5 r + c6 u², g5 = 2c6 u² - Λ5²
        assert!(det_nonneg_all_w(&cc([0, 0, 0, 2, 1, 1])).unwrap().holds);
        assert_eq!(det_nonneg_all_w(&cc([0, 0, 0, 2, 3, 1])).unwrap().failure, Some(DetFailure::G5));
        assert!(det_nonneg_all_w(&cc([1, 1, 0, 2, 0, 0])).unwrap().holds);
        assert_eq!(det_nonneg_all_w(&cc([1, 3, 0, 2, 0, 0])).unwrap().failure, Some(DetFailure::G6));
    }

    #[test]
    fn general_failures_verify() {
        // W(r, t) at t with small c4 and large c2 goes negative
        let c = CCoefficients::from_parts(int(1), gauss(int(3), int(1)), GaussRational::zero(), int(1), gauss(int(0), int(2)), int(1));
        let out = det_nonneg_all_w(&c).unwrap();
        assert!(!out.holds);
        let ce = out.counterexample.unwrap();
        assert!(build_w(&c).eval(&ce.r, &ce.t).is_negative());
    }
}
