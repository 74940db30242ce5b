use std::ops::Add;

use num_traits::{Signed, Zero};

use crate::matrix::{BipartiteHermitian, MatrixError};
use crate::scalar::{GaussExt, GaussRational, Rational};

/// Data of `tr(X_w) = |w1|² τ1 + |w2|² τ2 + 2 Re(conj(w1) w2 ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceData {
    pub tau1: Rational,
    pub tau2: Rational,
    pub xi: GaussRational,
}

/// `tr(X_w) >= 0` for every `w` iff `τ1 + τ2 >= 0` and `τ1 τ2 >= |ξ|²`.
pub fn trace_condition(td: &TraceData) -> bool {
    let sum = &td.tau1 + &td.tau2;
    !sum.is_negative() && &td.tau1 * &td.tau2 >= td.xi.abs2()
}

/// `τ1 = Σ_i X_{i1,i1}`, `τ2 = Σ_i X_{i2,i2}`, `ξ = Σ_i X_{i1,i2}` for a
/// `d ⊗ 2` matrix.
pub fn trace_tau_xi(x: &BipartiteHermitian) -> Result<TraceData, MatrixError> {
    if x.db() != 2 {
        return Err(MatrixError::Shape(format!("second factor must be 2, got {}", x.db())));
    }
    let mut td = TraceData { tau1: Rational::zero(), tau2: Rational::zero(), xi: GaussRational::zero() };
    for i in 1..=x.da() {
        td.tau1 += &x.elem(i, 1, i, 1).re;
        td.tau2 += &x.elem(i, 2, i, 2).re;
        td.xi = &td.xi + x.elem(i, 1, i, 2);
    }
    Ok(td)
}

/// Coefficients of `det(X_w)` for `w = (1, r e^{iφ})`:
/// `c1 r^4 + 2Re(c2 e^{iφ}) r^3 + (2Re(c3 e^{2iφ}) + c4) r^2 + 2Re(c5 e^{iφ}) r + c6`.
#[derive(Debug, Clone, PartialEq)]
pub struct CCoefficients {
    pub c1: Rational,
    pub c2: GaussRational,
    pub c3: GaussRational,
    pub c4: Rational,
    pub c5: GaussRational,
    pub c6: Rational,
}

impl CCoefficients {
    pub fn zero() -> Self {
        CCoefficients {
            c1: Rational::zero(),
            c2: GaussRational::zero(),
            c3: GaussRational::zero(),
            c4: Rational::zero(),
            c5: GaussRational::zero(),
            c6: Rational::zero(),
        }
    }

    pub fn from_parts(c1: Rational, c2: GaussRational, c3: GaussRational, c4: Rational, c5: GaussRational, c6: Rational) -> Self {
        CCoefficients { c1, c2, c3, c4, c5, c6 }
    }

    pub fn is_zero(&self) -> bool {
        self == &Self::zero()
    }
}

impl Add for &CCoefficients {
    type Output = CCoefficients;
    fn add(self, o: &CCoefficients) -> CCoefficients {
        CCoefficients {
            c1: &self.c1 + &o.c1,
            c2: &self.c2 + &o.c2,
            c3: &self.c3 + &o.c3,
            c4: &self.c4 + &o.c4,
            c5: &self.c5 + &o.c5,
            c6: &self.c6 + &o.c6,
        }
    }
}

/// The six coefficients of the 2×2 principal block of `X_w` on first-factor
/// indices `(l, k)` (1-based). For a `2 ⊗ 2` matrix with `(l, k) = (1, 2)`
/// this is the full determinant.
pub(crate) fn c_coefficients_on(x: &BipartiteHermitian, l: usize, k: usize) -> CCoefficients {
    let idx = [l, k];
    // e(i, j, ip, jp) with i, ip in {1, 2} relabelled to l, k
    let e = |i: usize, j: usize, ip: usize, jp: usize| x.elem(idx[i - 1], j, idx[ip - 1], jp).clone();
    let cj = |z: GaussRational| z.conj();
    let abs2 = |z: GaussRational| z.abs2();

    let c1 = e(1, 2, 1, 2).re * e(2, 2, 2, 2).re - abs2(e(1, 2, 2, 2));
    let c2 = e(2, 2, 2, 2) * e(1, 1, 1, 2) + e(1, 2, 1, 2) * e(2, 1, 2, 2)
        - e(1, 2, 2, 2) * cj(e(1, 2, 2, 1))
        - cj(e(1, 2, 2, 2)) * e(1, 1, 2, 2);
    let c3 = e(1, 1, 1, 2) * e(2, 1, 2, 2) - e(1, 1, 2, 2) * cj(e(1, 2, 2, 1));
    let c4 = e(1, 1, 1, 2) * cj(e(2, 1, 2, 2)) - e(1, 2, 2, 2) * cj(e(1, 1, 2, 1))
        + cj(e(1, 1, 1, 2)) * e(2, 1, 2, 2)
        - cj(e(1, 2, 2, 2)) * e(1, 1, 2, 1)
        + e(1, 1, 1, 1) * e(2, 2, 2, 2)
        + e(1, 2, 1, 2) * e(2, 1, 2, 1)
        - GaussRational::real(abs2(e(1, 1, 2, 2)))
        - GaussRational::real(abs2(e(1, 2, 2, 1)));
    let c5 = e(1, 1, 1, 1) * e(2, 1, 2, 2) + e(2, 1, 2, 1) * e(1, 1, 1, 2)
        - cj(e(1, 1, 2, 1)) * e(1, 1, 2, 2)
        - e(1, 1, 2, 1) * cj(e(1, 2, 2, 1));
    let c6 = e(1, 1, 1, 1).re * e(2, 1, 2, 1).re - abs2(e(1, 1, 2, 1));
    debug_assert!(c4.is_real());
    CCoefficients { c1, c2, c3, c4: c4.re, c5, c6 }
}

/// Coefficients for a `2 ⊗ 2` matrix.
pub fn c_coefficients(x: &BipartiteHermitian) -> Result<CCoefficients, MatrixError> {
    if x.da() != 2 || x.db() != 2 {
        return Err(MatrixError::Shape(format!("expected 2x2 system, got {}x{}", x.da(), x.db())));
    }
    Ok(c_coefficients_on(x, 1, 2))
}
