use num_traits::{One, Zero};

use super::CCoefficients;
use crate::quartic::{build_chi, build_lambda, one_plus_t2};
use crate::scalar::{int, GaussRational, Rational};
use crate::RatPoly;

/// Polynomial in `r` whose coefficients are polynomials in `t`, lowest
/// power of `r` first.
#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly {
    pub r_coeffs: Vec<RatPoly>,
}

impl BiPoly {
    /// The polynomial in `r` obtained by fixing `t`.
    pub fn at_t(&self, t: &Rational) -> RatPoly {
        RatPoly::new(self.r_coeffs.iter().map(|p| p.eval(t)).collect())
    }

    pub fn eval(&self, r: &Rational, t: &Rational) -> Rational {
        self.at_t(t).eval(r)
    }

    /// Coefficient list reversed in `r`.
    pub fn reversed(&self) -> BiPoly {
        let mut r_coeffs = self.r_coeffs.clone();
        r_coeffs.reverse();
        BiPoly { r_coeffs }
    }
}

/// `W(r,t) = c1 u² r⁴ - 2u Λ(t,c2) r³ + χ(t,c3,c4) r² - 2u Λ(t,c5) r + c6 u²`
/// with `u = t² + 1`.
pub fn build_w(c: &CCoefficients) -> BiPoly {
    let u = one_plus_t2();
    let u2 = &u * &u;
    let m2u = u.scale(&int(-2));
    BiPoly {
        r_coeffs: vec![
            u2.scale(&c.c6),
            &m2u * &build_lambda(&c.c5),
            build_chi(&c.c3, &c.c4),
            &m2u * &build_lambda(&c.c2),
            u2.scale(&c.c1),
        ],
    }
}

/// `V(r,t)`, the reversal of `W` in `r`, for `w = (r e^{-iφ}, 1)`.
pub fn build_v(c: &CCoefficients) -> BiPoly {
    build_w(c).reversed()
}

/// `e^{iφ}` with `cos φ = (1-t²)/(1+t²)`, `sin φ = 2t/(1+t²)`.
pub fn phase(t: &Rational) -> GaussRational {
    let d = Rational::one() + t * t;
    GaussRational::new((Rational::one() - t * t) / &d, (int(2) * t) / &d)
}

/// Which parametrization a determinant counterexample refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    /// `w = (1, r e^{iφ})`
    W,
    /// `w = (r e^{-iφ}, 1)`
    V,
}

/// The vector `w` for a point `(r, t)` on the given side.
pub fn w_vector(side: Side, r: &Rational, t: &Rational) -> [GaussRational; 2] {
    let one = GaussRational::one();
    let rr = GaussRational::new(r.clone(), Rational::zero());
    match side {
        Side::W => [one, rr * phase(t)],
        Side::V => [rr * phase(t).conj(), one],
    }
}
