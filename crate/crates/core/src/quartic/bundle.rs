//! Polynomials in `t` encoding the quartic criterion for `W(·, t)`.

use super::QuarticError;
use crate::scalar::{int, GaussRational, QuadSurd, Rational};
use crate::witness::CCoefficients;
use crate::{RatPoly, SurdPoly};

/// `1 + t²`
pub fn one_plus_t2() -> RatPoly {
    RatPoly::from_i64(&[1, 0, 1])
}

/// `Λ(t, c) = Re(c) t² + 2 Im(c) t - Re(c)`
pub fn build_lambda(c: &GaussRational) -> RatPoly {
    RatPoly::new(vec![-c.re.clone(), int(2) * &c.im, c.re.clone()])
}

/// `χ(t, c3, c4) = (c4 + 2Re c3) t⁴ + 8 Im c3 t³ + 2(c4 - 6 Re c3) t²
///  - 8 Im c3 t + (c4 + 2 Re c3)`
pub fn build_chi(c3: &GaussRational, c4: &Rational) -> RatPoly {
    let outer = c4 + int(2) * &c3.re;
    let odd = int(8) * &c3.im;
    RatPoly::new(vec![
        outer.clone(),
        -odd.clone(),
        int(2) * (c4 - int(6) * &c3.re),
        odd,
        outer,
    ])
}

#[derive(Debug, Clone, PartialEq)]
pub struct GBundle {
    /// Degree ≤ 16; `432 (1+t²)⁴ g_Δ` is `4I³ - J²` of `W(·, t)`.
    pub g_delta: RatPoly,
    pub g1: SurdPoly,
    pub g2: SurdPoly,
    pub g3: SurdPoly,
    pub g4: SurdPoly,
    /// `c1 c6`, the radicand of every surd coefficient.
    pub radicand: Rational,
}

/// Builds `g_Δ, g1 … g4` for `c1 > 0`, `c6 > 0`. With `s = √(c1 c6)` and
/// `u = 1 + t²`:
/// `g2 = χ + 2s u²`, `g3 = 6s u² - χ`,
/// `g1 = 4c1c6 g2 - (c1 Λ5² + c6 Λ2² - 2s Λ5 Λ2)`,
/// `g4 = 4c1c6 (χ - 2s u²) - (c1 Λ5² + c6 Λ2² + 2s Λ5 Λ2)`.
pub fn build_g_bundle(c: &CCoefficients) -> Result<GBundle, QuarticError> {
    if !(c.c1 > int(0) && c.c6 > int(0)) {
        return Err(QuarticError::Precondition("c1 > 0 and c6 > 0 required"));
    }
    let p = &c.c1 * &c.c6;
    let s = QuadSurd::sqrt(p.clone()).expect("positive radicand");
    let u = one_plus_t2();
    let u2 = &u * &u;
    let l2 = build_lambda(&c.c2);
    let l5 = build_lambda(&c.c5);
    let chi = build_chi(&c.c3, &c.c4);

    let surd = |q: &RatPoly| q.to_surd();
    let times_s = |q: &RatPoly, k: i64| q.to_surd().scale(&(s.clone() * QuadSurd::rational(int(k))));

    let squares = (&l5 * &l5).scale(&c.c1) + (&l2 * &l2).scale(&c.c6);
    let cross = &l5 * &l2;
    let four_p = QuadSurd::rational(int(4) * &p);

    let g2 = surd(&chi) + times_s(&u2, 2);
    let g3 = times_s(&u2, 6) - surd(&chi);
    let g1 = g2.scale(&four_p) - (surd(&squares) - times_s(&cross, 2));
    let g4 = (surd(&chi) - times_s(&u2, 2)).scale(&four_p) - (surd(&squares) + times_s(&cross, 2));

    Ok(GBundle { g_delta: g_delta(c, &u, &l2, &l5, &chi), g1, g2, g3, g4, radicand: p })
}

fn g_delta(c: &CCoefficients, u: &RatPoly, l2: &RatPoly, l5: &RatPoly, chi: &RatPoly) -> RatPoly {
    let k = |n: i64| int(n);
    let (c1, c6) = (&c.c1, &c.c6);
    let u2 = u * u;
    let u4 = &u2 * &u2;
    let chi2 = chi * chi;
    let l2_2 = l2 * l2;
    let l5_2 = l5 * l5;
    let c1c6 = c1 * c6;

    // 36 c1 c6 u⁴ - χ²
    let m36 = u4.scale(&(k(36) * &c1c6)) - chi2.clone();

    let t1 = (&u4 * &(&l2_2 * &l2_2)).scale(&(k(-27) * c6 * c6));
    let t2 = {
        let inner = l5_2.scale(&k(8)) - chi.scale(&(k(9) * c6));
        (&(&(&u2 * &(&l2_2 * l2)) * l5) * &inner).scale(&k(-2))
    };
    let t3 = {
        let a = -(&l5_2 * &(u4.scale(&(k(6) * &c1c6)) - chi2.clone()));
        let b = (chi * &m36).scale(c6);
        &l2_2 * &(a + b)
    };
    let t4 = {
        let a = (&u4 * &(&l5_2 * &l5_2)).scale(&(k(-27) * c1));
        let b = &(&l5_2 * chi) * &m36;
        (a + b).scale(c1)
    };
    let t5 = {
        let inner = u4.scale(&(k(-4) * &c1c6)) + chi2.clone();
        (&inner * &inner).scale(&c1c6)
    };
    let t6 = {
        let inner = (&l5_2 * chi).scale(&k(-9)) + (u4.scale(&(k(12) * &c1c6)) + chi2.scale(&k(5))).scale(&(k(2) * c6));
        (&(&(&u2 * l2) * l5) * &inner).scale(&(k(-2) * c1))
    };
    t1 + t2 + t3 + t4 + t5 + t6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::Quartic;
    use crate::scalar::{gauss, rat};
    use crate::witness::build_w;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cc(c: [i64; 6]) -> CCoefficients {
        let g = |x| gauss(int(x), int(0));
        CCoefficients::from_parts(int(c[0]), g(c[1]), g(c[2]), int(c[3]), g(c[4]), int(c[5]))
    }

    #[test]
    fn lambda_chi_examples() {
        assert_eq!(build_lambda(&gauss(int(0), int(1))), RatPoly::from_i64(&[0, 2]));
        assert_eq!(build_lambda(&gauss(int(1), int(0))), RatPoly::from_i64(&[-1, 0, 1]));
        assert!(build_lambda(&gauss(int(0), int(0))).is_zero());
        let u = one_plus_t2();
        assert_eq!(build_chi(&gauss(int(0), int(0)), &int(2)), (&u * &u).scale(&int(2)));
        assert_eq!(build_chi(&gauss(int(1), int(0)), &int(0)), RatPoly::from_i64(&[2, 0, -12, 0, 2]));
        assert_eq!(build_chi(&gauss(int(0), int(1)), &int(0)), RatPoly::from_i64(&[0, -8, 0, 8]));
    }

    #[test]
    fn identity_bundle() {
        let b = build_g_bundle(&cc([1, 0, 0, 2, 0, 1])).unwrap();
        let u = one_plus_t2();
        let u2 = (&u * &u).to_surd();
        let k = |n| QuadSurd::rational(int(n));
        assert_eq!(b.g2, u2.scale(&k(4)));
        assert_eq!(b.g1, u2.scale(&k(16)));
        assert_eq!(b.g3, u2.scale(&k(4)));
        assert!(b.g_delta.is_zero());
        let b = build_g_bundle(&cc([1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(b.g2, u2.scale(&k(2)));
        assert!(build_g_bundle(&cc([0, 0, 0, 2, 0, 1])).is_err());
    }

    #[test]
    fn lambda_free_bundle() {
        let c = CCoefficients::from_parts(int(3), gauss(int(0), int(0)), gauss(rat(1, 2), int(-1)), int(5), gauss(int(0), int(0)), int(2));
        let b = build_g_bundle(&c).unwrap();
        let four_p = QuadSurd::rational(int(24));
        assert_eq!(b.g1, b.g2.scale(&four_p));
        assert_eq!(b.g4, (b.g2.clone() - (one_plus_t2().pow(2)).to_surd().scale(&(QuadSurd::sqrt(int(6)).unwrap() * QuadSurd::rational(int(4))))).scale(&four_p));
        // g_Δ = c1 c6 (χ² - 4 c1 c6 u⁴)²
        let chi = build_chi(&c.c3, &c.c4);
        let u4 = one_plus_t2().pow(4);
        let inner = &chi * &chi - u4.scale(&int(24));
        assert_eq!(b.g_delta, (&inner * &inner).scale(&int(6)));
    }

    #[test]
    fn g_delta_matches_discriminant_of_w() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut q = || rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        for _ in 0..25 {
            let c = CCoefficients::from_parts(
                q().abs() + rat(1, 3),
                gauss(q(), q()),
                gauss(q(), q()),
                q(),
                gauss(q(), q()),
                q().abs() + rat(1, 5),
            );
            let b = build_g_bundle(&c).unwrap();
            let w = build_w(&c);
            let u4 = one_plus_t2().pow(4);
            // 4I³ - J² of W(·, t), evaluated at sample points of t
            for k in -6..=6 {
                let t = rat(k, 3);
                let at = w.at_t(&t);
                let qt = Quartic::new(at.coeff(4), at.coeff(3), at.coeff(2), at.coeff(1), at.coeff(0));
                assert_eq!(qt.discriminant_form(), int(432) * u4.eval(&t) * b.g_delta.eval(&t));
            }
        }
    }
}
