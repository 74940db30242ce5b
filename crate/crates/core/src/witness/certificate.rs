//! Rational product vectors with exactly negative expectation.

use num_traits::{One, Signed, Zero};

use super::coeffs::TraceData;
use super::det::DetCounterexample;
use super::wpoly::w_vector;
use crate::matrix::{quadratic_form, BipartiteHermitian};
use crate::scalar::{GaussExt, GaussRational, Rational};

/// `v ⊗ w` with `value = <v⊗w|X|v⊗w> < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCertificate {
    pub v: Vec<GaussRational>,
    pub w: Vec<GaussRational>,
    pub value: Rational,
}

/// Where the refutation was found.
#[derive(Debug, Clone, PartialEq)]
pub enum FailureSite {
    Trace(TraceData),
    Det(DetCounterexample),
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
#[error("certificate construction failed: {0}")]
pub struct CertificateError(pub String);

/// A rational `w ∈ C²` with `tr(X_w) < 0`, given failing trace data.
pub fn trace_failure_w(td: &TraceData) -> Option<[GaussRational; 2]> {
    let one = GaussRational::one();
    let zero = GaussRational::zero();
    if td.tau1.is_negative() {
        return Some([one, zero]);
    }
    if td.tau2.is_negative() {
        return Some([zero, one]);
    }
    let xi2 = td.xi.abs2();
    if xi2.is_zero() {
        return None;
    }
    // w = (1, -s conj ξ): tr = τ1 - 2s|ξ|² + s²|ξ|² τ2
    let s = if td.tau2.is_positive() { td.tau2.recip() } else { &td.tau1 / &xi2 + Rational::one() };
    let w2 = -(td.xi.conj() * GaussRational::real(s));
    let tr = &td.tau1 + &td.tau2 * w2.abs2() + Rational::from_integer(2.into()) * (&td.xi * &w2).re;
    tr.is_negative().then_some([one, w2])
}

/// A rational `v` with `v† M v < 0` for Hermitian `M` that has a negative
/// diagonal entry or a negative 2×2 principal minor.
pub fn negative_vector(m: &[Vec<GaussRational>]) -> Option<Vec<GaussRational>> {
    let n = m.len();
    let basis = |i: usize| {
        let mut v = vec![GaussRational::zero(); n];
        v[i] = GaussRational::one();
        v
    };
    if let Some(i) = (0..n).find(|&i| m[i][i].re.is_negative()) {
        return Some(basis(i));
    }
    for l in 0..n {
        for k in l + 1..n {
            let (a, d, b) = (&m[l][l].re, &m[k][k].re, &m[l][k]);
            let b2 = b.abs2();
            if !(a * d - &b2).is_negative() {
                continue;
            }
            // v = e_l - s conj(b) e_k: value a - 2s|b|² + s²|b|² d
            let s = if d.is_positive() { d.recip() } else { a / &b2 + Rational::one() };
            let mut v = vec![GaussRational::zero(); n];
            v[l] = GaussRational::one();
            v[k] = -(b.conj() * GaussRational::real(s));
            return Some(v);
        }
    }
    None
}

/// Builds and verifies a product certificate from a failure site.
pub fn extract_certificate(x: &BipartiteHermitian, site: &FailureSite) -> Result<ProductCertificate, CertificateError> {
    if x.db() != 2 {
        return Err(CertificateError(format!("second factor must be 2, got {}", x.db())));
    }
    let w: Vec<GaussRational> = match site {
        FailureSite::Trace(td) => trace_failure_w(td)
            .ok_or_else(|| CertificateError("trace condition holds".into()))?
            .to_vec(),
        FailureSite::Det(ce) => w_vector(ce.side, &ce.r, &ce.t).to_vec(),
    };
    certificate_for_w(x, w)
}

/// Completes `w` with a `v` making the expectation negative.
pub fn certificate_for_w(x: &BipartiteHermitian, w: Vec<GaussRational>) -> Result<ProductCertificate, CertificateError> {
    let m = x.project(&w);
    let v = negative_vector(&m).ok_or_else(|| CertificateError("projected matrix has no negative minor".into()))?;
    let value = quadratic_form(&m, &v);
    if !value.is_negative() {
        return Err(CertificateError(format!("value {value} is not negative")));
    }
    debug_assert_eq!(value, x.expectation(&v, &w));
    Ok(ProductCertificate { v, w, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, int, rat};
    use crate::Side;

    #[test]
    fn trace_rationalization() {
        let td = |a: Rational, b: Rational, x: GaussRational| TraceData { tau1: a, tau2: b, xi: x };
        let cases = [
            td(int(1), int(1), gauss(int(2), int(0))),
            td(int(3), int(0), gauss(int(0), int(1))),
            td(int(-1), int(5), gauss(int(0), int(0))),
            td(int(5), int(-6), gauss(int(0), int(0))),
            td(rat(1, 3), rat(2, 7), gauss(rat(1, 2), rat(-1, 5))),
        ];
        for c in cases {
            let w = trace_failure_w(&c).unwrap();
            let tr = &c.tau1 * w[0].abs2() + &c.tau2 * w[1].abs2() + int(2) * (w[0].conj() * &w[1] * &c.xi).re;
            assert!(tr.is_negative());
        }
        assert!(trace_failure_w(&td(int(2), int(2), gauss(int(1), int(0)))).is_none());
    }

    #[test]
    fn negative_vector_cases() {
        let g = |a: i64, b: i64| gauss(int(a), int(b));
        let m = vec![vec![g(1, 0), g(2, 1)], vec![g(2, -1), g(1, 0)]];
        let v = negative_vector(&m).unwrap();
        assert!(quadratic_form(&m, &v).is_negative());
        let m = vec![vec![g(3, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]];
        let v = negative_vector(&m).unwrap();
        assert!(quadratic_form(&m, &v).is_negative());
        let m = vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(1, 0)]];
        assert!(negative_vector(&m).is_none());
    }

    #[test]
    fn basis_certificates() {
        let d = BipartiteHermitian::diagonal(2, 2, &[int(1), int(1), int(1), int(-1)]);
        let ce = DetCounterexample { side: Side::V, r: int(0), t: int(0) };
        let cert = extract_certificate(&d, &FailureSite::Det(ce)).unwrap();
        let e2 = vec![GaussRational::zero(), GaussRational::one()];
        assert_eq!((cert.v, cert.w, cert.value), (e2.clone(), e2, int(-1)));

        let neg = BipartiteHermitian::identity(2, 2).scale(&int(-1));
        let td = crate::witness::trace_tau_xi(&neg).unwrap();
        let cert = extract_certificate(&neg, &FailureSite::Trace(td)).unwrap();
        let e1 = vec![GaussRational::one(), GaussRational::zero()];
        assert_eq!((cert.v, cert.w, cert.value), (e1.clone(), e1, int(-1)));
    }
}
