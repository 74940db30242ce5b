//! Exact classification of `2 ⊗ 2` Hermitian operators.

mod certificate;
mod coeffs;
mod det;
mod wpoly;

pub use certificate::{
    certificate_for_w, extract_certificate, negative_vector, trace_failure_w, CertificateError, FailureSite,
    ProductCertificate,
};
pub(crate) use coeffs::c_coefficients_on;
pub use coeffs::{c_coefficients, trace_condition, trace_tau_xi, CCoefficients, TraceData};
pub use det::{det_nonneg_all_w, DetCounterexample, DetError, DetFailure, DetOutcome};
pub use wpoly::{build_v, build_w, phase, w_vector, BiPoly, Side};

use crate::matrix::{BipartiteHermitian, MatrixError};
use crate::poly::{count_roots, Domain};
use crate::quartic::build_g_bundle;

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    PositiveSemidefinite,
    EntanglementWitness { weakly_optimal_possible: bool },
    NotBlockPositive { certificate: ProductCertificate },
    /// Two or more negative eigenvalues.
    NotWitnessMultiNegative,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::PositiveSemidefinite => "PositiveSemidefinite",
            Verdict::EntanglementWitness { .. } => "EntanglementWitness",
            Verdict::NotBlockPositive { .. } => "NotBlockPositive",
            Verdict::NotWitnessMultiNegative => "NotWitnessMultiNegative",
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Det(#[from] DetError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Looks for an exact refutation of block-positivity through the trace and
/// determinant conditions, regardless of the eigenvalue signature.
pub fn refute(x: &BipartiteHermitian) -> Result<Option<ProductCertificate>, ClassifyError> {
    let td = trace_tau_xi(x)?;
    if !trace_condition(&td) {
        return Ok(Some(extract_certificate(x, &FailureSite::Trace(td))?));
    }
    let out = det_nonneg_all_w(&c_coefficients(x)?)?;
    match out.counterexample {
        Some(ce) => Ok(Some(extract_certificate(x, &FailureSite::Det(ce))?)),
        None => Ok(None),
    }
}

/// Full decision for `2 ⊗ 2`.
pub fn classify(x: &BipartiteHermitian) -> Result<Verdict, ClassifyError> {
    c_coefficients(x)?;
    let (n_neg, _, _) = x.eigen_signature();
    if n_neg == 0 {
        return Ok(Verdict::PositiveSemidefinite);
    }
    if n_neg >= 2 {
        return Ok(Verdict::NotWitnessMultiNegative);
    }
    if let Some(certificate) = refute(x)? {
        return Ok(Verdict::NotBlockPositive { certificate });
    }
    let weakly_optimal_possible = g_delta_has_real_root(&c_coefficients(x)?);
    Ok(Verdict::EntanglementWitness { weakly_optimal_possible })
}

/// `g_Δ` has a real root (the zero polynomial counts). Outside `c1, c6 > 0`
/// the determinant already vanishes somewhere on the sphere, so this is
/// reported as true.
fn g_delta_has_real_root(c: &CCoefficients) -> bool {
    match build_g_bundle(c) {
        Ok(b) => b.g_delta.is_zero() || count_roots(&b.g_delta, &Domain::AllReals).is_ok_and(|n| n > 0),
        Err(_) => true,
    }
}

/// Necessary condition for weak optimality of an entanglement witness with
/// `c1 > 0`, `c6 > 0`: `g_Δ` must have a real root.
pub fn weak_optimality_necessary(x: &BipartiteHermitian) -> Result<bool, ClassifyError> {
    let c = c_coefficients(x)?;
    if !(c.c1 > num_traits::Zero::zero() && c.c6 > num_traits::Zero::zero()) {
        return Err(ClassifyError::Precondition("c1 > 0 and c6 > 0 required"));
    }
    match classify(x)? {
        Verdict::EntanglementWitness { weakly_optimal_possible } => Ok(weakly_optimal_possible),
        _ => Err(ClassifyError::Precondition("not an entanglement witness")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_traits::{One, Zero};
    use crate::scalar::GaussRational;

    #[test]
    fn canonical_verdicts() {
        assert!(matches!(classify(&BipartiteHermitian::swap(2)).unwrap(), Verdict::EntanglementWitness { .. }));
        assert_eq!(classify(&BipartiteHermitian::identity(2, 2)).unwrap(), Verdict::PositiveSemidefinite);
        let d = BipartiteHermitian::diagonal(2, 2, &[int(1), int(1), int(1), int(-1)]);
        match classify(&d).unwrap() {
            Verdict::NotBlockPositive { certificate } => {
                let e2 = vec![GaussRational::zero(), GaussRational::one()];
                assert_eq!(certificate.v, e2);
                assert_eq!(certificate.w, e2);
                assert_eq!(certificate.value, int(-1));
            }
            v => panic!("unexpected {v:?}"),
        }
        let neg = BipartiteHermitian::identity(2, 2).scale(&int(-1));
        assert_eq!(classify(&neg).unwrap(), Verdict::NotWitnessMultiNegative);
        assert!(refute(&neg).unwrap().is_some());
        assert!(classify(&BipartiteHermitian::identity(3, 2)).is_err());
    }

    #[test]
    fn swap_g_delta_degenerate() {
        // c1 = c6 = 0 for the flip: weak optimality cannot be excluded
        assert_eq!(
            classify(&BipartiteHermitian::swap(2)).unwrap(),
            Verdict::EntanglementWitness { weakly_optimal_possible: true }
        );
        assert!(weak_optimality_necessary(&BipartiteHermitian::swap(2)).is_err());
    }
}
