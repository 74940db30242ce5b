//! Necessary block-positivity conditions for `d ⊗ 2` operators from the trace
//! and the order-2 principal minors of `X_w`.

use rayon::prelude::*;
use serde::Serialize;

use crate::matrix::{BipartiteHermitian, MatrixError};
use crate::witness::{
    c_coefficients_on, certificate_for_w, det_nonneg_all_w, trace_condition, trace_failure_w, trace_tau_xi,
    w_vector, CCoefficients, ClassifyError, DetCounterexample, ProductCertificate,
};

/// First-factor indices `1 <= l < k <= d` of a 2×2 principal block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairSelector {
    l: usize,
    k: usize,
}

impl PairSelector {
    pub fn new(l: usize, k: usize) -> Option<Self> {
        (l >= 1 && l < k).then_some(PairSelector { l, k })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// All pairs for dimension `d`, in lexicographic order.
    pub fn all(d: usize) -> Vec<PairSelector> {
        (1..=d).flat_map(|l| (l + 1..=d).map(move |k| PairSelector { l, k })).collect()
    }
}

/// c-coefficients of the determinant of the `(l, k)` block of `X_w`.
pub fn pair_c_coefficients(x: &BipartiteHermitian, sel: PairSelector) -> Result<CCoefficients, MatrixError> {
    if x.db() != 2 {
        return Err(MatrixError::Shape(format!("second factor must be 2, got {}", x.db())));
    }
    if sel.k > x.da() {
        return Err(MatrixError::Shape(format!("pair ({}, {}) out of range for d = {}", sel.l, sel.k, x.da())));
    }
    Ok(c_coefficients_on(x, sel.l, sel.k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NecessaryVerdict {
    Fails,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Locus {
    Trace,
    Pair(PairSelector),
    /// The sum of all pair determinants.
    Sum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NecessaryOutcome {
    pub verdict: NecessaryVerdict,
    pub violated: Option<Locus>,
    pub counterexample: Option<DetCounterexample>,
    pub certificate: Option<ProductCertificate>,
}

impl NecessaryOutcome {
    fn inconclusive() -> Self {
        NecessaryOutcome { verdict: NecessaryVerdict::Inconclusive, violated: None, counterexample: None, certificate: None }
    }
}

/// Trace condition, then every pair determinant, then their sum. The first
/// violation found yields `Fails` with a verified product certificate.
pub fn necessary_block_positive(x: &BipartiteHermitian) -> Result<NecessaryOutcome, ClassifyError> {
    let td = trace_tau_xi(x)?;
    if !trace_condition(&td) {
        let w = trace_failure_w(&td).ok_or(ClassifyError::Precondition("trace condition inconsistent"))?;
        let cert = certificate_for_w(x, w.to_vec())?;
        return Ok(NecessaryOutcome {
            verdict: NecessaryVerdict::Fails,
            violated: Some(Locus::Trace),
            counterexample: None,
            certificate: Some(cert),
        });
    }

    let pairs = PairSelector::all(x.da());
    let coeffs: Vec<CCoefficients> = pairs.iter().map(|&p| c_coefficients_on(x, p.l, p.k)).collect();
    let outcomes = pairs
        .par_iter()
        .zip(coeffs.par_iter())
        .map(|(&p, c)| det_nonneg_all_w(c).map(|o| (Locus::Pair(p), o)))
        .collect::<Result<Vec<_>, _>>()?;
    let failed = outcomes.into_iter().find(|(_, o)| !o.holds);
    let failed = match failed {
        Some(f) => Some(f),
        None => {
            let sum = coeffs.iter().fold(CCoefficients::zero(), |acc, c| &acc + c);
            let o = det_nonneg_all_w(&sum)?;
            (!o.holds).then_some((Locus::Sum, o))
        }
    };
    let Some((locus, outcome)) = failed else {
        return Ok(NecessaryOutcome::inconclusive());
    };
    let ce = outcome.counterexample.ok_or(ClassifyError::Precondition("failure without counterexample"))?;
    let cert = certificate_for_w(x, w_vector(ce.side, &ce.r, &ce.t).to_vec())?;
    Ok(NecessaryOutcome {
        verdict: NecessaryVerdict::Fails,
        violated: Some(locus),
        counterexample: Some(ce),
        certificate: Some(cert),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, GaussRational, Rational};
    use crate::witness::c_coefficients;
    use num_traits::Zero;

    #[test]
    fn selectors() {
        assert!(PairSelector::new(2, 2).is_none());
        assert!(PairSelector::new(0, 1).is_none());
        assert_eq!(PairSelector::all(3).len(), 3);
        assert!(pair_c_coefficients(&BipartiteHermitian::identity(3, 2), PairSelector::new(1, 4).unwrap()).is_err());
    }

    #[test]
    fn pair_coefficient_examples() {
        let id = BipartiteHermitian::identity(4, 2);
        let want = CCoefficients::from_parts(int(1), GaussRational::zero(), GaussRational::zero(), int(2), GaussRational::zero(), int(1));
        for p in PairSelector::all(4) {
            assert_eq!(pair_c_coefficients(&id, p).unwrap(), want);
        }
        let zero = BipartiteHermitian::diagonal(3, 2, &vec![Rational::zero(); 6]);
        assert!(pair_c_coefficients(&zero, PairSelector::new(1, 3).unwrap()).unwrap().is_zero());
        let s = BipartiteHermitian::swap(2);
        assert_eq!(pair_c_coefficients(&s, PairSelector::new(1, 2).unwrap()).unwrap(), c_coefficients(&s).unwrap());
    }

    #[test]
    fn necessary_examples() {
        let mut diag = vec![int(1); 6];
        diag[5] = int(-1);
        let x = BipartiteHermitian::diagonal(3, 2, &diag);
        let out = necessary_block_positive(&x).unwrap();
        assert_eq!(out.verdict, NecessaryVerdict::Fails);
        assert!(matches!(out.violated, Some(Locus::Pair(p)) if p.k() == 3));
        assert_eq!(out.certificate.unwrap().value, int(-1));
        let out = necessary_block_positive(&BipartiteHermitian::identity(3, 2)).unwrap();
        assert_eq!(out.verdict, NecessaryVerdict::Inconclusive);
        let out = necessary_block_positive(&BipartiteHermitian::identity(3, 2).scale(&int(-1))).unwrap();
        assert_eq!(out.violated, Some(Locus::Trace));
    }
}
