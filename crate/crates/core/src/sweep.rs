//! Parameter sweeps over the test families.

use rayon::prelude::*;

use crate::families::Family;
use crate::groebner::{sufficient_block_positive, GroebnerCaps, SufficientVerdict};
use crate::oracle::{estimate_mu, lambda_min, OracleOptions};
use crate::qudit::{necessary_block_positive, NecessaryVerdict};
use crate::scalar::Rational;
use crate::witness::classify;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub a: Rational,
    pub lambda_min: f64,
    pub mu_hat: f64,
    /// Only for `2 ⊗ 2` families.
    pub verdict_exact: Option<String>,
    pub necessary_verdict: String,
    pub sufficient_verdict: String,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error("step must be positive")]
    Step,
    #[error("empty range: from > to")]
    Range,
}

/// `from, from + step, …` up to and including `to` when it lies on the grid.
pub fn grid(from: &Rational, to: &Rational, step: &Rational) -> Result<Vec<Rational>, SweepError> {
    if *step <= Rational::from_integer(0.into()) {
        return Err(SweepError::Step);
    }
    if from > to {
        return Err(SweepError::Range);
    }
    let mut out = Vec::new();
    let mut a = from.clone();
    while a <= *to {
        out.push(a.clone());
        a += step;
    }
    Ok(out)
}

pub fn sweep_row(family: Family, a: &Rational, opts: &OracleOptions, caps: &GroebnerCaps) -> SweepRow {
    let x = family.build(a);
    let est = estimate_mu(&x, opts);
    let verdict_exact = match family {
        Family::E => Some(classify(&x).map_or_else(|e| format!("error: {e}"), |v| v.name().to_string())),
        Family::F => None,
    };
    let necessary_verdict = match necessary_block_positive(&x) {
        Ok(o) if o.verdict == NecessaryVerdict::Fails => "Fails".to_string(),
        Ok(_) => "Inconclusive".to_string(),
        Err(e) => format!("error: {e}"),
    };
    let sufficient_verdict = match sufficient_block_positive(&x, caps).verdict {
        SufficientVerdict::BlockPositive => "BlockPositive",
        SufficientVerdict::Inconclusive => "Inconclusive",
    }
    .to_string();
    SweepRow { a: a.clone(), lambda_min: lambda_min(&x), mu_hat: est.mu_hat, verdict_exact, necessary_verdict, sufficient_verdict }
}

/// One row per grid point, in grid order whatever the completion order.
pub fn sweep(
    family: Family,
    from: &Rational,
    to: &Rational,
    step: &Rational,
    opts: &OracleOptions,
    caps: &GroebnerCaps,
) -> Result<Vec<SweepRow>, SweepError> {
    let points = grid(from, to, step)?;
    Ok(points.par_iter().map(|a| sweep_row(family, a, opts, caps)).collect())
}
