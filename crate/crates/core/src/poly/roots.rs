use num_traits::{One, Zero};

use super::sturm::build_chain;
use super::{poly_gcd, Domain, PolyError, RationalInterval, UniPoly};
use crate::scalar::{midpoint, Field, Rational, Sign};

/// `f / gcd(f, f')`: same real roots, each simple. Leading coefficient kept.
pub fn squarefree_part<F: Field>(f: &UniPoly<F>) -> UniPoly<F> {
    if f.is_constant() {
        return f.clone();
    }
    let g = poly_gcd(f, &f.derivative());
    f.exact_div(&g)
}

/// `1 + max |a_i| / |a_n|`, a strict bound on the absolute value of every
/// real root. Over `Q(√D)` rational enclosures of the magnitudes are used, so
/// the result is an upper bound of the exact value.
pub fn cauchy_bound<F: Field>(f: &UniPoly<F>) -> Rational {
    let n = match f.degree() {
        Some(n) if n > 0 => n,
        _ => return Rational::one(),
    };
    let (lead_lo, _) = f.coeffs()[n].abs_bounds();
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs_bounds().1)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max / lead_lo
}

/// Distinct real roots of a squarefree polynomial in `(lo, hi)`, endpoints
/// assumed not to be roots.
pub(crate) fn count_squarefree_in<F: Field>(g: &UniPoly<F>, lo: &Rational, hi: &Rational) -> usize {
    if g.is_constant() {
        return 0;
    }
    let chain = build_chain(g, true);
    chain.variations_at(lo).saturating_sub(chain.variations_at(hi))
}

/// Number of distinct real roots in the domain (Sturm's theorem).
pub fn count_roots<F: Field>(f: &UniPoly<F>, domain: &Domain) -> Result<usize, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let g = squarefree_part(f);
    if let Domain::Interval(iv) = domain {
        for e in [iv.lo(), iv.hi()] {
            if g.is_root(e) {
                return Err(PolyError::EndpointIsRoot(crate::scalar::format_rational(e)));
            }
        }
    }
    Ok(count_squarefree(&g, domain))
}

/// Roots of a squarefree polynomial in the domain, interval endpoints assumed
/// not to be roots. On the whole line the chain is read at `±∞`, which is
/// the same as reading it at `±B` for a Cauchy bound `B`.
fn count_squarefree<F: Field>(g: &UniPoly<F>, domain: &Domain) -> usize {
    if g.is_constant() {
        return 0;
    }
    match domain {
        Domain::AllReals => {
            let chain = build_chain(g, true);
            chain.variations_at_infinity(false).saturating_sub(chain.variations_at_infinity(true))
        }
        Domain::Interval(iv) => count_squarefree_in(g, iv.lo(), iv.hi()),
    }
}

/// Counts `d_k` of distinct real roots of the gcd tower `f_1 = f`,
/// `f_{k+1} = gcd(f_k, f_k')`, truncated before the first zero count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySequence {
    pub d: Vec<usize>,
}

impl MultiplicitySequence {
    /// True iff every counted root has even multiplicity, i.e.
    /// `d_{k-1} = d_k` for each even `k`, reading `d` as zero past its end.
    pub fn all_even(&self) -> bool {
        self.d
            .iter()
            .step_by(2)
            .enumerate()
            .all(|(j, &odd)| odd == self.d.get(2 * j + 1).copied().unwrap_or(0))
    }
}

fn gcd_tower<F: Field>(f: &UniPoly<F>) -> Vec<UniPoly<F>> {
    let mut tower = Vec::new();
    let mut cur = f.clone();
    while !cur.is_constant() {
        let next = poly_gcd(&cur, &cur.derivative());
        tower.push(cur);
        cur = next;
    }
    tower
}

pub fn multiplicity_sequence<F: Field>(f: &UniPoly<F>) -> MultiplicitySequence {
    multiplicity_sequence_in(f, &Domain::AllReals)
}

/// As [`multiplicity_sequence`], counting only roots inside the domain.
/// Roots sitting on an interval endpoint are not inside and are ignored.
pub fn multiplicity_sequence_in<F: Field>(f: &UniPoly<F>, domain: &Domain) -> MultiplicitySequence {
    let mut d = Vec::new();
    if f.is_zero() {
        return MultiplicitySequence { d };
    }
    let f = match domain {
        Domain::AllReals => f.clone(),
        Domain::Interval(iv) => f.strip_roots(&[iv.lo(), iv.hi()]),
    };
    let tower = gcd_tower(&f);
    for (k, level) in tower.iter().enumerate() {
        // squarefree part of this level is level / next level
        let sqf = match tower.get(k + 1) {
            Some(next) => level.exact_div(next),
            None => level.exact_div(&poly_gcd(level, &level.derivative())),
        };
        let n = count_squarefree(&sqf, domain);
        if n == 0 {
            break;
        }
        d.push(n);
    }
    MultiplicitySequence { d }
}

/// Decides `f(t) >= 0` on the whole line or on an open interval (where the
/// endpoint values are required to be nonnegative as well).
pub fn nonneg<F: Field>(f: &UniPoly<F>, domain: &Domain) -> bool {
    if f.is_zero() {
        return true;
    }
    match domain {
        Domain::AllReals => {
            if f.is_constant() {
                return !f.leading().is_neg();
            }
            f.degree().unwrap().is_multiple_of(2)
                && f.leading().is_pos()
                && multiplicity_sequence(f).all_even()
        }
        Domain::Interval(iv) => {
            if f.sign_at(iv.lo()).is_negative() || f.sign_at(iv.hi()).is_negative() {
                return false;
            }
            if !multiplicity_sequence_in(f, domain).all_even() {
                return false;
            }
            // even-multiplicity roots only: the sign is constant off the roots
            interior_sample(f, iv).is_some_and(|t| f.sign_at(&t) == Sign::Positive)
        }
    }
}

/// A point of `(lo, hi)` that is not a root of `f` (nonzero `f`).
pub(crate) fn interior_sample<F: Field>(f: &UniPoly<F>, iv: &RationalInterval) -> Option<Rational> {
    let mut t = midpoint(iv.lo(), iv.hi());
    for _ in 0..4096 {
        if !f.is_root(&t) {
            return Some(t);
        }
        t = midpoint(&t, iv.hi());
    }
    None
}

/// `σ_f`: product of the factors of `f` whose roots have odd multiplicity,
/// made monic.
pub fn odd_multiplicity_part<F: Field>(f: &UniPoly<F>) -> UniPoly<F> {
    if f.is_zero() {
        return f.clone();
    }
    let reduced: Vec<UniPoly<F>> = gcd_tower(f).iter().map(squarefree_part).collect();
    let mut sigma = UniPoly::one();
    for (k, fk) in reduced.iter().enumerate() {
        if k % 2 != 0 {
            continue;
        }
        let delta = match reduced.get(k + 1) {
            Some(next) => fk.exact_div(next),
            None => fk.clone(),
        };
        sigma = &sigma * &delta;
    }
    sigma.monic()
}
