//! Sufficient block-positivity test: nonnegativity of every elementary
//! symmetric function of the projected operator's spectrum on the unit
//! sphere, decided by lex Gröbner elimination of a critical-value system.

mod buchberger;
mod poly;

pub use buchberger::{buchberger, normal_form, CapExceeded, GroebnerBasis, GroebnerCaps, MonomialOrder};
pub use poly::{Monomial, MultiPoly};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::matrix::BipartiteHermitian;
use crate::poly::{count_roots, Domain, RationalInterval};
use crate::qudit::{pair_c_coefficients, PairSelector};
use crate::scalar::{int, rat, GaussRational, Rational};
use crate::witness::{det_nonneg_all_w, trace_condition, trace_tau_xi, CCoefficients};
use crate::RatPoly;
use poly::ComplexPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("minor order {n} outside 1..={max}")]
    InvalidOrder { n: usize, max: usize },
}

/// Number of real variables describing `w ∈ C^dB` with the first imaginary
/// part fixed to zero.
pub fn w_variable_count(db: usize) -> usize {
    2 * db - 1
}

/// `(X_w)_{ii'} = Σ X_{ij,i'j'} P_{jj'}` for a symbolic `P`.
fn project_symbolic(x: &BipartiteHermitian, p: &[Vec<ComplexPoly>]) -> Vec<Vec<ComplexPoly>> {
    let nvars = p[0][0].re.nvars();
    (0..x.da())
        .map(|i| {
            (0..x.da())
                .map(|ip| {
                    let mut acc = ComplexPoly::zero(nvars);
                    for (j, row) in p.iter().enumerate() {
                        for (jp, pj) in row.iter().enumerate() {
                            let e: &GaussRational = x.elem(i + 1, j + 1, ip + 1, jp + 1);
                            if !e.is_zero() {
                                acc = acc.add(&pj.scale(&e.re, &e.im));
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn det(m: &[Vec<ComplexPoly>], rows: &[usize], cols: &[usize]) -> ComplexPoly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let nvars = m[0][0].re.nvars();
    let mut acc = ComplexPoly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        let e = &m[rows[0]][c];
        if e.re.is_zero() && e.im.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&o| o != c).collect();
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        acc = acc.add(&e.mul(&det(m, &rows[1..], &rest)).scale(&sign, &Rational::zero()));
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Sum of the order-`n` principal minors of a Hermitian polynomial matrix.
fn principal_minor_sum(m: &[Vec<ComplexPoly>], n: usize) -> MultiPoly {
    let nvars = m[0][0].re.nvars();
    let mut acc = ComplexPoly::zero(nvars);
    for s in subsets(m.len(), n) {
        acc = acc.add(&det(m, &s, &s));
    }
    debug_assert!(acc.im.is_zero(), "principal minors of a Hermitian matrix are real");
    acc.re
}

/// `M_n(w)`: sum of the order-`n` principal minors of `X_w` (order `dA`,
/// `w ∈ C^dB`). Variables are `w_1ʳ, w_2ʳ, w_2ⁱ, …, w_dBʳ, w_dBⁱ, λ, k`.
pub fn minors_sum(x: &BipartiteHermitian, n: usize) -> Result<MultiPoly, GroebnerError> {
    if n == 0 || n > x.da() {
        return Err(GroebnerError::InvalidOrder { n, max: x.da() });
    }
    let db = x.db();
    let nvars = w_variable_count(db) + 2;
    let comp = |j: usize| -> ComplexPoly {
        let re = MultiPoly::var(nvars, if j == 0 { 0 } else { 2 * j - 1 });
        let im = if j == 0 { MultiPoly::zero(nvars) } else { MultiPoly::var(nvars, 2 * j) };
        ComplexPoly { re, im }
    };
    let w: Vec<ComplexPoly> = (0..db).map(comp).collect();
    let p: Vec<Vec<ComplexPoly>> = (0..db).map(|j| (0..db).map(|jp| w[j].conj().mul(&w[jp])).collect()).collect();
    Ok(principal_minor_sum(&project_symbolic(x, &p), n))
}

fn sphere(nvars: usize, nw: usize) -> MultiPoly {
    (0..nw).fold(MultiPoly::constant(nvars, -Rational::one()), |acc, v| {
        let x = MultiPoly::var(nvars, v);
        acc + &x * &x
    })
}

/// Partials of `L = M + k² + λ·F`, `F = |w|² − 1`, with respect to every
/// w-variable, then `λ`, then `k`.
pub fn lagrange_system(m: &MultiPoly) -> Vec<MultiPoly> {
    let nvars = m.nvars();
    let nw = nvars - 2;
    let (lam, k) = (MultiPoly::var(nvars, nw), MultiPoly::var(nvars, nw + 1));
    let l = m.clone() + &k * &k + &lam * &sphere(nvars, nw);
    (0..nvars).map(|v| l.derivative(v)).collect()
}

/// Critical points of `m` on the unit sphere of its first `nw` variables,
/// with the last variable `K` standing for the critical value `−m`:
/// `∂m/∂v + 2λv`, `|v|² − 1`, `m + K`.
fn critical_value_system(m: &MultiPoly, nw: usize) -> Vec<MultiPoly> {
    let nvars = m.nvars();
    let lam = MultiPoly::var(nvars, nw);
    let mut gens: Vec<MultiPoly> =
        (0..nw).map(|v| m.derivative(v) + (&lam * &MultiPoly::var(nvars, v)).scale(&int(2))).collect();
    gens.push(sphere(nvars, nw));
    gens.push(m.clone() + MultiPoly::var(nvars, nw + 1));
    gens
}

/// `M_n` for `dB = 2` in Bloch coordinates `(x, y, z, λ, K)`, using
/// `w̄ wᵀ = ½ [[1+z, x+iy], [x−iy, 1−z]]` on unit `w`.
pub fn bloch_minors_sum(x: &BipartiteHermitian, n: usize) -> Result<MultiPoly, GroebnerError> {
    if n == 0 || n > x.da() {
        return Err(GroebnerError::InvalidOrder { n, max: x.da() });
    }
    assert_eq!(x.db(), 2, "Bloch coordinates need a qubit factor");
    let nv = 5;
    let half = rat(1, 2);
    let v = |i: usize| MultiPoly::var(nv, i).scale(&half);
    let c = MultiPoly::constant(nv, half.clone());
    let p = vec![
        vec![ComplexPoly::real(c.clone() + v(2)), ComplexPoly { re: v(0), im: v(1) }],
        vec![ComplexPoly { re: v(0), im: -v(1) }, ComplexPoly::real(c - v(2))],
    ];
    Ok(principal_minor_sum(&project_symbolic(x, &p), n))
}

const MAX_ELIMINANT_DEGREE: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SufficientVerdict {
    BlockPositive,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderMethod {
    Trace,
    PairSum,
    Elimination,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OrderStatus {
    Holds,
    Fails,
    /// The eliminant has a positive root: a negative critical value may exist.
    NegativeCriticalValue,
    NoEliminant,
    Cap(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub n: usize,
    pub method: OrderMethod,
    pub status: OrderStatus,
    pub eliminant_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SufficientOutcome {
    pub verdict: SufficientVerdict,
    pub orders: Vec<OrderReport>,
}

/// `g(K)` with `K = 0` roots removed has no positive root.
pub fn no_positive_root(coeffs: &[Rational]) -> bool {
    let start = coeffs.iter().position(|c| !c.is_zero());
    let Some(start) = start else { return false };
    let g = RatPoly::from_rationals(&coeffs[start..]);
    if g.is_constant() {
        return true;
    }
    let lc = g.leading().abs();
    let bound = g.coeffs().iter().fold(Rational::zero(), |m, c| m.max(c.abs() / &lc)) + Rational::one();
    let iv = RationalInterval::new(Rational::zero(), bound).expect("0 < bound");
    count_roots(&g, &Domain::Interval(iv)).is_ok_and(|n| n == 0)
}

fn eliminate(m: &MultiPoly, nw: usize, extra: Vec<MultiPoly>, caps: &GroebnerCaps) -> (OrderStatus, Option<usize>) {
    let mut gens = critical_value_system(m, nw);
    gens.extend(extra);
    // The eliminant is the minimal polynomial of K modulo the ideal, which
    // is what the last element of a lex basis would be; a grevlex basis gets
    // there far faster.
    let basis = match buchberger(&gens, MonomialOrder::GrevLex, caps) {
        Ok(b) => b,
        Err(e) => return (OrderStatus::Cap(e.to_string()), None),
    };
    if basis.is_unit() {
        return (OrderStatus::NoEliminant, None);
    }
    let Some(g) = basis.minimal_polynomial_of_last(MAX_ELIMINANT_DEGREE) else {
        return (OrderStatus::NoEliminant, None);
    };
    let deg = g.len() - 1;
    if no_positive_root(&g) {
        (OrderStatus::Holds, Some(deg))
    } else {
        (OrderStatus::NegativeCriticalValue, Some(deg))
    }
}

fn check_order(x: &BipartiteHermitian, n: usize, caps: &GroebnerCaps) -> OrderReport {
    let nonneg = |b: bool| if b { OrderStatus::Holds } else { OrderStatus::Fails };
    if x.db() == 2 && n == 1 {
        let holds = trace_tau_xi(x).map(|td| trace_condition(&td)).unwrap_or(false);
        return OrderReport { n, method: OrderMethod::Trace, status: nonneg(holds), eliminant_degree: None };
    }
    if x.db() == 2 && n == 2 {
        let sum = PairSelector::all(x.da())
            .into_iter()
            .filter_map(|p| pair_c_coefficients(x, p).ok())
            .fold(CCoefficients::zero(), |acc, c| &acc + &c);
        let holds = det_nonneg_all_w(&sum).is_ok_and(|o| o.holds);
        return OrderReport { n, method: OrderMethod::PairSum, status: nonneg(holds), eliminant_degree: None };
    }
    let (status, eliminant_degree) = if x.db() == 2 {
        let m = bloch_minors_sum(x, n).expect("order in range");
        eliminate(&m, 3, vec![], caps)
    } else {
        // Euler's identity on the homogeneous M_n pins λ = n·K
        let m = minors_sum(x, n).expect("order in range");
        let nw = w_variable_count(x.db());
        let nvars = m.nvars();
        let euler = MultiPoly::var(nvars, nw) - MultiPoly::var(nvars, nw + 1).scale(&int(n as i64));
        eliminate(&m, nw, vec![euler], caps)
    };
    OrderReport { n, method: OrderMethod::Elimination, status, eliminant_degree }
}

/// `BlockPositive` when `M_n ≥ 0` on the unit sphere for every
/// `n = 1..=dA`, which forces `X_w ⪰ 0` for every `w`.
pub fn sufficient_block_positive(x: &BipartiteHermitian, caps: &GroebnerCaps) -> SufficientOutcome {
    let mut orders = Vec::new();
    for n in 1..=x.da() {
        let r = check_order(x, n, caps);
        let ok = r.status == OrderStatus::Holds;
        orders.push(r);
        if !ok {
            return SufficientOutcome { verdict: SufficientVerdict::Inconclusive, orders };
        }
    }
    SufficientOutcome { verdict: SufficientVerdict::BlockPositive, orders }
}
