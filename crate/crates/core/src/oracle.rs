//! Floating-point estimate of the minimal product-state expectation.
//!
//! The minimum of `tr(Xσ)` over separable states equals the minimum over pure
//! product vectors: the objective is linear and the extreme points of the
//! separable set are pure products. Only product vectors are searched here.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::matrix::BipartiteHermitian;
use crate::scalar::to_f64;

const MAX_ITERS: usize = 500;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleEstimate {
    pub mu_hat: f64,
    pub argmin_v: Vec<Complex64>,
    pub argmin_w: Vec<Complex64>,
    pub restarts: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOptions {
    pub restarts: usize,
    pub tol: f64,
    pub seed: u64,
}

impl OracleOptions {
    /// `8·dA·dB` random starts.
    pub fn for_shape(da: usize, db: usize) -> Self {
        OracleOptions { restarts: 8 * da * db, tol: 1e-12, seed: 0 }
    }
}

/// `X` as a dense complex matrix.
pub fn to_dense(x: &BipartiteHermitian) -> DMatrix<Complex64> {
    let n = x.order();
    DMatrix::from_fn(n, n, |r, c| {
        let e = x.entry(r, c);
        Complex64::new(to_f64(&e.re), to_f64(&e.im))
    })
}

struct Dense {
    m: DMatrix<Complex64>,
    da: usize,
    db: usize,
}

impl Dense {
    /// `(X_w)_{ii'} = Σ X_{ij,i'j'} conj(w_j) w_{j'}`
    fn project_b(&self, w: &DVector<Complex64>) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.da, self.da, |i, ip| {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.db {
                for jp in 0..self.db {
                    acc += self.m[(i * self.db + j, ip * self.db + jp)] * w[j].conj() * w[jp];
                }
            }
            acc
        })
    }

    /// `(X^v)_{jj'} = Σ X_{ij,i'j'} conj(v_i) v_{i'}`
    fn project_a(&self, v: &DVector<Complex64>) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.db, self.db, |j, jp| {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..self.da {
                for ip in 0..self.da {
                    acc += self.m[(i * self.db + j, ip * self.db + jp)] * v[i].conj() * v[ip];
                }
            }
            acc
        })
    }
}

/// Smallest eigenvalue and a unit eigenvector of a Hermitian matrix.
fn min_eig(m: DMatrix<Complex64>) -> (f64, DVector<Complex64>) {
    let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let (k, val) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |(bk, bv), (k, &v)| if v < bv { (k, v) } else { (bk, bv) });
    (val, eig.eigenvectors.column(k).into_owned())
}

struct Run {
    value: f64,
    v: DVector<Complex64>,
    w: DVector<Complex64>,
    converged: bool,
}

/// Alternating minimization from a starting `w`. The objective never
/// increases: each half-step minimizes exactly over one factor.
fn see_saw(d: &Dense, w0: DVector<Complex64>, tol: f64) -> Run {
    let mut w = w0.normalize();
    let (mut value, mut v) = min_eig(d.project_b(&w));
    for _ in 0..MAX_ITERS {
        let (_, w_next) = min_eig(d.project_a(&v));
        w = w_next;
        let (next, v_next) = min_eig(d.project_b(&w));
        v = v_next;
        let gain = value - next;
        value = value.min(next);
        if gain <= tol * (1.0 + value.abs()) {
            return Run { value, v, w, converged: true };
        }
    }
    Run { value, v, w, converged: false }
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> DVector<Complex64> {
    let v = DVector::from_fn(n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    if v.norm() < 1e-6 {
        DVector::from_fn(n, |i, _| Complex64::new(if i == 0 { 1.0 } else { 0.0 }, 0.0))
    } else {
        v.normalize()
    }
}

/// Starting points for `w`: every basis vector, the pairwise combinations
/// `e_j + e_k`, `e_j + i e_k` (a coarse grid), then seeded random vectors.
fn starts(db: usize, opts: &OracleOptions) -> Vec<DVector<Complex64>> {
    let e = |j: usize| DVector::from_fn(db, |i, _| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0));
    let mut out: Vec<DVector<Complex64>> = (0..db).map(e).collect();
    for j in 0..db {
        for k in j + 1..db {
            for phase in [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)] {
                out.push(e(j) + e(k) * phase);
            }
        }
    }
    out.extend((0..opts.restarts).map(|k| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64));
        random_unit(&mut rng, db)
    }));
    out
}

/// Best see-saw value over all starts. Deterministic for fixed options:
/// every start has its own seed and ties resolve to the earliest start.
pub fn estimate_mu(x: &BipartiteHermitian, opts: &OracleOptions) -> OracleEstimate {
    let d = Dense { m: to_dense(x), da: x.da(), db: x.db() };
    let starts = starts(x.db(), opts);
    let total = starts.len();
    let best = starts
        .into_par_iter()
        .enumerate()
        .map(|(k, w0)| (k, see_saw(&d, w0, opts.tol)))
        .reduce_with(|a, b| {
            if b.1.value < a.1.value || (b.1.value == a.1.value && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .expect("at least one start")
        .1;
    OracleEstimate {
        mu_hat: best.value,
        argmin_v: best.v.iter().copied().collect(),
        argmin_w: best.w.iter().copied().collect(),
        restarts: total,
        converged: best.converged,
    }
}

/// Smallest eigenvalue of `X` in floating point.
pub fn lambda_min(x: &BipartiteHermitian) -> f64 {
    min_eig(to_dense(x)).0
}
