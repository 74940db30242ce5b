//! Hermitian operators on `C^dA ⊗ C^dB` with Gaussian-rational entries.
//!
//! Flat index of the tensor index `(i, j)` (both 1-based, `i` on the first
//! factor) is `(i-1)·dB + (j-1)`.

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::poly::{count_roots, Domain, RationalInterval, UniPoly};
use crate::scalar::{parse_gauss, GaussExt, GaussRational, Rational};
use crate::RatPoly;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("malformed matrix: {0}")]
    Malformed(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not Hermitian: entry ({row}, {col}) is not the conjugate of ({col}, {row})")]
    NotHermitian { row: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteHermitian {
    da: usize,
    db: usize,
    entries: Vec<GaussRational>,
}

#[derive(Deserialize)]
struct MatrixFile {
    #[serde(rename = "dA")]
    da: usize,
    #[serde(rename = "dB")]
    db: usize,
    entries: Vec<Vec<String>>,
}

impl BipartiteHermitian {
    /// Builds and validates a matrix from rows.
    pub fn new(da: usize, db: usize, rows: Vec<Vec<GaussRational>>) -> Result<Self, MatrixError> {
        let n = da * db;
        if n == 0 {
            return Err(MatrixError::Shape("dimensions must be positive".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::Shape(format!("expected {n}x{n} entries for dA={da}, dB={db}")));
        }
        let entries: Vec<GaussRational> = rows.into_iter().flatten().collect();
        for r in 0..n {
            for c in r..n {
                if entries[r * n + c] != entries[c * n + r].conj() {
                    return Err(MatrixError::NotHermitian { row: r, col: c });
                }
            }
        }
        Ok(BipartiteHermitian { da, db, entries })
    }

    pub fn from_json(text: &str) -> Result<Self, MatrixError> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| MatrixError::Malformed(e.to_string()))?;
        let rows = file
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_gauss(s).map_err(|e| MatrixError::Malformed(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(file.da, file.db, rows)
    }

    pub fn identity(da: usize, db: usize) -> Self {
        let n = da * db;
        Self::diagonal(da, db, &vec![Rational::one(); n])
    }

    pub fn diagonal(da: usize, db: usize, diag: &[Rational]) -> Self {
        let n = da * db;
        assert_eq!(diag.len(), n);
        let mut entries = vec![GaussRational::zero(); n * n];
        for (i, d) in diag.iter().enumerate() {
            entries[i * n + i] = GaussRational::real(d.clone());
        }
        BipartiteHermitian { da, db, entries }
    }

    /// The flip operator `|ij> -> |ji>` on `C^d ⊗ C^d`.
    pub fn swap(d: usize) -> Self {
        let n = d * d;
        let mut entries = vec![GaussRational::zero(); n * n];
        for i in 0..d {
            for j in 0..d {
                entries[(j * d + i) * n + (i * d + j)] = GaussRational::one();
            }
        }
        BipartiteHermitian { da: d, db: d, entries }
    }

    pub fn da(&self) -> usize {
        self.da
    }

    pub fn db(&self) -> usize {
        self.db
    }

    pub fn order(&self) -> usize {
        self.da * self.db
    }

    pub fn entry(&self, r: usize, c: usize) -> &GaussRational {
        &self.entries[r * self.order() + c]
    }

    /// `X_{ij,i'j'}` with 1-based tensor indices.
    pub fn elem(&self, i: usize, j: usize, ip: usize, jp: usize) -> &GaussRational {
        let r = (i - 1) * self.db + (j - 1);
        let c = (ip - 1) * self.db + (jp - 1);
        self.entry(r, c)
    }

    pub fn rows(&self) -> Vec<Vec<GaussRational>> {
        self.entries.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let f = GaussRational::real(s.clone());
        BipartiteHermitian {
            da: self.da,
            db: self.db,
            entries: self.entries.iter().map(|e| e * &f).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.order()).map(|i| self.entry(i, i).re.clone()).sum()
    }

    /// `(X_w)_{ii'} = Σ X_{ij,i'j'} conj(w_j) w_{j'}`, a `dA × dA` matrix.
    pub fn project(&self, w: &[GaussRational]) -> Vec<Vec<GaussRational>> {
        assert_eq!(w.len(), self.db);
        let mut out = vec![vec![GaussRational::zero(); self.da]; self.da];
        for (i, row) in out.iter_mut().enumerate() {
            for (ip, cell) in row.iter_mut().enumerate() {
                let mut acc = GaussRational::zero();
                for j in 0..self.db {
                    for jp in 0..self.db {
                        let x = self.entry(i * self.db + j, ip * self.db + jp);
                        if x.is_zero() {
                            continue;
                        }
                        acc += x * &w[j].conj() * &w[jp];
                    }
                }
                *cell = acc;
            }
        }
        out
    }

    /// `<v⊗w|X|v⊗w>`, exactly.
    pub fn expectation(&self, v: &[GaussRational], w: &[GaussRational]) -> Rational {
        let m = self.project(w);
        quadratic_form(&m, v)
    }

    /// `det(λI - X)` by the Faddeev–LeVerrier recursion. The coefficients are
    /// real for Hermitian input.
    pub fn charpoly(&self) -> RatPoly {
        let n = self.order();
        let x = self.rows();
        let mut coeffs = vec![GaussRational::zero(); n + 1];
        coeffs[n] = GaussRational::one();
        let mut m = vec![vec![GaussRational::zero(); n]; n];
        for k in 1..=n {
            // M_k = X M_{k-1} + c_{n-k+1} I
            let mut next = mat_mul(&x, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] = &row[i] + &coeffs[n - k + 1];
            }
            let xm = mat_mul(&x, &next);
            let tr: GaussRational = (0..n).map(|i| xm[i][i].clone()).fold(GaussRational::zero(), |a, b| a + b);
            coeffs[n - k] = -tr / GaussRational::real(Rational::from_integer((k as i64).into()));
            m = next;
        }
        debug_assert!(coeffs.iter().all(|c| c.is_real()));
        UniPoly::new(coeffs.into_iter().map(|c| c.re).collect())
    }

    /// Counts `(negative, zero, positive)` eigenvalues with multiplicity.
    pub fn eigen_signature(&self) -> (usize, usize, usize) {
        eigen_signature_of(&self.charpoly())
    }
}

/// Eigenvalue sign counts from a characteristic polynomial with only real
/// roots. Zero multiplicity is the number of trailing zero coefficients;
/// negative roots are counted level by level through the gcd tower.
pub fn eigen_signature_of(p: &RatPoly) -> (usize, usize, usize) {
    let n = p.degree().unwrap_or(0);
    let n_zero = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let q = UniPoly::new(p.coeffs()[n_zero..].to_vec());
    let mut n_neg = 0;
    if !q.is_constant() {
        let b = crate::poly::cauchy_bound(&q);
        let iv = Domain::Interval(RationalInterval::new(-b, Rational::zero()).expect("b > 0"));
        let mut level = q.clone();
        while !level.is_constant() {
            n_neg += count_roots(&level, &iv).expect("endpoints are not roots");
            level = crate::poly::poly_gcd(&level, &level.derivative());
        }
    }
    (n_neg, n_zero, n - n_neg - n_zero)
}

/// `v† M v` for Hermitian `M`; the result is real.
pub fn quadratic_form(m: &[Vec<GaussRational>], v: &[GaussRational]) -> Rational {
    let mut acc = GaussRational::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() || v[i].is_zero() || v[j].is_zero() {
                continue;
            }
            acc += v[i].conj() * x * &v[j];
        }
    }
    debug_assert!(acc.is_real());
    acc.re
}

fn mat_mul(a: &[Vec<GaussRational>], b: &[Vec<GaussRational>]) -> Vec<Vec<GaussRational>> {
    let n = a.len();
    let mut out = vec![vec![GaussRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &a[i][k] * &b[k][j];
            }
        }
    }
    out
}
