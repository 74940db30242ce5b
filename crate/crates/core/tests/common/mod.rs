#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use witnessgate::groebner::MultiPoly;
use witnessgate::scalar::{gauss, int, rat};
use witnessgate::{BipartiteHermitian, GaussRational, Rational};

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Vec<GaussRational>> {
    let mut q = || rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    let mut rows = vec![vec![GaussRational::zero(); n]; n];
    for i in 0..n {
        rows[i][i] = gauss(q(), Rational::zero());
        for j in i + 1..n {
            let z = gauss(q(), q());
            rows[j][i] = z.conj();
            rows[i][j] = z;
        }
    }
    rows
}

pub fn random_matrix(rng: &mut ChaCha8Rng, da: usize, db: usize, bound: i64) -> BipartiteHermitian {
    BipartiteHermitian::new(da, db, random_hermitian(rng, da * db, bound)).unwrap()
}

pub fn gram(a: &[Vec<GaussRational>]) -> Vec<Vec<GaussRational>> {
    let n = a.len();
    let mut m = vec![vec![GaussRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = (0..n).fold(GaussRational::zero(), |acc, k| acc + a[k][i].conj() * &a[k][j]);
        }
    }
    m
}

/// `P/s + Q^Γ − δ·1` with `P` a small PSD matrix, `Q = |ψ><ψ|` and `Γ` the
/// partial transpose on the second factor. For `δ = 0` this is
/// block-positive; larger `δ` pushes it across the boundary.
pub fn decomposable(rng: &mut ChaCha8Rng, da: usize, db: usize, delta: Rational) -> BipartiteHermitian {
    let n = da * db;
    let mut p = gram(&random_hermitian(rng, n, 2));
    let scale = GaussRational::new(rat(1, rng.gen_range(4..=40)), Rational::zero());
    let psi: Vec<GaussRational> =
        (0..n).map(|_| gauss(rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1))).collect();
    for i in 0..da {
        for j in 0..db {
            for ip in 0..da {
                for jp in 0..db {
                    // (Q^Γ)_{ij,i'j'} = Q_{ij',i'j}
                    let q = &psi[i * db + jp] * psi[ip * db + j].conj();
                    let cell = &mut p[i * db + j][ip * db + jp];
                    *cell = &*cell * &scale + q;
                }
            }
        }
    }
    for (i, row) in p.iter_mut().enumerate() {
        row[i] = &row[i] - GaussRational::new(delta.clone(), Rational::zero());
    }
    BipartiteHermitian::new(da, db, p).unwrap()
}

/// Polynomial in `k` (variable 1 of 2) through the given points by Lagrange
/// interpolation.
fn interpolate(pts: &[(Rational, Rational)]) -> MultiPoly {
    let k = MultiPoly::var(2, 1);
    let mut out = MultiPoly::zero(2);
    for (i, (xi, ki)) in pts.iter().enumerate() {
        let mut basis = MultiPoly::constant(2, xi.clone());
        for (j, (_, kj)) in pts.iter().enumerate() {
            if i != j {
                let lin = k.clone() - MultiPoly::constant(2, kj.clone());
                basis = (&basis * &lin).scale(&(ki - kj).recip());
            }
        }
        out = out + basis;
    }
    out
}

/// Generators of the ideal of a finite point set in `(x, k)`, scrambled by a
/// unimodular transformation so the input is not already a basis.
pub fn toy_ideal(rng: &mut ChaCha8Rng) -> (Vec<MultiPoly>, Vec<Rational>) {
    let n = rng.gen_range(1..=4);
    let mut ks: Vec<Rational> = Vec::new();
    while ks.len() < n {
        let k = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    let pts: Vec<(Rational, Rational)> = ks.iter().map(|k| (rat(rng.gen_range(-5..=5), 1), k.clone())).collect();
    let (x, k) = (MultiPoly::var(2, 0), MultiPoly::var(2, 1));
    let f1 = x.clone() - interpolate(&pts);
    let f2 = ks.iter().fold(MultiPoly::constant(2, Rational::one()), |acc, ki| {
        &acc * &(k.clone() - MultiPoly::constant(2, ki.clone()))
    });
    let a = int(rng.gen_range(1..=3));
    let b = int(rng.gen_range(1..=3));
    let h1 = f1 + (&k * &f2).scale(&a);
    let h2 = f2 + (&x * &h1).scale(&b);
    let h3 = &x * &h1 + &k * &h2;
    (vec![h1, h2, h3], ks)
}
