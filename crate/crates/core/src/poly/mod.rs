//! Dense univariate polynomials over an exact ordered field.

mod logic;
mod roots;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{format_rational, Field, QuadSurd, Rational, Sign};

pub use logic::{
    eval_alternative, find_negative_point, generate_mesh, precedence, table_b1_case, Alternative,
    IntervalStatus, SignCase,
};
pub use roots::{
    cauchy_bound, count_roots, multiplicity_sequence, multiplicity_sequence_in, nonneg,
    odd_multiplicity_part, squarefree_part, MultiplicitySequence,
};
pub use sturm::{sturm_chain, SturmChain};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    Constant,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("empty interval: lo must be below hi")]
    EmptyInterval,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Open interval `(lo, hi)` with rational endpoints, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, PolyError> {
        if lo < hi {
            Ok(RationalInterval { lo, hi })
        } else {
            Err(PolyError::EmptyInterval)
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo < t && t < &self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    AllReals,
    Interval(RationalInterval),
}

impl From<RationalInterval> for Domain {
    fn from(iv: RationalInterval) -> Self {
        Domain::Interval(iv)
    }
}

/// Polynomial with coefficients stored lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.iter().cloned().map(F::from_rational).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// `c·t^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `t - r`
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => {
                let inv = F::one() / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_rational(&self, t: &Rational) -> F {
        self.eval(&F::from_rational(t.clone()))
    }

    pub fn sign_at(&self, t: &Rational) -> Sign {
        self.eval_rational(t).sign()
    }

    pub fn is_root(&self, t: &Rational) -> bool {
        self.sign_at(t) == Sign::Zero
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "division by the zero polynomial");
        if self.coeffs.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let inv_lead = F::one() / divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top * &inv_lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d;
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// A positive multiple of `self mod divisor` with small coefficients.
    pub fn scaled_rem(&self, divisor: &Self) -> Self {
        UniPoly::new(F::scaled_rem(&self.coeffs, &divisor.coeffs))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `p(c·t)`
    pub fn scale_var(&self, c: &F) -> Self {
        let mut factor = F::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * &factor);
            factor = factor * c;
        }
        Self::new(coeffs)
    }

    /// `p(q(t))`
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// Coefficient list reversed with respect to `t^n`, `n = deg`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplicity of `t = r` as a root (0 when `r` is not a root).
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear_root(F::from_rational(r.clone()));
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return m;
            }
            p = q;
            m += 1;
        }
    }

    /// Removes every factor `(t - r)` for the given rational points.
    pub fn strip_roots(&self, points: &[&Rational]) -> Self {
        let mut p = self.clone();
        for r in points {
            let lin = Self::linear_root(F::from_rational((*r).clone()));
            loop {
                let (q, rem) = p.div_rem(&lin);
                if !rem.is_zero() || p.is_zero() {
                    break;
                }
                p = q;
            }
        }
        p
    }
}

impl UniPoly<Rational> {
    pub fn to_surd(&self) -> UniPoly<QuadSurd> {
        self.map(|c| QuadSurd::rational(c.clone()))
    }
}

impl UniPoly<QuadSurd> {
    /// The polynomial as a rational one, if every surd part vanishes.
    pub fn to_rational(&self) -> Option<UniPoly<Rational>> {
        let coeffs: Option<Vec<Rational>> =
            self.coeffs.iter().map(|c| c.as_rational().cloned()).collect();
        coeffs.map(UniPoly::new)
    }
}

/// Monic greatest common divisor by Euclid's algorithm.
pub fn poly_gcd<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> UniPoly<F> {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.scaled_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

impl<F: Field> Zero for UniPoly<F> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for UniPoly<F> {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl<'a, F: Field> Add<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Sub<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, F: Field> Mul<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        UniPoly::new(out)
    }
}

impl<F: Field> Add for UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: UniPoly<F>) -> UniPoly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: UniPoly<F>) -> UniPoly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: UniPoly<F>) -> UniPoly<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -self.clone()
    }
}

impl<F: Field + fmt::Display> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·t")?,
                _ => write!(f, "({c})·t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Renders rational coefficients in the scalar grammar, lowest degree first.
pub fn format_coeffs(p: &UniPoly<Rational>) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}
