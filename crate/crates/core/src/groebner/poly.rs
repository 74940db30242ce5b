use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Exponent vector. The derived ordering is lex with variable 0 ranked
/// highest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Only the last variable occurs.
    pub fn in_last_only(&self) -> bool {
        let n = self.0.len();
        self.0[..n.saturating_sub(1)].iter().all(|&e| e == 0)
    }
}

/// Sparse polynomial over the rationals in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = m.clone();
                n.0[i] -= 1;
                out.add_term(n, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces variable `i` by the polynomial `q`.
    pub fn substitute(&self, i: usize, q: &MultiPoly) -> Self {
        let mut powers = vec![MultiPoly::constant(self.nvars, Rational::one())];
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty") * q;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[i] = 0;
            out = out + powers[e].mul_term(&rest, c);
        }
        out
    }

    /// Coefficients of a polynomial in the last variable only, lowest first.
    pub fn as_univariate_in_last(&self) -> Option<Vec<Rational>> {
        let last = self.nvars.checked_sub(1)?;
        if !self.terms.keys().all(Monomial::in_last_only) {
            return None;
        }
        let deg = self.terms.keys().map(|m| m.0[last]).max().unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.0[last] as usize] = c.clone();
        }
        Some(out)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &rhs.terms {
            out = out + self.mul_term(m, c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Polynomial with Gaussian-rational coefficients stored as real and
/// imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ComplexPoly {
    pub re: MultiPoly,
    pub im: MultiPoly,
}

impl ComplexPoly {
    pub fn zero(nvars: usize) -> Self {
        ComplexPoly { re: MultiPoly::zero(nvars), im: MultiPoly::zero(nvars) }
    }

    pub fn real(re: MultiPoly) -> Self {
        let n = re.nvars();
        ComplexPoly { re, im: MultiPoly::zero(n) }
    }

    pub fn conj(&self) -> Self {
        ComplexPoly { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn add(&self, o: &ComplexPoly) -> Self {
        ComplexPoly { re: self.re.clone() + o.re.clone(), im: self.im.clone() + o.im.clone() }
    }

    pub fn mul(&self, o: &ComplexPoly) -> Self {
        ComplexPoly {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, re: &Rational, im: &Rational) -> Self {
        ComplexPoly {
            re: self.re.scale(re) - self.im.scale(im),
            im: self.re.scale(im) + self.im.scale(re),
        }
    }
}
