use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultiPoly};
use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GroebnerCaps {
    pub max_pairs: usize,
    pub max_terms: usize,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps { max_pairs: 100_000, max_terms: 100_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CapExceeded {
    #[error("more than {0} S-pairs processed")]
    Pairs(usize),
    #[error("a polynomial exceeded {0} terms")]
    Terms(usize),
}

/// Variable 0 is ranked highest in both orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                let diff = a.exponents().iter().zip(b.exponents()).rev().find(|(x, y)| x != y);
                match diff {
                    Some((x, y)) => y.cmp(x),
                    None => Ordering::Equal,
                }
            }),
        }
    }
}

/// Reduced Gröbner basis, sorted by decreasing leading monomial. Under lex
/// an element in the last variable alone, if any, comes last.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<MultiPoly>,
    pairs_processed: usize,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    /// The basis element involving only the lowest-ranked variable. Under
    /// lex this generates the elimination ideal.
    pub fn eliminant(&self) -> Option<&MultiPoly> {
        self.generators.iter().rev().find(|g| g.terms().all(|(m, _)| m.in_last_only()))
    }

    /// The ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.terms().all(|(m, _)| m.degree() == 0))
    }

    /// Normal form modulo the basis.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        normal_form(p, &self.generators, self.order)
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| normal_form(&s_poly(&g[i], &g[j], self.order), g, self.order).is_zero())
        })
    }

    /// Monic generator of the ideal's intersection with `Q[last variable]`,
    /// found as the first linear dependency among the normal forms of its
    /// powers. `None` when no dependency exists up to `max_degree`.
    pub fn minimal_polynomial_of_last(&self, max_degree: usize) -> Option<Vec<Rational>> {
        if self.is_unit() {
            return Some(vec![Rational::one()]);
        }
        let n = self.nvars;
        let basis: Vec<IPoly> = self.generators.iter().map(|g| IPoly::from_rational(g, self.order)).collect();
        let refs: Vec<&IPoly> = basis.iter().collect();
        let last = MultiPoly::var(n, n - 1);
        // echelon rows: (pivot monomial, row over monomials, combination of powers)
        let mut rows: Vec<(Monomial, Vec<(Monomial, Rational)>, Vec<Rational>)> = Vec::new();
        let mut power = MultiPoly::constant(n, Rational::one());
        for d in 0..=max_degree {
            let (nf, scale) = reduce_int(IPoly::from_rational(&power, self.order), &refs, usize::MAX, self.order).ok()?;
            let mut vec: Vec<(Monomial, Rational)> =
                nf.terms.into_iter().map(|(m, c)| (m, Rational::from_integer(c) / &scale)).collect();
            let mut comb = vec![Rational::zero(); d + 1];
            comb[d] = Rational::one();
            for (pivot, row, rc) in &rows {
                if let Some(pos) = vec.iter().position(|(m, _)| m == pivot) {
                    let f = vec[pos].1.clone();
                    vec = axpy(&vec, row, &f, self.order);
                    for (k, c) in rc.iter().enumerate() {
                        comb[k] -= &f * c;
                    }
                }
            }
            if vec.is_empty() {
                let lc = comb[d].clone();
                return Some(comb.into_iter().map(|c| c / &lc).collect());
            }
            let pc = vec[0].1.clone();
            let row: Vec<(Monomial, Rational)> = vec.into_iter().map(|(m, c)| (m, c / &pc)).collect();
            let rc: Vec<Rational> = comb.into_iter().map(|c| c / &pc).collect();
            rows.push((row[0].0.clone(), row, rc));
            power = &power * &last;
        }
        None
    }
}

/// `a − f·b` for sparse vectors sorted by decreasing monomial.
fn axpy(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], f: &Rational, ord: MonomialOrder) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let o = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match o {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), -(f * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 - f * &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn leading_in(p: &MultiPoly, ord: MonomialOrder) -> Option<(&Monomial, &Rational)> {
    match ord {
        MonomialOrder::Lex => p.leading(),
        MonomialOrder::GrevLex => p.terms().max_by(|a, b| ord.cmp(a.0, b.0)),
    }
}

fn s_poly(f: &MultiPoly, g: &MultiPoly, ord: MonomialOrder) -> MultiPoly {
    let (mf, cf) = leading_in(f, ord).expect("nonzero");
    let (mg, cg) = leading_in(g, ord).expect("nonzero");
    let l = mf.lcm(mg);
    f.mul_term(&mf.quotient_of(&l), &cf.recip()) - g.mul_term(&mg.quotient_of(&l), &cg.recip())
}

/// Remainder of full division by `basis` over the rationals.
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly], ord: MonomialOrder) -> MultiPoly {
    let n = p.nvars();
    let ib: Vec<IPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| IPoly::from_rational(g, ord)).collect();
    let refs: Vec<&IPoly> = ib.iter().collect();
    let (r, scale) = reduce_int(IPoly::from_rational(p, ord), &refs, usize::MAX, ord).expect("no cap");
    let mult = IPoly::rational_scale(p);
    MultiPoly::from_terms(n, r.terms.into_iter().map(|(m, c)| (m, Rational::from_integer(c) / &scale / &mult)))
}

/// Primitive integer polynomial, terms in decreasing order.
#[derive(Debug, Clone)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    /// The factor `s` with `from_rational(p) = s·p`.
    fn rational_scale(p: &MultiPoly) -> Rational {
        let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let num = p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&(c.numer() * (&den / c.denom()))));
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(den, num)
    }

    fn from_rational(p: &MultiPoly, ord: MonomialOrder) -> IPoly {
        let s = Self::rational_scale(p);
        let mut terms: Vec<(Monomial, BigInt)> =
            p.terms().map(|(m, c)| (m.clone(), (c * &s).to_integer())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        IPoly { terms }
    }

    fn to_rational(&self, nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()))))
    }

    fn shift(&self, t: &Monomial) -> IPoly {
        IPoly { terms: self.terms.iter().map(|(m, c)| (m.mul(t), c.clone())).collect() }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `a·self − b·t·g`, where `t` is a monomial.
    fn combine(&self, a: &BigInt, b: &BigInt, t: &Monomial, g: &IPoly, ord: MonomialOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |k: usize| g.terms[k].0.mul(t);
        let mut next_g = (j < g.terms.len()).then(|| shifted(j));
        while i < self.terms.len() || next_g.is_some() {
            let o = match (&next_g, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(mg), Some((mp, _))) => ord.cmp(mp, mg),
            };
            match o {
                Ordering::Greater => {
                    let (m, c) = &self.terms[i];
                    out.push((m.clone(), a * c));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((next_g.take().expect("checked"), -(b * &g.terms[j].1)));
                    j += 1;
                    next_g = (j < g.terms.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let c = a * &self.terms[i].1 - b * &g.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    next_g = (j < g.terms.len()).then(|| shifted(j));
                }
            }
        }
        IPoly { terms: out }
    }
}

/// Fraction-free full reduction. Returns `(r, s)` with `r = s·NF(p)`, `s > 0`
/// rational, `r` primitive.
fn reduce_int(p: IPoly, basis: &[&IPoly], max_terms: usize, ord: MonomialOrder) -> Result<(IPoly, Rational), CapExceeded> {
    let mut scale = Rational::one();
    // irreducible terms, kept in decreasing order
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    // pending terms in increasing order so the leading one pops off the end
    let mut rest = p;
    rest.terms.reverse();
    let mut steps = 0usize;
    while let Some((m, c)) = rest.terms.last() {
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let lc_g = &g.terms[0].1;
                let gg = lc_g.gcd(c);
                let mut a = lc_g / &gg;
                let mut b = c / &gg;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                let t = g.lm().quotient_of(m);
                rest.terms.reverse();
                let mut next = rest.combine(&a, &b, &t, g, ord);
                next.terms.reverse();
                rest = next;
                if !a.is_one() {
                    for (_, dc) in &mut done {
                        *dc *= &a;
                    }
                    scale *= Rational::from_integer(a);
                }
                steps += 1;
                if steps.is_multiple_of(CONTENT_EVERY) {
                    let g = done.iter().chain(&rest.terms).fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
                    if !g.is_zero() && !g.is_one() {
                        for (_, c) in done.iter_mut().chain(rest.terms.iter_mut()) {
                            *c /= &g;
                        }
                        scale /= Rational::from_integer(g);
                    }
                }
                if rest.terms.len() + done.len() > max_terms {
                    return Err(CapExceeded::Terms(max_terms));
                }
            }
            None => {
                let t = rest.terms.pop().expect("nonempty");
                done.push(t);
            }
        }
    }
    let mut out = IPoly { terms: done };
    let mut g = out.content();
    if out.terms.first().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, c) in &mut out.terms {
            *c /= &g;
        }
        scale /= Rational::from_integer(g);
    }
    Ok((out, scale))
}

const CONTENT_EVERY: usize = 8;

/// `p` with every non-leading term reduced, as a primitive integer polynomial.
fn tail_reduce(p: &IPoly, basis: &[&IPoly], max_terms: usize, ord: MonomialOrder) -> Result<IPoly, CapExceeded> {
    let (head_m, head_c) = p.terms[0].clone();
    let (tail, s) = reduce_int(IPoly { terms: p.terms[1..].to_vec() }, basis, max_terms, ord)?;
    // s·p reduces to s·head + tail; clear the denominator of s
    let (num, den) = (s.numer(), s.denom());
    let mut terms = Vec::with_capacity(tail.terms.len() + 1);
    terms.push((head_m, head_c * num));
    terms.extend(tail.terms.into_iter().map(|(m, c)| (m, c * den)));
    let mut out = IPoly { terms };
    let g = out.content();
    if !g.is_zero() && !g.is_one() {
        for (_, c) in &mut out.terms {
            *c /= &g;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the Gebauer–Möller criteria. Pairs are taken
/// in the normal strategy: smallest lcm first.
pub fn buchberger(gens: &[MultiPoly], order: MonomialOrder, caps: &GroebnerCaps) -> Result<GroebnerBasis, CapExceeded> {
    let nvars = gens.first().map_or(0, MultiPoly::nvars);
    let mut store: Vec<IPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let p = IPoly::from_rational(g, order);
        if p.terms.len() > caps.max_terms {
            return Err(CapExceeded::Terms(caps.max_terms));
        }
        store.push(p);
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        let k = (0..pairs.len()).min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm)).expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(k);
        processed += 1;
        if processed > caps.max_pairs {
            return Err(CapExceeded::Pairs(caps.max_pairs));
        }
        let (f, g) = (&store[i], &store[j]);
        let gg = f.terms[0].1.gcd(&g.terms[0].1);
        let fs = f.shift(&f.lm().quotient_of(&lcm));
        let s = fs.combine(&(&g.terms[0].1 / &gg), &(&f.terms[0].1 / &gg), &g.lm().quotient_of(&lcm), g, order);
        let basis: Vec<&IPoly> = active.iter().map(|&a| &store[a]).collect();
        let (h, _) = reduce_int(s, &basis, caps.max_terms, order)?;
        if h.terms.is_empty() {
            continue;
        }
        store.push(h);
        let hi = store.len() - 1;
        update(&store, &mut active, &mut pairs, hi);
        // keep the working basis tail-reduced: stale tails make later
        // reductions swell badly
        for k in 0..active.len() {
            let a = active[k];
            if a == hi || !store[a].terms[1..].iter().any(|(m, _)| store[hi].lm().divides(m)) {
                continue;
            }
            let others: Vec<&IPoly> = active.iter().filter(|&&o| o != a).map(|&o| &store[o]).collect();
            let reduced = tail_reduce(&store[a], &others, caps.max_terms, order)?;
            store[a] = reduced;
        }
    }
    let mut minimal: Vec<IPoly> = active.iter().map(|&a| store[a].clone()).collect();
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let mut generators = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|&(o, _)| o != k).map(|(_, p)| p).collect();
        generators.push(tail_reduce(&minimal[k], &others, caps.max_terms, order)?.to_rational(nvars).monic_in(order));
    }
    Ok(GroebnerBasis { nvars, order, generators, pairs_processed: processed })
}

impl MultiPoly {
    fn monic_in(&self, ord: MonomialOrder) -> MultiPoly {
        match leading_in(self, ord) {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }
}

fn update(store: &[IPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = store[h].lm().clone();
    let cand: Vec<Pair> = active.iter().map(|&g| Pair { i: g, j: h, lcm: store[g].lm().lcm(&lh) }).collect();
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cand.iter().enumerate() {
        let coprime = store[p.i].lm().coprime(&lh);
        let dominated = cand[k + 1..].iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p.clone());
        }
    }
    kept.retain(|p| !store[p.i].lm().coprime(&lh));
    pairs.retain(|p| {
        !lh.divides(&p.lcm) || store[p.i].lm().lcm(&lh) == p.lcm || store[p.j].lm().lcm(&lh) == p.lcm
    });
    pairs.extend(kept);
    active.retain(|&g| !lh.divides(store[g].lm()));
    active.push(h);
}
