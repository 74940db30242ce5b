use super::{poly_gcd, PolyError, UniPoly};
use crate::scalar::{Field, Rational, Sign};

/// Signed remainder sequence of a squarefree polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain<F> {
    polys: Vec<UniPoly<F>>,
}

impl<F: Field> SturmChain<F> {
    pub fn polys(&self) -> &[UniPoly<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of sign changes of the chain at `t`, zeros skipped.
    pub fn variations_at(&self, t: &Rational) -> usize {
        count_variations(self.polys.iter().map(|p| p.sign_at(t)))
    }

    /// Sign changes at `+∞` (`positive = true`) or `-∞`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.polys.iter().map(|p| {
            let s = p.leading().sign();
            if !positive && p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }
}

fn count_variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut n = 0;
    for s in signs.filter(|s| *s != Sign::Zero) {
        if last != Sign::Zero && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Sturm chain `{f0, f1, -f2, -f3, f4, f5, ...}` where `f1 = f'` and
/// `f_{i+1} = rem(f_{i-1}, f_i)`.
pub fn sturm_chain<F: Field>(f: &UniPoly<F>) -> Result<SturmChain<F>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(PolyError::Constant);
    }
    if !poly_gcd(f, &f.derivative()).is_constant() {
        return Err(PolyError::NotSquarefree);
    }
    Ok(build_chain(f, false))
}

/// Chain without the squarefree check. With `normalize`, each remainder is
/// multiplied by a positive scalar that keeps coefficients small (a primitive
/// integer polynomial over `Q`), which leaves every sign unchanged.
pub(crate) fn build_chain<F: Field>(f: &UniPoly<F>, normalize: bool) -> SturmChain<F> {
    let unit = |p: UniPoly<F>| -> UniPoly<F> {
        if !normalize || p.is_zero() {
            return p;
        }
        let k = F::normalizer(p.coeffs());
        p.scale(&k)
    };
    let mut raw = vec![unit(f.clone())];
    let d = f.derivative();
    if d.is_zero() {
        return SturmChain { polys: raw };
    }
    raw.push(unit(d));
    loop {
        let n = raw.len();
        let r = if normalize { raw[n - 2].scaled_rem(&raw[n - 1]) } else { raw[n - 2].rem(&raw[n - 1]) };
        if r.is_zero() {
            break;
        }
        raw.push(unit(r));
    }
    let polys = raw
        .into_iter()
        .enumerate()
        .map(|(i, p)| if i % 4 >= 2 { -p } else { p })
        .collect();
    SturmChain { polys }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatPoly;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    #[test]
    fn chain_examples() {
        let c = sturm_chain(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[-2, 0, 1]), p(&[0, 2]), p(&[2])]);
        let c = sturm_chain(&p(&[0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[0, 1]), p(&[1])]);
        let c = sturm_chain(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.polys()[3].degree() == Some(0));
        assert_eq!(sturm_chain(&p(&[1, -2, 1])), Err(PolyError::NotSquarefree));
        assert_eq!(sturm_chain(&p(&[3])), Err(PolyError::Constant));
    }

    fn classical(f: &RatPoly) -> Vec<RatPoly> {
        let mut out = vec![f.clone(), f.derivative()];
        loop {
            let n = out.len();
            let r = out[n - 2].rem(&out[n - 1]);
            if r.is_zero() {
                return out;
            }
            out.push(-r);
        }
    }

    #[test]
    fn matches_classical_chain() {
        for f in [p(&[-2, 0, 1]), p(&[0, -1, 0, 1]), p(&[1, 3, -2, 0, 5, 1]), p(&[7, 0, -3, 1, 0, 0, 1])] {
            let f = super::super::squarefree_part(&f);
            assert_eq!(sturm_chain(&f).unwrap().polys(), classical(&f).as_slice());
            let normalized = build_chain(&f, true);
            for (a, b) in normalized.polys().iter().zip(classical(&f)) {
                assert_eq!(a.leading().sign(), b.leading().sign());
                assert_eq!(a.monic(), b.monic());
            }
        }
    }
}
