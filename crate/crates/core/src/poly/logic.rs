//! Alternatives `g1(t) >= 0 ∨ g2(t) >= 0` on an interval: mesh generation,
//! sign-change precedence and the 16-case endpoint sign table.

use num_traits::Zero;

use super::roots::{cauchy_bound, count_squarefree_in, odd_multiplicity_part, squarefree_part};
use super::{poly_gcd, Domain, PolyError, RationalInterval, UniPoly};
use crate::scalar::{midpoint, Field, Rational, Sign};

const BISECTION_CAP: usize = 100_000;

/// Mesh `t_1 < … < t_l` of `[lo, hi]` such that no mesh point is a root of
/// `g1` or `g2` and each gap holds at most one distinct root of each.
pub fn generate_mesh<F: Field>(
    g1: &UniPoly<F>,
    g2: &UniPoly<F>,
    iv: &RationalInterval,
) -> Result<Vec<Rational>, PolyError> {
    if g1.is_zero() || g2.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    for e in [iv.lo(), iv.hi()] {
        if g1.is_root(e) || g2.is_root(e) {
            return Err(PolyError::EndpointIsRoot(crate::scalar::format_rational(e)));
        }
    }
    let r1 = squarefree_part(g1);
    let r2 = squarefree_part(g2);
    let mut mesh = vec![iv.lo().clone()];
    // explicit stack of pending subintervals, leftmost on top
    let mut stack = vec![(iv.lo().clone(), iv.hi().clone())];
    while let Some((a, b)) = stack.pop() {
        if count_squarefree_in(&r1, &a, &b) <= 1 && count_squarefree_in(&r2, &a, &b) <= 1 {
            mesh.push(b);
            continue;
        }
        let mut mid = midpoint(&a, &b);
        while g1.is_root(&mid) || g2.is_root(&mid) {
            mid = midpoint(&mid, &b);
        }
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    Ok(mesh)
}

/// Whether the sign change of `g1` comes before that of `g2` in `iv`, by
/// bisection. Endpoint signs must match case 8 or 9 of the sign table and the
/// two polynomials must not share a root inside.
pub fn precedence<F: Field>(
    g1: &UniPoly<F>,
    g2: &UniPoly<F>,
    iv: &RationalInterval,
) -> Result<bool, PolyError> {
    let mut a = iv.lo().clone();
    let mut b = iv.hi().clone();
    for _ in 0..BISECTION_CAP {
        let mid = midpoint(&a, &b);
        let s1 = g1.sign_at(&mid) * g1.sign_at(&a);
        let s2 = g2.sign_at(&mid) * g2.sign_at(&a);
        match (s1.is_positive(), s2.is_positive()) {
            (false, true) => return Ok(true),
            (true, false) => return Ok(false),
            (true, true) => a = mid,
            (false, false) => b = mid,
        }
    }
    Err(PolyError::Precondition("precedence bisection did not separate the sign changes"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalStatus {
    Valid,
    Invalid,
    /// Cases 8 and 9: decided by a common root or by precedence.
    Undecided,
}

/// One row of the endpoint sign table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCase {
    pub case: u8,
    /// Signs of `g1(t_i), g2(t_i), g1(t_{i+1}), g2(t_{i+1})`, `true` = positive.
    pub signs: [bool; 4],
    pub status: IntervalStatus,
}

const fn row(case: u8, signs: [bool; 4], status: IntervalStatus) -> SignCase {
    SignCase { case, signs, status }
}

use IntervalStatus::{Invalid, Undecided, Valid};

const P: bool = true;
const M: bool = false;

pub const SIGN_TABLE: [SignCase; 16] = [
    row(1, [P, P, P, P], Valid),
    row(2, [P, P, P, M], Valid),
    row(3, [P, P, M, P], Valid),
    row(4, [P, M, P, P], Valid),
    row(5, [M, P, P, P], Valid),
    row(6, [M, P, M, P], Valid),
    row(7, [P, M, P, M], Valid),
    row(8, [P, M, M, P], Undecided),
    row(9, [M, P, P, M], Undecided),
    row(10, [P, P, M, M], Invalid),
    row(11, [M, M, P, P], Invalid),
    row(12, [P, M, M, M], Invalid),
    row(13, [M, P, M, M], Invalid),
    row(14, [M, M, P, M], Invalid),
    row(15, [M, M, M, P], Invalid),
    row(16, [M, M, M, M], Invalid),
];

/// Looks up the table row for four nonzero endpoint signs.
pub fn table_b1_case(signs: [Sign; 4]) -> SignCase {
    let key = signs.map(|s| s.is_positive());
    *SIGN_TABLE.iter().find(|r| r.signs == key).expect("table covers all 16 keys")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Alternative {
    pub holds: bool,
    /// When `holds` is false: a point where both polynomials are negative.
    pub witness_point: Option<Rational>,
}

/// Working interval and the closed mesh range: for the whole line this is
/// `[-B, B]` past which no root lies; for `(lo, hi)` the endpoints are pulled
/// inward until no root of either polynomial sits in the trimmed margins.
fn working_interval<F: Field>(
    g1: &UniPoly<F>,
    g2: &UniPoly<F>,
    domain: &Domain,
) -> Result<RationalInterval, PolyError> {
    match domain {
        Domain::AllReals => {
            let b = cauchy_bound(g1).max(cauchy_bound(g2));
            RationalInterval::new(-b.clone(), b)
        }
        Domain::Interval(iv) => {
            let prod = squarefree_part(&(g1 * g2));
            let mid = midpoint(iv.lo(), iv.hi());
            let lo = pull_inward(&prod, iv.lo(), &mid);
            let hi = pull_inward(&prod, iv.hi(), &mid);
            RationalInterval::new(lo, hi)
        }
    }
}

/// A point `p` strictly between `from` and `toward` such that `g` has no root
/// in the half-open stretch from `from` (excluded) to `p` (included).
fn pull_inward<F: Field>(g: &UniPoly<F>, from: &Rational, toward: &Rational) -> Rational {
    let stripped = g.strip_roots(&[from]);
    let mut p = midpoint(from, toward);
    loop {
        let (lo, hi) = if from < &p { (from, &p) } else { (&p, from) };
        if !stripped.is_root(&p) && count_squarefree_in(&stripped, lo, hi) == 0 {
            return p;
        }
        p = midpoint(from, &p);
    }
}

/// Decides `∀t ∈ domain: g1(t) >= 0 ∨ g2(t) >= 0`.
pub fn eval_alternative<F: Field>(
    g1: &UniPoly<F>,
    g2: &UniPoly<F>,
    domain: &Domain,
) -> Result<Alternative, PolyError> {
    let holds = Alternative { holds: true, witness_point: None };
    if g1.is_zero() || g2.is_zero() {
        return Ok(holds);
    }
    let iv = working_interval(g1, g2, domain)?;
    let mesh = generate_mesh(g1, g2, &iv)?;
    let signs: Vec<(Sign, Sign)> = mesh.iter().map(|t| (g1.sign_at(t), g2.sign_at(t))).collect();
    let common = poly_gcd(&odd_multiplicity_part(g1), &odd_multiplicity_part(g2));
    for i in 0..mesh.len() - 1 {
        let (a, b) = (&mesh[i], &mesh[i + 1]);
        let row = table_b1_case([signs[i].0, signs[i].1, signs[i + 1].0, signs[i + 1].1]);
        match row.status {
            Valid => continue,
            Invalid => {
                let both_neg = |s: (Sign, Sign)| s.0.is_negative() && s.1.is_negative();
                let w = if both_neg(signs[i]) { a } else { b };
                return Ok(Alternative { holds: false, witness_point: Some(w.clone()) });
            }
            Undecided => {
                if count_squarefree_in(&common, a, b) > 0 {
                    continue;
                }
                let sub = RationalInterval::new(a.clone(), b.clone())?;
                let g1_first = precedence(g1, g2, &sub)?;
                // case 8 fails when g1 drops first, case 9 when g2 drops first
                let fails = if row.case == 8 { g1_first } else { !g1_first };
                if fails {
                    let w = both_negative_point(g1, g2, &sub, row.case == 8)?;
                    return Ok(Alternative { holds: false, witness_point: Some(w) });
                }
            }
        }
    }
    Ok(holds)
}

/// Bisects toward the stretch where both polynomials are negative. The
/// polynomial that is positive at the left end (`g1` in case 8) drops first.
fn both_negative_point<F: Field>(
    g1: &UniPoly<F>,
    g2: &UniPoly<F>,
    iv: &RationalInterval,
    g1_drops: bool,
) -> Result<Rational, PolyError> {
    let (first, second) = if g1_drops { (g1, g2) } else { (g2, g1) };
    let mut a = iv.lo().clone();
    let mut b = iv.hi().clone();
    for _ in 0..BISECTION_CAP {
        let mid = midpoint(&a, &b);
        let s_first = first.sign_at(&mid);
        let s_second = second.sign_at(&mid);
        if s_first.is_negative() && s_second.is_negative() {
            return Ok(mid);
        }
        if !s_first.is_negative() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Err(PolyError::Precondition("no point with both polynomials negative"))
}

/// A rational point of the domain where `g < 0`, or `None` when `g >= 0`
/// throughout. Scans the mesh built for the pair `(g, 1)`.
pub fn find_negative_point<F: Field>(g: &UniPoly<F>, domain: &Domain) -> Result<Option<Rational>, PolyError> {
    if g.is_zero() {
        return Ok(None);
    }
    let one = UniPoly::<F>::one();
    if g.is_constant() {
        return Ok(if g.leading().is_neg() {
            Some(match domain {
                Domain::AllReals => Rational::zero(),
                Domain::Interval(iv) => midpoint(iv.lo(), iv.hi()),
            })
        } else {
            None
        });
    }
    let iv = working_interval(g, &one, domain)?;
    let mesh = generate_mesh(g, &one, &iv)?;
    Ok(mesh.into_iter().find(|t| g.sign_at(t).is_negative()))
}
