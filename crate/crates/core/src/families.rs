//! The two one-parameter test families: `E[a]` on `2 ⊗ 2` and `F[a]` on
//! `3 ⊗ 2`.

use num_traits::Zero;

use crate::matrix::BipartiteHermitian;
use crate::scalar::{gauss, int, rat, GaussRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Family {
    E,
    F,
}

impl Family {
    pub fn build(self, a: &Rational) -> BipartiteHermitian {
        match self {
            Family::E => family_e(a),
            Family::F => family_f(a),
        }
    }

    pub fn shape(self) -> (usize, usize) {
        match self {
            Family::E => (2, 2),
            Family::F => (3, 2),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            _ => Err(format!("unknown family `{s}` (expected E or F)")),
        }
    }
}

fn re(q: Rational) -> GaussRational {
    gauss(q, Rational::zero())
}

/// Entry `(1,4)` is `a/2·(1+i)`, `(4,1)` its conjugate.
pub fn family_e(a: &Rational) -> BipartiteHermitian {
    let d = re(rat(3, 5));
    let h = a / int(2);
    let z = re(Rational::zero());
    let rows = vec![
        vec![d.clone(), re(rat(1, 10)), z.clone(), gauss(h.clone(), h.clone())],
        vec![re(rat(1, 10)), d.clone(), re(rat(-1, 2)), z.clone()],
        vec![z.clone(), re(rat(-1, 2)), d.clone(), re(-a.clone())],
        vec![gauss(h.clone(), -h), z, re(-a.clone()), d],
    ];
    BipartiteHermitian::new(2, 2, rows).expect("E[a] is Hermitian")
}

pub fn family_f(a: &Rational) -> BipartiteHermitian {
    let q = |n: i64| int(n);
    let a = a.clone();
    let raw: [[Rational; 6]; 6] = [
        [q(2) + &a, -a.clone(), q(0), q(1), q(1), q(0)],
        [-a.clone(), q(1) + &a, q(0), q(0), q(0), q(1)],
        [q(0), q(0), q(2), a.clone(), a.clone(), q(1)],
        [q(1), q(0), a.clone(), q(2), q(0), q(0)],
        [q(1), q(0), a.clone(), q(0), q(1), q(0)],
        [q(0), q(1), q(1), q(0), q(0), q(2) + &a],
    ];
    let rows = raw.into_iter().map(|r| r.into_iter().map(re).collect()).collect();
    BipartiteHermitian::new(3, 2, rows).expect("F[a] is Hermitian")
}
