mod common;

use common::{decomposable, random_matrix};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use witnessgate::families::family_f;
use witnessgate::oracle::{estimate_mu, OracleOptions};
use witnessgate::qudit::{necessary_block_positive, pair_c_coefficients, Locus, NecessaryVerdict, PairSelector};
use witnessgate::scalar::rat;
use witnessgate::witness::{c_coefficients, refute, w_vector};
use witnessgate::{classify, BipartiteHermitian, GaussRational, Rational, Verdict};

fn det2(m: &[Vec<GaussRational>], l: usize, k: usize) -> Rational {
    (&m[l][l] * &m[k][k] - &m[l][k] * &m[k][l]).re
}

#[test]
fn two_by_two_agrees_with_classify() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for k in 0..60 {
        let x = if k % 2 == 0 {
            random_matrix(&mut rng, 2, 2, 6)
        } else {
            let d = rat(rng.gen_range(0..=12), 10);
            decomposable(&mut rng, 2, 2, d)
        };
        let nec = necessary_block_positive(&x).unwrap();
        let fails = nec.verdict == NecessaryVerdict::Fails;
        assert_eq!(fails, refute(&x).unwrap().is_some(), "case {k}");
        // two negative eigenvalues short-circuit classify before any refutation
        if x.eigen_signature().0 <= 1 {
            assert_eq!(fails, matches!(classify(&x).unwrap(), Verdict::NotBlockPositive { .. }), "case {k}");
        }
    }
}

#[test]
fn pair_counterexamples_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..80 {
        let d = rng.gen_range(2..=4);
        let x = random_matrix(&mut rng, d, 2, 8);
        let out = necessary_block_positive(&x).unwrap();
        if let Some(cert) = &out.certificate {
            assert!(cert.value.is_negative());
            assert_eq!(cert.value, x.expectation(&cert.v, &cert.w));
        }
        if let (Some(Locus::Pair(p)), Some(ce)) = (out.violated, &out.counterexample) {
            let w = w_vector(ce.side, &ce.r, &ce.t);
            let xw = x.project(&w);
            assert!(det2(&xw, p.l() - 1, p.k() - 1).is_negative());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn psd_never_fails() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let d = rng.gen_range(2..=4);
        let a = common::random_hermitian(&mut rng, 2 * d, 4);
        let x = BipartiteHermitian::new(d, 2, common::gram(&a)).unwrap();
        assert_eq!(necessary_block_positive(&x).unwrap().verdict, NecessaryVerdict::Inconclusive);
    }
}

#[test]
fn f_family_fails_outside() {
    for a in [rat(-1, 1), rat(2, 1), rat(5, 2)] {
        let out = necessary_block_positive(&family_f(&a)).unwrap();
        assert_eq!(out.verdict, NecessaryVerdict::Fails, "a = {a}");
    }
    assert_eq!(necessary_block_positive(&family_f(&rat(1, 2))).unwrap().verdict, NecessaryVerdict::Inconclusive);
}

/// Just outside the block-positive range every two-row compression is still
/// block-positive, so only the full problem sees the negative value.
#[test]
fn f_gap_is_invisible_to_pairs() {
    let opts = OracleOptions { restarts: 32, tol: 1e-12, seed: 1 };
    let x = family_f(&rat(-3, 10));
    assert_eq!(necessary_block_positive(&x).unwrap().verdict, NecessaryVerdict::Inconclusive);
    assert!(estimate_mu(&x, &opts).mu_hat < -1e-2);
    for (l, k) in [(0, 1), (0, 2), (1, 2)] {
        let idx = [2 * l, 2 * l + 1, 2 * k, 2 * k + 1];
        let rows = idx.iter().map(|&r| idx.iter().map(|&c| x.entry(r, c).clone()).collect()).collect();
        let pair = BipartiteHermitian::new(2, 2, rows).unwrap();
        assert!(estimate_mu(&pair, &opts).mu_hat > 1e-3, "pair ({l}, {k})");
        assert!(refute(&pair).unwrap().is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pair_on_qubit_pair_matches_full_coefficients(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_matrix(&mut rng, 2, 2, 9);
        prop_assert_eq!(pair_c_coefficients(&x, PairSelector::new(1, 2).unwrap()).unwrap(), c_coefficients(&x).unwrap());
    }

    #[test]
    fn selectors_are_ordered(l in 0usize..6, k in 0usize..6) {
        prop_assert_eq!(PairSelector::new(l, k).is_some(), l >= 1 && l < k);
    }

    #[test]
    fn pair_coefficients_vanish_on_zero(d in 2usize..5) {
        let zero = BipartiteHermitian::diagonal(d, 2, &vec![Rational::zero(); 2 * d]);
        for p in PairSelector::all(d) {
            prop_assert!(pair_c_coefficients(&zero, p).unwrap().is_zero());
        }
    }
}
