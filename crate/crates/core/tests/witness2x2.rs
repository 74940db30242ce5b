use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use witnessgate::oracle::{estimate_mu, OracleOptions};
use witnessgate::scalar::rat;
use witnessgate::witness::{build_v, build_w, c_coefficients, refute, w_vector};
mod common;

use common::{decomposable, random_hermitian};
use witnessgate::{classify, BipartiteHermitian, GaussRational, Rational, Side, Verdict};

#[test]
fn verdicts_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = OracleOptions { restarts: 16, tol: 1e-13, seed: 1 };
    let mut witnesses = 0;
    let mut refuted = 0;
    for k in 0..120 {
        let delta = if k % 2 == 0 { Rational::zero() } else { rat(rng.gen_range(1..=20), 10) };
        let x = decomposable(&mut rng, 2, 2, delta.clone());
        let verdict = classify(&x).unwrap();
        let mu = estimate_mu(&x, &opts).mu_hat;
        match &verdict {
            Verdict::EntanglementWitness { .. } | Verdict::PositiveSemidefinite => {
                assert!(mu > -1e-6, "{verdict:?} but oracle found {mu}");
                if matches!(verdict, Verdict::EntanglementWitness { .. }) {
                    witnesses += 1;
                }
            }
            Verdict::NotBlockPositive { certificate } => {
                assert!(delta > Rational::zero());
                assert!(certificate.value.is_negative());
                assert_eq!(certificate.value, x.expectation(&certificate.v, &certificate.w));
                refuted += 1;
            }
            Verdict::NotWitnessMultiNegative => {}
        }
        if mu < -1e-6 {
            assert!(!matches!(verdict, Verdict::EntanglementWitness { .. } | Verdict::PositiveSemidefinite));
        }
        if mu > 1e-6 {
            assert!(!matches!(verdict, Verdict::NotBlockPositive { .. }), "oracle {mu} but refuted");
        }
    }
    assert!(witnesses > 20, "only {witnesses} witnesses sampled");
    assert!(refuted > 5, "only {refuted} refutations sampled");
}

#[test]
fn random_certificates_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let x = BipartiteHermitian::new(2, 2, random_hermitian(&mut rng, 4, 10)).unwrap();
        if let Some(cert) = refute(&x).unwrap() {
            assert!(cert.value.is_negative());
            assert_eq!(cert.value, x.expectation(&cert.v, &cert.w));
        }
    }
}

#[test]
fn psd_matrices_pass_every_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a = random_hermitian(&mut rng, 4, 5);
        let mut m = vec![vec![GaussRational::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = (0..4).fold(GaussRational::zero(), |acc, k| acc + a[k][i].conj() * &a[k][j]);
            }
        }
        let x = BipartiteHermitian::new(2, 2, m).unwrap();
        assert_eq!(x.eigen_signature().0, 0);
        assert!(refute(&x).unwrap().is_none());
        assert_eq!(classify(&x).unwrap(), Verdict::PositiveSemidefinite);
    }
}

#[test]
fn verdict_invariant_under_positive_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..60 {
        let delta = rat(rng.gen_range(0..=10), 10);
        let x = decomposable(&mut rng, 2, 2, delta);
        let s = rat(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let a = classify(&x).unwrap();
        let b = classify(&x.scale(&s)).unwrap();
        assert_eq!(a.name(), b.name());
        if let (Verdict::NotBlockPositive { certificate: ca }, Verdict::NotBlockPositive { certificate: cb }) = (&a, &b) {
            assert_eq!((&ca.v, &ca.w), (&cb.v, &cb.w));
            assert_eq!(&ca.value * &s, cb.value);
        }
    }
}

#[test]
fn w_and_v_polynomials_match_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..5 {
        let x = BipartiteHermitian::new(2, 2, random_hermitian(&mut rng, 4, 10)).unwrap();
        let c = c_coefficients(&x).unwrap();
        let (w, v) = (build_w(&c), build_v(&c));
        for _ in 0..100 {
            let r = rat(rng.gen_range(-30..=30), rng.gen_range(1..=9));
            let t = rat(rng.gen_range(-30..=30), rng.gen_range(1..=9));
            let u = Rational::from_integer(1.into()) + &t * &t;
            for (side, poly) in [(Side::W, &w), (Side::V, &v)] {
                let m = x.project(&w_vector(side, &r, &t));
                let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
                assert_eq!(poly.eval(&r, &t), &u * &u * det.re);
            }
        }
    }
}
