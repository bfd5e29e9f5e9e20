mod common;

use std::collections::BTreeMap;

use common::{ms, multisegment, uniform_ms};
use msl::az::az_involution;
use msl::linalg::Matrix;
use msl::multiseg::{grdim, sym_form};
use msl::pi_oracle::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg(seed: u64) -> SampleConfig {
    SampleConfig::with_seed(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generic_points_satisfy_the_relation(m in multisegment(5, 0, 6), seed in any::<u64>(), k in 0u64..100) {
        let c = cfg(seed);
        let x = generic_point(&m, &c, k);
        prop_assert!(x.relation_holds(&c.field()));
        prop_assert!(x.residuals(&c.field()).iter().all(|(_, r)| r.is_zero()));
    }

    #[test]
    fn more_samples_never_increase(m in uniform_ms(4, 0, 6), n in uniform_ms(4, 0, 6), seed in any::<u64>()) {
        let small = SampleConfig { samples: 4, ..cfg(seed) };
        let large = SampleConfig { samples: 8, ..cfg(seed) };
        prop_assert!(generic_hom(&m, &n, &large) <= generic_hom(&m, &n, &small));
        prop_assert!(ext1_diagonal(&m, &large) <= ext1_diagonal(&m, &small));
    }

    #[test]
    fn crawley_boevey_against_direct_ext(m in uniform_ms(4, 0, 5), n in uniform_ms(4, 0, 5), seed in any::<u64>()) {
        let c = cfg(seed);
        let f = c.field();
        let x = generic_point(&m, &c, 0);
        let y = generic_point(&n, &c, 1);
        let cb = hom_pi(&f, &x, &y) as i64 + hom_pi(&f, &y, &x) as i64 - sym_form(&grdim(&m), &grdim(&n));
        prop_assert_eq!(ext1_pi(&f, &x, &y) as i64, cb);
        prop_assert_eq!(generic_ext1_direct(&m, &n, &c), generic_ext1(&m, &n, &c));
    }

    #[test]
    fn duality(m in uniform_ms(4, 0, 6), n in uniform_ms(4, 0, 6)) {
        let c = cfg(3);
        let h = generic_hom(&m, &n, &c);
        prop_assert_eq!(generic_hom(&n.dual(), &m.dual(), &c), h);
        prop_assert_eq!(generic_hom(&az_involution(&n), &az_involution(&m), &c), h);
    }

    #[test]
    fn coker_is_nonnegative_and_hom_dominates(m in uniform_ms(4, 0, 6), n in uniform_ms(4, 0, 6)) {
        let c = cfg(4);
        let h = generic_hom(&m, &n, &c) as i64;
        prop_assert_eq!(coker_coxeter(&m, &n, &c) as i64, h - msl::qrep::alpha_plus(&m, &n));
    }

    #[test]
    fn base_change_invariance(m in uniform_ms(4, 0, 5), n in uniform_ms(4, 0, 5), seed in any::<u64>()) {
        let c = cfg(seed);
        let f = c.field();
        let x = generic_point(&m, &c, 0);
        let y = generic_point(&n, &c, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g: BTreeMap<i32, Matrix> = x.dims().iter().map(|(i, d)| {
            loop {
                let g = Matrix::random(&f, d as usize, d as usize, &mut rng);
                if g.inverse(&f).is_some() {
                    break (i, g);
                }
            }
        }).collect();
        let xg = x.base_change(&f, &g).unwrap();
        prop_assert!(xg.relation_holds(&f));
        prop_assert_eq!(hom_pi(&f, &xg, &y), hom_pi(&f, &x, &y));
        prop_assert_eq!(hom_pi(&f, &y, &xg), hom_pi(&f, &y, &x));
    }
}

#[test]
fn golden_values_are_seed_stable() {
    let lec = ms("[4,5]+[2,4]+[3,3]+[1,2]");
    let ladder = ms("[3,6]+[1,4]+[0,2]");
    for seed in 0..10 {
        let c = cfg(seed);
        assert_eq!(generic_hom(&lec, &lec, &c), 2);
        assert_eq!(generic_ext1(&lec, &lec, &c), 0);
        assert!(!is_rigid_component(&lec, &c));
        assert!(is_rigid_component(&ladder, &c));
        assert_eq!(generic_hom(&ms("[0,1]"), &ms("[0,1]"), &c), 1);
        assert_eq!(coker_coxeter(&ms("[1,1]"), &ms("[0,0]"), &c), 1);
    }
}

#[test]
fn parallel_flag_does_not_change_results() {
    let m = ms("[1,4]+[2,5]+[0,2]");
    let n = ms("[4,5]+[2,4]+[3,3]+[1,2]");
    for seed in 0..4 {
        let on = SampleConfig { parallel: true, ..cfg(seed) };
        let off = SampleConfig { parallel: false, ..cfg(seed) };
        assert_eq!(generic_hom(&m, &n, &on), generic_hom(&m, &n, &off));
        assert_eq!(generic_ext1_direct(&m, &n, &on), generic_ext1_direct(&m, &n, &off));
        assert_eq!(ext1_diagonal(&n, &on), ext1_diagonal(&n, &off));
    }
}

#[test]
fn config_rejects_bad_primes() {
    for p in [4_294_967_311u64, 1_000_000, 2_147_483_646] {
        assert!(SampleConfig { prime: p, ..Default::default() }.validate().is_err(), "{p}");
    }
}
