mod common;

use common::{ladder_ms, ms, multisegment, uniform_ms};
use msl::matching::*;
use msl::pi_oracle::{coker_coxeter, generic_hom, SampleConfig};
use msl::qrep::alpha_plus;
use proptest::prelude::*;

/// Maximum matching by exhaustive search.
fn brute_max(inst: &MatchingInstance) -> usize {
    fn go(inst: &MatchingInstance, k: usize, used: &mut Vec<bool>) -> usize {
        if k == inst.x.len() {
            return 0;
        }
        let mut best = go(inst, k + 1, used);
        for (v, &y) in inst.y.iter().enumerate() {
            if !used[v] && inst.leads_to(y, inst.x[k]) {
                used[v] = true;
                best = best.max(1 + go(inst, k + 1, used));
                used[v] = false;
            }
        }
        best
    }
    go(inst, 0, &mut vec![false; inst.y.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hopcroft_karp_is_maximum(m in multisegment(3, 0, 5), n in multisegment(3, 0, 5)) {
        let inst = build_instance(&m, &n);
        let best = best_matching(&inst);
        prop_assert!(best.is_valid_for(&inst));
        prop_assert_eq!(best.size(), brute_max(&inst));
    }

    #[test]
    fn sets_are_consistent_with_precedence(m in multisegment(4, 0, 6), n in multisegment(4, 0, 6)) {
        let inst = build_instance(&m, &n);
        let k = inst.m_segs.len();
        let l = inst.n_segs.len();
        for i in 1..=k {
            for j in 1..=l {
                let (d, g) = (inst.m_segs[i - 1], inst.n_segs[j - 1]);
                prop_assert_eq!(inst.x.contains(&(i, j)), d.precedes(&g));
                prop_assert_eq!(inst.y.contains(&(i, j)), d.shift().precedes(&g));
            }
        }
        for &(from, to) in &inst.arrows {
            prop_assert!(inst.y.contains(&from) && inst.x.contains(&to) && inst.leads_to(from, to));
        }
    }

    // #Y - #X for the instance bound to (m, n) is α₊(m, n)
    #[test]
    fn index_binding_matches_alpha_plus(m in multisegment(4, 0, 6), n in multisegment(4, 0, 6)) {
        let inst = build_instance(&n, &m);
        prop_assert_eq!(inst.y.len() as i64 - inst.x.len() as i64, alpha_plus(&m, &n));
    }

    #[test]
    fn ladder_case_agrees_with_oracle(m in ladder_ms(4, 0, 7), n in uniform_ms(4, 0, 7), swap in any::<bool>()) {
        let (m, n) = if swap { (n, m) } else { (m, n) };
        let cfg = SampleConfig::with_seed(13);
        prop_assert_eq!(hom_via_matching(&m, &n).unwrap(), generic_hom(&m, &n, &cfg));
        prop_assert_eq!(coker_via_matching(&m, &n).unwrap(), coker_coxeter(&m, &n, &cfg));
    }

    #[test]
    fn identity_lower_bound(m in ladder_ms(5, 0, 8)) {
        prop_assert!(hom_via_matching(&m, &m).unwrap() >= 1);
    }
}

#[test]
fn worked_example_text() {
    let m = ms("[2,3]+[1,2]");
    let text = build_instance(&m, &m).to_string();
    assert!(text.starts_with("Δ1 = [2,3]\nΔ2 = [1,2]\n"));
    assert!(text.contains("Y = {(1,1), (2,1), (2,2)}"));
}
