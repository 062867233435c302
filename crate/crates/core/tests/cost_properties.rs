use fuzzy_pamu::costmodel::{
    compare, memory_flexible, memory_rigid, time_flexible, time_rigid, CostParams,
};

fn base(tau: u64, gamma: u64, n: u64) -> CostParams {
    CostParams {
        tau,
        gamma,
        n_inputs: n,
        universe_powers: vec![10, 7],
        fuzzy_powers: vec![5, 3],
        rules: 20,
        classes: 4,
        decision_field_global: true,
        component_times: None,
    }
}

#[test]
fn delta_time_identity_on_grid() {
    for tau in 1..=4u64 {
        for gamma in 1..=64u64 {
            for n in 1..=10u64 {
                let p = base(tau, gamma, n);
                let expect = (tau * gamma) as i128 * (n as i128 - 1);
                assert_eq!(compare(&p).delta_time, expect);
            }
        }
    }
}

#[test]
fn rigid_time_ignores_input_count() {
    for gamma in 1..=64 {
        let t = time_rigid(&base(1, gamma, 1));
        for n in 1..=10 {
            assert_eq!(time_rigid(&base(1, gamma, n)), t);
        }
    }
}

#[test]
fn times_are_homogeneous_in_tau() {
    for gamma in 1..=16 {
        for n in 1..=10 {
            for k in 1..=4 {
                assert_eq!(
                    time_flexible(&base(k, gamma, n)),
                    k as u128 * time_flexible(&base(1, gamma, n))
                );
                assert_eq!(
                    time_rigid(&base(k, gamma, n)),
                    k as u128 * time_rigid(&base(1, gamma, n))
                );
            }
        }
    }
}

#[test]
fn memory_gap_grows_with_rules() {
    for global in [true, false] {
        let mut prev = None;
        for l in 1..=200 {
            let p = CostParams {
                rules: l,
                decision_field_global: global,
                ..base(1, 8, 4)
            };
            let gap = memory_flexible(&p) as i128 - memory_rigid(&p) as i128;
            if let Some(g) = prev {
                assert!(gap > g);
            }
            prev = Some(gap);
        }
    }
}
