use pcmax_core::bounds::{
    aposteriori_check, graham_bound, lpt_a_posteriori_ceiling, lpt_rev_bound, r2_bound,
};
use pcmax_core::model::rational_of;
use pcmax_core::{
    combine, exact_opt, lower_bounds, lpt, lpt_rev, multifit, slack_heuristic, Instance, Schedule,
    Time,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (usize, Vec<Time>)> {
    (1usize..=4, prop::collection::vec(1 as Time..=30, 1..=9))
}

fn is_partition(s: &Schedule, n: usize) -> bool {
    let mut seen = vec![false; n];
    for &j in s.machines().iter().flatten() {
        if j >= n || std::mem::replace(&mut seen[j], true) {
            return false;
        }
    }
    seen.into_iter().all(|b| b)
}

fn heuristics(x: &Instance) -> Vec<(&'static str, Schedule)> {
    vec![
        ("lpt", lpt(x)),
        ("lpt_rev", lpt_rev(x).schedule),
        ("slack", slack_heuristic(x)),
        ("multifit", multifit(x, 7)),
        ("combine", combine(x, 7)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn schedules_are_valid_and_bounded((m, times) in instance()) {
        let x = Instance::new(m, times).unwrap();
        let lb = lower_bounds(&x);
        let opt = exact_opt(&x, u64::MAX).optimum().unwrap();
        prop_assert!(rational_of(opt) >= lb.lb_best);
        for (name, s) in heuristics(&x) {
            prop_assert!(is_partition(&s, x.n()), "{}", name);
            prop_assert_eq!(s.machines().len(), m);
            let loads: Vec<Time> = s
                .machines()
                .iter()
                .map(|js| js.iter().map(|&j| x.time(j)).sum())
                .collect();
            prop_assert_eq!(&loads[..], s.loads());
            prop_assert!(rational_of(s.makespan()) >= lb.lb_best, "{}", name);
            prop_assert!(s.makespan() >= opt, "{}", name);
        }
    }

    #[test]
    fn worst_case_ratios_hold((m, times) in instance()) {
        let x = Instance::new(m, times).unwrap();
        let opt = exact_opt(&x, u64::MAX).optimum().unwrap();
        let l = lpt(&x);
        prop_assert!(l.ratio_to(opt) <= graham_bound(m).unwrap());
        prop_assert!(
            l.ratio_to(opt) <= lpt_a_posteriori_ceiling(l.critical_pos(), m),
            "k={} ratio={}", l.critical_pos(), l.ratio_to(opt)
        );
        prop_assert!(aposteriori_check(&x, &l, opt).all_pass());
        if m >= 2 {
            prop_assert!(lpt_rev(&x).schedule.ratio_to(opt) <= lpt_rev_bound(m).unwrap());
            if x.n() <= 2 * m {
                prop_assert!(l.ratio_to(opt) <= r2_bound(m).unwrap());
            }
        } else {
            prop_assert_eq!(l.makespan(), opt);
        }
    }

    #[test]
    fn lpt_rev_and_combine_never_worse_than_lpt((m, times) in instance()) {
        let x = Instance::new(m, times).unwrap();
        let base = lpt(&x).makespan();
        prop_assert!(lpt_rev(&x).schedule.makespan() <= base);
        prop_assert!(combine(&x, 7).makespan() <= base);
    }

    #[test]
    fn input_order_does_not_matter(
        (m, times) in instance(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = times.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let (a, b) = (Instance::new(m, times).unwrap(), Instance::new(m, shuffled).unwrap());
        prop_assert_eq!(a.times(), b.times());
        for ((name, sa), (_, sb)) in heuristics(&a).into_iter().zip(heuristics(&b)) {
            prop_assert_eq!(sa.makespan(), sb.makespan(), "{}", name);
        }
        prop_assert_eq!(
            exact_opt(&a, u64::MAX).optimum(),
            exact_opt(&b, u64::MAX).optimum()
        );
    }

    #[test]
    fn scaling_scales_makespans((m, times) in instance(), factor in 1 as Time..=7) {
        let x = Instance::new(m, times).unwrap();
        let y = x.scaled(factor);
        prop_assert_eq!(lpt(&y).makespan(), factor * lpt(&x).makespan());
        prop_assert_eq!(
            lpt_rev(&y).schedule.makespan(),
            factor * lpt_rev(&x).schedule.makespan()
        );
        prop_assert_eq!(slack_heuristic(&y).makespan(), factor * slack_heuristic(&x).makespan());
        let (ox, oy) = (
            exact_opt(&x, u64::MAX).optimum().unwrap(),
            exact_opt(&y, u64::MAX).optimum().unwrap(),
        );
        prop_assert_eq!(oy, factor * ox);
        prop_assert_eq!(lpt(&y).ratio_to(oy), lpt(&x).ratio_to(ox));
        prop_assert_eq!(lower_bounds(&y).lb_best, rational_of(factor) * lower_bounds(&x).lb_best);
    }
}

#[test]
fn lpt_rev_is_optimal_on_two_machines_five_jobs() {
    // every multiset of five times in 1..=12
    let mut count = 0;
    let mut v = [1 as Time; 5];
    loop {
        let x = Instance::new(2, v.to_vec()).unwrap();
        let opt = exact_opt(&x, u64::MAX).optimum().unwrap();
        assert_eq!(lpt_rev(&x).schedule.makespan(), opt, "{v:?}");
        count += 1;
        // next non-decreasing tuple
        let Some(i) = (0..5).rev().find(|&i| v[i] < 12) else {
            break;
        };
        let t = v[i] + 1;
        for w in &mut v[i..] {
            *w = t;
        }
    }
    assert_eq!(count, 4368);
}
