//! `exact_opt` and the worked examples against a brute-force enumerator.

use pcmax_core::generate::{gen_graham_family, gen_lptrev_family};
use pcmax_core::{
    combine, exact_opt, lower_bounds, lpt, lpt_rev, multifit, slack_heuristic, Instance, Time,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum makespan over all assignments, machines used in first-fit order.
fn brute_force(m: usize, times: &[Time]) -> Time {
    fn go(times: &[Time], loads: &mut Vec<Time>, m: usize, best: &mut Time) {
        let Some((&p, rest)) = times.split_first() else {
            *best = (*best).min(loads.iter().copied().max().unwrap_or(0));
            return;
        };
        for i in 0..loads.len() {
            loads[i] += p;
            go(rest, loads, m, best);
            loads[i] -= p;
        }
        if loads.len() < m {
            loads.push(p);
            go(rest, loads, m, best);
            loads.pop();
        }
    }
    let mut best = Time::MAX;
    go(times, &mut Vec::new(), m, &mut best);
    best
}

fn opt(instance: &Instance) -> Time {
    exact_opt(instance, u64::MAX).optimum().unwrap()
}

#[test]
fn exact_matches_brute_force_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=9);
        let hi = if rng.gen_bool(0.5) { 10 } else { 100 };
        let times: Vec<Time> = (0..n).map(|_| rng.gen_range(1..=hi)).collect();
        let x = Instance::new(m, times.clone()).unwrap();
        let out = exact_opt(&x, u64::MAX);
        assert_eq!(
            out.optimum(),
            Some(brute_force(m, &times)),
            "m={m} {times:?}"
        );
        assert_eq!(out.schedule().makespan(), out.optimum().unwrap());
    }
}

#[test]
fn exact_matches_brute_force_exhaustively() {
    // every multiset of 6 times in 1..=5 on 2 and 3 machines
    fn multisets(len: usize, lo: Time, hi: Time) -> Vec<Vec<Time>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        (lo..=hi)
            .flat_map(|t| {
                multisets(len - 1, t, hi).into_iter().map(move |mut v| {
                    v.push(t);
                    v
                })
            })
            .collect()
    }
    for times in multisets(6, 1, 5) {
        for m in [2, 3] {
            let x = Instance::new(m, times.clone()).unwrap();
            assert_eq!(opt(&x), brute_force(m, &times), "m={m} {times:?}");
        }
    }
}

#[test]
fn worked_examples() {
    let g = Instance::new(2, vec![3, 3, 2, 2, 2]).unwrap();
    assert_eq!(brute_force(2, g.times()), 6);
    assert_eq!(opt(&g), 6);
    assert_eq!(lpt(&g).makespan(), 7);
    assert_eq!(lpt_rev(&g).schedule.makespan(), 6);
    assert_eq!(multifit(&g, 7).makespan(), 6);
    assert_eq!(combine(&g, 7).makespan(), 6);
    assert_eq!(lower_bounds(&g).lb_best_ceil(), 6);

    let s = Instance::new(2, vec![5, 4, 4, 1]).unwrap();
    assert_eq!(brute_force(2, s.times()), 8);
    assert_eq!(slack_heuristic(&s).makespan(), 8);
}

#[test]
fn graham_family_meets_graham_bound() {
    for m in 2..=4 {
        let x = gen_graham_family(m).unwrap();
        assert_eq!(brute_force(m, x.times()), 3 * m as Time);
        assert_eq!(opt(&x), 3 * m as Time);
        assert_eq!(lpt(&x).makespan(), 4 * m as Time - 1);
    }
}

#[test]
fn lptrev_family_values() {
    for m in 3..=7 {
        let x = gen_lptrev_family(m).unwrap();
        if m <= 4 {
            assert_eq!(brute_force(m, x.times()), 3 * m as Time + 1);
        }
        assert_eq!(opt(&x), 3 * m as Time + 1, "m={m}");
        assert_eq!(lpt_rev(&x).schedule.makespan(), 4 * m as Time - 1, "m={m}");
    }
}
