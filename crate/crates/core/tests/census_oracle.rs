use proptest::prelude::*;
use torsion_core::exactmath::{isqrt, PrimePower};
use torsion_core::redux::{admissible_traces, brute_force_census, orders_divisible_by, trace_clause};

fn pp(p: u64, n: u32) -> PrimePower {
    PrimePower::new(p, n).unwrap()
}

#[test]
fn brute_force_matches_classification() {
    for (p, n) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2), (11, 1), (13, 1)] {
        let q = pp(p, n);
        let obs = brute_force_census(q).unwrap();
        assert_eq!(obs.traces(), admissible_traces(q).traces, "q={}", q.q());
        assert_eq!(obs.curves + obs.singular, q.q().pow(3));
        // the number of singular monic cubics over F_q is q^2
        assert_eq!(obs.singular, q.q().pow(2), "q={}", q.q());
    }
}

#[test]
fn excluded_orders_over_f27() {
    let obs = brute_force_census(pp(3, 3)).unwrap();
    let orders = obs.orders();
    for o in [25u64, 22] {
        assert!(!orders.contains(&o));
    }
    // 25 and 22 sit inside the Hasse interval; only the trace rules them out
    let c = admissible_traces(pp(3, 3));
    assert!(c.hasse_lo <= 22 && 25 <= c.hasse_hi);
    assert!(orders_divisible_by(pp(3, 3), 25).is_empty());
}

proptest! {
    #[test]
    fn traces_respect_hasse(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 101]), n in 1u32..5) {
        let q = pp(p, n);
        let c = admissible_traces(q);
        for &t in &c.traces {
            prop_assert!(t * t <= 4 * q.q() as i64);
            prop_assert!(trace_clause(q, t).is_some());
            prop_assert!(c.traces.contains(&-t));
        }
        // every trace prime to p occurs
        let m = isqrt(4 * q.q()) as i64;
        prop_assert_eq!(c.traces.iter().filter(|t| *t % p as i64 != 0).count() as i64,
            (-m..=m).filter(|t| t % p as i64 != 0).count() as i64);
    }
}
