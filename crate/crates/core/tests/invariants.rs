mod common;

use common::r;
use fairdiv::mechanisms::Mechanism;
use fairdiv::properties::{check_envy_free, check_proportional, indicator_vector};
use fairdiv::{Allocation, Instance, IntervalSet, Rational, Resource, Valuation};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Rational> {
    (1i64..=12).prop_flat_map(|d| (0..=d).prop_map(move |n| r(n, d)))
}

fn raw_pairs() -> impl Strategy<Value = Vec<(Rational, Rational)>> {
    prop::collection::vec((point(), point()), 0..5).prop_map(|v| {
        v.into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect()
    })
}

fn set() -> impl Strategy<Value = IntervalSet> {
    raw_pairs().prop_map(|p| IntervalSet::from_pairs(p).unwrap())
}

fn pairs_of(s: &IntervalSet) -> Vec<(Rational, Rational)> {
    s.intervals()
        .iter()
        .map(|i| (i.left().clone(), i.right().clone()))
        .collect()
}

/// Assigns each cell `[k/d, (k+1)/d]` to an agent.
fn partition(n: usize) -> impl Strategy<Value = Vec<IntervalSet>> {
    (1i64..=8).prop_flat_map(move |d| {
        prop::collection::vec(0..n, d as usize).prop_map(move |owners| {
            (0..n)
                .map(|agent| {
                    IntervalSet::from_pairs(
                        owners
                            .iter()
                            .enumerate()
                            .filter(|(_, &o)| o == agent)
                            .map(|(k, _)| (r(k as i64, d), r(k as i64 + 1, d))),
                    )
                    .unwrap()
                })
                .collect()
        })
    })
}

fn resource() -> impl Strategy<Value = Resource> {
    prop_oneof![Just(Resource::Cake), Just(Resource::Chore)]
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(s in set()) {
        prop_assert_eq!(IntervalSet::from_pairs(pairs_of(&s)).unwrap(), s.clone());
        for w in s.intervals().windows(2) {
            prop_assert!(w[0].right() < w[1].left());
        }
    }

    #[test]
    fn union_and_intersection_add_up(a in set(), b in set()) {
        prop_assert_eq!(
            a.union(&b).total_length() + a.intersect(&b).total_length(),
            a.total_length() + b.total_length()
        );
        prop_assert_eq!(a.subtract(&b).union(&a.intersect(&b)), a.clone());
        prop_assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn value_is_additive(w in set(), s in set(), t in set()) {
        let v = Valuation::new(w);
        let t = t.subtract(&s);
        prop_assert_eq!(v.value(&s.union(&t)), v.value(&s) + v.value(&t));
    }

    #[test]
    fn indicator_vector_sums_to_one(ws in prop::collection::vec(set(), 1..5), kind in resource()) {
        let inst = Instance::new(kind, ws.into_iter().map(Valuation::new).collect()).unwrap();
        prop_assert_eq!(indicator_vector(&inst).sum(), r(1, 1));
    }

    #[test]
    fn partitions_preserve_total_value(ws in prop::collection::vec(set(), 3), pieces in partition(3)) {
        let alloc = Allocation::new(pieces).unwrap();
        for w in ws {
            let v = Valuation::new(w);
            let sum = alloc.pieces().iter().fold(r(0, 1), |acc, p| acc + v.value(p));
            prop_assert_eq!(sum, v.total());
        }
    }

    #[test]
    fn envy_free_full_allocations_are_proportional(
        (ws, pieces) in (1usize..5).prop_flat_map(|n| (prop::collection::vec(set(), n), partition(n))),
        kind in resource(),
    ) {
        let n = ws.len();
        let inst = Instance::new(kind, ws.into_iter().map(Valuation::new).collect()).unwrap();
        let alloc = Allocation::new(pieces).unwrap();
        let ef = check_envy_free(&inst, &alloc).unwrap();
        let prop = check_proportional(&inst, &alloc).unwrap();
        if ef.is_holds() {
            prop_assert!(prop.is_holds());
        }
        if n == 2 {
            prop_assert_eq!(ef.is_holds(), prop.is_holds());
        }
    }

    #[test]
    fn two_agent_mechanisms_are_fair_and_full(a in set(), b in set(), kind in resource()) {
        let mech = match kind {
            Resource::Cake => Mechanism::TwoAgentCake,
            Resource::Chore => Mechanism::TwoAgentChore,
        };
        let inst = Instance::new(kind, vec![Valuation::new(a), Valuation::new(b)]).unwrap();
        let alloc = mech.allocate(&inst).unwrap();
        prop_assert!(!alloc.is_free_disposal());
        prop_assert!(check_envy_free(&inst, &alloc).unwrap().is_holds());
        prop_assert!(fairdiv::properties::check_pareto(&inst, &alloc).unwrap().is_holds());
    }

    #[test]
    fn violations_recheck(a in set(), b in set(), pieces in partition(2), kind in resource()) {
        let inst = Instance::new(kind, vec![Valuation::new(a), Valuation::new(b)]).unwrap();
        let alloc = Allocation::new(pieces).unwrap();
        let reports = [
            check_envy_free(&inst, &alloc).unwrap(),
            check_proportional(&inst, &alloc).unwrap(),
            fairdiv::properties::check_pareto(&inst, &alloc).unwrap(),
        ];
        for report in reports {
            if let Some(w) = report.witness {
                prop_assert!(w.recheck_allocation(&inst, &alloc));
            }
        }
    }
}
