mod common;

use common::{cells, r, random_valuation};
use fairdiv::mechanisms::{crossing_point, prefix_cake_rounds, Mechanism};
use fairdiv::properties::{
    check_envy_free, check_pareto, check_proportional, search_deviations, DeviationFamily,
    DeviationSearch,
};
use fairdiv::{Instance, IntervalSet, PrefixEndpoint, Rational, Resource, Valuation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn span(a: Rational, b: Rational) -> Valuation {
    Valuation::from_pairs([(a, b)]).unwrap()
}

/// Leftmost zero of `v1([0,x]) - v2([x,1])` on the grid `k/d`, used as an
/// oracle when the true crossing point lies on that grid.
fn grid_crossing(v1: &Valuation, v2: &Valuation, d: i64) -> Option<Rational> {
    (0..=d).map(|k| r(k, d)).find(|x| {
        v1.value(&IntervalSet::prefix(x.clone()).unwrap())
            == v2.value(&IntervalSet::single(x.clone(), r(1, 1)).unwrap_or_default())
    })
}

#[test]
fn crossing_point_matches_grid_scan_on_cell_unions() {
    // With cell unions on 1/8 the crossing point lies on the 1/16 grid.
    for a in 0u32..256 {
        for b in (0u32..256).step_by(7) {
            let v1 = Valuation::new(cells(a, 8));
            let v2 = Valuation::new(cells(b, 8));
            assert_eq!(Some(crossing_point(&v1, &v2)), grid_crossing(&v1, &v2, 16));
        }
    }
}

#[test]
fn prefix_cake_rounds_hand_out_equal_strips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let xs: Vec<PrefixEndpoint> = (0..n)
            .map(|_| PrefixEndpoint::new(r(rng.gen_range(0..=12), 12)).unwrap())
            .collect();
        let (_, rounds) = prefix_cake_rounds(&xs).unwrap();
        let mut offset = r(0, 1);
        for round in &rounds {
            assert_eq!(round.offset, offset);
            offset += round.width.clone() * Rational::from_integer(round.agents.len().into());
            assert!(round.agents.contains(&round.exited));
        }
        assert!(offset <= r(1, 1));
    }
}

#[test]
fn prefix_mechanisms_on_random_deadlines() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let xs: Vec<Rational> = (0..n).map(|_| r(rng.gen_range(0..=30), 30)).collect();
        let cake = Instance::prefix(Resource::Cake, &xs).unwrap();
        let alloc = Mechanism::PrefixCake.allocate(&cake).unwrap();
        assert!(check_envy_free(&cake, &alloc).unwrap().is_holds());
        assert!(check_pareto(&cake, &alloc).unwrap().is_holds());

        let chore = Instance::prefix(Resource::Chore, &xs).unwrap();
        let alloc = Mechanism::PrefixChore.allocate(&chore).unwrap();
        assert!(check_proportional(&chore, &alloc).unwrap().is_holds());
        assert!(check_pareto(&chore, &alloc).unwrap().is_holds());
    }
}

#[test]
fn two_agent_mechanisms_resist_subset_lies() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let search = DeviationSearch::new(6, DeviationFamily::Subsets);
    for _ in 0..20 {
        let a = Valuation::new(cells(rng.gen_range(0..64), 6));
        let b = Valuation::new(cells(rng.gen_range(0..64), 6));
        for (mech, kind) in [
            (Mechanism::TwoAgentCake, Resource::Cake),
            (Mechanism::TwoAgentChore, Resource::Chore),
        ] {
            let inst = Instance::new(kind, vec![a.clone(), b.clone()]).unwrap();
            for agent in 0..2 {
                let report = search_deviations(mech, &inst, agent, &search).unwrap();
                assert!(report.is_holds(), "{mech} {:?}", report.witness);
            }
        }
    }
}

#[test]
fn two_agent_chore_is_envy_free_for_chores() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let a = random_valuation(&mut rng, 3, &[3, 4, 5, 9]);
        let b = random_valuation(&mut rng, 3, &[3, 4, 5, 9]);
        let inst = Instance::chore(vec![a, b]).unwrap();
        let alloc = Mechanism::TwoAgentChore.allocate(&inst).unwrap();
        assert!(check_envy_free(&inst, &alloc).unwrap().is_holds());
        assert!(check_pareto(&inst, &alloc).unwrap().is_holds());
    }
}

#[test]
fn worked_examples_through_the_dispatcher() {
    let whole = || span(r(0, 1), r(1, 1));
    let cases = [
        (
            Mechanism::TwoAgentCake,
            vec![span(r(0, 1), r(1, 5)), span(r(9, 10), r(1, 1))],
            vec![r(1, 5), r(1, 10)],
        ),
        (
            Mechanism::TwoAgentChore,
            vec![whole(), span(r(0, 1), r(1, 2))],
            vec![r(1, 4), r(1, 4)],
        ),
        (
            Mechanism::TwoAgentChore,
            vec![whole(), whole()],
            vec![r(1, 2), r(1, 2)],
        ),
        (
            Mechanism::CutAndChoose,
            vec![whole(), whole()],
            vec![r(1, 2), r(1, 2)],
        ),
    ];
    for (mech, vals, expected) in cases {
        let inst = Instance::new(mech.resource(), vals).unwrap();
        assert_eq!(
            mech.allocate(&inst).unwrap().values(&inst).unwrap(),
            expected,
            "{mech}"
        );
    }
    let xs = [r(1, 1), r(1, 2), r(9, 10)];
    let cake = Instance::prefix(Resource::Cake, &xs).unwrap();
    assert_eq!(
        Mechanism::PrefixCake
            .allocate(&cake)
            .unwrap()
            .values(&cake)
            .unwrap(),
        vec![r(17, 40), r(1, 4), r(13, 40)]
    );
    let chore = Instance::prefix(Resource::Chore, &[r(3, 5), r(3, 10), r(9, 10)]).unwrap();
    assert_eq!(
        Mechanism::PrefixChore
            .allocate(&chore)
            .unwrap()
            .values(&chore)
            .unwrap(),
        vec![r(1, 5), r(1, 10), r(0, 1)]
    );
}
