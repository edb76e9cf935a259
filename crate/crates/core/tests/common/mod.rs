#![allow(dead_code)]

use fairdiv::{Instance, IntervalSet, Rational, Resource, Scalar, Valuation};
use rand::Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// Up to `max_pieces` intervals with endpoints `k/d`, `d` drawn from
/// `denominators`.
pub fn random_valuation<G: Rng>(rng: &mut G, max_pieces: usize, denominators: &[i64]) -> Valuation {
    let pieces = rng.gen_range(0..=max_pieces);
    let pairs: Vec<(Rational, Rational)> = (0..pieces)
        .map(|_| {
            let d = denominators[rng.gen_range(0..denominators.len())];
            let a = rng.gen_range(0..=d);
            let b = rng.gen_range(0..=d);
            (r(a.min(b), d), r(a.max(b), d))
        })
        .collect();
    Valuation::from_pairs(pairs).unwrap()
}

/// A union of cells `[k/d, (k+1)/d]` chosen by the bits of `mask`.
pub fn cells(mask: u32, d: i64) -> IntervalSet {
    IntervalSet::from_pairs(
        (0..d)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (r(k, d), r(k + 1, d))),
    )
    .unwrap()
}

pub fn instance(resource: Resource, valuations: Vec<Valuation>) -> Instance {
    Instance::new(resource, valuations).unwrap()
}
