//! Truthful envy-free division between two agents with arbitrary piecewise
//! uniform valuations.

use crate::interval::{atoms, IntervalSet};
use crate::model::{Allocation, Valuation};
use crate::scalar::Scalar;

/// Smallest `x` in `[0, 1]` with `v1([0, x]) = v2([x, 1])`.
///
/// `g(x) = v1([0, x]) - v2([x, 1])` is continuous, non-decreasing and
/// linear between consecutive endpoints of the two desired sets, with
/// `g(0) <= 0 <= g(1)`. Walk the segments and solve the first one on which
/// `g` reaches zero.
pub fn crossing_point<T: Scalar>(v1: &Valuation<T>, v2: &Valuation<T>) -> T {
    let mut g = -v2.total();
    for atom in atoms([v1.desired(), v2.desired()]) {
        if g.is_zero() {
            return atom.left().clone();
        }
        let mid = atom.midpoint();
        let slope = [v1, v2]
            .iter()
            .filter(|v| v.desired().contains(&mid))
            .fold(T::zero(), |acc, _| acc + T::one());
        let end = g.clone() + slope.clone() * atom.length();
        if !end.is_negative() {
            return atom.left().clone() - g / slope;
        }
        g = end;
    }
    // g(1) = v1([0, 1]) >= 0, so the loop always returns.
    T::one()
}

/// Cake division for two agents. With `x` the crossing point, agent 1
/// gets what she values in `[0, x]` plus what agent 2 does not value in
/// `[x, 1]`; agent 2 gets the rest.
pub fn two_agent_cake<T: Scalar>(v1: &Valuation<T>, v2: &Valuation<T>) -> Allocation<T> {
    let x = crossing_point(v1, v2);
    let first = first_piece_at(v1, v2, &x);
    let second = first.complement();
    Allocation::new(vec![first, second]).expect("complementary pieces cover [0, 1]")
}

/// Chore division for two agents: run the cake rule on the chore
/// valuations and swap the two pieces.
pub fn two_agent_chore<T: Scalar>(v1: &Valuation<T>, v2: &Valuation<T>) -> Allocation<T> {
    two_agent_cake(v1, v2)
        .reordered(&[1, 0])
        .expect("two pieces")
}

/// Agent 1's piece for cut position `x`.
fn first_piece_at<T: Scalar>(v1: &Valuation<T>, v2: &Valuation<T>, x: &T) -> IntervalSet<T> {
    v1.desired()
        .clip(&T::zero(), x)
        .union(&v2.desired().complement().clip(x, &T::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};

    type R = BigRational;

    fn r(n: i64, d: i64) -> R {
        R::from_ratio(n, d)
    }

    fn v(pairs: &[(R, R)]) -> Valuation<R> {
        Valuation::from_pairs(pairs.iter().cloned()).unwrap()
    }

    fn set(pairs: &[(R, R)]) -> IntervalSet<R> {
        IntervalSet::from_pairs(pairs.iter().cloned()).unwrap()
    }

    /// g evaluated directly from its definition.
    fn g(v1: &Valuation<R>, v2: &Valuation<R>, x: &R) -> R {
        v1.value(&IntervalSet::prefix(x.clone()).unwrap())
            - v2.value(&IntervalSet::single(x.clone(), r(1, 1)).unwrap())
    }

    /// Checks g(x) = 0 and g < 0 on a grid of 400 points left of x.
    fn assert_leftmost_zero(v1: &Valuation<R>, v2: &Valuation<R>, x: &R) {
        assert!(g(v1, v2, x).is_zero());
        for k in 0..400 {
            let y = r(k, 400);
            if &y < x {
                assert!(g(v1, v2, &y).is_negative(), "g({y}) >= 0 left of {x}");
            }
        }
    }

    #[test]
    fn crossing_point_examples() {
        let whole = v(&[(r(0, 1), r(1, 1))]);
        let half = v(&[(r(0, 1), r(1, 2))]);
        let x = crossing_point(&whole, &half);
        assert_eq!(x, r(1, 4));
        assert_leftmost_zero(&whole, &half, &x);

        assert_eq!(crossing_point(&whole, &whole), r(1, 2));

        let early = v(&[(r(0, 1), r(1, 5))]);
        let late = v(&[(r(9, 10), r(1, 1))]);
        let x = crossing_point(&early, &late);
        assert_eq!(x, r(1, 10));
        assert_leftmost_zero(&early, &late, &x);
    }

    #[test]
    fn crossing_point_takes_leftmost_of_flat_zero_set() {
        // g vanishes on all of [1/4, 3/4], where neither agent has value.
        let a = v(&[(r(0, 1), r(1, 4))]);
        let b = v(&[(r(3, 4), r(1, 1))]);
        assert_eq!(crossing_point(&a, &b), r(1, 4));
    }

    #[test]
    fn empty_valuations_cross_at_zero() {
        let none = Valuation::new(IntervalSet::<R>::empty());
        assert_eq!(crossing_point(&none, &none), r(0, 1));
        let alloc = two_agent_cake(&none, &none);
        assert_eq!(alloc.pieces()[0], IntervalSet::unit());
        assert!(alloc.pieces()[1].is_empty());
    }

    #[test]
    fn cake_examples() {
        let whole = v(&[(r(0, 1), r(1, 1))]);
        let left_half = v(&[(r(0, 1), r(1, 2))]);
        let right_half = v(&[(r(1, 2), r(1, 1))]);

        let a = two_agent_cake(&left_half, &whole);
        assert_eq!(a.pieces()[0], set(&[(r(0, 1), r(1, 2))]));
        assert_eq!(a.pieces()[1], set(&[(r(1, 2), r(1, 1))]));

        let a = two_agent_cake(&whole, &left_half);
        assert_eq!(
            a.pieces()[0],
            set(&[(r(0, 1), r(1, 4)), (r(1, 2), r(1, 1))])
        );
        assert_eq!(a.pieces()[1], set(&[(r(1, 4), r(1, 2))]));
        assert_eq!(whole.value(&a.pieces()[0]), r(3, 4));
        assert_eq!(left_half.value(&a.pieces()[1]), r(1, 4));

        let a = two_agent_cake(&right_half, &whole);
        assert_eq!(a.pieces()[0], set(&[(r(1, 2), r(3, 4))]));
        assert_eq!(
            a.pieces()[1],
            set(&[(r(0, 1), r(1, 2)), (r(3, 4), r(1, 1))])
        );

        let early = v(&[(r(0, 1), r(1, 5))]);
        let late = v(&[(r(9, 10), r(1, 1))]);
        let a = two_agent_cake(&early, &late);
        assert_eq!(a.pieces()[0], set(&[(r(0, 1), r(9, 10))]));
        assert_eq!(a.pieces()[1], set(&[(r(9, 10), r(1, 1))]));
        assert_eq!(early.value(&a.pieces()[0]), r(1, 5));
        assert_eq!(late.value(&a.pieces()[1]), r(1, 10));
    }

    #[test]
    fn chore_examples() {
        let whole = v(&[(r(0, 1), r(1, 1))]);
        let left_half = v(&[(r(0, 1), r(1, 2))]);
        let a = two_agent_chore(&whole, &left_half);
        assert_eq!(a.pieces()[0], set(&[(r(1, 4), r(1, 2))]));
        assert_eq!(
            a.pieces()[1],
            set(&[(r(0, 1), r(1, 4)), (r(1, 2), r(1, 1))])
        );
        assert_eq!(whole.value(&a.pieces()[0]), r(1, 4));
        assert_eq!(left_half.value(&a.pieces()[1]), r(1, 4));

        let a = two_agent_chore(&whole, &whole);
        assert_eq!(a.pieces()[0], set(&[(r(1, 2), r(1, 1))]));
        assert_eq!(a.pieces()[1], set(&[(r(0, 1), r(1, 2))]));

        let early = v(&[(r(0, 1), r(1, 5))]);
        let late = v(&[(r(9, 10), r(1, 1))]);
        let a = two_agent_chore(&early, &late);
        assert_eq!(a.pieces()[0], set(&[(r(9, 10), r(1, 1))]));
        assert_eq!(a.pieces()[1], set(&[(r(0, 1), r(9, 10))]));
        assert_eq!(early.value(&a.pieces()[0]), r(0, 1));
        assert_eq!(late.value(&a.pieces()[1]), r(0, 1));
    }
}
