//! Reference protocols the truthful mechanisms are contrasted with.

use crate::interval::IntervalSet;
use crate::model::{Allocation, PrefixEndpoint, Valuation};
use crate::scalar::Scalar;

/// Agent 1 cuts at the leftmost point splitting her value in half; agent 2
/// picks the side she values more, the left one on ties.
pub fn cut_and_choose<T: Scalar>(v1: &Valuation<T>, v2: &Valuation<T>) -> Allocation<T> {
    let cut = v1
        .desired()
        .point_at_length(&(v1.total() * T::half()))
        .expect("half of the total is reachable");
    let left = IntervalSet::span(T::zero(), cut.clone());
    let right = IntervalSet::span(cut, T::one());
    let pieces = if v2.value(&left) >= v2.value(&right) {
        vec![right, left]
    } else {
        vec![left, right]
    };
    Allocation::new(pieces).expect("two sides of one cut")
}

/// Connected envy-free division of two deadline valuations that throws
/// away everything past the later deadline. The agent with the later
/// deadline `x` takes `[x/2, x]` when she is agent 1 and `[0, x/2]`
/// otherwise; the other agent takes the remaining half of `[0, x]`.
pub fn connected_free_disposal<T: Scalar>(
    x1: &PrefixEndpoint<T>,
    x2: &PrefixEndpoint<T>,
) -> Allocation<T> {
    let (first, second) = if x1.get() >= x2.get() {
        let x = x1.get().clone();
        let mid = x.clone() * T::half();
        (
            IntervalSet::span(mid.clone(), x),
            IntervalSet::span(T::zero(), mid),
        )
    } else {
        let x = x2.get().clone();
        let mid = x.clone() * T::half();
        (
            IntervalSet::span(T::zero(), mid.clone()),
            IntervalSet::span(mid, x),
        )
    };
    Allocation::partial(vec![first, second]).expect("halves of one interval")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = BigRational;

    fn r(n: i64, d: i64) -> R {
        R::from_ratio(n, d)
    }

    fn prefix(n: i64, d: i64) -> Valuation<R> {
        Valuation::prefix(r(n, d)).unwrap()
    }

    fn end(n: i64, d: i64) -> PrefixEndpoint<R> {
        PrefixEndpoint::new(r(n, d)).unwrap()
    }

    #[test]
    fn honest_cutter_gets_half() {
        let (v1, v2) = (prefix(1, 1), prefix(1, 4));
        let alloc = cut_and_choose(&v1, &v2);
        assert_eq!(alloc.pieces()[1], IntervalSet::prefix(r(1, 2)).unwrap());
        assert_eq!(v1.value(&alloc.pieces()[0]), r(1, 2));
        assert_eq!(v2.value(&alloc.pieces()[1]), r(1, 4));
    }

    #[test]
    fn misreporting_cutter_gets_three_quarters() {
        let truth = prefix(1, 1);
        let alloc = cut_and_choose(&prefix(1, 2), &prefix(1, 4));
        assert_eq!(alloc.pieces()[1], IntervalSet::prefix(r(1, 4)).unwrap());
        assert_eq!(truth.value(&alloc.pieces()[0]), r(3, 4));
    }

    #[test]
    fn chooser_takes_left_on_ties() {
        let v = prefix(1, 1);
        let alloc = cut_and_choose(&v, &v);
        assert_eq!(alloc.pieces()[1], IntervalSet::prefix(r(1, 2)).unwrap());
        let inst = crate::model::Instance::cake(vec![v.clone(), v]).unwrap();
        assert_eq!(alloc.values(&inst).unwrap(), vec![r(1, 2), r(1, 2)]);
    }

    #[test]
    fn cutter_without_value_cuts_at_zero() {
        let none = Valuation::new(IntervalSet::<R>::empty());
        let alloc = cut_and_choose(&none, &prefix(1, 1));
        assert!(alloc.pieces()[0].is_empty());
        assert_eq!(alloc.pieces()[1], IntervalSet::unit());
    }

    #[test]
    fn free_disposal_examples() {
        let alloc = connected_free_disposal(&end(1, 2), &end(1, 2));
        assert_eq!(
            alloc.pieces()[0],
            IntervalSet::single(r(1, 4), r(1, 2)).unwrap()
        );
        assert_eq!(alloc.pieces()[1], IntervalSet::prefix(r(1, 4)).unwrap());
        assert_eq!(
            alloc.unallocated(),
            IntervalSet::single(r(1, 2), r(1, 1)).unwrap()
        );
        assert!(alloc.is_free_disposal());

        let alloc = connected_free_disposal(&end(1, 1), &end(1, 2));
        assert_eq!(
            alloc.pieces()[0],
            IntervalSet::single(r(1, 2), r(1, 1)).unwrap()
        );
        assert_eq!(alloc.pieces()[1], IntervalSet::prefix(r(1, 2)).unwrap());

        let alloc = connected_free_disposal(&end(1, 4), &end(3, 4));
        assert_eq!(alloc.pieces()[0], IntervalSet::prefix(r(3, 8)).unwrap());
        assert_eq!(
            alloc.pieces()[1],
            IntervalSet::single(r(3, 8), r(3, 4)).unwrap()
        );
        assert_eq!(prefix(1, 4).value(&alloc.pieces()[0]), r(1, 4));
        assert_eq!(prefix(3, 4).value(&alloc.pieces()[1]), r(3, 8));
    }
}
