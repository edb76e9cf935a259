//! Canonical finite unions of closed subintervals of `[0, 1]`.
//!
//! Pieces are compared modulo finite point sets: a canonical set never
//! stores a degenerate interval, and intervals that touch are merged. Two
//! sets with equal measure-theoretic content therefore have identical
//! representations, so `==` is measure equality.

use std::cmp::{max, min};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval<T> {
    left: T,
    right: T,
}

impl<T: Scalar> Interval<T> {
    /// Raw closed interval; no range checks. Use [`IntervalSet`] for
    /// validated pieces.
    pub fn new(left: T, right: T) -> Self {
        Self { left, right }
    }

    pub fn left(&self) -> &T {
        &self.left
    }

    pub fn right(&self) -> &T {
        &self.right
    }

    pub fn length(&self) -> T {
        self.right.clone() - self.left.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.left.clone() + self.right.clone()) * T::half()
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetOp {
    Union,
    Intersect,
    Subtract,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalSet<T> {
    intervals: Vec<Interval<T>>,
}

impl<T: Scalar> Default for IntervalSet<T> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<T: Scalar> IntervalSet<T> {
    pub fn empty() -> Self {
        Self {
            intervals: Vec::new(),
        }
    }

    /// The whole resource `[0, 1]`.
    pub fn unit() -> Self {
        Self::span(T::zero(), T::one())
    }

    /// Canonicalizes raw `(left, right)` pairs: zero-length pairs are
    /// dropped and overlapping or touching pairs merged.
    pub fn from_pairs<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (T, T)>,
    {
        let mut intervals = Vec::new();
        for (left, right) in raw {
            for endpoint in [&left, &right] {
                if endpoint < &T::zero() || endpoint > &T::one() {
                    return Err(Error::OutOfRange(endpoint.to_string()));
                }
            }
            if left > right {
                return Err(Error::MalformedInterval {
                    left: left.to_string(),
                    right: right.to_string(),
                });
            }
            if left < right {
                intervals.push(Interval { left, right });
            }
        }
        intervals.sort();
        let mut out = Vec::with_capacity(intervals.len());
        for iv in intervals {
            push_merged(&mut out, iv.left, iv.right);
        }
        Ok(Self { intervals: out })
    }

    /// A single interval `[left, right]`.
    pub fn single(left: T, right: T) -> Result<Self> {
        Self::from_pairs([(left, right)])
    }

    /// `[0, x]`.
    pub fn prefix(x: T) -> Result<Self> {
        Self::single(T::zero(), x)
    }

    /// `[left, right]` clamped into `[0, 1]`; empty when `left >= right`.
    pub(crate) fn span(left: T, right: T) -> Self {
        let left = max(left, T::zero());
        let right = min(right, T::one());
        let mut intervals = Vec::new();
        if left < right {
            intervals.push(Interval { left, right });
        }
        Self { intervals }
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// At most one interval.
    pub fn is_connected(&self) -> bool {
        self.intervals.len() <= 1
    }

    pub fn total_length(&self) -> T {
        self.intervals
            .iter()
            .fold(T::zero(), |acc, iv| acc + iv.length())
    }

    pub fn endpoints(&self) -> impl Iterator<Item = &T> + '_ {
        self.intervals.iter().flat_map(|iv| [&iv.left, &iv.right])
    }

    /// Closed-interval membership.
    pub fn contains(&self, x: &T) -> bool {
        self.intervals
            .iter()
            .any(|iv| &iv.left <= x && x <= &iv.right)
    }

    pub fn apply(&self, op: SetOp, other: &Self) -> Self {
        match op {
            SetOp::Union => self.union(other),
            SetOp::Intersect => self.intersect(other),
            SetOp::Subtract => self.subtract(other),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.intervals.len() + other.intervals.len());
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() || j < other.intervals.len() {
            let take_self = match (self.intervals.get(i), other.intervals.get(j)) {
                (Some(a), Some(b)) => a.left <= b.left,
                (Some(_), None) => true,
                _ => false,
            };
            let iv = if take_self {
                i += 1;
                &self.intervals[i - 1]
            } else {
                j += 1;
                &other.intervals[j - 1]
            };
            push_merged(&mut out, iv.left.clone(), iv.right.clone());
        }
        Self { intervals: out }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while let (Some(a), Some(b)) = (self.intervals.get(i), other.intervals.get(j)) {
            let lo = max(&a.left, &b.left).clone();
            let hi = min(&a.right, &b.right).clone();
            push_merged(&mut out, lo, hi);
            if a.right < b.right {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self { intervals: out }
    }

    /// `self` minus `other`, up to measure zero.
    pub fn subtract(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let mut j = 0;
        for a in &self.intervals {
            let mut cursor = a.left.clone();
            while j < other.intervals.len() && other.intervals[j].right <= cursor {
                j += 1;
            }
            let mut k = j;
            while let Some(b) = other.intervals.get(k) {
                if b.left >= a.right {
                    break;
                }
                push_merged(&mut out, cursor.clone(), b.left.clone());
                cursor = max(cursor, b.right.clone());
                k += 1;
            }
            push_merged(&mut out, cursor, a.right.clone());
        }
        Self { intervals: out }
    }

    /// `[0, 1]` minus `self`.
    pub fn complement(&self) -> Self {
        Self::unit().subtract(self)
    }

    /// `self ∩ [lo, hi]`.
    pub fn clip(&self, lo: &T, hi: &T) -> Self {
        if lo >= hi {
            return Self::empty();
        }
        self.intersect(&Self::span(lo.clone(), hi.clone()))
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.subtract(other).union(&other.subtract(self))
    }

    /// Length of `self ∩ [0, x]`.
    pub fn length_up_to(&self, x: &T) -> T {
        self.intervals.iter().fold(T::zero(), |acc, iv| {
            if &iv.left >= x {
                acc
            } else {
                acc + min(&iv.right, x).clone() - iv.left.clone()
            }
        })
    }

    /// Smallest `p` with `length_up_to(p) == target`, or `None` if the set
    /// is shorter than `target`.
    pub fn point_at_length(&self, target: &T) -> Option<T> {
        if target <= &T::zero() {
            return (target == &T::zero()).then(T::zero);
        }
        let mut acc = T::zero();
        for iv in &self.intervals {
            let len = iv.length();
            if acc.clone() + len.clone() >= *target {
                return Some(iv.left.clone() + (target.clone() - acc));
            }
            acc = acc + len;
        }
        None
    }
}

impl<T: Scalar> fmt::Display for IntervalSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{iv}")?;
        }
        f.write_str("}")
    }
}

/// Appends `[left, right]` to a sorted run, merging with the last interval
/// when they overlap or touch. Degenerate input is ignored.
fn push_merged<T: Scalar>(out: &mut Vec<Interval<T>>, left: T, right: T) {
    if left >= right {
        return;
    }
    if let Some(last) = out.last_mut() {
        if left <= last.right {
            if right > last.right {
                last.right = right;
            }
            return;
        }
    }
    out.push(Interval { left, right });
}

/// Sorted distinct breakpoints `0 = b_0 < ... < b_m = 1` over the
/// endpoints of the given sets, and the atoms `[b_k, b_{k+1}]` they cut.
pub fn atoms<'a, T, I>(sets: I) -> Vec<Interval<T>>
where
    T: Scalar,
    I: IntoIterator<Item = &'a IntervalSet<T>>,
{
    let mut points: Vec<T> = vec![T::zero(), T::one()];
    for set in sets {
        points.extend(set.endpoints().cloned());
    }
    points.sort();
    points.dedup();
    points
        .windows(2)
        .map(|w| Interval::new(w[0].clone(), w[1].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = BigRational;

    fn r(n: i64, d: i64) -> R {
        R::from_ratio(n, d)
    }

    fn set(pairs: &[(i64, i64, i64, i64)]) -> IntervalSet<R> {
        IntervalSet::from_pairs(pairs.iter().map(|&(a, b, c, d)| (r(a, b), r(c, d)))).unwrap()
    }

    #[test]
    fn canonicalize_merges_adjacent() {
        assert_eq!(set(&[(0, 1, 1, 2), (1, 2, 1, 1)]), IntervalSet::unit());
    }

    #[test]
    fn canonicalize_drops_points() {
        assert!(set(&[(1, 4, 1, 4)]).is_empty());
    }

    #[test]
    fn canonicalize_merges_overlap() {
        assert_eq!(set(&[(0, 1, 1, 3), (1, 4, 1, 2)]), set(&[(0, 1, 1, 2)]));
        // unsorted input with containment
        assert_eq!(
            set(&[(1, 2, 3, 4), (0, 1, 1, 10), (5, 8, 11, 16)]),
            set(&[(0, 1, 1, 10), (1, 2, 3, 4)])
        );
    }

    #[test]
    fn canonicalize_errors() {
        assert_eq!(
            IntervalSet::from_pairs([(r(-1, 2), r(1, 2))]),
            Err(Error::OutOfRange("-1/2".into()))
        );
        assert_eq!(
            IntervalSet::from_pairs([(r(0, 1), r(3, 2))]),
            Err(Error::OutOfRange("3/2".into()))
        );
        assert!(matches!(
            IntervalSet::from_pairs([(r(1, 2), r(1, 4))]),
            Err(Error::MalformedInterval { .. })
        ));
    }

    #[test]
    fn set_algebra_examples() {
        let half = set(&[(0, 1, 1, 2)]);
        assert_eq!(half.intersect(&set(&[(1, 4, 1, 1)])), set(&[(1, 4, 1, 2)]));
        assert_eq!(
            IntervalSet::unit().subtract(&set(&[(1, 4, 1, 2)])),
            set(&[(0, 1, 1, 4), (1, 2, 1, 1)])
        );
        let disjoint = set(&[(0, 1, 1, 5)]).union(&set(&[(9, 10, 1, 1)]));
        assert_eq!(disjoint.interval_count(), 2);
        assert_eq!(
            half.apply(SetOp::Union, &set(&[(1, 2, 3, 4)])),
            set(&[(0, 1, 3, 4)])
        );
    }

    #[test]
    fn subtract_handles_many_holes() {
        let a = set(&[(0, 1, 1, 2), (3, 4, 1, 1)]);
        let b = set(&[(1, 8, 1, 4), (3, 8, 7, 8)]);
        assert_eq!(
            a.subtract(&b),
            set(&[(0, 1, 1, 8), (1, 4, 3, 8), (7, 8, 1, 1)])
        );
        assert_eq!(a.subtract(&a), IntervalSet::empty());
        assert_eq!(a.subtract(&IntervalSet::empty()), a);
    }

    #[test]
    fn touching_results_stay_canonical() {
        let a = set(&[(0, 1, 1, 2)]);
        let b = set(&[(1, 2, 1, 1)]);
        assert_eq!(a.union(&b), IntervalSet::unit());
        assert!(a.intersect(&b).is_empty());
    }

    #[test]
    fn prefix_lengths() {
        let s = set(&[(1, 10, 2, 10), (5, 10, 7, 10)]);
        assert_eq!(s.length_up_to(&r(0, 1)), r(0, 1));
        assert_eq!(s.length_up_to(&r(6, 10)), r(2, 10));
        assert_eq!(s.point_at_length(&r(0, 1)), Some(r(0, 1)));
        assert_eq!(s.point_at_length(&r(1, 10)), Some(r(2, 10)));
        assert_eq!(s.point_at_length(&r(15, 100)), Some(r(55, 100)));
        assert_eq!(s.point_at_length(&r(3, 10)), Some(r(7, 10)));
        assert_eq!(s.point_at_length(&r(4, 10)), None);
    }

    #[test]
    fn contains_is_closed() {
        let s = set(&[(1, 4, 1, 2)]);
        assert!(s.contains(&r(1, 4)));
        assert!(s.contains(&r(1, 2)));
        assert!(!s.contains(&r(3, 4)));
    }

    #[test]
    fn atoms_cover_unit() {
        let a = set(&[(1, 4, 1, 2)]);
        let b = set(&[(1, 3, 1, 1)]);
        let atoms = atoms([&a, &b]);
        let ends: Vec<_> = atoms.iter().map(|iv| iv.right().clone()).collect();
        assert_eq!(ends, vec![r(1, 4), r(1, 3), r(1, 2), r(1, 1)]);
    }

    #[test]
    fn display() {
        assert_eq!(
            set(&[(0, 1, 1, 4), (1, 2, 1, 1)]).to_string(),
            "{[0, 1/4], [1/2, 1]}"
        );
        assert_eq!(IntervalSet::<R>::empty().to_string(), "{}");
    }
}
