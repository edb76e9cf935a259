//! Mechanisms for any number of agents where agent `i` values exactly
//! `[0, x_i]` (a deadline).

use std::cmp::max;

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::model::{Allocation, PrefixEndpoint};
use crate::scalar::Scalar;

/// One round of [`prefix_cake`]: the surviving agents, in their original
/// order, each received a strip of length `width` starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CakeRound<T> {
    pub offset: T,
    pub width: T,
    pub agents: Vec<usize>,
    /// Original index of the agent that left after this round.
    pub exited: usize,
}

/// Cake cutting for deadline valuations.
///
/// Each round lays down consecutive equal-width strips on the remaining
/// segment, one per surviving agent in order, with the widest width such
/// that every agent values her whole strip. The lowest-numbered agent
/// whose strip ends at her deadline leaves. The last agent takes whatever
/// is left.
pub fn prefix_cake<T: Scalar>(xs: &[PrefixEndpoint<T>]) -> Result<Allocation<T>> {
    prefix_cake_rounds(xs).map(|(alloc, _)| alloc)
}

/// [`prefix_cake`] along with the per-round record.
pub fn prefix_cake_rounds<T: Scalar>(
    xs: &[PrefixEndpoint<T>],
) -> Result<(Allocation<T>, Vec<CakeRound<T>>)> {
    if xs.is_empty() {
        return Err(Error::NoAgents);
    }
    let mut pieces: Vec<Vec<(T, T)>> = vec![Vec::new(); xs.len()];
    let mut active: Vec<usize> = (0..xs.len()).collect();
    let mut offset = T::zero();
    let mut rounds = Vec::new();

    while active.len() > 1 {
        // deadlines measured from the start of the remaining segment
        let reach: Vec<T> = active
            .iter()
            .map(|&a| max(xs[a].get().clone() - offset.clone(), T::zero()))
            .collect();
        let width = reach
            .iter()
            .enumerate()
            .map(|(pos, x)| x.clone() / T::from_count(pos + 1))
            .min()
            .expect("at least two agents");

        let mut start = offset.clone();
        for &agent in &active {
            let end = start.clone() + width.clone();
            pieces[agent].push((start, end.clone()));
            start = end;
        }

        let exit_pos = reach
            .iter()
            .enumerate()
            .position(|(pos, x)| T::from_count(pos + 1) * width.clone() == *x)
            .ok_or_else(|| {
                Error::InvariantViolated("no agent reached her deadline in a round".into())
            })?;
        let exited = active.remove(exit_pos);
        rounds.push(CakeRound {
            offset: offset.clone(),
            width,
            agents: {
                let mut agents = active.clone();
                agents.insert(exit_pos, exited);
                agents
            },
            exited,
        });
        offset = start;
    }
    pieces[active[0]].push((offset, T::one()));

    let pieces = pieces
        .into_iter()
        .map(IntervalSet::from_pairs)
        .collect::<Result<Vec<_>>>()?;
    Ok((Allocation::new(pieces)?, rounds))
}

/// Chore division for deadline valuations.
///
/// Agents `1..n-1` in turn take the leftmost part of the remaining chore
/// worth `x_i / n` to them together with everything right of `x_i`; an
/// agent left with less than `x_i / n` of value takes the entire remaining
/// chore. Parts of the valued share lying beyond another agent's deadline
/// go to the lowest-indexed such agent instead. Agent `n` takes the rest.
pub fn prefix_chore<T: Scalar>(xs: &[PrefixEndpoint<T>]) -> Result<Allocation<T>> {
    let n = xs.len();
    if n == 0 {
        return Err(Error::NoAgents);
    }
    let quota_divisor = T::from_count(n);
    let mut pieces = vec![IntervalSet::empty(); n];
    let mut remaining = IntervalSet::unit();

    for i in 0..n - 1 {
        if remaining.interval_count() > 1 {
            return Err(Error::InvariantViolated(format!(
                "remaining chore {remaining} is not a single interval"
            )));
        }
        let deadline = xs[i].get();
        let quota = deadline.clone() / quota_divisor.clone();
        let valued = remaining.clip(&T::zero(), deadline);

        let (share, tail) = if valued.total_length() < quota {
            let tail = remaining.subtract(&valued);
            (valued, tail)
        } else {
            let cut = remaining
                .point_at_length(&quota)
                .expect("remaining chore holds at least the quota");
            (
                remaining.clip(&T::zero(), &cut),
                remaining.clip(deadline, &T::one()),
            )
        };
        remaining = remaining.subtract(&share).subtract(&tail);

        let mut kept = share;
        for (j, other) in xs.iter().enumerate() {
            if j == i || kept.is_empty() {
                continue;
            }
            let gift = kept.clip(other.get(), &T::one());
            if !gift.is_empty() {
                kept = kept.subtract(&gift);
                pieces[j] = pieces[j].union(&gift);
            }
        }
        pieces[i] = pieces[i].union(&kept).union(&tail);
    }
    pieces[n - 1] = pieces[n - 1].union(&remaining);
    Allocation::new(pieces)
}
