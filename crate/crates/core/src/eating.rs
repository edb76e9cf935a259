//! Event-driven simulation of two agents eating the cake from opposite
//! ends, used to cross-check [`two_agent_cake`](crate::mechanisms::two_agent_cake).
//!
//! Agent 1 starts at 0 moving right and agent 2 at 1 moving left. Both eat
//! at unit speed and jump instantly over cake they do not value.
//!
//! 1. While both still have valued cake between them they keep eating. If
//!    they meet, the meeting point is settled. When both are about to jump
//!    across each other, agent 2 jumps first and agent 1 meets her where
//!    she lands.
//! 2. Once one agent has nothing valued left between them she stops where
//!    she is. The other keeps eating (and jumping) until she has nothing
//!    valued left either, then eats the plain cake up to the stopped agent.
//! 3. Uneaten cake left of the meeting point goes to agent 2, the rest to
//!    agent 1.
//!
//! Times and positions are exact, so there are no tolerances anywhere.

use std::cmp::{max, min};

use crate::interval::IntervalSet;
use crate::mechanisms::two_agent_cake;
use crate::model::{Allocation, Valuation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventKind {
    EatStart,
    EatEnd,
    Jump,
    Stop,
    Meet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EatingEvent<T> {
    pub time: T,
    /// 0 for the agent starting at 0, 1 for the one starting at 1.
    pub agent: usize,
    pub kind: EventKind,
    /// Position of `agent` right after the event.
    pub position: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EatingTrace<T> {
    pub events: Vec<EatingEvent<T>>,
    pub meeting_point: T,
    /// Cake each agent ate herself.
    pub eaten: [IntervalSet<T>; 2],
    /// Uneaten cake handed out at the meeting point, per agent.
    pub leftovers: [IntervalSet<T>; 2],
    /// Total time each agent spent eating.
    pub eating_time: [T; 2],
}

/// Runs the eating procedure on reported valuations `v1` and `v2`.
pub fn simulate_eating<T: Scalar>(
    v1: &Valuation<T>,
    v2: &Valuation<T>,
) -> (Allocation<T>, EatingTrace<T>) {
    let mut sim = Simulation::new(v1.desired(), v2.desired());
    let meeting_point = sim.run();

    let eaten = [
        IntervalSet::from_pairs(sim.eaten[0].drain(..)).expect("eaten pieces lie in [0, 1]"),
        IntervalSet::from_pairs(sim.eaten[1].drain(..)).expect("eaten pieces lie in [0, 1]"),
    ];
    let uneaten = eaten[0].union(&eaten[1]).complement();
    let leftovers = [
        uneaten.clip(&meeting_point, &T::one()),
        uneaten.clip(&T::zero(), &meeting_point),
    ];
    let pieces = vec![eaten[0].union(&leftovers[0]), eaten[1].union(&leftovers[1])];
    let allocation = Allocation::new(pieces).expect("eaten plus leftovers partition [0, 1]");
    let trace = EatingTrace {
        events: sim.events,
        meeting_point,
        eaten,
        leftovers,
        eating_time: sim.eating_time,
    };
    (allocation, trace)
}

struct Simulation<'a, T> {
    desired: [&'a IntervalSet<T>; 2],
    position: [T; 2],
    time: T,
    eaten: [Vec<(T, T)>; 2],
    eating_time: [T; 2],
    events: Vec<EatingEvent<T>>,
}

impl<'a, T: Scalar> Simulation<'a, T> {
    fn new(first: &'a IntervalSet<T>, second: &'a IntervalSet<T>) -> Self {
        Self {
            desired: [first, second],
            position: [T::zero(), T::one()],
            time: T::zero(),
            eaten: [Vec::new(), Vec::new()],
            eating_time: [T::zero(), T::zero()],
            events: Vec::new(),
        }
    }

    fn log(&mut self, agent: usize, kind: EventKind) {
        self.events.push(EatingEvent {
            time: self.time.clone(),
            agent,
            kind,
            position: self.position[agent].clone(),
        });
    }

    /// Valued cake strictly between the agents that `agent` would reach
    /// next: `(start, end)` in her direction of travel.
    fn next_valued(&self, agent: usize) -> Option<(T, T)> {
        let between = self.desired[agent].clip(&self.position[0], &self.position[1]);
        if agent == 0 {
            between
                .intervals()
                .first()
                .map(|iv| (iv.left().clone(), iv.right().clone()))
        } else {
            between
                .intervals()
                .last()
                .map(|iv| (iv.right().clone(), iv.left().clone()))
        }
    }

    fn jump(&mut self, agent: usize, to: T) {
        if to != self.position[agent] {
            self.position[agent] = to;
            self.log(agent, EventKind::Jump);
        }
    }

    /// Moves `agent` by `distance` toward the other agent, eating on the way.
    fn eat(&mut self, agent: usize, distance: T) {
        let from = self.position[agent].clone();
        let to = if agent == 0 {
            from.clone() + distance.clone()
        } else {
            from.clone() - distance.clone()
        };
        self.log(agent, EventKind::EatStart);
        self.eaten[agent].push((min(&from, &to).clone(), max(&from, &to).clone()));
        self.eating_time[agent] = self.eating_time[agent].clone() + distance;
        self.position[agent] = to;
    }

    fn run(&mut self) -> T {
        if self.desired[0].is_empty() && self.desired[1].is_empty() {
            // Neither agent moves; everything is handed out right of 0.
            self.log(1, EventKind::Stop);
            self.log(0, EventKind::Stop);
            self.log(0, EventKind::Meet);
            return T::zero();
        }

        // Both agents eating.
        let stopped = loop {
            if self.position[0] == self.position[1] {
                self.log(0, EventKind::Meet);
                return self.position[0].clone();
            }
            let (next_first, next_second) = match (self.next_valued(0), self.next_valued(1)) {
                (_, None) => break 1,
                (None, Some(_)) => break 0,
                (Some(a), Some(b)) => (a, b),
            };
            let (start_first, end_first) = next_first;
            let (start_second, end_second) = next_second;

            self.jump(1, start_second);
            if start_first >= self.position[1] {
                // Agent 1's jump carries her onto agent 2.
                let meet = self.position[1].clone();
                self.jump(0, meet.clone());
                self.log(0, EventKind::Meet);
                return meet;
            }
            self.jump(0, start_first);

            let end_first = min(end_first, self.position[1].clone());
            let end_second = max(end_second, self.position[0].clone());
            let gap = self.position[1].clone() - self.position[0].clone();
            let step = min(
                min(
                    end_first - self.position[0].clone(),
                    self.position[1].clone() - end_second,
                ),
                gap * T::half(),
            );
            self.eat(0, step.clone());
            self.eat(1, step.clone());
            self.time = self.time.clone() + step;
            self.log(0, EventKind::EatEnd);
            self.log(1, EventKind::EatEnd);
        };

        // One agent has stopped; the other finishes alone.
        self.log(stopped, EventKind::Stop);
        let mover = 1 - stopped;
        loop {
            if self.position[0] == self.position[1] {
                self.log(mover, EventKind::Meet);
                return self.position[stopped].clone();
            }
            let distance = match self.next_valued(mover) {
                Some((start, end)) => {
                    self.jump(mover, start.clone());
                    if mover == 0 {
                        end - start
                    } else {
                        start - end
                    }
                }
                None => self.position[1].clone() - self.position[0].clone(),
            };
            self.eat(mover, distance.clone());
            self.time = self.time.clone() + distance;
            self.log(mover, EventKind::EatEnd);
        }
    }
}

/// Outcome of comparing the eating procedure with the crossing-point rule
/// on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison<T> {
    pub crossing_values: [T; 2],
    pub eating_values: [T; 2],
    /// Cake the two procedures hand to different agents.
    pub discrepancy: IntervalSet<T>,
}

impl<T: Scalar> OracleComparison<T> {
    pub fn values_match(&self) -> bool {
        self.crossing_values == self.eating_values
    }

    pub fn allocations_match(&self) -> bool {
        self.discrepancy.is_empty()
    }
}

pub fn compare_with_crossing<T: Scalar>(
    v1: &Valuation<T>,
    v2: &Valuation<T>,
) -> OracleComparison<T> {
    let crossing = two_agent_cake(v1, v2);
    let (eating, _) = simulate_eating(v1, v2);
    let values =
        |alloc: &Allocation<T>| [v1.value(&alloc.pieces()[0]), v2.value(&alloc.pieces()[1])];
    OracleComparison {
        crossing_values: values(&crossing),
        eating_values: values(&eating),
        discrepancy: crossing.pieces()[0].symmetric_difference(&eating.pieces()[0]),
    }
}
