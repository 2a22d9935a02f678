//! Generic remoteness / Sprague-Grundy engine over any [`Game`].
//!
//! The engine walks the reachable set depth-first with an explicit stack, so
//! long forced chains do not hit the native recursion limit. Every node is
//! evaluated once: remoteness by Smith's rule (one more than the smallest even
//! successor value if one exists, otherwise one more than the largest) and
//! the Sprague-Grundy value by `mex`.

use std::collections::hash_map::Entry;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::game::{mex, Game, Outcome, Remoteness, SgValue};

/// Default bound on the number of memoized positions.
pub const DEFAULT_MAX_NODES: usize = 10_000_000;

/// Both values the engine computes for a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Values {
    pub remoteness: Remoteness,
    pub sg: SgValue,
}

enum Slot {
    Open,
    Done(Values),
}

struct Frame<P> {
    position: P,
    successors: Vec<P>,
    next: usize,
    min_even: Option<u64>,
    max: Option<u64>,
    sgs: Vec<u64>,
}

impl<P> Frame<P> {
    fn new(position: P, successors: Vec<P>) -> Self {
        let sgs = Vec::with_capacity(successors.len());
        Frame {
            position,
            successors,
            next: 0,
            min_even: None,
            max: None,
            sgs,
        }
    }

    fn absorb(&mut self, v: Values) {
        let r = v.remoteness.0;
        if r % 2 == 0 {
            self.min_even = Some(self.min_even.map_or(r, |m| m.min(r)));
        }
        self.max = Some(self.max.map_or(r, |m| m.max(r)));
        self.sgs.push(v.sg.0);
    }

    fn finish(&mut self) -> Values {
        let remoteness = match (self.min_even, self.max) {
            (Some(e), _) => e + 1,
            (None, Some(m)) => m + 1,
            (None, None) => 0,
        };
        Values {
            remoteness: Remoteness(remoteness),
            sg: SgValue(mex(std::mem::take(&mut self.sgs))),
        }
    }
}

/// Memoizing solver bound to one game.
///
/// The memo table persists across queries, so sweeping many start positions
/// of the same game reuses all shared work. A `Solver` is not shared between
/// threads; build one per thread.
pub struct Solver<'g, G: Game> {
    game: &'g G,
    memo: FxHashMap<G::Position, Slot>,
    max_nodes: usize,
}

impl<'g, G: Game> Solver<'g, G> {
    pub fn new(game: &'g G) -> Self {
        Solver {
            game,
            memo: FxHashMap::default(),
            max_nodes: DEFAULT_MAX_NODES,
        }
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn game(&self) -> &'g G {
        self.game
    }

    /// Number of positions solved so far.
    pub fn solved(&self) -> usize {
        self.memo.len()
    }

    pub fn evaluate(&mut self, start: &G::Position) -> Result<Values> {
        if let Some(Slot::Done(v)) = self.memo.get(start) {
            return Ok(*v);
        }
        let mut stack: Vec<Frame<G::Position>> = Vec::new();
        if let Err(e) = self.open(start.clone(), &mut stack) {
            self.unwind(&stack);
            return Err(e);
        }
        match self.run(&mut stack) {
            Ok(()) => match self.memo.get(start) {
                Some(Slot::Done(v)) => Ok(*v),
                _ => Err(Error::Inconsistent("start position left unsolved".into())),
            },
            Err(e) => {
                self.unwind(&stack);
                Err(e)
            }
        }
    }

    fn open(&mut self, position: G::Position, stack: &mut Vec<Frame<G::Position>>) -> Result<()> {
        if self.memo.len() >= self.max_nodes {
            return Err(Error::Capacity {
                what: "reachable positions",
                limit: self.max_nodes,
            });
        }
        let successors = self.game.successors(&position);
        self.memo.insert(position.clone(), Slot::Open);
        stack.push(Frame::new(position, successors));
        Ok(())
    }

    fn run(&mut self, stack: &mut Vec<Frame<G::Position>>) -> Result<()> {
        while let Some(frame) = stack.last_mut() {
            let mut descend = None;
            while frame.next < frame.successors.len() {
                let child = &frame.successors[frame.next];
                match self.memo.get(child) {
                    Some(Slot::Done(v)) => {
                        let v = *v;
                        frame.absorb(v);
                        frame.next += 1;
                    }
                    Some(Slot::Open) => return Err(Error::Cycle),
                    None => {
                        descend = Some(child.clone());
                        break;
                    }
                }
            }
            match descend {
                Some(child) => self.open(child, stack)?,
                None => {
                    let mut frame = stack.pop().expect("non-empty stack");
                    let values = frame.finish();
                    self.memo.insert(frame.position, Slot::Done(values));
                }
            }
        }
        Ok(())
    }

    // Drop the in-progress markers of an aborted evaluation so the solver
    // stays usable for other queries.
    fn unwind(&mut self, stack: &[Frame<G::Position>]) {
        for frame in stack {
            if let Entry::Occupied(e) = self.memo.entry(frame.position.clone()) {
                if matches!(e.get(), Slot::Open) {
                    e.remove();
                }
            }
        }
    }

    pub fn remoteness(&mut self, position: &G::Position) -> Result<Remoteness> {
        Ok(self.evaluate(position)?.remoteness)
    }

    pub fn sg(&mut self, position: &G::Position) -> Result<SgValue> {
        Ok(self.evaluate(position)?.sg)
    }

    pub fn classify(&mut self, position: &G::Position) -> Result<Outcome> {
        let v = self.evaluate(position)?;
        let outcome = v.remoteness.outcome();
        if outcome != v.sg.outcome() {
            return Err(Error::Inconsistent(format!(
                "remoteness {} and SG value {} disagree on the outcome",
                v.remoteness, v.sg
            )));
        }
        Ok(outcome)
    }

    /// First successor, in enumeration order, whose remoteness is one less.
    pub fn optimal_move(&mut self, position: &G::Position) -> Result<Option<G::Position>> {
        let r = self.remoteness(position)?;
        if r.0 == 0 {
            return Ok(None);
        }
        for child in self.game.successors(position) {
            if self.remoteness(&child)?.0 + 1 == r.0 {
                return Ok(Some(child));
            }
        }
        Err(Error::Inconsistent(
            "no successor decreases remoteness by one".into(),
        ))
    }

    /// The forced optimal play from `position` down to a terminal.
    pub fn optimal_play(&mut self, position: &G::Position) -> Result<Vec<G::Position>> {
        let mut play = vec![position.clone()];
        let mut current = position.clone();
        while let Some(next) = self.optimal_move(&current)? {
            play.push(next.clone());
            current = next;
        }
        Ok(play)
    }

    /// True iff every move reachable from `start` strictly decreases the SG value.
    pub fn is_sg_decreasing(&mut self, start: &G::Position) -> Result<bool> {
        self.evaluate(start)?;
        let mut seen = FxHashSet::default();
        let mut todo = vec![start.clone()];
        seen.insert(start.clone());
        while let Some(p) = todo.pop() {
            let g = self.sg(&p)?;
            for child in self.game.successors(&p) {
                if self.sg(&child)? >= g {
                    return Ok(false);
                }
                if seen.insert(child.clone()) {
                    todo.push(child);
                }
            }
        }
        Ok(true)
    }

    /// Every position reachable from `start` (including it), in discovery order.
    pub fn reachable(&self, start: &G::Position) -> Result<Vec<G::Position>> {
        let mut seen = FxHashSet::default();
        let mut order = vec![start.clone()];
        seen.insert(start.clone());
        let mut i = 0;
        while i < order.len() {
            for child in self.game.successors(&order[i]) {
                if seen.insert(child.clone()) {
                    if order.len() >= self.max_nodes {
                        return Err(Error::Capacity {
                            what: "reachable positions",
                            limit: self.max_nodes,
                        });
                    }
                    order.push(child);
                }
            }
            i += 1;
        }
        Ok(order)
    }
}

pub fn smith_remoteness<G: Game>(game: &G, position: &G::Position) -> Result<Remoteness> {
    Solver::new(game).remoteness(position)
}

pub fn sg_value<G: Game>(game: &G, position: &G::Position) -> Result<SgValue> {
    Solver::new(game).sg(position)
}

pub fn classify<G: Game>(game: &G, position: &G::Position) -> Result<Outcome> {
    Solver::new(game).classify(position)
}

pub fn optimal_move<G: Game>(game: &G, position: &G::Position) -> Result<Option<G::Position>> {
    Solver::new(game).optimal_move(position)
}

pub fn is_sg_decreasing<G: Game>(game: &G, start: &G::Position) -> Result<bool> {
    Solver::new(game).is_sg_decreasing(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// a -> b -> c -> d as indices 0..4.
    struct Path(usize);

    impl Game for Path {
        type Position = usize;
        fn successors(&self, p: &usize) -> Vec<usize> {
            if p + 1 < self.0 {
                vec![p + 1]
            } else {
                vec![]
            }
        }
    }

    struct Loop;

    impl Game for Loop {
        type Position = u8;
        fn successors(&self, p: &u8) -> Vec<u8> {
            match p {
                0 => vec![1],
                1 => vec![2, 0],
                _ => vec![],
            }
        }
    }

    #[test]
    fn forced_chain() {
        let g = Path(4);
        let mut s = Solver::new(&g);
        let r: Vec<u64> = (0..4).map(|p| s.remoteness(&p).unwrap().0).collect();
        assert_eq!(r, vec![3, 2, 1, 0]);
        assert_eq!(s.optimal_move(&1).unwrap(), Some(2));
        assert_eq!(s.optimal_move(&3).unwrap(), None);
        assert_eq!(s.classify(&3).unwrap(), Outcome::P);
        assert_eq!(s.classify(&2).unwrap(), Outcome::N);
    }

    #[test]
    fn long_chain_does_not_overflow_the_stack() {
        let g = Path(1_000_000);
        assert_eq!(smith_remoteness(&g, &0).unwrap(), Remoteness(999_999));
    }

    #[test]
    fn cycle_is_reported_and_solver_recovers() {
        let mut s = Solver::new(&Loop);
        assert_eq!(s.remoteness(&0), Err(Error::Cycle));
        assert_eq!(s.remoteness(&2).unwrap(), Remoteness(0));
        assert_eq!(s.remoteness(&0), Err(Error::Cycle));
    }

    #[test]
    fn capacity_bound() {
        let g = Path(100);
        let mut s = Solver::new(&g).with_max_nodes(10);
        assert!(matches!(s.remoteness(&0), Err(Error::Capacity { limit: 10, .. })));
        assert_eq!(s.remoteness(&95).unwrap(), Remoteness(4));
    }
}
