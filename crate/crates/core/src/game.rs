//! Game abstraction shared by the generic engine and every adapter.

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

/// A finite, acyclic impartial game given by its move relation.
///
/// Positions are opaque; the engine only needs equality and hashing. The
/// order of [`Game::successors`] is significant: it drives tie-breaking in
/// [`crate::engine::Solver::optimal_move`], so every adapter documents it.
pub trait Game {
    type Position: Clone + Eq + Hash;

    /// All positions reachable in one move, in the adapter's documented order.
    fn successors(&self, position: &Self::Position) -> Vec<Self::Position>;

    fn is_terminal(&self, position: &Self::Position) -> bool {
        self.successors(position).is_empty()
    }
}

impl<G: Game + ?Sized> Game for &G {
    type Position = G::Position;

    fn successors(&self, position: &Self::Position) -> Vec<Self::Position> {
        (**self).successors(position)
    }

    fn is_terminal(&self, position: &Self::Position) -> bool {
        (**self).is_terminal(position)
    }
}

/// Smith's remoteness: even on P-positions, odd on N-positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Remoteness(pub u64);

impl Remoteness {
    pub const ZERO: Remoteness = Remoteness(0);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn outcome(self) -> Outcome {
        if self.0 % 2 == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Remoteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Sprague-Grundy value; zero exactly on P-positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SgValue(pub u64);

impl SgValue {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn outcome(self) -> Outcome {
        if self.0 == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for SgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Outcome class under normal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous player wins.
    P,
    /// The next player wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

/// Minimum excludant: the least nonnegative integer missing from `values`.
pub fn mex<I>(values: I) -> u64
where
    I: IntoIterator<Item = u64>,
{
    let values: Vec<u64> = values.into_iter().collect();
    // The answer is at most values.len(), so larger entries never matter.
    let mut seen = vec![false; values.len() + 1];
    for v in values {
        if let Ok(i) = usize::try_from(v) {
            if i < seen.len() {
                seen[i] = true;
            }
        }
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as u64
}
