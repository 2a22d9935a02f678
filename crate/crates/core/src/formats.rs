//! Tagged position JSON shared by every game, and a single engine adapter
//! covering all of them.
//!
//! ```json
//! {"game":"euclid","x":17,"y":11}
//! {"game":"moore","k":2,"piles":[1,1,2]}
//! {"game":"wythoff","a":1,"b":1,"x":3,"y":5}
//! {"game":"hypergraph","piles":[2,3],"hypergraph":{"n":2,"edges":[[1],[2]]}}
//! {"game":"nim","pile":5}
//! {"game":"graph","nodes":["s","t"],"edges":[["s","t"]],"start":"s"}
//! ```

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::euclid::{EuclidPosition, EuclidRules};
use crate::explicit::{ExplicitGraph, GraphSpec, NimPile};
use crate::game::Game;
use crate::hypergraph::{HgPiles, Hypergraph, HypergraphNim, HypergraphSpec};
use crate::moore::{MoorePosition, MooreRules, Piles};
use crate::wythoff::{WyPosition, WythoffParams, WythoffRules};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "game", rename_all = "lowercase", deny_unknown_fields)]
pub enum GamePosition {
    Euclid {
        #[serde(with = "crate::bignum")]
        x: BigUint,
        #[serde(with = "crate::bignum")]
        y: BigUint,
    },
    Moore {
        k: usize,
        #[serde(with = "crate::bignum::vec")]
        piles: Vec<BigUint>,
    },
    Wythoff { a: u64, b: u64, x: u64, y: u64 },
    /// The hypergraph may be left out and supplied separately.
    Hypergraph {
        piles: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hypergraph: Option<HypergraphSpec>,
    },
    Nim { pile: u64 },
    Graph(GraphSpec),
}

impl GamePosition {
    pub fn name(&self) -> &'static str {
        match self {
            GamePosition::Euclid { .. } => "euclid",
            GamePosition::Moore { .. } => "moore",
            GamePosition::Wythoff { .. } => "wythoff",
            GamePosition::Hypergraph { .. } => "hypergraph",
            GamePosition::Nim { .. } => "nim",
            GamePosition::Graph(_) => "graph",
        }
    }

    pub fn euclid(&self) -> Option<Result<EuclidPosition>> {
        match self {
            GamePosition::Euclid { x, y } => Some(EuclidPosition::new(x.clone(), y.clone())),
            _ => None,
        }
    }

    pub fn moore(&self) -> Option<Result<MoorePosition>> {
        match self {
            GamePosition::Moore { k, piles } => Some(MoorePosition::new(piles.clone(), *k)),
            _ => None,
        }
    }

    pub fn wythoff(&self) -> Option<Result<(WythoffParams, WyPosition)>> {
        match *self {
            GamePosition::Wythoff { a, b, x, y } => {
                Some(WythoffParams::new(a, b).map(|p| (p, WyPosition::new(x, y))))
            }
            _ => None,
        }
    }

    /// Hypergraph and piles, checking that the pile count matches.
    pub fn hypergraph(&self) -> Option<Result<(Hypergraph, Vec<u64>)>> {
        match self {
            GamePosition::Hypergraph { piles, hypergraph } => Some((|| {
                let spec = hypergraph
                    .as_ref()
                    .ok_or_else(|| invalid("hypergraph position needs a hypergraph"))?;
                let h = Hypergraph::from_spec(spec)?;
                if piles.len() != h.n() {
                    return Err(invalid(format!(
                        "{} piles given for a hypergraph on {} vertices",
                        piles.len(),
                        h.n()
                    )));
                }
                Ok((h, piles.clone()))
            })()),
            _ => None,
        }
    }

    /// Engine adapter and start position.
    ///
    /// Euclid and Moore piles must fit the adapters' machine integers.
    pub fn to_engine(&self) -> Result<(AnyGame, AnyPos)> {
        Ok(match self {
            GamePosition::Euclid { x, y } => {
                EuclidPosition::new(x.clone(), y.clone())?;
                let (x, y) = (small_u64(x)?, small_u64(y)?);
                (AnyGame::Euclid(EuclidRules), AnyPos::Pair(x, y))
            }
            GamePosition::Moore { .. } => {
                let p = self.moore().expect("moore variant")?;
                let piles = p
                    .piles()
                    .iter()
                    .map(|v| {
                        v.to_u32()
                            .ok_or(Error::Capacity { what: "oracle pile size", limit: u32::MAX as usize })
                    })
                    .collect::<Result<Piles>>()?;
                (AnyGame::Moore(MooreRules { k: p.k() }), AnyPos::Moore(piles))
            }
            GamePosition::Wythoff { .. } => {
                let (params, pos) = self.wythoff().expect("wythoff variant")?;
                (AnyGame::Wythoff(WythoffRules(params)), AnyPos::Wythoff(pos))
            }
            GamePosition::Hypergraph { .. } => {
                let (h, piles) = self.hypergraph().expect("hypergraph variant")?;
                (
                    AnyGame::Hypergraph(HypergraphNim { hypergraph: h }),
                    AnyPos::Hypergraph(piles.into_iter().collect()),
                )
            }
            GamePosition::Nim { pile } => (AnyGame::Nim(NimPile), AnyPos::Nim(*pile)),
            GamePosition::Graph(spec) => {
                let g = ExplicitGraph::from_spec(spec)?;
                let start = g.start();
                (AnyGame::Graph(g), AnyPos::Node(start))
            }
        })
    }

    /// The same game at an engine position produced by [`Self::to_engine`].
    pub fn at(&self, pos: &AnyPos) -> Result<GamePosition> {
        Ok(match (self, pos) {
            (GamePosition::Euclid { .. }, &AnyPos::Pair(x, y)) => GamePosition::Euclid {
                x: x.into(),
                y: y.into(),
            },
            (GamePosition::Moore { k, .. }, AnyPos::Moore(piles)) => GamePosition::Moore {
                k: *k,
                piles: piles.iter().map(|&v| v.into()).collect(),
            },
            (GamePosition::Wythoff { a, b, .. }, AnyPos::Wythoff(p)) => GamePosition::Wythoff {
                a: *a,
                b: *b,
                x: p.x,
                y: p.y,
            },
            (GamePosition::Hypergraph { hypergraph, .. }, AnyPos::Hypergraph(piles)) => {
                GamePosition::Hypergraph {
                    piles: piles.to_vec(),
                    hypergraph: hypergraph.clone(),
                }
            }
            (GamePosition::Nim { .. }, &AnyPos::Nim(pile)) => GamePosition::Nim { pile },
            (GamePosition::Graph(spec), &AnyPos::Node(i)) => {
                let label = spec
                    .nodes
                    .get(i)
                    .ok_or_else(|| invalid("node index out of range"))?;
                GamePosition::Graph(GraphSpec {
                    start: label.clone(),
                    ..spec.clone()
                })
            }
            _ => return Err(invalid("engine position belongs to a different game")),
        })
    }
}

impl fmt::Display for GamePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

fn small_u64(v: &BigUint) -> Result<u64> {
    v.to_u64().ok_or(Error::Capacity {
        what: "oracle coordinate size",
        limit: usize::MAX,
    })
}

/// One of the engine adapters, so heterogeneous components can share a compound.
#[derive(Debug, Clone)]
pub enum AnyGame {
    Euclid(EuclidRules),
    Moore(MooreRules),
    Wythoff(WythoffRules),
    Hypergraph(HypergraphNim),
    Nim(NimPile),
    Graph(ExplicitGraph),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyPos {
    Pair(u64, u64),
    Moore(Piles),
    Wythoff(WyPosition),
    Hypergraph(HgPiles),
    Nim(u64),
    Node(usize),
}

fn mismatch() -> ! {
    panic!("position does not belong to this game")
}

impl Game for AnyGame {
    type Position = AnyPos;

    fn successors(&self, pos: &AnyPos) -> Vec<AnyPos> {
        match (self, pos) {
            (AnyGame::Euclid(g), AnyPos::Pair(x, y)) => {
                g.successors(&(*x, *y)).into_iter().map(|(x, y)| AnyPos::Pair(x, y)).collect()
            }
            (AnyGame::Moore(g), AnyPos::Moore(p)) => {
                g.successors(p).into_iter().map(AnyPos::Moore).collect()
            }
            (AnyGame::Wythoff(g), AnyPos::Wythoff(p)) => {
                g.successors(p).into_iter().map(AnyPos::Wythoff).collect()
            }
            (AnyGame::Hypergraph(g), AnyPos::Hypergraph(p)) => {
                g.successors(p).into_iter().map(AnyPos::Hypergraph).collect()
            }
            (AnyGame::Nim(g), AnyPos::Nim(p)) => g.successors(p).into_iter().map(AnyPos::Nim).collect(),
            (AnyGame::Graph(g), AnyPos::Node(p)) => g.successors(p).into_iter().map(AnyPos::Node).collect(),
            _ => mismatch(),
        }
    }

    fn is_terminal(&self, pos: &AnyPos) -> bool {
        match (self, pos) {
            (AnyGame::Euclid(g), AnyPos::Pair(x, y)) => g.is_terminal(&(*x, *y)),
            (AnyGame::Moore(g), AnyPos::Moore(p)) => g.is_terminal(p),
            (AnyGame::Wythoff(g), AnyPos::Wythoff(p)) => g.is_terminal(p),
            (AnyGame::Hypergraph(g), AnyPos::Hypergraph(p)) => g.is_terminal(p),
            (AnyGame::Nim(g), AnyPos::Nim(p)) => g.is_terminal(p),
            (AnyGame::Graph(g), AnyPos::Node(p)) => g.is_terminal(p),
            _ => mismatch(),
        }
    }
}
