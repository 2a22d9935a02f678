//! Remoteness (Smith) and Sprague-Grundy solvers for impartial games.
//!
//! [`engine::Solver`] evaluates any finite acyclic [`Game`] by brute force and
//! serves as the reference for the specialized solvers:
//!
//! * [`moore`]: Moore's NIM, closed-form remoteness on P-positions and an exact
//!   subset search on N-positions, plus the vertex-cover reduction in [`vertex_cover`];
//! * [`hypergraph`]: hypergraph NIM and the closed form for minimally
//!   transversal-free hypergraphs;
//! * [`euclid`]: game Euclid via its unique optimal play;
//! * [`wythoff`]: the generalized Wythoff game WYT(a, b).

pub mod bignum;
pub mod compound;
pub mod engine;
pub mod error;
pub mod euclid;
pub mod explicit;
pub mod formats;
pub mod game;
pub mod hypergraph;
pub mod moore;
pub mod vertex_cover;
pub mod wythoff;

pub use compound::{conjunctive_remoteness, disjunctive_sg, Conjunctive, Disjunctive};
pub use engine::{Solver, Values};
pub use error::{Error, Result};
pub use game::{mex, Game, Outcome, Remoteness, SgValue};
