//! Single-position queries: fast solvers where they exist, the engine otherwise.

use impartial::engine::{Solver, Values, DEFAULT_MAX_NODES};
use impartial::euclid::{optimal_play, sg_euclid};
use impartial::formats::GamePosition;
use impartial::hypergraph::{is_mtf, optimal_move_mtf, remoteness_mtf, MtfHypergraph};
use impartial::wythoff::WythoffSolver;
use impartial::{moore, Error, Outcome};
use num_bigint::BigUint;
use serde::Serialize;

use crate::failure::{CliResult, Failure};

/// Node budget for engine evaluations, from `REMOTENESS_MAX_NODES`.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_nodes: usize,
}

impl Limits {
    pub fn from_env() -> CliResult<Self> {
        let max_nodes = match std::env::var("REMOTENESS_MAX_NODES") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("REMOTENESS_MAX_NODES must be a positive integer, got {v:?}")))?,
            Err(_) => DEFAULT_MAX_NODES,
        };
        if max_nodes == 0 {
            return Err(Failure::usage("REMOTENESS_MAX_NODES must be positive"));
        }
        Ok(Limits { max_nodes })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pair(
    #[serde(with = "impartial::bignum")] pub BigUint,
    #[serde(with = "impartial::bignum")] pub BigUint,
);

#[derive(Debug, Clone, Serialize)]
pub struct QueryResult {
    pub game: &'static str,
    pub position: serde_json::Value,
    /// Left out only for disjunctive compounds evaluated without the engine.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remoteness: Option<u64>,
    pub class: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sg: Option<u64>,
    /// A position of the same shape as `position`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal_move: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Pair>>,
}

pub fn to_json<T: Serialize>(value: Option<T>) -> CliResult<Option<serde_json::Value>> {
    Ok(value.map(|v| serde_json::to_value(v)).transpose()?)
}

impl QueryResult {
    pub fn new(pos: &GamePosition, remoteness: u64) -> CliResult<Self> {
        Ok(QueryResult {
            game: pos.name(),
            position: serde_json::to_value(pos)?,
            remoteness: Some(remoteness),
            class: impartial::Remoteness(remoteness).outcome(),
            sg: None,
            optimal_move: None,
            trace: None,
        })
    }
}

/// Engine values for `pos` together with a remoteness-decreasing move.
pub fn oracle(pos: &GamePosition, limits: Limits) -> CliResult<(Values, Option<GamePosition>)> {
    let (game, start) = pos.to_engine()?;
    let mut solver = Solver::new(&game).with_max_nodes(limits.max_nodes);
    let values = solver.evaluate(&start)?;
    let mv = solver.optimal_move(&start)?.map(|p| pos.at(&p)).transpose()?;
    Ok((values, mv))
}

/// Remoteness query; the SG value is included when it comes for free.
pub fn remoteness(pos: &GamePosition, limits: Limits) -> CliResult<QueryResult> {
    match pos {
        GamePosition::Euclid { .. } => {
            let p = pos.euclid().expect("euclid")?;
            let play = optimal_play(&p);
            let mut out = QueryResult::new(pos, play.remoteness.0)?;
            out.sg = sg_euclid(&p).ok().map(|g| g.0);
            out.optimal_move = to_json(play.trace.get(1).map(|q| GamePosition::Euclid {
                x: q.x.clone(),
                y: q.y.clone(),
            }))?;
            out.trace = Some(play.trace.into_iter().map(|q| Pair(q.x, q.y)).collect());
            Ok(out)
        }
        GamePosition::Moore { k, .. } => {
            let p = pos.moore().expect("moore")?;
            let r = moore::remoteness(&p)?;
            let mut out = QueryResult::new(pos, r.0)?;
            out.optimal_move = to_json(moore::optimal_move(&p)?.map(|q| GamePosition::Moore {
                k: *k,
                piles: q.piles().to_vec(),
            }))?;
            Ok(out)
        }
        GamePosition::Wythoff { a, b, x, y } => {
            let (params, start) = pos.wythoff().expect("wythoff")?;
            // the cached sequence reaches past the larger coordinate, and x_m >= b·m
            if x.max(y) / b >= limits.max_nodes as u64 {
                return Err(Error::Capacity {
                    what: "Wythoff sequence length",
                    limit: limits.max_nodes,
                }
                .into());
            }
            let (r, mv) = WythoffSolver::new(params).remoteness_with_move(start)?;
            let mut out = QueryResult::new(pos, r.0)?;
            out.optimal_move = to_json(mv.map(|m| GamePosition::Wythoff {
                a: *a,
                b: *b,
                x: m.x,
                y: m.y,
            }))?;
            Ok(out)
        }
        GamePosition::Hypergraph { hypergraph, .. } => {
            let (h, piles) = pos.hypergraph().expect("hypergraph")?;
            if !is_mtf(&h)? {
                return oracle_query(pos, limits);
            }
            let mtf = MtfHypergraph::new(h)?;
            let r = remoteness_mtf(&piles, &mtf)?;
            let mut out = QueryResult::new(pos, r.0)?;
            out.optimal_move = to_json(optimal_move_mtf(&piles, &mtf)?.map(|z| GamePosition::Hypergraph {
                piles: z,
                hypergraph: hypergraph.clone(),
            }))?;
            Ok(out)
        }
        GamePosition::Nim { pile } => {
            let mut out = QueryResult::new(pos, u64::from(*pile > 0))?;
            out.sg = Some(*pile);
            out.optimal_move = to_json((*pile > 0).then_some(GamePosition::Nim { pile: 0 }))?;
            Ok(out)
        }
        GamePosition::Graph(_) => oracle_query(pos, limits),
    }
}

fn oracle_query(pos: &GamePosition, limits: Limits) -> CliResult<QueryResult> {
    let (values, mv) = oracle(pos, limits)?;
    let mut out = QueryResult::new(pos, values.remoteness.0)?;
    out.sg = Some(values.sg.0);
    out.optimal_move = to_json(mv)?;
    Ok(out)
}

/// SG value of one position: the formula for Euclid and one-pile NIM, the
/// engine for everything else.
pub fn sg_value(pos: &GamePosition, limits: Limits) -> CliResult<u64> {
    match pos {
        GamePosition::Euclid { .. } => Ok(sg_euclid(&pos.euclid().expect("euclid")?)?.0),
        GamePosition::Nim { pile } => Ok(*pile),
        _ => Ok(oracle(pos, limits)?.0.sg.0),
    }
}

/// Remoteness query plus the SG value.
pub fn sg(pos: &GamePosition, limits: Limits) -> CliResult<QueryResult> {
    let mut out = remoteness(pos, limits)?;
    if out.sg.is_none() {
        out.sg = Some(sg_value(pos, limits)?);
    }
    Ok(out)
}
