//! Compound games: `{"mode":"conjunctive"|"disjunctive","components":[position,..]}`.

use impartial::engine::Solver;
use impartial::formats::{AnyGame, AnyPos, GamePosition};
use impartial::{conjunctive_remoteness, disjunctive_sg, Conjunctive, Disjunctive, Outcome, Remoteness, SgValue};
use serde::{Deserialize, Serialize};

use crate::failure::{CliResult, Failure};
use crate::query::{self, Limits, QueryResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Conjunctive,
    Disjunctive,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompoundSpec {
    pub mode: Mode,
    pub components: Vec<GamePosition>,
}

/// Conjunctive compounds: remoteness is the minimum and every component
/// plays its own remoteness-decreasing move. Disjunctive compounds: the SG
/// value is the XOR; the remoteness and a move need the engine (`oracle`).
pub fn evaluate(spec: &CompoundSpec, oracle: bool, limits: Limits) -> CliResult<QueryResult> {
    if spec.components.is_empty() {
        return Err(Failure::usage("a compound needs at least one component"));
    }
    let mut out = QueryResult {
        game: "compound",
        position: serde_json::to_value(spec)?,
        remoteness: None,
        class: Outcome::P,
        sg: None,
        optimal_move: None,
        trace: None,
    };
    match spec.mode {
        Mode::Conjunctive => {
            let parts = spec
                .components
                .iter()
                .map(|c| query::remoteness(c, limits))
                .collect::<CliResult<Vec<_>>>()?;
            let r = conjunctive_remoteness(parts.iter().map(|q| Remoteness(q.remoteness.unwrap_or(0))))?;
            out.remoteness = Some(r.0);
            out.class = r.outcome();
            if r.0 > 0 {
                let moved = parts
                    .iter()
                    .map(|q| q.optimal_move.clone().ok_or_else(|| Failure::mismatch("component without a move")))
                    .collect::<CliResult<Vec<_>>>()?;
                out.optimal_move = Some(serde_json::json!({"mode": spec.mode, "components": moved}));
            }
        }
        Mode::Disjunctive => {
            let sgs = spec
                .components
                .iter()
                .map(|c| query::sg_value(c, limits).map(SgValue))
                .collect::<CliResult<Vec<_>>>()?;
            let g = disjunctive_sg(sgs);
            out.sg = Some(g.0);
            out.class = g.outcome();
        }
    }
    if oracle {
        check_with_engine(spec, &mut out, limits)?;
    }
    Ok(out)
}

/// Recomputes the compound on the explicit product game and fills in the
/// engine's values; a disagreement with the formula is a mismatch.
fn check_with_engine(spec: &CompoundSpec, out: &mut QueryResult, limits: Limits) -> CliResult<()> {
    let (games, start): (Vec<AnyGame>, Vec<AnyPos>) = spec
        .components
        .iter()
        .map(GamePosition::to_engine)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .unzip();
    let (values, mv) = match spec.mode {
        Mode::Conjunctive => {
            let game = Conjunctive::new(games);
            let mut solver = Solver::new(&game).with_max_nodes(limits.max_nodes);
            (solver.evaluate(&start)?, solver.optimal_move(&start)?)
        }
        Mode::Disjunctive => {
            let game = Disjunctive::new(games);
            let mut solver = Solver::new(&game).with_max_nodes(limits.max_nodes);
            (solver.evaluate(&start)?, solver.optimal_move(&start)?)
        }
    };
    match spec.mode {
        Mode::Conjunctive if out.remoteness != Some(values.remoteness.0) => {
            return Err(Failure::mismatch(format!(
                "conjunctive remoteness: min rule {:?}, product game {}",
                out.remoteness, values.remoteness.0
            )));
        }
        Mode::Disjunctive if out.sg != Some(values.sg.0) => {
            return Err(Failure::mismatch(format!(
                "disjunctive SG: XOR rule {:?}, product game {}",
                out.sg, values.sg.0
            )));
        }
        _ => {}
    }
    out.remoteness = Some(values.remoteness.0);
    out.sg = Some(values.sg.0);
    if spec.mode == Mode::Disjunctive {
        out.optimal_move = match mv {
            Some(parts) => {
                let moved = spec
                    .components
                    .iter()
                    .zip(&parts)
                    .map(|(c, p)| c.at(p))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(serde_json::json!({"mode": spec.mode, "components": moved}))
            }
            None => None,
        };
    }
    Ok(())
}
