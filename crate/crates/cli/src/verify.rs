//! Exhaustive comparisons of the fast solvers against the engine.
//!
//! Each mismatch is printed as one JSON line; a final JSON line summarizes
//! the run.

use std::collections::BTreeSet;
use std::io::Write;

use impartial::engine::Solver;
use impartial::euclid::{is_p_euclid, remoteness_euclid, sg_euclid, EuclidPosition, EuclidRules};
use impartial::hypergraph::{remoteness_mtf, HgPiles, Hypergraph, HypergraphNim, MtfHypergraph};
use impartial::moore::{self, MoorePosition, MooreRules, Piles};
use impartial::wythoff::{WyPosition, WythoffParams, WythoffRules, WythoffSolver};
use impartial::{Game, Outcome};
use serde::Serialize;
use serde_json::{json, Value};

use crate::failure::{CliResult, Failure};
use crate::query::Limits;

#[derive(Serialize)]
struct Mismatch<'a> {
    game: &'a str,
    position: Value,
    quantity: &'a str,
    fast: Value,
    oracle: Value,
}

#[derive(Serialize)]
struct Summary<'a> {
    game: &'a str,
    checked: u64,
    mismatches: u64,
}

struct Report<'a, W: Write> {
    out: W,
    game: &'a str,
    checked: u64,
    mismatches: u64,
}

impl<'a, W: Write> Report<'a, W> {
    fn new(out: W, game: &'a str) -> Self {
        Report {
            out,
            game,
            checked: 0,
            mismatches: 0,
        }
    }

    fn compare<T: PartialEq + Serialize>(&mut self, position: Value, quantity: &str, fast: T, oracle: T) -> CliResult<()> {
        self.checked += 1;
        if fast != oracle {
            self.mismatches += 1;
            let line = Mismatch {
                game: self.game,
                position,
                quantity,
                fast: serde_json::to_value(fast)?,
                oracle: serde_json::to_value(oracle)?,
            };
            writeln!(self.out, "{}", serde_json::to_string(&line)?)?;
        }
        Ok(())
    }

    fn finish(mut self) -> CliResult<()> {
        let summary = Summary {
            game: self.game,
            checked: self.checked,
            mismatches: self.mismatches,
        };
        writeln!(self.out, "{}", serde_json::to_string(&summary)?)?;
        if self.mismatches > 0 {
            return Err(Failure::mismatch(format!("{} mismatches", self.mismatches)));
        }
        Ok(())
    }
}

fn solver<G: Game>(game: &G, limits: Limits) -> Solver<'_, G> {
    Solver::new(game).with_max_nodes(limits.max_nodes)
}

pub fn euclid<W: Write>(out: W, max: u64, limits: Limits) -> CliResult<()> {
    let mut report = Report::new(out, "euclid");
    let mut oracle = solver(&EuclidRules, limits);
    for x in 1..=max {
        for y in 1..=max {
            let p = EuclidPosition::new(x, y)?;
            let at = json!([x, y]);
            let r = oracle.remoteness(&(x, y))?;
            report.compare(at.clone(), "remoteness", remoteness_euclid(&p).0, r.0)?;
            report.compare(at.clone(), "sg", sg_euclid(&p)?.0, oracle.sg(&(x, y))?.0)?;
            report.compare(at, "class", is_p_euclid(&p), r.outcome() == Outcome::P)?;
        }
    }
    report.finish()
}

pub fn wythoff<W: Write>(out: W, params: WythoffParams, max: u64, limits: Limits) -> CliResult<()> {
    let mut report = Report::new(out, "wythoff");
    let rules = WythoffRules(params);
    let mut oracle = solver(&rules, limits);
    let mut fast = WythoffSolver::new(params);
    for x in 0..=max {
        for y in 0..=max {
            let pos = WyPosition::new(x, y);
            let at = json!([x, y]);
            let r = oracle.remoteness(&pos)?;
            report.compare(at.clone(), "remoteness", fast.remoteness(pos)?.0, r.0)?;
            if r.outcome() == Outcome::N {
                let mut brute = BTreeSet::new();
                for z in rules.successors(&pos) {
                    if oracle.classify(&z)? == Outcome::P {
                        brute.insert((z.x, z.y));
                    }
                }
                let found: BTreeSet<(u64, u64)> = match fast.candidate_p_targets(pos) {
                    Ok(c) => c.into_iter().map(|c| (c.target.x, c.target.y)).collect(),
                    Err(_) => BTreeSet::new(),
                };
                report.compare(at, "p_successors", found, brute)?;
            }
        }
    }
    report.finish()
}

pub fn moore<W: Write>(out: W, n: usize, k: usize, max_pile: u32, limits: Limits) -> CliResult<()> {
    MoorePosition::from_u64s(&vec![0; n], k)?;
    let mut report = Report::new(out, "moore");
    let rules = MooreRules { k };
    let mut oracle = solver(&rules, limits);
    for_each_vector(n, u64::from(max_pile), |x| {
        let p = MoorePosition::from_u64s(x, k)?;
        let small: Piles = x.iter().map(|&v| v as u32).collect();
        let r = oracle.remoteness(&small)?;
        report.compare(json!(x), "remoteness", moore::remoteness(&p)?.0, r.0)
    })?;
    report.finish()
}

pub fn hypergraph<W: Write>(out: W, h: Hypergraph, max_pile: u64, limits: Limits) -> CliResult<()> {
    let n = h.n();
    let mtf = MtfHypergraph::new(h.clone())?;
    let mut report = Report::new(out, "hypergraph");
    let game = HypergraphNim { hypergraph: h };
    let mut oracle = solver(&game, limits);
    for_each_vector(n, max_pile, |x| {
        let piles: HgPiles = x.iter().copied().collect();
        let r = oracle.remoteness(&piles)?;
        report.compare(json!(x), "remoteness", remoteness_mtf(x, &mtf)?.0, r.0)
    })?;
    report.finish()
}

/// Calls `f` on every vector in `[0, max]^n`, last coordinate fastest.
fn for_each_vector(n: usize, max: u64, mut f: impl FnMut(&[u64]) -> CliResult<()>) -> CliResult<()> {
    let mut z = vec![0u64; n];
    loop {
        f(&z)?;
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if z[i] < max {
                z[i] += 1;
                break;
            }
            z[i] = 0;
        }
    }
}
