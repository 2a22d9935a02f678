//! Generalized Wythoff WYT(a, b).
//!
//! From `(x, y)` a move removes `ε ≤ x` and `δ ≤ y`, `ε + δ > 0`, provided
//! `|ε − δ| < a` (diagonal) or `min(ε, δ) < b` (horizontal/vertical).
//!
//! The P-positions with `x ≤ y` are `(x_m, y_m)` where
//! `x_m = mex_b{x_0, y_0, .., x_{m−1}, y_{m−1}}` and `y_m = x_m + a·m`, and
//! `R(x_m, y_m) = 2m`. An N-position can reach at most six P-positions,
//! located through the index arithmetic in [`WythoffSolver::candidate_p_targets`].
//!
//! The sequence is generated by the recursion itself, so answering a query
//! about values up to `X` costs `O(X / b)` time and memory once, after which
//! the table is reused.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::game::{Game, Outcome, Remoteness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WythoffParams {
    pub a: u64,
    pub b: u64,
}

impl WythoffParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(invalid("WYT(a, b) needs a >= 1 and b >= 1"));
        }
        Ok(WythoffParams { a, b })
    }
}

/// A position `(x, y)`; coordinate order is preserved by every operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WyPosition {
    pub x: u64,
    pub y: u64,
}

impl WyPosition {
    pub fn new(x: u64, y: u64) -> Self {
        WyPosition { x, y }
    }

    fn swapped(self) -> Self {
        WyPosition {
            x: self.y,
            y: self.x,
        }
    }
}

/// Whether `from → to` is a legal WYT(a, b) move.
pub fn is_legal_move(from: WyPosition, to: WyPosition, p: WythoffParams) -> bool {
    if to.x > from.x || to.y > from.y {
        return false;
    }
    let (eps, delta) = (from.x - to.x, from.y - to.y);
    eps + delta > 0 && (eps.abs_diff(delta) < p.a || eps.min(delta) < p.b)
}

/// Minimum `b`-excludant.
///
/// With `s_1 < .. < s_l` the distinct elements of `s`, returns `s_i + b` for
/// the first `i` whose gap `s_{i+1} − s_i` exceeds `b` (`s_{l+1} = ∞`), and
/// 0 for the empty set. Sets whose smallest element exceeds `b` also give 0;
/// the P-sequence recursion never produces such a set because it always
/// contains `x_0 = 0`.
pub fn mex_b(s: &[u64], b: u64) -> u64 {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    match sorted.first() {
        None => return 0,
        Some(&first) if first > b => return 0,
        _ => {}
    }
    for w in sorted.windows(2) {
        if w[1] - w[0] > b {
            return w[0] + b;
        }
    }
    sorted[sorted.len() - 1] + b
}

/// `⌊m·(2 − a + √(a² + 4))/2⌋` in exact integer arithmetic.
///
/// This is the closed form of `x_m` when `b = 1`. The floor is the largest
/// `t` with `2t − m(2 − a) ≤ m·√(a² + 4)`, decided by comparing squares when
/// the left side is positive.
pub fn fraenkel_closed_form(m: u64, a: u64) -> u64 {
    let (m, a) = (m as i128, a as i128);
    let fits = |t: i128| {
        let lhs = 2 * t - m * (2 - a);
        lhs <= 0 || lhs * lhs <= m * m * (a * a + 4)
    };
    // the value lies in [0, 2m]
    let (mut lo, mut hi) = (0i128, 2 * m);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo as u64
}

/// Cached prefix `(x_m, y_m)`, `m = 0..len`, of the P-position sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WythoffTable {
    params: WythoffParams,
    xs: Vec<u64>,
    ys: Vec<u64>,
    // first index into `ys` not yet absorbed by the mex_b scan
    y_cursor: usize,
}

impl WythoffTable {
    pub fn new(params: WythoffParams) -> Self {
        WythoffTable {
            params,
            xs: vec![0],
            ys: vec![0],
            y_cursor: 1,
        }
    }

    pub fn params(&self) -> WythoffParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn xs(&self) -> &[u64] {
        &self.xs
    }

    pub fn ys(&self) -> &[u64] {
        &self.ys
    }

    pub fn get(&self, m: usize) -> Option<(u64, u64)> {
        Some((*self.xs.get(m)?, self.ys[m]))
    }

    /// Appends `(x_m, y_m)` for the next index.
    ///
    /// Every element of the union `{x_i} ∪ {y_i}` below the latest `x` has a
    /// gap of at most `b` to its successor, and all `x_i` are at most the
    /// latest one, so the scan only walks forward through the `y` values.
    pub fn push_next(&mut self) {
        let WythoffParams { a, b } = self.params;
        let mut s = *self.xs.last().expect("table starts with x_0");
        while self.y_cursor < self.ys.len() && self.ys[self.y_cursor] <= s {
            self.y_cursor += 1;
        }
        while self.y_cursor < self.ys.len() && self.ys[self.y_cursor] - s <= b {
            s = self.ys[self.y_cursor];
            self.y_cursor += 1;
        }
        let m = self.xs.len() as u64;
        let x = s + b;
        self.xs.push(x);
        self.ys.push(x + a * m);
    }

    /// Extends until the index `m` exists.
    pub fn extend_to_index(&mut self, m: usize) {
        while self.xs.len() <= m {
            self.push_next();
        }
    }

    /// Extends until the last `x_m` exceeds `value`.
    pub fn extend_past(&mut self, value: u64) {
        while *self.xs.last().unwrap() <= value {
            self.push_next();
        }
    }

    fn largest_x_at_most(&self, value: u64) -> usize {
        self.xs.partition_point(|&x| x <= value) - 1
    }

    fn largest_y_at_most(&self, value: u64) -> usize {
        self.ys.partition_point(|&y| y <= value) - 1
    }
}

/// Table generated until `x_m > up_to_value`.
pub fn generate(params: WythoffParams, up_to_value: u64) -> WythoffTable {
    let mut t = WythoffTable::new(params);
    t.extend_past(up_to_value);
    t
}

/// Outcome of [`WythoffSolver::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WythoffClass {
    P { index: u64 },
    N,
}

/// A reachable P-position and its sequence index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub target: WyPosition,
    pub index: u64,
}

/// Remoteness solver with an append-only sequence cache.
///
/// Queries take `&mut self` because they may extend the cache; share one
/// solver across threads behind a lock if needed.
#[derive(Debug, Clone)]
pub struct WythoffSolver {
    table: WythoffTable,
}

impl WythoffSolver {
    pub fn new(params: WythoffParams) -> Self {
        WythoffSolver {
            table: WythoffTable::new(params),
        }
    }

    pub fn params(&self) -> WythoffParams {
        self.table.params
    }

    pub fn table(&self) -> &WythoffTable {
        &self.table
    }

    /// P with its index `m` iff the oriented position is `(x_m, y_m)`.
    pub fn classify(&mut self, pos: WyPosition) -> WythoffClass {
        let WythoffParams { a, b } = self.params();
        let (x, y) = (pos.x.min(pos.y), pos.x.max(pos.y));
        if (y - x) % a != 0 {
            return WythoffClass::N;
        }
        let m = (y - x) / a;
        // x_m >= b·m, so a large index cannot match a small x
        if m.checked_mul(b).map_or(true, |bm| bm > x) {
            return WythoffClass::N;
        }
        self.table.extend_to_index(m as usize);
        if self.table.xs[m as usize] == x {
            WythoffClass::P { index: m }
        } else {
            WythoffClass::N
        }
    }

    pub fn outcome(&mut self, pos: WyPosition) -> Outcome {
        match self.classify(pos) {
            WythoffClass::P { .. } => Outcome::P,
            WythoffClass::N => Outcome::N,
        }
    }

    /// The at most six P-positions an N-position can move to.
    ///
    /// With `x ≤ y` after orientation and `ℓ = (y − x) div a`: diagonal moves
    /// can only reach `(x_ℓ, y_ℓ)` or `(x_{ℓ+1}, y_{ℓ+1})`; moves that lower
    /// `x` by less than `b` can only reach a P-position whose first
    /// coordinate lies in `(x − b, x]`, which holds at most one `x_s` and one
    /// `y_t`; likewise for `y`. Candidates are kept only if the move is legal.
    /// Order: diagonal, then the `x` window, then the `y` window; duplicates
    /// are dropped.
    pub fn candidate_p_targets(&mut self, pos: WyPosition) -> Result<Vec<Candidate>> {
        if self.outcome(pos) == Outcome::P {
            return Err(precondition(format!(
                "({}, {}) is a P-position",
                pos.x, pos.y
            )));
        }
        let params = self.params();
        let swapped = pos.x > pos.y;
        let o = if swapped { pos.swapped() } else { pos };
        let (x, y) = (o.x, o.y);
        self.table.extend_past(y);
        let t = &self.table;

        let mut raw: Vec<(u64, u64, usize)> = Vec::with_capacity(6);
        let ell = ((y - x) / params.a) as usize;
        for m in [ell, ell + 1] {
            if let Some((xm, ym)) = t.get(m) {
                raw.push((xm, ym, m));
            }
        }
        // consecutive x's and consecutive y's differ by at least b
        for (top, pick_x) in [(x, true), (y, false)] {
            let in_window = |v: u64| top < params.b || v > top - params.b;
            let s = t.largest_x_at_most(top);
            if in_window(t.xs[s]) {
                raw.push(if pick_x { (t.xs[s], t.ys[s], s) } else { (t.ys[s], t.xs[s], s) });
            }
            let s = t.largest_y_at_most(top);
            if in_window(t.ys[s]) {
                raw.push(if pick_x { (t.ys[s], t.xs[s], s) } else { (t.xs[s], t.ys[s], s) });
            }
        }

        let mut out: Vec<Candidate> = Vec::with_capacity(6);
        for (cx, cy, m) in raw {
            let target = WyPosition::new(cx, cy);
            if !is_legal_move(o, target, params) {
                continue;
            }
            let target = if swapped { target.swapped() } else { target };
            if out.iter().all(|c| c.target != target) {
                out.push(Candidate {
                    target,
                    index: m as u64,
                });
            }
        }
        Ok(out)
    }

    pub fn remoteness(&mut self, pos: WyPosition) -> Result<Remoteness> {
        Ok(self.remoteness_with_move(pos)?.0)
    }

    /// Remoteness and, for non-terminals, a move lowering it by one.
    ///
    /// From an N-position the move goes to the lowest-index candidate. From
    /// `(x_m, y_m)` with `m ≥ 1` the single-stone moves are tried first and
    /// the full move list is scanned only if neither has remoteness `2m − 1`.
    pub fn remoteness_with_move(
        &mut self,
        pos: WyPosition,
    ) -> Result<(Remoteness, Option<WyPosition>)> {
        match self.classify(pos) {
            WythoffClass::P { index } => {
                let r = index
                    .checked_mul(2)
                    .ok_or(Error::Overflow("remoteness exceeds 64 bits"))?;
                if index == 0 {
                    return Ok((Remoteness(0), None));
                }
                let mv = self.p_move(pos, r - 1)?;
                Ok((Remoteness(r), Some(mv)))
            }
            WythoffClass::N => {
                let best = self
                    .candidate_p_targets(pos)?
                    .into_iter()
                    .min_by_key(|c| c.index)
                    .ok_or_else(|| {
                        Error::Inconsistent(format!(
                            "N-position ({}, {}) has no P-successor",
                            pos.x, pos.y
                        ))
                    })?;
                Ok((Remoteness(2 * best.index + 1), Some(best.target)))
            }
        }
    }
}

impl WythoffSolver {
    fn p_move(&mut self, pos: WyPosition, want: u64) -> Result<WyPosition> {
        let quick = [
            (pos.y > 0).then(|| WyPosition::new(pos.x, pos.y - 1)),
            (pos.x > 0).then(|| WyPosition::new(pos.x - 1, pos.y)),
        ];
        for to in quick.into_iter().flatten() {
            if self.remoteness(to)?.0 == want {
                return Ok(to);
            }
        }
        for to in WythoffRules(self.params()).successors(&pos) {
            if self.remoteness(to)?.0 == want {
                return Ok(to);
            }
        }
        Err(Error::Inconsistent(format!(
            "P-position ({}, {}) has no successor of remoteness {want}",
            pos.x, pos.y
        )))
    }
}

/// [`WythoffSolver::classify`] on a fresh solver.
pub fn classify_wythoff(pos: WyPosition, p: WythoffParams) -> WythoffClass {
    WythoffSolver::new(p).classify(pos)
}

/// [`WythoffSolver::candidate_p_targets`] on a fresh solver.
pub fn candidate_p_targets(pos: WyPosition, p: WythoffParams) -> Result<Vec<Candidate>> {
    WythoffSolver::new(p).candidate_p_targets(pos)
}

/// [`WythoffSolver::remoteness`] on a fresh solver.
pub fn remoteness_wythoff(pos: WyPosition, p: WythoffParams) -> Result<Remoteness> {
    WythoffSolver::new(p).remoteness(pos)
}

/// WYT(a, b) move relation for the generic engine.
///
/// Successors are all `(x − ε, y − δ)` passing [`is_legal_move`], in
/// increasing lexicographic order of the target.
#[derive(Debug, Clone, Copy)]
pub struct WythoffRules(pub WythoffParams);

impl Game for WythoffRules {
    type Position = WyPosition;

    fn successors(&self, pos: &WyPosition) -> Vec<WyPosition> {
        let mut out = Vec::new();
        for tx in 0..=pos.x {
            for ty in 0..=pos.y {
                let to = WyPosition::new(tx, ty);
                if is_legal_move(*pos, to, self.0) {
                    out.push(to);
                }
            }
        }
        out
    }

    fn is_terminal(&self, pos: &WyPosition) -> bool {
        pos.x == 0 && pos.y == 0
    }
}
