//! Hypergraph NIM: a move strictly reduces exactly the piles of one hyperedge.
//!
//! For minimally transversal-free (MTF) hypergraphs the remoteness depends
//! only on the smallest pile `m(x)` and on whether the set `M(x)` of piles
//! attaining it meets every edge: `2·m(x)` if it does, `2·m(x) + 1` if not.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{invalid, precondition, Error, Result};
use crate::game::{Game, Outcome, Remoteness};

/// Largest ground set supported by the bitmask representation.
pub const MAX_GROUND: usize = 64;

/// Default bound on `n` for [`is_mtf`], which checks all `2^n` vertex subsets.
pub const DEFAULT_MTF_BOUND: usize = 20;

/// Vertex subset of the ground set, bit `i` standing for vertex `i + 1`.
pub type VertexSet = u64;

/// Wire format: `{"n":int,"edges":[[int,..],..]}` with 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSpec {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

fn full(n: usize) -> VertexSet {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

impl Hypergraph {
    /// Edges as bitmasks; duplicates are dropped, first occurrence kept.
    pub fn from_masks(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(invalid(format!("ground set size must be in 1..={MAX_GROUND}")));
        }
        let mut out: Vec<VertexSet> = Vec::new();
        for e in edges {
            if e == 0 {
                return Err(invalid("hyperedges must be nonempty"));
            }
            if e & !full(n) != 0 {
                return Err(invalid(format!("hyperedge outside the ground set [1..{n}]")));
            }
            if !out.contains(&e) {
                out.push(e);
            }
        }
        Ok(Hypergraph { n, edges: out })
    }

    /// Edges as lists of 1-based vertices.
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let masks = edges
            .iter()
            .map(|e| {
                e.iter().try_fold(0u64, |m, &v| {
                    if v == 0 || v > n {
                        Err(invalid(format!("vertex {v} outside [1..{n}]")))
                    } else {
                        Ok(m | 1 << (v - 1))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    pub fn from_spec(spec: &HypergraphSpec) -> Result<Self> {
        Self::new(spec.n, &spec.edges)
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            n: self.n,
            edges: self.edges.iter().map(|&e| members(e)).collect(),
        }
    }

    /// Moore's NIM as a hypergraph: every nonempty subset of at most `k` piles.
    pub fn moore(n: usize, k: usize) -> Result<Self> {
        if n > 20 {
            return Err(invalid("Moore hypergraph is materialized only for n <= 20"));
        }
        Self::from_masks(
            n,
            (1..=full(n)).filter(|m| (m.count_ones() as usize) <= k),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn ground(&self) -> VertexSet {
        full(self.n)
    }
}

/// 1-based members of a vertex set, increasing.
pub fn members(set: VertexSet) -> Vec<usize> {
    (0..64).filter(|i| set >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `T` meets every edge of `h`.
pub fn is_transversal(t: VertexSet, h: &Hypergraph) -> bool {
    h.edges.iter().all(|&e| e & t != 0)
}

/// Edges of `h` contained in `s`. Vertex numbering is unchanged.
pub fn induced(h: &Hypergraph, s: VertexSet) -> Hypergraph {
    Hypergraph {
        n: h.n,
        edges: h.edges.iter().copied().filter(|&e| e & !s == 0).collect(),
    }
}

/// Minimally transversal-free test, exhaustive over vertex subsets.
///
/// `h` must have no edge that is itself a transversal, and every nonempty
/// proper subset `S` must induce a family containing one of its own
/// transversals. The edgeless family is rejected: it meets both conditions
/// vacuously on one vertex, yet all its positions are terminal.
pub fn is_mtf(h: &Hypergraph) -> Result<bool> {
    is_mtf_bounded(h, DEFAULT_MTF_BOUND)
}

pub fn is_mtf_bounded(h: &Hypergraph, max_n: usize) -> Result<bool> {
    if h.n > max_n {
        return Err(Error::Capacity {
            what: "ground set size for the MTF test",
            limit: max_n,
        });
    }
    if h.edges.is_empty() || h.edges.iter().any(|&e| is_transversal(e, h)) {
        return Ok(false);
    }
    let all = h.ground();
    for s in 1..all {
        let sub = induced(h, s);
        if !sub.edges.iter().any(|&e| is_transversal(e, &sub)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A hypergraph known to be MTF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtfHypergraph(Hypergraph);

impl MtfHypergraph {
    pub fn new(h: Hypergraph) -> Result<Self> {
        if is_mtf(&h)? {
            Ok(MtfHypergraph(h))
        } else {
            Err(precondition("hypergraph is not minimally transversal-free"))
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.0
    }
}

fn check_len(x: &[u64], h: &Hypergraph) -> Result<()> {
    if x.len() != h.n {
        return Err(invalid(format!(
            "position has {} piles, hypergraph has {} vertices",
            x.len(),
            h.n
        )));
    }
    Ok(())
}

/// `m(x)`, the smallest pile, and `M(x)`, the piles attaining it.
pub fn min_and_argmin(x: &[u64]) -> (u64, VertexSet) {
    let m = x.iter().copied().min().unwrap_or(0);
    let set = x
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == m)
        .fold(0, |s, (i, _)| s | 1 << i);
    (m, set)
}

/// Which of `P(k)` / `N(k)` a position belongs to, with `k = m(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub level: u64,
    pub class: Outcome,
}

/// `P(m(x))` iff `M(x)` is a transversal; otherwise `N(m(x))` (for MTF `h`).
pub fn membership(x: &[u64], h: &MtfHypergraph) -> Result<Membership> {
    check_len(x, &h.0)?;
    let (level, argmin) = min_and_argmin(x);
    let class = if is_transversal(argmin, &h.0) {
        Outcome::P
    } else {
        Outcome::N
    };
    Ok(Membership { level, class })
}

pub fn remoteness_mtf(x: &[u64], h: &MtfHypergraph) -> Result<Remoteness> {
    let m = membership(x, h)?;
    let base = m
        .level
        .checked_mul(2)
        .ok_or(Error::Overflow("remoteness exceeds 64 bits"))?;
    Ok(Remoteness(match m.class {
        Outcome::P => base,
        Outcome::N => base + 1,
    }))
}

/// A move lowering the remoteness by one; `None` on terminal positions.
///
/// From `N(k)` the move sets the piles of the first edge `H` of
/// `H(x) ∩ H(x)^t` to `k`, landing in `P(k)`, where `H(x)` is the family
/// induced by the piles above the minimum. From `P(k)`, `k ≥ 1`, it is the
/// slow move on the first edge `H` for which `H ∩ M(x)` is not a
/// transversal; the result lies in `N(k − 1)`.
pub fn optimal_move_mtf(x: &[u64], h: &MtfHypergraph) -> Result<Option<Vec<u64>>> {
    let g = &h.0;
    let m = membership(x, h)?;
    let (k, argmin) = min_and_argmin(x);
    let inconsistent = || Error::Inconsistent("MTF position without the expected move".into());
    match m.class {
        Outcome::N => {
            let rest = induced(g, g.ground() & !argmin);
            let edge = rest
                .edges
                .iter()
                .copied()
                .find(|&e| is_transversal(e, &rest))
                .ok_or_else(inconsistent)?;
            let mut z = x.to_vec();
            for (i, zi) in z.iter_mut().enumerate() {
                if edge >> i & 1 == 1 {
                    *zi = k;
                }
            }
            Ok(Some(z))
        }
        Outcome::P if k == 0 => Ok(None),
        Outcome::P => {
            let edge = g
                .edges
                .iter()
                .copied()
                .find(|&e| !is_transversal(e & argmin, g))
                .ok_or_else(inconsistent)?;
            let mut z = x.to_vec();
            for (i, zi) in z.iter_mut().enumerate() {
                if edge >> i & 1 == 1 {
                    *zi -= 1;
                }
            }
            Ok(Some(z))
        }
    }
}

/// Piles for [`HypergraphNim`].
pub type HgPiles = SmallVec<[u64; 8]>;

/// All `H`-moves from `x`, edge by edge in edge order, each edge's targets
/// in increasing lexicographic order.
pub fn h_successors(x: &[u64], h: &Hypergraph) -> Result<Vec<HgPiles>> {
    check_len(x, h)?;
    Ok(successors_unchecked(x, h))
}

fn successors_unchecked(x: &[u64], h: &Hypergraph) -> Vec<HgPiles> {
    let mut out = Vec::new();
    for &edge in &h.edges {
        let idx: Vec<usize> = (0..h.n).filter(|i| edge >> i & 1 == 1).collect();
        if idx.iter().any(|&i| x[i] == 0) {
            continue;
        }
        let mut z: HgPiles = x.iter().copied().collect();
        for &i in &idx {
            z[i] = 0;
        }
        // odometer over z_i in 0..x_i for i in the edge, last index fastest
        'targets: loop {
            out.push(z.clone());
            for &i in idx.iter().rev() {
                if z[i] + 1 < x[i] {
                    z[i] += 1;
                    continue 'targets;
                }
                z[i] = 0;
            }
            break;
        }
    }
    out
}

/// Hypergraph NIM as a [`Game`], for checking against the engine.
#[derive(Debug, Clone)]
pub struct HypergraphNim {
    pub hypergraph: Hypergraph,
}

impl Game for HypergraphNim {
    type Position = HgPiles;

    fn successors(&self, x: &HgPiles) -> Vec<HgPiles> {
        successors_unchecked(x, &self.hypergraph)
    }

    fn is_terminal(&self, x: &HgPiles) -> bool {
        self.hypergraph
            .edges
            .iter()
            .all(|&e| (0..self.hypergraph.n).any(|i| e >> i & 1 == 1 && x[i] == 0))
    }
}
