//! Moore's NIM: `n` piles, a move strictly reduces between 1 and `k` of them.
//!
//! Write the piles in binary as the rows of a bit matrix. A position is a
//! P-position iff every column sum is divisible by `k + 1`, and then its
//! remoteness is `2·S/(k+1)` where `S` is the total number of stones.
//!
//! For an N-position the remoteness is `1 + 2·D/(k+1)` where `D` is the
//! fewest stones any winning move can leave. A winning move that only
//! touches piles inside a `k`-set `K` leaves a number of stones fixed by `K`
//! alone, so `D` is found by trying every `K` and deciding, bit column by bit
//! column, whether the piles of `K` can be rewritten to fix every column sum.
//! Deciding whether `D` reaches its lower bound is NP-hard (see
//! [`crate::vertex_cover`]); the search is exponential in `min(k, n - k)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{invalid, precondition, Error, Result};
use crate::game::{Game, Remoteness};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoorePosition {
    #[serde(with = "crate::bignum::vec")]
    piles: Vec<BigUint>,
    k: usize,
}

impl MoorePosition {
    pub fn new(piles: Vec<BigUint>, k: usize) -> Result<Self> {
        if piles.is_empty() {
            return Err(invalid("Moore's NIM needs at least one pile"));
        }
        if k == 0 || k > piles.len() {
            return Err(invalid(format!(
                "k must satisfy 1 <= k <= n (k = {k}, n = {})",
                piles.len()
            )));
        }
        Ok(MoorePosition { piles, k })
    }

    pub fn from_u64s(piles: &[u64], k: usize) -> Result<Self> {
        Self::new(piles.iter().map(|&p| BigUint::from(p)).collect(), k)
    }

    pub fn piles(&self) -> &[BigUint] {
        &self.piles
    }

    pub fn n(&self) -> usize {
        self.piles.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total number of stones.
    pub fn stones(&self) -> BigUint {
        self.piles.iter().sum()
    }

    pub fn is_terminal(&self) -> bool {
        self.piles.iter().all(Zero::is_zero)
    }

    pub fn bouton(&self) -> BoutonMatrix {
        BoutonMatrix::new(self)
    }
}

impl fmt::Display for MoorePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.piles.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "; k={})", self.k)
    }
}

/// Binary expansion of the piles, one row per pile, column `j` holding bit `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoutonMatrix {
    rows: Vec<Vec<bool>>,
    column_sums: Vec<usize>,
    modulus: usize,
}

impl BoutonMatrix {
    pub fn new(p: &MoorePosition) -> Self {
        let width = p
            .piles
            .iter()
            .map(|x| x.bits() as usize)
            .max()
            .unwrap_or(0)
            .max(1);
        let rows: Vec<Vec<bool>> = p
            .piles
            .iter()
            .map(|x| (0..width).map(|j| x.bit(j as u64)).collect())
            .collect();
        let column_sums = (0..width)
            .map(|j| rows.iter().filter(|r| r[j]).count())
            .collect();
        BoutonMatrix {
            rows,
            column_sums,
            modulus: p.k + 1,
        }
    }

    /// Number of columns, `N + 1` for highest bit index `N` (1 for all-zero piles).
    pub fn width(&self) -> usize {
        self.column_sums.len()
    }

    pub fn bit(&self, pile: usize, column: usize) -> bool {
        self.rows[pile][column]
    }

    pub fn column_sum(&self, column: usize) -> usize {
        self.column_sums[column]
    }

    /// `a_j`: column sums reduced mod `k + 1`.
    pub fn column_residues(&self) -> Vec<usize> {
        self.column_sums.iter().map(|s| s % self.modulus).collect()
    }

    /// Rebuilds the pile sizes from the bits.
    pub fn piles(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| bits_to_int(r.iter().copied())).collect()
    }
}

fn bits_to_int(bits: impl DoubleEndedIterator<Item = bool>) -> BigUint {
    bits.rev().fold(BigUint::zero(), |acc, b| (acc << 1u32) + u32::from(b))
}

/// `Σ_j (k+1)^j · a_j`; zero exactly on P-positions.
pub fn moore_function(p: &MoorePosition) -> BigUint {
    let base = BigUint::from(p.k + 1);
    p.bouton()
        .column_residues()
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &a| acc * &base + a)
}

pub fn is_p_position(p: &MoorePosition) -> bool {
    p.bouton().column_residues().iter().all(|&a| a == 0)
}

fn to_remoteness(r: BigUint) -> Result<Remoteness> {
    r.to_u64()
        .map(Remoteness)
        .ok_or(Error::Overflow("remoteness exceeds 64 bits"))
}

/// `2·S/(k+1)` on P-positions.
pub fn remoteness_p(p: &MoorePosition) -> Result<Remoteness> {
    if !is_p_position(p) {
        return Err(precondition(format!("{p} is not a P-position")));
    }
    let s = p.stones();
    let modulus = BigUint::from(p.k + 1);
    debug_assert!((&s % &modulus).is_zero());
    to_remoteness(s * 2u32 / modulus)
}

/// A winning move that only reduces piles inside `subset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetMove {
    /// Pile indices (0-based, increasing) the move may reduce.
    pub subset: Vec<usize>,
    pub target: MoorePosition,
    /// Stones left after the move.
    pub stones: BigUint,
}

/// Precomputed column data for evaluating many subsets of one N-position.
struct Analysis<'a> {
    position: &'a MoorePosition,
    matrix: BoutonMatrix,
    stones: BigUint,
}

impl<'a> Analysis<'a> {
    fn new(position: &'a MoorePosition) -> Result<Self> {
        if is_p_position(position) {
            return Err(precondition(format!("{position} is not an N-position")));
        }
        Ok(Analysis {
            position,
            matrix: position.bouton(),
            stones: position.stones(),
        })
    }

    fn modulus(&self) -> usize {
        self.position.k + 1
    }

    /// Ones the subset must hold in each column after the move, `c_j`.
    fn required_ones(&self, subset: &[usize]) -> Vec<usize> {
        let m = self.modulus();
        (0..self.matrix.width())
            .map(|j| {
                let inside = subset.iter().filter(|&&i| self.matrix.bit(i, j)).count();
                let outside = (self.matrix.column_sum(j) - inside) % m;
                (m - outside) % m
            })
            .collect()
    }

    /// Stones left by any winning move supported inside `subset`.
    fn stones_after(&self, subset: &[usize], required: &[usize]) -> BigUint {
        let removed: BigUint = subset.iter().map(|&i| &self.position.piles[i]).sum();
        let added = required
            .iter()
            .enumerate()
            .fold(BigUint::zero(), |acc, (j, &c)| acc + (BigUint::from(c) << j));
        &self.stones - removed + added
    }

    /// Decides whether the piles of `subset` can be lowered (or kept) so that
    /// column `j` ends with exactly `required[j]` ones, and returns new pile
    /// values for the subset if so.
    ///
    /// Columns are scanned from the most significant down. The state is the
    /// set of subset piles still equal to their original value on every bit
    /// seen so far ("tight"). A tight pile with a 1 may keep it or drop to 0
    /// and become free; a tight pile with a 0 must keep it; free piles take
    /// any bit.
    fn realize(&self, subset: &[usize], required: &[usize]) -> Result<Option<Vec<BigUint>>> {
        let k = subset.len();
        if k > 63 {
            return Err(Error::Capacity {
                what: "piles per move in the subset search",
                limit: 63,
            });
        }
        let all: u64 = if k == 0 { 0 } else { u64::MAX >> (64 - k) };
        let width = self.matrix.width();
        let ones_mask = |j: usize| -> u64 {
            subset
                .iter()
                .enumerate()
                .filter(|(_, &i)| self.matrix.bit(i, j))
                .fold(0, |m, (p, _)| m | 1 << p)
        };

        // parents[j]: state after column j -> state before it
        let mut parents: Vec<FxHashMap<u64, u64>> = vec![FxHashMap::default(); width];
        let mut states = vec![all];
        for j in (0..width).rev() {
            let ones = ones_mask(j);
            let need = required[j];
            let mut next = FxHashMap::default();
            for &tight in &states {
                let keep_ones = tight & ones;
                let free = k - tight.count_ones() as usize;
                // enumerate submasks of keep_ones: piles that stay tight on a 1
                let mut r = keep_ones;
                loop {
                    let emitted = r.count_ones() as usize;
                    if emitted <= need && need - emitted <= free {
                        next.entry((tight & !keep_ones) | r).or_insert(tight);
                    }
                    if r == 0 {
                        break;
                    }
                    r = (r - 1) & keep_ones;
                }
            }
            if next.is_empty() {
                return Ok(None);
            }
            states = next.keys().copied().collect();
            states.sort_unstable();
            parents[j] = next;
        }

        // Backtrack from the smallest final state.
        let mut after = states[0];
        let mut bits = vec![vec![false; width]; k];
        for j in 0..width {
            let before = parents[j][&after];
            let ones = ones_mask(j);
            let tight_emitted = after & before & ones;
            let mut extra = required[j] - tight_emitted.count_ones() as usize;
            for (p, row) in bits.iter_mut().enumerate() {
                let bit = 1u64 << p;
                if before & bit != 0 {
                    row[j] = tight_emitted & bit != 0;
                } else if extra > 0 {
                    row[j] = true;
                    extra -= 1;
                }
            }
            debug_assert_eq!(extra, 0);
            after = before;
        }
        debug_assert_eq!(after, all);
        Ok(Some(
            bits.into_iter()
                .map(|row| bits_to_int(row.into_iter()))
                .collect(),
        ))
    }

    fn evaluate(&self, subset: &[usize]) -> Result<Option<SubsetMove>> {
        let required = self.required_ones(subset);
        Ok(self.realize(subset, &required)?.map(|values| {
            let mut piles = self.position.piles.clone();
            for (&i, v) in subset.iter().zip(values) {
                piles[i] = v;
            }
            SubsetMove {
                subset: subset.to_vec(),
                target: MoorePosition {
                    piles,
                    k: self.position.k,
                },
                stones: self.stones_after(subset, &required),
            }
        }))
    }

    /// Lowest-stone winning move; ties go to the lexicographically first subset.
    ///
    /// Piles of equal size are interchangeable, so subsets are enumerated as
    /// multisets over the distinct pile values, each realized by the smallest
    /// indices of each value class. That representative is also the
    /// lexicographically smallest subset with its multiset.
    fn best(&self, stop_at: Option<&BigUint>) -> Result<SubsetMove> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of: FxHashMap<&BigUint, usize> = FxHashMap::default();
        for (i, x) in self.position.piles.iter().enumerate() {
            let c = *class_of.entry(x).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
        }
        let mut search = Search {
            analysis: self,
            classes: &classes,
            counts: vec![0; classes.len()],
            best: None,
            stop_at,
            done: false,
        };
        search.visit(0, self.position.k)?;
        search.best.ok_or_else(|| {
            Error::Inconsistent(format!("N-position {} has no winning move", self.position))
        })
    }
}

struct Search<'s, 'a> {
    analysis: &'s Analysis<'a>,
    classes: &'s [Vec<usize>],
    counts: Vec<usize>,
    best: Option<SubsetMove>,
    stop_at: Option<&'s BigUint>,
    done: bool,
}

impl Search<'_, '_> {
    fn visit(&mut self, class: usize, left: usize) -> Result<()> {
        if self.done {
            return Ok(());
        }
        if left == 0 {
            return self.consider();
        }
        if class == self.classes.len() {
            return Ok(());
        }
        let room: usize = self.classes[class..].iter().map(Vec::len).sum();
        if room < left {
            return Ok(());
        }
        for take in (0..=left.min(self.classes[class].len())).rev() {
            self.counts[class] = take;
            self.visit(class + 1, left - take)?;
        }
        self.counts[class] = 0;
        Ok(())
    }

    fn consider(&mut self) -> Result<()> {
        let mut subset: Vec<usize> = self
            .counts
            .iter()
            .zip(self.classes)
            .flat_map(|(&c, members)| members[..c].iter().copied())
            .collect();
        subset.sort_unstable();
        let required = self.analysis.required_ones(&subset);
        let stones = self.analysis.stones_after(&subset, &required);
        if let Some(best) = &self.best {
            match stones.cmp(&best.stones) {
                Ordering::Greater => return Ok(()),
                Ordering::Equal if subset >= best.subset => return Ok(()),
                _ => {}
            }
        }
        if let Some(found) = self.analysis.evaluate(&subset)? {
            debug_assert_eq!(found.stones, stones);
            if self.stop_at == Some(&found.stones) {
                self.done = true;
            }
            self.best = Some(found);
        }
        Ok(())
    }
}

/// Winning move reducing only piles in `subset` (0-based indices, `|subset| = k`).
///
/// Every such move leaves the same number of stones, returned as
/// [`SubsetMove::stones`].
pub fn subset_move_target(p: &MoorePosition, subset: &[usize]) -> Result<Option<SubsetMove>> {
    if subset.len() != p.k {
        return Err(invalid(format!(
            "subset has {} piles, expected k = {}",
            subset.len(),
            p.k
        )));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != subset.len() || sorted.last().is_some_and(|&i| i >= p.n()) {
        return Err(invalid("subset indices must be distinct and below n"));
    }
    Analysis::new(p)?.evaluate(&sorted)
}

/// The winning move leaving the fewest stones (ties: lexicographically first subset).
pub fn best_winning_move(p: &MoorePosition) -> Result<SubsetMove> {
    Analysis::new(p)?.best(None)
}

pub fn remoteness(p: &MoorePosition) -> Result<Remoteness> {
    if is_p_position(p) {
        return remoteness_p(p);
    }
    let best = best_winning_move(p)?;
    let modulus = BigUint::from(p.k + 1);
    debug_assert!((&best.stones % &modulus).is_zero());
    to_remoteness(best.stones * 2u32 / modulus + 1u32)
}

/// Fewest stones any winning move from an N-position can leave:
/// `S − Σ_j 2^j a_j`.
pub fn maximal_move_bound(p: &MoorePosition) -> Result<BigUint> {
    if is_p_position(p) {
        return Err(precondition(format!("{p} is not an N-position")));
    }
    let removable = p
        .bouton()
        .column_residues()
        .iter()
        .enumerate()
        .fold(BigUint::zero(), |acc, (j, &a)| acc + (BigUint::from(a) << j));
    Ok(p.stones() - removable)
}

/// Whether some winning move attains [`maximal_move_bound`].
pub fn has_maximal_move(p: &MoorePosition) -> Result<bool> {
    let bound = maximal_move_bound(p)?;
    let best = Analysis::new(p)?.best(Some(&bound))?;
    Ok(best.stones == bound)
}

/// A move that lowers the remoteness by exactly one; `None` on the terminal.
///
/// From a P-position this takes one stone from the first pile holding the
/// lowest nonzero column; the reply then has to remove exactly `k` more.
/// From an N-position it is [`best_winning_move`].
pub fn optimal_move(p: &MoorePosition) -> Result<Option<MoorePosition>> {
    if p.is_terminal() {
        return Ok(None);
    }
    if !is_p_position(p) {
        return Ok(Some(best_winning_move(p)?.target));
    }
    let m = p.bouton();
    let column = (0..m.width())
        .find(|&j| m.column_sum(j) > 0)
        .expect("non-terminal position has a nonzero column");
    let pile = (0..p.n())
        .find(|&i| m.bit(i, column))
        .expect("nonzero column has a set bit");
    let mut piles = p.piles.clone();
    piles[pile] -= 1u32;
    Ok(Some(MoorePosition { piles, k: p.k }))
}

/// Small-pile position for [`MooreRules`].
pub type Piles = SmallVec<[u32; 8]>;

/// Moore's NIM move relation on small piles.
///
/// Successors are every `z ≤ x`, `z ≠ x`, reducing at most `k` piles, in
/// increasing lexicographic order of `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MooreRules {
    pub k: usize,
}

impl Game for MooreRules {
    type Position = Piles;

    fn successors(&self, x: &Piles) -> Vec<Piles> {
        let n = x.len();
        let mut out = Vec::new();
        let mut z: Piles = SmallVec::from_elem(0, n);
        loop {
            let reduced = z.iter().zip(x).filter(|(a, b)| a < b).count();
            if reduced >= 1 && reduced <= self.k {
                out.push(z.clone());
            }
            // odometer increment, last pile fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if z[i] < x[i] {
                    z[i] += 1;
                    break;
                }
                z[i] = 0;
            }
        }
    }

    fn is_terminal(&self, x: &Piles) -> bool {
        x.iter().all(|&v| v == 0)
    }
}
