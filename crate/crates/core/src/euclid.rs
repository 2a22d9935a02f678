//! Game Euclid: subtract a positive multiple of the smaller coordinate from
//! the larger one, keeping it positive. `(x, x)` is terminal.
//!
//! All golden-ratio comparisons go through [`below_phi_times`], the exact
//! quadratic form of `t < φ·s`. Nothing here touches floating point.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, precondition, Error, Result};
use crate::game::{Game, Remoteness, SgValue};

/// `t < φ·s` for nonnegative integers, `s > 0`.
///
/// φ is the positive root of `z² = z + 1`, so for `t > 0` the comparison
/// is `t² < t·s + s²`. Equality would make φ rational, so it never holds.
pub fn below_phi_times(t: &BigUint, s: &BigUint) -> bool {
    t * t < t * s + s * s
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EuclidPosition {
    #[serde(with = "crate::bignum")]
    pub x: BigUint,
    #[serde(with = "crate::bignum")]
    pub y: BigUint,
}

impl EuclidPosition {
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if x.is_zero() || y.is_zero() {
            return Err(invalid("Euclid coordinates must be positive"));
        }
        Ok(EuclidPosition { x, y })
    }

    pub fn is_terminal(&self) -> bool {
        self.x == self.y
    }

    pub fn gcd(&self) -> BigUint {
        self.x.gcd(&self.y)
    }

    /// Both coordinates divided by their gcd.
    pub fn normalized(&self) -> EuclidPosition {
        let g = self.gcd();
        EuclidPosition {
            x: &self.x / &g,
            y: &self.y / &g,
        }
    }

    fn scaled(&self, g: &BigUint) -> EuclidPosition {
        EuclidPosition {
            x: &self.x * g,
            y: &self.y * g,
        }
    }

    // (larger, smaller, swapped)
    fn oriented(&self) -> (&BigUint, &BigUint, bool) {
        if self.x >= self.y {
            (&self.x, &self.y, false)
        } else {
            (&self.y, &self.x, true)
        }
    }

    fn with_larger(&self, larger: BigUint, swapped: bool) -> EuclidPosition {
        if swapped {
            EuclidPosition {
                x: self.x.clone(),
                y: larger,
            }
        } else {
            EuclidPosition {
                x: larger,
                y: self.y.clone(),
            }
        }
    }
}

impl fmt::Display for EuclidPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// All moves, by increasing multiple subtracted. Coordinate order is kept.
///
/// The list has `⌈x/y⌉ - 1` entries, so only call this on positions whose
/// coordinate ratio is small.
pub fn euclid_successors(p: &EuclidPosition) -> Vec<EuclidPosition> {
    let (hi, lo, swapped) = p.oriented();
    let mut out = Vec::new();
    let mut next = hi.clone();
    while next > *lo {
        next -= lo;
        out.push(p.with_larger(next.clone(), swapped));
    }
    out
}

/// P-positions are exactly those with `x < φy` and `y < φx`.
pub fn is_p_euclid(p: &EuclidPosition) -> bool {
    // Both sides are homogeneous of degree two, so scaling by the gcd does not matter.
    below_phi_times(&p.x, &p.y) && below_phi_times(&p.y, &p.x)
}

/// `⌊|x/y − y/x|⌋`, i.e. `⌊(u² − v²)/(uv)⌋` with `u = max`, `v = min`.
pub fn sg_euclid(p: &EuclidPosition) -> Result<SgValue> {
    let (u, v, _) = p.oriented();
    let value = (u * u - v * v) / (u * v);
    value
        .to_u64()
        .map(SgValue)
        .ok_or(Error::Overflow("Euclid SG value exceeds 64 bits"))
}

/// The unique move from an N-position to a P-position.
pub fn winning_target(p: &EuclidPosition) -> Result<EuclidPosition> {
    if p.is_terminal() || is_p_euclid(p) {
        return Err(precondition(format!("{p} is not an N-position")));
    }
    let (hi, lo, swapped) = p.oriented();
    let r = hi % lo;
    let mut found = None;
    for candidate in [r.clone(), r + lo] {
        // reachable: positive and at least one multiple of `lo` removed
        if candidate.is_zero() || candidate >= *hi {
            continue;
        }
        let target = p.with_larger(candidate, swapped);
        if is_p_euclid(&target) {
            if found.is_some() {
                return Err(Error::Inconsistent(format!("{p} has two P-successors")));
            }
            found = Some(target);
        }
    }
    found.ok_or_else(|| Error::Inconsistent(format!("{p} has no P-successor")))
}

/// Remoteness together with the unique optimal play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EuclidPlay {
    pub remoteness: Remoteness,
    /// Every position of the play, from the start to the terminal.
    pub trace: Vec<EuclidPosition>,
}

/// Simulates the unique optimal play.
///
/// From a P-position the only move is `larger − smaller`; from an
/// N-position it is [`winning_target`]. Each move shrinks the moved
/// coordinate by a constant factor, so the play has `O(log xy)` moves.
pub fn optimal_play(p: &EuclidPosition) -> EuclidPlay {
    let g = p.gcd();
    let mut current = p.normalized();
    let mut trace = vec![p.clone()];
    while !current.is_terminal() {
        current = if is_p_euclid(&current) {
            let (hi, lo, swapped) = current.oriented();
            current.with_larger(hi - lo, swapped)
        } else {
            winning_target(&current).expect("non-terminal N-position has a P-successor")
        };
        trace.push(current.scaled(&g));
    }
    EuclidPlay {
        remoteness: Remoteness(trace.len() as u64 - 1),
        trace,
    }
}

pub fn remoteness_euclid(p: &EuclidPosition) -> Remoteness {
    optimal_play(p).remoteness
}

/// Remoteness values 0..=3 have a direct characterization; larger values
/// yield `None`.
pub fn small_r_classifier(p: &EuclidPosition) -> Option<u8> {
    let q = p.normalized();
    let one = BigUint::one();
    let (hi, lo, _) = q.oriented();
    if *hi == one {
        return Some(0);
    }
    if *lo == one {
        return Some(1);
    }
    if hi - lo == one {
        return Some(2);
    }
    // hi = m·lo ± 1 for some m ≥ 1, i.e. hi ≡ ±1 (mod lo)
    let r = hi % lo;
    if r == one || r == lo - &one {
        return Some(3);
    }
    None
}

/// Raw move relation on machine integers, without gcd normalization.
///
/// Successors are ordered by increasing multiple subtracted.
#[derive(Debug, Clone, Copy, Default)]
pub struct EuclidRules;

impl Game for EuclidRules {
    type Position = (u64, u64);

    fn successors(&self, &(x, y): &(u64, u64)) -> Vec<(u64, u64)> {
        if x == y {
            return Vec::new();
        }
        if x > y {
            (1..)
                .map(|l| x - l * y)
                .take(((x - 1) / y) as usize)
                .map(|nx| (nx, y))
                .collect()
        } else {
            (1..)
                .map(|l| y - l * x)
                .take(((y - 1) / x) as usize)
                .map(|ny| (x, ny))
                .collect()
        }
    }

    fn is_terminal(&self, &(x, y): &(u64, u64)) -> bool {
        x == y
    }
}
