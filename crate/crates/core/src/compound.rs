//! Disjunctive and conjunctive compounds.
//!
//! The closed forms ([`disjunctive_sg`], [`conjunctive_remoteness`]) are what
//! callers use; the explicit product games exist to check them against the
//! engine on small instances.

use crate::error::{invalid, Result};
use crate::game::{Game, Remoteness, SgValue};

/// NIM-sum of component SG values.
pub fn disjunctive_sg<I>(values: I) -> SgValue
where
    I: IntoIterator<Item = SgValue>,
{
    SgValue(values.into_iter().fold(0, |acc, v| acc ^ v.0))
}

/// Remoteness of a conjunctive compound: the minimum over its components.
pub fn conjunctive_remoteness<I>(values: I) -> Result<Remoteness>
where
    I: IntoIterator<Item = Remoteness>,
{
    values
        .into_iter()
        .min()
        .ok_or_else(|| invalid("conjunctive compound of zero games"))
}

/// A move is a move in exactly one component.
///
/// Successors are ordered by component index, then by that component's own order.
#[derive(Debug, Clone)]
pub struct Disjunctive<G> {
    pub components: Vec<G>,
}

impl<G: Game> Disjunctive<G> {
    pub fn new(components: Vec<G>) -> Self {
        Disjunctive { components }
    }
}

impl<G: Game> Game for Disjunctive<G> {
    type Position = Vec<G::Position>;

    fn successors(&self, position: &Self::Position) -> Vec<Self::Position> {
        let mut out = Vec::new();
        for (i, game) in self.components.iter().enumerate() {
            for child in game.successors(&position[i]) {
                let mut next = position.clone();
                next[i] = child;
                out.push(next);
            }
        }
        out
    }
}

/// A move is a simultaneous move in every component; the compound is over
/// as soon as any component is terminal.
///
/// Successors are the cartesian product of component successor lists in
/// lexicographic order (last component varies fastest).
#[derive(Debug, Clone)]
pub struct Conjunctive<G> {
    pub components: Vec<G>,
}

impl<G: Game> Conjunctive<G> {
    pub fn new(components: Vec<G>) -> Self {
        Conjunctive { components }
    }
}

impl<G: Game> Game for Conjunctive<G> {
    type Position = Vec<G::Position>;

    fn successors(&self, position: &Self::Position) -> Vec<Self::Position> {
        let lists: Vec<Vec<G::Position>> = self
            .components
            .iter()
            .zip(position)
            .map(|(g, p)| g.successors(p))
            .collect();
        if lists.is_empty() || lists.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; lists.len()];
        loop {
            out.push(idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect());
            let mut d = lists.len();
            loop {
                if d == 0 {
                    return out;
                }
                d -= 1;
                idx[d] += 1;
                if idx[d] < lists[d].len() {
                    break;
                }
                idx[d] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Solver;
    use crate::explicit::NimPile;

    #[test]
    fn closed_forms() {
        assert_eq!(disjunctive_sg([]), SgValue(0));
        assert_eq!(disjunctive_sg([SgValue(3), SgValue(5)]), SgValue(6));
        assert_eq!(conjunctive_remoteness([Remoteness(4)]).unwrap(), Remoteness(4));
        assert_eq!(
            conjunctive_remoteness([Remoteness(4), Remoteness(6), Remoteness(5)]).unwrap(),
            Remoteness(4)
        );
        assert!(conjunctive_remoteness([]).is_err());
    }

    #[test]
    fn products_of_one_game() {
        let d = Disjunctive::new(vec![NimPile]);
        let c = Conjunctive::new(vec![NimPile]);
        let single: Vec<Vec<u64>> = NimPile.successors(&4).into_iter().map(|p| vec![p]).collect();
        assert_eq!(d.successors(&vec![4]), single);
        assert_eq!(c.successors(&vec![4]), single);
    }

    #[test]
    fn nim_piles_three_and_five() {
        let d = Disjunctive::new(vec![NimPile, NimPile]);
        assert_eq!(Solver::new(&d).sg(&vec![3, 5]).unwrap(), SgValue(6));
        let c = Conjunctive::new(vec![NimPile, NimPile]);
        assert_eq!(Solver::new(&c).remoteness(&vec![3, 5]).unwrap(), Remoteness(1));
        assert!(c.successors(&vec![0, 5]).is_empty());
    }
}
