//! Explicit game graphs and the one-pile NIM adapter.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::game::Game;

/// Wire format for explicit graphs: `{"nodes":[..],"edges":[[from,to],..],"start":id}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub start: String,
}

/// A game given by an explicit directed graph over string-labelled nodes.
///
/// Positions are node indices in declaration order. Successors follow edge
/// order in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    start: usize,
}

impl ExplicitGraph {
    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        let mut index = FxHashMap::default();
        for (i, id) in spec.nodes.iter().enumerate() {
            if index.insert(id.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate node id {id:?}")));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| invalid(format!("unknown node id {id:?}")))
        };
        let mut adjacency = vec![Vec::new(); spec.nodes.len()];
        for (from, to) in &spec.edges {
            adjacency[lookup(from)?].push(lookup(to)?);
        }
        let start = lookup(&spec.start)?;
        Ok(ExplicitGraph {
            labels: spec.nodes.clone(),
            adjacency,
            start,
        })
    }

    /// Builds a graph directly from adjacency lists over `0..n`.
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>, start: usize) -> Result<Self> {
        let n = adjacency.len();
        if start >= n || adjacency.iter().flatten().any(|&v| v >= n) {
            return Err(invalid("node index out of range"));
        }
        Ok(ExplicitGraph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            adjacency,
            start,
        })
    }

    pub fn to_spec(&self) -> GraphSpec {
        let edges = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect();
        GraphSpec {
            nodes: self.labels.clone(),
            edges,
            start: self.labels[self.start].clone(),
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }
}

impl Game for ExplicitGraph {
    type Position = usize;

    fn successors(&self, position: &usize) -> Vec<usize> {
        self.adjacency[*position].clone()
    }

    fn is_terminal(&self, position: &usize) -> bool {
        self.adjacency[*position].is_empty()
    }
}

/// One-pile NIM: from `s` move to any of `0..s`, in increasing order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NimPile;

impl Game for NimPile {
    type Position = u64;

    fn successors(&self, position: &u64) -> Vec<u64> {
        (0..*position).collect()
    }

    fn is_terminal(&self, position: &u64) -> bool {
        *position == 0
    }
}
