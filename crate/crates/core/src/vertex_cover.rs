//! Reduction from Vertex Cover to the maximal-move question in Moore's NIM.
//!
//! Columns of the bit matrix are the edges. Each vertex row has a 1 in the
//! columns of its incident edges; each edge additionally gets `c` slack rows
//! with a single 1 in its own column. With `k = c` every column sum is
//! `2 + c ≡ 1 (mod c + 1)`, and a maximal winning move (one clearing exactly
//! one bit per column) exists iff the graph has a vertex cover of size `≤ c`.

use std::fmt;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::moore::MoorePosition;

/// Vertex identifier; JSON numbers are accepted and kept as their decimal text.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = VertexId;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a vertex id (string or integer)")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<VertexId, E> {
                Ok(VertexId(v.to_owned()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<VertexId, E> {
                Ok(VertexId(v.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<VertexId, E> {
                Ok(VertexId(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

/// Wire format: `{"vertices":[..],"edges":[[u,v],..],"c":int}`.
///
/// `c` may be omitted in files and supplied separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcInstance {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
    #[serde(default)]
    pub c: usize,
}

impl VcInstance {
    /// Builds an instance over vertices `0..n` from index pairs.
    pub fn from_indices(n: usize, edges: &[(usize, usize)], c: usize) -> Result<Self> {
        let inst = VcInstance {
            vertices: (0..n).map(|v| VertexId(v.to_string())).collect(),
            edges: edges
                .iter()
                .map(|&(u, v)| (VertexId(u.to_string()), VertexId(v.to_string())))
                .collect(),
            c,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        self.edge_indices().map(|_| ())?;
        if self.c < 1 {
            return Err(invalid("cover size c must be at least 1"));
        }
        Ok(())
    }

    /// Edges as vertex-index pairs, validating references, loops and duplicates.
    pub fn edge_indices(&self) -> Result<Vec<(usize, usize)>> {
        let mut index = FxHashMap::default();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(invalid(format!("duplicate vertex {v}")));
            }
        }
        let mut seen = FxHashMap::default();
        let mut out = Vec::with_capacity(self.edges.len());
        for (u, v) in &self.edges {
            let (Some(&a), Some(&b)) = (index.get(u), index.get(v)) else {
                return Err(invalid(format!("edge {{{u}, {v}}} names an undeclared vertex")));
            };
            if a == b {
                return Err(invalid(format!("self-loop at {u}")));
            }
            if seen.insert((a.min(b), a.max(b)), ()).is_some() {
                return Err(invalid(format!("duplicate edge {{{u}, {v}}}")));
            }
            out.push((a, b));
        }
        Ok(out)
    }
}

/// One labelled row of the reduction matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRow {
    /// `v:<vertex>` or `slack:<edge index>:<i>`.
    pub label: String,
    #[serde(with = "crate::bignum")]
    pub value: BigUint,
}

/// Output format: `{"rows":[{"label":..,"value":..}],"k":int}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub rows: Vec<ReductionRow>,
    pub k: usize,
}

impl Reduction {
    pub fn position(&self) -> MoorePosition {
        MoorePosition::new(self.rows.iter().map(|r| r.value.clone()).collect(), self.k)
            .expect("reduction always has n >= k >= 1")
    }
}

/// Builds the Moore's NIM instance for `inst`.
///
/// Rows are the vertices in input order, then the `c` slack rows of each
/// edge in edge order; column `j` (bit `j`) is the `j`-th input edge. The
/// result has `|V| + c·|E|` piles and `k = c`.
pub fn reduce_vertex_cover(inst: &VcInstance) -> Result<Reduction> {
    inst.validate()?;
    let edges = inst.edge_indices()?;
    let mut vertex_rows = vec![BigUint::default(); inst.vertices.len()];
    for (j, &(u, v)) in edges.iter().enumerate() {
        vertex_rows[u].set_bit(j as u64, true);
        vertex_rows[v].set_bit(j as u64, true);
    }
    let mut rows: Vec<ReductionRow> = inst
        .vertices
        .iter()
        .zip(vertex_rows)
        .map(|(v, value)| ReductionRow {
            label: format!("v:{v}"),
            value,
        })
        .collect();
    for j in 0..edges.len() {
        for i in 0..inst.c {
            rows.push(ReductionRow {
                label: format!("slack:{j}:{i}"),
                value: BigUint::from(1u8) << j,
            });
        }
    }
    Ok(Reduction { rows, k: inst.c })
}

/// Smallest vertex cover size by exhaustive search (up to 30 vertices).
pub fn min_vertex_cover_bruteforce(n: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if n > 30 {
        return Err(invalid("brute-force vertex cover is limited to 30 vertices"));
    }
    let mut best = n;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < best && edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
            best = size;
        }
    }
    Ok(best)
}
