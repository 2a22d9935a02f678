//! Helpers shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use impartial::explicit::ExplicitGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Smith's peeling labelling of an acyclic graph given as adjacency lists.
///
/// Round `2j` labels every unlabelled node whose successors are all
/// labelled; round `2j + 1` labels every unlabelled node with a successor
/// labelled `2j`. Each round sees only labels from earlier rounds.
pub fn peeling_remoteness(adj: &[Vec<usize>]) -> Vec<u64> {
    let n = adj.len();
    let mut label: Vec<Option<u64>> = vec![None; n];
    let mut left = n;
    let mut round = 0u64;
    while left > 0 {
        let fresh: Vec<usize> = (0..n)
            .filter(|&v| label[v].is_none())
            .filter(|&v| {
                if round % 2 == 0 {
                    adj[v].iter().all(|&w| label[w].is_some())
                } else {
                    adj[v].iter().any(|&w| label[w] == Some(round - 1))
                }
            })
            .collect();
        for &v in &fresh {
            label[v] = Some(round);
        }
        left -= fresh.len();
        round += 1;
        assert!(round <= 2 * n as u64 + 2, "graph is not acyclic");
    }
    label.into_iter().map(Option::unwrap).collect()
}

/// SG values by mex over a reverse topological order.
pub fn sg_by_topology(adj: &[Vec<usize>]) -> Vec<u64> {
    let order = topological(adj);
    let mut sg = vec![0u64; adj.len()];
    for &v in order.iter().rev() {
        sg[v] = impartial::mex(adj[v].iter().map(|&w| sg[w]));
    }
    sg
}

/// Nodes in an order where every edge points forward.
pub fn topological(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for e in adj.iter().flatten() {
        indeg[*e] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    assert_eq!(order.len(), n, "graph is not acyclic");
    order
}

/// Random acyclic graph on `n` nodes with shuffled labels.
///
/// Edges go from higher to lower rank; each pair is an edge with
/// probability `density`. Multi-edges are not generated.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, density: f64) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut adj = vec![Vec::new(); n];
    for hi in 0..n {
        for lo in 0..hi {
            if rng.gen_bool(density) {
                adj[perm[hi]].push(perm[lo]);
            }
        }
    }
    for list in &mut adj {
        list.shuffle(rng);
    }
    adj
}

/// Random acyclic game whose start is the highest-ranked node, so most of
/// the graph is reachable.
pub fn random_game<R: Rng>(rng: &mut R, max_nodes: usize) -> ExplicitGraph {
    let n = rng.gen_range(1..=max_nodes);
    let density = rng.gen_range(0.05..0.5);
    let adj = random_dag(rng, n, density);
    let order = topological(&adj);
    ExplicitGraph::from_adjacency(adj, order[0]).unwrap()
}

/// Conjunctive product over node pairs `(u, v) ↦ u·n2 + v`: both components
/// move; a pair with a terminal component has no moves.
pub fn conjunctive_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n2 = b.len();
    let mut adj = vec![Vec::new(); a.len() * n2];
    for u in 0..a.len() {
        for v in 0..n2 {
            for &u2 in &a[u] {
                for &v2 in &b[v] {
                    adj[u * n2 + v].push(u2 * n2 + v2);
                }
            }
        }
    }
    adj
}

/// Disjunctive product: exactly one component moves.
pub fn disjunctive_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n2 = b.len();
    let mut adj = vec![Vec::new(); a.len() * n2];
    for u in 0..a.len() {
        for v in 0..n2 {
            for &u2 in &a[u] {
                adj[u * n2 + v].push(u2 * n2 + v);
            }
            for &v2 in &b[v] {
                adj[u * n2 + v].push(u * n2 + v2);
            }
        }
    }
    adj
}

/// All nonempty subsets of `0..n` as bitmasks.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = u64> {
    1..(1u64 << n)
}

/// Every vector in `[0, max]^n`, last coordinate fastest.
pub fn grid(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut z = vec![0u64; n];
    loop {
        out.push(z.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
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
