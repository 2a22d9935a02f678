//! Instance builders shared by the benchmarks.

use impartial::moore::MoorePosition;
use impartial::vertex_cover::{reduce_vertex_cover, VcInstance};

/// Moore's NIM position from the vertex cover question "does the cycle on
/// `2c` vertices have a cover of size `c`?" (it does). For `c = 1` the
/// cycle degenerates to a single edge.
pub fn cycle_cover_position(c: usize) -> MoorePosition {
    let n = 2 * c;
    let edges: Vec<(usize, usize)> = if n == 2 {
        vec![(0, 1)]
    } else {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    };
    let inst = VcInstance::from_indices(n, &edges, c).expect("valid cycle instance");
    reduce_vertex_cover(&inst).expect("reduction").position()
}

/// Euclid position `(F_{n+1}, F_n)`, the slowest game for its size.
pub fn fibonacci_pair(n: u32) -> (u64, u64) {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 1..n {
        (a, b) = (a + b, a);
    }
    (a, b)
}
