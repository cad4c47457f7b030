//! Instance generators: named families and seeded random graphs/orders.
//!
//! Randomness comes from a small splitmix64 generator so that seeds produce
//! the same instances on every platform and toolchain.

use crate::graph::{Graph, LinearOrder};

/// splitmix64: tiny, seedable, stable across platforms. Good enough for test
/// instance generation; not for cryptography.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (`bound > 0`), via rejection to avoid modulo bias.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// Complete bipartite graph K_{a,b}; the `a`-side is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).unwrap()
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle 0-1-...-(n-1)-0. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]);
    Graph::new(n, edges).unwrap()
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::new(n, (1..n).map(|v| (0, v))).unwrap()
}

/// G(n, p): each pair is an edge independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random graph with exactly `m` edges, sampled uniformly without replacement.
pub fn random_graph_m(n: usize, m: usize, seed: u64) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(m <= all.len(), "asked for {m} edges, only {} possible", all.len());
    let mut rng = SplitMix64::new(seed);
    // partial Fisher-Yates: the first m slots end up a uniform sample
    for i in 0..m {
        let j = i + rng.next_below((all.len() - i) as u64) as usize;
        all.swap(i, j);
    }
    all.truncate(m);
    Graph::new(n, all).unwrap()
}

/// A uniformly random spine order on `n` vertices.
pub fn shuffled_order(n: usize, seed: u64) -> LinearOrder {
    let mut rng = SplitMix64::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_below((i + 1) as u64) as usize;
        perm.swap(i, j);
    }
    LinearOrder::new(perm).unwrap()
}

/// A caterpillar: a spine path of `spine` vertices, then leaves attached
/// round-robin until the total is `n`. Vertex `i < spine` is the i-th spine
/// vertex.
pub fn caterpillar(spine: usize, n: usize) -> Graph {
    assert!(spine >= 1 && n >= spine);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    for leaf in spine..n {
        edges.push(((leaf - spine) % spine, leaf));
    }
    Graph::new(n, edges).unwrap()
}
