//! Ground truth: crossing validator, conflict graphs, the bipartiteness fast
//! path for two pages, and exhaustive solvers.
//!
//! The exhaustive solvers are exact and deliberately simple; they referee the
//! parameterized algorithms. `fobt_oracle` backtracks over page choices for a
//! fixed spine order; `bt_oracle` additionally enumerates spine orders, so it
//! is only practical up to roughly 10 vertices.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{BookEmbedding, Graph, LinearOrder, PageAssignment};

/// Do two spine chords cross? Inputs are endpoint *positions*; each pair may
/// be in either order. True iff exactly one endpoint of one chord lies
/// strictly between the endpoints of the other; chords sharing an endpoint
/// never cross.
pub fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (al, ar) = (a.0.min(a.1), a.0.max(a.1));
    let (bl, br) = (b.0.min(b.1), b.0.max(b.1));
    (al < bl && bl < ar && ar < br) || (bl < al && al < br && br < ar)
}

/// Outcome of checking an embedding: either clean, or the list of same-page
/// crossing pairs. Each violation is reported as `((u, v), (w, x))` with
/// u ≺ w ≺ v ≺ x in the spine order; the list is sorted by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingReport {
    pub ok: bool,
    pub violations: Vec<((usize, usize), (usize, usize))>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("order has {have} positions but the graph has {need} vertices")]
    OrderMismatch { have: usize, need: usize },
    #[error("edge ({u}, {v}) has no page assigned")]
    MissingEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not in the graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) on page {page}, but k = {k}")]
    PageOutOfRange { u: usize, v: usize, page: usize, k: usize },
}

/// Exhaustive pairwise crossing check of an embedding against its graph.
pub fn validate(g: &Graph, emb: &BookEmbedding) -> Result<CrossingReport, ValidateError> {
    if emb.order.len() != g.n() {
        return Err(ValidateError::OrderMismatch { have: emb.order.len(), need: g.n() });
    }
    let k = emb.assignment.k();
    let mut pages = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let page = emb
            .assignment
            .page(u, v)
            .ok_or(ValidateError::MissingEdge { u, v })?;
        if page < 1 || page > k {
            return Err(ValidateError::PageOutOfRange { u, v, page, k });
        }
        pages.push(page);
    }
    if emb.assignment.len() != g.m() {
        // total on g.edges and still bigger: something extra is mapped
        let ((u, v), _) = emb
            .assignment
            .iter()
            .find(|&((u, v), _)| !g.has_edge(u, v))
            .expect("length mismatch implies an unknown edge");
        return Err(ValidateError::UnknownEdge { u, v });
    }

    // spine chord for edge i, as (left position, right position)
    let chord = |i: usize| {
        let (u, v) = g.edges()[i];
        let (a, b) = (emb.order.position(u), emb.order.position(v));
        (a.min(b), a.max(b))
    };
    // Sweep the spine once, keeping the open chords of each page ordered by
    // left endpoint. When a chord closes, every still-open chord of its page
    // that opened strictly inside it crosses it (it must close strictly
    // later, since chords closing at the same position share that vertex).
    // Each crossing pair is reported exactly once, at the earlier close.
    let by_pos = |e: usize| {
        let (u, v) = g.edges()[e];
        if emb.order.position(u) < emb.order.position(v) { (u, v) } else { (v, u) }
    };
    let mut open_at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut close_at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for i in 0..g.m() {
        let (l, r) = chord(i);
        open_at[l].push(i);
        close_at[r].push(i);
    }
    let mut active: std::collections::BTreeSet<(usize, usize, usize)> = std::collections::BTreeSet::new();
    let mut violations = Vec::new();
    for p in 0..g.n() {
        for &i in &close_at[p] {
            active.remove(&(pages[i], chord(i).0, i));
        }
        for &i in &close_at[p] {
            let (l, _) = chord(i);
            for &(_, _, j) in active.range((pages[i], l + 1, 0)..(pages[i] + 1, 0, 0)) {
                debug_assert!(interleave(chord(i), chord(j)));
                violations.push(((chord(i), chord(j)), (by_pos(i), by_pos(j))));
            }
        }
        for &i in &open_at[p] {
            active.insert((pages[i], chord(i).0, i));
        }
    }
    violations.sort_unstable();
    let violations: Vec<_> = violations.into_iter().map(|(_, pair)| pair).collect();
    Ok(CrossingReport { ok: violations.is_empty(), violations })
}

/// One node per edge of the input graph; two nodes adjacent iff the edges
/// interleave under the order.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    /// Node labels: the input graph's edges, in `Graph::edges` order.
    pub nodes: Vec<(usize, usize)>,
    /// Adjacency lists of node indices, sorted.
    pub adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn conflict_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Proper 2-coloring (colors 0/1) if one exists. BFS per component,
    /// lowest-index node first, root color 0: deterministic.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.nodes.len();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }
}

/// Builds the conflict graph of `(g, order)`.
pub fn conflict_graph(g: &Graph, order: &LinearOrder) -> ConflictGraph {
    let m = g.m();
    let chord: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (order.position(u), order.position(v)))
        .collect();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if interleave(chord[i], chord[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    ConflictGraph { nodes: g.edges().to_vec(), adj }
}

/// Two-page fast path: an order admits a 2-page assignment iff its conflict
/// graph is bipartite, and the 2-coloring is the assignment. Returns an
/// assignment using as few pages as the coloring needs (0 for an edgeless
/// graph, 1 when nothing conflicts), or `None` when the conflict graph is
/// odd-cycle-bound.
pub fn two_page_fixed_order(g: &Graph, order: &LinearOrder) -> Option<PageAssignment> {
    let cg = conflict_graph(g, order);
    let color = cg.two_coloring()?;
    let mut assignment = PageAssignment::empty(0);
    for (i, &(u, v)) in cg.nodes.iter().enumerate() {
        assignment.insert(u, v, color[i] as usize + 1);
    }
    let used = assignment.pages_used();
    Some(assignment.with_k(used))
}

/// Exact fixed-order solver by backtracking: edges are processed sorted by
/// (left endpoint position, span), pages tried in increasing index, and the
/// first edge that conflicts with anything is pinned to page 1 (pages are
/// relabel-symmetric, so this loses no solutions). Conflict-free edges go
/// straight to page 1.
///
/// Returns an assignment with the requested `k` on success. `k = 0` succeeds
/// exactly for edgeless graphs.
pub fn fobt_oracle(g: &Graph, order: &LinearOrder, k: usize) -> Option<PageAssignment> {
    assert_eq!(order.len(), g.n(), "order must cover the graph");
    let m = g.m();
    if m == 0 {
        return Some(PageAssignment::empty(k));
    }
    if k == 0 {
        return None;
    }
    let chord: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (order.position(u), order.position(v));
            (a.min(b), a.max(b))
        })
        .collect();
    let mut seq: Vec<usize> = (0..m).collect();
    seq.sort_unstable_by_key(|&i| chord[i]);
    let conflicted: Vec<bool> = (0..m)
        .map(|i| (0..m).any(|j| j != i && interleave(chord[i], chord[j])))
        .collect();
    let search: Vec<usize> = seq.iter().copied().filter(|&i| conflicted[i]).collect();

    let mut page = vec![0usize; m];
    for i in 0..m {
        if !conflicted[i] {
            page[i] = 1;
        }
    }

    fn place(
        t: usize,
        search: &[usize],
        chord: &[(usize, usize)],
        page: &mut [usize],
        k: usize,
    ) -> bool {
        let Some(&e) = search.get(t) else { return true };
        let kmax = if t == 0 { 1 } else { k };
        'pages: for p in 1..=kmax {
            for &f in &search[..t] {
                if page[f] == p && interleave(chord[e], chord[f]) {
                    continue 'pages;
                }
            }
            page[e] = p;
            if place(t + 1, search, chord, page, k) {
                return true;
            }
            page[e] = 0;
        }
        false
    }

    if place(0, &search, &chord, &mut page, k) {
        Some(PageAssignment::new(k, g.edges().iter().copied().zip(page)))
    } else {
        None
    }
}

/// Smallest k for which `fobt_oracle` succeeds, with a witness.
pub fn min_pages_fixed_order_oracle(g: &Graph, order: &LinearOrder) -> (usize, PageAssignment) {
    for k in 0..=g.m() {
        if let Some(a) = fobt_oracle(g, order, k) {
            return (k, a);
        }
    }
    unreachable!("every edge on its own page always works")
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographically `rank`-th permutation of `items`.
fn nth_permutation(items: &[usize], mut rank: u64) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    let mut f = factorial(pool.len());
    while !pool.is_empty() {
        f /= pool.len() as u64;
        out.push(pool.remove((rank / f) as usize));
        rank %= f;
    }
    out
}

/// Exact free-order solver: enumerates spine orders and runs [`fobt_oracle`]
/// on each. Crossing structure is invariant under rotating the spine (chords
/// on a circle) and under reversal, so vertex 0 is fixed at the first
/// position and of each tail and its reverse only one is tried. Orders are
/// scanned in lexicographic rank order, in parallel, and the lowest-rank
/// success wins, so the result is deterministic.
///
/// Practical up to n ≈ 10; the order count is (n−1)!/2.
pub fn bt_oracle(g: &Graph, k: usize) -> Option<BookEmbedding> {
    let n = g.n();
    assert!(n <= 20, "bt_oracle enumerates (n-1)! orders; n = {n} is out of reach");
    if n == 0 {
        return Some(BookEmbedding::new(LinearOrder::identity(0), PageAssignment::empty(k)));
    }
    let rest: Vec<usize> = (1..n).collect();
    (0..factorial(rest.len())).into_par_iter().find_map_first(|rank| {
        let tail = nth_permutation(&rest, rank);
        if n >= 3 && tail[0] > tail[n - 2] {
            return None; // the reversed tail was (or will be) tried instead
        }
        let mut perm = Vec::with_capacity(n);
        perm.push(0);
        perm.extend(tail);
        let order = LinearOrder::new(perm).unwrap();
        fobt_oracle(g, &order, k).map(|assignment| BookEmbedding::new(order, assignment))
    })
}

/// Smallest k for which `bt_oracle` succeeds, with a witness.
pub fn min_pages_bt_oracle(g: &Graph) -> (usize, BookEmbedding) {
    for k in 0..=g.m() {
        if let Some(emb) = bt_oracle(g, k) {
            return (k, emb);
        }
    }
    unreachable!("every edge on its own page always works")
}
