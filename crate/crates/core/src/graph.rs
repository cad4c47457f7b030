//! Graphs, spine orders, page assignments and guard sets.
//!
//! Everything downstream works on dense 0-based vertex indices. A book
//! embedding is a [`LinearOrder`] (the spine) together with a
//! [`PageAssignment`] mapping every edge to a page in `1..=k`.

use std::collections::BTreeMap;

use thiserror::Error;

/// Errors raised when constructing the basic types with inconsistent data.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("order has length {0}, expected {1}")]
    OrderLength(usize, usize),
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to `(min, max)`
    /// and sorted; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// Empty graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, []).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Induced subgraph on `keep` (input indices), relabeled to `0..keep.len()`
    /// in the given sequence order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect::<Vec<_>>();
        Graph::new(keep.len(), edges).unwrap()
    }
}

/// A linear order of the vertices (the spine), stored both as the sequence
/// `perm` (position -> vertex) and its inverse `pos` (vertex -> position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self, GraphError> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(GraphError::NotAPermutation(n));
            }
            pos[v] = i;
        }
        Ok(LinearOrder { perm, pos })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder::new((0..n).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Vertex at position `i`.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Checks that the order covers exactly the vertex set of `g`.
    pub fn covers(&self, g: &Graph) -> Result<(), GraphError> {
        if self.len() != g.n() {
            return Err(GraphError::OrderLength(self.len(), g.n()));
        }
        Ok(())
    }
}

/// An assignment of edges to pages `1..=k`.
///
/// The map is total over the edge set of the graph it was built for; page
/// indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PageAssignment {
    k: usize,
    pages: BTreeMap<(usize, usize), usize>,
}

impl PageAssignment {
    pub fn new(k: usize, pages: impl IntoIterator<Item = ((usize, usize), usize)>) -> Self {
        let pages = pages
            .into_iter()
            .map(|((u, v), p)| ((u.min(v), u.max(v)), p))
            .collect();
        PageAssignment { k, pages }
    }

    pub fn empty(k: usize) -> Self {
        PageAssignment { k, pages: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Reinterpret the same mapping against a different page budget.
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn page(&self, u: usize, v: usize) -> Option<usize> {
        self.pages.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn insert(&mut self, u: usize, v: usize, page: usize) {
        self.pages.insert((u.min(v), u.max(v)), page);
    }

    pub fn len(&self) -> usize {
        self.pages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pages.is_empty()
    }

    /// Iterates `((u, v), page)` in sorted edge order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.pages.iter().map(|(&e, &p)| (e, p))
    }

    /// Highest page index actually used (0 for an empty assignment).
    pub fn pages_used(&self) -> usize {
        self.pages.values().copied().max().unwrap_or(0)
    }
}

/// A spine order plus a page assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookEmbedding {
    pub order: LinearOrder,
    pub assignment: PageAssignment,
}

impl BookEmbedding {
    pub fn new(order: LinearOrder, assignment: PageAssignment) -> Self {
        BookEmbedding { order, assignment }
    }
}

/// Guard sets of a `(graph, order)` pair.
///
/// The guard set at position `i` holds the vertices left of position `i`
/// adjacent to the vertex at `i` or to something right of it, stored
/// nearest-first (descending position). The width of the pair is the largest
/// guard set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardProfile {
    guards: Vec<Vec<usize>>,
    pathwidth: usize,
}

impl GuardProfile {
    /// Guard set at position `i`, as vertex indices, nearest (largest
    /// position) first.
    pub fn guards_at(&self, i: usize) -> &[usize] {
        &self.guards[i]
    }

    pub fn pathwidth(&self) -> usize {
        self.pathwidth
    }

    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }
}

/// Computes the guard sets and the width of `(g, order)`.
///
/// A vertex at position `j` guards position `i` iff `j < i` and some neighbor
/// of it sits at a position `>= i`; equivalently `j < i <= maxright(j)` where
/// `maxright(j)` is the rightmost neighbor position. Guard sets are therefore
/// intervals per vertex, which keeps this linear in `n + m + output`.
pub fn guard_profile(g: &Graph, order: &LinearOrder) -> GuardProfile {
    let n = g.n();
    debug_assert_eq!(order.len(), n);
    // maxright by position; usize::MIN stand-in for "no neighbor" is position 0
    // with a flag instead.
    let mut maxright = vec![None::<usize>; n];
    for &(u, v) in g.edges() {
        let (pu, pv) = (order.position(u), order.position(v));
        let (l, r) = (pu.min(pv), pu.max(pv));
        maxright[l] = Some(maxright[l].map_or(r, |m| m.max(r)));
        maxright[r] = Some(maxright[r].map_or(r, |m| m.max(r)));
    }
    let mut guards = Vec::with_capacity(n);
    let mut pathwidth = 0;
    for i in 0..n {
        let mut gi: Vec<usize> = (0..i)
            .rev()
            .filter(|&j| maxright[j].is_some_and(|m| m >= i))
            .map(|j| order.vertex_at(j))
            .collect();
        gi.shrink_to_fit();
        pathwidth = pathwidth.max(gi.len());
        guards.push(gi);
    }
    GuardProfile { guards, pathwidth }
}
