//! Book thickness with a free vertex order, parameterized by vertex cover.
//!
//! Every vertex outside a cover C has all its neighbors inside C, so the
//! non-cover vertices fall into at most 2^|C| *types* by neighborhood. In a
//! k-page embedding, same-type vertices split further into at most k^|U|
//! *page-equivalence* classes by which page each of their edges uses. Any
//! three page-equivalent vertices put a K_{h,3} on a shared page, and
//! K_{2,3} needs two pages — so each of the three has at most one edge per
//! page, and a fresh same-type vertex can slide in right next to one of
//! them, copying its pages. Keeping 2·k^|C|+1 vertices per type therefore
//! preserves the answer exactly: solve the small *kernel* by exhaustive
//! search and lift the embedding back, reinserting the dropped vertices one
//! by one.
//!
//! Exhaustive kernel solving is honest about its limits: it enumerates
//! vertex orders, so kernels beyond ~10 vertices (say, cover size 3 with
//! budget 2) are out of reach on a desktop regardless of asymptotics.

use std::collections::BTreeMap;

use crate::cover::{minimum_vertex_cover, vertex_types};
use crate::fixed_order_vc::trivial_cover_embedding;
use crate::graph::{BookEmbedding, Graph, LinearOrder, PageAssignment};
use crate::oracle::bt_oracle;

/// A thresholded instance: the induced kernel, the surviving vertices in
/// input labels, and what was dropped from each oversized type.
pub struct KernelResult {
    /// induced subgraph on the kept vertices
    pub kernel: Graph,
    /// kernel vertex index -> input vertex index, ascending
    pub keep: Vec<usize>,
    /// per neighborhood type (sorted cover neighbors, input labels): the
    /// dropped vertices of that type, ascending
    pub removed: BTreeMap<Vec<usize>, Vec<usize>>,
    /// per-type size cap, 2·k^τ + 1
    pub threshold: usize,
    /// the cover the types were classified against, input labels
    pub cover: Vec<usize>,
}

fn kernel_threshold(k: usize, tau: usize) -> usize {
    let t = (k as u128)
        .saturating_pow(tau.min(u32::MAX as usize) as u32)
        .saturating_mul(2)
        .saturating_add(1);
    usize::try_from(t).unwrap_or(usize::MAX)
}

/// Caps every neighborhood type at 2·k^τ+1 vertices, keeping the
/// lowest-indexed ones. Cover vertices always survive.
pub fn build_kernel(g: &Graph, cover: &[usize], k: usize) -> KernelResult {
    assert!(k >= 1, "a page budget of zero admits no kernel shrinking");
    let classes = vertex_types(g, cover).expect("cover must cover every edge");
    let threshold = kernel_threshold(k, cover.len());
    let mut keep: Vec<usize> = cover.to_vec();
    let mut removed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ty, members) in classes {
        keep.extend(members.iter().take(threshold));
        if members.len() > threshold {
            removed.insert(ty, members[threshold..].to_vec());
        }
    }
    keep.sort_unstable();
    let kernel = g.induced(&keep);
    KernelResult { kernel, keep, removed, threshold, cover: cover.to_vec() }
}

/// Whether `u1` and `u2` put each edge toward their shared neighborhood
/// `type_u` on the same page. Both must actually have that neighborhood.
pub fn page_equivalent(emb: &BookEmbedding, u1: usize, u2: usize, type_u: &[usize]) -> bool {
    type_u.iter().all(|&w| {
        let p1 = emb.assignment.page(u1, w).expect("u1 must be of the stated type");
        let p2 = emb.assignment.page(u2, w).expect("u2 must be of the stated type");
        p1 == p2
    })
}

/// Exhaustive solve of a thresholded kernel. Refuses kernels too large to
/// enumerate rather than running forever.
pub fn solve_kernel(kernel: &Graph, k: usize) -> Option<BookEmbedding> {
    bt_oracle(kernel, k)
}

/// Reinserts the dropped vertices into a valid kernel embedding.
///
/// For each oversized type, some page signature is shared by at least three
/// kept vertices; the scan takes the first signature to reach three along
/// the spine and its leftmost holder `u1`. Every dropped vertex of the type
/// goes immediately right of `u1` (newest nearest) and copies `u1`'s pages,
/// which keeps its edges crossing-free alongside `u1`'s.
pub fn lift_embedding(g: &Graph, kr: &KernelResult, kemb: &BookEmbedding) -> BookEmbedding {
    let k = kemb.assignment.k();
    // translate the kernel embedding into input labels
    let mut order: Vec<usize> = kemb.order.perm().iter().map(|&x| kr.keep[x]).collect();
    let mut pairs: Vec<((usize, usize), usize)> = kemb
        .assignment
        .iter()
        .map(|((u, v), p)| ((kr.keep[u], kr.keep[v]), p))
        .collect();
    let mut assignment = PageAssignment::new(k, pairs.drain(..));
    let classes = vertex_types(g, &kr.cover).expect("lift needs the classifying cover");
    for (ty, dropped) in &kr.removed {
        let kept: Vec<usize> = classes[ty]
            .iter()
            .copied()
            .filter(|v| !dropped.contains(v))
            .collect();
        // first page signature to reach three holders along the spine, and
        // its leftmost holder
        let mut counts: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new(); // sig -> (count, leftmost member)
        let mut u1: Option<usize> = None;
        for &m in order.iter() {
            if !kept.contains(&m) {
                continue;
            }
            let sig: Vec<usize> = ty
                .iter()
                .map(|&w| assignment.page(m, w).expect("kept member edge"))
                .collect();
            let entry = counts.entry(sig).or_insert((0, m));
            entry.0 += 1;
            if entry.0 == 3 {
                u1 = Some(entry.1);
                break;
            }
        }
        let u1 = u1.expect("a thresholded type always holds a page-equivalent triple");
        let sig: Vec<usize> = ty
            .iter()
            .map(|&w| assignment.page(u1, w).unwrap())
            .collect();
        for &v in dropped {
            let at = order.iter().position(|&x| x == u1).unwrap();
            order.insert(at + 1, v);
            for (&w, &p) in ty.iter().zip(&sig) {
                assignment.insert(v, w, p);
            }
        }
    }
    let emb = BookEmbedding::new(
        LinearOrder::new(order).expect("lift keeps the order a permutation"),
        assignment,
    );
    debug_assert!(crate::oracle::validate(g, &emb).unwrap().ok);
    emb
}

/// Decides whether `g` fits in `k` pages on some vertex order, and produces
/// an embedding when it does.
///
/// Budgets at or above the cover size always fit: order the vertices
/// arbitrarily and give each cover vertex its own page. Below that, the
/// instance shrinks to its kernel, the kernel is solved exhaustively, and
/// the embedding is lifted back. Practical only while the kernel stays small
/// (cover size 2 with any budget, or 3 with budget 1 — beyond that the
/// exhaustive step explodes).
pub fn solve_bt(g: &Graph, k: usize) -> Option<BookEmbedding> {
    let cover = minimum_vertex_cover(g);
    let tau = cover.len();
    if k >= tau {
        let order = LinearOrder::identity(g.n());
        let assignment = trivial_cover_embedding(g, &order, &cover)
            .expect("a minimum cover always embeds trivially")
            .with_k(k);
        return Some(BookEmbedding::new(order, assignment));
    }
    if k == 0 {
        // tau >= 1 here, so there is an edge and it needs a page
        return None;
    }
    let kr = build_kernel(g, &cover, k);
    let kemb = solve_kernel(&kr.kernel, k)?;
    Some(lift_embedding(g, &kr, &kemb))
}

/// Book thickness with a witness, by binary search over the budget: the
/// cover size is always enough, and feasibility is monotone.
pub fn min_pages_bt(g: &Graph) -> (usize, BookEmbedding) {
    let tau = minimum_vertex_cover(g).len();
    let (mut lo, mut hi) = (0usize, tau);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if solve_bt(g, mid).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo, solve_bt(g, lo).expect("search ends on a feasible budget"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{complete, complete_bipartite, path, random_graph, star, SplitMix64};
    use crate::oracle::{min_pages_bt_oracle, validate};

    fn ok(g: &Graph, emb: &BookEmbedding) -> bool {
        validate(g, emb).unwrap().ok
    }

    /// Random graph with vertex cover at most 2: two cover vertices with
    /// random neighborhoods plus optionally their own edge.
    fn random_vc2(n: usize, seed: u64) -> Graph {
        let mut rng = SplitMix64::new(seed);
        let mut edges = Vec::new();
        if rng.next_below(2) == 1 {
            edges.push((0, 1));
        }
        for v in 2..n {
            if rng.next_below(3) > 0 {
                edges.push((0, v));
            }
            if rng.next_below(3) > 0 {
                edges.push((1, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn threshold_formula() {
        assert_eq!(kernel_threshold(1, 1), 3);
        assert_eq!(kernel_threshold(2, 2), 9);
        assert_eq!(kernel_threshold(2, 3), 17);
        assert_eq!(kernel_threshold(3, 3), 55);
    }

    #[test]
    fn small_classes_keep_everything() {
        let g = complete(5);
        let cover = minimum_vertex_cover(&g);
        let kr = build_kernel(&g, &cover, 3);
        assert_eq!(kr.kernel.n(), 5);
        assert_eq!(kr.kernel.m(), g.m());
        assert!(kr.removed.is_empty());
        assert_eq!(kr.keep, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn star_kernel_drops_two_leaves() {
        let g = star(6);
        let kr = build_kernel(&g, &[0], 1);
        assert_eq!(kr.threshold, 3);
        assert_eq!(kr.kernel.n(), 4);
        assert_eq!(kr.removed.len(), 1);
        assert_eq!(kr.removed[&vec![0]], vec![4, 5]);
        // kernel stays a star
        assert_eq!(kr.kernel.m(), 3);
        assert_eq!(kr.keep, vec![0, 1, 2, 3]);
    }

    #[test]
    fn wide_bipartite_kernel_untouched() {
        let g = complete_bipartite(2, 7);
        let kr = build_kernel(&g, &[0, 1], 2);
        assert_eq!(kr.threshold, 9);
        assert_eq!(kr.kernel.n(), 9);
        assert!(kr.removed.is_empty());
    }

    #[test]
    fn kernel_preserves_the_answer() {
        let mut tested = 0usize;
        for t in 0..120 {
            let n = 5 + (t % 5); // up to 9 vertices
            let g = random_vc2(n, 0x6e41 + t as u64);
            let cover = minimum_vertex_cover(&g);
            if cover.len() > 2 {
                continue;
            }
            for k in 1..=2usize {
                let kr = build_kernel(&g, &cover, k);
                let whole = bt_oracle(&g, k).is_some();
                let small = bt_oracle(&kr.kernel, k).is_some();
                assert_eq!(whole, small, "n={n} t={t} k={k}");
                tested += 1;
            }
        }
        assert!(tested > 20);
    }

    #[test]
    fn page_equivalence_basics() {
        let g = complete_bipartite(2, 3);
        let order = LinearOrder::identity(5);
        let assignment = trivial_cover_embedding(&g, &order, &[0, 1]).unwrap();
        let emb = BookEmbedding::new(order, assignment);
        for a in 2..5 {
            assert!(page_equivalent(&emb, a, a, &[0, 1]));
            for b in 2..5 {
                assert!(page_equivalent(&emb, a, b, &[0, 1]));
            }
        }
        // force two leaves of a star onto different pages
        let s = star(3);
        let semb = BookEmbedding::new(
            LinearOrder::identity(3),
            PageAssignment::new(2, [((0, 1), 1), ((0, 2), 2)]),
        );
        assert!(ok(&s, &semb));
        assert!(!page_equivalent(&semb, 1, 2, &[0]));
    }

    #[test]
    fn lift_star_back_to_full_size() {
        let g = star(6);
        let kr = build_kernel(&g, &[0], 1);
        let kemb = solve_kernel(&kr.kernel, 1).unwrap();
        let lifted = lift_embedding(&g, &kr, &kemb);
        assert!(ok(&g, &lifted));
        assert_eq!(lifted.order.len(), 6);
        assert_eq!(lifted.assignment.len(), 5);
        assert!(lifted.assignment.pages_used() <= 1);
    }

    #[test]
    fn lift_many_clones_of_many_types() {
        let mut lifts = 0usize;
        let mut run = |g: &Graph, k: usize| {
            let cover = minimum_vertex_cover(g);
            let kr = build_kernel(g, &cover, k);
            if kr.kernel.n() > 11 {
                return; // exhaustive solving stops being fun around here
            }
            let Some(kemb) = solve_kernel(&kr.kernel, k) else {
                if k < cover.len() {
                    assert!(solve_bt(g, k).is_none());
                }
                return;
            };
            let lifted = lift_embedding(g, &kr, &kemb);
            assert!(ok(g, &lifted));
            assert_eq!(lifted.assignment.len(), g.m());
            assert_eq!(lifted.assignment.k(), k);
            if !kr.removed.is_empty() {
                lifts += 1;
            }
        };
        // stars with spare leaves and a pool of isolated vertices: both the
        // leaf type and the empty type get thresholded
        for t in 0..5 {
            let n = 7 + t;
            let g = Graph::new(n + 4, (1..n).map(|v| (0, v))).unwrap();
            run(&g, 1);
        }
        // double stars, sometimes sharing up to two common leaves: trees or
        // outerplanar, so one page suffices while both leaf types overflow
        for (a, b, c) in [(4, 4, 0), (5, 3, 1), (6, 6, 2), (7, 2, 2), (4, 5, 1)] {
            let mut edges = vec![(0, 1)];
            let mut next = 2;
            for _ in 0..a {
                edges.push((0, next));
                next += 1;
            }
            for _ in 0..b {
                edges.push((1, next));
                next += 1;
            }
            for _ in 0..c {
                edges.push((0, next));
                edges.push((1, next));
                next += 1;
            }
            let g = Graph::new(next, edges).unwrap();
            run(&g, 1);
        }
        for t in 0..12 {
            let g = random_vc2(8 + (t % 6), 0x11f7 + t as u64);
            run(&g, 1);
        }
        assert!(lifts > 10, "only {lifts} nontrivial lifts exercised");
    }

    #[test]
    fn solve_bt_known_answers() {
        let g = complete_bipartite(2, 3);
        assert!(solve_bt(&g, 1).is_none());
        let emb = solve_bt(&g, 2).unwrap();
        assert!(ok(&g, &emb));

        let g = complete(5);
        let emb = solve_bt(&g, 3).unwrap();
        assert!(ok(&g, &emb));
        assert!(solve_bt(&g, 2).is_none());

        for tree in [path(7), star(7), crate::gen::caterpillar(3, 7)] {
            let emb = solve_bt(&tree, 1).unwrap();
            assert!(ok(&tree, &emb));
        }
    }

    #[test]
    fn solve_bt_monotone_and_matches_oracle() {
        for t in 0..60 {
            let n = 4 + (t % 4); // up to 7 vertices
            let g = random_graph(n, 0.5, 0x3317 + t as u64);
            let (want, _) = min_pages_bt_oracle(&g);
            let (got, emb) = min_pages_bt(&g);
            assert_eq!(got, want, "n={n} t={t}");
            assert!(ok(&g, &emb));
            let mut last = false;
            for k in 0..=minimum_vertex_cover(&g).len() {
                let now = solve_bt(&g, k).is_some();
                assert!(!last || now, "feasibility must be monotone");
                last = now;
            }
        }
    }

    #[test]
    fn min_pages_examples() {
        assert_eq!(min_pages_bt(&Graph::edgeless(4)).0, 0);
        assert_eq!(min_pages_bt(&complete_bipartite(2, 3)).0, 2);
        assert_eq!(min_pages_bt(&complete(5)).0, 3);
        assert_eq!(min_pages_bt(&path(6)).0, 1);
    }

    #[test]
    fn equivalent_triples_carry_one_edge_per_page() {
        // any 2·k^|U|+1 same-type vertices include three page equivalent
        // ones, and each of those uses every page at most once
        for t in 0..25 {
            let n = 7 + (t % 3);
            let g = random_vc2(n, 0x77aa + t as u64);
            let cover = minimum_vertex_cover(&g);
            if cover.is_empty() || cover.len() > 2 {
                continue;
            }
            let k = cover.len();
            let Some(emb) = bt_oracle(&g, k) else { continue };
            let classes = vertex_types(&g, &cover).unwrap();
            for (ty, members) in classes {
                if ty.is_empty() || members.len() < 2 * k.pow(ty.len() as u32) + 1 {
                    continue;
                }
                let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &m in &members {
                    let sig: Vec<usize> = ty
                        .iter()
                        .map(|&w| emb.assignment.page(m, w).unwrap())
                        .collect();
                    groups.entry(sig).or_default().push(m);
                }
                let triple = groups.values().find(|g| g.len() >= 3);
                assert!(triple.is_some(), "pigeonhole must yield a triple");
                for &m in triple.unwrap().iter().take(3) {
                    let mut per_page = vec![0usize; k + 1];
                    for &w in &ty {
                        per_page[emb.assignment.page(m, w).unwrap()] += 1;
                    }
                    assert!(per_page.iter().all(|&c| c <= 1));
                }
            }
        }
    }
}
