//! Fixed-order page minimization parameterized by vertex cover size.
//!
//! Fix a minimum vertex cover C (|C| = τ). If the page budget k is at least
//! τ, an embedding always exists: give each cover vertex its own page and put
//! every edge on the page of its rightmost-in-C endpoint ([`trivial_cover_embedding`]).
//!
//! Otherwise the solver branches over the non-crossing page assignments of
//! the C–C edges ([`cover_assignments`]; there are fewer than τ^(τ²)), and
//! for each runs a left-to-right sweep over the non-cover vertices
//! u_1 ≺ u_2 ≺ …. The sweep state for a partial assignment is a *visibility
//! matrix* per vertex of interest: a k×τ bit matrix whose (p, b) entry says
//! whether an edge from that vertex to cover vertex c_b could still be drawn
//! on page p without crossing anything assigned so far. Matrices are kept
//! for the sweep vertex itself and for every non-cover vertex that sits
//! immediately to the right of a cover vertex (at most τ of them) — exactly
//! the positions where the sweep matrix cannot be advanced from its
//! predecessor alone.
//!
//! Partial assignments with equal matrix tuples are interchangeable: any
//! completion of one is a completion of the other. So the sweep stores each
//! tuple once, with one witness (a backpointer to the parent record plus the
//! pages chosen for the edges of the vertex just passed), giving at most
//! 2^(τ³+τ²) records per step and total time linear in n for fixed τ and k.

use std::collections::HashSet;

use crate::cover::{is_vertex_cover, minimum_vertex_cover};
use crate::graph::{Graph, LinearOrder, PageAssignment};
use crate::oracle::interleave;

/// Every edge gets the page of its cover endpoint; for C–C edges, the later
/// one in spine order. Page-i edges all share cover vertex c_i, so no page
/// ever has a crossing, under any spine order. Uses |cover| pages.
///
/// Returns `None` if `cover` is not actually a vertex cover.
pub fn trivial_cover_embedding(
    g: &Graph,
    order: &LinearOrder,
    cover: &[usize],
) -> Option<PageAssignment> {
    if !is_vertex_cover(g, cover) {
        return None;
    }
    let mut by_pos: Vec<usize> = cover.to_vec();
    by_pos.sort_unstable_by_key(|&c| order.position(c));
    let mut page_of = vec![0usize; g.n()];
    for (i, &c) in by_pos.iter().enumerate() {
        page_of[c] = i + 1;
    }
    let assignment = PageAssignment::new(
        cover.len(),
        g.edges().iter().map(|&(u, v)| ((u, v), page_of[u].max(page_of[v]))),
    );
    debug_assert!(crate::oracle::validate(
        g,
        &crate::graph::BookEmbedding::new(order.clone(), assignment.clone())
    )
    .unwrap()
    .ok);
    Some(assignment)
}

/// Lexicographic backtracking enumerator of the non-crossing page assignments
/// of the cover-cover edges. Yields raw page digits (0-based), one per C–C
/// edge in sorted edge order; [`cover_assignments`] wraps this for public use.
struct RawCoverAssignments {
    /// spine chords of the C–C edges, in yield order
    chords: Vec<(usize, usize)>,
    k: usize,
    digits: Vec<u8>,
    started: bool,
    done: bool,
}

impl RawCoverAssignments {
    fn conflicts(&self, j: usize, p: u8) -> bool {
        self.digits[..j]
            .iter()
            .enumerate()
            .any(|(i, &q)| q == p && interleave(self.chords[i], self.chords[j]))
    }

    /// Extends `digits` to full length, each new digit the smallest
    /// non-crossing page, backtracking where none fits.
    fn descend(&mut self) -> bool {
        'fill: while self.digits.len() < self.chords.len() {
            let j = self.digits.len();
            for p in 0..self.k as u8 {
                if !self.conflicts(j, p) {
                    self.digits.push(p);
                    continue 'fill;
                }
            }
            if !self.bump() {
                return false;
            }
        }
        true
    }

    /// Advances the deepest digit to its next non-crossing value, popping
    /// exhausted digits.
    fn bump(&mut self) -> bool {
        while let Some(p) = self.digits.pop() {
            let j = self.digits.len();
            for q in p + 1..self.k as u8 {
                if !self.conflicts(j, q) {
                    self.digits.push(q);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for RawCoverAssignments {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.bump() && self.descend()
        } else {
            self.started = true;
            self.descend()
        };
        if ok {
            Some(self.digits.clone())
        } else {
            self.done = true;
            None
        }
    }
}

fn raw_cover_assignments(ctx: &CoverContext) -> RawCoverAssignments {
    RawCoverAssignments {
        chords: ctx
            .cc
            .iter()
            .map(|&(a, b)| (ctx.cpos[a as usize], ctx.cpos[b as usize]))
            .collect(),
        k: ctx.k,
        digits: Vec::new(),
        started: false,
        done: false,
    }
}

/// Streams every non-crossing page assignment of the edges with both
/// endpoints in `cover`, in lexicographic page order over the sorted C–C
/// edge list. Panics if `cover` is not a vertex cover.
pub fn cover_assignments(
    g: &Graph,
    order: &LinearOrder,
    cover: &[usize],
    k: usize,
) -> impl Iterator<Item = PageAssignment> {
    let ctx = CoverContext::new(g, order, cover, k);
    let cc_ids: Vec<(usize, usize)> = ctx
        .cc
        .iter()
        .map(|&(a, b)| (ctx.cid[a as usize], ctx.cid[b as usize]))
        .collect();
    raw_cover_assignments(&ctx).map(move |digits| {
        PageAssignment::new(
            k,
            cc_ids
                .iter()
                .zip(&digits)
                .map(|(&(u, v), &p)| ((u, v), p as usize + 1)),
        )
    })
}

/// Sweep-side view of a `(graph, order, cover)` triple: cover vertices
/// c_1 ≺ … ≺ c_τ, non-cover vertices u_1 ≺ … (plus a trailing degree-0
/// dummy, so the final sweep state always exists), and the u-indices that
/// sit immediately after a cover vertex.
pub struct CoverContext {
    k: usize,
    tau: usize,
    /// positions of c_1..c_τ, ascending
    cpos: Vec<usize>,
    /// original vertex ids of c_1..c_τ
    cid: Vec<usize>,
    /// positions of u_1.. (the dummy last, one past the spine)
    upos: Vec<usize>,
    /// original ids of u_1.. (`usize::MAX` for the dummy)
    uid: Vec<usize>,
    /// cover indices (0-based) of each u's neighbors, ascending
    unbrs: Vec<Vec<u8>>,
    /// C–C edges as cover index pairs (a < b), sorted
    cc: Vec<(u8, u8)>,
    /// u-indices immediately right of a cover vertex, ascending
    x: Vec<usize>,
}

impl CoverContext {
    pub fn new(g: &Graph, order: &LinearOrder, cover: &[usize], k: usize) -> Self {
        let n = g.n();
        assert_eq!(order.len(), n, "order must cover the graph");
        assert!(is_vertex_cover(g, cover), "cover must be a vertex cover");
        let tau = cover.len();
        assert!(tau <= 64, "cover sizes beyond 64 are far outside this solver's reach");
        let mut in_cover = vec![false; n];
        for &c in cover {
            in_cover[c] = true;
        }
        let mut cid: Vec<usize> = cover.to_vec();
        cid.sort_unstable_by_key(|&c| order.position(c));
        let cpos: Vec<usize> = cid.iter().map(|&c| order.position(c)).collect();
        let mut cover_index = vec![u8::MAX; n];
        for (b, &c) in cid.iter().enumerate() {
            cover_index[c] = b as u8;
        }
        let mut uid: Vec<usize> = (0..n).filter(|&v| !in_cover[v]).collect();
        uid.sort_unstable_by_key(|&v| order.position(v));
        let mut upos: Vec<usize> = uid.iter().map(|&v| order.position(v)).collect();
        uid.push(usize::MAX); // dummy, degree 0
        upos.push(n);
        let unbrs: Vec<Vec<u8>> = uid
            .iter()
            .map(|&v| {
                if v == usize::MAX {
                    return Vec::new();
                }
                let mut nb: Vec<u8> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| {
                        assert!(in_cover[w], "a non-cover vertex may only neighbor the cover");
                        cover_index[w]
                    })
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        let mut cc: Vec<(u8, u8)> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| in_cover[u] && in_cover[v])
            .map(|&(u, v)| {
                let (a, b) = (cover_index[u], cover_index[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        cc.sort_unstable();
        let mut pos_is_cover = vec![false; n];
        for &p in &cpos {
            pos_is_cover[p] = true;
        }
        let x: Vec<usize> = (0..uid.len())
            .filter(|&a| upos[a] >= 1 && upos[a] <= n && pos_is_cover[upos[a] - 1])
            .collect();
        debug_assert!(x.len() <= tau);
        CoverContext { k, tau, cpos, cid, upos, uid, unbrs, cc, x }
    }

    fn chord(&self, u_index: usize, b: usize) -> (usize, usize) {
        let (a, c) = (self.upos[u_index], self.cpos[b]);
        (a.min(c), a.max(c))
    }

    fn cc_chord(&self, e: usize) -> (usize, usize) {
        let (a, b) = self.cc[e];
        (self.cpos[a as usize], self.cpos[b as usize])
    }
}

/// One sweep record: the packed matrix tuple (the dedup key) plus its
/// witness — the parent record at the previous step and the page digits for
/// the edges of the vertex swept over.
struct Record {
    words: Box<[u64]>,
    parent: u32,
    beta: Vec<u8>,
}

fn get_bit(w: &[u64], i: usize) -> bool {
    w[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(w: &mut [u64], i: usize) {
    w[i / 64] |= 1 << (i % 64);
}

/// Clears, in the τ-bit row starting at `start`, every bit set in `mask`.
fn clear_row(w: &mut [u64], start: usize, tau: usize, mask: u64) {
    let (word, off) = (start / 64, start % 64);
    w[word] &= !(mask << off);
    if off > 0 && off + tau > 64 {
        w[word + 1] &= !(mask >> (64 - off));
    }
}

/// Copies the bit range of slot `src` onto slot `dst`.
fn copy_slot(w: &mut [u64], src: usize, dst: usize, bits: usize) {
    for i in 0..bits {
        if get_bit(w, src * bits + i) {
            set_bit(w, dst * bits + i);
        } else {
            w[(dst * bits + i) / 64] &= !(1u64 << ((dst * bits + i) % 64));
        }
    }
}

/// Runs the sweep for one C–C assignment `s` (0-based page digits per C–C
/// edge). Returns the per-step record lists when the final step is
/// nonempty — i.e. when some total assignment extends `s` — and `None`
/// otherwise.
fn dp_run(ctx: &CoverContext, s: &[u8]) -> Option<Vec<Vec<Record>>> {
    let (k, tau) = (ctx.k, ctx.tau);
    let nu = ctx.uid.len();
    let bits = k * tau;
    let slots = ctx.x.len() + 1;
    let words_len = (slots * bits).div_ceil(64);

    // slot j >= 1 holds the matrix of the j-th after-cover vertex; its
    // reference never changes. Slot 0 is the sweep vertex's matrix.
    let slot_ref = |slot: usize, sweep: usize| -> usize {
        if slot == 0 { sweep } else { ctx.x[slot - 1] }
    };

    // base: nothing assigned except s; compute each entry directly
    let mut base = vec![0u64; words_len].into_boxed_slice();
    for slot in 0..slots {
        let r = slot_ref(slot, 0);
        for p in 0..k {
            for b in 0..tau {
                let blocked = (0..ctx.cc.len()).any(|e| {
                    s[e] as usize == p && interleave(ctx.cc_chord(e), ctx.chord(r, b))
                });
                if !blocked {
                    set_bit(&mut base, slot * bits + p * tau + b);
                }
            }
        }
    }
    let mut steps: Vec<Vec<Record>> =
        vec![vec![Record { words: base, parent: u32::MAX, beta: Vec::new() }]];

    for t in 1..nu {
        let nb = &ctx.unbrs[t - 1];
        let d = nb.len();
        // where the new sweep matrix starts from: the predecessor's, unless
        // u_t follows a cover vertex, in which case its own stored slot
        let src_slot = ctx.x.iter().position(|&xx| xx == t).map_or(0, |j| j + 1);
        // block_mask[slot][j]: cover vertices whose visibility the j-th edge
        // of u_{t-1} cuts off for this slot's reference vertex, as a bitmask
        let block_mask: Vec<Vec<u64>> = (0..slots)
            .map(|slot| {
                let r = slot_ref(slot, t);
                (0..d)
                    .map(|j| {
                        let bc = ctx.chord(t - 1, nb[j] as usize);
                        (0..tau)
                            .filter(|&b| interleave(ctx.chord(r, b), bc))
                            .fold(0u64, |m, b| m | 1 << b)
                    })
                    .collect()
            })
            .collect();

        let prev = steps.last().unwrap();
        let mut next: Vec<Record> = Vec::new();
        let mut seen: HashSet<Box<[u64]>> = HashSet::new();
        for (pi, rec) in prev.iter().enumerate() {
            // a page is open for the j-th edge exactly when the sweep matrix
            // says its cover endpoint is still visible to u_{t-1} there
            let allowed: Vec<Vec<u8>> = (0..d)
                .map(|j| {
                    (0..k)
                        .filter(|&p| get_bit(&rec.words, p * tau + nb[j] as usize))
                        .map(|p| p as u8)
                        .collect()
                })
                .collect();
            if allowed.iter().any(Vec::is_empty) {
                continue;
            }
            let mut digit = vec![0usize; d];
            'betas: loop {
                let beta: Vec<u8> = (0..d).map(|j| allowed[j][digit[j]]).collect();
                let mut words = rec.words.clone();
                if src_slot != 0 {
                    copy_slot(&mut words, src_slot, 0, bits);
                }
                for (j, &p) in beta.iter().enumerate() {
                    for (slot, masks) in block_mask.iter().enumerate() {
                        let mask = masks[j];
                        if mask != 0 {
                            clear_row(&mut words, slot * bits + p as usize * tau, tau, mask);
                        }
                    }
                }
                if !seen.contains(&words) {
                    seen.insert(words.clone());
                    next.push(Record { words, parent: pi as u32, beta: beta.clone() });
                }
                // odometer, last edge fastest
                let mut j = d;
                loop {
                    if j == 0 {
                        break 'betas;
                    }
                    j -= 1;
                    digit[j] += 1;
                    if digit[j] < allowed[j].len() {
                        break;
                    }
                    digit[j] = 0;
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        let expo = tau * tau * tau + tau * tau;
        if expo < 64 {
            debug_assert!((next.len() as u64) <= 1u64 << expo);
        }
        steps.push(next);
    }
    Some(steps)
}

/// Reads the final witness chain back into a full assignment (including `s`).
fn reconstruct(ctx: &CoverContext, s: &[u8], steps: &[Vec<Record>]) -> PageAssignment {
    let mut pairs: Vec<((usize, usize), usize)> = ctx
        .cc
        .iter()
        .zip(s)
        .map(|(&(a, b), &p)| ((ctx.cid[a as usize], ctx.cid[b as usize]), p as usize + 1))
        .collect();
    let mut t = steps.len() - 1;
    let mut rec = &steps[t][0];
    while t > 0 {
        for (j, &b) in ctx.unbrs[t - 1].iter().enumerate() {
            pairs.push(((ctx.uid[t - 1], ctx.cid[b as usize]), rec.beta[j] as usize + 1));
        }
        rec = &steps[t - 1][rec.parent as usize];
        t -= 1;
    }
    PageAssignment::new(ctx.k, pairs)
}

/// Decides whether `(g, order)` fits in `k` pages, with a witness; exact.
/// Cover size τ is computed internally; budgets k ≥ τ take the
/// [`trivial_cover_embedding`] shortcut, smaller budgets run the sweep.
pub fn solve_fixed_order_vc(g: &Graph, order: &LinearOrder, k: usize) -> Option<PageAssignment> {
    let cover = minimum_vertex_cover(g);
    solve_with_cover(g, order, &cover, k)
}

fn solve_with_cover(
    g: &Graph,
    order: &LinearOrder,
    cover: &[usize],
    k: usize,
) -> Option<PageAssignment> {
    if cover.len() <= k {
        return Some(trivial_cover_embedding(g, order, cover).unwrap().with_k(k));
    }
    let ctx = CoverContext::new(g, order, cover, k);
    for s in raw_cover_assignments(&ctx) {
        if let Some(steps) = dp_run(&ctx, &s) {
            let assignment = reconstruct(&ctx, &s, &steps);
            debug_assert!(crate::oracle::validate(
                g,
                &crate::graph::BookEmbedding::new(order.clone(), assignment.clone())
            )
            .unwrap()
            .ok);
            return Some(assignment);
        }
    }
    None
}

/// Smallest feasible page count and a witness; equals the fixed-order page
/// number of `(g, order)`. At most τ budgets are tried, since k = τ always
/// succeeds.
pub fn min_pages_fixed_order_vc(g: &Graph, order: &LinearOrder) -> (usize, PageAssignment) {
    let cover = minimum_vertex_cover(g);
    for k in 0..=cover.len() {
        if let Some(a) = solve_with_cover(g, order, &cover, k) {
            return (k, a);
        }
    }
    unreachable!("a cover-sized budget always fits");
}

/// Naive visibility matrix for tests and inspection: entry `[p][b]` (0-based
/// page row, cover vertices ordered along the spine) says whether an edge
/// from `from` to the b-th cover vertex could be drawn on page p+1 without
/// crossing any same-page edge of `assigned`.
pub fn visibility_matrix(
    order: &LinearOrder,
    cover: &[usize],
    k: usize,
    from: usize,
    assigned: &PageAssignment,
) -> Vec<Vec<bool>> {
    let mut by_pos: Vec<usize> = cover.to_vec();
    by_pos.sort_unstable_by_key(|&c| order.position(c));
    let fp = order.position(from);
    let chords: Vec<((usize, usize), usize)> = assigned
        .iter()
        .map(|((u, v), p)| ((order.position(u), order.position(v)), p))
        .collect();
    (1..=k)
        .map(|p| {
            by_pos
                .iter()
                .map(|&c| {
                    let cand = (fp, order.position(c));
                    !chords
                        .iter()
                        .any(|&(ch, q)| q == p && interleave(cand, ch))
                })
                .collect()
        })
        .collect()
}
