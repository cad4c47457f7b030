//! Minimum vertex cover and neighborhood types over a cover.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Exact minimum vertex cover by iterative deepening over the cover size,
/// branching on the lexicographically smallest uncovered edge and trying the
/// lower-index endpoint first. Deterministic; fine for the cover sizes this
/// crate targets (roughly ≤ 15).
pub fn minimum_vertex_cover(g: &Graph) -> Vec<usize> {
    for budget in 0..=g.n() {
        let mut chosen = Vec::with_capacity(budget);
        let mut in_cover = vec![false; g.n()];
        if branch(g, budget, &mut chosen, &mut in_cover) {
            chosen.sort_unstable();
            return chosen;
        }
    }
    Vec::new() // n = 0
}

fn branch(g: &Graph, budget: usize, chosen: &mut Vec<usize>, in_cover: &mut Vec<bool>) -> bool {
    let uncovered = g
        .edges()
        .iter()
        .find(|&&(u, v)| !in_cover[u] && !in_cover[v]);
    let Some(&(u, v)) = uncovered else { return true };
    if budget == 0 {
        return false;
    }
    for pick in [u, v] {
        chosen.push(pick);
        in_cover[pick] = true;
        if branch(g, budget - 1, chosen, in_cover) {
            return true;
        }
        in_cover[pick] = false;
        chosen.pop();
    }
    false
}

/// True iff `cover` hits every edge of `g`.
pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let mut marked = vec![false; g.n()];
    for &c in cover {
        marked[c] = true;
    }
    g.edges().iter().all(|&(u, v)| marked[u] || marked[v])
}

/// Partitions the non-cover vertices by their neighborhood, which for a valid
/// cover is always a subset of the cover. Keys are sorted neighborhood
/// subsets; values are the member vertices in ascending index order.
///
/// Returns `None` if `cover` is not actually a vertex cover.
pub fn vertex_types(g: &Graph, cover: &[usize]) -> Option<BTreeMap<Vec<usize>, Vec<usize>>> {
    if !is_vertex_cover(g, cover) {
        return None;
    }
    let mut in_cover = vec![false; g.n()];
    for &c in cover {
        in_cover[c] = true;
    }
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (v, &inside) in in_cover.iter().enumerate() {
        if inside {
            continue;
        }
        // neighbors are sorted already; all of them lie in the cover
        classes.entry(g.neighbors(v).to_vec()).or_default().push(v);
    }
    Some(classes)
}
