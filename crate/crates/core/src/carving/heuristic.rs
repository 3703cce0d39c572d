//! Upper bounds from caterpillar carvings along greedy vertex orders.
//!
//! A caterpillar over the order `v1, ..., vn` has middle sets equal to the
//! prefix cuts `{v1..vk}` and the single-vertex stars. Orders grown so that
//! both the prefix and the remainder stay connected give bond decompositions
//! on 2-connected graphs.

use super::{CarvingDecomposition, TreeBuilder};
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_STARTS: usize = 32;

/// Caterpillar carving along `order`, which must list every vertex once.
pub fn caterpillar(g: &Graph, order: &[usize]) -> Result<CarvingDecomposition> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::InvalidDecomposition(
            "order is not a permutation of the vertices".into(),
        ));
    }
    let mut b = TreeBuilder::default();
    if n <= 2 {
        let leaves: Vec<usize> = order.iter().map(|&v| b.leaf(v)).collect();
        if n == 2 {
            b.attach(leaves[1], leaves[0]);
        }
        return b.finish(g);
    }
    let first = b.leaf(order[0]);
    let mut spine = b.internal();
    b.attach(first, spine);
    let second = b.leaf(order[1]);
    b.attach(second, spine);
    for &v in &order[2..n - 1] {
        let next = b.internal();
        b.attach(spine, next);
        let leaf = b.leaf(v);
        b.attach(leaf, next);
        spine = next;
    }
    let last = b.leaf(order[n - 1]);
    b.attach(spine, last);
    b.finish(g)
}

/// Carving that follows a DFS spanning tree: each vertex is joined to its
/// child subtrees one at a time. On trees its width is at most the maximum
/// degree. Disconnected graphs fall back to a caterpillar in DFS order.
pub fn spanning_tree_carving(g: &Graph) -> CarvingDecomposition {
    let n = g.vertex_count();
    let adj = g.neighbors();
    let mut tree_parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut pre = Vec::new();
    for r in 0..n {
        if tree_parent[r] != usize::MAX {
            continue;
        }
        tree_parent[r] = r;
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            pre.push(v);
            for &w in &adj[v] {
                if tree_parent[w] == usize::MAX {
                    tree_parent[w] = v;
                    children[v].push(w);
                    stack.push(w);
                }
            }
        }
    }
    if n <= 2 || pre.iter().filter(|&&v| tree_parent[v] == v).count() > 1 {
        return caterpillar(g, &pre).expect("DFS order is a permutation");
    }
    let root = pre[0];
    let mut b = TreeBuilder::default();
    let mut node = vec![usize::MAX; n];
    // Reverse preorder visits children before parents.
    for &v in pre.iter().rev() {
        let mut acc = if v == root { None } else { Some(b.leaf(v)) };
        for &c in &children[v] {
            acc = Some(match acc {
                None => node[c],
                Some(a) => {
                    let join = b.internal();
                    b.attach(a, join);
                    b.attach(node[c], join);
                    join
                }
            });
        }
        node[v] = acc.expect("root has a child");
    }
    let top = b.leaf(root);
    b.attach(node[root], top);
    b.finish(g).expect("well-formed tree")
}

/// Greedy vertex order from `start`: repeatedly add the frontier vertex that
/// minimizes the new prefix cut, avoiding vertices whose removal would
/// disconnect the remainder.
fn greedy_order(g: &Graph, adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut in_prefix = vec![false; n];
    let mut to_prefix = vec![0usize; n];
    let mut order = vec![start];
    in_prefix[start] = true;
    for &w in &adj[start] {
        to_prefix[w] += 1;
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    while order.len() < n {
        let rest: Vec<usize> = (0..n).filter(|&v| !in_prefix[v]).collect();
        let blocked = articulation_in(g, &in_prefix);
        let frontier: Vec<usize> = rest.iter().copied().filter(|&v| to_prefix[v] > 0).collect();
        let safe: Vec<usize> = frontier.iter().copied().filter(|&v| !blocked[v]).collect();
        let pool = if !safe.is_empty() {
            safe
        } else if !frontier.is_empty() {
            frontier
        } else {
            rest
        };
        let &v = pool
            .iter()
            .min_by_key(|&&v| {
                (
                    degree[v] as isize - 2 * to_prefix[v] as isize,
                    std::cmp::Reverse(to_prefix[v]),
                    v,
                )
            })
            .unwrap();
        in_prefix[v] = true;
        order.push(v);
        for &w in &adj[v] {
            to_prefix[w] += 1;
        }
    }
    order
}

/// Articulation points of the subgraph induced by the vertices not in `excluded`.
fn articulation_in(g: &Graph, excluded: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut keep = Vec::new();
    for v in 0..n {
        if !excluded[v] {
            index[v] = keep.len();
            keep.push(v);
        }
    }
    let sub = Graph::new(
        keep.len(),
        g.edges()
            .iter()
            .filter(|&&(a, b)| !excluded[a] && !excluded[b])
            .map(|&(a, b)| (index[a], index[b])),
    );
    let mut out = vec![false; n];
    for c in sub.cut_vertices() {
        out[keep[c]] = true;
    }
    out
}

fn starts(n: usize) -> Vec<usize> {
    if n <= MAX_STARTS {
        (0..n).collect()
    } else {
        (0..MAX_STARTS).map(|i| i * n / MAX_STARTS).collect()
    }
}

fn candidates(g: &Graph) -> Vec<CarvingDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let adj = g.neighbors();
    let mut out = vec![caterpillar(g, &(0..n).collect::<Vec<_>>()).expect("identity order")];
    for s in starts(n) {
        out.push(caterpillar(g, &greedy_order(g, &adj, s)).expect("greedy order is a permutation"));
    }
    out
}

/// Best of several caterpillars and a spanning-tree carving. Deterministic;
/// among equal widths, bond decompositions and earlier candidates win.
pub fn heuristic_carving(g: &Graph) -> CarvingDecomposition {
    let mut all = candidates(g);
    if g.vertex_count() > 0 {
        all.push(spanning_tree_carving(g));
    }
    let mut best: Option<(usize, bool, CarvingDecomposition)> = None;
    for d in all {
        let key = (d.width(), !d.is_bond(g));
        if best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
            best = Some((key.0, key.1, d));
        }
    }
    best.map(|b| b.2)
        .unwrap_or_else(|| TreeBuilder::default().finish(g).expect("empty tree"))
}

/// Narrowest bond caterpillar found, for bridgeless graphs.
pub fn heuristic_bond_carving(g: &Graph) -> Result<CarvingDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.bridges().is_empty() {
        return Err(Error::HasBridge);
    }
    if g.vertex_count() >= 3 && !g.cut_vertices().is_empty() {
        return Err(Error::NoBondDecomposition);
    }
    candidates(g)
        .into_iter()
        .filter(|d| d.is_bond(g))
        .min_by_key(CarvingDecomposition::width)
        .ok_or(Error::NoBondDecomposition)
}
