//! Carving decompositions: unrooted binary trees whose leaves are the graph
//! vertices. Removing a tree edge splits the leaves in two; the graph edges
//! running between the two sides form that edge's middle set.

mod exact;
mod heuristic;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{exact_carving_width, exact_carving_width_with_cap, DEFAULT_EXACT_CAP};
pub use heuristic::{
    caterpillar, heuristic_bond_carving, heuristic_carving, spanning_tree_carving,
};

pub const CARVING_SCHEMA: &str = "knotwidth/carving/v1";

/// A carving decomposition stored as a parent array. Tree edge `i` joins node
/// `tree_edges()[i]` to its parent; its side is the set of vertices below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarvingDecomposition {
    parent: Vec<Option<usize>>,
    leaf_vertex: Vec<Option<usize>>,
    edge_child: Vec<usize>,
    below: Vec<Vec<bool>>,
    middle: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct CarvingRecord {
    schema: String,
    parent: Vec<Option<usize>>,
    leaf_vertex: Vec<Option<usize>>,
    middle_sizes: Vec<usize>,
}

impl CarvingDecomposition {
    pub fn new(
        g: &Graph,
        parent: Vec<Option<usize>>,
        leaf_vertex: Vec<Option<usize>>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        let nodes = parent.len();
        if leaf_vertex.len() != nodes {
            return bad("parent and leaf arrays differ in length".into());
        }
        let n = g.vertex_count();
        let mut leaf_of = vec![None; n];
        for (node, lv) in leaf_vertex.iter().enumerate() {
            if let Some(v) = *lv {
                if v >= n {
                    return bad(format!("leaf {node} maps to missing vertex {v}"));
                }
                if leaf_of[v].replace(node).is_some() {
                    return bad(format!("vertex {v} appears on two leaves"));
                }
            }
        }
        if let Some(v) = leaf_of.iter().position(Option::is_none) {
            return bad(format!("vertex {v} has no leaf"));
        }
        if parent.iter().filter(|p| p.is_none()).count() != 1 {
            return bad("tree needs exactly one root".into());
        }
        let mut degree = vec![0usize; nodes];
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= nodes || p == c {
                    return bad(format!("node {c} has invalid parent {p}"));
                }
                degree[c] += 1;
                degree[p] += 1;
            }
        }
        // Every node must reach the root; depth doubles as a topological order.
        let mut depth = vec![usize::MAX; nodes];
        for start in 0..nodes {
            let mut path = vec![];
            let mut x = start;
            while depth[x] == usize::MAX {
                if path.len() > nodes {
                    return bad("parent array has a cycle".into());
                }
                path.push(x);
                match parent[x] {
                    Some(p) => x = p,
                    None => {
                        depth[x] = 0;
                        path.pop();
                        break;
                    }
                }
            }
            let mut d = depth[x];
            while let Some(y) = path.pop() {
                d += 1;
                depth[y] = d;
            }
        }
        for node in 0..nodes {
            let want = match (leaf_vertex[node], nodes) {
                (Some(_), 1) => 0,
                (Some(_), _) => 1,
                (None, _) => 3,
            };
            if degree[node] != want {
                return bad(format!(
                    "node {node} has degree {}, expected {want}",
                    degree[node]
                ));
            }
        }

        let mut order: Vec<usize> = (0..nodes).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(depth[x]));
        let mut sub = vec![vec![false; n]; nodes];
        for &x in &order {
            if let Some(v) = leaf_vertex[x] {
                sub[x][v] = true;
            }
            if let Some(p) = parent[x] {
                let child = std::mem::take(&mut sub[x]);
                for (a, &b) in sub[p].iter_mut().zip(&child) {
                    *a |= b;
                }
                sub[x] = child;
            }
        }
        let edge_child: Vec<usize> = (0..nodes).filter(|&c| parent[c].is_some()).collect();
        let below: Vec<Vec<bool>> = edge_child.iter().map(|&c| sub[c].clone()).collect();
        let middle = below
            .iter()
            .map(|side| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(a, b))| side[a] != side[b])
                    .map(|(e, _)| e)
                    .collect()
            })
            .collect();
        Ok(Self {
            parent,
            leaf_vertex,
            edge_child,
            below,
            middle,
        })
    }

    /// Builds a decomposition from an unrooted tree given by its edge list.
    pub fn from_tree_edges(
        g: &Graph,
        edges: &[(usize, usize)],
        leaf_vertex: Vec<Option<usize>>,
    ) -> Result<Self> {
        let nodes = leaf_vertex.len();
        if edges.len() + 1 != nodes {
            return Err(Error::InvalidDecomposition(format!(
                "{} edges for {nodes} nodes",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in edges {
            if a >= nodes || b >= nodes {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a}, {b}) out of range"
                )));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let root = (0..nodes).find(|&x| leaf_vertex[x].is_some()).unwrap_or(0);
        let mut parent = vec![None; nodes];
        let mut seen = vec![false; nodes];
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidDecomposition(
                    "tree edges contain a cycle".into(),
                ));
            }
            for &y in &adj[x] {
                if !seen[y] {
                    parent[y] = Some(x);
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDecomposition(
                "tree edges are disconnected".into(),
            ));
        }
        Self::new(g, parent, leaf_vertex)
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_vertex.iter().flatten().count()
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn leaf_vertex(&self, node: usize) -> Option<usize> {
        self.leaf_vertex[node]
    }

    pub fn leaf_vertices(&self) -> &[Option<usize>] {
        &self.leaf_vertex
    }

    pub fn leaf_of(&self, v: usize) -> usize {
        self.leaf_vertex
            .iter()
            .position(|&x| x == Some(v))
            .expect("vertex has a leaf")
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.leaf_vertex[node].is_some()
    }

    pub fn tree_edge_count(&self) -> usize {
        self.edge_child.len()
    }

    /// `(child, parent)` for every tree edge.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.edge_child
            .iter()
            .map(|&c| (c, self.parent[c].unwrap()))
            .collect()
    }

    /// Tree edge joining `node` to its parent.
    pub fn edge_above(&self, node: usize) -> Option<usize> {
        self.edge_child.binary_search(&node).ok()
    }

    /// Tree neighbours of every node.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for (c, p) in self.tree_edges() {
            adj[c].push(p);
            adj[p].push(c);
        }
        adj
    }

    /// Graph vertices below tree edge `e`.
    pub fn side(&self, e: usize) -> &[bool] {
        &self.below[e]
    }

    /// Graph edge ids in the middle set of tree edge `e`.
    pub fn middle(&self, e: usize) -> &[usize] {
        &self.middle[e]
    }

    pub fn middle_sizes(&self) -> Vec<usize> {
        self.middle.iter().map(Vec::len).collect()
    }

    pub fn width(&self) -> usize {
        self.middle.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether both sides of every tree edge induce connected subgraphs.
    pub fn is_bond(&self, g: &Graph) -> bool {
        self.first_non_bond(g).is_none()
    }

    pub fn first_non_bond(&self, g: &Graph) -> Option<usize> {
        self.below.iter().position(|side| {
            let other: Vec<bool> = side.iter().map(|x| !x).collect();
            !g.induces_connected(side) || !g.induces_connected(&other)
        })
    }

    pub fn check_bond(&self, g: &Graph) -> Result<()> {
        match self.first_non_bond(g) {
            Some(tree_edge) => Err(Error::NotBond { tree_edge }),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        let rec = CarvingRecord {
            schema: CARVING_SCHEMA.into(),
            parent: self.parent.clone(),
            leaf_vertex: self.leaf_vertex.clone(),
            middle_sizes: self.middle_sizes(),
        };
        serde_json::to_string_pretty(&rec).expect("serializable")
    }

    pub fn from_json(text: &str, g: &Graph) -> Result<Self> {
        let rec: CarvingRecord = serde_json::from_str(text)?;
        if rec.schema != CARVING_SCHEMA {
            return Err(Error::Json(format!("unexpected schema {:?}", rec.schema)));
        }
        Self::new(g, rec.parent, rec.leaf_vertex)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph carving {\n");
        for node in 0..self.node_count() {
            match self.leaf_vertex[node] {
                Some(v) => writeln!(s, "  t{node} [shape=box,label=\"v{v}\"];"),
                None => writeln!(s, "  t{node} [shape=point];"),
            }
            .unwrap();
        }
        for (e, (c, p)) in self.tree_edges().into_iter().enumerate() {
            writeln!(s, "  t{c} -- t{p} [label=\"{}\"];", self.middle[e].len()).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Incremental construction of parent arrays.
#[derive(Default)]
pub(crate) struct TreeBuilder {
    parent: Vec<Option<usize>>,
    leaf_vertex: Vec<Option<usize>>,
}

impl TreeBuilder {
    pub fn leaf(&mut self, v: usize) -> usize {
        self.parent.push(None);
        self.leaf_vertex.push(Some(v));
        self.parent.len() - 1
    }

    pub fn internal(&mut self) -> usize {
        self.parent.push(None);
        self.leaf_vertex.push(None);
        self.parent.len() - 1
    }

    pub fn attach(&mut self, child: usize, parent: usize) {
        self.parent[child] = Some(parent);
    }

    pub fn finish(self, g: &Graph) -> Result<CarvingDecomposition> {
        CarvingDecomposition::new(g, self.parent, self.leaf_vertex)
    }
}

/// Tree-width interval implied by a carving width on a graph of maximum degree `d`:
/// `2/3 (tw + 1) <= cw <= d (tw + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthBounds {
    pub cw: usize,
    pub max_degree: usize,
    pub tw_lower: usize,
    pub tw_upper: usize,
}

pub fn tw_bounds_from_cw(cw: usize, d: usize) -> WidthBounds {
    let d = d.max(1);
    let tw_lower = cw.div_ceil(d).saturating_sub(1);
    let tw_upper = (3 * cw / 2).saturating_sub(1).max(tw_lower);
    WidthBounds {
        cw,
        max_degree: d,
        tw_lower,
        tw_upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn two_vertex_graph_has_one_cut() {
        let g = Graph::new(2, [(0, 1), (0, 1), (0, 1)]);
        let d = CarvingDecomposition::new(&g, vec![None, Some(0)], vec![Some(0), Some(1)]).unwrap();
        assert_eq!(d.tree_edge_count(), 1);
        assert_eq!(d.width(), 3);
        assert!(d.is_bond(&g));
    }

    #[test]
    fn c4_caterpillar_and_opposite_split() {
        let g = cycle(4);
        let cat = caterpillar(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cat.width(), 2);
        assert!(cat.is_bond(&g));
        // Internal nodes 4 and 5; node 4 holds the opposite vertices 0 and 2.
        let parent = vec![Some(4), Some(5), Some(4), Some(5), Some(5), None];
        let leaves = vec![Some(0), Some(1), Some(2), Some(3), None, None];
        let split = CarvingDecomposition::new(&g, parent, leaves).unwrap();
        assert_eq!(split.width(), 4);
        assert!(!split.is_bond(&g));
        assert!(matches!(split.check_bond(&g), Err(Error::NotBond { .. })));
    }

    #[test]
    fn rejects_malformed_trees() {
        let g = cycle(3);
        let two_roots = CarvingDecomposition::new(
            &g,
            vec![None, None, Some(0)],
            vec![Some(0), Some(1), Some(2)],
        );
        assert!(matches!(two_roots, Err(Error::InvalidDecomposition(_))));
        let degree_two = CarvingDecomposition::new(
            &g,
            vec![Some(3), Some(4), Some(4), Some(4), None],
            vec![Some(0), Some(1), Some(2), None, None],
        );
        assert!(matches!(degree_two, Err(Error::InvalidDecomposition(_))));
        let missing = CarvingDecomposition::new(&g, vec![None, Some(0)], vec![Some(0), Some(1)]);
        assert!(matches!(missing, Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(6);
        let d = caterpillar(&g, &[3, 4, 5, 0, 1, 2]).unwrap();
        let back = CarvingDecomposition::from_json(&d.to_json(), &g).unwrap();
        assert_eq!(back, d);
        assert!(d.to_dot().contains("label=\"2\""));
    }

    #[test]
    fn width_bounds() {
        let b = tw_bounds_from_cw(4, 4);
        assert_eq!((b.tw_lower, b.tw_upper), (0, 5));
        let b = tw_bounds_from_cw(6, 4);
        assert_eq!((b.tw_lower, b.tw_upper), (1, 8));
        let b = tw_bounds_from_cw(1, 1);
        assert_eq!((b.tw_lower, b.tw_upper), (0, 0));
    }
}
