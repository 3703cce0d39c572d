//! Plain loopless multigraphs for the width solvers.

use serde::{Deserialize, Serialize};

use crate::planar::PlanarMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Self-loops are dropped: they never cross a vertex cut.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .inspect(|&(a, b)| assert!(a < n && b < n, "edge ({a}, {b}) out of range"))
            .collect();
        Self { n, edges }
    }

    pub fn from_map(map: &PlanarMap) -> Self {
        Self::new(map.vertex_count(), map.edges().iter().map(|&[a, b]| (a, b)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    /// Number of edges with exactly one endpoint in `side`.
    pub fn cut_size(&self, side: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| side[a] != side[b])
            .count()
    }

    /// Whether the vertices flagged in `side` induce a connected, non-empty subgraph.
    pub fn induces_connected(&self, side: &[bool]) -> bool {
        let Some(start) = side.iter().position(|&x| x) else {
            return false;
        };
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if side[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == side.iter().filter(|&&x| x).count()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.induces_connected(&vec![true; self.n])
    }

    /// Edge indices that are bridges.
    pub fn bridges(&self) -> Vec<usize> {
        let (bridges, _) = self.low_links();
        bridges
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        let (_, cuts) = self.low_links();
        cuts
    }

    /// Connected, at least two vertices, no cut vertex and no bridge.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 2
            && self.is_connected()
            && self.cut_vertices().is_empty()
            && self.bridges().is_empty()
    }

    fn low_links(&self) -> (Vec<usize>, Vec<usize>) {
        // Iterative Tarjan over edge ids, so parallel edges are never bridges.
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push((b, e));
            inc[b].push((a, e));
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut bridges = Vec::new();
        let mut is_cut = vec![false; self.n];
        let mut timer = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent edge, next incidence index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
                if *i < inc[v].len() {
                    let (w, e) = inc[v][*i];
                    *i += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] > disc[u] {
                            bridges.push(pe);
                        }
                        if u != root && low[v] >= disc[u] {
                            is_cut[u] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        let cuts = (0..self.n).filter(|&v| is_cut[v]).collect();
        (bridges, cuts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_edges_are_bridges() {
        let g = Graph::new(3, [(0, 1), (1, 2)]);
        assert_eq!(g.bridges(), vec![0, 1]);
        assert_eq!(g.cut_vertices(), vec![1]);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = Graph::new(2, [(0, 1), (0, 1)]);
        assert!(g.bridges().is_empty());
        assert!(g.is_biconnected());
    }

    #[test]
    fn bowtie_is_bridgeless_with_cut_vertex() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert!(g.bridges().is_empty());
        assert_eq!(g.cut_vertices(), vec![2]);
        assert!(!g.is_biconnected());
    }
}
