//! Exact carving width by dynamic programming over vertex subsets.
//!
//! Root the tree at the leaf of vertex 0. Every other tree node then carries
//! the set `S` of vertices below it, and
//! `f(S) = max(|δ(S)|, min over splits S = A ⊔ B of max(f(A), f(B)))`
//! with `f({v}) = deg(v)`. The answer is `f(V - {0})`. Subsets whose cut
//! already exceeds a heuristic upper bound are skipped, each popcount layer is
//! evaluated in parallel, and ties keep the first split in enumeration order,
//! so results do not depend on the thread count.

use rayon::prelude::*;

use super::heuristic::{heuristic_bond_carving, heuristic_carving};
use super::{CarvingDecomposition, TreeBuilder};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_EXACT_CAP: usize = 16;

const INF: u16 = u16::MAX;

pub fn exact_carving_width(g: &Graph, bond_only: bool) -> Result<(usize, CarvingDecomposition)> {
    exact_carving_width_with_cap(g, bond_only, DEFAULT_EXACT_CAP)
}

pub fn exact_carving_width_with_cap(
    g: &Graph,
    bond_only: bool,
    cap: usize,
) -> Result<(usize, CarvingDecomposition)> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n > cap || n > 26 {
        return Err(Error::ExactCapExceeded { vertices: n, cap });
    }
    if bond_only && !g.bridges().is_empty() {
        return Err(Error::HasBridge);
    }
    if n == 1 {
        let mut b = TreeBuilder::default();
        b.leaf(0);
        return Ok((0, b.finish(g)?));
    }

    let upper = if bond_only {
        match heuristic_bond_carving(g) {
            Ok(d) => d.width(),
            Err(Error::NoBondDecomposition) => return Err(Error::NoBondDecomposition),
            Err(e) => return Err(e),
        }
    } else {
        heuristic_carving(g).width()
    };

    // Bit i stands for vertex i + 1; vertex 0 is the root leaf.
    let m = n - 1;
    let full: u32 = (1u32 << m) - 1;
    let mut mult = vec![vec![0u16; n]; n];
    for &(a, b) in g.edges() {
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    let adj_bits: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| mult[v][w] > 0)
                .fold(0, |acc, w| acc | (1 << w))
        })
        .collect();
    let degree: Vec<u16> = (0..n).map(|v| mult[v].iter().sum()).collect();

    let size = 1usize << m;
    let mut cut = vec![0u16; size];
    for s in 1..size as u32 {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let v = low + 1;
        let inner: u16 = (0..m)
            .filter(|&i| rest >> i & 1 == 1)
            .map(|i| mult[v][i + 1])
            .sum();
        cut[s as usize] = cut[rest as usize] + degree[v] - 2 * inner;
    }

    // Connectivity over full n-bit vertex masks.
    let connected = |mask: u64| -> bool {
        if mask == 0 {
            return false;
        }
        let mut reach = mask & mask.wrapping_neg();
        loop {
            let mut next = reach;
            let mut r = reach;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                next |= adj_bits[v] & mask;
            }
            if next == reach {
                return reach == mask;
            }
            reach = next;
        }
    };
    let all_vertices: u64 = (1u64 << n) - 1;
    let feasible = |s: u32| -> bool {
        if cut[s as usize] as usize > upper {
            return false;
        }
        if !bond_only {
            return true;
        }
        let inside = (s as u64) << 1;
        connected(inside) && connected(all_vertices & !inside)
    };

    let mut best = vec![INF; size];
    let mut split = vec![0u32; size];
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    for s in 1..size as u32 {
        layers[s.count_ones() as usize].push(s);
    }
    for &s in &layers[1] {
        if feasible(s) {
            best[s as usize] = cut[s as usize];
        }
    }
    for layer in &layers[2..] {
        let results: Vec<(u32, u16, u32)> = layer
            .par_iter()
            .map(|&s| {
                if !feasible(s) {
                    return (s, INF, 0);
                }
                let own = cut[s as usize];
                let low = s & s.wrapping_neg();
                let rest = s ^ low;
                let mut value = INF;
                let mut choice = 0;
                // A ranges over subsets containing the lowest bit, B = S - A nonempty.
                let mut sub = rest;
                loop {
                    let a = low | sub;
                    let b = s ^ a;
                    if b != 0 {
                        let fa = best[a as usize];
                        if fa < value {
                            let v = fa.max(best[b as usize]).max(own);
                            if v < value {
                                value = v;
                                choice = a;
                                if value == own {
                                    break;
                                }
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                (s, value, choice)
            })
            .collect();
        for (s, v, c) in results {
            best[s as usize] = v;
            split[s as usize] = c;
        }
    }

    let width = best[full as usize];
    if width == INF {
        return Err(if bond_only {
            Error::NoBondDecomposition
        } else {
            Error::Disconnected
        });
    }

    let mut b = TreeBuilder::default();
    let root = b.leaf(0);
    let mut stack = vec![(full, root)];
    while let Some((s, parent)) = stack.pop() {
        let node = if s.count_ones() == 1 {
            b.leaf(s.trailing_zeros() as usize + 1)
        } else {
            let node = b.internal();
            let a = split[s as usize];
            stack.push((s ^ a, node));
            stack.push((a, node));
            node
        };
        b.attach(node, parent);
    }
    let dec = b.finish(g)?;
    debug_assert_eq!(dec.width(), width as usize);
    Ok((width as usize, dec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p2_has_width_one() {
        let g = Graph::new(2, [(0, 1)]);
        let (w, d) = exact_carving_width(&g, false).unwrap();
        assert_eq!(w, 1);
        assert_eq!(d.node_count(), 2);
        assert!(d.is_bond(&g));
        assert_eq!(exact_carving_width(&g, true).unwrap_err(), Error::HasBridge);
    }

    #[test]
    fn cycles_have_width_two() {
        for n in 3..=10 {
            let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)));
            let (w, d) = exact_carving_width(&g, true).unwrap();
            assert_eq!(w, 2, "C{n}");
            assert!(d.is_bond(&g));
            assert_eq!(exact_carving_width(&g, false).unwrap().0, 2);
        }
    }

    #[test]
    fn k4_has_width_four() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(exact_carving_width(&g, false).unwrap().0, 4);
        assert_eq!(exact_carving_width(&g, true).unwrap().0, 4);
    }

    #[test]
    fn bowtie_has_no_bond_decomposition() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(
            exact_carving_width(&g, true).unwrap_err(),
            Error::NoBondDecomposition
        );
        assert_eq!(exact_carving_width(&g, false).unwrap().0, 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(
            exact_carving_width_with_cap(&g, false, 4).unwrap_err(),
            Error::ExactCapExceeded {
                vertices: 5,
                cap: 4
            }
        );
    }
}
