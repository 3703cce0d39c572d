//! Combinatorial maps: graphs embedded on the sphere through a rotation system.
//!
//! Every edge `e` owns two darts, `2e` leaving its tail and `2e + 1` leaving its
//! head. Each vertex lists its darts in counterclockwise order. Faces are the
//! orbits of `d -> rot_pred(twin(d))`, which walks the face on the left of `d`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<Dart>>,
    position: Vec<usize>,
}

impl PlanarMap {
    /// Builds a map from edge endpoints and per-vertex counterclockwise dart
    /// lists. Each dart must appear exactly once, at the vertex it leaves.
    pub fn new(ends: Vec<[usize; 2]>, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        let n_darts = 2 * ends.len();
        let mut position = vec![usize::MAX; n_darts];
        for (v, darts) in rotation.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= n_darts {
                    return Err(Error::InvalidDiagram(format!("dart {d} out of range")));
                }
                if position[d] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("dart {d} listed twice")));
                }
                if ends[edge_of(d)][d & 1] != v {
                    return Err(Error::InvalidDiagram(format!(
                        "dart {d} listed at vertex {v} but leaves vertex {}",
                        ends[edge_of(d)][d & 1]
                    )));
                }
                position[d] = i;
            }
        }
        if let Some(d) = position.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidDiagram(format!(
                "dart {d} missing from rotation"
            )));
        }
        Ok(Self {
            ends,
            rotation,
            position,
        })
    }

    fn rebuild_positions(&mut self) {
        self.position = vec![0; 2 * self.ends.len()];
        for darts in &self.rotation {
            for (i, &d) in darts.iter().enumerate() {
                self.position[d] = i;
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.ends
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.ends[edge_of(d)][d & 1]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(twin(d))
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Index of `d` in the rotation of its tail vertex.
    pub fn slot(&self, d: Dart) -> usize {
        if self.position.is_empty() {
            self.rotation[self.tail(d)]
                .iter()
                .position(|&x| x == d)
                .unwrap()
        } else {
            self.position[d]
        }
    }

    pub fn rot_succ(&self, d: Dart) -> Dart {
        let r = &self.rotation[self.tail(d)];
        r[(self.slot(d) + 1) % r.len()]
    }

    pub fn rot_pred(&self, d: Dart) -> Dart {
        let r = &self.rotation[self.tail(d)];
        r[(self.slot(d) + r.len() - 1) % r.len()]
    }

    /// Next dart along the face on the left of `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_pred(twin(d))
    }

    /// Boundary walks of all faces, each listed as darts with the face on their left.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.face_next(d);
            }
            faces.push(walk);
        }
        faces
    }

    /// Face index on the left of every dart, in the numbering of [`faces`](Self::faces).
    pub fn dart_faces(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let faces = self.faces();
        let mut of = vec![0; self.dart_count()];
        for (f, walk) in faces.iter().enumerate() {
            for &d in walk {
                of[d] = f;
            }
        }
        (faces, of)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &[a, b] in &self.ends {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        adj
    }

    /// Planar dual. Dual vertex `f` is face `f` of [`faces`](Self::faces); dual
    /// edge `e` crosses primal edge `e`, its dart `2e` leaving the face on the
    /// left of primal dart `2e`.
    pub fn dual(&self) -> PlanarMap {
        let (faces, of) = self.dart_faces();
        let ends = (0..self.edge_count())
            .map(|e| [of[2 * e], of[2 * e + 1]])
            .collect();
        let mut m = PlanarMap {
            ends,
            rotation: faces,
            position: Vec::new(),
        };
        m.rebuild_positions();
        m
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for v in 0..self.vertex_count() {
            let _ = writeln!(s, "  v{v};");
        }
        for (e, &[a, b]) in self.ends.iter().enumerate() {
            let _ = writeln!(s, "  v{a} -- v{b} [label=\"e{e}\"];");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlanarMap {
        let ends: Vec<_> = (0..n).map(|i| [i, (i + 1) % n]).collect();
        let rotation = (0..n)
            .map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1])
            .collect();
        PlanarMap::new(ends, rotation).unwrap()
    }

    #[test]
    fn cycle_has_two_faces() {
        let m = cycle(5);
        assert_eq!(m.faces().len(), 2);
        assert_eq!(m.euler_characteristic(), 2);
    }

    #[test]
    fn dual_of_cycle_is_two_vertices_with_parallel_edges() {
        let d = cycle(4).dual();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 4);
        for &[a, b] in d.edges() {
            assert_ne!(a, b);
        }
    }

    #[test]
    fn rejects_misplaced_dart() {
        let err = PlanarMap::new(vec![[0, 1]], vec![vec![1], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidDiagram(_)));
    }
}
