//! Layered solid tori, grown from the one-tetrahedron fold by layering onto
//! boundary edges.

use serde::Serialize;

use super::{face_vertices, BoundaryTorus, Triangulation};
use crate::error::{Error, Result};
use crate::families::gcd;

/// Number of times the meridian crosses the boundary edges `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SlopeTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayeredSolidTorus {
    pub triangulation: Triangulation,
    pub boundary: BoundaryTorus,
    pub triple: SlopeTriple,
}

/// Meridian counts of each layering from `{1, 2, 3}` up to `{u, p, p + u}`,
/// as the count removed at each step.
fn flips(p: u64, u: u64) -> Vec<u64> {
    let (mut x, mut y) = (u.min(p), u.max(p));
    let mut removed = Vec::new();
    while (x, y) != (1, 2) {
        removed.push(y - x);
        let d = y - x;
        (x, y) = (x.min(d), x.max(d));
    }
    removed.reverse();
    removed
}

/// The two tetrahedron vertices of face `(t, f)` spanning edge class `e`,
/// ordered along the class orientation, and the third vertex.
fn edge_in_face(tri: &Triangulation, t: usize, f: usize, e: usize) -> [usize; 3] {
    let sk = tri.skeleton();
    let fv = face_vertices(f);
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (a, b) = (fv[i], fv[j]);
        let (class, flip) = sk.edge_of[t][super::edge_index(a, b)];
        if class == e {
            return if flip { [b, a, fv[k]] } else { [a, b, fv[k]] };
        }
    }
    unreachable!("edge lies on the boundary face")
}

fn face_edges(tri: &Triangulation, t: usize, f: usize) -> [usize; 3] {
    let sk = tri.skeleton();
    let [a, b, c] = face_vertices(f);
    [(a, b), (b, c), (a, c)].map(|(x, y)| sk.edge_of[t][super::edge_index(x, y)].0)
}

/// Layered solid torus whose meridian crosses `a`, `b`, `c` exactly
/// `p`, `u`, `p + u` times. Requires `gcd(p, u) = 1` and `0 < u < p`.
pub fn layered_solid_torus(p: u64, u: u64) -> Result<LayeredSolidTorus> {
    if u == 0 || u >= p {
        return Err(Error::InvalidTriangulation(format!(
            "need 0 < u < p, got p = {p}, u = {u}"
        )));
    }
    if gcd(p as i64, u as i64) != 1 {
        return Err(Error::NotCoprime(p as i64, u as i64));
    }
    let mut tri = Triangulation::with_size(1);
    tri.join(0, 3, 0, [1, 2, 3, 0])?;
    let bf = tri.boundary_faces();
    let mut boundary = [bf[0], bf[1]];
    for removed in flips(p, u) {
        let images = tri.edge_classes_in_h1()?;
        let [(t1, f1), (t2, f2)] = boundary;
        let e = face_edges(&tri, t1, f1)
            .into_iter()
            .find(|&e| images[e].unsigned_abs() == removed)
            .ok_or_else(|| {
                Error::InvalidTriangulation(format!(
                    "no boundary edge with meridian count {removed}"
                ))
            })?;
        let x = edge_in_face(&tri, t1, f1, e);
        let y = edge_in_face(&tri, t2, f2, e);
        let n = tri.add_tetrahedron();
        tri.join_faces(n, [0, 1, 2], t1, x)?;
        tri.join_faces(n, [0, 1, 3], t2, y)?;
        boundary = [(n, 0), (n, 1)];
    }
    label(tri, boundary, p, u)
}

fn label(
    tri: Triangulation,
    boundary: [(usize, usize); 2],
    p: u64,
    u: u64,
) -> Result<LayeredSolidTorus> {
    let images = tri.edge_classes_in_h1()?;
    let count = |e: usize| images[e].unsigned_abs();
    let sk = tri.skeleton();
    let name = |e: usize| -> Result<char> {
        match count(e) {
            c if c == p => Ok('a'),
            c if c == u => Ok('b'),
            c if c == p + u => Ok('c'),
            c => Err(Error::InvalidTriangulation(format!(
                "boundary edge has meridian count {c}"
            ))),
        }
    };
    let corners = |t: usize, f: usize, order: [[char; 2]; 3]| -> Result<(usize, [usize; 3])> {
        let fv = face_vertices(f);
        let mut out = [usize::MAX; 3];
        for &v in &fv {
            let mut names = Vec::new();
            for &w in &fv {
                if w != v {
                    names.push(name(sk.edge_of[t][super::edge_index(v, w)].0)?);
                }
            }
            names.sort();
            let slot = order
                .iter()
                .position(|o| o[..] == names[..])
                .ok_or_else(|| {
                    Error::InvalidTriangulation("boundary face does not carry edges a, b, c".into())
                })?;
            out[slot] = v;
        }
        Ok((t, out))
    };
    let lower = corners(
        boundary[0].0,
        boundary[0].1,
        [['b', 'c'], ['a', 'b'], ['a', 'c']],
    )?;
    let upper = corners(
        boundary[1].0,
        boundary[1].1,
        [['a', 'c'], ['a', 'b'], ['b', 'c']],
    )?;
    Ok(LayeredSolidTorus {
        triangulation: tri,
        boundary: BoundaryTorus { lower, upper },
        triple: SlopeTriple {
            a: p,
            b: u,
            c: p + u,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sum of the continued-fraction partial quotients of `p / u`.
    fn partial_quotient_sum(mut p: u64, mut u: u64) -> u64 {
        let mut s = 0;
        while u != 0 {
            s += p / u;
            (p, u) = (u, p % u);
        }
        s
    }

    #[test]
    fn base_case_is_one_tetrahedron() {
        let l = layered_solid_torus(2, 1).unwrap();
        assert_eq!(l.triangulation.size(), 1);
        assert_eq!(l.triple, SlopeTriple { a: 2, b: 1, c: 3 });
    }

    #[test]
    fn solid_tori_have_the_requested_meridian() {
        for p in 2..=13u64 {
            for u in 1..p {
                if gcd(p as i64, u as i64) != 1 {
                    assert!(matches!(
                        layered_solid_torus(p, u),
                        Err(Error::NotCoprime(..))
                    ));
                    continue;
                }
                let l = layered_solid_torus(p, u).unwrap();
                let t = &l.triangulation;
                t.validate().unwrap();
                assert!(t.is_orientable());
                assert_eq!(t.vertex_count(), 1);
                assert!(t.homology_h1().unwrap().is_integers());
                assert_eq!(t.boundary_component_count(), 1);
                assert_eq!(
                    t.size() as u64,
                    partial_quotient_sum(p, u) - 1,
                    "p={p} u={u}"
                );
                let images = t.edge_classes_in_h1().unwrap();
                let sk = t.skeleton();
                let (tl, v) = l.boundary.lower;
                let edge = |x: usize, y: usize| {
                    images[sk.edge_of[tl][super::super::edge_index(x, y)].0].unsigned_abs()
                };
                assert_eq!(
                    (edge(v[1], v[2]), edge(v[0], v[1]), edge(v[0], v[2])),
                    (p, u, p + u)
                );
            }
        }
    }

    #[test]
    fn rejects_bad_slopes() {
        assert!(layered_solid_torus(3, 3).is_err());
        assert!(layered_solid_torus(3, 0).is_err());
        assert!(matches!(
            layered_solid_torus(4, 2),
            Err(Error::NotCoprime(4, 2))
        ));
    }
}
