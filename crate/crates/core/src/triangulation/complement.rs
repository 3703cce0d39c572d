//! Torus knot complements `U ∪ Q ∪ V`: two layered solid tori glued to the
//! drilled block along labelled boundary tori.

use serde::Serialize;

use super::{
    drilled_block, layered_solid_torus, prism_block, Block, BoundaryTorus, LayeredSolidTorus,
    SlopeTriple, Triangulation,
};
use crate::carving::caterpillar;
use crate::error::{Error, Result};
use crate::families::gcd;
use crate::graph::Graph;

/// The Bézout pair `(u, v)` with `p v - q u = 1`, `0 < v < q` and `0 < u < p`.
pub fn bezout_pair(p: u64, q: u64) -> Result<(u64, u64)> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidFamily(format!(
            "torus knot parameters must be at least 2, got ({p}, {q})"
        )));
    }
    if gcd(p as i64, q as i64) != 1 {
        return Err(Error::NotCoprime(p as i64, q as i64));
    }
    let v = (1..q)
        .find(|v| (p * v) % q == 1)
        .expect("p is invertible mod q");
    Ok(((p * v - 1) / q, v))
}

/// Reduces `u` modulo `p` so that `0 < u < p`.
pub fn normalize_slope(p: u64, u: i64) -> Result<(u64, u64)> {
    let r = u.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Err(Error::NotCoprime(p as i64, u));
    }
    Ok((p, r))
}

/// Width of the caterpillar along the path order of every complement.
pub const COMPLEMENT_PATH_WIDTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComplementPiece {
    Lower,
    Block,
    Upper,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorusComplement {
    pub p: u64,
    pub q: u64,
    pub u: u64,
    pub v: u64,
    pub upper: SlopeTriple,
    pub lower: SlopeTriple,
    /// Which solid tori were mirrored to make the gluing orientable.
    pub mirrored: (bool, bool),
    /// Tetrahedra in path order: `V` from its core outwards, the block, then
    /// `U` from its boundary inwards.
    pub triangulation: Triangulation,
    pub pieces: Vec<ComplementPiece>,
    pub cusp: Option<BoundaryTorus>,
}

fn mirrored(l: &LayeredSolidTorus) -> LayeredSolidTorus {
    let s = |v: usize| match v {
        2 => 3,
        3 => 2,
        x => x,
    };
    let m = |(t, c): (usize, [usize; 3])| (t, c.map(s));
    LayeredSolidTorus {
        triangulation: l.triangulation.mirror(),
        boundary: BoundaryTorus {
            lower: m(l.boundary.lower),
            upper: m(l.boundary.upper),
        },
        triple: l.triple,
    }
}

struct Assembly {
    tri: Triangulation,
    pieces: Vec<ComplementPiece>,
    cusp: Option<BoundaryTorus>,
    mirrored: (bool, bool),
}

fn assemble(
    upper: &LayeredSolidTorus,
    lower: &LayeredSolidTorus,
    block: &Block,
) -> Result<Assembly> {
    for (mu, ml) in [(false, false), (true, false), (false, true), (true, true)] {
        let up = if mu { mirrored(upper) } else { upper.clone() };
        let lo = if ml { mirrored(lower) } else { lower.clone() };
        let mut tri = lo.triangulation.clone();
        let ob = tri.append(&block.triangulation);
        let ou = tri.append(&up.triangulation);
        lo.boundary.glue(&block.lower.offset(ob), &mut tri)?;
        up.boundary
            .offset(ou)
            .glue(&block.upper.offset(ob), &mut tri)?;
        if !tri.is_orientable() {
            continue;
        }
        let (nl, nb, nu) = (
            lo.triangulation.size(),
            block.triangulation.size(),
            up.triangulation.size(),
        );
        // Upper solid torus reversed so the order runs outside-in.
        let order: Vec<usize> = (0..nl + nb).chain((nl + nb..nl + nb + nu).rev()).collect();
        let mut position = vec![0; order.len()];
        for (i, &t) in order.iter().enumerate() {
            position[t] = i;
        }
        let tri = tri.renumber(&order);
        let cusp = block.drilled.map(|c| {
            let c = c.offset(ob);
            BoundaryTorus {
                lower: (position[c.lower.0], c.lower.1),
                upper: (position[c.upper.0], c.upper.1),
            }
        });
        let pieces = std::iter::repeat_n(ComplementPiece::Lower, nl)
            .chain(std::iter::repeat_n(ComplementPiece::Block, nb))
            .chain(std::iter::repeat_n(ComplementPiece::Upper, nu))
            .collect();
        return Ok(Assembly {
            tri,
            pieces,
            cusp,
            mirrored: (mu, ml),
        });
    }
    Err(Error::InvalidTriangulation(
        "no orientable label-respecting gluing".into(),
    ))
}

fn build(p: u64, q: u64, block: &Block) -> Result<TorusComplement> {
    let (u, v) = bezout_pair(p, q)?;
    let upper = layered_solid_torus(p, u)?;
    let lower = layered_solid_torus(q, v)?;
    let a = assemble(&upper, &lower, block)?;
    Ok(TorusComplement {
        p,
        q,
        u,
        v,
        upper: upper.triple,
        lower: lower.triple,
        mirrored: a.mirrored,
        triangulation: a.tri,
        pieces: a.pieces,
        cusp: a.cusp,
    })
}

/// `U(p, u) ∪ Q ∪ V(q, v)` with `(u, v)` from [`bezout_pair`]; the only
/// boundary is the drilled torus.
pub fn torus_complement(p: u64, q: u64) -> Result<TorusComplement> {
    let (p, q) = (p.max(q), p.min(q));
    build(p, q, &drilled_block())
}

/// The same gluing with the undrilled block, a closed manifold.
pub fn torus_filling(p: u64, q: u64) -> Result<TorusComplement> {
    let (p, q) = (p.max(q), p.min(q));
    build(p, q, &prism_block())
}

impl TorusComplement {
    /// `|p v - q u|`, the intersection number of the two meridians on the
    /// middle torus.
    pub fn meridian_intersection(&self) -> u64 {
        (self.p * self.v).abs_diff(self.q * self.u)
    }
}

/// Face-pairing graph and the width of the caterpillar carving along the
/// tetrahedron order.
pub fn face_pairing_width(t: &Triangulation) -> (Graph, usize) {
    let g = t.face_pairing_graph();
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    let w = if g.vertex_count() == 0 {
        0
    } else {
        caterpillar(&g, &order).expect("identity order").width()
    };
    (g, w)
}

/// Whether the face pairings form a chain: one self-gluing on tetrahedron 0
/// and a double gluing between each pair of consecutive tetrahedra.
pub fn is_daisy_chain(t: &Triangulation) -> bool {
    let mut expected: Vec<(usize, usize)> = vec![(0, 0)];
    for i in 1..t.size() {
        expected.extend([(i - 1, i), (i - 1, i)]);
    }
    let mut got = t.face_pairings();
    got.sort_unstable();
    got == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout_pair(9, 7).unwrap(), (5, 4));
        assert_eq!(bezout_pair(3, 2).unwrap(), (1, 1));
        assert_eq!(bezout_pair(5, 3).unwrap(), (3, 2));
        assert!(matches!(bezout_pair(6, 4), Err(Error::NotCoprime(6, 4))));
        for p in 3..40u64 {
            for q in 2..p {
                if let Ok((u, v)) = bezout_pair(p, q) {
                    assert_eq!(p * v - q * u, 1);
                }
            }
        }
    }

    #[test]
    fn normalizes_slopes() {
        assert_eq!(normalize_slope(5, 7).unwrap(), (5, 2));
        assert_eq!(normalize_slope(5, -3).unwrap(), (5, 2));
        assert!(normalize_slope(5, 10).is_err());
    }

    #[test]
    fn trefoil_complement() {
        let c = torus_complement(3, 2).unwrap();
        let t = &c.triangulation;
        t.validate().unwrap();
        assert!(t.is_orientable());
        assert_eq!(t.boundary_component_count(), 1);
        assert!(t.homology_h1().unwrap().is_integers());
        assert_eq!(c.meridian_intersection(), 1);
        assert_eq!(t.size(), 2 + 15 + 1);
        assert_eq!(
            c.pieces
                .iter()
                .filter(|&&x| x == ComplementPiece::Block)
                .count(),
            15
        );
    }

    #[test]
    fn filling_is_a_homology_sphere() {
        for (p, q) in [(3, 2), (5, 2), (5, 3), (7, 4), (9, 7)] {
            let m = torus_filling(p, q).unwrap();
            assert!(m.triangulation.is_closed());
            assert!(
                m.triangulation.homology_h1().unwrap().is_trivial(),
                "({p},{q})"
            );
        }
    }

    #[test]
    fn path_width_is_constant_over_the_grid() {
        let mut seen = 0;
        for p in 3..=30u64 {
            for q in 2..p {
                let Ok(c) = torus_complement(p, q) else {
                    continue;
                };
                seen += 1;
                assert_eq!(
                    face_pairing_width(&c.triangulation).1,
                    COMPLEMENT_PATH_WIDTH,
                    "({p},{q})"
                );
                assert!(
                    c.triangulation.homology_h1().unwrap().is_integers(),
                    "({p},{q})"
                );
                assert_eq!(c.meridian_intersection(), 1);
            }
        }
        assert_eq!(seen, 248);
    }

    #[test]
    fn layered_tori_are_daisy_chains() {
        for (p, u) in [(2, 1), (3, 1), (5, 2), (13, 8)] {
            let l = layered_solid_torus(p, u).unwrap();
            assert!(is_daisy_chain(&l.triangulation));
            assert!(face_pairing_width(&l.triangulation).1 <= 4);
        }
    }
}
