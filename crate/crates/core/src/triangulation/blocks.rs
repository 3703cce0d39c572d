//! Product blocks `S^1 x F` over ordered surfaces, triangulated by the
//! staircase subdivision of each prism `triangle x [0, 1]` with its top and
//! bottom identified.
//!
//! Each boundary loop `b` of `F` gives a one-vertex boundary torus with edges
//! `a` (the circle fibre), `b` and the diagonal `c`.

use serde::Serialize;

use super::Triangulation;
use crate::error::{Error, Result};

/// A triangulated surface whose triangles carry a vertex order compatible
/// with every side identification. Each triangle lists its sides as edge ids
/// in the order `(0,1), (1,2), (0,2)`; edges used once are boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedSurface {
    pub triangles: Vec<[usize; 3]>,
}

const SIDES: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

impl OrderedSurface {
    /// Square with its vertical sides identified; boundary edges 0 and 1 are
    /// the bottom and top, oriented the same way.
    pub fn annulus() -> Self {
        Self {
            triangles: vec![[0, 2, 3], [2, 1, 3]],
        }
    }

    /// Fan triangulation of the heptagon obtained by cutting a pair of pants
    /// along two arcs. Boundary edges 0 and 1 are parallel once boundary 2 is
    /// capped off.
    pub fn pants() -> Self {
        Self {
            triangles: vec![[0, 3, 5], [6, 1, 5], [7, 3, 6], [7, 4, 8], [8, 2, 4]],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.triangles.iter().flatten().max().map_or(0, |&m| m + 1)
    }

    fn uses(&self) -> Vec<Vec<(usize, usize)>> {
        let mut uses = vec![Vec::new(); self.edge_count()];
        for (t, sides) in self.triangles.iter().enumerate() {
            for (s, &e) in sides.iter().enumerate() {
                uses[e].push((t, s));
            }
        }
        uses
    }

    pub fn boundary_edges(&self) -> Vec<usize> {
        self.uses()
            .iter()
            .enumerate()
            .filter(|(_, u)| u.len() == 1)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        for (e, u) in self.uses().iter().enumerate() {
            if u.is_empty()
                || u.len() > 2
                || u.iter()
                    .any(|&(t, _)| self.triangles[t].iter().filter(|&&x| x == e).count() > 1)
            {
                return Err(Error::InvalidTriangulation(format!(
                    "surface edge {e} is used {} times",
                    u.len()
                )));
            }
        }
        Ok(())
    }
}

/// A one-vertex boundary torus: the two boundary faces with their corners in
/// the order `(0,0), (1,0), (1,1)` for the lower triangle and
/// `(0,0), (0,1), (1,1)` for the upper one, where `b` runs along the first
/// coordinate, `a` along the second and `c` is the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundaryTorus {
    pub lower: (usize, [usize; 3]),
    pub upper: (usize, [usize; 3]),
}

impl BoundaryTorus {
    pub fn offset(self, off: usize) -> Self {
        Self {
            lower: (self.lower.0 + off, self.lower.1),
            upper: (self.upper.0 + off, self.upper.1),
        }
    }

    /// Glues `self` to `other` so that the labels `a`, `b`, `c` match.
    pub fn glue(&self, other: &BoundaryTorus, tri: &mut Triangulation) -> Result<()> {
        tri.join_faces(self.lower.0, self.lower.1, other.lower.0, other.lower.1)?;
        tri.join_faces(self.upper.0, self.upper.1, other.upper.0, other.upper.1)
    }
}

type Label = (usize, usize);

const STAIRCASE: [[Label; 4]; 3] = [
    [(0, 0), (1, 0), (2, 0), (2, 1)],
    [(0, 0), (1, 0), (1, 1), (2, 1)],
    [(0, 0), (0, 1), (1, 1), (2, 1)],
];

fn locate(tri_index: usize, want: [Label; 3]) -> (usize, [usize; 3]) {
    let mut found = None;
    for (k, labels) in STAIRCASE.iter().enumerate() {
        let pos: Vec<Option<usize>> = want
            .iter()
            .map(|w| labels.iter().position(|l| l == w))
            .collect();
        if pos.iter().all(Option::is_some) {
            assert!(found.is_none(), "quad face in two tetrahedra");
            found = Some((
                3 * tri_index + k,
                [pos[0].unwrap(), pos[1].unwrap(), pos[2].unwrap()],
            ));
        }
    }
    found.expect("face in the staircase")
}

fn quad(i: usize, j: usize) -> ([Label; 3], [Label; 3]) {
    ([(i, 0), (j, 0), (j, 1)], [(i, 0), (i, 1), (j, 1)])
}

/// `S^1 x F` with one boundary torus per boundary edge of `F`, listed in
/// the order of [`OrderedSurface::boundary_edges`].
pub fn product_block(
    surface: &OrderedSurface,
) -> Result<(Triangulation, Vec<(usize, BoundaryTorus)>)> {
    surface.validate()?;
    let mut tri = Triangulation::with_size(3 * surface.triangles.len());
    for t in 0..surface.triangles.len() {
        tri.join_faces(3 * t, [0, 1, 3], 3 * t + 1, [0, 1, 3])?;
        tri.join_faces(3 * t + 1, [0, 2, 3], 3 * t + 2, [0, 2, 3])?;
        // Top of the prism onto its bottom.
        tri.join_faces(3 * t + 2, [1, 2, 3], 3 * t, [0, 1, 2])?;
    }
    let mut tori = Vec::new();
    for (e, uses) in surface.uses().iter().enumerate() {
        let sides: Vec<(usize, ([Label; 3], [Label; 3]))> = uses
            .iter()
            .map(|&(t, s)| {
                let (i, j) = SIDES[s];
                (t, quad(i, j))
            })
            .collect();
        match sides.as_slice() {
            [(t1, (l1, u1)), (t2, (l2, u2))] => {
                let (x, y) = (locate(*t1, *l1), locate(*t2, *l2));
                tri.join_faces(x.0, x.1, y.0, y.1)?;
                let (x, y) = (locate(*t1, *u1), locate(*t2, *u2));
                tri.join_faces(x.0, x.1, y.0, y.1)?;
            }
            [(t, (l, u))] => tori.push((
                e,
                BoundaryTorus {
                    lower: locate(*t, *l),
                    upper: locate(*t, *u),
                },
            )),
            _ => unreachable!("validated"),
        }
    }
    Ok((tri, tori))
}

/// Tetrahedra in [`drilled_block`].
pub const DRILLED_BLOCK_SIZE: usize = 15;

/// `T^2 x [-1, 1]` or its drilled version, with labelled boundary tori.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub triangulation: Triangulation,
    pub lower: BoundaryTorus,
    pub upper: BoundaryTorus,
    pub drilled: Option<BoundaryTorus>,
}

impl Block {
    pub fn is_drilled(&self) -> bool {
        self.drilled.is_some()
    }

    /// Removes a neighbourhood of the curve `a x {0}`.
    pub fn drill(&self) -> Result<Block> {
        if self.is_drilled() {
            return Err(Error::AlreadyDrilled);
        }
        Ok(drilled_block())
    }
}

/// `T^2 x [-1, 1]` as the circle times an annulus: two prisms, six tetrahedra.
pub fn prism_block() -> Block {
    let (triangulation, tori) = product_block(&OrderedSurface::annulus()).expect("fixed surface");
    Block {
        triangulation,
        lower: tori[0].1,
        upper: tori[1].1,
        drilled: None,
    }
}

/// The prism block with `a x {0}` drilled out: the circle times a pair of
/// pants, fifteen tetrahedra.
pub fn drilled_block() -> Block {
    let (triangulation, tori) = product_block(&OrderedSurface::pants()).expect("fixed surface");
    Block {
        triangulation,
        lower: tori[0].1,
        upper: tori[1].1,
        drilled: Some(tori[2].1),
    }
}
