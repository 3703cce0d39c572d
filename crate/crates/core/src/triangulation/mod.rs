//! Tetrahedral triangulations given by face gluings, and the explicit
//! triangulation of torus knot complements assembled from layered solid tori
//! and a fixed drilled product block.
//!
//! Face `f` of a tetrahedron is the face opposite vertex `f`. A gluing of face
//! `f` of `t` is a pair `(t2, perm)` where `perm[i]` is the vertex of `t2`
//! that vertex `i` of `t` is identified with; face `f` goes to face `perm[f]`.

mod blocks;
mod complement;
pub mod homology;
mod layered;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
pub use blocks::{
    drilled_block, prism_block, product_block, Block, BoundaryTorus, OrderedSurface,
    DRILLED_BLOCK_SIZE,
};
pub use complement::{
    bezout_pair, face_pairing_width, is_daisy_chain, normalize_slope, torus_complement,
    torus_filling, ComplementPiece, TorusComplement, COMPLEMENT_PATH_WIDTH,
};
pub use homology::AbelianGroup;
pub use layered::{layered_solid_torus, LayeredSolidTorus, SlopeTriple};

pub type Perm = [u8; 4];

pub const IDENTITY: Perm = [0, 1, 2, 3];

pub fn perm_inverse(p: Perm) -> Perm {
    let mut q = [0u8; 4];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

pub fn perm_is_valid(p: Perm) -> bool {
    let mut seen = [false; 4];
    p.iter()
        .all(|&x| x < 4 && !std::mem::replace(&mut seen[x as usize], true))
}

pub fn perm_is_even(p: Perm) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The three vertices of face `f`, increasing.
pub fn face_vertices(f: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for v in 0..4 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

/// Builds the permutation taking the face of `t` with vertices `from`, in that
/// order, onto the face of `t2` with vertices `to`.
pub fn perm_from_faces(from: [usize; 3], to: [usize; 3]) -> Perm {
    let missing = |v: [usize; 3]| {
        (0..4)
            .find(|x| !v.contains(x))
            .expect("three distinct vertices")
    };
    let mut p = [0u8; 4];
    for i in 0..3 {
        p[from[i]] = to[i] as u8;
    }
    p[missing(from)] = missing(to) as u8;
    p
}

const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    EDGES
        .iter()
        .position(|&e| e == (a, b))
        .expect("distinct vertices")
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    gluings: Vec<[Option<(usize, Perm)>; 4]>,
}

/// Union-find that also tracks a parity bit relative to the root.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    fn union(&mut self, x: usize, y: usize, flip: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == flip;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ flip;
        true
    }
}

/// Equivalence classes of vertices and oriented edges.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub vertex_of: Vec<[usize; 4]>,
    pub vertex_count: usize,
    /// Class of each tetrahedron edge `EDGES[i]`, with `true` when the class
    /// representative runs the other way.
    pub edge_of: Vec<[(usize, bool); 6]>,
    pub edge_count: usize,
    /// A representative `(tet, a, b)` per edge class, oriented `a -> b`.
    pub edge_rep: Vec<(usize, usize, usize)>,
    /// Each face class as `(tet, face)`, paired faces once.
    pub faces: Vec<(usize, usize)>,
}

impl Triangulation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_size(n: usize) -> Self {
        Self {
            gluings: vec![[None; 4]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn add_tetrahedron(&mut self) -> usize {
        self.gluings.push([None; 4]);
        self.gluings.len() - 1
    }

    pub fn gluing(&self, t: usize, f: usize) -> Option<(usize, Perm)> {
        self.gluings[t][f]
    }

    /// Glues face `f` of `t` to face `perm[f]` of `t2`, in both directions.
    pub fn join(&mut self, t: usize, f: usize, t2: usize, perm: Perm) -> Result<()> {
        let n = self.size();
        if t >= n || t2 >= n || f >= 4 || !perm_is_valid(perm) {
            return Err(Error::InvalidTriangulation(format!(
                "bad gluing {t}:{f} -> {t2} {perm:?}"
            )));
        }
        let f2 = perm[f] as usize;
        if t == t2 && f == f2 {
            return Err(Error::InvalidTriangulation(format!(
                "face {t}:{f} glued to itself"
            )));
        }
        if self.gluings[t][f].is_some() || self.gluings[t2][f2].is_some() {
            return Err(Error::InvalidTriangulation(format!(
                "face {t}:{f} or {t2}:{f2} already glued"
            )));
        }
        self.gluings[t][f] = Some((t2, perm));
        self.gluings[t2][f2] = Some((t, perm_inverse(perm)));
        Ok(())
    }

    /// Glues face `from` (ordered vertices of `t`) onto face `to` of `t2`.
    pub fn join_faces(
        &mut self,
        t: usize,
        from: [usize; 3],
        t2: usize,
        to: [usize; 3],
    ) -> Result<()> {
        let p = perm_from_faces(from, to);
        let f = (0..4).find(|x| !from.contains(x)).expect("face");
        self.join(t, f, t2, p)
    }

    /// Appends a copy of `other` and returns the index offset of its tetrahedra.
    pub fn append(&mut self, other: &Triangulation) -> usize {
        let off = self.size();
        for g in &other.gluings {
            self.gluings.push(g.map(|x| x.map(|(t, p)| (t + off, p))));
        }
        off
    }

    /// Reorders tetrahedra so that new tetrahedron `i` is old `order[i]`.
    pub fn renumber(&self, order: &[usize]) -> Triangulation {
        let mut position = vec![0; self.size()];
        for (i, &t) in order.iter().enumerate() {
            position[t] = i;
        }
        Triangulation {
            gluings: order
                .iter()
                .map(|&t| self.gluings[t].map(|x| x.map(|(t2, p)| (position[t2], p))))
                .collect(),
        }
    }

    /// Mirror image: relabels vertices 2 and 3 of every tetrahedron.
    pub fn mirror(&self) -> Triangulation {
        let s = |v: u8| -> u8 {
            match v {
                2 => 3,
                3 => 2,
                x => x,
            }
        };
        let mut out = Triangulation::with_size(self.size());
        for t in 0..self.size() {
            for f in 0..4 {
                if let Some((t2, p)) = self.gluings[t][f] {
                    let mut q = [0u8; 4];
                    for i in 0..4u8 {
                        q[s(i) as usize] = s(p[i as usize]);
                    }
                    out.gluings[t][s(f as u8) as usize] = Some((t2, q));
                }
            }
        }
        out
    }

    /// Checks that every gluing is a valid permutation and is matched by its inverse.
    pub fn validate(&self) -> Result<()> {
        for t in 0..self.size() {
            for f in 0..4 {
                if let Some((t2, p)) = self.gluings[t][f] {
                    if t2 >= self.size() || !perm_is_valid(p) {
                        return Err(Error::InvalidTriangulation(format!(
                            "face {t}:{f} has a bad gluing"
                        )));
                    }
                    let f2 = p[f] as usize;
                    if t2 == t && f2 == f {
                        return Err(Error::InvalidTriangulation(format!(
                            "face {t}:{f} glued to itself"
                        )));
                    }
                    if self.gluings[t2][f2] != Some((t, perm_inverse(p))) {
                        return Err(Error::InvalidTriangulation(format!(
                            "gluing of {t}:{f} is not symmetric"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn boundary_faces(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..self.size() {
            for f in 0..4 {
                if self.gluings[t][f].is_none() {
                    out.push((t, f));
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_faces().is_empty()
    }

    pub fn skeleton(&self) -> Skeleton {
        let n = self.size();
        let mut vuf = ParityUnionFind::new(4 * n);
        let mut euf = ParityUnionFind::new(6 * n);
        for t in 0..n {
            for f in 0..4 {
                let Some((t2, p)) = self.gluings[t][f] else {
                    continue;
                };
                for v in face_vertices(f) {
                    vuf.union(4 * t + v, 4 * t2 + p[v] as usize, false);
                }
                let fv = face_vertices(f);
                for (i, &a) in fv.iter().enumerate() {
                    for &b in &fv[i + 1..] {
                        let (pa, pb) = (p[a] as usize, p[b] as usize);
                        euf.union(
                            6 * t + edge_index(a, b),
                            6 * t2 + edge_index(pa, pb),
                            pa > pb,
                        );
                    }
                }
            }
        }
        let mut vid = vec![usize::MAX; 4 * n];
        let mut vertex_of = vec![[0; 4]; n];
        let mut vertex_count = 0;
        for t in 0..n {
            for v in 0..4 {
                let (r, _) = vuf.find(4 * t + v);
                if vid[r] == usize::MAX {
                    vid[r] = vertex_count;
                    vertex_count += 1;
                }
                vertex_of[t][v] = vid[r];
            }
        }
        let mut eid = vec![usize::MAX; 6 * n];
        let mut edge_of = vec![[(0, false); 6]; n];
        let mut edge_rep = Vec::new();
        for t in 0..n {
            for e in 0..6 {
                let (r, par) = euf.find(6 * t + e);
                if eid[r] == usize::MAX {
                    eid[r] = edge_rep.len();
                    // The root's own orientation is the class orientation.
                    let (ra, rb) = EDGES[r % 6];
                    edge_rep.push((r / 6, ra, rb));
                }
                edge_of[t][e] = (eid[r], par);
            }
        }
        let mut faces = Vec::new();
        for t in 0..n {
            for f in 0..4 {
                match self.gluings[t][f] {
                    Some((t2, p)) if (t2, p[f] as usize) < (t, f) => {}
                    _ => faces.push((t, f)),
                }
            }
        }
        let edge_count = edge_rep.len();
        Skeleton {
            vertex_of,
            vertex_count,
            edge_of,
            edge_count,
            edge_rep,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton().vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton().edge_count
    }

    /// Consistent orientation signs per tetrahedron, or `None`.
    pub fn orientation(&self) -> Option<Vec<bool>> {
        let n = self.size();
        let mut uf = ParityUnionFind::new(n);
        for t in 0..n {
            for f in 0..4 {
                if let Some((t2, p)) = self.gluings[t][f] {
                    // An odd gluing keeps orientation signs equal.
                    if !uf.union(t, t2, perm_is_even(p)) {
                        return None;
                    }
                }
            }
        }
        Some((0..n).map(|t| uf.find(t).1).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.face_pairing_graph().is_connected()
    }

    /// Number of boundary surfaces: boundary faces sharing an edge are joined.
    pub fn boundary_component_count(&self) -> usize {
        let sk = self.skeleton();
        let bf = self.boundary_faces();
        let mut uf = ParityUnionFind::new(bf.len());
        let mut by_edge: Vec<Option<usize>> = vec![None; sk.edge_count];
        for (i, &(t, f)) in bf.iter().enumerate() {
            let fv = face_vertices(f);
            for (j, &a) in fv.iter().enumerate() {
                for &b in &fv[j + 1..] {
                    let e = sk.edge_of[t][edge_index(a, b)].0;
                    match by_edge[e] {
                        Some(k) => {
                            uf.union(i, k, false);
                        }
                        None => by_edge[e] = Some(i),
                    }
                }
            }
        }
        (0..bf.len()).filter(|&i| uf.find(i).0 == i).count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let sk = self.skeleton();
        sk.vertex_count as i64 - sk.edge_count as i64 + sk.faces.len() as i64 - self.size() as i64
    }

    /// Boundary matrix from faces to edges, edges as rows.
    fn boundary2(&self, sk: &Skeleton) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; sk.faces.len()]; sk.edge_count];
        for (j, &(t, f)) in sk.faces.iter().enumerate() {
            let [v0, v1, v2] = face_vertices(f);
            for (a, b, sign) in [(v1, v2, 1), (v0, v2, -1), (v0, v1, 1)] {
                let (e, flip) = sk.edge_of[t][edge_index(a, b)];
                m[e][j] += if flip { -sign } else { sign };
            }
        }
        m
    }

    fn boundary1(&self, sk: &Skeleton) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; sk.edge_count]; sk.vertex_count];
        for (e, &(t, a, b)) in sk.edge_rep.iter().enumerate() {
            m[sk.vertex_of[t][b]][e] += 1;
            m[sk.vertex_of[t][a]][e] -= 1;
        }
        m
    }

    /// First homology with integer coefficients.
    pub fn homology_h1(&self) -> Result<AbelianGroup> {
        let sk = self.skeleton();
        let r1 = homology::rank(&self.boundary1(&sk), sk.edge_count)?;
        let snf = homology::smith_normal_form(&self.boundary2(&sk), sk.faces.len())?;
        let r2 = snf.diagonal.len();
        Ok(AbelianGroup {
            rank: sk.edge_count - r1 - r2,
            torsion: snf.diagonal.into_iter().filter(|&d| d > 1).collect(),
        })
    }

    /// For a one-vertex triangulation with `H1 = Z`, the image of each edge class.
    pub fn edge_classes_in_h1(&self) -> Result<Vec<i64>> {
        let sk = self.skeleton();
        if sk.vertex_count != 1 {
            return Err(Error::InvalidTriangulation(
                "edge images need a one-vertex triangulation".into(),
            ));
        }
        let snf = homology::smith_normal_form(&self.boundary2(&sk), sk.faces.len())?;
        let r = snf.diagonal.len();
        if sk.edge_count != r + 1 || snf.diagonal.iter().any(|&d| d != 1) {
            return Err(Error::InvalidTriangulation(
                "first homology is not Z".into(),
            ));
        }
        Ok((0..sk.edge_count).map(|e| snf.left[r][e]).collect())
    }

    /// Face-pairing pairs `(t, t2)` with `t <= t2`, one per glued face pair.
    pub fn face_pairings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..self.size() {
            for f in 0..4 {
                if let Some((t2, p)) = self.gluings[t][f] {
                    if (t, f) < (t2, p[f] as usize) {
                        out.push((t.min(t2), t.max(t2)));
                    }
                }
            }
        }
        out
    }

    /// Face-pairing graph with self-gluings dropped.
    pub fn face_pairing_graph(&self) -> Graph {
        Graph::new(self.size(), self.face_pairings())
    }

    /// One tetrahedron per line: four entries `t2:perm` or `-` for boundary faces.
    pub fn to_text(&self) -> String {
        let mut s = format!("tetrahedra {}\n", self.size());
        for g in &self.gluings {
            let cols: Vec<String> = g
                .iter()
                .map(|x| match x {
                    Some((t2, p)) => format!("{t2}:{}{}{}{}", p[0], p[1], p[2], p[3]),
                    None => "-".into(),
                })
                .collect();
            let _ = writeln!(s, "{}", cols.join(" "));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Triangulation> {
        let bad = |m: &str| Error::InvalidTriangulation(m.to_string());
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let n: usize = header
            .strip_prefix("tetrahedra ")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| bad("expected `tetrahedra N`"))?;
        let mut tri = Triangulation::with_size(n);
        for t in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| bad("missing tetrahedron line"))?;
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 4 {
                return Err(bad(&format!("line for tetrahedron {t} needs four entries")));
            }
            for (f, c) in cols.iter().enumerate() {
                if *c == "-" {
                    continue;
                }
                let (t2, p) = c
                    .split_once(':')
                    .ok_or_else(|| bad(&format!("bad entry `{c}`")))?;
                let t2: usize = t2.parse().map_err(|_| bad(&format!("bad entry `{c}`")))?;
                let digits: Vec<u8> = p.bytes().map(|b| b.wrapping_sub(b'0')).collect();
                if digits.len() != 4 {
                    return Err(bad(&format!("bad permutation `{p}`")));
                }
                tri.gluings[t][f] = Some((t2, [digits[0], digits[1], digits[2], digits[3]]));
            }
        }
        if lines.next().is_some() {
            return Err(bad("trailing lines"));
        }
        tri.validate()?;
        Ok(tri)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            schema: &'a str,
            tetrahedra: &'a [[Option<(usize, Perm)>; 4]],
        }
        serde_json::to_string_pretty(&Out {
            schema: "knotwidth/triangulation/v1",
            tetrahedra: &self.gluings,
        })
        .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Triangulation> {
        #[derive(Deserialize)]
        struct In {
            tetrahedra: Vec<[Option<(usize, Perm)>; 4]>,
        }
        let v: In = serde_json::from_str(s)?;
        let tri = Triangulation {
            gluings: v.tetrahedra,
        };
        tri.validate()?;
        Ok(tri)
    }

    /// Face-pairing graph in DOT, one edge per glued face pair.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph face_pairing {\n  node [shape=circle];\n");
        for t in 0..self.size() {
            let _ = writeln!(s, "  t{t};");
        }
        for (a, b) in self.face_pairings() {
            let _ = writeln!(s, "  t{a} -- t{b};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_helpers() {
        assert!(perm_is_even(IDENTITY));
        assert!(!perm_is_even([1, 0, 2, 3]));
        assert_eq!(perm_inverse([1, 2, 3, 0]), [3, 0, 1, 2]);
        let p = perm_from_faces([0, 1, 2], [1, 2, 3]);
        assert_eq!(p, [1, 2, 3, 0]);
    }

    #[test]
    fn single_tetrahedron_is_a_ball() {
        let t = Triangulation::with_size(1);
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.euler_characteristic(), 1);
        assert!(t.homology_h1().unwrap().is_trivial());
        assert_eq!(t.boundary_component_count(), 1);
    }

    #[test]
    fn join_rejects_double_gluing() {
        let mut t = Triangulation::with_size(2);
        t.join(0, 0, 1, IDENTITY).unwrap();
        assert!(t.join(0, 0, 1, [1, 0, 2, 3]).is_err());
        assert!(t.join(0, 1, 0, IDENTITY).is_err());
        t.validate().unwrap();
    }

    #[test]
    fn text_and_json_round_trip() {
        let mut t = Triangulation::with_size(2);
        t.join(0, 0, 1, IDENTITY).unwrap();
        t.join(0, 1, 1, [0, 2, 1, 3]).unwrap();
        assert_eq!(Triangulation::from_text(&t.to_text()).unwrap(), t);
        assert_eq!(Triangulation::from_json(&t.to_json()).unwrap(), t);
        assert!(Triangulation::from_text("tetrahedra 1\n1:0123 - - -\n").is_err());
    }
}
