//! Knot diagrams as 4-valent graphs embedded in the sphere.
//!
//! A crossing lists its four darts counterclockwise; slots 0 and 2 always carry
//! the under-strand and slots 1 and 3 the over-strand. PD codes follow the usual
//! convention: each `X[a,b,c,d]` lists edge labels counterclockwise starting
//! from the incoming under-strand.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::{edge_of, twin, Dart, PlanarMap};

pub const DIAGRAM_SCHEMA: &str = "knotwidth/diagram/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Crossing,
    Subdivision,
}

impl VertexKind {
    pub fn degree(self) -> usize {
        match self {
            VertexKind::Crossing => 4,
            VertexKind::Subdivision => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    map: PlanarMap,
    kinds: Vec<VertexKind>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRecord {
    schema: String,
    kinds: Vec<VertexKind>,
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<Dart>>,
}

impl Diagram {
    /// Builds a diagram from crossings given as four edge labels in
    /// counterclockwise order, under-strand in slots 0 and 2. Every label must
    /// occur exactly twice.
    pub fn from_crossings(crossings: &[[i64; 4]]) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(Self::round_unknot(3));
        }
        let mut occurrences: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, labels) in crossings.iter().enumerate() {
            for (slot, &l) in labels.iter().enumerate() {
                occurrences.entry(l).or_default().push((c, slot));
            }
        }
        let mut ends = Vec::with_capacity(occurrences.len());
        let mut rotation = vec![vec![usize::MAX; 4]; crossings.len()];
        for (&label, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(Error::EdgeMultiplicity {
                    label,
                    count: occ.len(),
                });
            }
            let e = ends.len();
            ends.push([occ[0].0, occ[1].0]);
            rotation[occ[0].0][occ[0].1] = 2 * e;
            rotation[occ[1].0][occ[1].1] = 2 * e + 1;
        }
        let map = PlanarMap::new(ends, rotation)?;
        let d = Self {
            map,
            kinds: vec![VertexKind::Crossing; crossings.len()],
        };
        d.validate()?;
        Ok(d)
    }

    /// The 0-crossing unknot as a cycle of `n >= 3` subdivision vertices.
    pub fn round_unknot(n: usize) -> Self {
        let n = n.max(3);
        let ends = (0..n).map(|i| [i, (i + 1) % n]).collect();
        let rotation = (0..n)
            .map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1])
            .collect();
        let map = PlanarMap::new(ends, rotation).expect("cycle rotation is well formed");
        Self {
            map,
            kinds: vec![VertexKind::Subdivision; n],
        }
    }

    pub fn from_parts(map: PlanarMap, kinds: Vec<VertexKind>) -> Result<Self> {
        let d = Self { map, kinds };
        d.validate()?;
        Ok(d)
    }

    /// Checks degrees, connectivity, the Euler relation and that the strands
    /// close up into a single knot.
    pub fn validate(&self) -> Result<()> {
        if self.kinds.len() != self.map.vertex_count() {
            return Err(Error::InvalidDiagram("vertex kind count mismatch".into()));
        }
        for (v, k) in self.kinds.iter().enumerate() {
            if self.map.degree(v) != k.degree() {
                return Err(Error::InvalidDiagram(format!(
                    "vertex {v} has degree {}, expected {}",
                    self.map.degree(v),
                    k.degree()
                )));
            }
        }
        if !self.map.is_connected() {
            return Err(Error::Disconnected);
        }
        let euler = self.map.euler_characteristic();
        if euler != 2 {
            return Err(Error::NotPlanar { euler });
        }
        let components = self.component_count();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        Ok(())
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|&&k| k == VertexKind::Crossing)
            .count()
    }

    pub fn faces(&self) -> Vec<Vec<Dart>> {
        self.map.faces()
    }

    /// The dart continuing the strand that arrives along `d`.
    pub fn strand_next(&self, d: Dart) -> Dart {
        let arrive = twin(d);
        let v = self.map.tail(arrive);
        let r = self.map.rotation(v);
        let s = self.map.slot(arrive);
        r[(s + r.len() / 2) % r.len()]
    }

    /// Number of closed strands obtained by going straight through every crossing.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.map.dart_count()];
        let mut orbits = 0;
        for start in 0..self.map.dart_count() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.strand_next(d);
            }
        }
        orbits / 2
    }

    pub fn graph(&self) -> Graph {
        Graph::from_map(&self.map)
    }

    /// A diagram is reduced when its graph has no cut vertex, i.e. no nugatory crossing.
    pub fn is_reduced(&self) -> bool {
        let g = self.graph();
        self.has_no_loops()
            && (g.vertex_count() < 2 || (g.bridges().is_empty() && g.cut_vertices().is_empty()))
    }

    fn has_no_loops(&self) -> bool {
        self.map.edges().iter().all(|&[a, b]| a != b)
    }

    /// PD code with labels `1..=2n` numbered along the knot.
    pub fn to_pd(&self) -> Result<String> {
        if self.kinds.iter().any(|&k| k != VertexKind::Crossing) {
            return Err(Error::InvalidDiagram(
                "PD codes need a diagram without subdivision vertices".into(),
            ));
        }
        let n_darts = self.map.dart_count();
        // Walk the knot once, leaving crossing 0 along slot 2 so slot 0 is incoming.
        let mut label = vec![0usize; self.edge_count()];
        let mut incoming = vec![false; n_darts];
        let mut d = self.map.rotation(0)[2];
        for next_label in 1..=self.edge_count() {
            label[edge_of(d)] = next_label;
            incoming[twin(d)] = true;
            d = self.strand_next(d);
        }
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            let r = self.map.rotation(v);
            let start = if incoming[r[0]] { 0 } else { 2 };
            let labels: Vec<String> = (0..4)
                .map(|i| label[edge_of(r[(start + i) % 4])].to_string())
                .collect();
            if !out.is_empty() {
                out.push(' ');
            }
            let _ = write!(out, "X[{}]", labels.join(","));
        }
        Ok(out)
    }

    /// Orientation-preserving isomorphism of the underlying maps that respects
    /// vertex kinds and over/under information.
    pub fn is_isomorphic(&self, other: &Diagram) -> bool {
        let (a, b) = (&self.map, &other.map);
        if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        if a.dart_count() == 0 {
            return self.kinds == other.kinds;
        }
        'candidate: for x0 in 0..b.dart_count() {
            let mut fwd = vec![usize::MAX; a.dart_count()];
            let mut back = vec![usize::MAX; b.dart_count()];
            let mut queue = vec![(0, x0)];
            while let Some((d, x)) = queue.pop() {
                if fwd[d] == x {
                    continue;
                }
                if fwd[d] != usize::MAX || back[x] != usize::MAX {
                    continue 'candidate;
                }
                let (vd, vx) = (a.tail(d), b.tail(x));
                if self.kinds[vd] != other.kinds[vx] || a.slot(d) % 2 != b.slot(x) % 2 {
                    continue 'candidate;
                }
                fwd[d] = x;
                back[x] = d;
                queue.push((twin(d), twin(x)));
                queue.push((a.rot_succ(d), b.rot_succ(x)));
            }
            if fwd.iter().all(|&x| x != usize::MAX) {
                return true;
            }
        }
        false
    }

    pub fn to_json(&self) -> String {
        let rec = DiagramRecord {
            schema: DIAGRAM_SCHEMA.into(),
            kinds: self.kinds.clone(),
            edges: self.map.edges().to_vec(),
            rotation: (0..self.vertex_count())
                .map(|v| self.map.rotation(v).to_vec())
                .collect(),
        };
        serde_json::to_string_pretty(&rec).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rec: DiagramRecord = serde_json::from_str(text)?;
        if rec.schema != DIAGRAM_SCHEMA {
            return Err(Error::Json(format!("unsupported schema {:?}", rec.schema)));
        }
        Self::from_parts(PlanarMap::new(rec.edges, rec.rotation)?, rec.kinds)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph diagram {\n");
        for (v, k) in self.kinds.iter().enumerate() {
            let shape = match k {
                VertexKind::Crossing => "circle",
                VertexKind::Subdivision => "point",
            };
            let _ = writeln!(s, "  v{v} [shape={shape}];");
        }
        for (e, &[a, b]) in self.map.edges().iter().enumerate() {
            let _ = writeln!(s, "  v{a} -- v{b} [label=\"e{e}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// Parses PD notation. Accepts `X[1,4,2,5] X[3,6,4,1] ...`, an optional
/// `PD[...]` wrapper, or bare nested lists like `[[1,4,2,5],[3,6,4,1]]`.
/// An input without any tuple is the 0-crossing unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let tuples = pd_tuples(text)?;
    for (c, t) in tuples.iter().enumerate() {
        if t.len() != 4 {
            return Err(Error::PdArity {
                crossing: c,
                arity: t.len(),
            });
        }
    }
    let crossings: Vec<[i64; 4]> = tuples.iter().map(|t| [t[0], t[1], t[2], t[3]]).collect();
    Diagram::from_crossings(&crossings)
}

fn pd_tuples(text: &str) -> Result<Vec<Vec<i64>>> {
    // Every innermost bracketed group is one crossing.
    let mut tuples = Vec::new();
    let mut depth_stack: Vec<(usize, bool)> = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    for (i, &ch) in chars.iter().enumerate() {
        match ch {
            '[' | '(' => {
                if let Some(top) = depth_stack.last_mut() {
                    top.1 = true;
                }
                depth_stack.push((i, false));
            }
            ']' | ')' => {
                let (start, has_inner) = depth_stack
                    .pop()
                    .ok_or_else(|| Error::PdSyntax(format!("unbalanced bracket at {i}")))?;
                if !has_inner {
                    let body: String = chars[start + 1..i].iter().collect();
                    let body = body.trim();
                    if body.is_empty() {
                        continue;
                    }
                    let nums = body
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::PdSyntax(format!("bad label {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    tuples.push(nums);
                }
            }
            c if c.is_ascii_digit() || c == ',' || c == '-' || c.is_whitespace() => {}
            'X' | 'P' | 'D' | ';' => {}
            c => return Err(Error::PdSyntax(format!("unexpected character {c:?}"))),
        }
    }
    if !depth_stack.is_empty() {
        return Err(Error::PdSyntax("unbalanced brackets".into()));
    }
    Ok(tuples)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexOrigin {
    Diagram(usize),
    /// `index`-th subdivision vertex along diagram edge `edge`, from its tail.
    Subdivision {
        edge: usize,
        index: usize,
    },
}

/// A diagram graph subdivided until it is simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDiagramGraph {
    map: PlanarMap,
    origin: Vec<VertexOrigin>,
    edge_origin: Vec<usize>,
    kinds: Vec<VertexKind>,
}

/// Subdivides self-loops twice and all but one edge of every parallel class
/// once; this is the fewest subdivision vertices that make the graph simple.
pub fn subdivide_to_simple(d: &Diagram) -> SimpleDiagramGraph {
    let map = d.map();
    let mut counts = vec![0usize; map.edge_count()];
    let mut classes: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (e, &[a, b]) in map.edges().iter().enumerate() {
        if a == b {
            counts[e] = 2;
        } else {
            classes.entry((a.min(b), a.max(b))).or_default().push(e);
        }
    }
    for class in classes.values() {
        for &e in &class[..class.len() - 1] {
            counts[e] = 1;
        }
    }

    let n0 = map.vertex_count();
    let mut origin: Vec<VertexOrigin> = (0..n0).map(VertexOrigin::Diagram).collect();
    let mut kinds = d.kinds().to_vec();
    let mut ends = Vec::new();
    let mut edge_origin = Vec::new();
    let mut rotation: Vec<Vec<Dart>> = (0..n0).map(|v| map.rotation(v).to_vec()).collect();
    // Darts of the original edge at its tail and head are replaced below.
    let mut replace = vec![usize::MAX; map.dart_count()];
    for e in 0..map.edge_count() {
        let [a, b] = map.ends(e);
        let k = counts[e];
        let mut chain = vec![a];
        for index in 0..k {
            chain.push(origin.len());
            origin.push(VertexOrigin::Subdivision { edge: e, index });
            kinds.push(VertexKind::Subdivision);
            rotation.push(Vec::with_capacity(2));
        }
        chain.push(b);
        let first = ends.len();
        for w in chain.windows(2) {
            let ne = ends.len();
            ends.push([w[0], w[1]]);
            edge_origin.push(e);
            if w[0] >= n0 {
                rotation[w[0]].push(2 * ne);
            }
            if w[1] >= n0 {
                rotation[w[1]].push(2 * ne + 1);
            }
        }
        let last = ends.len() - 1;
        replace[2 * e] = 2 * first;
        replace[2 * e + 1] = 2 * last + 1;
    }
    for r in rotation.iter_mut().take(n0) {
        for d in r.iter_mut() {
            *d = replace[*d];
        }
    }
    let map = PlanarMap::new(ends, rotation).expect("subdivision preserves the rotation system");
    SimpleDiagramGraph {
        map,
        origin,
        edge_origin,
        kinds,
    }
}

impl SimpleDiagramGraph {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn graph(&self) -> Graph {
        Graph::from_map(&self.map)
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn origin(&self, v: usize) -> VertexOrigin {
        self.origin[v]
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.map.degree(v)
    }

    /// Diagram edge that simple edge `e` subdivides.
    pub fn edge_origin(&self, e: usize) -> usize {
        self.edge_origin[e]
    }

    pub fn added_vertices(&self) -> usize {
        self.origin
            .iter()
            .filter(|o| matches!(o, VertexOrigin::Subdivision { .. }))
            .count()
    }

    pub fn is_simple(&self) -> bool {
        self.map.edges().iter().all(|&[a, b]| a != b) && self.graph().is_simple()
    }

    /// Contracts every added subdivision vertex, returning the endpoints of
    /// each original diagram edge (indexed by diagram edge).
    pub fn contract_subdivisions(&self) -> Vec<[usize; 2]> {
        let n_orig = self
            .origin
            .iter()
            .filter(|o| matches!(o, VertexOrigin::Diagram(_)))
            .count();
        let n_edges = self.edge_origin.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![[usize::MAX; 2]; n_edges];
        for (e, &[a, b]) in self.map.edges().iter().enumerate() {
            let de = self.edge_origin[e];
            if a < n_orig {
                out[de][0] = a;
            }
            if b < n_orig {
                out[de][1] = b;
            }
        }
        out
    }

    pub fn dual(&self) -> PlanarMap {
        self.map.dual()
    }

    pub fn to_dot(&self) -> String {
        self.map.to_dot("simple")
    }
}

/// Planar dual of an embedded graph; dual edge `e` crosses primal edge `e`.
pub fn dual_graph(g: &SimpleDiagramGraph) -> PlanarMap {
    g.dual()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn trefoil_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.faces().len(), 5);
        assert_eq!(d.map().euler_characteristic(), 2);
    }

    #[test]
    fn one_crossing_with_swapped_labels_is_rejected() {
        // Both labels joining opposite slots: not planar.
        let err = parse_pd("X[1,2,1,2]").unwrap_err();
        assert_eq!(err, Error::NotPlanar { euler: 0 });
    }

    #[test]
    fn kinked_unknot_is_accepted() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(d.faces().len(), 3);
        let s = subdivide_to_simple(&d);
        assert_eq!(s.added_vertices(), 4);
        assert!(s.is_simple());
        assert!(!d.is_reduced());
    }

    #[test]
    fn pd_errors() {
        assert!(matches!(
            parse_pd("X[1,2,3]"),
            Err(Error::PdArity {
                crossing: 0,
                arity: 3
            })
        ));
        assert!(matches!(
            parse_pd("X[1,2,3,4]"),
            Err(Error::EdgeMultiplicity { .. })
        ));
        assert!(matches!(parse_pd("X[1,2,3,4"), Err(Error::PdSyntax(_))));
        // Hopf link: two components.
        assert_eq!(
            parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap_err(),
            Error::NotAKnot { components: 2 }
        );
    }

    #[test]
    fn alternative_pd_syntax() {
        let a = parse_pd(TREFOIL).unwrap();
        let b = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        let c = parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(a.is_isomorphic(&c));
    }

    #[test]
    fn round_unknot_has_two_faces() {
        let d = parse_pd("").unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.faces().len(), 2);
        let s = subdivide_to_simple(&d);
        assert_eq!(s.added_vertices(), 0);
        assert_eq!(s.map(), d.map());
    }

    #[test]
    fn trefoil_subdivision_is_simple() {
        let d = parse_pd(TREFOIL).unwrap();
        let s = subdivide_to_simple(&d);
        assert!(s.is_simple());
        assert_eq!(s.added_vertices(), 3);
        assert_eq!(s.map().euler_characteristic(), 2);
        let deg4 = (0..s.vertex_count()).filter(|&v| s.degree(v) == 4).count();
        assert_eq!(deg4, 3);
        assert_eq!(s.contract_subdivisions(), d.map().edges().to_vec());
    }

    #[test]
    fn trefoil_dual() {
        let s = subdivide_to_simple(&parse_pd(TREFOIL).unwrap());
        let dual = dual_graph(&s);
        assert_eq!(dual.vertex_count(), 5);
        assert_eq!(dual.edge_count(), s.edge_count());
        // Each dual edge joins the two faces on either side of its primal edge.
        let (_, of) = s.map().dart_faces();
        for e in 0..s.edge_count() {
            assert_eq!(dual.ends(e), [of[2 * e], of[2 * e + 1]]);
        }
    }

    #[test]
    fn pd_round_trip() {
        let d = parse_pd(TREFOIL).unwrap();
        let again = parse_pd(&d.to_pd().unwrap()).unwrap();
        assert!(d.is_isomorphic(&again));
    }

    #[test]
    fn json_round_trip() {
        let d = parse_pd(TREFOIL).unwrap();
        let back = Diagram::from_json(&d.to_json()).unwrap();
        assert_eq!(d, back);
        assert!(Diagram::from_json(&d.to_json().replace("v1", "v9")).is_err());
    }
}
