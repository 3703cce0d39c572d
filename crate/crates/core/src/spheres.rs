//! Sphere-decompositions of knots built from realized curve families.
//!
//! Each chosen curve is the equator of a sphere meeting the knot once per
//! crossed edge. Cutting the carving tree at the chosen tree edges leaves the
//! complementary components: a component bounded by one sphere is a ball, one
//! bounded by three spheres is a solid pair of pants. The knot is traced
//! through the subdivided graph to obtain the arcs of each component's tangle.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::carving::CarvingDecomposition;
use crate::diagram::{SimpleDiagramGraph, VertexKind};
use crate::error::{Error, Result};
use crate::families::{pretzel_diagram, PretzelDiagram};
use crate::planar::{edge_of, twin, Dart, PlanarMap};
use crate::realize::{realize, CurveFamily};
use crate::subdivide_to_simple;

pub const SPHERES_SCHEMA: &str = "knotwidth/spheres/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sphere {
    pub weight: usize,
    pub components: [usize; 2],
    pub curve: Option<usize>,
    pub tree_edge: Option<usize>,
    /// The sphere cuts off a ball holding a single subdivision vertex.
    pub around_subdivision: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Ball,
    Pants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum TangleCertificate {
    /// One crossing: two bridges.
    SingleCrossing,
    /// One unknotted arc.
    SingleArc,
    /// A chain of bigons between consecutive crossings, a rational tangle.
    TwistRegion { crossings: usize },
    /// Half of a bridge position.
    Bridges { bridges: usize },
    /// Every arc runs in the pair of pants without crossings and is essential.
    Flat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleArc {
    pub ends: [usize; 2],
    pub crossings: Vec<usize>,
    pub essential: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub spheres: Vec<usize>,
    pub vertices: Vec<usize>,
    pub arcs: Vec<TangleArc>,
    pub certificate: TangleCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereDecomposition {
    pub spheres: Vec<Sphere>,
    pub components: Vec<Component>,
}

/// The knot as a cyclic sequence of darts of the subdivided graph.
pub fn knot_walk(map: &PlanarMap) -> Vec<Dart> {
    let mut walk = Vec::new();
    if map.dart_count() == 0 {
        return walk;
    }
    let mut d = 0;
    loop {
        walk.push(d);
        let arrive = twin(d);
        let r = map.rotation(map.tail(arrive));
        d = r[(map.slot(arrive) + r.len() / 2) % r.len()];
        if d == 0 || walk.len() > map.dart_count() {
            break;
        }
    }
    walk
}

/// Sphere-decomposition with one sphere per curve of the family.
pub fn spheres_from_carving(
    g: &SimpleDiagramGraph,
    dec: &CarvingDecomposition,
    fam: &CurveFamily,
) -> Result<SphereDecomposition> {
    let all: Vec<usize> = (0..fam.len()).collect();
    spheres_from_curves(g, dec, fam, &all)
}

/// Sphere-decomposition using only the curves listed in `selected`.
pub fn spheres_from_curves(
    g: &SimpleDiagramGraph,
    dec: &CarvingDecomposition,
    fam: &CurveFamily,
    selected: &[usize],
) -> Result<SphereDecomposition> {
    let map = g.map();
    if selected.is_empty() {
        return Err(Error::InvalidSphereDecomposition(
            "no spheres selected".into(),
        ));
    }
    let mut sphere_of_tree_edge = vec![None; dec.tree_edge_count()];
    for (s, &c) in selected.iter().enumerate() {
        let curve = fam
            .curves
            .get(c)
            .ok_or_else(|| Error::InvalidSphereDecomposition(format!("no curve {c}")))?;
        if sphere_of_tree_edge[curve.tree_edge].replace(s).is_some() {
            return Err(Error::InvalidSphereDecomposition(format!(
                "curve {c} selected twice"
            )));
        }
    }

    // Components are the pieces of the tree after cutting the selected edges.
    let nodes = dec.node_count();
    let mut comp_of = vec![usize::MAX; nodes];
    let adj = dec.adjacency();
    let edge_between = |a: usize, b: usize| {
        if dec.parent()[a] == Some(b) {
            dec.edge_above(a).unwrap()
        } else {
            dec.edge_above(b).unwrap()
        }
    };
    let mut n_comp = 0;
    for start in 0..nodes {
        if comp_of[start] != usize::MAX {
            continue;
        }
        comp_of[start] = n_comp;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp_of[y] == usize::MAX && sphere_of_tree_edge[edge_between(x, y)].is_none() {
                    comp_of[y] = n_comp;
                    stack.push(y);
                }
            }
        }
        n_comp += 1;
    }

    let mut spheres = Vec::new();
    let mut boundary = vec![Vec::new(); n_comp];
    for (s, &c) in selected.iter().enumerate() {
        let t = fam.curves[c].tree_edge;
        let (child, parent) = dec.tree_edges()[t];
        let components = [comp_of[child], comp_of[parent]];
        boundary[components[0]].push(s);
        boundary[components[1]].push(s);
        let side = dec.side(t);
        let inside: Vec<usize> = (0..side.len()).filter(|&v| side[v]).collect();
        let outside = side.len() - inside.len();
        let lone = if inside.len() == 1 {
            Some(inside[0])
        } else if outside == 1 {
            side.iter().position(|x| !x)
        } else {
            None
        };
        spheres.push(Sphere {
            weight: fam.curves[c].crossings.len(),
            components,
            curve: Some(c),
            tree_edge: Some(t),
            around_subdivision: lone.is_some_and(|v| g.kind(v) == VertexKind::Subdivision),
        });
    }
    let mut vertices = vec![Vec::new(); n_comp];
    for v in 0..g.vertex_count() {
        vertices[comp_of[dec.leaf_of(v)]].push(v);
    }

    // Trace the knot: every directed edge runs along the tree path between its end leaves.
    let walk = knot_walk(map);
    if walk.len() != map.dart_count() / 2 {
        return Err(Error::InvalidSphereDecomposition(
            "subdivided graph is not a single knot".into(),
        ));
    }
    let mut events: Vec<(usize, usize)> = Vec::new(); // (sphere crossed, component entered)
    let mut visited: Vec<Vec<usize>> = Vec::new(); // crossing vertices met before each event
    let mut pending: Vec<usize> = Vec::new();
    for &d in &walk {
        let (a, b) = (map.tail(d), map.head(d));
        if g.kind(a) == VertexKind::Crossing {
            pending.push(a);
        }
        let e = edge_of(d);
        let list = &fam.positions[e];
        let from_first = map.ends(e)[0] == a;
        let order: Vec<usize> = if from_first {
            list.clone()
        } else {
            list.iter().rev().copied().collect()
        };
        let mut node_here = dec.leaf_of(a);
        for &c in &order {
            let t = fam.curves[c].tree_edge;
            let (child, parent) = dec.tree_edges()[t];
            node_here = if node_here == child { parent } else { child };
            if let Some(s) = sphere_of_tree_edge[t] {
                events.push((s, comp_of[node_here]));
                visited.push(std::mem::take(&mut pending));
            }
        }
        debug_assert_eq!(node_here, dec.leaf_of(b));
    }
    if events.is_empty() {
        return Err(Error::InvalidSphereDecomposition(
            "knot misses every sphere".into(),
        ));
    }
    // Crossings seen after the last event belong to the arc that wraps around.
    let wrap = std::mem::take(&mut pending);
    visited[0].splice(0..0, wrap);
    let mut arcs_of = vec![Vec::new(); n_comp];
    for i in 0..events.len() {
        let (s_in, comp) = events[i];
        let next = (i + 1) % events.len();
        let (s_out, _) = events[next];
        arcs_of[comp].push(TangleArc {
            ends: [s_in, s_out],
            crossings: visited[next].clone(),
            essential: true,
        });
    }

    let mut components = Vec::with_capacity(n_comp);
    for (c, arcs) in arcs_of.into_iter().enumerate() {
        let comp = classify_component(g, c, boundary[c].clone(), vertices[c].clone(), arcs)?;
        components.push(comp);
    }
    let sd = SphereDecomposition {
        spheres,
        components,
    };
    sd.validate()?;
    Ok(sd)
}

/// Classifies one complementary component and certifies its tangle.
pub fn classify_component(
    g: &SimpleDiagramGraph,
    id: usize,
    spheres: Vec<usize>,
    vertices: Vec<usize>,
    mut arcs: Vec<TangleArc>,
) -> Result<Component> {
    let crossings: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| g.kind(v) == VertexKind::Crossing)
        .collect();
    match spheres.len() {
        1 => {
            let certificate = match (crossings.len(), arcs.len()) {
                (0, 1) => TangleCertificate::SingleArc,
                (1, 2) if vertices.len() == 1 => TangleCertificate::SingleCrossing,
                (k, 2) if is_twist_region(g, &vertices) => {
                    TangleCertificate::TwistRegion { crossings: k }
                }
                _ => {
                    return Err(Error::InvalidSphereDecomposition(format!(
                        "ball {id} holds {} crossings and {} arcs with no triviality certificate",
                        crossings.len(),
                        arcs.len()
                    )))
                }
            };
            Ok(Component {
                kind: ComponentKind::Ball,
                spheres,
                vertices,
                arcs,
                certificate,
            })
        }
        3 => {
            if !crossings.is_empty() {
                return Err(Error::InvalidSphereDecomposition(format!(
                    "pants {id} contains crossings"
                )));
            }
            for (i, arc) in arcs.iter_mut().enumerate() {
                // An arc returning to its own boundary circle would need a
                // separation certificate; carvings never produce one.
                arc.essential = arc.ends[0] != arc.ends[1];
                if !arc.essential {
                    return Err(Error::InessentialStrand {
                        component: id,
                        strand: i,
                    });
                }
            }
            Ok(Component {
                kind: ComponentKind::Pants,
                spheres,
                vertices,
                arcs,
                certificate: TangleCertificate::Flat,
            })
        }
        0..=2 => Err(Error::InvalidSphereDecomposition(format!(
            "component {id} is bounded by {} spheres",
            spheres.len()
        ))),
        k => Err(Error::TooManyBoundaries {
            component: id,
            spheres: k,
        }),
    }
}

/// Crossings joined in a path by pairs of edges (through subdivision vertices), with four loose ends.
fn is_twist_region(g: &SimpleDiagramGraph, vertices: &[usize]) -> bool {
    let map = g.map();
    let inside = |v: usize| vertices.contains(&v);
    let crossings: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| g.kind(v) == VertexKind::Crossing)
        .collect();
    if crossings.is_empty() {
        return false;
    }
    // Follow each dart through subdivision vertices to the next crossing or out of the ball.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut loose = 0;
    for &c in &crossings {
        for &d0 in map.rotation(c) {
            let mut d = d0;
            loop {
                let w = map.head(d);
                if !inside(w) {
                    loose += 1;
                    break;
                }
                if g.kind(w) == VertexKind::Crossing {
                    if c < w {
                        pairs.push((c, w));
                    } else if c == w {
                        return false;
                    }
                    break;
                }
                let r = map.rotation(w);
                d = if r[0] == twin(d) { r[1] } else { r[0] };
            }
        }
    }
    if loose != 4 || pairs.len() != 2 * (crossings.len() - 1) {
        return false;
    }
    pairs.sort_unstable();
    let mut degree = std::collections::HashMap::new();
    for chunk in pairs.chunks(2) {
        if chunk[0] != chunk[1] {
            return false;
        }
        *degree.entry(chunk[0].0).or_insert(0) += 1;
        *degree.entry(chunk[0].1).or_insert(0) += 1;
    }
    degree.values().all(|&k| k <= 2)
}

impl SphereDecomposition {
    /// Abstract bridge position: one sphere of weight `2b` between two balls of `b` bridges.
    pub fn bridge_sphere(b: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidSphereDecomposition(
                "bridge number must be positive".into(),
            ));
        }
        let ball = |_| Component {
            kind: ComponentKind::Ball,
            spheres: vec![0],
            vertices: Vec::new(),
            arcs: (0..b)
                .map(|_| TangleArc {
                    ends: [0, 0],
                    crossings: Vec::new(),
                    essential: true,
                })
                .collect(),
            certificate: TangleCertificate::Bridges { bridges: b },
        };
        let sd = SphereDecomposition {
            spheres: vec![Sphere {
                weight: 2 * b,
                components: [0, 1],
                curve: None,
                tree_edge: None,
                around_subdivision: false,
            }],
            components: (0..2).map(ball).collect(),
        };
        sd.validate()?;
        Ok(sd)
    }

    pub fn weights(&self) -> Vec<usize> {
        self.spheres.iter().map(|s| s.weight).collect()
    }

    /// Sphere weights in non-increasing order.
    pub fn width_list(&self) -> Vec<usize> {
        let mut w = self.weights();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }

    /// Width list without spheres that only cut off a subdivision vertex.
    pub fn pruned_width_list(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self
            .spheres
            .iter()
            .filter(|s| !s.around_subdivision)
            .map(|s| s.weight)
            .collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }

    pub fn cost(&self) -> usize {
        self.weights().into_iter().max().unwrap_or(0)
    }

    pub fn ball_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Ball)
            .count()
    }

    pub fn pants_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Pants)
            .count()
    }

    /// Structural checks: a tree of components, consistent weights and tangles.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSphereDecomposition(m));
        let n = self.components.len();
        if n != self.spheres.len() + 1 {
            return bad(format!("{n} components for {} spheres", self.spheres.len()));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut ends_on = vec![0usize; self.spheres.len()];
        for (s, sphere) in self.spheres.iter().enumerate() {
            let [a, b] = sphere.components;
            if a >= n || b >= n || a == b {
                return bad(format!("sphere {s} has invalid sides"));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return bad(format!("sphere {s} closes a cycle in the component tree"));
            }
            parent[ra] = rb;
            if sphere.weight == 0 || sphere.weight % 2 != 0 {
                return bad(format!("sphere {s} has weight {}", sphere.weight));
            }
            for c in [a, b] {
                if !self.components[c].spheres.contains(&s) {
                    return bad(format!("component {c} does not list its sphere {s}"));
                }
            }
        }
        for (c, comp) in self.components.iter().enumerate() {
            let want = match comp.kind {
                ComponentKind::Ball => 1,
                ComponentKind::Pants => 3,
            };
            if comp.spheres.len() != want {
                return bad(format!(
                    "component {c} has {} boundary spheres",
                    comp.spheres.len()
                ));
            }
            for arc in &comp.arcs {
                for s in arc.ends {
                    if !comp.spheres.contains(&s) {
                        return bad(format!("arc in component {c} ends on foreign sphere {s}"));
                    }
                    ends_on[s] += 1;
                }
                if comp.kind == ComponentKind::Pants
                    && (!arc.essential || arc.ends[0] == arc.ends[1])
                {
                    return bad(format!("pants {c} has an inessential arc"));
                }
            }
        }
        for (s, sphere) in self.spheres.iter().enumerate() {
            if ends_on[s] != 2 * sphere.weight {
                return bad(format!(
                    "sphere {s} has weight {} but {} arc ends",
                    sphere.weight, ends_on[s]
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            schema: &'a str,
            #[serde(flatten)]
            sd: &'a SphereDecomposition,
        }
        serde_json::to_string_pretty(&Record {
            schema: SPHERES_SCHEMA,
            sd: self,
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Record {
            schema: String,
            #[serde(flatten)]
            sd: SphereDecomposition,
        }
        let rec: Record = serde_json::from_str(text)?;
        if rec.schema != SPHERES_SCHEMA {
            return Err(Error::Json(format!("unexpected schema {:?}", rec.schema)));
        }
        rec.sd.validate()?;
        Ok(rec.sd)
    }

    pub fn report(&self) -> String {
        let mut s = String::new();
        let list = |w: Vec<usize>| {
            w.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(
            s,
            "spheres: {}  balls: {}  pants: {}",
            self.spheres.len(),
            self.ball_count(),
            self.pants_count()
        );
        let _ = writeln!(s, "cost: {}", self.cost());
        let _ = writeln!(s, "width: {{{}}}", list(self.width_list()));
        let _ = writeln!(s, "pruned width: {{{}}}", list(self.pruned_width_list()));
        for (i, sphere) in self.spheres.iter().enumerate() {
            let _ = writeln!(
                s,
                "  sphere {i}: weight {} between components {} and {}",
                sphere.weight, sphere.components[0], sphere.components[1]
            );
        }
        for (i, c) in self.components.iter().enumerate() {
            let kind = match c.kind {
                ComponentKind::Ball => "ball",
                ComponentKind::Pants => "pants",
            };
            let _ = writeln!(
                s,
                "  component {i}: {kind}, spheres {:?}, {} arcs, {:?}",
                c.spheres,
                c.arcs.len(),
                c.certificate
            );
        }
        s
    }

    /// The family's diagram drawing with this decomposition's equators.
    pub fn to_svg(&self, g: &SimpleDiagramGraph, fam: &CurveFamily) -> String {
        let curves: Vec<usize> = self.spheres.iter().filter_map(|s| s.curve).collect();
        fam.to_svg(g, Some(&curves))
    }
}

/// Pretzel diagram with the carving that groups each twist column into one
/// subtree, its curve family, and the three-sphere decomposition around the columns.
#[derive(Debug, Clone)]
pub struct PretzelSpheres {
    pub pretzel: PretzelDiagram,
    pub graph: SimpleDiagramGraph,
    pub carving: CarvingDecomposition,
    pub curves: CurveFamily,
    pub column_curves: [usize; 3],
    pub decomposition: SphereDecomposition,
}

pub fn pretzel_natural_decomposition(a: i64, b: i64, c: i64) -> Result<PretzelSpheres> {
    let pretzel = pretzel_diagram(a, b, c)?;
    let graph = subdivide_to_simple(&pretzel.diagram);
    let g = graph.graph();
    let map = graph.map();
    let mut block = vec![usize::MAX; graph.vertex_count()];
    for (k, col) in pretzel.columns.iter().enumerate() {
        for &v in col {
            block[v] = k;
        }
    }
    // Subdivision vertices join the column of the crossing they hang off.
    for v in 0..graph.vertex_count() {
        if block[v] == usize::MAX {
            let mut d = map.rotation(v)[0];
            while block[map.head(d)] == usize::MAX
                || graph.kind(map.head(d)) == VertexKind::Subdivision
            {
                let w = map.head(d);
                let r = map.rotation(w);
                d = if r[0] == twin(d) { r[1] } else { r[0] };
            }
            block[v] = block[map.head(d)];
        }
    }
    let mut leaf_vertex: Vec<Option<usize>> = (0..graph.vertex_count()).map(Some).collect();
    let mut edges = Vec::new();
    let mut tops = Vec::new();
    for k in 0..3 {
        let members: Vec<usize> = (0..graph.vertex_count())
            .filter(|&v| block[v] == k)
            .collect();
        // Grow each column as a connected caterpillar in breadth-first order.
        let mut order = vec![members[0]];
        let mut i = 0;
        while i < order.len() {
            for &w in &g.neighbors()[order[i]] {
                if block[w] == k && !order.contains(&w) {
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut acc = order[0];
        for &v in &order[1..] {
            leaf_vertex.push(None);
            let join = leaf_vertex.len() - 1;
            edges.push((acc, join));
            edges.push((v, join));
            acc = join;
        }
        tops.push(acc);
    }
    leaf_vertex.push(None);
    let centre = leaf_vertex.len() - 1;
    for &t in &tops {
        edges.push((t, centre));
    }
    let carving = CarvingDecomposition::from_tree_edges(&g, &edges, leaf_vertex)?;
    let curves = realize(&graph, &carving)?;
    let mut column_curves = [0; 3];
    for (k, &t) in tops.iter().enumerate() {
        let te = if carving.parent()[t] == Some(centre) {
            carving.edge_above(t)
        } else {
            carving.edge_above(centre)
        };
        let te = te.expect("column joins the centre");
        column_curves[k] = curves
            .curves
            .iter()
            .position(|c| c.tree_edge == te)
            .unwrap();
    }
    let decomposition = spheres_from_curves(&graph, &carving, &curves, &column_curves)?;
    Ok(PretzelSpheres {
        pretzel,
        graph,
        carving,
        curves,
        column_curves,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carving::exact_carving_width;
    use crate::parse_pd;

    #[test]
    fn trefoil_sphere_census() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let g = subdivide_to_simple(&d);
        let (w, dec) = exact_carving_width(&g.graph(), true).unwrap();
        let fam = realize(&g, &dec).unwrap();
        let sd = spheres_from_carving(&g, &dec, &fam).unwrap();
        let leaves = g.vertex_count();
        assert_eq!(sd.ball_count(), leaves);
        assert_eq!(sd.pants_count(), leaves - 2);
        assert_eq!(sd.spheres.len(), 2 * leaves - 3);
        assert!(sd.cost() <= w);
        for c in &sd.components {
            if c.kind == ComponentKind::Ball && g.kind(c.vertices[0]) == VertexKind::Crossing {
                assert_eq!(c.certificate, TangleCertificate::SingleCrossing);
                assert_eq!(c.arcs.len(), 2);
            }
        }
        assert_eq!(SphereDecomposition::from_json(&sd.to_json()).unwrap(), sd);
    }

    #[test]
    fn pretzel_natural_width() {
        let p = pretzel_natural_decomposition(-2, 3, 7).unwrap();
        let sd = &p.decomposition;
        assert_eq!(sd.width_list(), vec![4, 4, 4]);
        assert_eq!(sd.cost(), 4);
        assert_eq!(sd.ball_count(), 3);
        assert_eq!(sd.pants_count(), 1);
        let pants = sd
            .components
            .iter()
            .find(|c| c.kind == ComponentKind::Pants)
            .unwrap();
        assert_eq!(pants.arcs.len(), 6);
        assert!(pants.arcs.iter().all(|a| a.essential));
        let twists: Vec<_> = sd
            .components
            .iter()
            .filter_map(|c| match c.certificate {
                TangleCertificate::TwistRegion { crossings } => Some(crossings),
                _ => None,
            })
            .collect();
        assert_eq!(twists.len(), 3);
    }

    #[test]
    fn bridge_sphere_width() {
        let sd = SphereDecomposition::bridge_sphere(3).unwrap();
        assert_eq!(sd.width_list(), vec![6]);
        assert_eq!(sd.cost(), 6);
    }
}
