//! Disjoint Jordan curves realizing a bond carving decomposition.
//!
//! The cut of a bond tree edge is a simple cycle in the dual graph, so its
//! curve is recorded as the cyclic list of primal edges it crosses and the
//! faces it runs through between them. Curves sharing a primal edge are
//! ordered along it by their position on the tree path between the edge's
//! endpoint leaves; within each face the resulting chords never interleave.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::carving::CarvingDecomposition;
use crate::diagram::{SimpleDiagramGraph, VertexKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{svg_document, tutte_layout, PALETTE};
use crate::planar::{edge_of, twin, Dart, PlanarMap};

pub const CURVES_SCHEMA: &str = "knotwidth/curves/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub tree_edge: usize,
    /// Darts crossed, in order; each dart leaves the inside.
    pub crossings: Vec<Dart>,
    /// `faces[i]` is the face entered after `crossings[i]`.
    pub faces: Vec<usize>,
    pub inside: Vec<bool>,
}

impl Curve {
    pub fn crossed_edges(&self) -> Vec<usize> {
        self.crossings.iter().map(|&d| edge_of(d)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFamily {
    pub curves: Vec<Curve>,
    /// Curves crossing each primal edge, listed from the edge's first endpoint.
    pub positions: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizationReport {
    pub checks: Vec<Check>,
}

impl RealizationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        });
    }
}

pub fn realize(g: &SimpleDiagramGraph, dec: &CarvingDecomposition) -> Result<CurveFamily> {
    realize_on_map(g.map(), dec)
}

pub fn realize_on_map(map: &PlanarMap, dec: &CarvingDecomposition) -> Result<CurveFamily> {
    if map.edges().iter().any(|&[a, b]| a == b) {
        return Err(Error::Realization("embedded graph has a self-loop".into()));
    }
    let graph = Graph::from_map(map);
    if dec.leaf_count() != map.vertex_count() {
        return Err(Error::Realization(
            "decomposition does not match the graph".into(),
        ));
    }
    dec.check_bond(&graph)?;
    let (_, face_of) = map.dart_faces();

    let mut curves = Vec::with_capacity(dec.tree_edge_count());
    for t in 0..dec.tree_edge_count() {
        let inside = dec.side(t).to_vec();
        let leaving: Vec<Dart> = (0..map.dart_count())
            .filter(|&d| inside[map.tail(d)] && !inside[map.head(d)])
            .collect();
        if leaving.is_empty() {
            return Err(Error::Realization(format!(
                "tree edge {t} has an empty cut"
            )));
        }
        let mut crossings = Vec::new();
        let mut faces = Vec::new();
        let mut d = leaving[0];
        loop {
            crossings.push(d);
            let f = face_of[d];
            if faces.contains(&f) {
                return Err(Error::Realization(format!(
                    "curve of tree edge {t} revisits face {f}"
                )));
            }
            faces.push(f);
            // Walk this face until the boundary re-enters the inside.
            let mut x = map.face_next(d);
            while inside[map.tail(x)] || !inside[map.head(x)] {
                x = map.face_next(x);
            }
            d = twin(x);
            if d == crossings[0] {
                break;
            }
            if crossings.len() > leaving.len() {
                return Err(Error::Realization(format!(
                    "curve of tree edge {t} does not close"
                )));
            }
        }
        if crossings.len() != leaving.len() {
            return Err(Error::Realization(format!(
                "cut of tree edge {t} is not a single dual cycle ({} of {} edges)",
                crossings.len(),
                leaving.len()
            )));
        }
        curves.push(Curve {
            tree_edge: t,
            crossings,
            faces,
            inside,
        });
    }

    let positions = (0..map.edge_count())
        .map(|e| {
            let [a, b] = map.ends(e);
            tree_path(dec, dec.leaf_of(a), dec.leaf_of(b))
        })
        .collect();
    Ok(CurveFamily { curves, positions })
}

/// Tree edges on the path between two nodes, in order from `from`.
fn tree_path(dec: &CarvingDecomposition, from: usize, to: usize) -> Vec<usize> {
    let parent = dec.parent();
    let ancestors = |mut x: usize| {
        let mut v = vec![x];
        while let Some(p) = parent[x] {
            v.push(p);
            x = p;
        }
        v
    };
    let (up, down) = (ancestors(from), ancestors(to));
    let lca = *up
        .iter()
        .find(|x| down.contains(x))
        .expect("tree is connected");
    let mut path: Vec<usize> = up
        .iter()
        .take_while(|&&x| x != lca)
        .map(|&x| dec.edge_above(x).unwrap())
        .collect();
    let tail: Vec<usize> = down
        .iter()
        .take_while(|&&x| x != lca)
        .map(|&x| dec.edge_above(x).unwrap())
        .collect();
    path.extend(tail.into_iter().rev());
    path
}

impl CurveFamily {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Independent check of every realization property, with a witness per failure.
    pub fn validate(&self, map: &PlanarMap, dec: &CarvingDecomposition) -> RealizationReport {
        let mut report = RealizationReport { checks: Vec::new() };
        let graph = Graph::from_map(map);
        let (faces, face_of) = map.dart_faces();

        let count = (self.curves.len() != dec.tree_edge_count()).then(|| {
            format!(
                "{} curves for {} tree edges",
                self.curves.len(),
                dec.tree_edge_count()
            )
        });
        report.push("one curve per tree edge", count);

        let mut middle = None;
        let mut closed = None;
        let mut separates = None;
        for (c, curve) in self.curves.iter().enumerate() {
            let mut crossed = curve.crossed_edges();
            crossed.sort_unstable();
            let mut mid = dec.middle(curve.tree_edge).to_vec();
            mid.sort_unstable();
            if middle.is_none() && crossed != mid {
                middle = Some(format!(
                    "curve {c} crosses {crossed:?}, middle set is {mid:?}"
                ));
            }
            let k = curve.crossings.len();
            let walk_ok = curve.faces.len() == k
                && (0..k).all(|i| {
                    let f = curve.faces[i];
                    face_of[curve.crossings[i]] == f
                        && face_of[twin(curve.crossings[(i + 1) % k])] == f
                })
                && {
                    let mut fs = curve.faces.clone();
                    fs.sort_unstable();
                    fs.windows(2).all(|w| w[0] != w[1])
                };
            if closed.is_none() && !walk_ok {
                closed = Some(format!("curve {c} is not a simple closed dual walk"));
            }
            if separates.is_none() {
                let side = dec.side(curve.tree_edge);
                let cut: Vec<bool> = {
                    let mut v = vec![false; map.edge_count()];
                    crossed.iter().for_each(|&e| v[e] = true);
                    v
                };
                let rest = Graph::new(
                    map.vertex_count(),
                    map.edges()
                        .iter()
                        .enumerate()
                        .filter(|&(e, _)| !cut[e])
                        .map(|(_, &[a, b])| (a, b)),
                );
                let other: Vec<bool> = side.iter().map(|x| !x).collect();
                if curve.inside != side
                    || !rest.induces_connected(side)
                    || !rest.induces_connected(&other)
                    || rest.cut_size(side) != 0
                {
                    separates = Some(format!(
                        "curve {c} does not split the vertices into its tree-edge sides"
                    ));
                }
            }
        }
        report.push("crossings equal middle sets", middle);
        report.push("curves are simple closed dual walks", closed);
        report.push("curves separate the leaf sets", separates);

        let mut order = None;
        for (e, list) in self.positions.iter().enumerate() {
            let mut through: Vec<usize> = (0..self.curves.len())
                .filter(|&c| self.curves[c].crossings.iter().any(|&d| edge_of(d) == e))
                .collect();
            let mut listed = list.clone();
            through.sort_unstable();
            listed.sort_unstable();
            if through != listed {
                order = Some(format!(
                    "edge {e} lists curves {list:?} but is crossed by {through:?}"
                ));
                break;
            }
            let [a, _] = map.ends(e);
            // Nested curves: each listed curve's inside must grow away from the first endpoint.
            let ok = list.windows(2).all(|w| {
                let (p, q) = (&self.curves[w[0]].inside, &self.curves[w[1]].inside);
                let (pa, qa) = (p[a], q[a]);
                let (p_in, q_in): (Vec<bool>, Vec<bool>) = (
                    p.iter().map(|&x| x == pa).collect(),
                    q.iter().map(|&x| x == qa).collect(),
                );
                p_in.iter().zip(&q_in).all(|(&x, &y)| !x || y)
            });
            if !ok {
                order = Some(format!("curves along edge {e} are not nested in order"));
                break;
            }
        }
        report.push("crossing positions follow the tree order", order);

        let mut laminar = None;
        'faces: for (f, walk) in faces.iter().enumerate() {
            let mut points = Vec::new();
            for &d in walk {
                let list = &self.positions[edge_of(d)];
                if d & 1 == 0 {
                    points.extend(list.iter().copied());
                } else {
                    points.extend(list.iter().rev().copied());
                }
            }
            let mut stack: Vec<usize> = Vec::new();
            for &c in &points {
                if stack.last() == Some(&c) {
                    stack.pop();
                } else if stack.contains(&c) {
                    laminar = Some(format!(
                        "face {f}: chords of curve {c} and curve {} interleave",
                        stack.last().unwrap()
                    ));
                    break 'faces;
                } else {
                    stack.push(c);
                }
            }
            if !stack.is_empty() {
                laminar = Some(format!(
                    "face {f}: curve {} meets the face an odd number of times",
                    stack[0]
                ));
                break;
            }
        }
        report.push("chords are non-interleaved in every face", laminar);

        let bond = dec
            .first_non_bond(&graph)
            .map(|t| format!("tree edge {t} has a disconnected side"));
        report.push("decomposition is bond", bond);
        report
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            schema: &'a str,
            #[serde(flatten)]
            family: &'a CurveFamily,
        }
        serde_json::to_string_pretty(&Record {
            schema: CURVES_SCHEMA,
            family: self,
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Record {
            schema: String,
            #[serde(flatten)]
            family: CurveFamily,
        }
        let rec: Record = serde_json::from_str(text)?;
        if rec.schema != CURVES_SCHEMA {
            return Err(Error::Json(format!("unexpected schema {:?}", rec.schema)));
        }
        Ok(rec.family)
    }

    /// Schematic drawing: straight chords inside bounded faces, bulging arcs in the outer face.
    pub fn to_svg(&self, g: &SimpleDiagramGraph, only: Option<&[usize]>) -> String {
        let map = g.map();
        let layout = tutte_layout(map);
        let mut body = layout.svg_graph(map, |v| g.kind(v) == VertexKind::Crossing);
        let centre = crate::layout::CANVAS / 2.0;
        for (c, curve) in self.curves.iter().enumerate() {
            if only.is_some_and(|o| !o.contains(&c)) {
                continue;
            }
            let point = |d: Dart| {
                let e = edge_of(d);
                let list = &self.positions[e];
                let i = list.iter().position(|&x| x == c).unwrap_or(0);
                layout.point_on_edge(map, e, (i + 1) as f64 / (list.len() + 1) as f64)
            };
            let k = curve.crossings.len();
            let start = point(curve.crossings[0]);
            let mut path = format!("M {:.1} {:.1}", start.0, start.1);
            for i in 0..k {
                let (p, q) = (
                    point(curve.crossings[i]),
                    point(curve.crossings[(i + 1) % k]),
                );
                if curve.faces[i] == layout.outer_face {
                    let push = |pt: (f64, f64)| {
                        let (dx, dy) = (pt.0 - centre, pt.1 - centre);
                        let s = 1.0 + 0.35 * (1.0 + c as f64 * 0.02);
                        (centre + dx * s, centre + dy * s)
                    };
                    let (a, b) = (push(p), push(q));
                    let _ = write!(
                        path,
                        " C {:.1} {:.1} {:.1} {:.1} {:.1} {:.1}",
                        a.0, a.1, b.0, b.1, q.0, q.1
                    );
                } else {
                    let _ = write!(path, " L {:.1} {:.1}", q.0, q.1);
                }
            }
            let colour = PALETTE[c % PALETTE.len()];
            let _ = writeln!(
                body,
                r#"<path d="{path} Z" fill="none" stroke="{colour}" stroke-width="1.2"><title>curve {c} (tree edge {})</title></path>"#,
                curve.tree_edge
            );
        }
        svg_document(&body)
    }
}
