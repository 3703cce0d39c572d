//! Schematic straight-line drawings for SVG exports: the longest face is
//! pinned to a circle and every other vertex relaxes to the barycentre of its
//! neighbours.

use std::fmt::Write as _;

use crate::planar::PlanarMap;

pub const CANVAS: f64 = 600.0;
const RADIUS: f64 = 240.0;

#[derive(Debug, Clone)]
pub struct Layout {
    pub points: Vec<(f64, f64)>,
    pub outer_face: usize,
    pub faces: Vec<Vec<usize>>,
}

pub fn tutte_layout(map: &PlanarMap) -> Layout {
    let n = map.vertex_count();
    let faces = map.faces();
    let outer_face = (0..faces.len())
        .max_by_key(|&f| (faces[f].len(), std::cmp::Reverse(f)))
        .unwrap_or(0);
    let centre = CANVAS / 2.0;
    let mut points = vec![(centre, centre); n];
    let mut pinned = vec![false; n];
    let mut ring: Vec<usize> = Vec::new();
    if let Some(walk) = faces.get(outer_face) {
        for &d in walk {
            let v = map.tail(d);
            if !pinned[v] {
                pinned[v] = true;
                ring.push(v);
            }
        }
    }
    for (i, &v) in ring.iter().enumerate() {
        // The outer face is walked clockwise from the outside, so reverse the angle.
        let t = -2.0 * std::f64::consts::PI * i as f64 / ring.len() as f64;
        points[v] = (centre + RADIUS * t.cos(), centre + RADIUS * t.sin());
    }
    let adj = map.adjacency();
    for _ in 0..4000 {
        let mut moved = 0.0f64;
        for v in 0..n {
            if pinned[v] || adj[v].is_empty() {
                continue;
            }
            let k = adj[v].len() as f64;
            let x = adj[v].iter().map(|&w| points[w].0).sum::<f64>() / k;
            let y = adj[v].iter().map(|&w| points[w].1).sum::<f64>() / k;
            moved = moved.max((x - points[v].0).abs() + (y - points[v].1).abs());
            points[v] = (x, y);
        }
        if moved < 1e-6 {
            break;
        }
    }
    Layout {
        points,
        outer_face,
        faces,
    }
}

impl Layout {
    pub fn point_on_edge(&self, map: &PlanarMap, e: usize, t: f64) -> (f64, f64) {
        let [a, b] = map.ends(e);
        let (pa, pb) = (self.points[a], self.points[b]);
        (pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1))
    }

    /// SVG fragment drawing the graph edges and vertices.
    pub fn svg_graph(&self, map: &PlanarMap, highlight: impl Fn(usize) -> bool) -> String {
        let mut s = String::new();
        for (e, &[a, b]) in map.edges().iter().enumerate() {
            let (pa, pb) = (self.points[a], self.points[b]);
            let _ = writeln!(
                s,
                r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black" stroke-width="1.5"><title>e{e}</title></line>"#,
                pa.0, pa.1, pb.0, pb.1
            );
        }
        for (v, p) in self.points.iter().enumerate() {
            let (r, fill) = if highlight(v) {
                (4.0, "black")
            } else {
                (2.0, "gray")
            };
            let _ = writeln!(
                s,
                r#"<circle cx="{:.1}" cy="{:.1}" r="{r}" fill="{fill}"><title>v{v}</title></circle>"#,
                p.0, p.1
            );
        }
        s
    }
}

pub fn svg_document(body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" viewBox=\"-100 -100 {w} {w}\">\n{body}</svg>\n",
        c = CANVAS,
        w = CANVAS + 200.0
    )
}

pub const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];
