//! Shared inputs for the benchmarks.

use knotwidth::families::{pretzel_diagram, torus_diagram, trefoil_connect_sum};
use knotwidth::{subdivide_to_simple, Diagram, Graph};

pub fn graph_of(d: &Diagram) -> Graph {
    subdivide_to_simple(d).graph()
}

/// Diagrams whose subdivided graphs fit the exact solver, smallest first.
pub fn exact_corpus() -> Vec<(String, Diagram)> {
    vec![
        ("T(3,2)".into(), torus_diagram(3, 2).unwrap()),
        ("T(5,2)".into(), torus_diagram(5, 2).unwrap()),
        ("T(4,3)".into(), torus_diagram(4, 3).unwrap()),
        ("#3 trefoil".into(), trefoil_connect_sum(3).unwrap()),
    ]
}

pub fn heuristic_corpus() -> Vec<(String, Diagram)> {
    vec![
        ("T(9,7)".into(), torus_diagram(9, 7).unwrap()),
        ("#20 trefoil".into(), trefoil_connect_sum(20).unwrap()),
        (
            "P(-2,3,7)".into(),
            pretzel_diagram(-2, 3, 7).unwrap().diagram,
        ),
    ]
}
