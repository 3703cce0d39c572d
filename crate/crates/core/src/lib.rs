//! Carving decompositions of knot diagrams and the constructions built on them:
//! realizing curves, sphere-decompositions, multiple Heegaard splittings, knot
//! family generators, and layered triangulations of torus-knot complements.

pub mod carving;
pub mod diagram;
pub mod error;
pub mod families;
pub mod graph;
pub mod heegaard;
pub mod layout;
pub mod pipeline;
pub mod planar;
pub mod realize;
pub mod spheres;
pub mod triangulation;

pub use carving::{
    exact_carving_width, heuristic_carving, tw_bounds_from_cw, CarvingDecomposition, WidthBounds,
};
pub use diagram::{
    dual_graph, parse_pd, subdivide_to_simple, Diagram, SimpleDiagramGraph, VertexKind,
    VertexOrigin,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use heegaard::{tube, MultipleHeegaardSplitting, SplittingWidth};
pub use pipeline::{run_pipeline, theorem_main_report, PipelineOptions, TheoremMainReport};
pub use planar::PlanarMap;
pub use realize::{realize, CurveFamily};
pub use spheres::{spheres_from_carving, SphereDecomposition};
pub use triangulation::{layered_solid_torus, torus_complement, Triangulation};
