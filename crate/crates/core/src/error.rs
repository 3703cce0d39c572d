use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("PD parse error: {0}")]
    PdSyntax(String),
    #[error("crossing {crossing} has {arity} entries, expected 4")]
    PdArity { crossing: usize, arity: usize },
    #[error("edge label {label} appears {count} times, expected exactly 2")]
    EdgeMultiplicity { label: i64, count: usize },
    #[error("rotation system is not planar: V - E + F = {euler}, expected 2")]
    NotPlanar { euler: i64 },
    #[error("diagram graph is disconnected")]
    Disconnected,
    #[error("diagram has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("graph has a bridge; bond decompositions need a bridgeless graph")]
    HasBridge,
    #[error("graph has a cut vertex; no bond carving-decomposition exists")]
    NoBondDecomposition,
    #[error("graph has {vertices} vertices, above the exact-solver cap of {cap}")]
    ExactCapExceeded { vertices: usize, cap: usize },
    #[error("invalid carving decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("carving decomposition is not a bond decomposition (tree edge {tree_edge})")]
    NotBond { tree_edge: usize },

    #[error("curve realization failed: {0}")]
    Realization(String),

    #[error("component {component} is bounded by {spheres} spheres")]
    TooManyBoundaries { component: usize, spheres: usize },
    #[error("component {component}: strand {strand} is inessential in the pair of pants")]
    InessentialStrand { component: usize, strand: usize },
    #[error("invalid sphere-decomposition: {0}")]
    InvalidSphereDecomposition(String),
    #[error("pants component {component} has no strand joining two distinct boundary spheres")]
    NoCrossStrand { component: usize },
    #[error("invalid multiple Heegaard splitting: {0}")]
    InvalidSplitting(String),

    #[error("parameters ({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("block is already drilled")]
    AlreadyDrilled,

    #[error("JSON error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
