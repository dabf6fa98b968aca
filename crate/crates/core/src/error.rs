use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: no crossings found")]
    EmptyInput,
    #[error("cannot parse line {line:?}: {reason}")]
    BadLine { line: String, reason: String },
    #[error("edge label {label} occurs {count} times (every edge must occur exactly twice)")]
    EdgeMultiplicity { label: String, count: usize },
    #[error("rotation system is not planar: component has Euler characteristic {chi}, expected 2")]
    NotPlanar { chi: i64 },
    #[error("braid generator s{index} out of range for {strands} strands")]
    BadGenerator { index: usize, strands: usize },
    #[error("empty braid word")]
    EmptyBraid,
    #[error("torus parameter must be odd and >= 3, got {0}")]
    BadTorusParameter(i64),
    #[error("modulus must be >= 2, got {0}")]
    BadModulus(u64),
    #[error("modulus {0} is not prime")]
    ModulusNotPrime(u64),
    #[error("modulus {0} is not odd")]
    ModulusNotOdd(u64),
    #[error("coloring covers {got} arcs but the diagram has {want}")]
    ArcCountMismatch { got: usize, want: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("color sets have different sizes: {0} vs {1}")]
    SetSizeMismatch(usize, usize),
    #[error("lambda = {lambda} is not a unit mod {modulus}")]
    NotAUnit { lambda: u64, modulus: u64 },
    #[error("no non-trivial colorings exist mod {0}")]
    NoNontrivialColorings(u64),
    #[error("coloring is trivial: no polychromatic crossing to normalize at")]
    TrivialColoring,
    #[error("move is not applicable at the requested site")]
    InapplicableMove,
    #[error("search produced a palette of size {size} mod {modulus}, below the proven floor of 5")]
    PaletteBelowFloor { size: usize, modulus: u64 },
    #[error("unknown knot {0:?} (not in the bundled table)")]
    UnknownKnot(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
