//! Error type shared by all modules.

use std::path::PathBuf;

/// Everything that can go wrong while building or running a solve.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Register size outside what the dense simulator supports.
    #[error("qubit count {n} outside supported range 1..={max}")]
    QubitCount { n: usize, max: usize },

    /// Rotation angle was NaN or infinite.
    #[error("rotation angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    /// Gate applied to a qubit the register does not have.
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitIndex { index: usize, n_qubits: usize },

    /// CNOT with identical control and target.
    #[error("control and target are both qubit {0}")]
    ControlEqualsTarget(usize),

    /// Measurement sampling needs at least one shot.
    #[error("sample count must be at least 1")]
    ZeroSamples,

    /// Basis index does not fit in the register.
    #[error("basis index {index} out of range for {n_qubits} qubits")]
    BasisIndex { index: usize, n_qubits: usize },

    /// Edge endpoint outside the declared vertex range.
    #[error("edge ({u}, {v}) out of range for {n_vertices} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n_vertices: usize },

    /// Edge connecting a vertex to itself.
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    /// Same unordered edge listed twice.
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    /// Bitstring length does not match the graph.
    #[error("bitstring has {got} bits, expected {expected}")]
    BitstringLength { got: usize, expected: usize },

    /// Bitstring text contained something other than '0' and '1'.
    #[error("invalid bitstring {0:?}, expected only '0' and '1'")]
    MalformedBitstring(String),

    /// Probability vector length is not 2^n for the graph's n.
    #[error("probability vector has {got} entries, expected 2^{n_vertices}")]
    ProbabilityLength { got: usize, n_vertices: usize },

    /// Sample set carries no observations.
    #[error("empty sample set")]
    EmptySampleSet,

    /// Sample set was measured on a register of a different width.
    #[error("sample set over {got} qubits, expected {expected}")]
    SampleWidth { got: usize, expected: usize },

    /// Exhaustive search refused: 2^n enumeration too large.
    #[error("graph has {n} vertices, exhaustive search capped at {max}")]
    GraphTooLarge { n: usize, max: usize },

    /// Invalid circuit parameters (gamma/beta vectors).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Invalid optimizer configuration.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Gradient vector length does not match the parameter count.
    #[error("gradient has {got} entries, expected {expected}")]
    GradientLength { got: usize, expected: usize },

    /// A perturbation entry was zero, the two-sided divisor would blow up.
    #[error("perturbation entry {0} is zero")]
    ZeroPerturbation(usize),

    /// Graph file header missing or unreadable.
    #[error("missing 'n <count>' header line")]
    MissingHeader,

    /// A line of an edge-list file could not be parsed.
    #[error("cannot parse line {0:?}")]
    MalformedLine(String),

    /// Any graph-file error, tagged with its 1-based line number.
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    /// File error, tagged with the offending path.
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Tag an error with the line number it was detected on.
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Tag an error with the file it came from.
    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
