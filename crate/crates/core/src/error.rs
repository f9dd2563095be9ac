use thiserror::Error;

/// Errors shared across the crate. Validation *findings* are not errors:
/// axiom checks return a [`crate::report::ValidationReport`] instead, so a
/// failing identity is data, not a fault. `Error` is reserved for conditions
/// that make a computation impossible or meaningless.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_{conductor})")]
    DivisionByZero { conductor: u32 },

    #[error("conductor {needed} exceeds the configured ceiling {ceiling}")]
    ConductorCeiling { needed: u64, ceiling: u32 },

    #[error("{j} is not coprime to the conductor {n}")]
    NotCoprime { j: u64, n: u32 },

    #[error("{m} is not a squarefree positive integer")]
    NotSquarefree { m: u64 },

    #[error("vectors indexed by different label sets ({left} vs {right} entries)")]
    IndexMismatch { left: usize, right: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("label `{0}` listed more than once")]
    DuplicateLabel(String),

    #[error("map on `{context}` is not a bijection of the label set")]
    NotAPermutation { context: String },

    #[error("matrix has shape {rows}x{cols}, expected {want_rows}x{want_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("row `{row}` of the S-matrix is not multiplicative: fails on ({a}, {b})")]
    NonMultiplicativeRow { row: String, a: String, b: String },

    #[error("S-matrix row of the unit does not equal the dimension vector")]
    UnitRowMismatch,

    #[error("character has zero formal codegree")]
    ZeroCodegree,

    #[error("eigenvalues still collide after {retries} random combinations")]
    PersistentDegeneracy { retries: u32 },

    #[error("numeric character backend: {0}")]
    NumericBackend(String),

    #[error("{found} fixed characters but the module has rank {module_rank}")]
    FixedCountMismatch { found: usize, module_rank: usize },

    #[error("projector image for character `{row}` has dimension {dim}, expected 1")]
    ProjectorImage { row: String, dim: usize },

    #[error("cannot normalize twisted character `{row}`: {reason}")]
    Normalization { row: String, reason: String },

    #[error("phase convention undecidable for `{row}` at maximum precision")]
    PhaseUndecidable { row: String },

    #[error(
        "computed and supplied crossed S-matrix rows for `{row}` differ by more \
         than a root-of-unity factor"
    )]
    BridgeMismatch { row: String },

    #[error("expression is not a non-negative integer: got {got} for {context}")]
    NotANonNegativeInteger { got: String, context: String },

    #[error("expression is not an algebraic integer of Q(zeta_{n}): got {got} for {context}")]
    NotInZOmega { got: String, n: u32, context: String },

    #[error("the two displays of the formula disagree for {context}: {left} vs {right}")]
    ConjugateFormMismatch {
        context: String,
        left: String,
        right: String,
    },

    #[error("Fourier transform of the twisted fusion algebra is not multiplicative at {context}")]
    FourierNonMultiplicative { context: String },

    #[error("dataset requires spherical data for this operation")]
    SphericalMissing,

    #[error("dataset requires a module component for this operation")]
    ModuleMissing,

    #[error("dataset requires a crossed S-matrix for this operation")]
    CrossedMissing,

    #[error("cannot parse dataset: {0}")]
    Parse(String),

    #[error("dataset `{name}` is invalid:\n{details}")]
    DatasetInvalid { name: String, details: String },

    #[error("value outside supported range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
