use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by simulator operations.
///
/// Numeric thresholds behind these checks come from the [`Tolerance`]
/// policy threaded through constructors.
///
/// [`Tolerance`]: crate::linalg::Tolerance
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("factor label `{0}` appears on both sides of a tensor product")]
    LabelCollision(String),

    #[error("unknown factor label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate factor label `{0}`")]
    DuplicateLabel(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operator is not Hermitian: max asymmetry {defect:.3e}")]
    NotHermitian { defect: f64 },

    #[error("operator is not an orthogonal projector: defect {defect:.3e}")]
    NotAProjector { defect: f64 },

    #[error("operator is not unitary: ||U\u{2020}U - 1|| = {defect:.3e}")]
    NotUnitary { defect: f64 },

    #[error("ket is not normalized: norm = {norm}")]
    KetNotNormalized { norm: f64 },

    #[error("kets are not orthogonal: |overlap| = {overlap:.3e}")]
    NotOrthogonal { overlap: f64 },

    #[error("not a valid state operator: {0}")]
    InvalidState(crate::state::StateDiagnostics),

    #[error("mixture probabilities sum to {sum}, expected 1")]
    MixtureNotNormalized { sum: f64 },

    #[error("duplicate outcome label `{0}`")]
    DuplicateOutcome(String),

    #[error("unknown outcome label `{0}`")]
    UnknownOutcome(String),

    #[error("outcome `{label}` has probability {prob:.3e}; conditioning on it is impossible")]
    ImpossibleOutcome { label: String, prob: f64 },

    #[error("effect `{label}` violates POV positivity: min eigenvalue {min_eigenvalue:.3e}")]
    EffectNotPositive { label: String, min_eigenvalue: f64 },

    #[error("effects do not sum to the required operator: deviation {defect:.3e}")]
    CompletenessViolation { defect: f64 },

    #[error("Kraus completeness violated: ||\u{3a3} O\u{2020}O - 1|| = {defect:.3e}")]
    KrausCompletenessViolation { defect: f64 },

    #[error("prepared ensemble is empty")]
    EmptyEnsemble,

    #[error("branch coefficients have squared norm {sum}, expected 1")]
    CoefficientsNotNormalized { sum: f64 },

    #[error("branch kets are not orthonormal: defect {defect:.3e}")]
    BranchesNotOrthonormal { defect: f64 },

    #[error("preparation is annihilated by symmetrization: trace {trace:.3e}")]
    AnnihilatedPreparation { trace: f64 },

    #[error("no branch is flagged as a separation-status loss; reduction is not triggered and unitary evolution applies")]
    ReductionNotTriggered,

    #[error("meter has no detector component; the pointer hypothesis requires at least one")]
    NoDetector,

    #[error("measurement coupling too weak: branch packets overlap with |<+|->| = {overlap:.3e}")]
    CouplingTooWeak { overlap: f64 },

    #[error("numerical breakdown: {0}")]
    Numerical(String),

    #[error("grid points must be a power of two, got {0}")]
    GridNotPowerOfTwo(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
