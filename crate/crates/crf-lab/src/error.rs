//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by field construction and index-level tensor operations.
#[derive(Debug, Error)]
pub enum GridError {
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("grid dimension must be at least 3, got {0}")]
    DimTooSmall(usize),
    #[error("resolution must be at least 8 per axis, got {0}")]
    ResolutionTooSmall(usize),
    #[error("per-axis parameter count {got} does not match dimension {dim}")]
    AxisCountMismatch { got: usize, dim: usize },
    #[error("period must be positive, got {0}")]
    BadPeriod(f64),
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("tensor valence mismatch: expected {expected}, got {got}")]
    ValenceMismatch { expected: String, got: String },
    #[error("contraction slots must have opposite variance (slots {a}, {b})")]
    SlotVariance { a: usize, b: usize },
    #[error("slot {slot} out of range for {nslots} slots")]
    SlotOutOfRange { slot: usize, nslots: usize },
    #[error("non-finite value at node {node}")]
    NonFinite { node: usize },
    #[error("component count {got} does not match grid ({expected})")]
    ComponentCount { got: usize, expected: usize },
}

/// Errors from the curvature pipeline, dominated by metric degeneracy.
#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("metric is not symmetric positive definite (smallest eigenvalue {min_eig:.3e} at node {node})")]
    NotPositiveDefinite { min_eig: f64, node: usize },
    #[error("metric inverse check failed: max |g^ik g_kj - delta| = {defect:.3e} exceeds 1e-12")]
    InverseDefect { defect: f64 },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Errors from the elliptic solvers.
#[derive(Debug, Error)]
pub enum EllipticError {
    #[error("target scalar curvature must be negative, got {0}")]
    NonNegativeTarget(f64),
    #[error("pressure solve did not converge: residual {residual:.3e} after {iterations} iterations (tol {tolerance:.1e})")]
    SolveDiverged {
        iterations: usize,
        residual: f64,
        tolerance: f64,
    },
    #[error("conformal normalization failed after {iterations} iterations: {reason} (constraint residual {residual:.3e})")]
    NormalizationFailed {
        iterations: usize,
        residual: f64,
        reason: String,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Errors from time integration of the flow.
#[derive(Debug, Error)]
pub enum FlowError {
    #[error("time step must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("dt {dt:.3e} exceeds stability ceiling {ceiling:.3e}")]
    StepAboveCeiling { dt: f64, ceiling: f64 },
    #[error("constraint drift {drift:.3e} exceeded ceiling {ceiling:.3e} at t = {t}")]
    ConstraintExceeded { t: f64, drift: f64, ceiling: f64 },
    #[error("flow step failed at t = {t}: {source}")]
    StageFailed {
        t: f64,
        #[source]
        source: EllipticError,
    },
    #[error("metric lost positivity at t = {t}: {source}")]
    MetricDegenerate {
        t: f64,
        #[source]
        source: GeometryError,
    },
    #[error("reprojection requires drift below 1e-2, got {0:.3e}")]
    DriftOutsideBasin(f64),
    #[error("output time {0} is not a step multiple inside [0, T]")]
    BadOutputTime(f64),
    #[error("t_final must be a positive integer multiple of dt (T = {t_final}, dt = {dt})")]
    BadDuration { t_final: f64, dt: f64 },
}

/// Errors from the two-solution difference analysis.
#[derive(Debug, Error)]
pub enum DiffError {
    #[error("solutions are at different times: {a} vs {b}")]
    TimeMismatch { a: f64, b: f64 },
    #[error("trajectories do not bracket t = {0} with matching snapshot spacing")]
    MissingBracket(f64),
    #[error("empty input series")]
    EmptyInput,
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Configuration parse and validation errors.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("invalid value for `{key}`: {reason}")]
    BadValue { key: String, reason: String },
    #[error("`{0}` is required for this experiment")]
    MissingKey(String),
    #[error("{0}")]
    Invalid(String),
}

/// Top-level error, mapped onto process exit codes by the CLI.
#[derive(Debug, Error)]
pub enum CrfError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Diff(#[from] DiffError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("threshold violation: {0}")]
    Threshold(String),
}

impl CrfError {
    /// Exit code contract: 0 success, 2 config error, 3 numerical failure,
    /// 4 threshold violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CrfError::Config(_) => 2,
            CrfError::Threshold(_) => 4,
            CrfError::Io(_) => 3,
            _ => 3,
        }
    }
}
