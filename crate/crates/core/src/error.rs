use thiserror::Error;

/// Crate-wide error type. Variants map one-to-one onto the failure modes of
/// the public operations; nothing here is recoverable by retrying.
#[derive(Debug, Error)]
pub enum Error {
    #[error("abscissae must be strictly increasing (violation near index {index})")]
    NonMonotonicAbscissa { index: usize },
    #[error("vertical scaling factor s[{index}] = {value} is outside (-1, 1)")]
    ScalingOutOfRange { index: usize, value: f64 },
    #[error("segment has {len} points; at least {min} required")]
    SegmentTooShort { len: usize, min: usize },
    #[error("interval index {index} out of range for {intervals} intervals")]
    IndexOutOfRange { index: usize, intervals: usize },
    #[error("point generation did not reach {wanted} interior points per gap within {max_iters} operator iterations")]
    IterationLimitExceeded { wanted: usize, max_iters: usize },
    #[error("abscissa {x} lies outside the segment range [{low}, {high}]")]
    AbscissaOutOfRange { x: f64, low: f64, high: f64 },
    #[error("series contains no generated interpolation points")]
    EmptyInterpolation,

    #[error("strict split: {len} points cannot be divided into segments of size {sequence_size}")]
    StrictModeIndivisible { len: usize, sequence_size: usize },
    #[error("series has {len} points; at least {min} required")]
    SeriesTooShort { len: usize, min: usize },
    #[error("sequence_size {got} is below the minimum of 3")]
    SequenceSizeTooSmall { got: usize },
    #[error("segments disagree at a shared boundary: ({ax}, {ay}) vs ({bx}, {by})")]
    BoundaryMismatch { ax: f64, ay: f64, bx: f64, by: f64 },

    #[error("series has {len} points; too short for a Hurst estimate (min {min})")]
    SeriesTooShortForHurst { len: usize, min: usize },
    #[error("series is constant; statistic undefined")]
    ConstantSeries,
    #[error("regression matrix is singular")]
    SingularRegression,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("empty input")]
    EmptyInput,

    #[error("parameter {name:?} suggested twice within one trial")]
    DuplicateParameterName { name: String },
    #[error("invalid range for {name:?}: low {low} must be strictly below high {high}")]
    InvalidRange { name: String, low: f64, high: f64 },
    #[error("optimization history has {len} entries; at least {min} required")]
    InsufficientHistory { len: usize, min: usize },
    #[error("objective failed at trial {trial}: {source}")]
    ObjectiveFailure {
        trial: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("objective returned a non-finite value at trial {trial}")]
    NonFiniteObjective { trial: usize },

    #[error("all segment values are equal; scaling formula is undefined")]
    AllPointsEqual,

    #[error("cannot invert a normalization fitted on constant data")]
    DegenerateInverse,
    #[error("{method} transform undefined for value {value} at index {index}")]
    DomainViolation {
        method: &'static str,
        value: f64,
        index: usize,
    },
    #[error("window of {window} does not fit a series of {len} points")]
    WindowTooLarge { window: usize, len: usize },
    #[error("training diverged to a non-finite loss at epoch {epoch} (learning rate too high?)")]
    NonFiniteLoss { epoch: usize },
    #[error("predictor expects windows of {expected} values, got {got}")]
    WindowWidthMismatch { expected: usize, got: usize },
    #[error("normal equations are singular even after ridge regularization")]
    SingularSystem,
    #[error("split ratio {ratio} must be in (0, 1)")]
    InvalidSplitRatio { ratio: f64 },

    #[error("downsample factor {factor} incompatible with series of {fine} fine / {coarse} coarse points")]
    FactorMismatch {
        factor: usize,
        fine: usize,
        coarse: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
