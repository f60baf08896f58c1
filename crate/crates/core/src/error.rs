use thiserror::Error;

/// Errors raised by the transform kernels and the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("grid index out of range: sector {sector}, n={n}, l={l}")]
    IndexOutOfRange { sector: u8, n: i64, l: i64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("iteration did not converge after {iterations} steps (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("fitted weight is negative: basis coefficient c[{index}] = {value:.6e}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("normal equations are singular or not positive definite")]
    SingularSystem,

    #[error("magnitude response is negative at xi={xi} (value {value:.3e})")]
    NegativeMagnitude { xi: f64, value: f64 },

    #[error("spectral factor has unpaired roots near the unit circle (|z|={modulus:.6}); increase smoothing or change the filter")]
    IllConditionedRoots { modulus: f64 },

    #[error("fan filter with size {size} and transition {tau} misses the response tolerance (worst error {error:.3})")]
    InfeasibleFanFilter { size: usize, tau: f64, error: f64 },

    #[error("reconstruction denominator reaches {min:.3e}, below the floor {floor:.1e}")]
    SingularDenominator { min: f64, floor: f64 },

    #[error("sampling step {step} for scale {scale} does not produce an integer coefficient count on a grid of {n} samples")]
    NonIntegerSampling { step: f64, scale: i32, n: usize },

    #[error("shear k={k} out of range for level {level} (|k| <= {max})")]
    ShearOutOfRange { k: i64, level: u32, max: i64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("file format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
