use std::path::PathBuf;

use thiserror::Error;

use crate::scalar::Rational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gamma is only evaluated at positive integers and half-integers, got {0}")]
    GammaArgument(Rational),
    #[error("division by an exact zero")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least {min}, got {got}")]
    Dimension { min: u32, got: u32 },
    #[error("kernel numerator has nonzero mean on the sphere: {0}")]
    NonzeroMean(Rational),
    #[error("degree-0 harmonic component is not allowed in a kernel")]
    DegreeZeroComponent,
    #[error("kernel is identically zero")]
    ZeroKernel,
    #[error("kernel must be odd, found {0} parity")]
    NotOdd(&'static str),
    #[error("not a harmonic component: {0}")]
    NotHarmonic(String),
    #[error("frequency vector must be nonzero")]
    ZeroFrequency,
    #[error("parameters outside the supported range: {0}")]
    OutOfRange(String),
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
