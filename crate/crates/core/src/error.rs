use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {0} is not inside the open unit disc")]
    OutsideDisc(Complex64),

    #[error("weight alpha = {0} must satisfy alpha > -1")]
    InvalidWeight(f64),

    #[error("exponent p = {p} must satisfy {requirement}")]
    InvalidExponent { p: f64, requirement: &'static str },

    #[error("invalid quadrature rule: {0}")]
    InvalidRule(String),

    #[error("non-finite sample {value} at node r = {r}, theta = {theta}")]
    NonFiniteSample { r: f64, theta: f64, value: Complex64 },

    #[error("rule has angular count {actual} but evaluation at |z| = {modulus} needs at least {required}")]
    UnderResolved {
        modulus: f64,
        required: usize,
        actual: usize,
    },

    #[error("rule carries weight alpha = {rule} but alpha = {requested} was requested")]
    WeightMismatch { rule: f64, requested: f64 },

    #[error("coefficient a_{index} is nonzero; the order-{order} reproducing formula needs a_0..a_{last} to vanish", last = 2 * order - 1)]
    VanishingCondition { order: usize, index: usize },

    #[error("derivative of map '{map}' vanishes at {at}")]
    DerivativeVanishes { map: String, at: Complex64 },

    #[error("supplied derivative of map '{map}' disagrees with finite differences at {at}: {supplied} vs {estimated}")]
    DerivativeMismatch {
        map: String,
        at: Complex64,
        supplied: Complex64,
        estimated: Complex64,
    },

    #[error("kernel diagonal K(b, b) = {0} is not positive real")]
    DiagonalNotPositive(Complex64),

    #[error("kernel sample {value} at ({x}, {y}) is negative or not real")]
    NegativeKernel { x: Complex64, y: Complex64, value: f64 },

    #[error("auxiliary function sample {value} at {at} is not positive")]
    NonPositiveAuxiliary { at: Complex64, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
