use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid quantum numbers n={n}, l={ell}, m={m}: {reason}")]
    InvalidQuantumNumbers {
        n: i64,
        ell: i64,
        m: i64,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("argument {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("evaluation at singular point theta = {theta}")]
    SingularPoint { theta: f64 },

    #[error("(l={ell}, m={m}) has no closed form here; supported pairs are (1,1), (2,1), (2,2)")]
    UnsupportedOrder { ell: u32, m: u32 },

    #[error("n_max = {n_max} exceeds the configured cap {cap}")]
    ResourceCap { n_max: u32, cap: u32 },

    #[error("quadrature did not converge: best estimate {best} with error estimate {error_estimate} after {evaluations} evaluations")]
    Quadrature {
        best: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("cannot parse exact value: {0}")]
    Parse(String),
}
