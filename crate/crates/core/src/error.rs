use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series inversion requires f(0) != 0")]
    ZeroConstantTerm,

    #[error("cannot divide: dividend valuation {dividend} is below divisor valuation {divisor}")]
    ValuationMismatch { dividend: usize, divisor: usize },

    #[error("division by the zero series")]
    ZeroDivisor,

    #[error("series of order {have} is too short; order {need} required")]
    InsufficientOrder { have: usize, need: usize },

    #[error("degenerate Padé [{p},{q}]: singular system at denominator order {deficient}")]
    DegeneratePade { p: usize, q: usize, deficient: usize },

    #[error("pole: denominator {value:e} vanishes at x = {x}")]
    Pole { x: f64, value: f64 },

    #[error("{0}")]
    Domain(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("no real solution: W argument {0} is below -1/e")]
    NoRealSolution(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("bracket [{lo}, {hi}] does not change sign")]
    Bracket { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
