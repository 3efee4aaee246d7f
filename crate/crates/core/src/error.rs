use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("curvature must be finite, got {kappa}")]
    InvalidCurvature { kappa: f64 },

    #[error("curvature sign mismatch: need {required}, got kappa = {kappa}")]
    CurvatureSign { required: &'static str, kappa: f64 },

    #[error("tan_k pole: cos_k vanishes at x = {x}")]
    TrigPole { x: f64 },

    #[error("hypergeometric series outside |t| < 1 without termination (t = {t})")]
    SeriesDomain { t: f64 },

    #[error("series did not converge within {terms} terms")]
    SeriesNonConvergence { terms: usize },

    #[error("quadrature tolerance not met: estimate {estimate}, error bound {error_bound}, requested {requested}")]
    QuadratureTolerance {
        estimate: f64,
        error_bound: f64,
        requested: f64,
    },

    #[error("radial argument {r} outside domain [{lo}, {hi}]")]
    RadialDomain { r: f64, lo: f64, hi: f64 },

    #[error("energy squared must be positive, got {energy_sq}")]
    NonpositiveEnergy { energy_sq: f64 },

    #[error("no eigenvalue found in window ({lo}, {hi})")]
    NoEigenvalueInWindow { lo: f64, hi: f64 },

    #[error("ODE integration failed: {reason}")]
    OdeFailure { reason: &'static str },

    #[error("invalid limit sequence: {reason}")]
    InvalidLimitSpec { reason: String },
}
