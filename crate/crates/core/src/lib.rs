//! Closed-form radial wavefunctions of a free particle on 3D spaces of
//! constant curvature, with the numerical machinery to verify them:
//! curvature-parametrized trig, terminating and non-terminating
//! hypergeometric series, exact-rational polynomial families, the sphere
//! spectrum, invariant-measure quadrature, ODE residual oracles, a
//! shooting-method spectrum rediscovery, hyperbolic profiles, and the
//! flat-space limit onto spherical Bessel functions.

pub mod error;
pub mod euclid_limit;
pub mod hyperbolic;
pub mod hypergeometric;
pub mod kappa_trig;
pub mod ode;
pub mod polynomials;
pub mod quadrature;
pub mod radial;
pub mod real;
pub mod spectrum;

pub use error::{Error, Result};
pub use kappa_trig::{cos_k, sin_k, tan_k, Curvature, CurvatureClass};
pub use real::Real;

/// Exact rational scalar used for polynomial coefficients.
pub type Rational = num_rational::BigRational;

pub type Curvature64 = Curvature<f64>;
pub type HyperbolicRadialSpec64 = hyperbolic::HyperbolicRadialSpec<f64>;
pub type HypergeometricParams64 = hypergeometric::HypergeometricParams<f64>;
pub type LimitSequenceSpec64 = euclid_limit::LimitSequenceSpec<f64>;
pub type RadialFunction64 = radial::RadialFunction<f64>;
pub type SphereLevel64 = spectrum::SphereLevel<f64>;
pub type SturmLiouvilleForm64 = quadrature::SturmLiouvilleForm<f64>;
