//! Radial waves on the negatively curved geometry.
//!
//! With `kappa < 0` the spectrum is continuous and nothing terminates: the
//! profile is a genuine Gauss series in `t = -|kappa~| rho^2`, where
//! `rho = E Sin_kappa(r)` and `kappa~ = kappa / E^2`.  Inside `|t| < 0.8` the
//! series converges fast; outside, the value is continued by marching the
//! rho-form of the wave equation outward from a seed point the series still
//! controls.  The result is real for every admissible parameter set, even
//! when the hypergeometric pair is complex conjugate.

use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, series_with_derivative, HypergeometricParams};
use crate::kappa_trig::{sin_k, Curvature, CurvatureClass};
use crate::ode::rk45;
use crate::radial::RadialFunction;
use crate::real::{real, real_u, Real};

/// |t| above which evaluation switches from the series to ODE marching.
const SERIES_HANDOFF: f64 = 0.8;
/// |t| at which the march is seeded from the series.
const CONTINUATION_START: f64 = 0.5;
/// Step-control tolerance for the march; overlap agreement needs 1e-9.
const CONTINUATION_TOL: f64 = 1e-12;

/// Hypergeometric parameters of the regular solution at orbital index `l`
/// and adimensional curvature magnitude `|kappa~| > 0`.
///
/// `c = l + 3/2` and `a, b = [(l+1) -+ B]/2` with `B^2 = 1 - 1/|kappa~|`;
/// below `|kappa~| = 1` the pair turns complex conjugate with real part
/// `(l+1)/2`.
pub fn hyperbolic_params<T: Real>(l: u32, kappa_tilde_abs: T) -> HypergeometricParams<T> {
    debug_assert!(
        kappa_tilde_abs > T::zero(),
        "adimensional curvature must be positive"
    );
    let c = real_u::<T>(l) + real(1.5);
    let half = real::<T>(0.5);
    let base = real_u::<T>(l + 1);
    let b_sq = T::one() - kappa_tilde_abs.recip();
    if b_sq >= T::zero() {
        let b = b_sq.sqrt();
        HypergeometricParams::real_pair(half * (base - b), half * (base + b), c)
    } else {
        HypergeometricParams::conjugate(half * base, half * (-b_sq).sqrt(), c)
    }
}

/// A single hyperbolic wave: orbital index, curvature, and energy.
#[derive(Debug, Clone, Copy)]
pub struct HyperbolicRadialSpec<T> {
    pub l: u32,
    pub kappa: Curvature<T>,
    pub energy_sq: T,
    pub kappa_tilde_abs: T,
}

impl<T: Real> HyperbolicRadialSpec<T> {
    pub fn new(l: u32, kappa: Curvature<T>, energy_sq: T) -> Result<Self> {
        if kappa.class() != CurvatureClass::Hyperbolic {
            return Err(Error::CurvatureSign {
                required: "negative",
                kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
            });
        }
        if !energy_sq.is_finite() || energy_sq <= T::zero() {
            return Err(Error::NonpositiveEnergy {
                energy_sq: energy_sq.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            l,
            kappa,
            energy_sq,
            kappa_tilde_abs: kappa.tilde(energy_sq).abs(),
        })
    }

    pub fn params(&self) -> HypergeometricParams<T> {
        hyperbolic_params(self.l, self.kappa_tilde_abs)
    }

    /// The profile variable rho = E Sin_kappa(r) at geodesic radius r.
    pub fn rho_at(&self, r: T) -> T {
        self.energy_sq.sqrt() * sin_k(self.kappa, r)
    }
}

/// Value of the regular profile `R(rho) = rho^l f(t)`, `t = -|kappa~| rho^2`,
/// normalized by `f(0) = 1`.
pub fn hyperbolic_radial<T: Real>(spec: &HyperbolicRadialSpec<T>, rho: T) -> Result<T> {
    assert!(
        rho >= T::zero() && rho.is_finite(),
        "rho must be finite and nonnegative"
    );
    let t = -spec.kappa_tilde_abs * rho * rho;
    let params = spec.params();
    if t.abs() < real(SERIES_HANDOFF) {
        Ok(rho.powi(spec.l as i32) * gauss_2f1(&params, t)?)
    } else {
        continue_outward(spec, &params, rho)
    }
}

/// Marches `rho^2 (1 + A rho^2) R'' + rho (2 + 3 A rho^2) R' +
/// (rho^2 - l(l+1)) R = 0`, `A = |kappa~|`, from the seed point where
/// `|t| = CONTINUATION_START` out to `rho`.
fn continue_outward<T: Real>(
    spec: &HyperbolicRadialSpec<T>,
    params: &HypergeometricParams<T>,
    rho: T,
) -> Result<T> {
    let a = spec.kappa_tilde_abs;
    let l = spec.l;
    let rho0 = (real::<T>(CONTINUATION_START) / a).sqrt();
    let t0 = -real::<T>(CONTINUATION_START);
    let (f, df) = series_with_derivative(params, t0)?;
    let pl = rho0.powi(l as i32);
    let value0 = pl * f;
    let slope0 = real_u::<T>(l) * pl / rho0 * f - real::<T>(2.0) * a * rho0 * pl * df;
    let ll1 = real_u::<T>(l * (l + 1));
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let rhs = move |x: T, y: [T; 2]| {
        let x2 = x * x;
        let damp = x * (two + three * a * x2);
        [
            y[1],
            -(damp * y[1] + (x2 - ll1) * y[0]) / (x2 * (T::one() + a * x2)),
        ]
    };
    let end = rk45(rhs, rho0, [value0, slope0], rho, real(CONTINUATION_TOL))?;
    Ok(end[0])
}

/// The same profile as a function of geodesic radius, for checks against
/// the r-variable wave operator.
pub fn hyperbolic_profile<T: Real>(spec: HyperbolicRadialSpec<T>, r_max: T) -> RadialFunction<T> {
    RadialFunction::new(spec.l, spec.kappa, (T::zero(), r_max), move |r| {
        hyperbolic_radial(&spec, spec.rho_at(r)).expect("profile evaluates inside its domain")
    })
}
