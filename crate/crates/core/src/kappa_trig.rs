//! Curvature-dependent trigonometry.
//!
//! A single family of functions covers the three constant-curvature
//! geometries, labelled by the curvature `kappa`:
//!
//! ```text
//!           kappa > 0              kappa = 0    kappa < 0
//! cos_k(x)  cos(sqrt(k) x)         1            cosh(sqrt(-k) x)
//! sin_k(x)  sin(sqrt(k) x)/sqrt(k) x            sinh(sqrt(-k) x)/sqrt(-k)
//! ```
//!
//! They satisfy `cos_k^2 + kappa sin_k^2 = 1`, d/dx sin_k = cos_k and
//! d/dx cos_k = -kappa sin_k, and both are entire in `kappa x^2`, which is
//! what makes the flat limit a plain evaluation at kappa = 0.

use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Below this magnitude of `kappa x^2` both functions switch to their
/// power series in `kappa x^2`. The series is branch-free, so values are
/// continuous through kappa = 0 with no cancellation.
const SERIES_KX2: f64 = 1e-8;

/// Absolute cos_k threshold treated as a tan_k pole.
const TAN_POLE_TOL: f64 = 1e-12;

/// Sectional curvature of the spatial 3-manifold.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Curvature<T> {
    kappa: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurvatureClass {
    Spherical,
    Flat,
    Hyperbolic,
}

impl<T: Real> Curvature<T> {
    pub fn new(kappa: T) -> Result<Self> {
        if kappa.is_finite() {
            Ok(Self { kappa })
        } else {
            Err(Error::InvalidCurvature {
                kappa: kappa.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    pub fn flat() -> Self {
        Self { kappa: T::zero() }
    }

    #[inline]
    pub fn raw(self) -> T {
        self.kappa
    }

    pub fn class(self) -> CurvatureClass {
        if self.kappa > T::zero() {
            CurvatureClass::Spherical
        } else if self.kappa < T::zero() {
            CurvatureClass::Hyperbolic
        } else {
            CurvatureClass::Flat
        }
    }

    /// kappa~ = kappa / E^2, the adimensional curvature at energy E^2.
    #[inline]
    pub fn tilde(self, energy_sq: T) -> T {
        self.kappa / energy_sq
    }

    /// Geodesic distance to the antipodal pole, pi/sqrt(kappa). None off the sphere.
    pub fn antipodal_distance(self) -> Option<T> {
        (self.kappa > T::zero()).then(|| T::PI() / self.kappa.sqrt())
    }

    /// Geodesic distance to the equator, pi/(2 sqrt(kappa)). None off the sphere.
    pub fn equator_distance(self) -> Option<T> {
        self.antipodal_distance().map(|d| d * real(0.5))
    }
}

/// cos_k, even in x for every kappa.
pub fn cos_k<T: Real>(kappa: Curvature<T>, x: T) -> T {
    let k = kappa.raw();
    let ax = x.abs(); // evenness held exactly, not left to libm
    let kx2 = k * ax * ax;
    if kx2.abs() < real(SERIES_KX2) {
        // 1 - u/2 + u^2/24 - u^3/720, u = kappa x^2
        return T::one()
            + kx2
                * (real::<T>(-0.5)
                    + kx2 * (real::<T>(1.0 / 24.0) + kx2 * real::<T>(-1.0 / 720.0)));
    }
    if k > T::zero() {
        (k.sqrt() * ax).cos()
    } else {
        ((-k).sqrt() * ax).cosh()
    }
}

/// sin_k, odd in x for every kappa.
pub fn sin_k<T: Real>(kappa: Curvature<T>, x: T) -> T {
    let k = kappa.raw();
    let ax = x.abs();
    let kx2 = k * ax * ax;
    let mag = if kx2.abs() < real(SERIES_KX2) {
        // x (1 - u/6 + u^2/120 - u^3/5040), u = kappa x^2
        ax * (T::one()
            + kx2
                * (real::<T>(-1.0 / 6.0)
                    + kx2 * (real::<T>(1.0 / 120.0) + kx2 * real::<T>(-1.0 / 5040.0))))
    } else if k > T::zero() {
        let sk = k.sqrt();
        (sk * ax).sin() / sk
    } else {
        let sk = (-k).sqrt();
        (sk * ax).sinh() / sk
    };
    if x < T::zero() {
        -mag
    } else {
        mag
    }
}

/// tan_k = sin_k / cos_k. Errors at poles of the spherical branch.
pub fn tan_k<T: Real>(kappa: Curvature<T>, x: T) -> Result<T> {
    let c = cos_k(kappa, x);
    if c.abs() <= real(TAN_POLE_TOL) {
        return Err(Error::TrigPole {
            x: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(sin_k(kappa, x) / c)
}
