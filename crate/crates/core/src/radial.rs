//! Evaluable radial profiles R(r) with an explicit validity domain.

use std::fmt;

use crate::error::{Error, Result};
use crate::kappa_trig::Curvature;
use crate::real::Real;

/// A radial wavefunction factor R(r) on a stated geodesic interval.
///
/// `l` doubles as the singularity tag: every profile behaves as
/// r^l (const + O(r^2)) at the origin pole.
pub struct RadialFunction<T: Real> {
    eval: Box<dyn Fn(T) -> T + Send + Sync>,
    domain: (T, T),
    pub l: u32,
    pub kappa: Curvature<T>,
}

impl<T: Real> RadialFunction<T> {
    pub fn new<F>(l: u32, kappa: Curvature<T>, domain: (T, T), eval: F) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        Self {
            eval: Box::new(eval),
            domain,
            l,
            kappa,
        }
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn eval(&self, r: T) -> Result<T> {
        if r < self.domain.0 || r > self.domain.1 || r.is_nan() {
            return Err(Error::RadialDomain {
                r: r.to_f64().unwrap_or(f64::NAN),
                lo: self.domain.0.to_f64().unwrap_or(f64::NAN),
                hi: self.domain.1.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok((self.eval)(r))
    }
}

impl<T: Real> fmt::Debug for RadialFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFunction")
            .field("l", &self.l)
            .field("kappa", &self.kappa)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}
