//! Gauss hypergeometric series 2F1(a, b; c; t) as it appears in the
//! radial problem: c = L + 3/2, and (a, b) either both real or a complex
//! conjugate pair. Conjugate pairs are summed with a real recurrence,
//! (a+n)(b+n) = (Re a + n)^2 + (Im a)^2, so values are real by
//! construction rather than by cancellation.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Series terms are cut off once two consecutive terms fall below this
/// relative size.
const SERIES_REL_TOL: f64 = 1e-15;
const SERIES_TERM_CAP: usize = 1_000_000;

/// Tolerance for recognizing a nonpositive-integer parameter (series
/// termination).
const TERMINATION_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypergeometricParams<T> {
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub c: T,
    /// True when b = conj(a) with nonzero imaginary part expected.
    pub conjugate_pair: bool,
}

impl<T: Real> HypergeometricParams<T> {
    pub fn real_pair(a: T, b: T, c: T) -> Self {
        Self {
            a: Complex::new(a, T::zero()),
            b: Complex::new(b, T::zero()),
            c,
            conjugate_pair: false,
        }
    }

    pub fn conjugate(re: T, im: T, c: T) -> Self {
        Self {
            a: Complex::new(re, -im.abs()),
            b: Complex::new(re, im.abs()),
            c,
            conjugate_pair: true,
        }
    }

    /// Real value of (a+n)(b+n); the series only needs this product.
    fn pair_product(&self, n: T) -> T {
        if self.conjugate_pair {
            let re = self.a.re + n;
            re * re + self.a.im * self.a.im
        } else {
            (self.a.re + n) * (self.b.re + n)
        }
    }
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
pub fn pochhammer<T: Real>(x: Complex<T>, n: u32) -> Complex<T> {
    let mut acc = Complex::new(T::one(), T::zero());
    for k in 0..n {
        acc = acc * (x + Complex::new(real_from_u32(k), T::zero()));
    }
    acc
}

#[inline]
fn real_from_u32<T: Real>(k: u32) -> T {
    T::from_u32(k).expect("u32 converts")
}

/// Degree at which the series terminates: the smallest n_r >= 0 with
/// a = -n_r or b = -n_r (within 1e-9), or None.
pub fn termination_degree<T: Real>(params: &HypergeometricParams<T>) -> Option<u32> {
    let tol: T = real(TERMINATION_TOL);
    let mut best: Option<u32> = None;
    for v in [params.a, params.b] {
        if v.im.abs() > tol {
            continue;
        }
        let m = (-v.re).round();
        if m < T::zero() || (v.re + m).abs() > tol {
            continue;
        }
        let m = m.to_u32().expect("small nonnegative integer");
        best = Some(best.map_or(m, |b| b.min(m)));
    }
    best
}

/// Forward summation of 2F1(a, b; c; t).
///
/// Terminating parameter sets are summed as the exact finite polynomial
/// (any real t); otherwise |t| < 1 is required.
pub fn gauss_2f1<T: Real>(params: &HypergeometricParams<T>, t: T) -> Result<T> {
    Ok(series_with_derivative(params, t)?.0)
}

/// Same summation, also returning d/dt 2F1. Used by the hyperbolic
/// continuation to seed the ODE integrator.
pub fn series_with_derivative<T: Real>(params: &HypergeometricParams<T>, t: T) -> Result<(T, T)> {
    let stop = termination_degree(params);
    if stop.is_none() && t.abs() >= T::one() {
        return Err(Error::SeriesDomain {
            t: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    let rel_tol: T = real(SERIES_REL_TOL);
    let one = T::one();

    // coef_k = (a)_k (b)_k / ((c)_k k!), term_k = coef_k t^k
    let mut coef = one;
    let mut t_pow = one; // t^k
    let mut t_pow_prev = T::zero(); // t^(k-1)
    let mut sum = one;
    let mut dsum = T::zero();
    let mut small_streak = 0u32;

    let mut k = 0usize;
    loop {
        if let Some(nr) = stop {
            if k as u32 == nr {
                return Ok((sum, dsum));
            }
        } else if k >= SERIES_TERM_CAP {
            return Err(Error::SeriesNonConvergence { terms: k });
        }
        let kt = real_from_u32(k as u32);
        coef = coef * params.pair_product(kt) / ((params.c + kt) * (kt + one));
        t_pow_prev = if k == 0 { one } else { t_pow_prev * t };
        t_pow *= t;
        let term = coef * t_pow;
        sum += term;
        dsum += coef * (kt + one) * t_pow_prev;
        k += 1;

        if stop.is_none() {
            if term.abs() <= rel_tol * sum.abs() {
                small_streak += 1;
                if small_streak >= 2 {
                    return Ok((sum, dsum));
                }
            } else {
                small_streak = 0;
            }
        }
    }
}
