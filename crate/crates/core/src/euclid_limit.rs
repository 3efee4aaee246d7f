//! Flat-space limit of the sphere profiles.
//!
//! Fix a wavenumber `k` and let the shell index `N = n + l` grow while the
//! curvature shrinks as `kappa_n = k^2 / (N (N + 2))`, so the energy
//! `kappa_n * N (N + 2)` stays pinned at `k^2`.  Scaled by `k^l / (2l+1)!!`,
//! the sphere profile then converges to the spherical Bessel function
//! `j_l(k r)` uniformly on any fixed range that stays inside the shrinking
//! upper hemisphere.  This module builds the members of such a sequence and
//! measures their sup-distance from the Bessel limit.

use crate::error::{Error, Result};
use crate::kappa_trig::{cos_k, sin_k, Curvature};
use crate::polynomials::{eval_q, unified_q};
use crate::radial::RadialFunction;
use crate::real::{real, real_u, Real};

/// Grid resolution used by [`convergence_report`].
const REPORT_GRID: usize = 2000;

/// Spherical Bessel function `j_l(x)` for `x >= 0`.
///
/// Upward recurrence is used where it is stable (`x >= l`); below that the
/// value is produced by Miller's downward recurrence from a seed well above
/// `l`, anchored on whichever of `j_0`, `j_1` is larger in magnitude so the
/// anchor never sits on a zero.
pub fn spherical_bessel_j<T: Real>(l: u32, x: T) -> T {
    debug_assert!(x >= T::zero(), "spherical_bessel_j needs x >= 0");
    if x == T::zero() {
        return if l == 0 { T::one() } else { T::zero() };
    }
    let j0 = x.sin() / x;
    if l == 0 {
        return j0;
    }
    let j1 = j0 / x - x.cos() / x;
    if l == 1 {
        return j1;
    }
    if x >= real_u::<T>(l) {
        let mut below = j0;
        let mut here = j1;
        for m in 1..l {
            let next = real_u::<T>(2 * m + 1) / x * here - below;
            below = here;
            here = next;
        }
        here
    } else {
        miller_downward(l, x, j0, j1)
    }
}

fn miller_downward<T: Real>(l: u32, x: T, j0: T, j1: T) -> T {
    // The seed is arbitrary: downward recurrence amplifies the regular
    // solution so fast that 32 extra orders wash any seed error out.
    let start = l + 32;
    let big = real::<T>(1e250);
    let rescale = real::<T>(1e-250);
    let mut above = T::zero();
    let mut here = real::<T>(1e-30);
    let mut at_l = T::zero();
    let mut m = start;
    loop {
        if m == l {
            at_l = here;
        }
        if m == 0 {
            break;
        }
        let next = real_u::<T>(2 * m + 1) / x * here - above;
        above = here;
        here = next;
        m -= 1;
        if here.abs() > big {
            here *= rescale;
            above *= rescale;
            at_l *= rescale;
        }
    }
    // here = j_0, above = j_1, both in seed units.
    let anchor = if j0.abs() >= j1.abs() {
        j0 / here
    } else {
        j1 / above
    };
    at_l * anchor
}

/// Curvature `kappa_n = k^2 / (N (N + 2))` that keeps the energy of shell
/// `N = n + l` equal to `k^2`.
pub fn contraction_curvature<T: Real>(n: u32, l: u32, k: T) -> Result<Curvature<T>> {
    check_wavenumber(k)?;
    let shell = u64::from(n) + u64::from(l);
    if shell == 0 {
        return Err(Error::InvalidLimitSpec {
            reason: "member n + l = 0 has no finite contraction curvature".into(),
        });
    }
    let m = shell * (shell + 2);
    Curvature::new(k * k / real(m as f64))
}

/// Sphere profile of `(n, l)` at the contraction curvature, scaled by
/// `k^l / (2l + 1)!!` so that near the origin it matches `j_l(k r)` term by
/// term.  The member `n = l = 0` degenerates to the constant `1` on a flat
/// line, which meets `j_0` only at the origin.
pub fn contracted_profile<T: Real>(n: u32, l: u32, k: T) -> Result<RadialFunction<T>> {
    check_wavenumber(k)?;
    if n + l == 0 {
        return Ok(RadialFunction::new(
            0,
            Curvature::flat(),
            (T::zero(), T::infinity()),
            |_| T::one(),
        ));
    }
    let kappa = contraction_curvature(n, l, k)?;
    let poly = unified_q(n, l);
    let prefactor = k.powi(l as i32) / real::<T>(double_factorial_odd(l));
    let span = kappa
        .antipodal_distance()
        .expect("contraction curvature is positive");
    Ok(RadialFunction::new(l, kappa, (T::zero(), span), move |r| {
        let s = sin_k(kappa, r);
        prefactor * s.powi(l as i32) * eval_q(&poly, cos_k(kappa, r))
    }))
}

/// `(2l + 1)!! = 1 * 3 * ... * (2l + 1)`; stays finite in f64 through l = 150.
fn double_factorial_odd(l: u32) -> f64 {
    (0..=l).fold(1.0, |acc, i| acc * f64::from(2 * i + 1))
}

fn check_wavenumber<T: Real>(k: T) -> Result<()> {
    if k > T::zero() && k.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidLimitSpec {
            reason: format!("wavenumber k must be positive and finite, got {}", k),
        })
    }
}

/// A contraction sequence: orbital index `l`, pinned wavenumber `k`, the
/// shell members to include, and the radial range the comparison runs over.
#[derive(Debug, Clone)]
pub struct LimitSequenceSpec<T> {
    pub l: u32,
    pub k: T,
    pub n_values: Vec<u32>,
    pub r_max: T,
}

impl<T: Real> LimitSequenceSpec<T> {
    /// Rejects ranges that leave the upper hemisphere of any member: the
    /// comparison is only meaningful for `r_max < pi / (2 sqrt(kappa_n))`.
    pub fn validate(&self) -> Result<()> {
        check_wavenumber(self.k)?;
        if !self.r_max.is_finite() || self.r_max <= T::zero() {
            return Err(Error::InvalidLimitSpec {
                reason: format!("r_max must be positive and finite, got {}", self.r_max),
            });
        }
        if self.n_values.is_empty() {
            return Err(Error::InvalidLimitSpec {
                reason: "sequence needs at least one member".into(),
            });
        }
        for &n in &self.n_values {
            if n + self.l == 0 {
                continue;
            }
            let kappa = contraction_curvature(n, self.l, self.k)?;
            let hemisphere = kappa
                .equator_distance()
                .expect("contraction curvature is positive");
            if self.r_max >= hemisphere {
                return Err(Error::InvalidLimitSpec {
                    reason: format!(
                        "r_max {} reaches past the hemisphere {} of member n = {}",
                        self.r_max, hemisphere, n
                    ),
                });
            }
        }
        Ok(())
    }
}

/// One member's distance from the Bessel limit.
#[derive(Debug, Clone)]
pub struct ConvergenceEntry<T> {
    pub n: u32,
    pub kappa_n: T,
    pub sup_distance: T,
}

/// Sup-distances for every member of a sequence, in the order given.
#[derive(Debug, Clone)]
pub struct ConvergenceReport<T> {
    pub l: u32,
    pub k: T,
    pub r_max: T,
    pub entries: Vec<ConvergenceEntry<T>>,
    pub strictly_decreasing: bool,
}

/// Measures `sup |profile_n(r) - j_l(k r)|` over a uniform 2000-point grid
/// on `[0, r_max]` for each member of the sequence.
pub fn convergence_report<T: Real>(spec: &LimitSequenceSpec<T>) -> Result<ConvergenceReport<T>> {
    spec.validate()?;
    let mut entries = Vec::with_capacity(spec.n_values.len());
    let steps = real_u::<T>((REPORT_GRID - 1) as u32);
    for &n in &spec.n_values {
        let profile = contracted_profile(n, spec.l, spec.k)?;
        let mut sup = T::zero();
        for i in 0..REPORT_GRID {
            let r = spec.r_max * real_u::<T>(i as u32) / steps;
            let d = (profile.eval(r)? - spherical_bessel_j(spec.l, spec.k * r)).abs();
            if d > sup {
                sup = d;
            }
        }
        entries.push(ConvergenceEntry {
            n,
            kappa_n: profile.kappa.raw(),
            sup_distance: sup,
        });
    }
    let strictly_decreasing = entries
        .windows(2)
        .all(|w| w[1].sup_distance < w[0].sup_distance);
    Ok(ConvergenceReport {
        l: spec.l,
        k: spec.k,
        r_max: spec.r_max,
        entries,
        strictly_decreasing,
    })
}
