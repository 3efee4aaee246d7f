//! Finite-difference and shooting oracles for the radial equation.
//!
//! Nothing here knows the closed forms: the residual operator applies
//! (1/sin_k^2)(sin_k^2 R')' - L(L+1) R / sin_k^2 + E^2 R with numeric
//! derivatives, and the eigenvalue finder integrates the ODE from both
//! poles and bisects on the matching defect. Agreement with the
//! polynomial construction is therefore evidence, not circularity.

use crate::error::{Error, Result};
use crate::kappa_trig::{cos_k, sin_k, Curvature};
use crate::radial::RadialFunction;
use crate::real::{real, real_u, Real};

/// Central-difference step for the residual operator.
const FD_STEP: f64 = 1e-5;
/// Relative tolerance of the shooting integrations.
const SHOOT_ODE_TOL: f64 = 1e-10;
/// Launch offset from each pole, as a fraction of the pole distance.
const LAUNCH_OFFSET: f64 = 1e-6;
/// Irrational fraction offsetting the energy scan grid, so that the
/// integer-valued exact eigenvalues cannot sit exactly on scan points.
const SCAN_PHASE: f64 = 0.381_966;

/// Max over the grid of the radial-operator defect, relative to the
/// driving scale max |E^2 R|. Step h = 1e-5; the derivative of
/// sin_k^2 R' is itself a central difference of R-differences, so the
/// whole stencil is second order.
pub fn radial_operator_residual<T: Real>(
    f: &RadialFunction<T>,
    energy_sq: T,
    grid: &[T],
) -> Result<T> {
    radial_operator_residual_with_step(f, energy_sq, grid, real(FD_STEP))
}

/// Same operator with an explicit step, for convergence-order checks.
pub fn radial_operator_residual_with_step<T: Real>(
    f: &RadialFunction<T>,
    energy_sq: T,
    grid: &[T],
    h: T,
) -> Result<T> {
    let kappa = f.kappa;
    let ll1 = real_u::<T>(f.l * (f.l + 1));
    let two_h = h + h;
    let mut worst = T::zero();
    let mut scale = T::zero();
    for &r in grid {
        let r_m2 = f.eval(r - two_h)?;
        let r_0 = f.eval(r)?;
        let r_p2 = f.eval(r + two_h)?;
        let sp = sin_k(kappa, r + h);
        let sm = sin_k(kappa, r - h);
        // flux sin_k^2 R' at the half-step points
        let flux_p = sp * sp * (r_p2 - r_0) / two_h;
        let flux_m = sm * sm * (r_0 - r_m2) / two_h;
        let s = sin_k(kappa, r);
        let s2 = s * s;
        let driving = energy_sq * r_0;
        let res = (flux_p - flux_m) / two_h / s2 - ll1 * r_0 / s2 + driving;
        worst = worst.max(res.abs());
        scale = scale.max(driving.abs());
    }
    Ok(if scale > T::zero() {
        worst / scale
    } else {
        worst
    })
}

/// One adaptive Dormand-Prince 5(4) step: returns (y1, err_ratio) with
/// err_ratio <= 1 meaning acceptable at the requested tolerance.
fn dp_step<T: Real, F: Fn(T, [T; 2]) -> [T; 2]>(
    f: &F,
    t: T,
    y: [T; 2],
    h: T,
    rel_tol: T,
) -> ([T; 2], T) {
    let a = |x: f64| real::<T>(x);
    let k1 = f(t, y);
    let yk = |cs: &[(T, [T; 2])]| {
        let mut out = y;
        for (c, k) in cs {
            out[0] += h * *c * k[0];
            out[1] += h * *c * k[1];
        }
        out
    };
    let k2 = f(t + h * a(0.2), yk(&[(a(0.2), k1)]));
    let k3 = f(
        t + h * a(0.3),
        yk(&[(a(3.0 / 40.0), k1), (a(9.0 / 40.0), k2)]),
    );
    let k4 = f(
        t + h * a(0.8),
        yk(&[
            (a(44.0 / 45.0), k1),
            (a(-56.0 / 15.0), k2),
            (a(32.0 / 9.0), k3),
        ]),
    );
    let k5 = f(
        t + h * a(8.0 / 9.0),
        yk(&[
            (a(19372.0 / 6561.0), k1),
            (a(-25360.0 / 2187.0), k2),
            (a(64448.0 / 6561.0), k3),
            (a(-212.0 / 729.0), k4),
        ]),
    );
    let k6 = f(
        t + h,
        yk(&[
            (a(9017.0 / 3168.0), k1),
            (a(-355.0 / 33.0), k2),
            (a(46732.0 / 5247.0), k3),
            (a(49.0 / 176.0), k4),
            (a(-5103.0 / 18656.0), k5),
        ]),
    );
    let y1 = yk(&[
        (a(35.0 / 384.0), k1),
        (a(500.0 / 1113.0), k3),
        (a(125.0 / 192.0), k4),
        (a(-2187.0 / 6784.0), k5),
        (a(11.0 / 84.0), k6),
    ]);
    let k7 = f(t + h, y1);

    // difference of the embedded 4th-order weights
    let e = [
        a(71.0 / 57600.0),
        a(-71.0 / 16695.0),
        a(71.0 / 1920.0),
        a(-17253.0 / 339200.0),
        a(22.0 / 525.0),
        a(-1.0 / 40.0),
    ];
    let mut ratio = T::zero();
    for i in 0..2 {
        let err = h
            * (e[0] * k1[i]
                + e[1] * k3[i]
                + e[2] * k4[i]
                + e[3] * k5[i]
                + e[4] * k6[i]
                + e[5] * k7[i]);
        let sc = rel_tol * (y[i].abs() + (h * k1[i]).abs()) + real::<T>(1e-300);
        ratio = ratio.max((err / sc).abs());
    }
    (y1, ratio)
}

/// Integrates y' = f(t, y) from t0 to t1 (either direction) with an
/// adaptive embedded 5(4) pair at the given relative tolerance.
pub fn rk45<T: Real, F: Fn(T, [T; 2]) -> [T; 2]>(
    f: F,
    t0: T,
    y0: [T; 2],
    t1: T,
    rel_tol: T,
) -> Result<[T; 2]> {
    if t0 == t1 {
        return Ok(y0);
    }
    let span = t1 - t0;
    let mut t = t0;
    let mut y = y0;
    let mut h = span / real::<T>(256.0);
    let h_min = span.abs() * real::<T>(1e-14);
    for _ in 0..1_000_000usize {
        if (t1 - t) / span <= T::zero() {
            return Ok(y);
        }
        // do not step past the endpoint
        if ((t + h) - t1) / span > T::zero() {
            h = t1 - t;
        }
        let (y1, ratio) = dp_step(&f, t, y, h, rel_tol);
        if ratio <= T::one() {
            t += h;
            y = y1;
        }
        let shrink = if ratio > T::zero() {
            (T::one() / ratio).powf(real::<T>(0.2)) * real::<T>(0.9)
        } else {
            real::<T>(5.0)
        };
        h *= shrink.max(real::<T>(0.2)).min(real::<T>(5.0));
        if h.abs() < h_min {
            return Err(Error::OdeFailure {
                reason: "step size underflow",
            });
        }
    }
    Err(Error::OdeFailure {
        reason: "step budget exhausted",
    })
}

/// Regular-solution launch data R = r^L (1 + c2 r^2) at offset `r` from
/// a pole; `c2` is the second series coefficient in the pole variable.
fn series_launch<T: Real>(l: u32, c2: T, r: T) -> [T; 2] {
    let rl = r.powi(l as i32);
    let value = rl * (T::one() + c2 * r * r);
    let lead = if l == 0 {
        T::zero()
    } else {
        real_u::<T>(l) * r.powi(l as i32 - 1)
    };
    let slope = lead + real_u::<T>(l + 2) * c2 * rl * r;
    [value, slope]
}

/// Normalized matching defect at the equator: zero exactly at the
/// eigenvalues. Both half-solutions launch with the regular series at
/// offset eps from their pole.
fn shooting_mismatch<T: Real>(l: u32, kappa: Curvature<T>, energy_sq: T) -> Result<T> {
    let k = kappa.raw();
    let top = kappa.antipodal_distance().expect("checked spherical");
    let eps = real::<T>(LAUNCH_OFFSET) * top;
    let mid = kappa.equator_distance().expect("checked spherical");
    let ll1 = real_u::<T>(l * (l + 1));
    let rhs = |r: T, y: [T; 2]| {
        let s = sin_k(kappa, r);
        let c = cos_k(kappa, r);
        let s2 = s * s;
        [
            y[1],
            -(c / s) * (y[1] + y[1]) + (ll1 / s2 - energy_sq) * y[0],
        ]
    };
    // r-variable series coefficient: c2 = [kappa L(L+3)/3 - E^2]/(2(2L+3))
    let lf = real_u::<T>(l);
    let c2 = (k * lf * (lf + real::<T>(3.0)) / real::<T>(3.0) - energy_sq)
        / (real_u::<T>(2 * (2 * l + 3)));
    let tol = real::<T>(SHOOT_ODE_TOL);

    let left = rk45(rhs, eps, series_launch(l, c2, eps), mid, tol)?;
    let mut from_antipode = series_launch(l, c2, eps);
    from_antipode[1] = -from_antipode[1]; // slope flips under r -> top - r
    let right = rk45(rhs, top - eps, from_antipode, mid, tol)?;

    let w = left[0] * right[1] - right[0] * left[1];
    let norm = |y: [T; 2]| (y[0] * y[0] + y[1] * y[1]).sqrt();
    Ok(w / (norm(left) * norm(right)))
}

/// Eigenvalues E^2 inside the window, rediscovered by double shooting:
/// scan the window for sign changes of the matching defect, bisect each
/// bracket, return up to `count` values in increasing order.
pub fn shoot_eigenvalues<T: Real>(
    l: u32,
    kappa: Curvature<T>,
    window: (T, T),
    count: usize,
) -> Result<Vec<T>> {
    if kappa.raw() <= T::zero() {
        return Err(Error::CurvatureSign {
            required: "kappa > 0",
            kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
        });
    }
    let (lo, hi) = window;
    assert!(lo > T::zero() && hi > lo, "window must be positive");

    // consecutive exact eigenvalues are at least 3 kappa apart, so a
    // step of kappa cannot jump over a sign-change pair
    let span = hi - lo;
    let steps = (span / kappa.raw())
        .ceil()
        .to_usize()
        .unwrap_or(usize::MAX)
        .clamp(8, 100_000);
    let dx = span / real::<T>(steps as f64);
    let phase = real::<T>(SCAN_PHASE);

    let mut found = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for i in 0..steps {
        if found.len() >= count {
            break;
        }
        let x = lo + dx * (real::<T>(i as f64) + phase);
        if x >= hi {
            break;
        }
        let w = shooting_mismatch(l, kappa, x)?;
        if w == T::zero() {
            found.push(x);
            prev = None;
            continue;
        }
        if let Some((px, pw)) = prev {
            if (pw > T::zero()) != (w > T::zero()) {
                found.push(bisect_mismatch(l, kappa, (px, pw), (x, w))?);
            }
        }
        prev = Some((x, w));
    }
    found.truncate(count);
    if found.is_empty() {
        return Err(Error::NoEigenvalueInWindow {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(found)
}

fn bisect_mismatch<T: Real>(
    l: u32,
    kappa: Curvature<T>,
    mut lo: (T, T),
    mut hi: (T, T),
) -> Result<T> {
    for _ in 0..200 {
        let mid = (lo.0 + hi.0) * real::<T>(0.5);
        if hi.0 - lo.0 <= real::<T>(1e-10) * (T::one() + mid.abs()) {
            return Ok(mid);
        }
        let wm = shooting_mismatch(l, kappa, mid)?;
        if wm == T::zero() {
            return Ok(mid);
        }
        if (wm > T::zero()) == (lo.1 > T::zero()) {
            lo = (mid, wm);
        } else {
            hi = (mid, wm);
        }
    }
    Ok((lo.0 + hi.0) * real::<T>(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::radial_profile;
    use std::f64::consts::PI;

    fn sphere(kappa: f64) -> Curvature<f64> {
        Curvature::new(kappa).unwrap()
    }

    fn uniform_grid(lo: f64, hi: f64, m: usize) -> Vec<f64> {
        (0..m)
            .map(|i| lo + (hi - lo) * i as f64 / (m - 1) as f64)
            .collect()
    }

    #[test]
    fn rk45_exponential() {
        let y = rk45(|_, y| y, 0.0f64, [1.0, 2.0], 1.0, 1e-10).unwrap();
        let e = std::f64::consts::E;
        assert!((y[0] - e).abs() < 1e-9);
        assert!((y[1] - 2.0 * e).abs() < 2e-9);
    }

    #[test]
    fn rk45_runs_backward() {
        // y'' = -y launched at the quarter period, integrated back to 0
        let y = rk45(
            |_, y: [f64; 2]| [y[1], -y[0]],
            PI / 2.0,
            [1.0, 0.0],
            0.0,
            1e-10,
        )
        .unwrap();
        assert!(y[0].abs() < 1e-9);
        assert!((y[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rk45_reports_blowup() {
        // finite-time singularity at t = 1
        let res = rk45(
            |_, y: [f64; 2]| [y[0] * y[0], 0.0],
            0.0f64,
            [1.0, 0.0],
            2.0,
            1e-10,
        );
        assert!(matches!(res, Err(Error::OdeFailure { .. })), "{res:?}");
    }

    #[test]
    fn residual_constant_ground_state() {
        let p = radial_profile(0, 0, sphere(1.0)).unwrap();
        let grid = uniform_grid(0.2, 2.9, 41);
        let r = radial_operator_residual(&p, 0.0, &grid).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn residual_degree_three_profile() {
        // n=3, L=2: N=5, E^2 = 35
        let p = radial_profile(3, 2, sphere(1.0)).unwrap();
        let grid = uniform_grid(0.05 * PI, 0.95 * PI, 101);
        let r = radial_operator_residual(&p, 35.0, &grid).unwrap();
        assert!(r < 1e-6, "residual {r}");
    }

    #[test]
    fn residual_flat_space_bessel() {
        // j_1(kr) solves the kappa = 0 equation with E^2 = k^2.  The wider
        // step suits the unit normalization scale: rounding noise grows as
        // eps/h^2 and sits right at 1e-6 for h = 1e-5.
        let k = 1.7;
        let f = RadialFunction::new(1, Curvature::flat(), (0.0, 30.0), move |r: f64| {
            let x = k * r;
            x.sin() / (x * x) - x.cos() / x
        });
        let grid = uniform_grid(0.4, 14.0, 101);
        let r = radial_operator_residual_with_step(&f, k * k, &grid, 1e-4).unwrap();
        assert!(r < 1e-6, "residual {r}");
    }

    #[test]
    fn residual_converges_at_second_order() {
        let p = radial_profile(2, 1, sphere(1.0)).unwrap();
        let grid = uniform_grid(0.05 * PI, 0.95 * PI, 41);
        let coarse = radial_operator_residual_with_step(&p, 15.0, &grid, 2e-3).unwrap();
        let fine = radial_operator_residual_with_step(&p, 15.0, &grid, 5e-4).unwrap();
        // step ratio 4, second order: residual ratio near 16
        let ratio = coarse / fine;
        assert!((10.0..24.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn residual_rejects_detuned_energy() {
        let p = radial_profile(3, 2, sphere(1.0)).unwrap();
        let grid = uniform_grid(0.05 * PI, 0.95 * PI, 41);
        let r = radial_operator_residual(&p, 36.0, &grid).unwrap();
        assert!(r > 1e-3, "residual {r}");
    }

    #[test]
    fn shooting_rediscovers_s_wave_spectrum() {
        let got = shoot_eigenvalues(0, sphere(1.0), (0.5, 40.0), 10).unwrap();
        let want = [3.0, 8.0, 15.0, 24.0, 35.0];
        assert_eq!(got.len(), want.len(), "{got:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-6 * w, "got {g}, want {w}");
        }
    }

    #[test]
    fn shooting_respects_angular_momentum_floor() {
        let got = shoot_eigenvalues(2, sphere(1.0), (0.5, 40.0), 10).unwrap();
        let want = [8.0, 15.0, 24.0, 35.0];
        assert_eq!(got.len(), want.len(), "{got:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-6 * w, "got {g}, want {w}");
        }
    }

    #[test]
    fn shooting_count_truncates() {
        let got = shoot_eigenvalues(0, sphere(1.0), (0.5, 40.0), 2).unwrap();
        assert_eq!(got.len(), 2);
        assert!((got[0] - 3.0).abs() < 1e-5);
        assert!((got[1] - 8.0).abs() < 1e-5);
    }

    #[test]
    fn shooting_scales_with_curvature() {
        let base = shoot_eigenvalues(0, sphere(1.0), (0.5, 16.0), 10).unwrap();
        let scaled = shoot_eigenvalues(0, sphere(4.0), (2.0, 64.0), 10).unwrap();
        assert_eq!(base.len(), scaled.len());
        for (b, s) in base.iter().zip(&scaled) {
            assert!((s / b - 4.0).abs() < 1e-6, "{b} -> {s}");
        }
    }

    #[test]
    fn empty_window_is_an_error() {
        // L=5 has nothing below E^2 = 35
        let res = shoot_eigenvalues(5, sphere(1.0), (0.5, 20.0), 4);
        assert!(
            matches!(res, Err(Error::NoEigenvalueInWindow { .. })),
            "{res:?}"
        );
    }
}
