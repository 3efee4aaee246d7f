//! Integration against the invariant radial measure sin_k(r)^2 dr on
//! [0, pi/sqrt(kappa)], the Gram matrices that exhibit orthogonality of
//! the polynomial profiles, and the self-adjoint (Sturm-Liouville) forms
//! of the two s-variable equations.
//!
//! Production integrals run in the r variable where the weight is
//! smooth. The s-variable forms carry a 1/sqrt(1 - kappa s^2) endpoint
//! singularity and exist here for residual checks and the substitution
//! cross-check; a tanh-sinh rule handles those endpoints.

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::kappa_trig::{cos_k, sin_k, Curvature};
use crate::polynomials::{eval_q, unified_q};
use crate::real::{real, real_u, Real};
use crate::spectrum::SolutionType;

/// Fixed panel order; integrands are polynomial x trig, so moderate
/// order converges fast under dyadic refinement.
const GL_ORDER: usize = 32;
/// Absolute floor under every relative tolerance.
const ABS_FLOOR: f64 = 1e-15;
/// Dyadic refinement cutoff.
const MAX_DEPTH: u32 = 28;
/// Internal tolerance for Gram-matrix entries.
const GRAM_REL_TOL: f64 = 1e-13;

/// Nodes and weights on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

fn legendre_pair<T: Real>(order: usize, x: T) -> (T, T) {
    let mut prev = T::one();
    let mut cur = x;
    for k in 2..=order {
        let kf = real::<T>(k as f64);
        let next = ((real::<T>(2.0) * kf - T::one()) * x * cur - (kf - T::one()) * prev) / kf;
        prev = cur;
        cur = next;
    }
    let n = real::<T>(order as f64);
    let dp = n * (x * cur - prev) / (x * x - T::one());
    (cur, dp)
}

impl<T: Real> GaussLegendre<T> {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2);
        let mut nodes = vec![T::zero(); order];
        let mut weights = vec![T::zero(); order];
        let two = real::<T>(2.0);
        for i in 0..order / 2 {
            // Newton from the Chebyshev-like estimate; converges in a
            // handful of steps
            let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
            let mut x = real::<T>(guess);
            for _ in 0..100 {
                let (p, d) = legendre_pair(order, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() <= T::epsilon() * x.abs().max(T::one()) {
                    break;
                }
            }
            let (_, dp) = legendre_pair(order, x);
            let w = two / ((T::one() - x * x) * dp * dp);
            nodes[i] = x;
            weights[i] = w;
            nodes[order - 1 - i] = -x;
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            let (_, dp) = legendre_pair(order, T::zero());
            nodes[order / 2] = T::zero();
            weights[order / 2] = two / (dp * dp);
        }
        Self { nodes, weights }
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: &F, a: T, b: T) -> T {
        let half = (b - a) * real::<T>(0.5);
        let mid = (a + b) * real::<T>(0.5);
        let mut acc = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += *w * f(mid + half * *x);
        }
        acc * half
    }
}

fn adaptive_with_scale<T: Real, F: Fn(T) -> T>(
    rule: &GaussLegendre<T>,
    f: &F,
    a: T,
    b: T,
    rel_tol: T,
    scale_hint: Option<T>,
) -> Result<T> {
    let whole = rule.integrate(f, a, b);
    let scale = scale_hint.unwrap_or_else(|| whole.abs());
    let tol_abs = (rel_tol * scale).max(real(ABS_FLOOR));
    let total_len = b - a;
    let mut stack = vec![(a, b, whole, 0u32)];
    let mut total = T::zero();
    let mut err_bound = T::zero();
    while let Some((pa, pb, pwhole, depth)) = stack.pop() {
        let mid = (pa + pb) * real::<T>(0.5);
        let left = rule.integrate(f, pa, mid);
        let right = rule.integrate(f, mid, pb);
        let refined = left + right;
        let diff = (refined - pwhole).abs();
        // each panel gets a length-proportional share of the budget
        let budget = tol_abs * ((pb - pa) / total_len);
        if diff <= budget || depth >= MAX_DEPTH {
            total += refined;
            err_bound += diff;
        } else {
            stack.push((pa, mid, left, depth + 1));
            stack.push((mid, pb, right, depth + 1));
        }
    }
    if err_bound > tol_abs + tol_abs {
        return Err(Error::QuadratureTolerance {
            estimate: total.to_f64().unwrap_or(f64::NAN),
            error_bound: err_bound.to_f64().unwrap_or(f64::NAN),
            requested: rel_tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(total)
}

/// Adaptive Gauss-Legendre integral of f over [a, b], plain measure.
pub fn integrate_adaptive<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, rel_tol: T) -> Result<T> {
    let rule = GaussLegendre::new(GL_ORDER);
    adaptive_with_scale(&rule, &f, a, b, rel_tol, None)
}

/// Integral of f(r) sin_k(r)^2 dr over the full sphere radius
/// [0, pi/sqrt(kappa)].
pub fn integrate_radial<T: Real, F: Fn(T) -> T>(
    f: F,
    kappa: Curvature<T>,
    rel_tol: T,
) -> Result<T> {
    let Some(top) = kappa.antipodal_distance() else {
        return Err(Error::CurvatureSign {
            required: "kappa > 0",
            kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
        });
    };
    let rule = GaussLegendre::new(GL_ORDER);
    let g = |r: T| {
        let s = sin_k(kappa, r);
        f(r) * s * s
    };
    adaptive_with_scale(&rule, &g, T::zero(), top, rel_tol, None)
}

/// Gram matrix G[i][j] = integral of the two degree-n_i, n_j profiles
/// sharing L, against the invariant measure. Off-diagonal entries are
/// pure orthogonality defect; diagonals are the (positive) norms.
pub fn orthogonality_matrix<T: Real>(
    l: u32,
    ns: &[u32],
    kappa: Curvature<T>,
) -> Result<Vec<Vec<T>>> {
    let Some(top) = kappa.antipodal_distance() else {
        return Err(Error::CurvatureSign {
            required: "kappa > 0",
            kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
        });
    };
    let rule = GaussLegendre::new(GL_ORDER);
    let polys: Vec<_> = ns.iter().map(|&n| unified_q(n, l)).collect();
    let rel_tol = real::<T>(GRAM_REL_TOL);
    let weight_pow = (2 * l + 2) as i32;
    let entry = |i: usize, j: usize, hint: Option<T>| {
        let f = |r: T| {
            let xi = cos_k(kappa, r);
            sin_k(kappa, r).powi(weight_pow) * eval_q(&polys[i], xi) * eval_q(&polys[j], xi)
        };
        adaptive_with_scale(&rule, &f, T::zero(), top, rel_tol, hint)
    };

    let m = ns.len();
    let mut gram = vec![vec![T::zero(); m]; m];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = entry(i, i, None)?;
    }
    for i in 0..m {
        for j in i + 1..m {
            // a true-zero entry has no relative scale of its own; borrow
            // the norm scale so the budget matches the defect definition
            let hint = (gram[i][i] * gram[j][j]).sqrt();
            let v = entry(i, j, Some(hint))?;
            gram[i][j] = v;
            gram[j][i] = v;
        }
    }
    Ok(gram)
}

/// Off-diagonal defects |G_ij| / sqrt(G_ii G_jj); zeros on the diagonal.
pub fn normalized_defects<T: Real>(gram: &[Vec<T>]) -> Vec<Vec<T>> {
    let m = gram.len();
    let mut out = vec![vec![T::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j {
                out[i][j] = gram[i][j].abs() / (gram[i][i] * gram[j][j]).sqrt();
            }
        }
    }
    out
}

/// Self-adjoint form p(s) u'' + p'(s) u' + lambda q(s) u = 0 of the two
/// even-series equations in s. p vanishes at both endpoints s = 0 and
/// s = 1/sqrt(kappa): the problem is singular, which is what makes the
/// endpoint-condition-free orthogonality work.
#[derive(Clone, Copy, Debug)]
pub struct SturmLiouvilleForm<T> {
    pub family: SolutionType,
    pub l: u32,
    pub kappa: Curvature<T>,
}

impl<T: Real> SturmLiouvilleForm<T> {
    pub fn new(family: SolutionType, l: u32, kappa: Curvature<T>) -> Self {
        Self { family, l, kappa }
    }

    fn w(&self, s: T) -> T {
        (T::one() - self.kappa.raw() * s * s).sqrt()
    }

    pub fn p(&self, s: T) -> T {
        let w = self.w(s);
        let base = s.powi((2 * self.l + 2) as i32);
        match self.family {
            SolutionType::EvenSeries => base * w,
            SolutionType::OddSector => base * w * w * w,
        }
    }

    pub fn p_prime(&self, s: T) -> T {
        let k = self.kappa.raw();
        let ks2 = k * s * s;
        let w = self.w(s);
        let two_l_2 = real_u::<T>(2 * self.l + 2);
        let base = s.powi((2 * self.l + 1) as i32);
        match self.family {
            SolutionType::EvenSeries => base * (two_l_2 * (T::one() - ks2) - ks2) / w,
            SolutionType::OddSector => {
                base * w * (two_l_2 * (T::one() - ks2) - real::<T>(3.0) * ks2)
            }
        }
    }

    pub fn q_weight(&self, s: T) -> T {
        let w = self.w(s);
        let base = s.powi((2 * self.l + 2) as i32);
        match self.family {
            SolutionType::EvenSeries => base / w,
            SolutionType::OddSector => base * w,
        }
    }

    /// lambda = E^2 - lambda_shift.
    pub fn lambda_shift(&self) -> T {
        let lf = real_u::<T>(self.l);
        let shift = match self.family {
            SolutionType::EvenSeries => lf * (lf + real::<T>(2.0)),
            SolutionType::OddSector => real::<T>(3.0) + lf * (lf + real::<T>(4.0)),
        };
        self.kappa.raw() * shift
    }

    pub fn lambda(&self, energy_sq: T) -> T {
        energy_sq - self.lambda_shift()
    }
}

/// Max over an interior s-grid of |p u'' + p' u' + lambda q u| for the
/// even-series polynomial u(s) = sum a_m s^(2m), relative to the scale
/// max |lambda q u|. Derivatives of u are taken analytically from the
/// exact coefficients.
pub fn sl_residual<T: Real>(
    family: SolutionType,
    l: u32,
    kappa: Curvature<T>,
    energy_sq: T,
    poly_in_s: &[BigRational],
) -> T {
    assert!(
        kappa.raw() > T::zero(),
        "self-adjoint forms are for the sphere"
    );
    const GRID: u32 = 200;
    let form = SturmLiouvilleForm::new(family, l, kappa);
    let lambda = form.lambda(energy_sq);
    let a: Vec<T> = poly_in_s
        .iter()
        .map(|c| real(c.to_f64().expect("coefficient fits f64")))
        .collect();

    // u = A(u2), u2 = s^2; u' = 2s A'; u'' = 2A' + 4 s^2 A''
    let horner3 = |u2: T| {
        let mut v = T::zero();
        let mut dv = T::zero();
        let mut ddv = T::zero();
        for &c in a.iter().rev() {
            ddv = ddv * u2 + dv + dv;
            dv = dv * u2 + v;
            v = v * u2 + c;
        }
        (v, dv, ddv)
    };

    let s_max = T::one() / kappa.raw().sqrt();
    let mut worst = T::zero();
    let mut scale = T::zero();
    for j in 1..=GRID {
        let s = s_max * real_u::<T>(j) / real_u::<T>(GRID + 1);
        let (v, dv, ddv) = horner3(s * s);
        let u = v;
        let du = (dv + dv) * s;
        let ddu = dv + dv + real::<T>(4.0) * s * s * ddv;
        let driven = lambda * form.q_weight(s) * u;
        let res = form.p(s) * ddu + form.p_prime(s) * du + driven;
        worst = worst.max(res.abs());
        scale = scale.max(driven.abs());
    }
    if scale > T::zero() {
        worst / scale
    } else {
        worst
    }
}

/// Tanh-sinh quadrature of f over [a, b], tolerant of integrable
/// endpoint singularities. The integrand receives (x, x - a, b - x) with
/// the endpoint distances computed stably, so weights like
/// 1/sqrt(b - x) stay accurate where x - b underflows.
pub fn tanh_sinh<T: Real, F: Fn(T, T, T) -> T>(f: F, a: T, b: T, rel_tol: T) -> Result<T> {
    const MAX_LEVEL: u32 = 12;
    let half_len = (b - a) * real::<T>(0.5);
    let pi_half = real::<T>(std::f64::consts::FRAC_PI_2);

    // contribution of the abscissa at parameter t (both signs handled by
    // the caller loop via symmetry of the rule, not of f)
    let point = |t: T| -> (T, T, T, T) {
        let u = pi_half * t.sinh();
        // b - x = (b-a)/(1+e^{2u}) and x - a = (b-a)/(1+e^{-2u}): both
        // forms are cancellation-free however close x sits to an end
        let dist_hi = (b - a) / (T::one() + (u + u).exp());
        let dist_lo = (b - a) / (T::one() + (-(u + u)).exp());
        let x = if t >= T::zero() {
            b - dist_hi
        } else {
            a + dist_lo
        };
        let sech = T::one() / u.cosh();
        let w = pi_half * t.cosh() * sech * sech * half_len;
        (x, dist_lo, dist_hi, w)
    };

    let eval_at = |t: T| -> T {
        let (x, dlo, dhi, w) = point(t);
        if w <= T::zero() || dlo <= T::zero() || dhi <= T::zero() {
            return T::zero();
        }
        w * f(x, dlo, dhi)
    };

    let sum_level = |h: T, odd_only: bool| -> T {
        let mut acc = T::zero();
        let mut k: u64 = if odd_only { 1 } else { 0 };
        let step: u64 = if odd_only { 2 } else { 1 };
        loop {
            let t = h * real::<T>(k as f64);
            let term = if k == 0 {
                eval_at(T::zero())
            } else {
                eval_at(t) + eval_at(-t)
            };
            acc += term;
            if t > real::<T>(3.0) && term.abs() <= acc.abs() * T::epsilon() {
                break;
            }
            if t > real::<T>(9.0) {
                break;
            }
            k += step;
        }
        acc
    };

    let mut h = T::one();
    let mut sum = sum_level(h, false);
    let mut estimate = sum * h;
    let mut last_change = T::infinity();
    for level in 0..MAX_LEVEL {
        h *= real::<T>(0.5);
        sum += sum_level(h, true);
        let next = sum * h;
        last_change = (next - estimate).abs();
        estimate = next;
        // digits double per level; demand two levels before trusting a
        // small step, so a lucky early agreement cannot end the rule.
        // The floor keeps a true-zero integral convergent: its changes
        // are rounding noise that no relative test could ever pass.
        if level >= 2 && last_change <= (rel_tol * estimate.abs()).max(real(ABS_FLOOR)) {
            return Ok(estimate);
        }
    }
    Err(Error::QuadratureTolerance {
        estimate: estimate.to_f64().unwrap_or(f64::NAN),
        error_bound: last_change.to_f64().unwrap_or(f64::NAN),
        requested: rel_tol.to_f64().unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::type1_coefficients;
    use crate::polynomials::type2_coefficients;
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn sphere(kappa: f64) -> Curvature<f64> {
        Curvature::new(kappa).unwrap()
    }

    #[test]
    fn gl5_matches_published_nodes() {
        let rule = GaussLegendre::<f64>::new(5);
        let want_nodes = [
            0.906179845938664,
            0.538469310105683,
            0.0,
            -0.538469310105683,
            -0.906179845938664,
        ];
        let want_weights = [
            0.236926885056189,
            0.478628670499366,
            0.568888888888889,
            0.478628670499366,
            0.236926885056189,
        ];
        for i in 0..5 {
            assert!((rule.nodes[i] - want_nodes[i]).abs() < 1e-14, "node {i}");
            assert!(
                (rule.weights[i] - want_weights[i]).abs() < 1e-14,
                "weight {i}"
            );
        }
    }

    #[test]
    fn gl32_is_exact_on_high_degree_monomials() {
        let rule = GaussLegendre::<f64>::new(32);
        // exact through degree 63
        let got = rule.integrate(&|x: f64| x.powi(62), -1.0, 1.0);
        assert!((got - 2.0 / 63.0).abs() < 1e-15);
        let odd = rule.integrate(&|x: f64| x.powi(31), -1.0, 1.0);
        assert!(odd.abs() < 1e-16);
    }

    #[test]
    fn radial_measure_closed_forms() {
        // unit weight: integral of sin^2 over [0, pi]
        let v = integrate_radial(|_| 1.0f64, sphere(1.0), 1e-13).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-13);

        // degree-1 profile squared: integral of cos^2 sin^2 = pi/8
        let q1 = unified_q(1, 0);
        let v =
            integrate_radial(|r: f64| eval_q(&q1, r.cos()).powi(2), sphere(1.0), 1e-13).unwrap();
        assert!((v - PI / 8.0).abs() < 1e-13);

        // kappa = 4: sin_k = sin(2r)/2 on [0, pi/2]; substitution u = 2r
        // gives (1/8) integral of sin^2 u du over [0, pi] = pi/16
        let v = integrate_radial(|_| 1.0f64, sphere(4.0), 1e-13).unwrap();
        assert!((v - PI / 16.0).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn oscillatory_integrand_subdivides() {
        // sin^2(40 r) against the measure; cross terms integrate to zero
        let v = integrate_radial(|r: f64| (40.0 * r).sin().powi(2), sphere(1.0), 1e-12).unwrap();
        assert!((v - PI / 4.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn unmeetable_tolerance_is_reported() {
        let jump = 1.0 / 2.0f64.sqrt();
        let res = integrate_radial(
            |r: f64| if r < jump { 0.0 } else { 1.0 },
            sphere(1.0),
            1e-14,
        );
        assert!(
            matches!(res, Err(Error::QuadratureTolerance { .. })),
            "{res:?}"
        );
    }

    #[test]
    fn flat_space_has_no_compact_radius() {
        assert!(integrate_radial(|_| 1.0f64, Curvature::flat(), 1e-10).is_err());
    }

    #[test]
    fn scaling_law_in_curvature() {
        for kappa in [0.5f64, 2.0, 4.0, 9.0] {
            let v = integrate_radial(|_| 1.0f64, sphere(kappa), 1e-13).unwrap();
            let want = PI / (2.0 * kappa.powf(1.5));
            assert!((v - want).abs() < 1e-13 * want.max(1.0), "kappa={kappa}");
        }
    }

    #[test]
    fn gram_first_entries() {
        let g = orthogonality_matrix(0, &[0, 1], sphere(1.0)).unwrap();
        assert!((g[0][0] - PI / 2.0).abs() < 1e-13);
        assert!((g[1][1] - PI / 8.0).abs() < 1e-13);
        // integrand cos(r) sin^2(r) is odd about the equator
        assert!(g[0][1].abs() < 1e-15, "defect {}", g[0][1]);
    }

    #[test]
    fn gram_same_parity_pairs() {
        let g = orthogonality_matrix(0, &[2, 4], sphere(1.0)).unwrap();
        let bound = 1e-12 * (g[0][0] * g[1][1]).sqrt();
        assert!(g[0][1].abs() < bound, "{} vs {bound}", g[0][1]);

        let g = orthogonality_matrix(3, &[5, 13], sphere(1.0)).unwrap();
        let bound = 1e-12 * (g[0][0] * g[1][1]).sqrt();
        assert!(g[0][1].abs() < bound, "{} vs {bound}", g[0][1]);
    }

    #[test]
    fn gram_block_is_diagonal() {
        let ns: Vec<u32> = (0..=9).collect();
        for l in [0u32, 2] {
            let g = orthogonality_matrix(l, &ns, sphere(1.0)).unwrap();
            let d = normalized_defects(&g);
            for i in 0..ns.len() {
                assert!(g[i][i] > 0.0);
                for (j, &dij) in d[i].iter().enumerate() {
                    if i != j {
                        assert!(dij < 1e-10, "L={l} ({i},{j}): {dij}");
                    }
                }
            }
        }
    }

    #[test]
    fn self_adjoint_coefficients_vanish_at_endpoints() {
        for family in [SolutionType::EvenSeries, SolutionType::OddSector] {
            let form = SturmLiouvilleForm::new(family, 1, sphere(4.0));
            assert_eq!(form.p(0.0), 0.0);
            assert!(form.p(0.5).abs() < 1e-16); // s_max = 1/2
            assert!(form.p(0.25) > 0.0);
        }
    }

    #[test]
    fn lambda_shifts() {
        let f = SturmLiouvilleForm::new(SolutionType::EvenSeries, 2, sphere(1.0));
        assert_eq!(f.lambda(24.0), 24.0 - 8.0);
        let g = SturmLiouvilleForm::new(SolutionType::OddSector, 0, sphere(1.0));
        assert_eq!(g.lambda(15.0), 12.0);
        let g1 = SturmLiouvilleForm::new(SolutionType::OddSector, 1, sphere(2.0));
        assert_eq!(g1.lambda_shift(), 2.0 * (3.0 + 5.0));
    }

    #[test]
    fn residual_zero_for_constant_ground_state() {
        // E^2 = kappa L (L+2) makes lambda = 0 and the polynomial constant
        let one = vec![BigRational::from(BigInt::from(1))];
        let r = sl_residual(SolutionType::EvenSeries, 3, sphere(1.0), 15.0, &one);
        assert_eq!(r, 0.0);
    }

    #[test]
    fn residual_even_family_example() {
        // L=2, n_r=1, kappa=1: E^2 = (2 + 2)(2 + 4) = 24
        let kappa = BigRational::from(BigInt::from(1));
        let e2 = BigRational::from(BigInt::from(24));
        let poly = type1_coefficients(2, &kappa, &e2, 16);
        assert_eq!(poly.len(), 2);
        let r = sl_residual(SolutionType::EvenSeries, 2, sphere(1.0), 24.0, &poly);
        assert!(r < 1e-11, "residual {r}");
    }

    #[test]
    fn residual_odd_family_example() {
        // L=0, n_r=2, kappa=1: E^2 = 5 * 7 = 35
        let kappa = BigRational::from(BigInt::from(1));
        let e2 = BigRational::from(BigInt::from(35));
        let poly = type2_coefficients(0, &kappa, &e2, 16);
        assert_eq!(poly.len(), 3);
        let r = sl_residual(SolutionType::OddSector, 0, sphere(1.0), 35.0, &poly);
        assert!(r < 1e-11, "residual {r}");
    }

    #[test]
    fn residual_fractional_curvature() {
        // kappa = 4/9, L=1, n_r=2 even family: E^2 = kappa (L+4)(L+6)...
        // (2 n_r + L)(2 n_r + L + 2) = 5 * 7 scaled by kappa
        let kappa = BigRational::new(BigInt::from(4), BigInt::from(9));
        let e2 = &kappa * BigRational::from(BigInt::from(35));
        let poly = type1_coefficients(1, &kappa, &e2, 16);
        assert_eq!(poly.len(), 3);
        let r = sl_residual(
            SolutionType::EvenSeries,
            1,
            sphere(4.0 / 9.0),
            (4.0 / 9.0) * 35.0,
            &poly,
        );
        assert!(r < 1e-11, "residual {r}");
    }

    #[test]
    fn residual_detects_wrong_energy() {
        // same polynomial, detuned energy: the oracle must complain
        let kappa = BigRational::from(BigInt::from(1));
        let e2 = BigRational::from(BigInt::from(24));
        let poly = type1_coefficients(2, &kappa, &e2, 16);
        let r = sl_residual(SolutionType::EvenSeries, 2, sphere(1.0), 24.5, &poly);
        assert!(r > 1e-3, "residual {r}");
    }

    #[test]
    fn tanh_sinh_smooth_and_singular() {
        let v = tanh_sinh(|x, _, _| x, 0.0f64, 1.0, 1e-12).unwrap();
        assert!((v - 0.5).abs() < 1e-12);

        // inverse-square-root edge: integral of 1/sqrt(1-x) over [0,1] = 2
        let v = tanh_sinh(|_, _, dhi: f64| 1.0 / dhi.sqrt(), 0.0f64, 1.0, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 2e-12, "got {v}");

        // both endpoints singular: beta(1/2, 1/2) = pi
        let v = tanh_sinh(
            |_, dlo: f64, dhi: f64| 1.0 / (dlo * dhi).sqrt(),
            0.0f64,
            1.0,
            1e-12,
        )
        .unwrap();
        assert!((v - PI).abs() < 2e-12, "got {v}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn measure_scaling_property(kappa in 0.3f64..6.0) {
            let v = integrate_radial(|_| 1.0f64, sphere(kappa), 1e-12).unwrap();
            let want = PI / (2.0 * kappa.powf(1.5));
            prop_assert!((v - want).abs() < 1e-12 * want.max(1.0));
        }

        #[test]
        fn adaptive_linearity(alpha in -3.0f64..3.0) {
            let base = integrate_adaptive(|x: f64| x * x + 1.0, 0.0, 2.0, 1e-12).unwrap();
            let scaled = integrate_adaptive(move |x: f64| alpha * (x * x + 1.0), 0.0, 2.0, 1e-12).unwrap();
            prop_assert!((scaled - alpha * base).abs() < 1e-10 * base.abs().max(1.0));
        }
    }
}
