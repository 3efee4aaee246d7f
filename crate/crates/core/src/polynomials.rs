//! Radial polynomial families, built exactly over the rationals.
//!
//! The separated radial equation has two polynomial solution families in
//! the variable s: an even series f(s) (type I, R = s^L f) and an odd
//! sector g(s) entered through R = s^L sqrt(1 - kappa s^2) g(s)
//! (type II). Both truncate at the quantized energies, and both collapse
//! into one family of degree-n polynomials Q_{n,L}(xi) in the variable
//! xi = cos_k(r), normalized to Q_{n,L}(1) = 1:
//!
//! ```text
//! even n = 2 n_r:  Q(xi) =       sum_m c_m (1 - xi^2)^m
//! odd  n = 2n_r+1: Q(xi) = xi *  sum_m c_m (1 - xi^2)^m
//! ```
//!
//! with the c_m produced by the same two-term recursion that truncates
//! the s-series. All construction is exact big-rational arithmetic;
//! floating point enters only at evaluation.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::kappa_trig::{cos_k, sin_k, Curvature};
use crate::radial::RadialFunction;
use crate::real::{real, Real};

/// Fast-path cap on the Horner coefficient mass sum |c_j| |xi|^j.
/// Below it, compensated evaluation is accurate to ~mass * epsilon
/// absolute; above it (large n near xi = +-1) evaluation reruns in
/// exact rational arithmetic.
const FAST_EVAL_MASS: f64 = 1e3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolynomialFamily {
    /// Q_{n,L}(xi), xi = cos_k(r).
    UnifiedQ,
    /// Even f-series in s (type I).
    TypeIInS,
    /// Even g-series in s under the sqrt(1 - kappa s^2) prefactor (type II).
    TypeIIInS,
}

/// Dense polynomial with exact rational coefficients, c[j] multiplying
/// xi^j (or s^j for the s-families).
#[derive(Clone, Debug)]
pub struct RadialPolynomial {
    pub n: u32,
    pub l: u32,
    pub family: PolynomialFamily,
    coeffs: Vec<BigRational>,
    // evaluation caches: f64 images and a common-denominator integer view
    coeffs_f64: Vec<f64>,
    int_numerators: Vec<BigInt>,
    common_denominator: BigInt,
}

impl RadialPolynomial {
    pub fn new(n: u32, l: u32, family: PolynomialFamily, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(coeffs.len(), n as usize + 1, "need coefficients 0..=n");
        let coeffs_f64 = coeffs
            .iter()
            .map(|c| c.to_f64().expect("coefficient fits f64"))
            .collect();
        let mut common_denominator = BigInt::one();
        for c in &coeffs {
            common_denominator =
                &common_denominator * (c.denom() / c.denom().gcd(&common_denominator));
        }
        let int_numerators = coeffs
            .iter()
            .map(|c| c.numer() * (&common_denominator / c.denom()))
            .collect();
        Self {
            n,
            l,
            family,
            coeffs,
            coeffs_f64,
            int_numerators,
            common_denominator,
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact value at xi = 1 (the sum of the coefficients).
    pub fn value_at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    /// {n, L, coeffs: [[numerator, denominator], ...]} with the integers
    /// as decimal strings (they outgrow f64 and i64 quickly).
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "L": self.l,
            "coeffs": self.coeffs
                .iter()
                .map(|c| json!([c.numer().to_string(), c.denom().to_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

fn rat_i64(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients f_0 = 1, f_2, f_4, ... of the even type-I series, from
/// f_{2m+2} = [kappa (L+2m)(L+2m+2) - E^2] / ((2m+2)(2L+2m+3)) f_{2m}.
///
/// Stops after `max_terms` coefficients or when the series terminates,
/// whichever comes first.
pub fn type1_coefficients(
    l: u32,
    kappa: &BigRational,
    energy_sq: &BigRational,
    max_terms: usize,
) -> Vec<BigRational> {
    s_family_coefficients(l, kappa, energy_sq, max_terms, 0)
}

/// Type-II analogue: g_{2m+2} = [kappa (L+2m+1)(L+2m+3) - E^2] /
/// ((2m+2)(2L+2m+3)) g_{2m}.
pub fn type2_coefficients(
    l: u32,
    kappa: &BigRational,
    energy_sq: &BigRational,
    max_terms: usize,
) -> Vec<BigRational> {
    s_family_coefficients(l, kappa, energy_sq, max_terms, 1)
}

fn s_family_coefficients(
    l: u32,
    kappa: &BigRational,
    energy_sq: &BigRational,
    max_terms: usize,
    shift: u32,
) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    let mut m = 0u32;
    while out.len() < max_terms {
        let base = i64::from(l + 2 * m + shift);
        let num = kappa * rat_i64(base * (base + 2), 1) - energy_sq;
        if num.is_zero() {
            break; // terminated: every later coefficient vanishes
        }
        let den = rat_i64(i64::from(2 * m + 2) * i64::from(2 * l + 2 * m + 3), 1);
        let next = out.last().unwrap() * num / den;
        out.push(next);
        m += 1;
    }
    out
}

/// The unified polynomial Q_{n,L}, exact in the rationals, Q(1) = 1.
pub fn unified_q(n: u32, l: u32) -> RadialPolynomial {
    let n_r = n / 2;
    let parity = n % 2;
    let big_n = i64::from(n + l);
    let quantized = big_n * (big_n + 2); // E^2 / kappa at this level

    // c_{m+1}/c_m = [(L+2m+p)(L+2m+p+2) - N(N+2)] / ((2m+2)(2L+2m+3))
    let mut c = vec![BigRational::one()];
    for m in 0..n_r {
        let base = i64::from(l + 2 * m + parity);
        let num = base * (base + 2) - quantized;
        let den = i64::from(2 * m + 2) * i64::from(2 * l + 2 * m + 3);
        let next = c.last().unwrap() * rat_i64(num, den);
        c.push(next);
    }

    // expand sum_m c_m (1 - xi^2)^m (times xi when n is odd)
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for (m, cm) in c.iter().enumerate() {
        for i in 0..=m {
            let mut b = binomial(BigInt::from(m), BigInt::from(i));
            if i % 2 == 1 {
                b = -b;
            }
            coeffs[2 * i + parity as usize] += cm * BigRational::from(b);
        }
    }
    RadialPolynomial::new(n, l, PolynomialFamily::UnifiedQ, coeffs)
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Evaluates the polynomial at xi.
///
/// Compensated Horner (error-free product/sum transformations) keeps the
/// rounding error near one ulp of the value as long as the coefficient
/// mass sum |c_j| |xi|^j stays moderate; beyond that (large n close to
/// xi = +-1, where the monomial coefficients reach 1e13 and cancel) the
/// value is recomputed exactly over the rationals and rounded once.
pub fn eval_q<T: Real>(poly: &RadialPolynomial, xi: T) -> T {
    let cf = &poly.coeffs_f64;
    let top = cf.len() - 1;
    let ax = xi.abs();
    let mut s: T = real(cf[top]);
    let mut comp = T::zero();
    let mut mass: T = real(cf[top].abs());
    for j in (0..top).rev() {
        let (p, pe) = two_prod(s, xi);
        let (t, te) = two_sum(p, real(cf[j]));
        comp = comp * xi + (pe + te);
        s = t;
        mass = mass * ax + real(cf[j].abs());
    }
    if mass <= real(FAST_EVAL_MASS) {
        s + comp
    } else {
        eval_exact(poly, xi)
    }
}

fn eval_exact<T: Real>(poly: &RadialPolynomial, xi: T) -> T {
    let x = BigRational::from_float(xi.to_f64().expect("xi converts"))
        .expect("finite xi is an exact rational");
    let (p, q) = (x.numer().clone(), x.denom().clone());
    // integer Horner: acc_j = acc_{j+1} * p + N_j * q^(deg - j)
    let mut acc = poly.int_numerators.last().expect("nonempty").clone();
    let mut q_pow = BigInt::one();
    for j in (0..poly.int_numerators.len() - 1).rev() {
        q_pow = &q_pow * &q;
        acc = acc * &p + &poly.int_numerators[j] * &q_pow;
    }
    let value = BigRational::new(acc, &poly.common_denominator * q_pow);
    real(value.to_f64().expect("value fits f64"))
}

/// sin_k(r)^L Q_{n,L}(cos_k(r)) on the full sphere, kappa > 0.
pub fn radial_profile<T: Real>(n: u32, l: u32, kappa: Curvature<T>) -> Result<RadialFunction<T>> {
    if kappa.raw() <= T::zero() {
        return Err(Error::CurvatureSign {
            required: "kappa > 0",
            kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
        });
    }
    let q = unified_q(n, l);
    let hi = kappa.antipodal_distance().expect("spherical");
    Ok(RadialFunction::new(l, kappa, (T::zero(), hi), move |r| {
        sin_k(kappa, r).powi(l as i32) * eval_q(&q, cos_k(kappa, r))
    }))
}

/// Gegenbauer C_n^alpha(xi) by the three-term recurrence. Kept separate
/// from the rational construction so it can serve as an independent
/// cross-check of Q_{n,L} (alpha = L + 1, up to normalization).
pub fn gegenbauer_reference<T: Real>(n: u32, alpha: T, xi: T) -> T {
    if n == 0 {
        return T::one();
    }
    let two = real::<T>(2.0);
    let mut prev = T::one();
    let mut cur = two * alpha * xi;
    for m in 2..=n {
        let mf = real::<T>(f64::from(m));
        let next =
            (two * xi * (mf + alpha - T::one()) * cur - (mf + two * alpha - two) * prev) / mf;
        prev = cur;
        cur = next;
    }
    cur
}

/// All real roots in [-1, 1]: sign-change scan on a 1e5-point grid, each
/// bracket bisected to width 1e-13. Roots of the Q family are simple, so
/// the scan is exhaustive at this resolution for n <= ~50.
pub fn polynomial_roots(poly: &RadialPolynomial) -> Vec<f64> {
    const SCAN: usize = 100_000;
    const WIDTH: f64 = 1e-13;
    let f = |x: f64| eval_q(poly, x);
    let mut roots = Vec::new();
    let mut prev_x = -1.0f64;
    let mut prev_v = f(prev_x);
    for i in 1..=SCAN {
        let x = -1.0 + 2.0 * (i as f64) / (SCAN as f64);
        let v = f(x);
        if prev_v == 0.0 {
            roots.push(prev_x);
        } else if v != 0.0 && prev_v.signum() != v.signum() {
            let (mut lo, mut hi, mut f_lo) = (prev_x, x, prev_v);
            while hi - lo > WIDTH {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                } else if f_lo.signum() != fm.signum() {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
    }
    if prev_v == 0.0 {
        roots.push(prev_x);
    }
    roots
}
