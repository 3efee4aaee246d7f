//! Discrete spectrum on the sphere and quantum-number bookkeeping.
//!
//! Bound states exist only for kappa > 0. Each level is labeled by
//! (n_r, L, solution type); the polynomial degree n = 2 n_r (+1 for the
//! odd family) and the total number N = n + L fix the energy through
//! E^2 = kappa N (N + 2), so all levels sharing N are degenerate.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergeometric::HypergeometricParams;
use crate::kappa_trig::Curvature;
use crate::real::{real, real_u, Real};

/// The two radial solution families.
///
/// `EvenSeries` profiles are even polynomial series in s (degree n even);
/// `OddSector` profiles carry one factor sqrt(1 - kappa s^2) = cos_k(r)
/// in front (degree n odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionType {
    EvenSeries,
    OddSector,
}

impl fmt::Display for SolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionType::EvenSeries => "I",
            SolutionType::OddSector => "II",
        })
    }
}

/// One sphere eigensolution.
#[derive(Clone, Copy, Debug)]
pub struct SphereLevel<T> {
    pub n_r: u32,
    pub l: u32,
    pub solution_type: SolutionType,
    /// Polynomial degree, 2 n_r or 2 n_r + 1.
    pub n: u32,
    /// Total quantum number N = n + L.
    pub n_total: u32,
    /// E^2 / kappa = N (N + 2), exact.
    pub energy_coeff: u64,
    pub kappa: Curvature<T>,
}

impl<T: Real> SphereLevel<T> {
    pub fn new(n_r: u32, l: u32, solution_type: SolutionType, kappa: Curvature<T>) -> Result<Self> {
        if kappa.raw() <= T::zero() {
            return Err(Error::CurvatureSign {
                required: "kappa > 0",
                kappa: kappa.raw().to_f64().unwrap_or(f64::NAN),
            });
        }
        let n = match solution_type {
            SolutionType::EvenSeries => 2 * n_r,
            SolutionType::OddSector => 2 * n_r + 1,
        };
        let n_total = n + l;
        let energy_coeff = u64::from(n_total) * u64::from(n_total + 2);
        Ok(Self {
            n_r,
            l,
            solution_type,
            n,
            n_total,
            energy_coeff,
            kappa,
        })
    }

    /// E^2 = kappa N (N + 2).
    pub fn energy_sq(&self) -> T {
        self.kappa.raw() * real(self.energy_coeff as f64)
    }

    /// kappa / E^2 = 1 / (N (N + 2)); undefined for the N = 0 ground
    /// state, whose energy vanishes.
    pub fn kappa_tilde(&self) -> Option<T> {
        if self.energy_coeff == 0 {
            None
        } else {
            Some(T::one() / real(self.energy_coeff as f64))
        }
    }
}

/// E = (hbar^2 / 2m) kappa N (N + 2). The scale is caller-supplied; pass
/// 1 to work in natural units.
pub fn energy<T: Real>(level: &SphereLevel<T>, hbar_sq_over_2m: T) -> T {
    hbar_sq_over_2m * level.energy_sq()
}

/// Number of independent states at total quantum number N: the rotational
/// (2L+1) multiplicities summed over the N+1 admissible (n, L) splittings
/// collapse to (N+1)^2.
pub fn degeneracy(n_total: u32) -> u64 {
    let np1 = u64::from(n_total) + 1;
    np1 * np1
}

/// Everything with N = n + L <= N_max, ordered by (N, L). Each N
/// contributes N+1 levels, alternating between the two families as the
/// degree n = N - L steps down.
pub fn enumerate_levels<T: Real>(n_max: u32, kappa: Curvature<T>) -> Result<Vec<SphereLevel<T>>> {
    let mut out = Vec::with_capacity(((n_max as usize + 1) * (n_max as usize + 2)) / 2);
    for n_total in 0..=n_max {
        for l in 0..=n_total {
            let n = n_total - l;
            let level = if n % 2 == 0 {
                SphereLevel::new(n / 2, l, SolutionType::EvenSeries, kappa)?
            } else {
                SphereLevel::new((n - 1) / 2, l, SolutionType::OddSector, kappa)?
            };
            out.push(level);
        }
    }
    Ok(out)
}

fn params_with_offset<T: Real>(l: u32, kappa_tilde: T, offset: u32) -> HypergeometricParams<T> {
    // B = sqrt(kappa_tilde (kappa_tilde + 1)) / kappa_tilde, real for
    // kappa_tilde > 0; the unordered pair {a, b} is stored with a <= b
    let b_param = (T::one() + T::one() / kappa_tilde).sqrt();
    let half = real::<T>(0.5);
    let base = real_u::<T>(l + offset);
    let c = real_u::<T>(l) + real::<T>(1.5);
    HypergeometricParams::real_pair(half * (base - b_param), half * (base + b_param), c)
}

/// Parameters (a, b; c) of the even-family radial series in t. Terminates
/// at degree n_r exactly when kappa_tilde = 1/((2n_r+L)(2n_r+L+2)).
pub fn hypergeometric_params_type1<T: Real>(l: u32, kappa_tilde: T) -> HypergeometricParams<T> {
    params_with_offset(l, kappa_tilde, 1)
}

/// Parameters of the odd-family series; termination moves to
/// kappa_tilde = 1/((2n_r+L+1)(2n_r+L+3)).
pub fn hypergeometric_params_type2<T: Real>(l: u32, kappa_tilde: T) -> HypergeometricParams<T> {
    params_with_offset(l, kappa_tilde, 2)
}

/// Dimensionless frame for the radial problem: rho = E s rescales the
/// projected radius, kappa_tilde = kappa / E^2, and the series variable
/// t = kappa_tilde rho^2 (= kappa s^2, negative on hyperbolic spaces).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdimensionalState<T> {
    pub rho: T,
    pub kappa_tilde: T,
    pub t: T,
}

impl<T: Real> AdimensionalState<T> {
    pub fn from_radial(s: T, kappa: Curvature<T>, energy_sq: T) -> Result<Self> {
        // NaN must land here too, not sneak past the comparison
        if energy_sq <= T::zero() || energy_sq.is_nan() {
            return Err(Error::NonpositiveEnergy {
                energy_sq: energy_sq.to_f64().unwrap_or(f64::NAN),
            });
        }
        let rho = energy_sq.sqrt() * s;
        let kappa_tilde = kappa.raw() / energy_sq;
        Ok(Self {
            rho,
            kappa_tilde,
            t: kappa_tilde * rho * rho,
        })
    }
}
