//! Consistency checks that tie independent modules together: the exact
//! rational series against the hypergeometric evaluator, and the two
//! analytically equivalent routes to the orthogonality integrals.

use curvedwave::hypergeometric::gauss_2f1;
use curvedwave::kappa_trig::{sin_k, Curvature};
use curvedwave::polynomials::{type1_coefficients, type2_coefficients};
use curvedwave::quadrature::{integrate_adaptive, tanh_sinh};
use curvedwave::spectrum::{hypergeometric_params_type1, hypergeometric_params_type2};
use curvedwave::Rational;
use num_traits::ToPrimitive;

fn brat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn horner_even(coeffs: &[f64], s: f64) -> f64 {
    let s2 = s * s;
    coeffs.iter().rev().fold(0.0, |acc, c| acc * s2 + c)
}

/// The terminating s-series of either family is the same function the
/// hypergeometric evaluator produces from the spectrum's parameter map,
/// in the variable t = kappa s^2.
#[test]
fn s_series_equals_hypergeometric_series() {
    for (n_r, l) in [(2u32, 1u32), (3, 0), (1, 4)] {
        for (kap_num, kap_den) in [(1i64, 1i64), (1, 4)] {
            let kappa = kap_num as f64 / kap_den as f64;
            for shift in [0u32, 1] {
                // shift 0: even family, N = 2 n_r + l; shift 1: odd family
                let n_total = 2 * n_r + l + shift;
                let e2 = kappa * f64::from(n_total * (n_total + 2));
                let kappa_tilde = kappa / e2;
                let (params, coeffs) = if shift == 0 {
                    (
                        hypergeometric_params_type1(l, kappa_tilde),
                        type1_coefficients(
                            l,
                            &brat(kap_num, kap_den),
                            &brat(kap_num * i64::from(n_total * (n_total + 2)), kap_den),
                            (n_r + 3) as usize,
                        ),
                    )
                } else {
                    (
                        hypergeometric_params_type2(l, kappa_tilde),
                        type2_coefficients(
                            l,
                            &brat(kap_num, kap_den),
                            &brat(kap_num * i64::from(n_total * (n_total + 2)), kap_den),
                            (n_r + 3) as usize,
                        ),
                    )
                };
                let cf: Vec<f64> = coeffs.iter().map(|c| c.to_f64().unwrap()).collect();
                let s_top = 0.95 / kappa.sqrt();
                for i in 1..=4 {
                    let s = s_top * f64::from(i) / 4.0;
                    let direct = horner_even(&cf, s);
                    let via_2f1 = gauss_2f1(&params, kappa * s * s).unwrap();
                    assert!(
                        (direct - via_2f1).abs() < 1e-13 * (1.0 + direct.abs()),
                        "n_r={} l={} kappa={} shift={}: {} vs {}",
                        n_r,
                        l,
                        kappa,
                        shift,
                        direct,
                        via_2f1
                    );
                }
            }
        }
    }
}

/// The s-variable orthogonality integral with its inverse square-root
/// weight equals the r-variable half-sphere integral after s = Sin_k(r):
/// tanh-sinh handles the endpoint singularity, the adaptive panel rule
/// handles the smooth form, and the two must agree.
#[test]
fn orthogonality_routes_agree() {
    let cases = [
        (0u32, 0u32, 0u32, 1.0f64), // (i, j, L, kappa)
        (1, 1, 2, 1.0),
        (2, 2, 1, 4.0),
        (0, 1, 0, 1.0),
    ];
    let mut diag_scale = 0.0f64;
    for &(i, j, l, kappa) in &cases {
        let kr = Rational::from_float(kappa).unwrap();
        let poly = |n_r: u32| -> Vec<f64> {
            let n_total = 2 * n_r + l;
            let e2 = &kr * Rational::from_integer(i64::from(n_total * (n_total + 2)).into());
            type1_coefficients(l, &kr, &e2, (n_r + 3) as usize)
                .iter()
                .map(|c| c.to_f64().unwrap())
                .collect()
        };
        let pi_c = poly(i);
        let pj_c = poly(j);
        let c_top = 1.0 / kappa.sqrt();
        let weight_pow = (2 * l + 2) as i32;

        let s_route = tanh_sinh(
            |s: f64, _dlo: f64, dhi: f64| {
                let root = (kappa * dhi * (s + c_top)).sqrt();
                horner_even(&pi_c, s) * horner_even(&pj_c, s) * s.powi(weight_pow) / root
            },
            0.0,
            c_top,
            1e-12,
        )
        .unwrap();

        let curv = Curvature::new(kappa).unwrap();
        let equator = curv.equator_distance().unwrap();
        let r_route = integrate_adaptive(
            |r: f64| {
                let s = sin_k(curv, r);
                horner_even(&pi_c, s) * horner_even(&pj_c, s) * s.powi(weight_pow)
            },
            0.0,
            equator,
            1e-12,
        )
        .unwrap();

        if i == j {
            diag_scale = diag_scale.max(s_route);
            assert!(
                ((s_route - r_route) / s_route).abs() < 1e-10,
                "norm route mismatch at (n_r={}, L={}, kappa={}): {} vs {}",
                i,
                l,
                kappa,
                s_route,
                r_route
            );
        } else {
            // a cross term: both routes must see (near-)zero
            assert!(s_route.abs() < 1e-12 * diag_scale.max(1.0));
            assert!(r_route.abs() < 1e-12 * diag_scale.max(1.0));
        }
    }
}
