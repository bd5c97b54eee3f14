//! Quick invariant suite behind the `selftest` CLI subcommand. Each check is
//! cheap (the whole suite stays under a few seconds) and independent of the
//! experiment pipeline.

use crate::experiments::{half_harmonic_oracle, sobolev_square_oracle};
use crate::kernels::{dirichlet, fejer, random_trig_poly, salem_g, Normalization};
use crate::norms::{a_norm, c_norm, sobolev_half_norm, u_norm};
use crate::poly::{analyze, TrigPoly};
use std::f64::consts::PI;

pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

pub fn run_selftest() -> Vec<CheckResult> {
    let mut out = Vec::new();

    // analyze . synthesize is the identity on coefficients
    let p = random_trig_poly(31, 2024, Normalization::None);
    let round = p
        .synthesize(256)
        .and_then(|g| analyze(&g, 31))
        .map(|q| q.sub(&p).max_abs_coeff());
    let err = round.unwrap_or(f64::INFINITY);
    out.push(check("dft_roundtrip", err <= 1e-12, format!("residual {err:.3e}")));

    // partial sums are projections
    let s = p.partial_sum(10);
    let err = s.partial_sum(10).sub(&s).max_abs_coeff();
    out.push(check("partial_sum_projection", err <= 1e-15, format!("residual {err:.3e}")));

    // Cesaro identity: F_n = mean of D_0..D_{n-1}
    let n = 24usize;
    let mut mean = TrigPoly::zero();
    for j in 0..n {
        mean = mean.add(&dirichlet(j));
    }
    let mean = mean.scale(num_complex::Complex64::new(1.0 / n as f64, 0.0));
    let err = match fejer(n) {
        Ok(f) => f.sub(&mean).max_abs_coeff(),
        Err(_) => f64::INFINITY,
    };
    out.push(check("fejer_cesaro", err <= 1e-13, format!("residual {err:.3e}")));

    // derivative identity for the Salem block
    let err = (2..=32)
        .map(|n| {
            let target = fejer(n)
                .unwrap()
                .scale(num_complex::Complex64::new(0.5, 0.0))
                .sub(&TrigPoly::constant(num_complex::Complex64::new(0.5, 0.0)));
            salem_g(n).unwrap().derivative().sub(&target).max_abs_coeff()
        })
        .fold(0.0f64, f64::max);
    out.push(check("salem_derivative", err <= 1e-12, format!("residual {err:.3e}")));

    // pipeline partial sum at zero vs direct summation
    let err = (2..=64)
        .map(|n| {
            let p = crate::kernels::exponential(n as i64).multiply(&salem_g(n).unwrap());
            let v = p.partial_sum(n).eval(0.0).norm();
            (v - half_harmonic_oracle(n)).abs()
        })
        .fold(0.0f64, f64::max);
    out.push(check("salem_partial_sum", err <= 1e-10, format!("residual {err:.3e}")));

    // Sobolev engine vs direct summation
    let err = (2..=64)
        .map(|n| {
            let s = sobolev_half_norm(&salem_g(n).unwrap());
            (s * s - sobolev_square_oracle(n)).abs()
        })
        .fold(0.0f64, f64::max);
    out.push(check("sobolev_oracle", err <= 1e-10, format!("residual {err:.3e}")));

    // Dirichlet kernel pointwise bound |D_N(x)| <= pi / |x| on grid points
    let n = 16usize;
    let d = dirichlet(n);
    let m = crate::poly::sup_grid_size(n, 8);
    let g = d.synthesize(m).unwrap();
    let mut worst: f64 = 0.0;
    for j in 1..m {
        let x = g.point(j);
        let x = if x > PI { x - 2.0 * PI } else { x };
        worst = worst.max(g.samples()[j].norm() - PI / x.abs());
    }
    out.push(check("dirichlet_bound", worst <= 1e-9, format!("excess {worst:.3e}")));

    // norm chain c <= u <= a on random fixtures
    let mut ok = true;
    let mut detail = String::from("chain held");
    for seed in 0..20u64 {
        let p = random_trig_poly(16, seed, Normalization::None);
        let (c, u, a) = (c_norm(&p), u_norm(&p), a_norm(&p));
        if !(c <= u + 1e-8 && u <= a + 1e-8) {
            ok = false;
            detail = format!("seed {seed}: c {c:.6} u {u:.6} a {a:.6}");
            break;
        }
    }
    out.push(check("norm_chain", ok, detail));

    out
}
