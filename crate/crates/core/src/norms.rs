//! Function-space norms and the continuity machinery: C, U (symmetric and
//! asymmetric), Wiener and weighted Wiener sums, bounded variation, the
//! half-order Sobolev seminorm, modulus of continuity, the two Dini
//! integrals, and the sine-log integral J(k).

use crate::error::{CoreError, Result};
use crate::fft::next_pow2;
use crate::opt::golden_argmax;
use crate::poly::{sup_grid_size, sup_norm, sup_norm_with_factor, TrigPoly, DEFAULT_GRID_FACTOR};
use crate::quad::{adaptive_simpson, panel_adaptive};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The weight gamma of the weighted Wiener space: a positive sequence bounded
/// away from zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum WeightSequence {
    /// gamma(n) = c
    Constant(f64),
    /// gamma(n) = (ln(n+2))^alpha
    LogPower(f64),
    /// explicit values; queries beyond the table clamp to the last entry
    Table(Vec<f64>),
}

impl WeightSequence {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            WeightSequence::Constant(c) => c.is_finite() && *c > 0.0,
            WeightSequence::LogPower(a) => a.is_finite(),
            WeightSequence::Table(v) => {
                !v.is_empty() && v.iter().all(|x| x.is_finite() && *x > 0.0)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(CoreError::Domain(
                "weight sequence must be positive, finite and bounded away from zero".into(),
            ))
        }
    }

    pub fn eval(&self, n: usize) -> f64 {
        match self {
            WeightSequence::Constant(c) => *c,
            WeightSequence::LogPower(a) => ((n as f64 + 2.0).ln()).powf(*a),
            WeightSequence::Table(v) => v[n.min(v.len() - 1)],
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            WeightSequence::Constant(c) => format!("const:{c}"),
            WeightSequence::LogPower(a) => format!("logpow:{a}"),
            WeightSequence::Table(v) => format!("table:{} values", v.len()),
        }
    }

    /// Parse `const:C` or `logpow:ALPHA`.
    pub fn parse(s: &str) -> Result<Self> {
        let parse_f = |v: &str| {
            v.parse::<f64>()
                .map_err(|_| CoreError::Parse(format!("bad weight parameter {v:?}")))
        };
        let w = match s.split_once(':') {
            Some(("const", v)) => WeightSequence::Constant(parse_f(v)?),
            Some(("logpow", v)) => WeightSequence::LogPower(parse_f(v)?),
            _ => {
                return Err(CoreError::Parse(format!(
                    "unknown weight spec {s:?} (expected const:C or logpow:ALPHA)"
                )))
            }
        };
        w.validate()?;
        Ok(w)
    }
}

/// Sup norm over the circle; delegates to the oversampled grid scan.
pub fn c_norm(p: &TrigPoly) -> f64 {
    sup_norm(p)
}

pub fn c_norm_with_factor(p: &TrigPoly, factor: usize) -> f64 {
    sup_norm_with_factor(p, factor)
}

/// U-norm: max over N = 0..degree of ||S_N(p)||_C. Exact for polynomials,
/// since S_N = p once N >= degree. Runs the incremental partial-sum scan:
/// the synthesized values of S_N are kept on one grid and the two new
/// exponential terms are added per step, O(K*M) total instead of K
/// independent syntheses.
pub fn u_norm(p: &TrigPoly) -> f64 {
    u_norm_with_factor(p, DEFAULT_GRID_FACTOR)
}

pub fn u_norm_with_factor(p: &TrigPoly, factor: usize) -> f64 {
    let p = p.trim();
    if p.is_zero() {
        return 0.0;
    }
    let k = p.degree();
    let m = sup_grid_size(k, factor);
    let w: Vec<Complex64> = (0..m)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64))
        .collect();
    let mut cur = vec![p.coeff(0); m];
    let mut zp = vec![Complex64::new(1.0, 0.0); m];
    let mut zn = zp.clone();
    let mut per_n: Vec<f64> = Vec::with_capacity(k + 1);
    per_n.push(cur[0].norm());
    for n in 1..=k as i64 {
        let cp = p.coeff(n);
        let cn = p.coeff(-n);
        let mut gm = 0.0f64;
        for j in 0..m {
            zp[j] *= w[j];
            zn[j] *= w[j].conj();
            cur[j] += cp * zp[j] + cn * zn[j];
            gm = gm.max(cur[j].norm());
        }
        per_n.push(gm);
    }
    let best_grid = per_n.iter().copied().fold(0.0, f64::max);
    // Grid values sit within the Bernstein spacing factor of the true sup;
    // refine every N that could still win after that slack.
    let mut cands: Vec<usize> = (0..=k)
        .filter(|&n| per_n[n] >= 0.96 * best_grid)
        .collect();
    cands.sort_by(|&a, &b| per_n[b].total_cmp(&per_n[a]));
    cands.truncate(16);
    let mut best = best_grid;
    for n in cands {
        best = best.max(sup_norm_with_factor(&p.partial_sum(n), factor));
    }
    best
}

/// Asymmetric U-norm: max over 0 <= N, M <= degree of ||S_{N,M}(p)||_C.
/// Only cut points at nonzero frequencies can change the retained index set,
/// so the scan runs over those candidates only.
pub fn u_norm_asym(p: &TrigPoly) -> f64 {
    u_norm_asym_with_factor(p, DEFAULT_GRID_FACTOR)
}

pub fn u_norm_asym_with_factor(p: &TrigPoly, factor: usize) -> f64 {
    let p = p.trim();
    if p.is_zero() {
        return 0.0;
    }
    let k = p.degree();
    let m = sup_grid_size(k, factor);
    let w: Vec<Complex64> = (0..m)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64))
        .collect();
    let mut neg_cuts: Vec<usize> = (1..=k).filter(|&s| p.coeff(-(s as i64)).norm_sqr() != 0.0).collect();
    let mut pos_cuts: Vec<usize> = (1..=k).filter(|&s| p.coeff(s as i64).norm_sqr() != 0.0).collect();
    neg_cuts.insert(0, 0);
    pos_cuts.insert(0, 0);

    // top grid candidates (value, N, M); kept small by periodic compaction
    let mut top: Vec<(f64, usize, usize)> = Vec::new();
    let push = |top: &mut Vec<(f64, usize, usize)>, e: (f64, usize, usize)| {
        top.push(e);
        if top.len() > 256 {
            top.sort_by(|a, b| b.0.total_cmp(&a.0));
            top.truncate(64);
        }
    };

    let mut q = vec![Complex64::new(0.0, 0.0); m]; // negative-side prefix
    let mut zn = vec![Complex64::new(1.0, 0.0); m];
    let mut zn_exp = 0usize;
    for &n_cut in &neg_cuts {
        while zn_exp < n_cut {
            zn_exp += 1;
            let c = p.coeff(-(zn_exp as i64));
            for j in 0..m {
                zn[j] *= w[j].conj();
                q[j] += c * zn[j];
            }
        }
        let mut pvals = vec![p.coeff(0); m]; // positive-side prefix incl. k=0
        let mut zp = vec![Complex64::new(1.0, 0.0); m];
        let mut zp_exp = 0usize;
        for &m_cut in &pos_cuts {
            while zp_exp < m_cut {
                zp_exp += 1;
                let c = p.coeff(zp_exp as i64);
                for j in 0..m {
                    zp[j] *= w[j];
                    pvals[j] += c * zp[j];
                }
            }
            let mut gm = 0.0f64;
            for j in 0..m {
                gm = gm.max((pvals[j] + q[j]).norm());
            }
            push(&mut top, (gm, n_cut, m_cut));
        }
    }
    top.sort_by(|a, b| b.0.total_cmp(&a.0));
    let best_grid = top.first().map(|e| e.0).unwrap_or(0.0);
    let mut best = best_grid;
    for &(v, n, mm) in top.iter().take(16) {
        if v >= 0.96 * best_grid {
            best = best.max(sup_norm_with_factor(&p.partial_sum_asym(n, mm), factor));
        }
    }
    best
}

/// Wiener norm: sum of |c_k|.
pub fn a_norm(p: &TrigPoly) -> f64 {
    p.coeffs().iter().map(|c| c.norm()).sum()
}

/// Weighted Wiener norm: sum of |c_k| gamma(|k|).
pub fn a_gamma_norm(p: &TrigPoly, gamma: &WeightSequence) -> f64 {
    p.terms().map(|(k, c)| c.norm() * gamma.eval(k.unsigned_abs() as usize)).sum()
}

/// Half-order Sobolev seminorm: (sum |c_k|^2 |k|)^{1/2}.
pub fn sobolev_half_norm(p: &TrigPoly) -> f64 {
    p.terms()
        .map(|(k, c)| c.norm_sqr() * k.unsigned_abs() as f64)
        .sum::<f64>()
        .sqrt()
}

/// Log-weighted Wiener sum: sum |c_k| ln(|k|+2).
pub fn log_weighted_a_norm(p: &TrigPoly) -> f64 {
    p.terms()
        .map(|(k, c)| c.norm() * ((k.unsigned_abs() as f64) + 2.0).ln())
        .sum()
}

/// Total variation over the circle, computed for (smooth) polynomials as the
/// integral of |p'| by adaptive quadrature to absolute tolerance 1e-6.
pub fn variation_norm(p: &TrigPoly) -> f64 {
    let d = p.derivative().trim();
    if d.is_zero() {
        return 0.0;
    }
    let panels = 4 * (d.degree() + 1);
    panel_adaptive(&|t| d.eval(t).norm(), 0.0, 2.0 * PI, panels, 1e-6)
}

fn synthesize_shifted(p: &TrigPoly, m: usize, delta: f64) -> Vec<Complex64> {
    let shifted = TrigPoly::from_terms(
        &p.terms()
            .map(|(k, c)| (k, c * Complex64::from_polar(1.0, k as f64 * delta)))
            .collect::<Vec<_>>(),
    );
    shifted
        .synthesize(m)
        .expect("grid fits")
        .samples()
        .to_vec()
}

/// Sharpen a (shift, base-point) oscillation candidate by alternating
/// golden-section passes in t and in the shift (clamped to [0, delta]).
fn refine_oscillation(p: &TrigPoly, t0: f64, s0: f64, delta: f64, h: f64) -> f64 {
    let mut t = t0;
    let mut s = s0;
    let mut best = 0.0f64;
    for _ in 0..3 {
        let (tb, vb) = golden_argmax(&|x| (p.eval(x + s) - p.eval(x)).norm(), t - h, t + h, 30);
        t = tb;
        best = best.max(vb);
        let lo = (s - h).max(0.0);
        let hi = (s + h).min(delta);
        if hi > lo {
            let (sb, vb2) =
                golden_argmax(&|x| (p.eval(t + x) - p.eval(t)).norm(), lo, hi, 30);
            s = sb;
            best = best.max(vb2);
        }
    }
    best
}

/// omega(p, delta) = sup over |t1 - t2| <= delta of |p(t1) - p(t2)|.
/// Shift set: all grid-spacing multiples up to delta plus delta itself; the
/// top candidates are refined against the continuum.
pub fn modulus_of_continuity(p: &TrigPoly, delta: f64) -> Result<f64> {
    if !(0.0..=PI + 1e-12).contains(&delta) {
        return Err(CoreError::Domain(format!(
            "modulus of continuity requires 0 <= delta <= pi, got {delta}"
        )));
    }
    let p = p.trim();
    if p.degree() == 0 || delta == 0.0 {
        return Ok(0.0);
    }
    let m = sup_grid_size(p.degree(), 16);
    let v = p.synthesize(m)?.samples().to_vec();
    let h = 2.0 * PI / m as f64;
    let smax = ((delta / h).floor() as usize).min(m / 2);

    // top-3 (value, shift, base index) candidates
    let mut top: [(f64, f64, usize); 3] = [(0.0, delta, 0); 3];
    let mut offer = |val: f64, shift: f64, j: usize| {
        if val > top[0].0 {
            top[2] = top[1];
            top[1] = top[0];
            top[0] = (val, shift, j);
        } else if val > top[1].0 {
            top[2] = top[1];
            top[1] = (val, shift, j);
        } else if val > top[2].0 {
            top[2] = (val, shift, j);
        }
    };
    for s in 1..=smax {
        for j in 0..m {
            let d = (v[(j + s) % m] - v[j]).norm();
            offer(d, s as f64 * h, j);
        }
    }
    let shifted = synthesize_shifted(&p, m, delta);
    for j in 0..m {
        offer((shifted[j] - v[j]).norm(), delta, j);
    }

    let mut best = top[0].0;
    for &(val, shift, j) in &top {
        if val > 0.0 {
            best = best.max(refine_oscillation(&p, h * j as f64, shift, delta, h));
        }
    }
    Ok(best)
}

/// Precomputed oscillation suprema over integer grid shifts, used by the
/// Dini integral where omega is evaluated many times.
struct OscillationTable {
    poly: TrigPoly,
    values: Vec<Complex64>,
    h: f64,
    cummax: Vec<f64>, // cummax[s] = max over s' <= s of sup_j |v[j+s'] - v[j]|
}

impl OscillationTable {
    fn new(p: &TrigPoly, factor: usize) -> Self {
        let m = sup_grid_size(p.degree(), factor);
        let values = p.synthesize(m).expect("grid fits").samples().to_vec();
        let mut cummax = vec![0.0f64; m / 2 + 1];
        let mut run = 0.0f64;
        for s in 1..=m / 2 {
            let mut d = 0.0f64;
            for j in 0..m {
                d = d.max((values[(j + s) % m] - values[j]).norm());
            }
            run = run.max(d);
            cummax[s] = run;
        }
        OscillationTable {
            poly: p.clone(),
            h: 2.0 * PI / m as f64,
            values,
            cummax,
        }
    }

    fn omega(&self, delta: f64) -> f64 {
        let m = self.values.len();
        let s = ((delta / self.h).floor() as usize).min(m / 2);
        let base = self.cummax[s];
        let shifted = synthesize_shifted(&self.poly, m, delta);
        let frac = shifted
            .iter()
            .zip(&self.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        base.max(frac)
    }
}

/// Dini integral of the modulus of continuity: int_0^pi omega(p, delta)/delta
/// d(delta), via log-spaced adaptive panels. Below delta_min the integrand is
/// bounded by sup|p'|, so the truncated tail stays under 1e-7.
pub fn dini_integral(p: &TrigPoly) -> f64 {
    let p = p.trim();
    if p.degree() == 0 {
        return 0.0;
    }
    let b = sup_norm(&p.derivative());
    if b == 0.0 {
        return 0.0;
    }
    let table = OscillationTable::new(&p, DEFAULT_GRID_FACTOR);
    let delta_min = (1e-8 / b).min(1e-8);
    // substitute delta = e^u: integral of omega(e^u) du
    let f = |u: f64| table.omega(u.exp());
    panel_adaptive(&f, delta_min.ln(), PI.ln(), 64, 1e-6)
}

/// Uniform Dini functional: sup over t of the integral over |t - theta| <= pi
/// of |p(t) - p(theta)| / |t - theta|. The removable singularity at theta = t
/// is evaluated through the derivative. Absolute tolerance 1e-4.
pub fn uniform_dini(p: &TrigPoly) -> f64 {
    let p = p.trim();
    if p.degree() == 0 {
        return 0.0;
    }
    let k = p.degree();
    let tgrid = next_pow2(4 * k).max(256);
    let d = p.derivative();
    let panels = (4 * (k + 1)).max(16);
    let dini_at = |t: f64| {
        let pt = p.eval(t);
        let dpt = d.eval(t).norm();
        let f = |h: f64| {
            if h.abs() < 1e-7 {
                dpt
            } else {
                (p.eval(t + h) - pt).norm() / h.abs()
            }
        };
        panel_adaptive(&f, -PI, PI, panels, 5e-5)
    };
    let values: Vec<f64> = (0..tgrid)
        .into_par_iter()
        .map(|i| dini_at(2.0 * PI * i as f64 / tgrid as f64))
        .collect();
    // refine the sup over t around the leading grid candidates
    let best = values.iter().cloned().fold(0.0f64, f64::max);
    let h = 2.0 * PI / tgrid as f64;
    let mut candidates: Vec<usize> = (0..tgrid)
        .filter(|&i| {
            let l = values[(i + tgrid - 1) % tgrid];
            let r = values[(i + 1) % tgrid];
            values[i] >= l && values[i] >= r && values[i] >= 0.995 * best
        })
        .collect();
    candidates.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    candidates.truncate(4);
    candidates
        .into_par_iter()
        .map(|i| {
            let t = 2.0 * PI * i as f64 / tgrid as f64;
            crate::opt::golden_argmax(&dini_at, t - h, t + h, 28).1
        })
        .reduce(|| best, f64::max)
}

/// J(k) = int_0^pi |2 sin(k delta / 2)| / delta d(delta), to 1e-8.
/// Split at the zeros of the sine factor; each lobe is smooth.
pub fn sin_log_integral(k: i64) -> Result<f64> {
    if k == 0 {
        return Err(CoreError::Domain("sin_log_integral requires k != 0".into()));
    }
    let kk = k.unsigned_abs() as f64;
    let mut bounds = vec![0.0f64];
    let mut j = 1u64;
    loop {
        let z = 2.0 * PI * j as f64 / kk;
        if z >= PI {
            break;
        }
        bounds.push(z);
        j += 1;
    }
    bounds.push(PI);
    let per_tol = 0.5e-8 / bounds.len() as f64;
    let f = |delta: f64| {
        if delta < 1e-12 {
            kk
        } else {
            (2.0 * (kk * delta / 2.0).sin()).abs() / delta
        }
    };
    Ok(bounds
        .windows(2)
        .map(|w| adaptive_simpson(&f, w[0], w[1], per_tol))
        .sum())
}

/// Named collection of norm values for one function; absent entries were not
/// computed. Field names are the stable serialization schema.
#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub descriptor: String,
    pub gamma: Option<String>,
    pub c_norm: Option<f64>,
    pub u_norm: Option<f64>,
    pub u_norm_asym: Option<f64>,
    pub a_norm: Option<f64>,
    pub a_gamma_norm: Option<f64>,
    pub variation_norm: Option<f64>,
    pub sobolev_half_norm: Option<f64>,
    pub dini_integral: Option<f64>,
    pub uniform_dini: Option<f64>,
    pub log_weighted_a_norm: Option<f64>,
}

/// Compute the full report. The asymmetric U-norm scan is quadratic in the
/// degree and is skipped above `asym_degree_cap` (marked not-computed).
pub fn norm_report(
    p: &TrigPoly,
    descriptor: &str,
    gamma: Option<&WeightSequence>,
    asym_degree_cap: usize,
) -> NormReport {
    NormReport {
        descriptor: descriptor.to_string(),
        gamma: gamma.map(|g| g.descriptor()),
        c_norm: Some(c_norm(p)),
        u_norm: Some(u_norm(p)),
        u_norm_asym: if p.degree() <= asym_degree_cap {
            Some(u_norm_asym(p))
        } else {
            None
        },
        a_norm: Some(a_norm(p)),
        a_gamma_norm: gamma.map(|g| a_gamma_norm(p, g)),
        variation_norm: Some(variation_norm(p)),
        sobolev_half_norm: Some(sobolev_half_norm(p)),
        dini_integral: Some(dini_integral(p)),
        uniform_dini: Some(uniform_dini(p)),
        log_weighted_a_norm: Some(log_weighted_a_norm(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{dirichlet, exponential, random_trig_poly, salem_g, Normalization};

    /// Independent sine-integral oracle: Si(x) by high-resolution Simpson.
    fn si(x: f64) -> f64 {
        let f = |v: f64| if v.abs() < 1e-300 { 1.0 } else { v.sin() / v };
        adaptive_simpson(&f, 0.0, x, 1e-12)
    }

    #[test]
    fn c_norm_cases() {
        assert!((c_norm(&exponential(0)) - 1.0).abs() < 1e-9);
        assert!((c_norm(&dirichlet(8)) - 17.0).abs() < 1e-5);
        for n in [2usize, 16, 256] {
            assert!(c_norm(&salem_g(n).unwrap()) <= 2.0 * PI + 1e-6);
        }
    }

    #[test]
    fn u_norm_cases() {
        assert!((u_norm(&exponential(1)) - 1.0).abs() < 1e-9);
        // u_norm(e_n g_n) >= sum_{k=1}^n (1 - k/n)/(2k)
        for n in [4usize, 64] {
            let p = salem_g(n).unwrap().modulate(n as i64);
            let oracle: f64 = (1..=n).map(|k| (1.0 - k as f64 / n as f64) / (2.0 * k as f64)).sum();
            assert!(u_norm(&p) >= oracle - 1e-9, "n={n}");
        }
        // homogeneity
        let p = random_trig_poly(12, 5, Normalization::None);
        let c = Complex64::new(-2.5, 0.0);
        let a = u_norm(&p.scale(c));
        let b = 2.5 * u_norm(&p);
        assert!((a - b).abs() <= 1e-6 * (1.0 + b));
    }

    #[test]
    fn u_norm_asym_cases() {
        assert!((u_norm_asym(&exponential(1)) - 1.0).abs() < 1e-9);
        let p = TrigPoly::from_terms(&[
            (1, Complex64::new(1.0, 0.0)),
            (-1, Complex64::new(1.0, 0.0)),
        ]);
        // brute force over all (N, M) pairs gives 2, attained by the full sum
        let mut brute = 0.0f64;
        for n in 0..=1 {
            for m in 0..=1 {
                brute = brute.max(c_norm(&p.partial_sum_asym(n, m)));
            }
        }
        assert!((brute - 2.0).abs() < 1e-9);
        assert!((u_norm_asym(&p) - 2.0).abs() < 1e-6);
        // diagonal is included
        let q = random_trig_poly(10, 42, Normalization::None);
        assert!(u_norm_asym(&q) >= u_norm(&q) - 1e-9);
    }

    #[test]
    fn wiener_sums() {
        let g = WeightSequence::LogPower(1.0);
        for n in [0i64, 3, -17] {
            let e = exponential(n);
            assert!(
                (a_gamma_norm(&e, &g) - ((n.unsigned_abs() as f64) + 2.0).ln()).abs() < 1e-15
            );
        }
        assert!((a_norm(&dirichlet(7)) - 15.0).abs() < 1e-15);
        // a_norm(g_4) = 3/4 + 1/4 + 1/12 over both signs
        let a = a_norm(&salem_g(4).unwrap());
        assert!((a - 13.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn sobolev_cases() {
        assert!((sobolev_half_norm(&exponential(9)) - 3.0).abs() < 1e-15);
        assert_eq!(sobolev_half_norm(&exponential(0)), 0.0);
        let n = 16usize;
        let oracle: f64 = (1..=n)
            .map(|k| {
                let w = 1.0 - k as f64 / n as f64;
                w * w / (2.0 * k as f64)
            })
            .sum();
        let s = sobolev_half_norm(&salem_g(n).unwrap());
        assert!((s * s - oracle).abs() < 1e-13);
    }

    #[test]
    fn variation_cases() {
        assert_eq!(variation_norm(&exponential(0)), 0.0);
        for n in [1i64, -3] {
            let v = variation_norm(&exponential(n));
            assert!((v - 2.0 * PI * n.unsigned_abs() as f64).abs() < 1e-6);
        }
        for n in [2usize, 16, 256] {
            assert!(variation_norm(&salem_g(n).unwrap()) <= 2.0 * PI + 1e-5, "n={n}");
        }
    }

    #[test]
    fn modulus_cases() {
        let p = random_trig_poly(8, 3, Normalization::None);
        assert_eq!(modulus_of_continuity(&p, 0.0).unwrap(), 0.0);
        assert_eq!(modulus_of_continuity(&exponential(0), 1.0).unwrap(), 0.0);
        assert!(modulus_of_continuity(&p, -0.5).is_err());
        assert!(modulus_of_continuity(&p, 4.0).is_err());
        // sin t: omega(delta) = 2 sin(delta/2), brute-force pair oracle
        let sine = TrigPoly::from_terms(&[
            (1, Complex64::new(0.0, -0.5)),
            (-1, Complex64::new(0.0, 0.5)),
        ]);
        let d = PI / 2.0;
        let got = modulus_of_continuity(&sine, d).unwrap();
        assert!((got - 2.0 * (d / 2.0).sin()).abs() < 1e-5);
    }

    #[test]
    fn dini_integral_cases() {
        assert_eq!(dini_integral(&exponential(0)), 0.0);
        let p = random_trig_poly(6, 11, Normalization::None);
        let a = dini_integral(&p.scale(Complex64::new(3.0, 0.0)));
        let b = 3.0 * dini_integral(&p);
        assert!((a - b).abs() < 1e-6 * (1.0 + b));
    }

    #[test]
    fn dini_integral_termwise_bound() {
        // omega(m, delta) <= sum_{k != 0} |m^(k)| |2 sin(k delta/2)| implies
        // dini_integral <= sum |m^(k)| J(k)
        let p = salem_g(8).unwrap();
        let bound: f64 = p
            .terms()
            .filter(|&(k, _)| k != 0)
            .map(|(k, c)| c.norm() * sin_log_integral(k).unwrap())
            .sum();
        let v = dini_integral(&p);
        assert!(v <= bound + 1e-6, "dini {v} vs termwise bound {bound}");
    }

    #[test]
    fn uniform_dini_cases() {
        assert_eq!(uniform_dini(&exponential(0)), 0.0);
        // |e^{it} - e^{i theta}| = 2 |sin((t-theta)/2)| reduces the integral
        // to 4 int_0^{pi/2} sin(v)/v dv = 4 Si(pi/2)
        let v = uniform_dini(&exponential(1));
        let oracle = 4.0 * si(PI / 2.0);
        assert!((v - oracle).abs() < 1e-3, "got {v}, oracle {oracle}");
    }

    #[test]
    fn uniform_dini_translation_invariant() {
        let p = random_trig_poly(6, 2, Normalization::None);
        let a = 1.1f64;
        let shifted = TrigPoly::from_terms(
            &p.terms()
                .map(|(k, c)| (k, c * Complex64::from_polar(1.0, -(k as f64) * a)))
                .collect::<Vec<_>>(),
        );
        let v1 = uniform_dini(&p);
        let v2 = uniform_dini(&shifted);
        assert!((v1 - v2).abs() < 1e-4, "{v1} vs {v2}");
    }

    #[test]
    fn log_weighted_cases() {
        assert!((log_weighted_a_norm(&exponential(0)) - 2.0f64.ln()).abs() < 1e-15);
        assert!((log_weighted_a_norm(&exponential(-7)) - 9.0f64.ln()).abs() < 1e-15);
        let d2 = log_weighted_a_norm(&dirichlet(2));
        let oracle = 2.0f64.ln() + 2.0 * 3.0f64.ln() + 2.0 * 4.0f64.ln();
        assert!((d2 - oracle).abs() < 1e-14);
    }

    #[test]
    fn sin_log_integral_cases() {
        assert!(sin_log_integral(0).is_err());
        // J(1) = 2 int_0^pi sin(delta/2)/delta d(delta) = 2 Si(pi/2)
        let j1 = sin_log_integral(1).unwrap();
        assert!((j1 - 2.0 * si(PI / 2.0)).abs() < 1e-6, "J(1) = {j1}");
        // even in k, exactly
        for k in [1i64, 5, 38] {
            assert_eq!(sin_log_integral(k).unwrap(), sin_log_integral(-k).unwrap());
        }
        // independent high-resolution quadrature cross-check
        for k in [3i64, 17] {
            let kk = k as f64;
            let f = |d: f64| {
                if d < 1e-12 {
                    kk
                } else {
                    (2.0 * (kk * d / 2.0).sin()).abs() / d
                }
            };
            let oracle = panel_adaptive(&f, 0.0, PI, 64 * k as usize, 1e-10);
            assert!((sin_log_integral(k).unwrap() - oracle).abs() < 1e-7);
        }
    }

    #[test]
    fn norm_chain_on_report() {
        let p = random_trig_poly(16, 9, Normalization::None);
        let r = norm_report(&p, "rand:16:9", Some(&WeightSequence::Constant(1.0)), 512);
        let c = r.c_norm.unwrap();
        let u = r.u_norm.unwrap();
        let a = r.a_norm.unwrap();
        assert!(c <= u + 1e-6);
        assert!(u <= a + 1e-6);
        // constant weight 1 equals the Wiener norm exactly
        assert_eq!(r.a_gamma_norm.unwrap(), a);
    }
}
