//! Named reproducible experiments. Each returns an ExperimentTable whose
//! oracle columns come from closed-form summation, never from the measurement
//! pipeline, and whose rows are ascending in the sweep parameter. Output is
//! independent of the thread count.

use crate::error::{CoreError, Result};
use crate::kernels::{exponential, fejer, salem_g};
use crate::minilang::FnSpec;
use crate::multiplier::commutator;
use crate::norms::{
    c_norm, sin_log_integral, sobolev_half_norm, u_norm_asym, variation_norm,
    WeightSequence,
};
use crate::poly::TrigPoly;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CoreError::Parse(format!(
                "unknown output format {other:?}, expected csv or json"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n_list: Vec<usize>,
    pub alpha_list: Vec<f64>,
    pub grid_factor: usize,
    pub tol: f64,
    pub seed: u64,
    /// Measured u_norm columns are skipped (NaN) above this n; closed-form
    /// oracle columns are not capped.
    pub u_norm_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_list: doubling_list(2, 1024),
            alpha_list: vec![0.0, 1.0, 2.0],
            grid_factor: 8,
            tol: 1e-8,
            seed: 1,
            u_norm_cap: 1024,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() {
            return Err(CoreError::Domain("n_list must be nonempty".into()));
        }
        if self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CoreError::Domain("n_list must be strictly ascending".into()));
        }
        if self.n_list[0] == 0 {
            return Err(CoreError::Domain("n_list entries must be positive".into()));
        }
        if self.grid_factor < 8 {
            return Err(CoreError::Domain(format!(
                "grid_factor must be >= 8, got {}",
                self.grid_factor
            )));
        }
        if !(self.tol > 0.0) {
            return Err(CoreError::Domain(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    fn require_min_n(&self, min: usize) -> Result<()> {
        self.validate()?;
        if self.n_list[0] < min {
            return Err(CoreError::Domain(format!(
                "n_list entries must be >= {min}, got {}",
                self.n_list[0]
            )));
        }
        Ok(())
    }
}

pub fn doubling_list(from: usize, to: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = from;
    while n <= to {
        out.push(n);
        n *= 2;
    }
    out
}

/// `a,b,c` is a plain list; `a,b,...,c` doubles geometrically from b to c.
pub fn parse_n_list(s: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let mut out: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if parts[i] == "..." {
            let (&last, &end) = match (out.last(), parts.get(i + 1)) {
                (Some(last), Some(end)) => (last, end),
                _ => {
                    return Err(CoreError::Parse(format!(
                        "`...` needs a value on both sides in n-list {s:?}"
                    )))
                }
            };
            let end: usize = end
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad n-list entry {end:?} in {s:?}")))?;
            let mut n = last
                .checked_mul(2)
                .ok_or_else(|| CoreError::Parse(format!("n-list overflow in {s:?}")))?;
            while n <= end {
                out.push(n);
                n *= 2;
            }
            i += 2;
        } else {
            let n: usize = parts[i].parse().map_err(|_| {
                CoreError::Parse(format!("bad n-list entry {:?} in {s:?}", parts[i]))
            })?;
            out.push(n);
            i += 1;
        }
    }
    if out.is_empty() {
        return Err(CoreError::Parse(format!("empty n-list {s:?}")));
    }
    Ok(out)
}

pub fn parse_alpha_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .map(|t| {
            t.parse()
                .map_err(|_| CoreError::Parse(format!("bad alpha-list entry {t:?} in {s:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentTable {
    pub id: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: BTreeMap<String, String>,
}

/// Lossless float formatting for CSV cells. Integral values print as
/// integers, everything else with 17 significant digits.
fn fmt_cell(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v == v.trunc() && v.abs() < 9.0e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.16e}")
    }
}

impl ExperimentTable {
    fn new(id: &str, columns: &[&str], cfg: &RunConfig) -> Self {
        let mut metadata = BTreeMap::new();
        metadata.insert("experiment".into(), id.to_string());
        metadata.insert(
            "n_list".into(),
            cfg.n_list
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        metadata.insert("grid_factor".into(), cfg.grid_factor.to_string());
        metadata.insert("tol".into(), fmt_cell(cfg.tol));
        metadata.insert("seed".into(), cfg.seed.to_string());
        metadata.insert("u_norm_cap".into(), cfg.u_norm_cap.to_string());
        ExperimentTable {
            id: id.to_string(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            metadata,
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt_cell(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Ordinary least squares slope of y against x, skipping NaN pairs.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .map(|(&x, &y)| (x, y))
        .collect();
    let n = pairs.len() as f64;
    if pairs.len() < 2 {
        return f64::NAN;
    }
    let mx: f64 = pairs.iter().map(|p| p.0).sum::<f64>() / n;
    let my: f64 = pairs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pairs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pairs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// (H_n - 1)/2 by direct summation; the closed-form oracle for the value of
/// S_n(e_n g_n) at zero.
pub fn half_harmonic_oracle(n: usize) -> f64 {
    (1..=n).map(|k| (1.0 - k as f64 / n as f64) / (2.0 * k as f64)).sum()
}

fn salem_product(n: usize) -> Result<TrigPoly> {
    Ok(exponential(n as i64).multiply(&salem_g(n)?))
}

/// |S_n(e_n g_n)(0)| through the full multiply / partial_sum / synthesize
/// pipeline, against the direct-summation oracle.
pub fn exp_salem_lemma2(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    let mut table = ExperimentTable::new(
        "salem-lemma2",
        &[
            "n",
            "pipeline_abs_at_zero",
            "oracle_half_harmonic",
            "u_norm_en_gn",
            "ratio_oracle_to_half_log",
        ],
        cfg,
    );
    table.rows = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<Vec<f64>> {
            let p = salem_product(n)?;
            let s = p.partial_sum(n);
            let m = crate::fft::next_pow2(2 * s.degree() + 2);
            let value = s.synthesize(m)?.samples()[0].norm();
            let oracle = half_harmonic_oracle(n);
            let u = if n <= cfg.u_norm_cap {
                u_norm_with(&p, cfg)
            } else {
                f64::NAN
            };
            let ratio = oracle / (0.5 * (n as f64).ln());
            Ok(vec![n as f64, value, oracle, u, ratio])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(table)
}

fn u_norm_with(p: &TrigPoly, cfg: &RunConfig) -> f64 {
    crate::norms::u_norm_with_factor(p, cfg.grid_factor)
}

/// Variation and sup norms of g_n against 2 pi, plus the residual of the
/// derivative identity g_n' = F_n/2 - 1/2.
pub fn exp_gn_bounds(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    let mut table = ExperimentTable::new(
        "gn-bounds",
        &[
            "n",
            "variation_norm",
            "c_norm",
            "variation_over_two_pi",
            "c_over_two_pi",
            "fejer_residual",
        ],
        cfg,
    );
    table.rows = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<Vec<f64>> {
            let g = salem_g(n)?;
            let v = variation_norm(&g);
            let c = c_norm(&g);
            let target = fejer(n)?
                .scale(Complex64::new(0.5, 0.0))
                .sub(&TrigPoly::constant(Complex64::new(0.5, 0.0)));
            let residual = g.derivative().sub(&target).max_abs_coeff();
            Ok(vec![
                n as f64,
                v,
                c,
                v / (2.0 * PI),
                c / (2.0 * PI),
                residual,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(table)
}

/// Lower and upper estimates for the multiplier norm of e_n: the Salem
/// witness ratio from below and 1 + 2 J(n) from above.
pub fn exp_mu_en(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    let mut table = ExperimentTable::new(
        "mu-en",
        &[
            "n",
            "lower_witness_ratio",
            "upper_log",
            "u_norm_gn",
            "lower_over_log",
            "upper_over_log",
        ],
        cfg,
    );
    table.rows = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<Vec<f64>> {
            let ln_n = (n as f64).ln();
            let upper = 1.0 + 2.0 * sin_log_integral(n as i64)?;
            let (lower, u_g) = if n <= cfg.u_norm_cap {
                let u_g = u_norm_with(&salem_g(n)?, cfg);
                (u_norm_with(&salem_product(n)?, cfg) / u_g, u_g)
            } else {
                (f64::NAN, f64::NAN)
            };
            Ok(vec![
                n as f64,
                lower,
                upper,
                u_g,
                lower / ln_n,
                upper / ln_n,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let ns = table.column("n").unwrap();
    let ln_n: Vec<f64> = ns.iter().map(|n| n.ln()).collect();
    let slope_lower = least_squares_slope(&ln_n, &table.column("lower_witness_ratio").unwrap());
    let log_u: Vec<f64> = table
        .column("u_norm_gn")
        .unwrap()
        .iter()
        .map(|u| u.ln())
        .collect();
    let slope_u = least_squares_slope(&ln_n, &log_u);
    table
        .metadata
        .insert("slope_lower_vs_ln_n".into(), fmt_cell(slope_lower));
    table
        .metadata
        .insert("slope_loglog_u_gn".into(), fmt_cell(slope_u));
    Ok(table)
}

/// Asymmetric analogue: the witness ratio built from u_norm_asym stays
/// bounded. The denominator is u_norm_asym(g_n); the symmetric u_norm of the
/// product is reported alongside for the domination check.
pub fn exp_asym(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    let mut table = ExperimentTable::new(
        "asym",
        &[
            "n",
            "u_asym_en_gn",
            "u_asym_gn",
            "u_norm_en_gn",
            "asym_ratio",
        ],
        cfg,
    );
    table.rows = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<Vec<f64>> {
            let p = salem_product(n)?;
            let ua_p = u_norm_asym(&p);
            let ua_g = u_norm_asym(&salem_g(n)?);
            let u_p = u_norm_with(&p, cfg);
            Ok(vec![n as f64, ua_p, ua_g, u_p, ua_p / ua_g])
        })
        .collect::<Result<Vec<_>>>()?;
    let ln_n: Vec<f64> = table.column("n").unwrap().iter().map(|n| n.ln()).collect();
    let slope = least_squares_slope(&ln_n, &table.column("asym_ratio").unwrap());
    table
        .metadata
        .insert("slope_ratio_vs_ln_n".into(), fmt_cell(slope));
    Ok(table)
}

/// Ratio R(n) = u_norm(e_n g_n) / (gamma(n) (V(g_n) + C(g_n))) for each
/// weight exponent alpha; the fitted slope of log R against log log n decides
/// boundedness.
pub fn exp_weight_threshold(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    if cfg.alpha_list.is_empty() {
        return Err(CoreError::Domain("alpha_list must be nonempty".into()));
    }
    let mut table = ExperimentTable::new(
        "weight-threshold",
        &["alpha", "n", "ratio_r", "log_ratio_r"],
        cfg,
    );
    table.metadata.insert(
        "alpha_list".into(),
        cfg.alpha_list
            .iter()
            .map(|&a| fmt_cell(a))
            .collect::<Vec<_>>()
            .join(" "),
    );
    // Per-n measurements are alpha-independent; compute them once.
    let base: Vec<(f64, f64)> = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<(f64, f64)> {
            let u = if n <= cfg.u_norm_cap {
                u_norm_with(&salem_product(n)?, cfg)
            } else {
                f64::NAN
            };
            let g = salem_g(n)?;
            Ok((u, variation_norm(&g) + c_norm(&g)))
        })
        .collect::<Result<Vec<_>>>()?;
    for (ai, &alpha) in cfg.alpha_list.iter().enumerate() {
        let gamma = WeightSequence::LogPower(alpha);
        gamma.validate()?;
        let mut logs = Vec::new();
        let mut loglog_n = Vec::new();
        for (&n, &(u, vc)) in cfg.n_list.iter().zip(&base) {
            let r = u / (gamma.eval(n) * vc);
            table
                .rows
                .push(vec![alpha, n as f64, r, r.ln()]);
            logs.push(r.ln());
            loglog_n.push((n as f64).ln().ln());
        }
        let slope = least_squares_slope(&loglog_n, &logs);
        table
            .metadata
            .insert(format!("slope_alpha_{ai}"), fmt_cell(slope));
    }
    Ok(table)
}

/// Direct-sum oracle for sobolev_half_norm(g_n)^2.
pub fn sobolev_square_oracle(n: usize) -> f64 {
    (1..=n)
        .map(|k| {
            let w = 1.0 - k as f64 / n as f64;
            w * w / (2.0 * k as f64)
        })
        .sum()
}

pub fn exp_sobolev(cfg: &RunConfig) -> Result<ExperimentTable> {
    cfg.require_min_n(2)?;
    let mut table = ExperimentTable::new(
        "sobolev",
        &["n", "square_pipeline", "square_oracle", "ratio_to_half_log"],
        cfg,
    );
    table.rows = cfg
        .n_list
        .par_iter()
        .map(|&n| -> Result<Vec<f64>> {
            let s = sobolev_half_norm(&salem_g(n)?);
            let sq = s * s;
            let oracle = sobolev_square_oracle(n);
            Ok(vec![n as f64, sq, oracle, sq / (0.5 * (n as f64).ln())])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(table)
}

/// Row-by-row verification of the uniform-convergence chain
/// c(mf - S_N(mf)) <= c(m) c(f - S_N f) + c(Q_N f) for N up to deg(mf).
pub fn exp_convergence(cfg: &RunConfig, m_spec: &str, f_spec: &str) -> Result<ExperimentTable> {
    cfg.validate()?;
    let m_fn = FnSpec::parse(m_spec)?;
    let f_fn = FnSpec::parse(f_spec)?;
    let m = m_fn.build()?;
    let f = f_fn.build()?;
    let prod = m.multiply(&f);
    let cm = c_norm(&m);
    let mut table = ExperimentTable::new(
        "convergence",
        &["capital_n", "error", "m_term", "commutator_term", "rhs"],
        cfg,
    );
    table.metadata.insert("m_spec".into(), m_fn.descriptor());
    table.metadata.insert("f_spec".into(), f_fn.descriptor());
    table.rows = (0..=prod.degree())
        .into_par_iter()
        .map(|n| {
            let err = c_norm(&prod.sub(&prod.partial_sum(n)));
            let m_term = cm * c_norm(&f.sub(&f.partial_sum(n)));
            let q_term = c_norm(&commutator(&m, &f, n));
            vec![n as f64, err, m_term, q_term, m_term + q_term]
        })
        .collect();
    Ok(table)
}

pub const EXPERIMENT_IDS: [&str; 7] = [
    "salem-lemma2",
    "gn-bounds",
    "mu-en",
    "asym",
    "weight-threshold",
    "sobolev",
    "convergence",
];

/// Experiment-specific default sweep; the asymmetric scan is the expensive
/// one and stops at 256.
pub fn default_n_list(id: &str) -> Vec<usize> {
    match id {
        "asym" => doubling_list(2, 256),
        "salem-lemma2" | "sobolev" => doubling_list(2, 4096),
        _ => doubling_list(2, 1024),
    }
}

/// Dispatch by id. `convergence` uses the m/f specs, defaulted when absent.
pub fn run_experiment(
    id: &str,
    cfg: &RunConfig,
    m_spec: Option<&str>,
    f_spec: Option<&str>,
) -> Result<ExperimentTable> {
    match id {
        "salem-lemma2" => exp_salem_lemma2(cfg),
        "gn-bounds" => exp_gn_bounds(cfg),
        "mu-en" => exp_mu_en(cfg),
        "asym" => exp_asym(cfg),
        "weight-threshold" => exp_weight_threshold(cfg),
        "sobolev" => exp_sobolev(cfg),
        "convergence" => {
            let default_f = format!("rand:12:{}", cfg.seed);
            exp_convergence(
                cfg,
                m_spec.unwrap_or("g:8"),
                f_spec.unwrap_or(&default_f),
            )
        }
        other => Err(CoreError::Domain(format!(
            "unknown experiment {other:?}; known ids: {}",
            EXPERIMENT_IDS.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg(ns: &[usize]) -> RunConfig {
        RunConfig {
            n_list: ns.to_vec(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn n_list_shorthand() {
        assert_eq!(parse_n_list("2,4,...,32").unwrap(), vec![2, 4, 8, 16, 32]);
        assert_eq!(parse_n_list("3,5,9").unwrap(), vec![3, 5, 9]);
        assert_eq!(parse_n_list("2,...,7").unwrap(), vec![2, 4]);
        assert!(parse_n_list("...,8").is_err());
        assert!(parse_n_list("2,...").is_err());
        assert!(parse_n_list("2,x").is_err());
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        assert!(small_cfg(&[]).validate().is_err());
        assert!(small_cfg(&[4, 2]).validate().is_err());
        assert!(small_cfg(&[0, 2]).validate().is_err());
        let mut cfg = RunConfig::default();
        cfg.grid_factor = 4;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::default();
        cfg.tol = 0.0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn slope_of_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 - 2.0 * x).collect();
        assert!((least_squares_slope(&xs, &ys) + 2.0).abs() < 1e-12);
        // NaN pairs are skipped
        let ys2: Vec<f64> = ys
            .iter()
            .enumerate()
            .map(|(i, &y)| if i == 4 { f64::NAN } else { y })
            .collect();
        assert!((least_squares_slope(&xs, &ys2) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn lemma2_small_n_exact() {
        // n = 2: hand value 1/4
        let t = exp_salem_lemma2(&small_cfg(&[2])).unwrap();
        let row = &t.rows[0];
        assert!((row[1] - 0.25).abs() < 1e-12);
        assert!((row[2] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn lemma2_pipeline_matches_oracle() {
        let t = exp_salem_lemma2(&small_cfg(&[2, 4, 8, 16, 32])).unwrap();
        for row in &t.rows {
            assert!((row[1] - row[2]).abs() < 1e-10, "n = {}", row[0]);
        }
    }

    #[test]
    fn gn_bounds_table() {
        let t = exp_gn_bounds(&small_cfg(&[2, 4, 8, 16])).unwrap();
        for row in &t.rows {
            assert!(row[1] <= 2.0 * PI + 1e-5);
            assert!(row[2] <= 2.0 * PI + 1e-6);
            assert!(row[5] < 1e-12);
        }
        // c_norm(g_2) = 1/2 since g_2 = sin(t)/2
        assert!((t.rows[0][2] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn mu_en_bound_ordering() {
        let t = exp_mu_en(&small_cfg(&[2, 4, 8])).unwrap();
        for row in &t.rows {
            assert!(row[1] <= row[2] + 1e-4, "n = {}", row[0]);
        }
        assert!(t.metadata.contains_key("slope_lower_vs_ln_n"));
    }

    #[test]
    fn asym_dominated_by_symmetric() {
        let t = exp_asym(&small_cfg(&[2, 4, 8])).unwrap();
        for row in &t.rows {
            // u_norm_asym(e_n g_n) >= u_norm(e_n g_n)
            assert!(row[1] >= row[3] - 1e-9, "n = {}", row[0]);
        }
    }

    #[test]
    fn asym_n2_brute_force() {
        // exhaustive oracle over all (N, M) <= 6 for e_2 g_2
        let p = salem_product(2).unwrap();
        let mut best: f64 = 0.0;
        for n in 0..=6usize {
            for m in 0..=6usize {
                best = best.max(c_norm(&p.partial_sum_asym(n, m)));
            }
        }
        let t = exp_asym(&small_cfg(&[2])).unwrap();
        assert!((t.rows[0][1] - best).abs() < 1e-6, "{} vs {best}", t.rows[0][1]);
    }

    #[test]
    fn weight_threshold_alpha2_shrinks() {
        let mut cfg = small_cfg(&[4, 8, 16, 32, 64]);
        cfg.alpha_list = vec![2.0];
        let t = exp_weight_threshold(&cfg).unwrap();
        let first = t.rows.first().unwrap()[2];
        let last = t.rows.last().unwrap()[2];
        assert!(last < first);
    }

    #[test]
    fn sobolev_oracle_matches() {
        let t = exp_sobolev(&small_cfg(&[2, 4, 8, 64])).unwrap();
        for row in &t.rows {
            assert!((row[1] - row[2]).abs() < 1e-10, "n = {}", row[0]);
        }
        // n = 2: single term (1 - 1/2)^2 / 2 = 1/8
        assert!((t.rows[0][2] - 0.125).abs() < 1e-15);
    }

    #[test]
    fn convergence_chain_holds() {
        let cfg = RunConfig::default();
        let t = exp_convergence(&cfg, "g:6", "rand:8:7").unwrap();
        for row in &t.rows {
            assert!(row[1] <= row[4] + 1e-6, "N = {}", row[0]);
        }
        // error vanishes at N = degree
        assert!(t.rows.last().unwrap()[1] < 1e-12);
    }

    #[test]
    fn convergence_constant_multiplier() {
        let cfg = RunConfig::default();
        let t = exp_convergence(&cfg, "e:0", "rand:6:3").unwrap();
        for row in &t.rows {
            assert!((row[1] - row[2]).abs() < 1e-9);
            assert!(row[3] < 1e-12);
        }
    }

    #[test]
    fn csv_shape_and_determinism() {
        let cfg = small_cfg(&[2, 4]);
        let a = exp_sobolev(&cfg).unwrap().to_csv();
        let b = exp_sobolev(&cfg).unwrap().to_csv();
        assert_eq!(a, b);
        let lines: Vec<&str> = a.lines().collect();
        let header = lines.iter().position(|l| !l.starts_with('#')).unwrap();
        assert!(header > 0);
        assert_eq!(lines[header], "n,square_pipeline,square_oracle,ratio_to_half_log");
        assert_eq!(lines.len(), header + 3);
        assert!(lines[header + 1].starts_with("2,"));
    }

    #[test]
    fn cell_formatting_roundtrips() {
        assert_eq!(fmt_cell(2.0), "2");
        assert_eq!(fmt_cell(f64::NAN), "nan");
        let v = std::f64::consts::LN_2;
        let s = fmt_cell(v);
        assert_eq!(s.parse::<f64>().unwrap(), v);
    }

    #[test]
    fn dispatch_rejects_unknown_id() {
        let cfg = small_cfg(&[2]);
        assert!(run_experiment("nope", &cfg, None, None).is_err());
        assert!(run_experiment("sobolev", &cfg, None, None).is_ok());
    }
}
