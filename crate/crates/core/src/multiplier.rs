//! Pointwise-multiplier machinery: the commutator Q_N of multiplication and
//! partial summation, three computable upper bounds on the multiplier norm,
//! and empirical lower bounds from witness functions.

use crate::error::{CoreError, Result};
use crate::norms::{c_norm, dini_integral, sin_log_integral, u_norm, uniform_dini};
use crate::poly::TrigPoly;
use serde::Serialize;

/// Q_N(f) = m * S_N(f) - S_N(m * f), exact coefficient arithmetic.
pub fn commutator(m: &TrigPoly, f: &TrigPoly, n: usize) -> TrigPoly {
    m.multiply(&f.partial_sum(n))
        .sub(&m.multiply(f).partial_sum(n))
}

/// Uniform bound on ||Q_N||_{C -> C} over all N: the uniform Dini functional
/// of the multiplier.
pub fn commutator_sup_bound(m: &TrigPoly) -> f64 {
    uniform_dini(m)
}

/// Upper bound ||m||_MU <= ||m||_C + sup_t int |m(t)-m(theta)|/|t-theta|.
pub fn mu_upper_dini(m: &TrigPoly) -> f64 {
    c_norm(m) + uniform_dini(m)
}

/// Upper bound ||m||_MU <= ||m||_C + 2 int_0^pi omega(m, delta)/delta.
pub fn mu_upper_omega(m: &TrigPoly) -> f64 {
    c_norm(m) + 2.0 * dini_integral(m)
}

/// Log-weighted upper bound in fully computable form:
/// ||m||_C + 2 sum_{k != 0} |m^(k)| J(k), where J is the sine-log integral.
/// The termwise omega bound makes this dominate the omega-integral bound
/// while avoiding any unspecified constant.
pub fn mu_upper_log(m: &TrigPoly) -> f64 {
    let tail: f64 = m
        .terms()
        .filter(|&(k, _)| k != 0)
        .map(|(k, c)| c.norm() * sin_log_integral(k).expect("k != 0"))
        .sum();
    c_norm(m) + 2.0 * tail
}

/// Finite restriction of the multiplier-norm supremum to a witness set:
/// max over witnesses f of u_norm(m f)/u_norm(f). Always a valid lower bound.
/// Witnesses with u_norm below 1e-12 are rejected (e.g. the zero polynomial
/// g_1). Ties within 1e-12 keep the first witness.
pub fn mu_lower_empirical(
    m: &TrigPoly,
    witnesses: &[(String, TrigPoly)],
) -> Result<(f64, String)> {
    let mut best: Option<(f64, &str)> = None;
    for (name, f) in witnesses {
        let uf = u_norm(f);
        if uf < 1e-12 {
            continue;
        }
        let ratio = u_norm(&m.multiply(f)) / uf;
        match best {
            Some((v, _)) if ratio <= v + 1e-12 => {}
            _ => best = Some((ratio, name)),
        }
    }
    best.map(|(v, n)| (v, n.to_string()))
        .ok_or(CoreError::EmptyWitnessList)
}

/// Collected upper and lower bounds for one multiplier candidate.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplierEstimate {
    pub descriptor: String,
    pub upper_dini: Option<f64>,
    pub upper_omega: Option<f64>,
    pub upper_log: Option<f64>,
    pub lower_empirical: Option<f64>,
    pub witness: Option<String>,
}

pub fn multiplier_estimate(
    m: &TrigPoly,
    descriptor: &str,
    witnesses: &[(String, TrigPoly)],
) -> Result<MultiplierEstimate> {
    let (lower, witness) = mu_lower_empirical(m, witnesses)?;
    Ok(MultiplierEstimate {
        descriptor: descriptor.to_string(),
        upper_dini: Some(mu_upper_dini(m)),
        upper_omega: Some(mu_upper_omega(m)),
        upper_log: Some(mu_upper_log(m)),
        lower_empirical: Some(lower),
        witness: Some(witness),
    })
}
