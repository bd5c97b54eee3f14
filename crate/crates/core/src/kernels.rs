//! Named constructors: Dirichlet and Fejer kernels, the triangular-weighted
//! sine polynomials g_n, exponentials, and seeded random test polynomials.

use crate::error::{CoreError, Result};
use crate::poly::TrigPoly;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Specification of a named kernel/function, as used by the CLI mini-language.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum KernelSpec {
    Dirichlet { order: usize },
    Fejer { order: usize },
    SalemG { order: usize },
    Exponential { order: i64 },
    Random { degree: usize, seed: u64 },
}

impl KernelSpec {
    pub fn build(&self) -> Result<TrigPoly> {
        match *self {
            KernelSpec::Dirichlet { order } => Ok(dirichlet(order)),
            KernelSpec::Fejer { order } => fejer(order),
            KernelSpec::SalemG { order } => salem_g(order),
            KernelSpec::Exponential { order } => Ok(exponential(order)),
            KernelSpec::Random { degree, seed } => {
                Ok(random_trig_poly(degree, seed, Normalization::None))
            }
        }
    }
}

/// D_N: all coefficients 1 on [-N, N].
pub fn dirichlet(n: usize) -> TrigPoly {
    let coeffs = vec![Complex64::new(1.0, 0.0); 2 * n + 1];
    TrigPoly::from_coeffs(n, coeffs).expect("length matches")
}

/// F_n: triangular coefficients (1 - |k|/n) on [-(n-1), n-1]; requires n >= 1.
pub fn fejer(n: usize) -> Result<TrigPoly> {
    if n < 1 {
        return Err(CoreError::Domain("fejer kernel requires order >= 1".into()));
    }
    let d = n - 1;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
    for (i, c) in coeffs.iter_mut().enumerate() {
        let k = (i as i64 - d as i64).unsigned_abs() as usize;
        *c = Complex64::new(1.0 - k as f64 / n as f64, 0.0);
    }
    TrigPoly::from_coeffs(d, coeffs)
}

/// g_n(t) = sum_{k=1}^{n} (1 - k/n) sin(kt)/k, stored at tight degree n-1
/// (the k = n term has zero weight). Coefficients (1 - |k|/n)/(2ik).
/// g_1 is the zero polynomial.
pub fn salem_g(n: usize) -> Result<TrigPoly> {
    if n < 1 {
        return Err(CoreError::Domain("salem_g requires order >= 1".into()));
    }
    let d = n - 1;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
    for k in 1..n {
        // 1/(2ik) = -i/(2k)
        let w = (1.0 - k as f64 / n as f64) / (2.0 * k as f64);
        coeffs[d + k] = Complex64::new(0.0, -w);
        coeffs[d - k] = Complex64::new(0.0, w);
    }
    TrigPoly::from_coeffs(d, coeffs)
}

/// e_n(t) = e^{int}: single unit coefficient at index n.
pub fn exponential(n: i64) -> TrigPoly {
    TrigPoly::from_terms(&[(n, Complex64::new(1.0, 0.0))])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    None,
    UnitSupNorm,
}

// splitmix64 finalizer
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based uniform in [-1, 1), keyed by (seed, counter) so coefficient
/// generation is order-independent and reproducible under parallel use.
fn uniform(seed: u64, counter: u64) -> f64 {
    let z = mix64(seed.wrapping_add(mix64(counter.wrapping_mul(0x9e3779b97f4a7c15))));
    ((z >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
}

/// Hermitian-symmetric (real-valued) random polynomial of degree K.
/// Identical (K, seed) yields bit-identical output across runs and thread
/// counts.
pub fn random_trig_poly(k: usize, seed: u64, normalization: Normalization) -> TrigPoly {
    let mut terms: Vec<(i64, Complex64)> = Vec::with_capacity(2 * k + 1);
    terms.push((0, Complex64::new(uniform(seed, 0), 0.0)));
    for j in 1..=k as i64 {
        let c = Complex64::new(uniform(seed, 2 * j as u64), uniform(seed, 2 * j as u64 + 1));
        terms.push((j, c));
        terms.push((-j, c.conj()));
    }
    let p = TrigPoly::from_terms(&terms);
    match normalization {
        Normalization::None => p,
        Normalization::UnitSupNorm => {
            let s = crate::poly::sup_norm(&p);
            if s == 0.0 {
                p
            } else {
                p.scale(Complex64::new(1.0 / s, 0.0))
            }
        }
    }
}
