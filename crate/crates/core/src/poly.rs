//! Trigonometric polynomials stored as dense two-sided coefficient vectors,
//! their evaluation representation on uniform grids, and the coefficient-level
//! operators (partial sums, products, modulation, differentiation).

use crate::error::{CoreError, Result};
use crate::fft;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Oversampling factor used when a sup norm is taken over a synthesized grid.
///
/// With M >= 8(2K+1) the grid spacing h satisfies Kh <= pi/8, and for a
/// trigonometric polynomial of degree K the true maximum of |p| exceeds the
/// grid maximum by at most a factor 1/cos(Kh/2) ~ 1.02 (Bernstein spacing
/// bound). Parabolic refinement around the grid argmax then brings the
/// relative error below 1e-6.
pub const DEFAULT_GRID_FACTOR: usize = 8;

/// A finite two-sided Fourier coefficient sequence: c_k for |k| <= degree.
/// Indices outside [-degree, degree] read as zero. The degree may be slack
/// (trailing zero coefficients); `trim` normalizes it, never implicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly {
    degree: usize,
    // length 2*degree+1, coefficient for frequency k lives at index k+degree
    coeffs: Vec<Complex64>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly {
            degree: 0,
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    pub fn constant(c: Complex64) -> Self {
        TrigPoly {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// Build from a dense coefficient slice of length 2*degree+1.
    pub fn from_coeffs(degree: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * degree + 1 {
            return Err(CoreError::Domain(format!(
                "coefficient vector length {} does not match degree {} (need {})",
                coeffs.len(),
                degree,
                2 * degree + 1
            )));
        }
        Ok(TrigPoly { degree, coeffs })
    }

    /// Build from sparse (frequency, coefficient) terms. Later duplicates add.
    pub fn from_terms(terms: &[(i64, Complex64)]) -> Self {
        let degree = terms
            .iter()
            .map(|&(k, _)| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * degree + 1];
        for &(k, c) in terms {
            coeffs[(k + degree as i64) as usize] += c;
        }
        TrigPoly { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.degree {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + self.degree as i64) as usize]
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Nonzero (frequency, coefficient) pairs in ascending frequency order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let d = self.degree as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm_sqr() != 0.0)
            .map(move |(i, &c)| (i as i64 - d, c))
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| c.norm_sqr() != 0.0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm_sqr() == 0.0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Explicit zero-trimming normalization: drops trailing zero coefficients
    /// so that the degree becomes tight.
    pub fn trim(&self) -> TrigPoly {
        let mut d = self.degree;
        while d > 0
            && self.coeff(d as i64).norm_sqr() == 0.0
            && self.coeff(-(d as i64)).norm_sqr() == 0.0
        {
            d -= 1;
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
        for k in -(d as i64)..=(d as i64) {
            coeffs[(k + d as i64) as usize] = self.coeff(k);
        }
        TrigPoly { degree: d, coeffs }
    }

    /// Re-derived Hermitian symmetry check: c_{-k} = conj(c_k) for all k,
    /// within 1e-12 of the coefficient scale. Never cached or trusted.
    pub fn is_real_valued(&self) -> bool {
        let scale = 1.0 + self.max_abs_coeff();
        (0..=self.degree as i64).all(|k| {
            (self.coeff(-k) - self.coeff(k).conj()).norm() <= 1e-12 * scale
        })
    }

    pub fn scale(&self, c: Complex64) -> TrigPoly {
        TrigPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &TrigPoly) -> TrigPoly {
        let d = self.degree.max(other.degree);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let k = i as i64 - d as i64;
            *c = self.coeff(k) + other.coeff(k);
        }
        TrigPoly { degree: d, coeffs }
    }

    pub fn sub(&self, other: &TrigPoly) -> TrigPoly {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Multiplication by e_n: shifts every frequency index by n.
    pub fn modulate(&self, n: i64) -> TrigPoly {
        if n == 0 {
            return self.clone();
        }
        let d = self.degree + n.unsigned_abs() as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
        for (k, c) in self.terms() {
            coeffs[(k + n + d as i64) as usize] = c;
        }
        TrigPoly { degree: d, coeffs }
    }

    /// Symmetric partial sum S_N: keeps frequencies |k| <= N.
    pub fn partial_sum(&self, n: usize) -> TrigPoly {
        if n >= self.degree {
            return self.clone();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i as i64 - n as i64);
        }
        TrigPoly { degree: n, coeffs }
    }

    /// Asymmetric partial sum S_{N,M}: keeps frequencies -N <= k <= M.
    pub fn partial_sum_asym(&self, n: usize, m: usize) -> TrigPoly {
        let d = self.degree;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
        for (k, c) in self.terms() {
            if -(n as i64) <= k && k <= m as i64 {
                coeffs[(k + d as i64) as usize] = c;
            }
        }
        TrigPoly { degree: d, coeffs }
    }

    /// Coefficient at k becomes ik * c_k.
    pub fn derivative(&self) -> TrigPoly {
        let d = self.degree as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * Complex64::new(0.0, (i as i64 - d) as f64))
            .collect();
        TrigPoly {
            degree: self.degree,
            coeffs,
        }
    }

    /// Exact coefficient convolution. Small products (by nonzero count) are
    /// convolved directly; large dense ones go through a zero-padded DFT.
    pub fn multiply(&self, other: &TrigPoly) -> TrigPoly {
        let d = self.degree + other.degree;
        let na = self.nonzero_count();
        let nb = other.nonzero_count();
        if na.saturating_mul(nb) <= 1 << 16 {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
            // accumulate in ascending-index order for reproducible rounding
            let ta: Vec<_> = self.terms().collect();
            let tb: Vec<_> = other.terms().collect();
            for &(ka, ca) in &ta {
                for &(kb, cb) in &tb {
                    coeffs[(ka + kb + d as i64) as usize] += ca * cb;
                }
            }
            TrigPoly { degree: d, coeffs }
        } else {
            let m = fft::next_pow2(2 * d + 2);
            let ga = self.synthesize(m).expect("grid large enough");
            let gb = other.synthesize(m).expect("grid large enough");
            let prod: Vec<Complex64> = ga
                .samples()
                .iter()
                .zip(gb.samples())
                .map(|(&a, &b)| a * b)
                .collect();
            analyze(&GridFunction { samples: prod }, d).expect("degree fits grid")
        }
    }

    /// Evaluate at a single point by Horner recursion in z = e^{it}.
    pub fn eval(&self, t: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, t);
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        // acc = sum_j c_{j-K} z^j evaluated with j descending; shift by z^{-K}
        acc * Complex64::from_polar(1.0, -(self.degree as f64) * t)
    }

    /// Sample on the uniform grid t_j = 2 pi j / M via an inverse DFT.
    pub fn synthesize(&self, m: usize) -> Result<GridFunction> {
        if !m.is_power_of_two() {
            return Err(CoreError::GridNotPowerOfTwo { m });
        }
        let min = 2 * self.degree + 2;
        if m < min {
            return Err(CoreError::GridTooSmall {
                m,
                degree: self.degree,
                min,
            });
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (k, c) in self.terms() {
            buf[k.rem_euclid(m as i64) as usize] += c;
        }
        fft::inverse(&mut buf);
        Ok(GridFunction { samples: buf })
    }
}

/// Uniform samples at t_j = 2 pi j / M, j = 0..M-1, M a power of two.
#[derive(Clone, Debug)]
pub struct GridFunction {
    samples: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if !samples.len().is_power_of_two() {
            return Err(CoreError::GridNotPowerOfTwo { m: samples.len() });
        }
        Ok(GridFunction { samples })
    }

    pub fn size(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn point(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.samples.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Recover the unique TrigPoly of degree <= K interpolating the samples,
/// coefficients via a forward DFT divided by M.
pub fn analyze(g: &GridFunction, k: usize) -> Result<TrigPoly> {
    let m = g.size();
    if 2 * k + 1 > m {
        return Err(CoreError::DegreeTooLarge { degree: k, m });
    }
    let mut buf = g.samples.clone();
    fft::forward(&mut buf);
    let scale = 1.0 / m as f64;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * k + 1];
    for (i, c) in coeffs.iter_mut().enumerate() {
        let freq = i as i64 - k as i64;
        *c = buf[freq.rem_euclid(m as i64) as usize] * scale;
    }
    TrigPoly::from_coeffs(k, coeffs)
}

/// Grid size used for sup-norm style scans of a degree-K polynomial.
pub fn sup_grid_size(degree: usize, factor: usize) -> usize {
    fft::next_pow2(factor * (2 * degree + 1)).max(8)
}

/// Refine the top grid local maxima of |eval| against the continuum.
/// `values[j]` are the grid magnitudes; returns max of grid and refined peaks.
pub(crate) fn refine_grid_max(values: &[f64], eval: &dyn Fn(f64) -> f64) -> f64 {
    let m = values.len();
    let grid_max = values.iter().copied().fold(0.0, f64::max);
    if grid_max == 0.0 {
        return 0.0;
    }
    // Any peak whose true height could compete with the global maximum has a
    // grid value within the Bernstein spacing factor (~2% at 8x oversampling).
    let threshold = 0.96 * grid_max;
    let mut candidates: Vec<usize> = (0..m)
        .filter(|&j| {
            let v = values[j];
            v >= threshold && v >= values[(j + m - 1) % m] && v >= values[(j + 1) % m]
        })
        .collect();
    candidates.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    candidates.truncate(8);
    let h = 2.0 * PI / m as f64;
    let mut best = grid_max;
    for j in candidates {
        let t = h * j as f64;
        best = best.max(crate::opt::golden_argmax(eval, t - h, t + h, 36).1);
    }
    best
}

/// Sup norm of |p| over the circle: oversampled grid scan plus local
/// refinement. Relative error <= 1e-6 for the default factor.
pub fn sup_norm(p: &TrigPoly) -> f64 {
    sup_norm_with_factor(p, DEFAULT_GRID_FACTOR)
}

pub fn sup_norm_with_factor(p: &TrigPoly, factor: usize) -> f64 {
    if p.is_zero() {
        return 0.0;
    }
    let m = sup_grid_size(p.degree(), factor);
    let g = p.synthesize(m).expect("grid large enough");
    let values: Vec<f64> = g.samples().iter().map(|c| c.norm()).collect();
    refine_grid_max(&values, &|t| p.eval(t).norm())
}
