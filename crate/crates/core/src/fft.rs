//! Thin wrapper over rustfft with a thread-local planner.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::cell::RefCell;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// In-place unnormalized forward DFT: out[m] = sum_j buf[j] e^{-2pi i mj/M}.
pub fn forward(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()).process(buf));
}

/// In-place unnormalized inverse DFT: out[j] = sum_m buf[m] e^{+2pi i mj/M}.
pub fn inverse(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(buf.len()).process(buf));
}

/// Smallest power of two >= n (and >= 2).
pub fn next_pow2(n: usize) -> usize {
    let mut m = 2;
    while m < n {
        m *= 2;
    }
    m
}
