//! Adaptive Simpson quadrature. The integrands in this crate are piecewise
//! smooth with known singular structure, so plain Simpson with Richardson
//! control and a subdivision cap is enough.

/// Total subdivision cap across one outer call (2^20 intervals).
const MAX_INTERVALS: u64 = 1 << 20;

struct Ctx<'a> {
    f: &'a dyn Fn(f64) -> f64,
    budget: u64,
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn recurse(
    ctx: &mut Ctx,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = (ctx.f)(lm);
    let frm = (ctx.f)(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || ctx.budget == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    ctx.budget -= 1;
    recurse(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + recurse(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Integrate f over [a, b] to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let mut ctx = Ctx { f, budget: MAX_INTERVALS };
    recurse(&mut ctx, a, b, fa, fm, fb, whole, tol, 48)
}

/// Integrate f over [a, b] split into `panels` equal panels, each integrated
/// adaptively with a proportional share of the tolerance. Used when the
/// integrand has structure at a known scale (kernel oscillations, |.| kinks).
pub fn panel_adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize, tol: f64) -> f64 {
    let panels = panels.max(1);
    let w = (b - a) / panels as f64;
    let per = tol / panels as f64;
    (0..panels)
        .map(|i| {
            let x0 = a + w * i as f64;
            adaptive_simpson(f, x0, x0 + w, per)
        })
        .sum()
}
