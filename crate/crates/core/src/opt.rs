//! Scalar maximization used to sharpen grid suprema against the continuum.

/// Golden-section maximization on [a, b]; returns (argmax, max).
pub(crate) fn golden_argmax(f: &dyn Fn(f64) -> f64, a: f64, b: f64, iters: usize) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = (a, b);
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let (mut bx, mut bv) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for _ in 0..iters {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = f(x1);
        }
        if f1 > bv {
            bv = f1;
            bx = x1;
        }
        if f2 > bv {
            bv = f2;
            bx = x2;
        }
    }
    (bx, bv)
}
