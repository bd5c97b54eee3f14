//! Property-based invariants for the coefficient algebra and the norm stack.

use num_complex::Complex64;
use proptest::prelude::*;
use uniconv_core::{
    a_norm, analyze, c_norm, modulus_of_continuity, random_trig_poly, u_norm, u_norm_asym,
    variation_norm, Normalization, TrigPoly,
};

fn arb_poly(max_degree: usize) -> impl Strategy<Value = TrigPoly> {
    (0..=max_degree).prop_flat_map(|k| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2 * k + 1).prop_map(move |cs| {
            let coeffs = cs.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
            TrigPoly::from_coeffs(k, coeffs).unwrap()
        })
    })
}

fn arb_real_poly(max_degree: usize) -> impl Strategy<Value = TrigPoly> {
    ((0..=max_degree), any::<u64>())
        .prop_map(|(k, seed)| random_trig_poly(k, seed, Normalization::None))
}

proptest! {
    #[test]
    fn multiply_commutes(a in arb_poly(10), b in arb_poly(10)) {
        let ab = a.multiply(&b);
        let ba = b.multiply(&a);
        prop_assert!(ab.sub(&ba).max_abs_coeff() <= 1e-12);
    }

    #[test]
    fn multiply_distributes(a in arb_poly(8), b in arb_poly(8), c in arb_poly(8)) {
        let lhs = a.multiply(&b.add(&c));
        let rhs = a.multiply(&b).add(&a.multiply(&c));
        prop_assert!(lhs.sub(&rhs).max_abs_coeff() <= 1e-12);
    }

    #[test]
    fn partial_sum_is_projection(p in arb_poly(16), n in 0usize..20) {
        let s = p.partial_sum(n);
        prop_assert!(s.partial_sum(n).sub(&s).max_abs_coeff() <= 1e-15);
        prop_assert!(s.degree() <= n.max(0));
    }

    #[test]
    fn analysis_inverts_synthesis(p in arb_poly(12)) {
        let k = p.degree();
        let m = (4 * (2 * k + 1)).next_power_of_two().max(8);
        let g = p.synthesize(m).unwrap();
        let q = analyze(&g, k).unwrap();
        prop_assert!(q.sub(&p).max_abs_coeff() <= 1e-12);
    }

    #[test]
    fn hermitian_coefficients_give_real_values(p in arb_real_poly(12)) {
        prop_assert!(p.is_real_valued());
        let m = (4 * (2 * p.degree() + 1)).next_power_of_two().max(8);
        let g = p.synthesize(m).unwrap();
        let sup = g.max_abs().max(1.0);
        for s in g.samples() {
            prop_assert!(s.im.abs() <= 1e-10 * sup);
        }
    }

    #[test]
    fn modulate_matches_multiplication(p in arb_poly(8), n in -6i64..=6) {
        let e = TrigPoly::from_terms(&[(n, Complex64::new(1.0, 0.0))]);
        let lhs = p.modulate(n);
        let rhs = p.multiply(&e);
        prop_assert!(lhs.sub(&rhs).max_abs_coeff() <= 1e-13);
    }

    #[test]
    fn a_norm_is_modulation_invariant(p in arb_poly(10), n in -8i64..=8) {
        let d = (a_norm(&p.modulate(n)) - a_norm(&p)).abs();
        prop_assert!(d <= 1e-12 * (1.0 + a_norm(&p)));
    }

    #[test]
    fn u_norm_is_homogeneous(p in arb_poly(8), c in 0.1f64..4.0) {
        let scaled = p.scale(Complex64::new(c, 0.0));
        let d = (u_norm(&scaled) - c * u_norm(&p)).abs();
        prop_assert!(d <= 1e-6 * (1.0 + c * u_norm(&p)));
    }

    #[test]
    fn norm_chain(p in arb_poly(10)) {
        let c = c_norm(&p);
        let u = u_norm(&p);
        let a = a_norm(&p);
        prop_assert!(c <= u + 1e-8 * (1.0 + u));
        prop_assert!(u <= a + 1e-8 * (1.0 + a));
    }

    #[test]
    fn asymmetric_dominates_symmetric(p in arb_poly(8)) {
        prop_assert!(u_norm_asym(&p) >= u_norm(&p) - 1e-8 * (1.0 + u_norm(&p)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modulus_of_continuity_is_monotone_and_subadditive(
        p in arb_real_poly(8),
        d1 in 0.05f64..1.4,
        d2 in 0.05f64..1.4,
    ) {
        let w1 = modulus_of_continuity(&p, d1).unwrap();
        let w2 = modulus_of_continuity(&p, d2).unwrap();
        let w12 = modulus_of_continuity(&p, (d1 + d2).min(std::f64::consts::PI)).unwrap();
        if d1 <= d2 {
            prop_assert!(w1 <= w2 + 2e-5);
        }
        prop_assert!(w12 <= w1 + w2 + 2e-5);
    }

    #[test]
    fn variation_dominates_oscillation(p in arb_real_poly(8)) {
        // total variation over a closed curve is at least twice the range
        let m = (16 * (2 * p.degree() + 1)).next_power_of_two().max(16);
        let g = p.synthesize(m).unwrap();
        let hi = g.samples().iter().map(|s| s.re).fold(f64::MIN, f64::max);
        let lo = g.samples().iter().map(|s| s.re).fold(f64::MAX, f64::min);
        prop_assert!(variation_norm(&p) >= 2.0 * (hi - lo) - 1e-4);
    }
}
