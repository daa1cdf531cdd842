//! Property tests of the structural invariants.

use edgeworth_rmt_core::dd::Dd;
use edgeworth_rmt_core::kernels::{airy_kernel, hermite_kernel_exact, EdgeTransform, EnsembleSpec};
use edgeworth_rmt_core::specfun::{airy, hermite_phi, laguerre_weighted};
use proptest::prelude::*;

/// Series oracle for e^{-x/2} L_n^a(x) with exact-factor double-double
/// accumulation (see the unit tests for the cancellation budget: safe for
/// 2 sqrt(n x) - x/2 below ~45).
fn laguerre_series_oracle(n: u32, alpha: f64, x: f64) -> f64 {
    let mut c = Dd::from_f64(1.0);
    for i in 1..=n {
        c = c.mul(Dd::from_sum(alpha, i as f64)).div_f64(i as f64);
    }
    let mut sum = c;
    for j in 0..n {
        let jf = j as f64;
        c = c
            .mul_f64(-x)
            .mul_f64((n - j) as f64)
            .div_f64(jf + 1.0)
            .div(Dd::from_sum(alpha, jf + 1.0));
        sum = sum.add(c);
    }
    sum.to_f64() * (-0.5 * x).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_parity(k in 0u32..200, x in 0.0f64..12.0) {
        let plus = hermite_phi(k, x).unwrap().collapsed();
        let minus = hermite_phi(k, -x).unwrap().collapsed();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((plus - sign * minus).abs() <= 1e-13 * plus.abs().max(1e-280));
    }

    #[test]
    fn laguerre_recurrence_vs_series(n in 1u32..100, ai in 0usize..5, xfrac in 0.01f64..0.99) {
        let alpha = [-0.5, 0.0, 0.5, 1.0, 2.5][ai];
        let nf = n as f64;
        let x_safe = if 4.0 * nf <= 90.0 {
            4.0 * nf
        } else {
            let r = 2.0 * nf.sqrt() - (4.0 * nf - 90.0).sqrt();
            r * r
        };
        let x = xfrac * x_safe;
        let rec = laguerre_weighted(n, alpha, x).unwrap().collapsed();
        let orac = laguerre_series_oracle(n, alpha, x);
        if orac.abs() > 1e-3 {
            prop_assert!((rec - orac).abs() < 1e-8 * orac.abs(),
                "n={} alpha={} x={}: {} vs {}", n, alpha, x, rec, orac);
        } else {
            prop_assert!((rec - orac).abs() < 1e-11);
        }
    }

    #[test]
    fn weighted_values_stay_finite_at_edge(n in 2u32..500, xoff in -5.0f64..5.0) {
        // edge-scaling windows of both families
        let nf = n as f64;
        let xh = (2.0 * nf).sqrt() + xoff / (2.0f64.sqrt() * nf.powf(1.0 / 6.0));
        let vh = hermite_phi(n, xh).unwrap();
        prop_assert!(vh.value.is_finite() && vh.collapsed().is_finite());
        let xl = (4.0 * nf + 1.0 + 2.0 * (2.0 * nf).powf(1.0 / 3.0) * xoff).max(0.0);
        let vl = laguerre_weighted(n, 0.5, xl).unwrap();
        prop_assert!(vl.value.is_finite() && vl.collapsed().is_finite());
    }

    #[test]
    fn airy_satisfies_its_ode(x in -9.9f64..9.9) {
        let h = 1e-3;
        let f = |u: f64| airy(u).unwrap().ai;
        let d2 = (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h)
            - f(x + 2.0 * h)) / (12.0 * h * h);
        let rhs = x * f(x);
        prop_assert!((d2 - rhs).abs() <= 1e-6 * rhs.abs().max(1.0));
    }

    #[test]
    fn airy_positive_on_right_axis(x in 0.0f64..100.0) {
        prop_assert!(airy(x).unwrap().ai > 0.0);
    }

    #[test]
    fn kernels_are_symmetric(x in -3.0f64..8.0, y in -3.0f64..8.0, n in 2u32..60) {
        prop_assert_eq!(airy_kernel(x, y), airy_kernel(y, x));
        prop_assert_eq!(hermite_kernel_exact(n, x, y), hermite_kernel_exact(n, y, x));
    }

    #[test]
    fn edge_transform_round_trip(n in 2u32..300, c in -2.0f64..2.0, s in -8.0f64..8.0) {
        for spec in [EnsembleSpec::gue(n, c).unwrap(), EnsembleSpec::lue(n, 0.7, c).unwrap()] {
            let tr = EdgeTransform::new(spec);
            let back = tr.s_of_t(tr.t_of_s(s));
            prop_assert!((back - s).abs() < 1e-12 * (1.0 + s.abs()));
        }
    }
}
