//! Airy function Ai and its derivative on the real line.
//!
//! The evaluation is hybrid. On the central window the Maclaurin series of
//! Ai = c1 f - c2 g is summed in double-double arithmetic, because the two
//! series cancel catastrophically towards both ends of the window (the
//! summands reach ~1e8 near x = -10 while Ai stays O(1), and ~1e6 near
//! x = +6 while Ai is ~1e-5). Outside the window the standard asymptotic
//! expansions converge to full double precision. The switchover points are
//! placed where both branches deliver at least ~1e-13 absolute error:
//! x = +6 on the right and x = -10.5 on the left; splitting at 4.5 on the
//! positive axis, as one would for plain f64 series summation, leaves the
//! asymptotic branch ~3e-11 short of the target between 4.5 and 6.

use crate::dd::Dd;
use crate::gauss;
use crate::specfun::SpecFunError;
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

/// Paired value of Ai(x) and Ai'(x).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AiryValue {
    pub ai: f64,
    pub aip: f64,
}

// Ai(0) = 3^{-2/3}/Gamma(2/3) and -Ai'(0) = 3^{-1/3}/Gamma(1/3),
// split into high/low double words.
const C1: Dd = Dd {
    hi: 0.3550280538878172,
    lo: 2.05233632436212e-17,
};
const C2: Dd = Dd {
    hi: 0.2588194037928068,
    lo: -2.522243111610832e-17,
};

const SERIES_LEFT: f64 = -10.5;
const SERIES_RIGHT: f64 = 6.0;
const TWO_SQRT_PI: f64 = 3.5449077018110318; // 2 sqrt(pi)
const FRAC_PI_4: f64 = core::f64::consts::FRAC_PI_4;

/// Ai(x) and Ai'(x) for finite real x with |x| <= 200.
///
/// Absolute error is below 1e-12 for |x| <= 10 and the relative error below
/// 1e-10 for x in (10, 200] as long as the true value is representable in
/// f64 (Ai underflows to zero beyond x ~ 105).
pub fn airy(x: f64) -> Result<AiryValue, SpecFunError> {
    if !x.is_finite() {
        return Err(SpecFunError::Domain("airy: argument must be finite"));
    }
    if x.abs() > 200.0 {
        return Err(SpecFunError::Domain("airy: |x| > 200 unsupported"));
    }
    if (SERIES_LEFT..=SERIES_RIGHT).contains(&x) {
        Ok(airy_series(x))
    } else if x > 0.0 {
        Ok(airy_asymptotic_pos(x))
    } else {
        Ok(airy_asymptotic_neg(x))
    }
}

/// Maclaurin series of f, f', g, g' summed in double-double arithmetic.
///
/// f = sum_k F_k with F_0 = 1, F_k = F_{k-1} x^3 / ((3k-1)(3k));
/// g = sum_k G_k with G_0 = x, G_k = G_{k-1} x^3 / ((3k)(3k+1));
/// g' = sum_k Q_k with Q_0 = 1, Q_k = Q_{k-1} x^3 / ((3k-2)(3k));
/// f' = sum_{k>=1} 3k F_k / x.
fn airy_series(x: f64) -> AiryValue {
    if x == 0.0 {
        return AiryValue {
            ai: C1.to_f64(),
            aip: -C2.to_f64(),
        };
    }
    let x_dd = Dd::from_f64(x);
    let x3 = x_dd.mul(x_dd).mul(x_dd);

    let mut fk = Dd::from_f64(1.0);
    let mut gk = x_dd;
    let mut qk = Dd::from_f64(1.0);
    let mut f = fk;
    let mut g = gk;
    let mut gp = qk;
    let mut fp = Dd::ZERO;

    for k in 1..200usize {
        let kf = k as f64;
        fk = fk.mul(x3).div_f64((3.0 * kf - 1.0) * (3.0 * kf));
        gk = gk.mul(x3).div_f64((3.0 * kf) * (3.0 * kf + 1.0));
        qk = qk.mul(x3).div_f64((3.0 * kf - 2.0) * (3.0 * kf));
        let pk = fk.mul_f64(3.0 * kf).div_f64(x);
        f = f.add(fk);
        g = g.add(gk);
        gp = gp.add(qk);
        fp = fp.add(pk);
        if fk.abs().max(gk.abs()).max(qk.abs()) < 1e-20 {
            break;
        }
    }

    let ai = C1.mul(f).sub(C2.mul(g)).to_f64();
    let aip = C1.mul(fp).sub(C2.mul(gp)).to_f64();
    AiryValue { ai, aip }
}

/// Poincare coefficients u_k (and v_k = -(6k+1)/(6k-1) u_k) of the
/// large-argument expansions, generated on the fly.
fn airy_asymptotic_pos(x: f64) -> AiryValue {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let mut u = 1.0;
    let mut sum_a = 1.0;
    let mut sum_b = 1.0;
    let mut sign = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60usize {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        let term_a = u / zeta.powi(k as i32);
        if term_a.abs() >= prev {
            break; // divergent tail reached
        }
        prev = term_a.abs();
        sign = -sign;
        let v = -u * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        sum_a += sign * term_a;
        sum_b += sign * v / zeta.powi(k as i32);
        if term_a.abs() < 1e-18 {
            break;
        }
    }
    let root4 = x.sqrt().sqrt();
    let damp = (-zeta).exp();
    AiryValue {
        ai: damp * sum_a / (TWO_SQRT_PI * root4),
        aip: -root4 * damp * sum_b / TWO_SQRT_PI,
    }
}

fn airy_asymptotic_neg(x: f64) -> AiryValue {
    let z = -x;
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    // even/odd splits of sum (-1)^k u_k / zeta^k and the v_k analogue
    let (mut ce, mut co, mut de, mut doo) = (1.0, 0.0, 1.0, 0.0);
    let mut u = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60usize {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        let t = u / zeta.powi(k as i32);
        if t.abs() >= prev {
            break;
        }
        prev = t.abs();
        let v = -u * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        let tv = v / zeta.powi(k as i32);
        // (-1)^k applied as alternation within each parity class:
        // k = 2m contributes (-1)^m to the even sums, k = 2m+1 contributes
        // (-1)^m to the odd sums.
        let m = k / 2;
        let s = if m % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            ce += s * t;
            de += s * tv;
        } else {
            co += s * t;
            doo += s * tv;
        }
        if t.abs() < 1e-18 {
            break;
        }
    }
    let (sin_t, cos_t) = (zeta - FRAC_PI_4).sin_cos();
    let root4 = z.sqrt().sqrt();
    let sqrt_pi = TWO_SQRT_PI / 2.0;
    AiryValue {
        ai: (cos_t * ce + sin_t * co) / (sqrt_pi * root4),
        aip: root4 * (sin_t * de - cos_t * doo) / sqrt_pi,
    }
}

/// Independent evaluation of Ai(t) by quadrature of the contour integral
/// along the two rays at angles +-(2/3)pi.
///
/// Folding the conjugate rays together leaves two real integrals over the
/// ray parameter r:
///
/// Ai(t) = [ sqrt(3) A - B ] / (2 pi),
/// A = int_0^R exp(-r^3/3 - r t / 2) cos(sqrt(3) r t / 2) dr,
/// B = the same integrand with sin.
///
/// `radius` is the ray truncation length R and `nodes` the starting
/// Gauss-Legendre node count; nodes are doubled until two successive
/// evaluations agree to 1e-10, which is the advertised accuracy.
pub fn airy_contour(t: f64, radius: f64, nodes: usize) -> Result<f64, SpecFunError> {
    if !t.is_finite() || t.abs() > 10.0 {
        return Err(SpecFunError::Domain("airy_contour: need finite |t| <= 10"));
    }
    if !(radius > 0.0) || nodes == 0 {
        return Err(SpecFunError::Domain(
            "airy_contour: radius and nodes must be positive",
        ));
    }
    const TOL: f64 = 1e-10;
    let eval = |m: usize| -> f64 {
        let (xs, ws) = gauss::legendre_mapped(0.0, radius, m);
        let mut a = 0.0;
        let mut b = 0.0;
        for (&r, &w) in xs.iter().zip(ws.iter()) {
            let damp = (-r * r * r / 3.0 - 0.5 * r * t).exp();
            let (s, c) = (3.0f64.sqrt() * 0.5 * r * t).sin_cos();
            a += w * damp * c;
            b += w * damp * s;
        }
        (3.0f64.sqrt() * a - b) / (2.0 * core::f64::consts::PI)
    };
    let mut m = nodes.max(8);
    let mut last = eval(m);
    for _ in 0..10 {
        m *= 2;
        let next = eval(m);
        if (next - last).abs() < TOL {
            return Ok(next);
        }
        last = next;
    }
    Err(SpecFunError::NonConvergence {
        delta: (eval(2 * m) - last).abs(),
    })
}
