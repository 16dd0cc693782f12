//! Contour-integral reference values for Ai and Ai'.
//!
//! This is the independent cross-check the rest of the crate is certified
//! against: it shares no code or coefficients with the series/asymptotic
//! evaluator. Ai(z) is computed from the integral representation
//!
//! ```text
//! Ai(z) = 1/(2 pi i) * int_C exp(t^3/3 - z t) dt
//!       = exp(-zeta)/(2 pi i) * int_C' exp(sqrt(z) s^2 + s^3/3) ds,
//! ```
//!
//! after centering the contour on the saddle t = sqrt(z) (s = t - sqrt(z),
//! zeta = (2/3) z^(3/2)). The contour C' is two straight rays from the
//! saddle into the decay valleys; their directions depend only on ph z and
//! are chosen so both the quadratic and the cubic part of the exponent have
//! non-positive real part along the whole ray. Each ray integral is done by
//! adaptive Gauss-Kronrod quadrature, truncated where the integrand has
//! dropped by e^-38.
//!
//! The direct contour covers ph z in [0, 2pi/3]; beyond that the rotation
//! identity Ai(z) + omega Ai(omega z) + omega^2 Ai(omega^2 z) = 0 with
//! omega = e^{2 pi i/3} reduces the phase, and the lower half plane is
//! reached by Schwarz reflection. Intended for |z| >= 0.05 (the saddle
//! degenerates at z = 0); use the crate's series evaluator below that.
//!
//! Accuracy: agreed with independently computed multiprecision values to
//! better than 1e-12 relative at every pinned test point. Used by the test
//! suite and the `verify` module only; no synthesis path calls it.

use crate::quad;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Exponent drop at which a ray integral is truncated: e^-38 ~ 3e-17.
const TAIL_DROP: f64 = 38.0;

/// Reference Ai(z) by contour quadrature.
pub fn ai(z: Complex64) -> Complex64 {
    eval(z, false)
}

/// Reference Ai'(z) by contour quadrature of the same representation
/// (the integrand gains a factor -(sqrt(z) + s)).
pub fn ai_prime(z: Complex64) -> Complex64 {
    eval(z, true)
}

fn eval(z: Complex64, prime: bool) -> Complex64 {
    debug_assert!(
        z.norm() >= 0.05,
        "contour reference degenerates near z = 0 (|z| = {})",
        z.norm()
    );
    if z.im < 0.0 {
        return eval(z.conj(), prime).conj();
    }
    let theta = z.arg(); // in [0, pi]
    if theta <= 2.0 * PI / 3.0 + 1e-9 {
        return direct(z, prime);
    }
    // Rotate into the direct range: Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z),
    // Ai'(z) = -w^2 Ai'(w z) - w Ai'(w^2 z), w = e^{2 pi i / 3}.
    let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let w2 = w * w;
    if prime {
        -w2 * eval(w * z, true) - w * eval(w2 * z, true)
    } else {
        -w * eval(w * z, false) - w2 * eval(w2 * z, false)
    }
}

fn direct(z: Complex64, prime: bool) -> Complex64 {
    let theta = z.arg();
    let sqrt_z = z.sqrt();
    let zeta = z * sqrt_z * (2.0 / 3.0);

    // Outgoing ray: quadratic part exactly on its steepest descent line.
    let beta_plus = FRAC_PI_2 - 0.25 * theta;
    // Incoming ray: midpoint of the angles where both the quadratic part
    // (ph in (pi/2, 3pi/2) after adding theta/2 + 2 beta) and the cubic
    // part (3 beta in the left half plane) decay; for theta in [0, 2pi/3]
    // that interval is (-pi/2, -pi/4 - theta/4).
    let beta_minus = -3.0 * PI / 8.0 - 0.125 * theta;

    let leg_plus = ray_integral(sqrt_z, beta_plus, prime);
    let leg_minus = ray_integral(sqrt_z, beta_minus, prime);

    // Contour runs from the minus-ray infinity through the saddle out the
    // plus ray.
    let contour = Complex64::from_polar(1.0, beta_plus) * leg_plus
        - Complex64::from_polar(1.0, beta_minus) * leg_minus;

    (-zeta).exp() * contour / Complex64::new(0.0, 2.0 * PI)
}

/// Integral of exp(sqrt(z) s^2 + s^3/3) (times -(sqrt(z)+s) for the
/// derivative) along s = r e^{i beta}, r in [0, R].
fn ray_integral(sqrt_z: Complex64, beta: f64, prime: bool) -> Complex64 {
    let dir = Complex64::from_polar(1.0, beta);
    let c2 = sqrt_z * dir * dir;
    let c3 = dir * dir * dir / 3.0;
    let a = (-c2.re).max(0.0);
    let b = (-c3.re).max(0.0);
    debug_assert!(
        a > 1e-3 * sqrt_z.norm() || b > 0.05,
        "ray has no decay: a = {a:.3e}, b = {b:.3e}"
    );

    let radius = tail_radius(a, b);
    let scale = if a > 0.0 { (PI / a).sqrt().max(1.0) } else { 1.0 };
    let out = quad::integrate(
        |r| {
            let e = (c2 * (r * r) + c3 * (r * r * r)).exp();
            if prime {
                let s = dir * r;
                -(sqrt_z + s) * e
            } else {
                e
            }
        },
        0.0,
        radius,
        1e-16 * scale,
        5e-14,
    );
    out.value
}

/// Smallest R with a R^2 + b R^3 = TAIL_DROP (a, b >= 0, not both ~0).
fn tail_radius(a: f64, b: f64) -> f64 {
    let from_quad = if a > 0.0 { (TAIL_DROP / a).sqrt() } else { f64::INFINITY };
    let from_cube = if b > 1e-12 { (TAIL_DROP / b).cbrt() } else { f64::INFINITY };
    let mut r = from_quad.min(from_cube);
    debug_assert!(r.is_finite());
    // g is convex increasing and r starts above the root: Newton is monotone.
    for _ in 0..30 {
        let g = (a * r + b * r * r) * r - TAIL_DROP;
        let gp = 2.0 * a * r + 3.0 * b * r * r;
        let step = g / gp;
        r -= step;
        if step.abs() < 1e-12 * r {
            break;
        }
    }
    r
}
