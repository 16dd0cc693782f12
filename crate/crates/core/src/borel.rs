//! Borel-Laplace machinery for the late terms of the exponential
//! asymptotics: the basis integrals that resum factorial tails, their
//! monodromy around the origin, the factorial late-term model, and the
//! exact tail resummation that turns a divergent truncation into full
//! accuracy.
//!
//! The basis integral is
//!
//! ```text
//! Lambda_n(z) = (1/n!) int_0^inf t^n e^{-t} / (1 + t/z) dt,
//! ```
//!
//! an O(1) damping factor (Lambda_n -> 1 as z -> inf) that carries all of
//! the tail's analytic structure: a pole sweeping the integration path at
//! z < 0, a logarithmic branch point at z = 0, and the monodromy
//!
//! ```text
//! Lambda_n(z e^{2 pi i}) - Lambda_n(z) = -2 pi i (-1)^n z^{n+1} e^z / n!.
//! ```
//!
//! For the Airy corrective series S(zeta) = sum (∓1)^s u_s zeta^{-s}, the
//! terms W_s = u_s zeta^{-s} obey the factorial late-term law
//!
//! ```text
//! W_m ~ (1/(2 pi F^m)) sum_{s < s_max} (-F)^s (m-s-1)! W_s,   F = 2 zeta,
//! ```
//!
//! (checked here to the precision the truncation s_max allows), and the
//! entire tail beyond a truncation at n obeys the exact resummation
//!
//! ```text
//! sum_{m >= n} (-1)^m W_m = (1/(2 pi (-F)^n))
//!     sum_{s < s_max} (-F)^s (n-s-1)! W_s Lambda_{n-s-1}(F) + O(e^{-|F|} lvl 2),
//! ```
//!
//! which the tests certify by reconstructing 2 sqrt(pi) z^{1/4} e^{zeta}
//! Ai(z) from a deliberately divergent truncation to ~1e-12.

use crate::airy::{u_coefficients, zeta};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Smallest index the factorial late-term law is served for; below it the
/// law's own O(1/m) corrections are no longer small against s_max levels.
pub const LATE_TERM_MIN_INDEX: usize = 10;

/// One basis integral Lambda_n evaluated at `z`.
#[derive(Clone, Copy, Debug)]
pub struct BorelKernel {
    pub n: usize,
    pub z: Complex64,
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Lambda_n(z) along the straight path t in (0, inf).
///
/// Refused with [`Error::PoleOnPath`] exactly when the integrand's pole
/// t = -z sits on the path, i.e. for real negative z. (Near-misses are
/// served: the integral exists and the panels concentrate around the
/// near-pole.)
pub fn lambda_n(kernel: &BorelKernel) -> Result<Complex64> {
    if kernel.z.im == 0.0 && kernel.z.re < 0.0 {
        return Err(Error::PoleOnPath);
    }
    lambda_on_ray(kernel, 0.0)
}

/// Lambda_n(z) along the rotated path t = r e^{i phi}, r in (0, inf),
/// |phi| < pi/2 (the Gaussian damping of the kernel fails beyond).
///
/// Rotating the path across the pole direction changes the value by the
/// pole's residue; comparing this against [`lambda_n`] is how the
/// monodromy bookkeeping is certified.
pub fn lambda_n_ray(kernel: &BorelKernel, phi: f64) -> Result<Complex64> {
    // A NaN phase must land here too, hence no plain `>=`.
    if !phi.is_finite() || phi.abs() >= FRAC_PI_2 {
        return Err(Error::PhaseDomain { ph: phi });
    }
    lambda_on_ray(kernel, phi)
}

fn lambda_on_ray(kernel: &BorelKernel, phi: f64) -> Result<Complex64> {
    let z = kernel.z;
    let n = kernel.n;
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("Lambda_n is singular at z = 0".into()));
    }
    // Pole direction: t = -z. On (or numerically indistinguishable from)
    // the chosen ray, the integral does not exist.
    let pole_dir = (-z).arg();
    if (pole_dir - phi).abs() < 1e-12 {
        return Err(Error::PoleOnPath);
    }

    let ln_fact = ln_factorial(n);
    let cos_phi = phi.cos();
    // Truncation radius: the neglected tail of r^n e^{-r cos phi} must be
    // below e^{-36.8} * n! (~1e-16 of the full integral).
    let mut t_max = (n as f64 + 40.0) / cos_phi;
    while (n as f64) * t_max.ln() - t_max * cos_phi > ln_fact - 36.8 {
        t_max *= 1.25;
    }

    let dir = Complex64::from_polar(1.0, phi);
    let nf = n as f64;
    let out = crate::quad::integrate(
        |r| {
            let log_w = if n == 0 {
                -r * cos_phi
            } else {
                nf * r.ln() - r * cos_phi - ln_fact
            };
            let osc = Complex64::from_polar(log_w.exp(), -r * phi.sin());
            osc / (Complex64::new(1.0, 0.0) + dir * r / z)
        },
        0.0,
        t_max,
        1e-15,
        1e-13,
    );
    // t^n dt = r^n e^{i phi (n+1)} dr; the constant phase factor was kept
    // outside the quadrature.
    Ok(dir.powi(n as i32 + 1) * out.value)
}

/// The discontinuity picked up by Lambda_n under `turns` full circuits of
/// z around the origin (positive = counterclockwise):
/// `turns * (-2 pi i) (-1)^n z^{n+1} e^z / n!`. The jump is linear in the
/// winding because only the logarithm in Lambda's closed form is
/// multivalued.
pub fn monodromy_jump(kernel: &BorelKernel, turns: i32) -> Complex64 {
    let n = kernel.n;
    let z = kernel.z;
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    // z^{n+1} e^z / n! in log space to keep large n and |z| overflow-free.
    let mag = ((n as f64 + 1.0) * z.norm().ln() + z.re - ln_factorial(n)).exp();
    let ph = (n as f64 + 1.0) * z.arg() + z.im;
    let core = Complex64::from_polar(mag, ph);
    let parity = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Complex64::new(0.0, -2.0 * PI) * parity * core * (turns as f64)
}

/// Factorial model of the late terms of one exponential corrective
/// series: singulant `f`, the early terms `w_early[s] = W_s` feeding the
/// law, and the number of them used.
#[derive(Clone, Debug)]
pub struct LateTermModel {
    pub f: Complex64,
    pub w_early: Vec<Complex64>,
    pub s_max: usize,
}

impl LateTermModel {
    /// The model for the Airy corrective series at `z`: singulant
    /// F = 2 zeta(z) ([0, 2pi) branch) and early terms u_s zeta^{-s}.
    pub fn for_airy(z: Complex64, s_max: usize) -> Result<Self> {
        if s_max == 0 {
            return Err(Error::Domain("late-term model needs s_max >= 1".into()));
        }
        let zt = zeta(z)?;
        let u = u_coefficients(s_max);
        let w_early = (0..s_max)
            .map(|s| Complex64::new(u[s], 0.0) * zt.powi(-(s as i32)))
            .collect();
        Ok(LateTermModel {
            f: 2.0 * zt,
            w_early,
            s_max,
        })
    }
}

/// The late-term law: predicted unsigned term
/// W_m = (1/(2 pi F^m)) sum_{s<s_max} (-F)^s (m-s-1)! W_s.
///
/// Returns W_m on the model's natural branch (positive for real positive
/// singulant); the consuming series attaches its own (∓1)^m. Indices
/// below [`LATE_TERM_MIN_INDEX`] are refused — the law is asymptotic
/// in m.
pub fn late_term(model: &LateTermModel, m: usize) -> Result<Complex64> {
    if m < LATE_TERM_MIN_INDEX {
        return Err(Error::LateTermRange {
            m,
            min: LATE_TERM_MIN_INDEX,
        });
    }
    if m <= model.s_max {
        return Err(Error::Domain(format!(
            "late-term index {m} must exceed the model depth {}",
            model.s_max
        )));
    }
    let f = model.f;
    let mut sum = Complex64::new(0.0, 0.0);
    for (s, &w) in model.w_early.iter().enumerate() {
        sum += (-f).powi(s as i32) * factorial(m - s - 1) * w;
    }
    Ok(sum / (2.0 * PI) / f.powi(m as i32))
}

/// Exact resummation of the tail sum_{m>=n} (-1)^m W_m of the alternating
/// corrective series truncated at `n`:
///
/// `(1/(2 pi (-F)^n)) sum_{s<s_max} (-F)^s (n-s-1)! W_s Lambda_{n-s-1}(F)`.
///
/// (-F)^n is an integer power — no branch choice is involved. The
/// singulant must satisfy |ph F| < pi: on the negative real axis the
/// Lambda integrals hit their pole (the series is then non-resummable
/// along the real direction) and the whole construction is refused.
pub fn resum_tail(model: &LateTermModel, n: usize) -> Result<Complex64> {
    let f = model.f;
    if f.im == 0.0 && f.re < 0.0 {
        return Err(Error::PhaseDomain { ph: PI });
    }
    if n <= model.s_max {
        return Err(Error::Domain(format!(
            "truncation {n} must exceed the model depth {}",
            model.s_max
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (s, &w) in model.w_early.iter().enumerate() {
        let lam = lambda_n(&BorelKernel { n: n - s - 1, z: f })?;
        sum += (-f).powi(s as i32) * factorial(n - s - 1) * w * lam;
    }
    Ok(sum / (2.0 * PI) / (-f).powi(n as i32))
}
