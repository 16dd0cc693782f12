//! Leading-order amplitude transport along the characteristics of the
//! split-phase field. Above the interface the system is hyperbolic: two
//! real characteristic lines x ± y·tan(theta_i) carry the amplitude pair
//! (g0, h0) with mild y^(±1/6) end-point weights. Below it the system
//! turns elliptic — the "characteristics" have slopes ±i·sqrt(-aS·bS) —
//! and the same pair is built from analytic profiles evaluated at complex
//! arguments, which is what smooths the shadow field.
//!
//! Both regions reduce to one first-order system
//!
//! ```text
//! g_y + b(theta) y^{1/3}  h_x =  g / (6y)
//! h_y + a(theta) y^{-1/3} g_x = -h / (6y)
//! ```
//!
//! with region-specific constants (a, b) = (alpha_i, beta_i) for y > 0 and
//! (alpha_s, beta_s) for y < 0 (real cube roots throughout, so the y < 0
//! branch is well-defined). [`transport_residual`] checks any sampled pair
//! against exactly this form.

use crate::profile::WavefrontProfile;
use crate::{Complex64, Error, MediumConfig, Result};

/// Default finite-difference step for [`transport_residual`], in the same
/// units as x and y.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Band of kappa^2 = n^2 sin^2(theta) - 1 around zero treated as critical
/// incidence: inside it the shadow coefficients exceed ~1e4 and the
/// leading-order expansion has no meaning.
const CRITICAL_BAND: f64 = 1e-12;

/// cos(theta) below this is treated as grazing incidence.
const GRAZING_BAND: f64 = 1e-9;

/// The four transport constants and the two characteristic slopes for a
/// given incidence. Products, not the individual values, are the
/// coordinate-free content: alpha_i·beta_i = tan^2(theta_i) > 0
/// (hyperbolic) and alpha_s·beta_s = -n^2 sin^2(theta_i)/kappa^2 < 0
/// (elliptic).
#[derive(Clone, Copy, Debug)]
pub struct TransportCoefficients {
    pub alpha_i: f64,
    pub beta_i: f64,
    pub alpha_s: f64,
    /// Negative for every supercritical incidence.
    pub beta_s: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

impl TransportCoefficients {
    pub fn tan_theta(&self) -> f64 {
        self.lambda_plus
    }

    /// sqrt(-alpha_s·beta_s) = n sin(theta_i)/kappa: the rate at which the
    /// shadow depth enters the complex profile arguments x ± i·rate·y.
    pub fn shadow_argument_rate(&self) -> f64 {
        (-self.alpha_s * self.beta_s).sqrt()
    }

    /// sqrt(-alpha_s/beta_s): the real scale of the shadow h0 relative to
    /// the profile difference.
    pub fn shadow_ratio(&self) -> f64 {
        (-self.alpha_s / self.beta_s).sqrt()
    }
}

/// Transport constants for a supercritical, non-grazing incidence.
pub fn coefficients(cfg: &MediumConfig) -> Result<TransportCoefficients> {
    let (s, c) = (cfg.sin_theta(), cfg.cos_theta());
    if c < GRAZING_BAND {
        return Err(Error::GrazingIncidence);
    }
    let ns = cfg.n() * s;
    let kappa_sq = ns * ns - 1.0;
    if kappa_sq < -CRITICAL_BAND {
        return Err(Error::Subcritical);
    }
    if kappa_sq <= CRITICAL_BAND {
        return Err(Error::CriticalIncidence);
    }
    let tan = s / c;
    let w = (1.5 * cfg.n() * c).cbrt();
    let kappa = kappa_sq.sqrt();
    Ok(TransportCoefficients {
        alpha_i: tan / w,
        beta_i: tan * w,
        alpha_s: (2.0f64 / 3.0).cbrt() * kappa.powf(-4.0 / 3.0) * ns,
        beta_s: -1.5f64.cbrt() * kappa.powf(-2.0 / 3.0) * ns,
        lambda_plus: tan,
        lambda_minus: -tan,
    })
}

/// One amplitude characteristic: the level line x ± y·tan(theta_i) = x0.
#[derive(Clone, Copy, Debug)]
pub struct CharacteristicLine {
    /// '+' or '-': which sign the level function carries.
    pub branch: char,
    pub tan_theta: f64,
    pub x0: f64,
}

impl CharacteristicLine {
    fn sign(&self) -> f64 {
        if self.branch == '+' {
            1.0
        } else {
            -1.0
        }
    }

    /// x ± y·tan(theta_i) - x0; zero exactly on the line.
    pub fn level(&self, x: f64, y: f64) -> f64 {
        x + self.sign() * y * self.tan_theta - self.x0
    }

    /// The x coordinate of the line at height y.
    pub fn x_at(&self, y: f64) -> f64 {
        self.x0 - self.sign() * y * self.tan_theta
    }

    /// Unit direction (dx, dy) along the line, oriented upward.
    pub fn direction(&self) -> (f64, f64) {
        let norm = self.tan_theta.hypot(1.0);
        (-self.sign() * self.tan_theta / norm, 1.0 / norm)
    }
}

/// The two amplitude characteristics through (x0, 0) in the illuminated
/// region, returned as (plus branch, minus branch).
pub fn characteristic_curves(
    coef: &TransportCoefficients,
    x0: f64,
) -> (CharacteristicLine, CharacteristicLine) {
    let tan_theta = coef.tan_theta();
    (
        CharacteristicLine {
            branch: '+',
            tan_theta,
            x0,
        },
        CharacteristicLine {
            branch: '-',
            tan_theta,
            x0,
        },
    )
}

/// The leading-order amplitude pair at one point.
#[derive(Clone, Copy, Debug)]
pub struct AmplitudePair {
    pub g0: Complex64,
    pub h0: Complex64,
}

/// Illuminated-side amplitudes: profiles riding the two real
/// characteristics with the y^(±1/6) weights,
///
/// ```text
/// g0 = sqrt(b) y^{ 1/6} [ sqrt(b) f1(x + y tan) + sqrt(a) f2(x - y tan)]
/// h0 = sqrt(a) y^{-1/6} [-sqrt(b) f1(x + y tan) + sqrt(a) f2(x - y tan)]
/// ```
///
/// with (a, b) = (alpha_i, beta_i).
pub fn illuminated_amplitudes(
    coef: &TransportCoefficients,
    f1: &WavefrontProfile,
    f2: &WavefrontProfile,
    x: f64,
    y: f64,
) -> Result<AmplitudePair> {
    if y <= 0.0 {
        return Err(Error::Domain(format!(
            "illuminated amplitudes need y > 0, got y = {y}"
        )));
    }
    let tan = coef.tan_theta();
    let (sa, sb) = (coef.alpha_i.sqrt(), coef.beta_i.sqrt());
    let a = f1.eval_real(x + y * tan);
    let b = f2.eval_real(x - y * tan);
    let y6 = y.powf(1.0 / 6.0);
    Ok(AmplitudePair {
        g0: sb * y6 * (sb * a + sa * b),
        h0: sa / y6 * (sa * b - sb * a),
    })
}

/// Shadow-side amplitudes: the elliptic analogue, with the profiles
/// evaluated at the complex arguments x ± i·rate·y (rate =
/// sqrt(-alpha_s·beta_s); note Im(x + i·rate·y) < 0 since y < 0),
///
/// ```text
/// g0 =                      (-y)^{ 1/6} [f1(x + i·rate·y) + f2(x - i·rate·y)]
/// h0 = i sqrt(-as/bs) (-y)^{-1/6} [f2(x - i·rate·y) - f1(x + i·rate·y)]
/// ```
///
/// The orientation of the difference in h0 is the one under which the
/// pair satisfies the shadow transport system identically (the opposite
/// order leaves an O(1) residual proportional to f1' + f2';
/// [`transport_residual`]'s convergence tests pin this down).
pub fn shadow_amplitudes(
    coef: &TransportCoefficients,
    f1: &WavefrontProfile,
    f2: &WavefrontProfile,
    x: f64,
    y: f64,
) -> Result<AmplitudePair> {
    if y >= 0.0 {
        return Err(Error::Domain(format!(
            "shadow amplitudes need y < 0, got y = {y}"
        )));
    }
    let rate = coef.shadow_argument_rate();
    let a = f1.eval(Complex64::new(x, rate * y))?;
    let b = f2.eval(Complex64::new(x, -rate * y))?;
    let s6 = (-y).powf(1.0 / 6.0);
    let rot = Complex64::new(0.0, coef.shadow_ratio());
    Ok(AmplitudePair {
        g0: s6 * (a + b),
        h0: rot * (b - a) / s6,
    })
}

/// Residuals of the two transport equations at (x, y), from central
/// differences of a sampled amplitude field on the 5-point cross stencil
/// with step h. `region` picks the coefficient pair: `Hyperbolic` checks
/// the illuminated form, `Elliptic` the shadow form. The whole stencil
/// must sit strictly inside that region.
///
/// Returns the norms of the two equation residuals. For an exact solution
/// pair these decay like O(h^2); for anything else they stall at a
/// positive level.
pub fn transport_residual(
    coef: &TransportCoefficients,
    region: crate::eikonal::RegionType,
    sample: impl Fn(f64, f64) -> Result<AmplitudePair>,
    x: f64,
    y: f64,
    h: f64,
) -> Result<(f64, f64)> {
    use crate::eikonal::RegionType;
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("stencil step must be positive, got {h}")));
    }
    let (alpha, beta) = match region {
        RegionType::Hyperbolic => {
            if y - h <= 0.0 {
                return Err(Error::RegionStraddle { y, h });
            }
            (coef.alpha_i, coef.beta_i)
        }
        RegionType::Elliptic => {
            if y + h >= 0.0 {
                return Err(Error::RegionStraddle { y, h });
            }
            (coef.alpha_s, coef.beta_s)
        }
        RegionType::Parabolic => {
            return Err(Error::Domain(
                "transport residuals are defined off the interface only".into(),
            ));
        }
    };
    let center = sample(x, y)?;
    let east = sample(x + h, y)?;
    let west = sample(x - h, y)?;
    let north = sample(x, y + h)?;
    let south = sample(x, y - h)?;

    let g_x = (east.g0 - west.g0) / (2.0 * h);
    let h_x = (east.h0 - west.h0) / (2.0 * h);
    let g_y = (north.g0 - south.g0) / (2.0 * h);
    let h_y = (north.h0 - south.h0) / (2.0 * h);

    let cr = y.cbrt();
    let res_a = g_y + beta * cr * h_x - center.g0 / (6.0 * y);
    let res_b = h_y + alpha / cr * g_x + center.h0 / (6.0 * y);
    Ok((res_a.norm(), res_b.norm()))
}
