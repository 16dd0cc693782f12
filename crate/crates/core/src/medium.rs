use crate::{Error, Result};

/// Incidence configuration: a plane interface at y = 0 separates a denser
/// medium (refractive index `n`, the illuminated side y > 0) from a rarer
/// one (index 1, y < 0). A beam arrives from above at angle `theta_i` from
/// the interface normal, with free-space wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumConfig {
    n: f64,
    theta_i: f64,
    k: f64,
}

impl MediumConfig {
    /// Requires `n > 1`, `theta_i` in the open interval `(0, pi/2)`, `k > 0`.
    pub fn new(n: f64, theta_i: f64, k: f64) -> Result<Self> {
        if !(n.is_finite() && n > 1.0) {
            return Err(Error::Config(format!("n = {n} must be finite and > 1")));
        }
        if !(theta_i.is_finite() && theta_i > 0.0 && theta_i < std::f64::consts::FRAC_PI_2) {
            return Err(Error::Config(format!(
                "theta_i = {theta_i} must lie in (0, pi/2)"
            )));
        }
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::Config(format!("k = {k} must be finite and > 0")));
        }
        Ok(Self { n, theta_i, k })
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn theta_i(&self) -> f64 {
        self.theta_i
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Critical angle `asin(1/n)` of the interface.
    pub fn theta_crit(&self) -> f64 {
        (1.0 / self.n).asin()
    }

    /// Free-space wavelength `2 pi / k`.
    pub fn wavelength(&self) -> f64 {
        std::f64::consts::TAU / self.k
    }

    pub fn sin_theta(&self) -> f64 {
        self.theta_i.sin()
    }

    pub fn cos_theta(&self) -> f64 {
        self.theta_i.cos()
    }

    /// True when the beam arrives beyond the critical angle and an
    /// evanescent region exists below the interface.
    pub fn is_supercritical(&self) -> bool {
        self.n * self.sin_theta() > 1.0
    }

    /// Transverse decay rate `kappa = sqrt(n^2 sin^2 theta_i - 1)` of the
    /// evanescent field. Errors below the critical angle.
    pub fn kappa(&self) -> Result<f64> {
        let q = self.n * self.sin_theta();
        let k2 = q * q - 1.0;
        if k2 <= 0.0 {
            return Err(Error::Subcritical);
        }
        Ok(k2.sqrt())
    }
}
