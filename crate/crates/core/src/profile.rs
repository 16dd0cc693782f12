//! Boundary wavefront profiles: the free functions that ride along the
//! amplitude characteristics. On the illuminated side they are only ever
//! evaluated on the real axis; the shadow-side amplitude formulas evaluate
//! them at complex arguments x ± i·rate·y, so a profile must be analytic in
//! a strip around the real axis and must say how wide that strip is.
//! Evaluation outside the declared strip is refused rather than
//! extrapolated.

use crate::{Complex64, Error, Result};
use std::fmt;
use std::sync::Arc;

/// How far off the real axis a profile may be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    /// Analytic on the whole plane (constant, Gaussian).
    Entire,
    /// Analytic in the declared strip |Im w| <= strip_half_width.
    StripAnalytic,
    /// Analytic off a set of vertical cuts; trustworthy only well inside
    /// the declared strip (raised cosine).
    PiecewiseAnalytic,
}

#[derive(Clone)]
enum Kind {
    Constant(Complex64),
    /// exp(-(w - center)^2 / width^2)
    Gaussian { center: f64, width: f64 },
    /// (1 + cos(pi (w - center)/half_width))/2 inside |Re w - center| <=
    /// half_width, zero outside. Off the real axis the two pieces no longer
    /// join smoothly, which is why the declared strip is only a quarter of
    /// the half-width.
    RaisedCosine { center: f64, half_width: f64 },
    Custom(Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>),
}

/// A wavefront profile with its declared analyticity strip.
#[derive(Clone)]
pub struct WavefrontProfile {
    kind: Kind,
    strip: f64,
}

impl fmt::Debug for WavefrontProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.kind {
            Kind::Constant(c) => format!("Constant({c})"),
            Kind::Gaussian { center, width } => format!("Gaussian({center}, {width})"),
            Kind::RaisedCosine { center, half_width } => {
                format!("RaisedCosine({center}, {half_width})")
            }
            Kind::Custom(_) => "Custom".into(),
        };
        write!(f, "WavefrontProfile::{name} [strip {}]", self.strip)
    }
}

impl WavefrontProfile {
    pub fn constant(value: Complex64) -> Self {
        WavefrontProfile {
            kind: Kind::Constant(value),
            strip: f64::INFINITY,
        }
    }

    /// exp(-(w - center)^2 / width^2); entire, so the strip is unbounded.
    pub fn gaussian(center: f64, width: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0 && center.is_finite()) {
            return Err(Error::Config(format!(
                "gaussian profile needs finite center and width > 0, got ({center}, {width})"
            )));
        }
        Ok(WavefrontProfile {
            kind: Kind::Gaussian { center, width },
            strip: f64::INFINITY,
        })
    }

    /// Compactly supported raised-cosine bump. Its complex continuation is
    /// taken piecewise in Re w, so the declared strip is half_width / 4.
    pub fn raised_cosine(center: f64, half_width: f64) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0 && center.is_finite()) {
            return Err(Error::Config(format!(
                "raised-cosine profile needs finite center and half_width > 0, got ({center}, {half_width})"
            )));
        }
        Ok(WavefrontProfile {
            kind: Kind::RaisedCosine { center, half_width },
            strip: half_width / 4.0,
        })
    }

    /// A caller-supplied analytic function. The strip half-width must be
    /// declared (positive; infinity for an entire function) — there is no
    /// way to discover it from a black box, and the shadow formulas are
    /// meaningless without it.
    pub fn custom(
        f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        strip_half_width: f64,
    ) -> Result<Self> {
        if strip_half_width.is_nan() || strip_half_width <= 0.0 {
            return Err(Error::Config(format!(
                "custom profile needs a declared strip half-width > 0, got {strip_half_width}"
            )));
        }
        Ok(WavefrontProfile {
            kind: Kind::Custom(Arc::new(f)),
            strip: strip_half_width,
        })
    }

    pub fn strip_half_width(&self) -> f64 {
        self.strip
    }

    /// Short human-readable tag, used as grid/export metadata.
    pub fn describe(&self) -> String {
        match &self.kind {
            Kind::Constant(c) => format!("constant({c})"),
            Kind::Gaussian { center, width } => {
                format!("gaussian(center={center}, width={width})")
            }
            Kind::RaisedCosine { center, half_width } => {
                format!("raised-cosine(center={center}, half_width={half_width})")
            }
            Kind::Custom(_) => format!("custom(strip={})", self.strip),
        }
    }

    pub fn smoothness(&self) -> Smoothness {
        match &self.kind {
            Kind::Constant(_) | Kind::Gaussian { .. } => Smoothness::Entire,
            Kind::RaisedCosine { .. } => Smoothness::PiecewiseAnalytic,
            Kind::Custom(_) => {
                if self.strip.is_infinite() {
                    Smoothness::Entire
                } else {
                    Smoothness::StripAnalytic
                }
            }
        }
    }

    /// Evaluate on the real axis (always inside the strip).
    pub fn eval_real(&self, t: f64) -> Complex64 {
        self.raw(Complex64::new(t, 0.0))
    }

    /// Evaluate at a complex argument, refusing points outside the
    /// declared strip.
    pub fn eval(&self, w: Complex64) -> Result<Complex64> {
        if w.im.abs() > self.strip {
            return Err(Error::StripViolation {
                im: w.im,
                strip: self.strip,
            });
        }
        Ok(self.raw(w))
    }

    fn raw(&self, w: Complex64) -> Complex64 {
        match &self.kind {
            Kind::Constant(c) => *c,
            Kind::Gaussian { center, width } => {
                let z = (w - center) / *width;
                (-z * z).exp()
            }
            Kind::RaisedCosine { center, half_width } => {
                if (w.re - center).abs() > *half_width {
                    Complex64::new(0.0, 0.0)
                } else {
                    let z = (w - center) * (std::f64::consts::PI / half_width);
                    0.5 * (1.0 + z.cos())
                }
            }
            Kind::Custom(f) => f(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        assert!(WavefrontProfile::gaussian(0.0, 0.0).is_err());
        assert!(WavefrontProfile::gaussian(f64::NAN, 1.0).is_err());
        assert!(WavefrontProfile::raised_cosine(0.0, -1.0).is_err());
        assert!(WavefrontProfile::custom(|w| w, 0.0).is_err());
        assert!(WavefrontProfile::custom(|w| w, f64::NAN).is_err());
        assert!(WavefrontProfile::custom(|w| w, f64::INFINITY).is_ok());
    }

    #[test]
    fn smoothness_and_strip() {
        let c = WavefrontProfile::constant(Complex64::new(1.0, 0.0));
        assert_eq!(c.smoothness(), Smoothness::Entire);
        assert!(c.strip_half_width().is_infinite());

        let rc = WavefrontProfile::raised_cosine(0.0, 2.0).unwrap();
        assert_eq!(rc.smoothness(), Smoothness::PiecewiseAnalytic);
        assert!((rc.strip_half_width() - 0.5).abs() < 1e-15);

        let cu = WavefrontProfile::custom(|w| w * w, 0.7).unwrap();
        assert_eq!(cu.smoothness(), Smoothness::StripAnalytic);
    }

    #[test]
    fn gaussian_values() {
        let g = WavefrontProfile::gaussian(1.0, 2.0).unwrap();
        assert!((g.eval_real(1.0) - 1.0).norm() < 1e-15);
        assert!((g.eval_real(3.0).re - (-1.0f64).exp()).abs() < 1e-15);
        // Purely imaginary offset grows like exp(+|Im|^2 / width^2).
        let v = g.eval(Complex64::new(1.0, 2.0)).unwrap();
        assert!((v.re - 1.0f64.exp()).abs() < 1e-12);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn raised_cosine_values() {
        let rc = WavefrontProfile::raised_cosine(0.5, 1.0).unwrap();
        assert!((rc.eval_real(0.5) - 1.0).norm() < 1e-15);
        assert!(rc.eval_real(1.5).norm() < 1e-15);
        assert!(rc.eval_real(-0.51).norm() < 1e-30);
        assert!((rc.eval_real(1.0).re - 0.5).abs() < 1e-15);
        // Complex evaluation inside the strip; zero outside the support
        // regardless of Im.
        let inside = rc.eval(Complex64::new(0.5, 0.2)).unwrap();
        assert!(inside.re > 1.0); // cosh lift at the peak
        assert!(rc.eval(Complex64::new(3.0, 0.1)).unwrap().norm() == 0.0);
    }

    #[test]
    fn strip_is_enforced() {
        let rc = WavefrontProfile::raised_cosine(0.0, 1.0).unwrap();
        match rc.eval(Complex64::new(0.0, 0.3)) {
            Err(Error::StripViolation { im, strip }) => {
                assert!((im - 0.3).abs() < 1e-15);
                assert!((strip - 0.25).abs() < 1e-15);
            }
            other => panic!("expected strip violation, got {other:?}"),
        }
        assert!(rc.eval(Complex64::new(0.0, -0.2)).is_ok());
        // Entire profiles never refuse.
        let g = WavefrontProfile::gaussian(0.0, 1.0).unwrap();
        assert!(g.eval(Complex64::new(0.0, 50.0)).is_ok());
    }

    #[test]
    fn custom_profile_evaluates() {
        let p = WavefrontProfile::custom(|w| w, 1.0).unwrap();
        let v = p.eval(Complex64::new(0.25, -0.5)).unwrap();
        assert!((v - Complex64::new(0.25, -0.5)).norm() < 1e-16);
        assert!((p.eval_real(3.0) - 3.0).norm() < 1e-16);
    }
}
