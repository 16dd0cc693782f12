//! Mixed-type eikonal system for a plane wave totally reflected at a flat
//! interface: the phase pair (u, v) in closed form on both sides, the
//! complex phase in the shadow, characteristic classification, and the
//! first-order diagnostics (Beltrami system, quasi-conformality bracket,
//! gradient-map residuals) that certify a numerical phase field.
//!
//! Geometry: the denser medium (index n > 1) fills y > 0, the rarer
//! medium (index 1) fills y < 0, the incident plane wave travels downward
//! at angle theta_i from the interface normal. The split phase is
//! Phi_± = u ± (2/3) v^{3/2} with
//!
//! ```text
//! u = n x sin(theta_i)                            (both sides)
//! v = +[(3/2) n cos(theta_i) y]^{2/3}             (y > 0)
//! v = -[(3/2) kappa (-y)]^{2/3}                   (y < 0, supercritical)
//! kappa = sqrt(n^2 sin^2(theta_i) - 1)
//! ```
//!
//! For y > 0 that reproduces the incident/reflected plane phases
//! n(x sin ± y cos); for y < 0 the phase turns complex, Phi_± =
//! u ∓ i kappa (-y), and e^{ik Phi_-} is the evanescent decay. The sign
//! of v is the type of the underlying first-order system: hyperbolic
//! where v > 0, parabolic on v = 0, elliptic where v < 0. Fractional
//! powers of v are always taken of |v| on the real branch and assembled
//! explicitly — no complex powers.

use crate::{Error, MediumConfig, Result};
use num_complex::Complex64;

/// Physical region of a field point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Illuminated,
    /// The interface y = 0: phases coincide, gradients of v blow up.
    Boundary,
    Shadow,
}

/// Type of the first-order system at a point, decided by the sign of v.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionType {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

/// The split-phase pair at one point, with its region tag.
#[derive(Clone, Copy, Debug)]
pub struct PhasePair {
    pub u: f64,
    pub v: f64,
    pub region: Region,
}

impl PhasePair {
    pub fn at(cfg: &MediumConfig, x: f64, y: f64) -> Result<Self> {
        let region = if y > 0.0 {
            Region::Illuminated
        } else if y < 0.0 {
            Region::Shadow
        } else {
            Region::Boundary
        };
        Ok(PhasePair {
            u: u_field(cfg, x, region),
            v: v_field(cfg, y)?,
            region,
        })
    }

    /// (Phi_plus, Phi_minus) assembled from (u, v) on the explicit branch.
    pub fn phases(&self) -> (Complex64, Complex64) {
        let w = (2.0 / 3.0) * self.v.abs().powf(1.5);
        match self.region {
            Region::Shadow => (
                Complex64::new(self.u, -w),
                Complex64::new(self.u, w),
            ),
            _ => (
                Complex64::new(self.u + w, 0.0),
                Complex64::new(self.u - w, 0.0),
            ),
        }
    }
}

/// u = n x sin(theta_i). The same expression serves both media — Snell
/// matching of the boundary trace is what fixed the shadow-side u — so
/// the region tag only documents intent at the call site.
pub fn u_field(cfg: &MediumConfig, x: f64, _region: Region) -> f64 {
    cfg.n() * cfg.sin_theta() * x
}

/// The splitting parameter v(y); see the module docs for both branches.
/// y < 0 requires supercritical incidence (the shadow-side expression is
/// built from kappa).
pub fn v_field(cfg: &MediumConfig, y: f64) -> Result<f64> {
    if y > 0.0 {
        Ok((1.5 * cfg.n() * cfg.cos_theta() * y).powf(2.0 / 3.0))
    } else if y < 0.0 {
        let kappa = cfg.kappa()?;
        Ok(-(1.5 * kappa * (-y)).powf(2.0 / 3.0))
    } else {
        Ok(0.0)
    }
}

/// (Phi_plus, Phi_minus) at a point: real n(x sin ± y cos) on the
/// illuminated side, u ∓ i kappa (-y) in the shadow.
pub fn phase(cfg: &MediumConfig, x: f64, y: f64) -> Result<(Complex64, Complex64)> {
    Ok(PhasePair::at(cfg, x, y)?.phases())
}

/// Classify the first-order system from the splitting parameter and the
/// Jacobian of the (u, v) gradient map. A vanishing Jacobian means (u, v)
/// fails to be a coordinate pair there and no classification is made.
pub fn classify(v: f64, j: f64) -> Result<RegionType> {
    if j == 0.0 {
        return Err(Error::DegenerateJacobian);
    }
    Ok(if v > 0.0 {
        RegionType::Hyperbolic
    } else if v < 0.0 {
        RegionType::Elliptic
    } else {
        RegionType::Parabolic
    })
}

/// First derivatives of (u, v) at a point, plus their Jacobian
/// J = u_y v_x - u_x v_y.
#[derive(Clone, Copy, Debug)]
pub struct GradientSample {
    pub u_x: f64,
    pub u_y: f64,
    pub v_x: f64,
    pub v_y: f64,
    pub j: f64,
}

impl GradientSample {
    pub fn new(u_x: f64, u_y: f64, v_x: f64, v_y: f64) -> Self {
        GradientSample {
            u_x,
            u_y,
            v_x,
            v_y,
            j: u_y * v_x - u_x * v_y,
        }
    }

    /// Analytic gradients of the closed-form (u, v). The interface itself
    /// is refused: v_y ~ |y|^{-1/3} there.
    pub fn closed_form(cfg: &MediumConfig, _x: f64, y: f64) -> Result<Self> {
        if y == 0.0 {
            return Err(Error::Domain(
                "gradients of v are singular on the interface y = 0".into(),
            ));
        }
        let u_x = cfg.n() * cfg.sin_theta();
        let v_y = if y > 0.0 {
            (2.0 * cfg.n().powi(2) * cfg.cos_theta().powi(2) / (3.0 * y)).powf(1.0 / 3.0)
        } else {
            let d = 1.5 * cfg.kappa()?;
            (2.0 / 3.0) * d.powf(2.0 / 3.0) * (-y).powf(-1.0 / 3.0)
        };
        Ok(GradientSample::new(u_x, 0.0, 0.0, v_y))
    }

    /// Central-difference gradients of caller-supplied fields, step
    /// h = 1e-6 max(1, |y|) — the balance point between truncation and
    /// roundoff for these O(1)-curvature fields. Near the interface the
    /// stencil straddles both media; that is the caller's lookout.
    pub fn from_fields(
        u: impl Fn(f64, f64) -> f64,
        v: impl Fn(f64, f64) -> f64,
        x: f64,
        y: f64,
    ) -> Self {
        let h = 1e-6 * y.abs().max(1.0);
        let d = |f: &dyn Fn(f64, f64) -> f64, dx: f64, dy: f64| {
            (f(x + dx * h, y + dy * h) - f(x - dx * h, y - dy * h)) / (2.0 * h)
        };
        GradientSample::new(
            d(&u, 1.0, 0.0),
            d(&u, 0.0, 1.0),
            d(&v, 1.0, 0.0),
            d(&v, 0.0, 1.0),
        )
    }

    fn grad_u_norm(&self) -> f64 {
        self.u_x.hypot(self.u_y)
    }

    fn grad_v_norm(&self) -> f64 {
        self.v_x.hypot(self.v_y)
    }
}

/// The two characteristic slopes dx/dy = (u_x ± sqrt(v) v_x)/(u_y ± sqrt(v) v_y)
/// of the hyperbolic system; they coincide at v = 0 (parabolic degeneracy)
/// and do not exist for v < 0.
pub fn characteristic_slopes(g: &GradientSample, v: f64) -> Result<(f64, f64)> {
    if v < 0.0 {
        return Err(Error::EllipticCharacteristics);
    }
    let root = v.sqrt();
    let slope = |sign: f64, branch: char| -> Result<f64> {
        let den = g.u_y + sign * root * g.v_y;
        if den == 0.0 {
            return Err(Error::VerticalCharacteristic { branch });
        }
        Ok((g.u_x + sign * root * g.v_x) / den)
    };
    Ok((slope(1.0, '+')?, slope(-1.0, '-')?))
}

/// Quasi-conformality diagnostics of a shadow-side gradient sample.
#[derive(Clone, Copy, Debug)]
pub struct BeltramiDiagnostic {
    /// rho = |grad u| / |grad v|, the dilatation of the gradient map.
    pub rho: f64,
    /// Residual of u_x = rho v_y.
    pub residual_a: f64,
    /// Residual of u_y = -rho v_x.
    pub residual_b: f64,
    /// rho + 1/rho: the smallest ellipticity constant the sample admits.
    pub q_min: f64,
    /// Oriented Jacobian u_x v_y - u_y v_x of the (u, v) map — the sign
    /// convention under which a sample satisfying the system exactly has
    /// jacobian = rho |grad v|^2 > 0. (The stored GradientSample.j is its
    /// negative, following the determinant order of the classification.)
    pub jacobian: f64,
    /// |grad u|^2 + |grad v|^2.
    pub grad_norm_sq: f64,
}

impl BeltramiDiagnostic {
    /// The uniform-ellipticity bracket 1/q <= rho + 1/rho <= q.
    pub fn bracket_holds(&self, q: f64) -> bool {
        1.0 / q <= self.q_min && self.q_min <= q
    }

    /// The gradient inequality
    /// u_x^2 + u_y^2 + v_x^2 + v_y^2 <= (1/q + q) * jacobian.
    pub fn gradient_inequality_holds(&self, q: f64) -> bool {
        self.grad_norm_sq <= (1.0 / q + q) * self.jacobian
    }
}

/// Check a shadow-side sample against the first-order system
/// u_x = rho v_y, u_y = -rho v_x, rho = |grad u|/|grad v|,
/// under which (u, v) is a quasi-conformal pair. Only meaningful where
/// the system is elliptic, so v >= 0 is out of region.
pub fn beltrami_check(g: &GradientSample, v: f64) -> Result<BeltramiDiagnostic> {
    if v >= 0.0 {
        return Err(Error::Domain(
            "Beltrami diagnostics apply to the elliptic (shadow) region only".into(),
        ));
    }
    let gu = g.grad_u_norm();
    let gv = g.grad_v_norm();
    if gv == 0.0 || gu == 0.0 {
        return Err(Error::DegenerateJacobian);
    }
    let rho = gu / gv;
    Ok(BeltramiDiagnostic {
        rho,
        residual_a: g.u_x - rho * g.v_y,
        residual_b: g.u_y + rho * g.v_x,
        q_min: rho + 1.0 / rho,
        jacobian: g.u_x * g.v_y - g.u_y * g.v_x,
        grad_norm_sq: gu * gu + gv * gv,
    })
}

/// Residual of the gradient-map relation that pins grad u to the rotated
/// grad v in the shadow:
///
/// ```text
/// grad u = ∓ (sqrt(1 - v |grad v|^2) / |grad v|) (-v_y, v_x),
/// ```
///
/// minimized over the sign choice. Zero exactly on the closed-form
/// solution; a strictly positive value is evidence a sample is not a
/// shadow eikonal pair. Same region preconditions as [`beltrami_check`];
/// the square root is safe there (v < 0 makes the radicand > 1).
pub fn backlund_residual(g: &GradientSample, v: f64) -> Result<f64> {
    if v >= 0.0 {
        return Err(Error::Domain(
            "gradient-map relation applies to the elliptic (shadow) region only".into(),
        ));
    }
    let gv = g.grad_v_norm();
    if gv == 0.0 {
        return Err(Error::DegenerateJacobian);
    }
    let scale = (1.0 - v * gv * gv).sqrt() / gv;
    let (tx, ty) = (-g.v_y * scale, g.v_x * scale);
    let plus = (g.u_x + tx).hypot(g.u_y + ty);
    let minus = (g.u_x - tx).hypot(g.u_y - ty);
    Ok(plus.min(minus))
}

/// The two residuals of the eikonal system itself:
/// (|grad u|^2 + v |grad v|^2 - n_local^2, grad u . grad v).
/// n_local is the index of the medium the sample lives in (n above the
/// interface, 1 below).
pub fn eikonal_residual(g: &GradientSample, v: f64, n_local: f64) -> (f64, f64) {
    let speed = g.u_x * g.u_x + g.u_y * g.u_y + v * (g.v_x * g.v_x + g.v_y * g.v_y)
        - n_local * n_local;
    let ortho = g.u_x * g.v_x + g.u_y * g.v_y;
    (speed, ortho)
}
