use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// Variants are grouped by failure class: domain violations (an input is
/// outside the range a formula is defined on), representation problems
/// (Stokes rays, divergent truncations, branch points), singular
/// configurations of the medium (critical or grazing incidence), and
/// discretization problems (straddled interface, unresolved grid).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain: {0}")]
    Domain(String),

    /// |z| beyond the radius the evaluator certifies.
    #[error("|z| = {modulus:.6} exceeds the certified evaluation radius {max}")]
    EvaluationEnvelope { modulus: f64, max: f64 },

    /// z = 0 is a branch point of z^(3/2); directional quantities undefined.
    #[error("z = 0 is a branch point of the phase function")]
    BranchPoint,

    /// An asymptotic truncation stopped converging before the requested order.
    #[error("asymptotic terms stop decreasing at index {at} (requested {requested}) for |z| = {modulus:.4e}")]
    DivergentTruncation {
        requested: usize,
        at: usize,
        modulus: f64,
    },

    /// Phase sits on a Stokes ray where the sector representation changes.
    #[error("phase {ph_z:.12} lies on a Stokes ray; sector representation is discontinuous there")]
    StokesRay { ph_z: f64 },

    /// The Borel kernel's pole t = -z lies on the integration path.
    #[error("pole at t = -z sits on the integration path (z on the negative real axis)")]
    PoleOnPath,

    /// Phase argument outside the principal range a formula requires.
    #[error("phase {ph:.12} outside the open interval (-pi, pi)")]
    PhaseDomain { ph: f64 },

    /// Late-term index below the validity floor of the approximant.
    #[error("late-term index m = {m} is below the validity floor m >= {min}")]
    LateTermRange { m: usize, min: usize },

    /// Medium configuration rejected by an invariant.
    #[error("medium config: {0}")]
    Config(String),

    /// Shadow-side quantity requested below the critical angle.
    #[error("incidence below the critical angle: no evanescent region exists")]
    Subcritical,

    /// theta_i at the critical angle: shadow transport coefficients singular.
    #[error("critical incidence: shadow coefficients are singular at theta_crit")]
    CriticalIncidence,

    /// theta_i at grazing incidence: tangent-direction quantities overflow.
    #[error("grazing incidence: coefficients undefined as theta_i -> pi/2")]
    GrazingIncidence,

    /// Jacobian of the gradient sample vanished; classification undefined.
    #[error("jacobian J = 0: region classification undefined")]
    DegenerateJacobian,

    /// Real characteristics requested in the elliptic region.
    #[error("elliptic sample (v < 0): no real characteristic directions")]
    EllipticCharacteristics,

    /// A characteristic direction is vertical (dx/dy denominator vanished).
    #[error("characteristic through this sample is vertical (branch {branch})")]
    VerticalCharacteristic { branch: char },

    /// Complex profile argument left the declared analyticity strip.
    #[error("profile argument leaves the analyticity strip: |Im w| = {im:.4e} > {strip:.4e}")]
    StripViolation { im: f64, strip: f64 },

    /// A finite-difference stencil crossed the interface y = 0.
    #[error("stencil straddles the interface y = 0 (center y = {y:.4e}, half-width {h:.4e})")]
    RegionStraddle { y: f64, h: f64 },

    /// Grid too coarse for the wavelength being sampled.
    #[error("grid spacing {spacing:.4e} exceeds lambda/10 = {max:.4e}")]
    Resolution { spacing: f64, max: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
