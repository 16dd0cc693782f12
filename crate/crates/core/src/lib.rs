//! Scalar-wave (TE) total internal reflection at a plane interface.
//!
//! The library covers the pieces needed to build and check the field on both
//! sides of the interface when a beam hits it beyond the critical angle:
//!
//! * [`eikonal`]: the mixed-type phase system for a linear wavefront, its
//!   closed-form solutions `u`, `v`, the hyperbolic/parabolic/elliptic
//!   classification, and pointwise residual diagnostics.
//! * [`transport`]: characteristic coordinates and the amplitude pair
//!   `(g0, h0)` carried along them, in both the illuminated and the shadow
//!   region, plus finite-difference residuals of the transport system.
//! * [`airy`]: an Airy-function engine (`ai_exact`) combining a compensated
//!   Maclaurin series with sector-switched exponential asymptotics, and the
//!   sector bookkeeping itself (`sector_of`, `ai_asymptotic`).
//! * [`borel`]: Borel-Laplace machinery for the late terms of those
//!   asymptotics: the kernel integrals `lambda_n`, their monodromy, Dingle's
//!   late-term approximant and the resummed tail.
//! * [`field`]: synthesis of the incident-plus-reflected field above the
//!   interface and the evanescent field below it, boundary matching reports,
//!   and Helmholtz-residual scaling checks.
//! * [`goos`]: the lateral displacement of the reflected beam (shift of the
//!   envelope relative to geometrical reflection) and the shifted field.
//! * [`verify`]: the acceptance checks wired together as a library, one
//!   report per criterion.
//!
//! Shared scalar types are re-exported at the root: [`MediumConfig`],
//! [`Complex64`], [`Error`], [`Result`].

pub mod airy;
pub mod borel;
pub mod eikonal;
pub mod field;
pub mod goos;
pub mod profile;
pub mod transport;
pub mod verify;

mod dd;
mod error;
mod medium;
mod quad;

pub use error::{Error, Result};
pub use medium::MediumConfig;
pub use num_complex::Complex64;
