//! Maclaurin evaluation of Ai, Ai', Bi, Bi' in double-double arithmetic.
//!
//! Inside the series/asymptotic switch radius the partial sums suffer deep
//! cancellation: at |z| = 9 the largest term of the even basis series is
//! ~3e6 while Ai(9) ~ 2.5e-9, sixteen decimal digits of loss. Summing in
//! plain f64 would leave nothing. All four series are therefore accumulated
//! in ~32-digit double-double and rounded once at the end, which keeps the
//! final values at full f64 accuracy across the whole disc.
//!
//! The two entire basis solutions are
//!
//! ```text
//! f(z) = sum z^{3k} / prod_{j<k} (3j+2)(3j+3)      f(0) = 1, f'(0) = 0
//! g(z) = sum z^{3k+1} / prod_{j<k} (3j+3)(3j+4)    g(0) = 0, g'(0) = 1
//! ```
//!
//! and Ai = Ai(0) f + Ai'(0) g, Bi = sqrt(3) (Ai(0) f - Ai'(0) g), with the
//! derivative series obtained by differentiating termwise.

use crate::dd::{Dd, DdComplex};
use num_complex::Complex64;

/// Ai(0) = 3^{-2/3} / Gamma(2/3), to ~32 digits.
const AI0: Dd = Dd {
    hi: 0.3550280538878172,
    lo: 2.05233632436212e-17,
};
/// Ai'(0) = -3^{-1/3} / Gamma(1/3).
const AIP0: Dd = Dd {
    hi: -0.2588194037928068,
    lo: 2.522243111610832e-17,
};
const SQRT3: Dd = Dd {
    hi: 1.7320508075688772,
    lo: 1.0035084221806903e-16,
};

/// Hard cap on series length; at |z| = 9 the terms are far below the
/// double-double noise floor well before this.
const MAX_TERMS: usize = 64;

/// Termination threshold relative to the running partial sum. With ~32
/// digits carried, stopping at 1e-33 leaves the tail invisible even after
/// ~16 digits of cancellation.
const EPS_DD: f64 = 1e-33;

/// Sum `first + first*z3/d(0) + first*z3^2/(d(0)d(1)) + ...` where each
/// step multiplies by z^3 and divides by the exact integer `d(k)`.
fn sum_ratio_series(first: DdComplex, z3: DdComplex, d: impl Fn(usize) -> f64) -> DdComplex {
    let mut term = first;
    let mut sum = first;
    for k in 0..MAX_TERMS {
        term = term.mul(z3).div_f64(d(k));
        sum = sum.add(term);
        if term.mag_hi() <= EPS_DD * sum.mag_hi() {
            break;
        }
    }
    sum
}

fn basis(z: Complex64) -> (DdComplex, DdComplex) {
    let zd = DdComplex::from_c64(z);
    let z3 = zd.mul(zd).mul(zd);
    let f = sum_ratio_series(DdComplex::from_c64(Complex64::new(1.0, 0.0)), z3, |k| {
        ((3 * k + 2) * (3 * k + 3)) as f64
    });
    let g = sum_ratio_series(zd, z3, |k| ((3 * k + 3) * (3 * k + 4)) as f64);
    (f, g)
}

fn basis_prime(z: Complex64) -> (DdComplex, DdComplex) {
    let zd = DdComplex::from_c64(z);
    let z2 = zd.mul(zd);
    let z3 = z2.mul(zd);
    // f'(z) = z^2/2 + z^5/30 + z^8/1440 + ...
    let fp = sum_ratio_series(z2.div_f64(2.0), z3, |k| ((3 * k + 3) * (3 * k + 5)) as f64);
    // g'(z) = 1 + z^3/3 + z^6/72 + ...
    let gp = sum_ratio_series(DdComplex::from_c64(Complex64::new(1.0, 0.0)), z3, |k| {
        ((3 * k + 1) * (3 * k + 3)) as f64
    });
    (fp, gp)
}

pub(super) fn ai_series(z: Complex64) -> Complex64 {
    let (f, g) = basis(z);
    f.scale(AI0).add(g.scale(AIP0)).to_c64()
}

pub(super) fn ai_prime_series(z: Complex64) -> Complex64 {
    let (fp, gp) = basis_prime(z);
    fp.scale(AI0).add(gp.scale(AIP0)).to_c64()
}

pub(super) fn bi_series(x: f64) -> f64 {
    let (f, g) = basis(Complex64::new(x, 0.0));
    f.scale(AI0).add(g.scale(AIP0.neg())).scale(SQRT3).to_c64().re
}

pub(super) fn bi_prime_series(x: f64) -> f64 {
    let (fp, gp) = basis_prime(Complex64::new(x, 0.0));
    fp.scale(AI0).add(gp.scale(AIP0.neg())).scale(SQRT3).to_c64().re
}
