//! Airy evaluation and the asymptotic sector bookkeeping built on it.
//!
//! Everything here works on the fixed phase branch ph z in [0, 2pi): the
//! fractional powers z^{3/2} and z^{-1/4} entering the exponent
//! zeta = (2/3) z^{3/2} and the approximants are taken on that branch, and
//! the discontinuous-looking coefficient tables below are exactly the
//! price of never leaving it. The half-line ph z = 0 is the branch seam;
//! z = 0 itself is the branch point and is refused by everything that
//! needs a phase.
//!
//! Two evaluation layers:
//!
//! * [`ai_exact`] / [`ai_prime_exact`] / [`bi_real`] / [`bi_prime_real`] —
//!   reference-quality values on |z| <= 30: double-double Maclaurin series
//!   up to |z| = 9 ([`SERIES_SWITCH_RADIUS`]), optimally-truncated
//!   exponential asymptotics beyond.
//!
//! * [`wkb_approximant`], [`corrective_series`], [`sector_of`],
//!   [`ai_asymptotic`] — the dissected asymptotics: the two exponential
//!   approximants, their divergent corrective factors at a caller-chosen
//!   truncation order, and the sector table saying which combination
//!   represents Ai at a given phase and which term dominates.

mod series;

pub mod reference;

use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Largest modulus evaluated by the Maclaurin series; beyond it the
/// asymptotic representation is already past machine accuracy (its
/// optimally-truncated error is ~e^{-4/3 |z|^{3/2}} ~ 2e-16 here).
pub const SERIES_SWITCH_RADIUS: f64 = 9.0;

/// Evaluation envelope for the `*_exact` entry points.
pub const MAX_MODULUS: f64 = 30.0;

/// Half-width of the exclusion collars around the discontinuity rays of
/// the asymptotic coefficient table (ph z = 2pi/3 and 4pi/3).
pub const RAY_TOL: f64 = 1e-12;

const INV_TWO_SQRT_PI: f64 = 0.28209479177387814; // 1/(2 sqrt(pi))

/// Which of the two exponential solutions e^{-zeta} (Minus, recessive on
/// the positive real axis) / e^{+zeta} (Plus) an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// -1.0 for `Minus`, +1.0 for `Plus`.
    pub fn signum(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }
}

/// Truncation order (number of terms kept) of a corrective series; at
/// least one term, the constant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymptoticOrder(usize);

impl AsymptoticOrder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain(
                "asymptotic truncation order must be at least 1".into(),
            ));
        }
        Ok(AsymptoticOrder(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Exponential standing of one term of a sector representation relative
/// to the complementary solution at the same point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Dominant,
    /// On a ray where both exponentials have unit modulus ratio
    /// (ph z = pi/3, pi, 5pi/3 within [`RAY_TOL`] of the phase of zeta).
    Comparable,
    Subdominant,
}

/// One term `coefficient * w_sign(z) * S_sign(z)` of a sector
/// representation.
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticTerm {
    pub solution: Sign,
    pub coefficient: Complex64,
    pub dominance: Dominance,
}

/// The combination of exponential solutions representing Ai at one phase,
/// on the [0, 2pi) branch.
///
/// Sector 1, ph z in [0, 2pi/3): the single recessive term
/// `1/(2 sqrt(pi)) * w_-`. Sector 2, (2pi/3, 4pi/3): that term plus the
/// switched-on `i/(2 sqrt(pi)) * w_+`. Sector 3, (4pi/3, 2pi): the single
/// term `i/(2 sqrt(pi)) * w_+` — on this branch the coefficient of w_-
/// has switched off again, and the surviving term is exactly the
/// principal-branch recessive representation of Ai approached from
/// negative phases (w_+ here *is* principal w_- there, picking up the
/// factor i from the branch mismatch of z^{-1/4}).
#[derive(Clone, Debug)]
pub struct SectorRepresentation {
    pub sector: u8,
    /// ph z on [0, 2pi).
    pub phase: f64,
    pub terms: Vec<AsymptoticTerm>,
}

/// ph z on [0, 2pi); the branch point z = 0 is refused.
fn phase(z: Complex64) -> Result<f64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::BranchPoint);
    }
    let t = z.arg();
    Ok(if t < 0.0 { t + 2.0 * PI } else { t })
}

/// zeta = (2/3) z^{3/2} on the [0, 2pi) branch.
pub(crate) fn zeta(z: Complex64) -> Result<Complex64> {
    let th = phase(z)?;
    Ok(Complex64::from_polar(
        (2.0 / 3.0) * z.norm().powf(1.5),
        1.5 * th,
    ))
}

/// z^p on the [0, 2pi) branch.
fn branch_pow(z: Complex64, p: f64) -> Result<Complex64> {
    let th = phase(z)?;
    Ok(Complex64::from_polar(z.norm().powf(p), p * th))
}

/// First `n` numerator coefficients u_k of the exponential corrective
/// series: u_0 = 1, u_{k+1} = u_k (6k+5)(6k+1) / (72(k+1)).
pub(crate) fn u_coefficients(n: usize) -> Vec<f64> {
    let mut u = Vec::with_capacity(n);
    let mut cur = 1.0;
    for k in 0..n {
        u.push(cur);
        let kf = k as f64;
        cur *= (6.0 * kf + 5.0) * (6.0 * kf + 1.0) / (72.0 * (kf + 1.0));
    }
    u
}

/// Derivative-series companions v_k = -u_k (6k+1)/(6k-1); v_0 = 1.
pub(crate) fn v_coefficients(n: usize) -> Vec<f64> {
    u_coefficients(n)
        .iter()
        .enumerate()
        .map(|(k, &u)| {
            let kf = k as f64;
            -u * (6.0 * kf + 1.0) / (6.0 * kf - 1.0)
        })
        .collect()
}

/// The bare exponential approximant w_∓(z) = z^{-1/4} e^{∓zeta} on the
/// [0, 2pi) branch.
pub fn wkb_approximant(z: Complex64, sign: Sign) -> Result<Complex64> {
    let zt = zeta(z)?;
    Ok(branch_pow(z, -0.25)? * (zt * sign.signum()).exp())
}

/// Truncated corrective factor S_∓(z) = sum_{k<n} (∓1)^k u_k zeta^{-k}.
///
/// The series is divergent; a truncation that reaches into the growing
/// tail (some kept term exceeding its predecessor in modulus) is refused
/// with [`Error::DivergentTruncation`] rather than silently summed.
pub fn corrective_series(z: Complex64, sign: Sign, order: AsymptoticOrder) -> Result<Complex64> {
    let zt = zeta(z)?;
    let n = order.get();
    let step = sign.signum() / zt;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev_mag = 1.0f64;
    for k in 1..n {
        let kf = (k - 1) as f64;
        term *= step * ((6.0 * kf + 5.0) * (6.0 * kf + 1.0) / (72.0 * (kf + 1.0)));
        let mag = term.norm();
        if mag > prev_mag {
            return Err(Error::DivergentTruncation {
                requested: n,
                at: k,
                modulus: mag,
            });
        }
        prev_mag = mag;
        sum += term;
    }
    Ok(sum)
}

fn dominance_of(sign: Sign, zt: Complex64) -> Dominance {
    // |e^{-zeta}| / |e^{+zeta}| = e^{-2 Re zeta}: the Minus solution wins
    // where Re zeta < 0.
    if zt.re.abs() <= RAY_TOL * zt.norm() {
        return Dominance::Comparable;
    }
    let minus_wins = zt.re < 0.0;
    match (sign, minus_wins) {
        (Sign::Minus, true) | (Sign::Plus, false) => Dominance::Dominant,
        _ => Dominance::Subdominant,
    }
}

/// The sector representation of Ai at the phase of `z`.
///
/// The rays ph z = 2pi/3 and 4pi/3, where the coefficient table is
/// discontinuous, are refused within [`RAY_TOL`]: on them the
/// representation is ambiguous by a term that is exactly at peak
/// subdominance, and callers probing the table deserve a loud answer
/// rather than an arbitrary side. ([`ai_exact`] is not so picky — at any
/// |z| it serves, the ambiguous term is below f64 resolution.)
pub fn sector_of(z: Complex64) -> Result<SectorRepresentation> {
    let th = phase(z)?;
    let zt = zeta(z)?;
    for ray in [2.0 * PI / 3.0, 4.0 * PI / 3.0] {
        if (th - ray).abs() < RAY_TOL {
            return Err(Error::StokesRay { ph_z: th });
        }
    }
    let c_minus = Complex64::new(INV_TWO_SQRT_PI, 0.0);
    let c_plus = Complex64::new(0.0, INV_TWO_SQRT_PI);
    let term = |sign, coefficient| AsymptoticTerm {
        solution: sign,
        coefficient,
        dominance: dominance_of(sign, zt),
    };
    let (sector, terms) = if th < 2.0 * PI / 3.0 {
        (1, vec![term(Sign::Minus, c_minus)])
    } else if th < 4.0 * PI / 3.0 {
        (2, vec![term(Sign::Minus, c_minus), term(Sign::Plus, c_plus)])
    } else {
        (3, vec![term(Sign::Plus, c_plus)])
    };
    Ok(SectorRepresentation {
        sector,
        phase: th,
        terms,
    })
}

/// Ai by its switched sector representation at truncation `order`:
/// the sum of `coefficient * w_sign(z) * S_sign(z)` over the sector's
/// terms. Propagates the Stokes-ray refusal of [`sector_of`] and the
/// divergent-truncation refusal of [`corrective_series`].
pub fn ai_asymptotic(z: Complex64, order: AsymptoticOrder) -> Result<Complex64> {
    let rep = sector_of(z)?;
    let mut total = Complex64::new(0.0, 0.0);
    for t in &rep.terms {
        total += t.coefficient * wkb_approximant(z, t.solution)? * corrective_series(z, t.solution, order)?;
    }
    Ok(total)
}

/// The sector-1 expression `1/(2 sqrt(pi)) w_-(z) S_-(z)` continued
/// verbatim to any phase on the [0, 2pi) branch. Correct only below
/// ph z = 2pi/3; past that ray it is missing the switched-on companion
/// term, and past 4pi/3 it is wrong by an exponentially large amount.
/// Kept public to let callers *demonstrate* that failure.
pub fn ai_asymptotic_unswitched(z: Complex64, order: AsymptoticOrder) -> Result<Complex64> {
    Ok(Complex64::new(INV_TWO_SQRT_PI, 0.0)
        * wkb_approximant(z, Sign::Minus)?
        * corrective_series(z, Sign::Minus, order)?)
}

/// Optimally truncated corrective factor: terms are added while they
/// shrink, stopping at the smallest or at machine precision. Returns the
/// sum; accuracy is ~e^{-2|zeta|} relative, far below f64 for |z| > 9.
fn corrective_optimal(zt: Complex64, sign: Sign, coeffs: &[f64]) -> Complex64 {
    let step = sign.signum() / zt;
    let mut pow = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut prev = f64::INFINITY;
    for (k, &c) in coeffs.iter().enumerate() {
        let term = pow * c;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        sum += term;
        if mag < 1e-18 {
            break;
        }
        prev = mag;
        let _ = k;
        pow *= step;
    }
    sum
}

/// Shared switched evaluation for Ai and Ai' in the asymptotic annulus.
/// `front(sign)` is the full prefactor of the corrective series for the
/// given solution, including the sector coefficient.
fn switched_sum(
    z: Complex64,
    coeffs: &[f64],
    front: impl Fn(Sign) -> Complex64,
) -> Result<Complex64> {
    let th = phase(z)?;
    let zt = zeta(z)?;
    // The coefficient table of sector_of, with closed collars: exactly on
    // a switching ray the nascent/expiring term is at peak subdominance
    // (relative size e^{-2|zeta|} <= 2e-16 for |z| >= 9), so including it
    // with the sector-2 table is correct to machine precision.
    let signs: &[Sign] = if th < 2.0 * PI / 3.0 - RAY_TOL {
        &[Sign::Minus]
    } else if th <= 4.0 * PI / 3.0 + RAY_TOL {
        &[Sign::Minus, Sign::Plus]
    } else {
        &[Sign::Plus]
    };
    let mut total = Complex64::new(0.0, 0.0);
    for &s in signs {
        total += front(s) * (zt * s.signum()).exp() * corrective_optimal(zt, s, coeffs);
    }
    Ok(total)
}

fn ai_envelope(z: Complex64) -> Result<()> {
    if z.norm() > MAX_MODULUS {
        return Err(Error::EvaluationEnvelope {
            modulus: z.norm(),
            max: MAX_MODULUS,
        });
    }
    Ok(())
}

/// Ai(z) at reference quality on |z| <= 30 (relative accuracy ~1e-13 or
/// better away from zeros). Series inside |z| = 9, switched optimally
/// truncated asymptotics outside.
pub fn ai_exact(z: Complex64) -> Result<Complex64> {
    ai_envelope(z)?;
    if z.norm() <= SERIES_SWITCH_RADIUS {
        return Ok(series::ai_series(z));
    }
    let u = u_coefficients(40);
    let quarter_inv = branch_pow(z, -0.25)?;
    switched_sum(z, &u, |s| {
        let c = match s {
            Sign::Minus => Complex64::new(INV_TWO_SQRT_PI, 0.0),
            Sign::Plus => Complex64::new(0.0, INV_TWO_SQRT_PI),
        };
        c * quarter_inv
    })
}

/// Ai'(z) under the same contract as [`ai_exact`]. The asymptotic
/// approximants for the derivative are ∓ z^{+1/4} e^{∓zeta} V_∓ with the
/// companion coefficients v_k; the sector coefficients are those of Ai.
pub fn ai_prime_exact(z: Complex64) -> Result<Complex64> {
    ai_envelope(z)?;
    if z.norm() <= SERIES_SWITCH_RADIUS {
        return Ok(series::ai_prime_series(z));
    }
    let v = v_coefficients(40);
    let quarter = branch_pow(z, 0.25)?;
    switched_sum(z, &v, |s| {
        let c = match s {
            Sign::Minus => Complex64::new(-INV_TWO_SQRT_PI, 0.0),
            Sign::Plus => Complex64::new(0.0, INV_TWO_SQRT_PI),
        };
        c * quarter
    })
}

/// Bi(x) for real x, |x| <= 30. Series inside the switch radius; outside,
/// the exact rotation identity Bi(x) = 2 Re[e^{i pi/6} Ai(x e^{2 pi i/3})]
/// reuses the complex Ai evaluator (the rotated point lands at phase
/// 2pi/3 or 5pi/3 where that evaluator's hard cases are its easy ones:
/// the dominant part of the rotated Ai *is* Bi).
pub fn bi_real(x: f64) -> Result<f64> {
    ai_envelope(Complex64::new(x, 0.0))?;
    if x.abs() <= SERIES_SWITCH_RADIUS {
        return Ok(series::bi_series(x));
    }
    let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let a = ai_exact(w * x)?;
    Ok(2.0 * (Complex64::from_polar(1.0, PI / 6.0) * a).re)
}

/// Bi'(x) for real x, |x| <= 30; companion of [`bi_real`] via
/// Bi'(x) = 2 Re[e^{5 i pi/6} Ai'(x e^{2 pi i/3})].
pub fn bi_prime_real(x: f64) -> Result<f64> {
    ai_envelope(Complex64::new(x, 0.0))?;
    if x.abs() <= SERIES_SWITCH_RADIUS {
        return Ok(series::bi_prime_series(x));
    }
    let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let ap = ai_prime_exact(w * x)?;
    Ok(2.0 * (Complex64::from_polar(1.0, 5.0 * PI / 6.0) * ap).re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(got: Complex64, want: Complex64) -> f64 {
        (got - want).norm() / want.norm()
    }

    #[test]
    fn exact_matches_frozen_values_in_the_asymptotic_annulus() {
        // (z, Ai(z), Ai'(z)) from 50-digit arithmetic.
        let cases = [
            (c(12.0, 0.0), c(1.3931846888753607e-13, 0.0), c(-4.854736554985309e-13, 0.0)),
            (c(25.0, 0.0), c(8.116026824691387e-38, 0.0), c(-4.066089337243281e-37, 0.0)),
            (c(-25.0, 0.0), c(0.16352657883042948, 0.0), c(0.9623788513876974, 0.0)),
            (c(9.5, 0.0), c(5.330263704617492e-10, 0.0), c(-1.6566394593740667e-9, 0.0)),
            (
                c(0.0, 25.0),
                c(-4.585050249001211e24, -1.7920504625684325e24),
                c(9.892894185708116e24, 2.250050766367497e25),
            ),
            (
                c(-24.148145657226706, 6.470476127563019),
                c(5750979199109.475, 6830842800860.611),
                c(30147071319470.074, -32886073185394.848),
            ),
            (
                c(0.0, -12.0),
                c(20659441.47950501, 44627666.75747433),
                c(-158985314.736904, -59155301.22464071),
            ),
            (
                c(8.48528137423857, -8.48528137423857),
                c(2.954141604026407e-6, 2.3147019396885e-6),
                c(-1.2533376463180321e-5, -3.5688467266252373e-6),
            ),
            (
                c(9.310632489491795, 1.8873586425530815),
                c(1.1392257263558188e-9, 5.721729153597622e-10),
                c(-3.349415991765298e-9, -2.1141081595129593e-9),
            ),
            (
                c(-6.928203230275509, -4.0),
                c(-6023.066053604942, 3980.4330807880333),
                c(-6572.655048173736, -19165.62425651142),
            ),
        ];
        for (z, a, ap) in cases {
            let got = ai_exact(z).unwrap();
            let gotp = ai_prime_exact(z).unwrap();
            assert!(rel(got, a) < 5e-14, "Ai({z}) rel {:.2e}", rel(got, a));
            assert!(rel(gotp, ap) < 5e-14, "Ai'({z}) rel {:.2e}", rel(gotp, ap));
        }
    }

    #[test]
    fn exact_agrees_with_contour_reference_on_a_sweep() {
        // Sweep moduli and phases across both evaluation regimes and all
        // three sectors, avoiding only the contour reference's own
        // limitation near z = 0.
        let moduli = [0.3, 1.7, 5.0, 8.9, 9.1, 13.0, 21.0];
        let phases = [
            0.0,
            0.40,
            PI / 3.0,
            1.9,
            2.0 * PI / 3.0 + 1e-7,
            2.8,
            PI,
            3.9,
            4.0 * PI / 3.0 - 1e-7,
            4.8,
            5.0 * PI / 3.0,
            5.9,
        ];
        for &r in &moduli {
            for &th in &phases {
                let z = Complex64::from_polar(r, th);
                let got = ai_exact(z).unwrap();
                let want = reference::ai(z);
                assert!(
                    rel(got, want) < 5e-12,
                    "Ai mismatch at r={r} th={th}: rel {:.2e}",
                    rel(got, want)
                );
                let gotp = ai_prime_exact(z).unwrap();
                let wantp = reference::ai_prime(z);
                assert!(
                    rel(gotp, wantp) < 5e-12,
                    "Ai' mismatch at r={r} th={th}: rel {:.2e}",
                    rel(gotp, wantp)
                );
            }
        }
    }

    #[test]
    fn seam_continuity_across_phase_zero() {
        // The [0, 2pi) branch has its seam on the positive real axis;
        // values must still be continuous there (sector 3 evaluated just
        // below the seam vs sector 1 just above). The straddle must be
        // tight: the genuine change of Ai between the two probe points is
        // ~|Ai'/Ai| * |dz| = sqrt(14) * 28 eps_theta.
        let above = ai_exact(Complex64::from_polar(14.0, 1e-12)).unwrap();
        let below = ai_exact(Complex64::from_polar(14.0, 2.0 * PI - 1e-12)).unwrap();
        assert!(rel(above, below) < 1e-9, "rel {:.2e}", rel(above, below));
    }

    #[test]
    fn wronskian_across_both_regimes() {
        for &x in &[1.0, 5.0, 9.3, 12.0, 20.0, -12.0] {
            let z = c(x, 0.0);
            let w = ai_exact(z).unwrap().re * bi_prime_real(x).unwrap()
                - ai_prime_exact(z).unwrap().re * bi_real(x).unwrap();
            assert!(
                (w - 1.0 / PI).abs() < 1e-13,
                "W(Ai, Bi)({x}) = {w}, off by {:.2e}",
                (w - 1.0 / PI).abs()
            );
        }
    }

    #[test]
    fn envelope_is_enforced() {
        match ai_exact(c(31.0, 0.0)) {
            Err(Error::EvaluationEnvelope { modulus, max }) => {
                assert_eq!(modulus, 31.0);
                assert_eq!(max, MAX_MODULUS);
            }
            other => panic!("expected envelope refusal, got {other:?}"),
        }
        assert!(bi_real(-30.5).is_err());
    }

    #[test]
    fn wkb_approximants_and_branch() {
        // On the positive axis w_- decays, w_+ grows, both real.
        let z = c(4.0, 0.0);
        let wm = wkb_approximant(z, Sign::Minus).unwrap();
        let wp = wkb_approximant(z, Sign::Plus).unwrap();
        let zeta = 2.0f64 / 3.0 * 8.0;
        assert!((wm.re - (4.0f64).powf(-0.25) * (-zeta).exp()).abs() < 1e-15);
        assert!((wm.im).abs() < 1e-18 && (wp.im).abs() < 1e-18);
        assert!((wm.re * wp.re - 1.0 / 2.0).abs() < 1e-13); // product = |z|^{-1/2}
        assert!(matches!(
            wkb_approximant(c(0.0, 0.0), Sign::Minus),
            Err(Error::BranchPoint)
        ));
        // Branch check below the seam: ph z = 2pi - 1e-3, z^{-1/4} phase
        // must be -(2pi - 1e-3)/4, not +1e-3/4.
        let th = 2.0 * PI - 1e-3;
        let z = Complex64::from_polar(16.0, th);
        let w = wkb_approximant(z, Sign::Plus).unwrap();
        let zeta = Complex64::from_polar(2.0 / 3.0 * 64.0, 1.5 * th);
        let expect = Complex64::from_polar(16.0f64.powf(-0.25), -0.25 * th) * zeta.exp();
        assert!(rel(w, expect) < 1e-14);
    }

    #[test]
    fn corrective_series_truncation_contract() {
        // |zeta| = 2/3 * 8 at z = 4: terms shrink for a while, then turn;
        // a deep truncation must be refused with the turning index.
        let z = c(4.0, 0.0);
        let err = corrective_series(z, Sign::Minus, AsymptoticOrder::new(30).unwrap());
        match err {
            Err(Error::DivergentTruncation { requested, at, .. }) => {
                assert_eq!(requested, 30);
                assert!((5..=15).contains(&at), "turning index {at}");
            }
            other => panic!("expected divergence refusal, got {other:?}"),
        }
        // A shallow truncation of the same series is fine and close to 1.
        let s = corrective_series(z, Sign::Minus, AsymptoticOrder::new(4).unwrap()).unwrap();
        assert!((s - Complex64::new(1.0, 0.0)).norm() < 0.05);
        assert!(AsymptoticOrder::new(0).is_err());
    }

    #[test]
    fn sector_table_and_dominance() {
        let r = 12.0;
        let s1 = sector_of(Complex64::from_polar(r, 0.3)).unwrap();
        assert_eq!(s1.sector, 1);
        assert_eq!(s1.terms.len(), 1);
        assert_eq!(s1.terms[0].solution, Sign::Minus);
        assert_eq!(s1.terms[0].dominance, Dominance::Subdominant);
        assert!((s1.terms[0].coefficient.re - INV_TWO_SQRT_PI).abs() < 1e-16);

        // Past the comparability ray pi/3 the recessive term dominates.
        let s1b = sector_of(Complex64::from_polar(r, 1.5)).unwrap();
        assert_eq!(s1b.sector, 1);
        assert_eq!(s1b.terms[0].dominance, Dominance::Dominant);
        let comp = sector_of(Complex64::from_polar(r, PI / 3.0)).unwrap();
        assert_eq!(comp.terms[0].dominance, Dominance::Comparable);

        let s2 = sector_of(Complex64::from_polar(r, 2.5)).unwrap();
        assert_eq!(s2.sector, 2);
        assert_eq!(s2.terms.len(), 2);
        assert_eq!(s2.terms[0].solution, Sign::Minus);
        assert_eq!(s2.terms[0].dominance, Dominance::Dominant);
        assert_eq!(s2.terms[1].solution, Sign::Plus);
        assert_eq!(s2.terms[1].dominance, Dominance::Subdominant);
        assert!((s2.terms[1].coefficient.im - INV_TWO_SQRT_PI).abs() < 1e-16);
        let s2b = sector_of(Complex64::from_polar(r, PI)).unwrap();
        assert_eq!(s2b.terms[0].dominance, Dominance::Comparable);
        let s2c = sector_of(Complex64::from_polar(r, 4.0)).unwrap();
        assert_eq!(s2c.terms[0].dominance, Dominance::Subdominant);
        assert_eq!(s2c.terms[1].dominance, Dominance::Dominant);

        let s3 = sector_of(Complex64::from_polar(r, 4.5)).unwrap();
        assert_eq!(s3.sector, 3);
        assert_eq!(s3.terms.len(), 1);
        assert_eq!(s3.terms[0].solution, Sign::Plus);
        assert_eq!(s3.terms[0].dominance, Dominance::Dominant);
        let s3b = sector_of(Complex64::from_polar(r, 5.0 * PI / 3.0)).unwrap();
        assert_eq!(s3b.terms[0].dominance, Dominance::Comparable);
        let s3c = sector_of(Complex64::from_polar(r, 5.8)).unwrap();
        assert_eq!(s3c.terms[0].dominance, Dominance::Subdominant);
    }

    #[test]
    fn switching_rays_are_refused_by_the_table() {
        for ray in [2.0 * PI / 3.0, 4.0 * PI / 3.0] {
            match sector_of(Complex64::from_polar(10.0, ray)) {
                Err(Error::StokesRay { ph_z }) => assert!((ph_z - ray).abs() < 1e-9),
                other => panic!("expected ray refusal, got {other:?}"),
            }
        }
        // Just outside the collar it answers.
        assert!(sector_of(Complex64::from_polar(10.0, 2.0 * PI / 3.0 + 1e-9)).is_ok());
    }

    #[test]
    fn switched_asymptotics_track_the_exact_values() {
        let order = AsymptoticOrder::new(12).unwrap();
        for &(r, th) in &[
            (12.0, 0.2),
            (12.0, 1.8),
            (12.0, 2.5),
            (12.0, PI),
            (12.0, 4.0),
            (12.0, 4.6),
            (12.0, 5.5),
        ] {
            let z = Complex64::from_polar(r, th);
            let a = ai_asymptotic(z, order).unwrap();
            let e = ai_exact(z).unwrap();
            assert!(rel(a, e) < 1e-11, "r={r} th={th} rel {:.2e}", rel(a, e));
        }
    }

    #[test]
    fn unswitched_continuation_fails_past_the_first_switching_ray() {
        // Inside sector 1 the unswitched form is the true representation...
        let order = AsymptoticOrder::new(10).unwrap();
        let z1 = Complex64::from_polar(12.0, 0.5);
        assert!(rel(
            ai_asymptotic_unswitched(z1, order).unwrap(),
            ai_exact(z1).unwrap()
        ) < 1e-11);
        // ...but carried into sector 3 it misrepresents Ai by an
        // exponentially large factor.
        let z3 = Complex64::from_polar(12.0, 5.8);
        let naive = ai_asymptotic_unswitched(z3, order).unwrap();
        let truth = ai_exact(z3).unwrap();
        assert!(naive.norm() > 1e10 * truth.norm());
    }
}
