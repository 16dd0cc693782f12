//! End-to-end acceptance checks: each criterion exercises a slice of the
//! crate against an independent reference and reports pass/fail with a
//! one-line diagnostic.
//!
//! The checks live in the library (rather than only in the test tree) so
//! the CLI can run the identical suite on an installed binary. Every
//! check is deterministic: fixed grids, fixed tolerances (overridable one
//! by one through [`Tolerances`]), and a fixed-seed generator where random
//! sampling is called for. Three of the criteria carry wall-clock
//! budgets; those are part of the pass/fail verdict, not advisory.

use std::fmt;
use std::time::{Duration, Instant};

use crate::airy::{
    self, ai_asymptotic, ai_asymptotic_unswitched, ai_exact, reference, AsymptoticOrder,
};
use crate::borel::{lambda_n, late_term, monodromy_jump, BorelKernel, LateTermModel};
use crate::eikonal::{self, classify, v_field, GradientSample, RegionType};
use crate::field::{
    boundary_match, fresnel_phase_oracle, helmholtz_scaling, illuminated_field,
    linear_fit, reflection_phase, shadow_field, unit_incidence, GridWindow, Synthesis,
};
use crate::goos;
use crate::profile::WavefrontProfile;
use crate::transport::{
    coefficients, illuminated_amplitudes, shadow_amplitudes, transport_residual,
};
use crate::{Complex64, Error, MediumConfig, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

/// How many acceptance criteria the suite carries.
pub const CRITERION_COUNT: usize = 14;

/// Short stable names, indexable by criterion number minus one. These are
/// the identifiers the CLI prints and the acceptance log greps for.
const NAMES: [&str; CRITERION_COUNT] = [
    "reflection-phase-oracle",
    "reflection-phase-endpoints",
    "airy-quadrature-oracle",
    "stokes-sector-switching",
    "borel-monodromy",
    "late-term-law",
    "eikonal-identities",
    "region-classification",
    "transport-residual-order",
    "evanescent-decay-rate",
    "helmholtz-residual-scaling",
    "boundary-matching",
    "lateral-shift",
    "grazing-degeneracy",
];

/// Wall-clock budgets; exceeding one fails the criterion.
fn runtime_limit(index: usize) -> Option<Duration> {
    match index {
        1 => Some(Duration::from_secs(1)),
        3 => Some(Duration::from_secs(30)),
        11 => Some(Duration::from_secs(120)),
        _ => None,
    }
}

/// Every numeric threshold the suite compares against, with the shipped
/// defaults. Each field can be overridden by name (the CLI's
/// `--tol NAME=VALUE`); names are the snake-case field names.
#[derive(Clone, Debug)]
pub struct Tolerances {
    /// Max |reflection_phase - fresnel oracle| in radians (criterion 1).
    pub delta_phase: f64,
    /// Max |delta(pi/2 - 1e-6) + pi| (criterion 2).
    pub endpoint_grazing: f64,
    /// Max relative error of ai_exact against the contour-quadrature
    /// reference (criterion 3).
    pub airy_oracle: f64,
    /// Max relative error of the switched order-6 asymptotics at |z| = 8
    /// (criterion 4).
    pub stokes_switched: f64,
    /// Relative error the unswitched continuation must exceed somewhere
    /// inside the switched sector (criterion 4).
    pub stokes_unswitched_floor: f64,
    /// Max relative error of the residue-corrected continuation
    /// (criterion 5).
    pub monodromy: f64,
    /// Max |late_term/true - 1| at m = 25 (criterion 6).
    pub late_term_ratio: f64,
    /// Max absolute residual of the two closed-form phase identities
    /// (criterion 7).
    pub eikonal_identity: f64,
    /// Half-width of the acceptance band around order 2 for the transport
    /// residual slope (criterion 9).
    pub transport_order_band: f64,
    /// Max relative error of the fitted evanescent decay rate against
    /// k kappa (criterion 10).
    pub evanescent_slope: f64,
    /// Half-width of the band around slope -1 for the Helmholtz residual
    /// ladder (criterion 11).
    pub helmholtz_slope_band: f64,
    /// Half-width of the band around slope +1 for the boundary-mismatch
    /// decay (criterion 12).
    pub boundary_slope_band: f64,
    /// Max relative disagreement between the closed-form phase derivative
    /// and the difference quotient (criterion 13).
    pub goos_derivative: f64,
    /// Max relative weight of any second travelling term at grazing
    /// incidence (criterion 14).
    pub grazing_weight: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            delta_phase: 1e-12,
            endpoint_grazing: 1e-3,
            airy_oracle: 1e-10,
            stokes_switched: 1e-6,
            stokes_unswitched_floor: 1e-2,
            monodromy: 1e-10,
            late_term_ratio: 0.05,
            eikonal_identity: 1e-12,
            transport_order_band: 0.2,
            evanescent_slope: 1e-10,
            helmholtz_slope_band: 0.1,
            boundary_slope_band: 0.2,
            goos_derivative: 1e-8,
            grazing_weight: 1e-6,
        }
    }
}

impl Tolerances {
    /// Override one threshold by field name. Unknown names and
    /// non-positive or non-finite values are refused.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Config(format!(
                "tolerance {name} must be finite and > 0, got {value}"
            )));
        }
        let slot = match name {
            "delta_phase" => &mut self.delta_phase,
            "endpoint_grazing" => &mut self.endpoint_grazing,
            "airy_oracle" => &mut self.airy_oracle,
            "stokes_switched" => &mut self.stokes_switched,
            "stokes_unswitched_floor" => &mut self.stokes_unswitched_floor,
            "monodromy" => &mut self.monodromy,
            "late_term_ratio" => &mut self.late_term_ratio,
            "eikonal_identity" => &mut self.eikonal_identity,
            "transport_order_band" => &mut self.transport_order_band,
            "evanescent_slope" => &mut self.evanescent_slope,
            "helmholtz_slope_band" => &mut self.helmholtz_slope_band,
            "boundary_slope_band" => &mut self.boundary_slope_band,
            "goos_derivative" => &mut self.goos_derivative,
            "grazing_weight" => &mut self.grazing_weight,
            other => {
                return Err(Error::Config(format!(
                    "unknown tolerance {other:?}; known names: delta_phase, \
                     endpoint_grazing, airy_oracle, stokes_switched, \
                     stokes_unswitched_floor, monodromy, late_term_ratio, \
                     eikonal_identity, transport_order_band, evanescent_slope, \
                     helmholtz_slope_band, boundary_slope_band, goos_derivative, \
                     grazing_weight"
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

/// Outcome of one criterion run.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    /// 1-based criterion number.
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    /// One line of measured numbers behind the verdict.
    pub detail: String,
    pub runtime: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {:<28} ({:>7.2?})  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.index,
            self.name,
            self.runtime,
            self.detail
        )
    }
}

/// Run one criterion (1-based). An index outside 1..=14 is a config
/// error; a computation error inside a check fails that criterion and is
/// quoted in its detail line rather than propagated.
pub fn run_criterion(index: usize, tol: &Tolerances) -> Result<CriterionReport> {
    if index == 0 || index > CRITERION_COUNT {
        return Err(Error::Config(format!(
            "criterion index must be in 1..={CRITERION_COUNT}, got {index}"
        )));
    }
    let start = Instant::now();
    let outcome = match index {
        1 => delta_phase_oracle(tol),
        2 => endpoint_values(tol),
        3 => airy_oracle(tol),
        4 => stokes_sectors(tol),
        5 => borel_monodromy(tol),
        6 => late_term_law(tol),
        7 => eikonal_identities(tol),
        8 => region_classification(tol),
        9 => transport_residual_order(tol),
        10 => evanescent_decay(tol),
        11 => helmholtz_residual_scaling(tol),
        12 => boundary_matching(tol),
        13 => lateral_shift(tol),
        14 => grazing_degeneracy(tol),
        _ => unreachable!(),
    };
    let runtime = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(pair) => pair,
        Err(e) => (false, format!("errored: {e}")),
    };
    if let Some(limit) = runtime_limit(index) {
        if runtime > limit {
            passed = false;
            detail = format!("{detail}; over the {limit:?} budget at {runtime:?}");
        } else {
            detail = format!("{detail}; within the {limit:?} budget");
        }
    }
    Ok(CriterionReport {
        index,
        name: NAMES[index - 1],
        passed,
        detail,
        runtime,
    })
}

/// Run the whole suite in order.
pub fn run_all(tol: &Tolerances) -> Vec<CriterionReport> {
    (1..=CRITERION_COUNT)
        .map(|i| run_criterion(i, tol).expect("index in range"))
        .collect()
}

// ---------------------------------------------------------------------
// fixed-seed sampling

/// splitmix64; fixed seed so every run sees the same "random" configs.
const SAMPLE_SEED: u64 = 0x5DEECE66D;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform draw in [0, 1).
fn unit(state: &mut u64) -> f64 {
    (splitmix64(state) >> 11) as f64 / (1u64 << 53) as f64
}

fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm()
}

fn workhorse() -> Result<MediumConfig> {
    MediumConfig::new(1.5, FRAC_PI_3, 100.0)
}

// ---------------------------------------------------------------------
// criterion bodies

/// 1: the reflection phase against the complex-division Fresnel argument,
/// 1000 angles per index.
fn delta_phase_oracle(tol: &Tolerances) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for &n in &[1.33f64, 1.5, 2.4] {
        let crit = (1.0 / n).asin();
        let (lo, hi) = (crit + 1e-6, FRAC_PI_2 - 1e-6);
        for j in 0..1000 {
            let theta = lo + (hi - lo) * j as f64 / 999.0;
            let cfg = MediumConfig::new(n, theta, 100.0)?;
            let delta = reflection_phase(&cfg)?.delta;
            let oracle = fresnel_phase_oracle(&cfg)?;
            worst = worst.max((delta - oracle).abs());
        }
    }
    Ok((
        worst <= tol.delta_phase,
        format!(
            "max |delta - fresnel arg| = {worst:.2e} rad over 3000 angles (tol {:.0e})",
            tol.delta_phase
        ),
    ))
}

/// 2: delta is exactly 0 at the critical angle and within
/// `endpoint_grazing` of -pi just short of grazing.
fn endpoint_values(tol: &Tolerances) -> Result<(bool, String)> {
    let mut zero_ok = true;
    let mut worst_graze = 0.0f64;
    for &n in &[1.33f64, 1.5, 2.4] {
        let critical = MediumConfig::new(n, (1.0 / n).asin(), 100.0)?;
        zero_ok &= reflection_phase(&critical)?.delta == 0.0;
        let grazing = MediumConfig::new(n, FRAC_PI_2 - 1e-6, 100.0)?;
        worst_graze = worst_graze.max((reflection_phase(&grazing)?.delta + PI).abs());
    }
    Ok((
        zero_ok && worst_graze <= tol.endpoint_grazing,
        format!(
            "delta(theta_crit) == 0 exactly: {zero_ok}; max |delta(pi/2 - 1e-6) + pi| = \
             {worst_graze:.2e} (tol {:.0e})",
            tol.endpoint_grazing
        ),
    ))
}

/// 3: the series/asymptotic evaluator against the contour-quadrature
/// reference on 200 log-spaced moduli x 8 phases.
fn airy_oracle(tol: &Tolerances) -> Result<(bool, String)> {
    let phases = [
        0.0,
        FRAC_PI_4,
        FRAC_PI_2,
        3.0 * FRAC_PI_4,
        11.0 * PI / 12.0,
        7.0 * PI / 6.0,
        3.0 * FRAC_PI_2,
        7.0 * PI / 4.0,
    ];
    let mut worst = 0.0f64;
    let mut worst_at = Complex64::new(0.0, 0.0);
    for i in 0..200 {
        let r = 0.1 * (25.0f64 / 0.1).powf(i as f64 / 199.0);
        for &ph in &phases {
            let z = Complex64::from_polar(r, ph);
            let err = rel(ai_exact(z)?, reference::ai(z));
            if err > worst {
                worst = err;
                worst_at = z;
            }
        }
    }
    Ok((
        worst <= tol.airy_oracle,
        format!(
            "max rel err {worst:.2e} at z = {worst_at:.4} over 1600 points (tol {:.0e})",
            tol.airy_oracle
        ),
    ))
}

/// 4: switched order-6 asymptotics track ai_exact in both sectors at
/// |z| = 8, while the unswitched continuation breaks down inside the
/// switched sector.
fn stokes_sectors(tol: &Tolerances) -> Result<(bool, String)> {
    let order = AsymptoticOrder::new(6)?;
    let boundary = 2.0 * PI / 3.0;
    let mut worst_principal = 0.0f64;
    let mut worst_switched = 0.0f64;
    for j in 0..60 {
        // odd multiples of 3 degrees: never a Stokes ray, never the cut
        let ph = (2 * j + 1) as f64 * PI / 60.0;
        let z = Complex64::from_polar(8.0, ph);
        let err = rel(ai_asymptotic(z, order)?, ai_exact(z)?);
        if z.arg().abs() > boundary {
            worst_switched = worst_switched.max(err);
        } else {
            worst_principal = worst_principal.max(err);
        }
    }
    let mut unswitched_best_failure = 0.0f64;
    for j in 0..30 {
        let ph = boundary + 0.05 + (PI - boundary - 0.051) * j as f64 / 29.0;
        for &signed in &[ph, -ph] {
            let z = Complex64::from_polar(8.0, signed);
            let err = rel(ai_asymptotic_unswitched(z, order)?, ai_exact(z)?);
            unswitched_best_failure = unswitched_best_failure.max(err);
        }
    }
    let pass = worst_principal <= tol.stokes_switched
        && worst_switched <= tol.stokes_switched
        && unswitched_best_failure >= tol.stokes_unswitched_floor;
    Ok((
        pass,
        format!(
            "switched rel err: principal {worst_principal:.2e}, switched sector \
             {worst_switched:.2e} (tol {:.0e}); unswitched peaks at \
             {unswitched_best_failure:.2e} (must exceed {:.0e})",
            tol.stokes_switched, tol.stokes_unswitched_floor
        ),
    ))
}

/// 5: the one-turn continuation of the n = 0 basis integral equals the
/// literal residue formula.
fn borel_monodromy(tol: &Tolerances) -> Result<(bool, String)> {
    let mut worst = 0.0f64;
    for &x in &[0.5f64, 1.0, 2.0, 4.0] {
        let z = Complex64::new(x, 0.0);
        let kernel = BorelKernel { n: 0, z };
        let base = lambda_n(&kernel)?;
        let continued = base + monodromy_jump(&kernel, 1);
        let literal = base - Complex64::new(0.0, 2.0 * PI) * z * z.exp();
        worst = worst.max((continued - literal).norm() / base.norm());
    }
    Ok((
        worst <= tol.monodromy,
        format!(
            "max |corrected - (base - 2 pi i z e^z)| / |base| = {worst:.2e} (tol {:.0e})",
            tol.monodromy
        ),
    ))
}

/// 6: the factorial late-term law tracks the true series terms at z = 3,
/// within 5% by m = 25 and sharpening monotonically through m = 40.
fn late_term_law(tol: &Tolerances) -> Result<(bool, String)> {
    let z = Complex64::new(3.0, 0.0);
    let zt = airy::zeta(z)?;
    let u = airy::u_coefficients(41);
    let model = LateTermModel::for_airy(z, 1)?;
    let mut ratios = Vec::new();
    for (m, &um) in u.iter().enumerate().skip(25) {
        let truth = Complex64::new(um, 0.0) * zt.powi(-(m as i32));
        let law = late_term(&model, m)?;
        ratios.push((law / truth - Complex64::new(1.0, 0.0)).norm());
    }
    let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    let pass = ratios[0] <= tol.late_term_ratio && decreasing;
    Ok((
        pass,
        format!(
            "|law/true - 1| = {:.3e} at m = 25 (tol {}), {:.3e} at m = 40, \
             monotone decreasing: {decreasing}",
            ratios[0],
            tol.late_term_ratio,
            ratios.last().unwrap()
        ),
    ))
}

/// 7: the closed-form phase gradients satisfy both quadratic identities
/// at every node of a 50 x 50 (theta, y) grid, on each side.
fn eikonal_identities(tol: &Tolerances) -> Result<(bool, String)> {
    let n = 1.5;
    let crit = (1.0f64 / n).asin();
    let (lo, hi) = (crit + 0.01, FRAC_PI_2 - 0.01);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let theta = lo + (hi - lo) * i as f64 / 49.0;
        let cfg = MediumConfig::new(n, theta, 100.0)?;
        for j in 0..50 {
            let y = 0.02 + 2.98 * j as f64 / 49.0;
            for &side in &[y, -y] {
                let g = GradientSample::closed_form(&cfg, 0.3, side)?;
                let v = v_field(&cfg, side)?;
                let n_local = if side > 0.0 { n } else { 1.0 };
                let (speed, ortho) = eikonal::eikonal_residual(&g, v, n_local);
                worst = worst.max(speed.abs()).max(ortho.abs());
            }
        }
    }
    Ok((
        worst <= tol.eikonal_identity,
        format!(
            "max |identity residual| = {worst:.2e} over 2500 nodes per side (tol {:.0e})",
            tol.eikonal_identity
        ),
    ))
}

/// 8: sign of v decides the character at 100 fixed-seed configurations;
/// exact, no tolerance.
fn region_classification(_tol: &Tolerances) -> Result<(bool, String)> {
    let mut state = SAMPLE_SEED;
    let mut failures = 0usize;
    for _ in 0..100 {
        let n = 1.05 + 1.45 * unit(&mut state);
        let crit = (1.0 / n).asin();
        let theta = crit + 0.01 + (FRAC_PI_2 - 0.02 - crit) * unit(&mut state);
        let k = 20.0 + 180.0 * unit(&mut state);
        let cfg = MediumConfig::new(n, theta, k)?;
        let y = 0.05 + 2.95 * unit(&mut state);

        let above = GradientSample::closed_form(&cfg, 0.0, y)?;
        if classify(v_field(&cfg, y)?, above.u_x * above.v_y)? != RegionType::Hyperbolic {
            failures += 1;
        }
        let below = GradientSample::closed_form(&cfg, 0.0, -y)?;
        if classify(v_field(&cfg, -y)?, below.u_x * below.v_y)? != RegionType::Elliptic {
            failures += 1;
        }
        // On the interface v = 0 and the v-gradient is unbounded; any
        // nonzero stand-in jacobian represents that limit.
        if classify(v_field(&cfg, 0.0)?, f64::INFINITY)? != RegionType::Parabolic {
            failures += 1;
        }
    }
    Ok((
        failures == 0,
        format!("{failures} misclassifications over 100 configs x 3 probes"),
    ))
}

/// 9: centered-difference residuals on the exact amplitude pairs shrink
/// at second order in the stencil step, both regions, both equations.
fn transport_residual_order(tol: &Tolerances) -> Result<(bool, String)> {
    let cfg = workhorse()?;
    let coef = coefficients(&cfg)?;
    let f1 = WavefrontProfile::gaussian(0.1, 1.0)?;
    let f2 = WavefrontProfile::gaussian(0.3, 1.4)?;
    let hs = [1e-2f64, 1e-3, 1e-4];
    let log_h: Vec<f64> = hs.iter().map(|h| h.ln()).collect();

    let mut slopes = Vec::new();
    for (region, point) in [
        (RegionType::Hyperbolic, (0.4, 1.1)),
        (RegionType::Elliptic, (0.1, -0.4)),
    ] {
        let mut res_a = Vec::new();
        let mut res_b = Vec::new();
        for &h in &hs {
            let (a, b) = match region {
                RegionType::Hyperbolic => transport_residual(
                    &coef,
                    region,
                    |x, y| illuminated_amplitudes(&coef, &f1, &f2, x, y),
                    point.0,
                    point.1,
                    h,
                )?,
                _ => transport_residual(
                    &coef,
                    region,
                    |x, y| shadow_amplitudes(&coef, &f1, &f2, x, y),
                    point.0,
                    point.1,
                    h,
                )?,
            };
            res_a.push(a.ln());
            res_b.push(b.ln());
        }
        slopes.push(linear_fit(&log_h, &res_a).0);
        slopes.push(linear_fit(&log_h, &res_b).0);
    }
    let pass = slopes
        .iter()
        .all(|s| (s - 2.0).abs() <= tol.transport_order_band);
    Ok((
        pass,
        format!(
            "fitted orders [{:.3}, {:.3}, {:.3}, {:.3}] (band 2.0 +/- {})",
            slopes[0], slopes[1], slopes[2], slopes[3], tol.transport_order_band
        ),
    ))
}

/// 10: for a unit profile the shadow field decays at exactly k kappa.
fn evanescent_decay(tol: &Tolerances) -> Result<(bool, String)> {
    let cfg = workhorse()?;
    let one = WavefrontProfile::constant(Complex64::new(1.0, 0.0));
    let psi0 = unit_incidence(&cfg);
    let expected = cfg.k() * cfg.kappa()?;
    let mut ys = Vec::new();
    let mut logs = Vec::new();
    for j in 0..30 {
        let y = -0.2 - 1.0 * j as f64 / 29.0;
        ys.push(y);
        logs.push(shadow_field(&cfg, &one, psi0, 0.37, y)?.norm().ln());
    }
    let (slope, _) = linear_fit(&ys, &logs);
    let err = (slope / expected - 1.0).abs();
    Ok((
        err <= tol.evanescent_slope,
        format!(
            "fitted decay rate {slope:.10} vs k kappa = {expected:.10}, rel err {err:.2e} \
             (tol {:.0e})",
            tol.evanescent_slope
        ),
    ))
}

/// 11: normalized Helmholtz residual of the uniform-Airy synthesis falls
/// like 1/k over the wavenumber ladder, lambda/20 sampling.
fn helmholtz_residual_scaling(tol: &Tolerances) -> Result<(bool, String)> {
    let cfg = workhorse()?;
    let f1 = WavefrontProfile::gaussian(1.4, 0.35)?;
    let window = GridWindow {
        x0: -0.25,
        x1: 0.25,
        y0: 0.6,
        y1: 1.1,
    };
    let ks = [50.0, 100.0, 200.0, 400.0, 800.0];
    let report = helmholtz_scaling(&cfg, &f1, &window, &ks, Synthesis::UniformAiry)?;
    let err = (report.slope + 1.0).abs();
    Ok((
        err <= tol.helmholtz_slope_band,
        format!(
            "fitted slope {:.3} over k = 50..800 (band -1 +/- {}); residuals {:.2e} -> {:.2e}",
            report.slope,
            tol.helmholtz_slope_band,
            report.residuals.first().unwrap(),
            report.residuals.last().unwrap()
        ),
    ))
}

/// 12: the one-sided value mismatch of the matched pair decays linearly
/// in the offset, uniformly over a 100-point boundary grid.
fn boundary_matching(tol: &Tolerances) -> Result<(bool, String)> {
    let cfg = workhorse()?;
    let f1 = WavefrontProfile::gaussian(0.0, 0.6)?;
    let psi0 = unit_incidence(&cfg);
    let xs: Vec<f64> = (0..100).map(|j| -1.2 + 2.4 * j as f64 / 99.0).collect();
    let lambda = cfg.wavelength();
    let eps_lambda = [1e-2f64, 1e-3, 1e-4];
    let mut log_eps = Vec::new();
    let mut log_mismatch = Vec::new();
    let mut mismatches = Vec::new();
    for &e in &eps_lambda {
        let m = boundary_match(&cfg, &f1, psi0, &xs, e * lambda)?;
        log_eps.push(e.ln());
        log_mismatch.push(m.value_mismatch.ln());
        mismatches.push(m.value_mismatch);
    }
    let (slope, _) = linear_fit(&log_eps, &log_mismatch);
    let pass = (slope - 1.0).abs() <= tol.boundary_slope_band;
    Ok((
        pass,
        format!(
            "max |psi_I(x, eps) - psi_S(x, -eps)|: {:.2e}, {:.2e}, {:.2e} at eps/lambda = \
             1e-2, 1e-3, 1e-4; decay slope {slope:.3} (band 1 +/- {})",
            mismatches[0], mismatches[1], mismatches[2], tol.boundary_slope_band
        ),
    ))
}

/// 13: lateral-shift package: closed-form derivative vs difference
/// quotient, the exact projection identity, the shift magnitude in
/// wavelengths, the near-critical envelope, and the measured displacement
/// of a Gaussian envelope.
fn lateral_shift(tol: &Tolerances) -> Result<(bool, String)> {
    let n = 1.5f64;
    let crit = (1.0 / n).asin();

    // (a) derivative against a five-point difference quotient, collars of
    // 1e-3 at both ends; (b) projection identity, bit for bit.
    let phase_at = |theta: f64| -> Result<f64> {
        Ok(reflection_phase(&MediumConfig::new(n, theta, 100.0)?)?.delta)
    };
    let h = 1e-5;
    let mut worst_fd = 0.0f64;
    let mut projection_exact = true;
    let (lo, hi) = (crit + 1e-3, FRAC_PI_2 - 1e-3);
    for j in 0..60 {
        let theta = lo + (hi - lo) * j as f64 / 59.0;
        let cfg = MediumConfig::new(n, theta, 100.0)?;
        let analytic = goos::delta_derivative(&cfg)?;
        let stencil = (phase_at(theta - 2.0 * h)? - 8.0 * phase_at(theta - h)?
            + 8.0 * phase_at(theta + h)?
            - phase_at(theta + 2.0 * h)?)
            / (12.0 * h);
        worst_fd = worst_fd.max((analytic / stencil - 1.0).abs());
        let sh = goos::shift(&cfg)?;
        projection_exact &= sh.displacement == sh.x_bar * cfg.cos_theta();
    }

    // (c) |D| is a fraction of a wavelength at the reference angle.
    let sh = goos::shift(&workhorse()?)?;
    let per_wavelength = sh.displacement.abs() / sh.wavelength;
    let magnitude_ok = per_wavelength > 0.1 && per_wavelength < 10.0;

    // (d) |D| sqrt(theta - theta_crit) bounded, and away from zero, over
    // the first 0.1 rad past critical.
    let mut envelope_ok = true;
    for j in 0..40 {
        let eps = 1e-8 * (0.1f64 / 1e-8).powf(j as f64 / 39.0);
        let cfg = MediumConfig::new(n, crit + eps, 100.0)?;
        let product = goos::shift(&cfg)?.displacement.abs() * eps.sqrt();
        envelope_ok &= product > 2e-3 && product < 5e-2;
    }

    // (e) the Gaussian envelope of the reflected term lands |X_bar|
    // forward, within one grid cell of the sampling.
    let cfg = workhorse()?;
    let f1 = WavefrontProfile::gaussian(0.0, 0.2)?;
    let psi0 = unit_incidence(&cfg);
    let pre = psi0 / cfg.k().sqrt();
    let (s, c) = (cfg.sin_theta(), cfg.cos_theta());
    let t = s / c;
    let kn = cfg.k() * cfg.n();
    let y = 0.4;
    let center = y * t;
    let dx = 0.01;
    let nx = 301usize;
    let envelope = |shifted: bool| -> Result<Vec<f64>> {
        (0..nx)
            .map(|j| {
                let x = center - 1.5 + dx * j as f64;
                let total = if shifted {
                    goos::shifted_field(&cfg, &f1, psi0, x, y)?
                } else {
                    illuminated_field(&cfg, &f1, psi0, x, y)?
                };
                let incident =
                    pre * f1.eval_real(x + y * t) * Complex64::cis(kn * (x * s - y * c));
                Ok((total - incident).norm())
            })
            .collect()
    };
    let moved = envelope(true)?;
    let reference = envelope(false)?;
    let mut best = (0i64, f64::NEG_INFINITY);
    for lag in -8i64..=8 {
        let mut corr = 0.0;
        for j in 0..nx as i64 {
            let i = j - lag;
            if i >= 0 && i < nx as i64 {
                corr += moved[j as usize] * reference[i as usize];
            }
        }
        if corr > best.1 {
            best = (lag, corr);
        }
    }
    let cell_err = (best.0 as f64 * dx - sh.x_bar.abs()).abs();
    let correlation_ok = best.0 > 0 && cell_err <= dx;

    let pass = worst_fd <= tol.goos_derivative
        && projection_exact
        && magnitude_ok
        && envelope_ok
        && correlation_ok;
    Ok((
        pass,
        format!(
            "derivative vs stencil rel {worst_fd:.2e} (tol {:.0e}); D = X cos exactly: \
             {projection_exact}; |D|/lambda = {per_wavelength:.3}; critical envelope \
             bounded: {envelope_ok}; correlation lag {} cells vs |X| = {:.4} ({:.4} cells)",
            tol.goos_derivative,
            best.0,
            sh.x_bar.abs(),
            sh.x_bar.abs() / dx
        ),
    ))
}

/// 14: a hair short of grazing, the field the module serves is one
/// travelling term; any second-term weight must sit at the floor.
fn grazing_degeneracy(tol: &Tolerances) -> Result<(bool, String)> {
    let cfg = MediumConfig::new(1.5, FRAC_PI_2 - 1e-9, 100.0)?;
    let f1 = WavefrontProfile::gaussian(0.0, 0.5)?;
    let psi0 = unit_incidence(&cfg);
    let pre = psi0 / cfg.k().sqrt();
    let kn = cfg.k() * cfg.n();
    let s = cfg.sin_theta();
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..20 {
        let x = -1.0 + 2.0 * i as f64 / 19.0;
        let lone = pre * Complex64::new(1.0, -1.0) * f1.eval_real(x) * Complex64::cis(kn * s * x);
        for j in 0..20 {
            let y = 0.05 + 0.95 * j as f64 / 19.0;
            let psi = illuminated_field(&cfg, &f1, psi0, x, y)?;
            worst = worst.max((psi - lone).norm());
            scale = scale.max(lone.norm());
        }
    }
    let weight = worst / scale;
    Ok((
        weight <= tol.grazing_weight,
        format!(
            "max |psi - single travelling term| / scale = {weight:.2e} at \
             theta = pi/2 - 1e-9 (tol {:.0e})",
            tol.grazing_weight
        ),
    ))
}
