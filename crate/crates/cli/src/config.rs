//! Flag parsing, the JSON config file, and the merge of the two into one
//! resolved, hashable run description.
//!
//! Precedence is: built-in default < config file < explicit flag. The
//! resolved struct is serialized once to canonical JSON and FNV-1a-hashed;
//! that hash goes into every output header so a plot can be traced back to
//! the exact run that made it. The output *path* is deliberately not part
//! of the hash — where a file lands does not change what is in it.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use tir_core::{Error, MediumConfig};
use tir_core::profile::WavefrontProfile;
use tir_core::Complex64;

/// Everything that can go wrong, bucketed by exit code: 2 config,
/// 3 domain (refusals from the computation modules), 4 tolerance (the
/// verify suite ran and found failures), 5 io.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Domain(String),
    Tolerance(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Tolerance(_) => 4,
            Failure::Io(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "config: {m}"),
            Failure::Domain(m) => write!(f, "domain: {m}"),
            Failure::Tolerance(m) => write!(f, "tolerance: {m}"),
            Failure::Io(m) => write!(f, "io: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) => Failure::Config(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// psi on an (x, y) grid straddling the interface
    FieldMap,
    /// ai_exact vs the switched asymptotics around the full circle, |z| = 8
    AirySectors,
    /// switched vs unswitched asymptotics across the upper sector
    StokesDemo,
    /// reflection phase, its derivative, and the lateral shift over theta_i
    GoosScan,
    /// hyperbolic/elliptic/parabolic character over (theta_i, y)
    ClassifyMap,
    /// the full acceptance suite, pass/fail JSON
    Verify,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::FieldMap => "field-map",
            Scenario::AirySectors => "airy-sectors",
            Scenario::StokesDemo => "stokes-demo",
            Scenario::GoosScan => "goos-scan",
            Scenario::ClassifyMap => "classify-map",
            Scenario::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Units {
    /// Lengths in free-space wavelengths (grid, profile parameters,
    /// exported shifts are all multiples of lambda = 2 pi / k).
    Lambda,
    /// Lengths as raw coordinates with k read literally.
    Raw,
}

/// `x0:x1:nx,y0:y1:ny`, in the active length units.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    pub x0: f64,
    pub x1: f64,
    pub nx: usize,
    pub y0: f64,
    pub y1: f64,
    pub ny: usize,
}

impl GridSpec {
    fn parse(text: &str) -> Result<Self, Failure> {
        let bad = || {
            Failure::Config(format!(
                "grid must be x0:x1:nx,y0:y1:ny, got {text:?}"
            ))
        };
        let (xpart, ypart) = text.split_once(',').ok_or_else(bad)?;
        let axis = |part: &str| -> Result<(f64, f64, usize), Failure> {
            let mut it = part.split(':');
            let lo = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let hi = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let count = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            Ok((lo, hi, count))
        };
        let (x0, x1, nx) = axis(xpart)?;
        let (y0, y1, ny) = axis(ypart)?;
        let spec = GridSpec { x0, x1, nx, y0, y1, ny };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), Failure> {
        for (lo, hi, count, tag) in [
            (self.x0, self.x1, self.nx, "x"),
            (self.y0, self.y1, self.ny, "y"),
        ] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Failure::Config(format!(
                    "{tag} axis needs finite lo < hi, got [{lo}, {hi}]"
                )));
            }
            if count < 2 {
                return Err(Failure::Config(format!(
                    "{tag} axis needs at least 2 samples, got {count}"
                )));
            }
        }
        Ok(())
    }
}

/// Parsed `--profile` value; parameters are lengths in the active units.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub kind: String,
    pub params: Vec<f64>,
}

impl ProfileSpec {
    fn parse(text: &str) -> Result<Self, Failure> {
        let (kind, args) = match text.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (text, None),
        };
        let params: Vec<f64> = match args {
            None => Vec::new(),
            Some(a) => a
                .split(',')
                .map(|s| {
                    s.parse().map_err(|_| {
                        Failure::Config(format!("bad profile parameter {s:?} in {text:?}"))
                    })
                })
                .collect::<Result<_, _>>()?,
        };
        let spec = ProfileSpec {
            kind: kind.to_string(),
            params,
        };
        // Early shape check; the numeric validation happens in build().
        match (spec.kind.as_str(), spec.params.len()) {
            ("const", 0) | ("gaussian", 2) | ("raised-cosine", 2) => Ok(spec),
            _ => Err(Failure::Config(format!(
                "profile must be const, gaussian:center,width or \
                 raised-cosine:center,half_width, got {text:?}"
            ))),
        }
    }

    /// Instantiate, scaling the length parameters by `length_unit`
    /// (lambda in wavelength units, 1 in raw units).
    pub fn build(&self, length_unit: f64) -> Result<WavefrontProfile, Failure> {
        Ok(match self.kind.as_str() {
            "const" => WavefrontProfile::constant(Complex64::new(1.0, 0.0)),
            "gaussian" => WavefrontProfile::gaussian(
                self.params[0] * length_unit,
                self.params[1] * length_unit,
            )?,
            _ => WavefrontProfile::raised_cosine(
                self.params[0] * length_unit,
                self.params[1] * length_unit,
            )?,
        })
    }

    pub fn describe(&self) -> String {
        if self.params.is_empty() {
            self.kind.clone()
        } else {
            let args: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            format!("{}:{}", self.kind, args.join(","))
        }
    }
}

/// Export plot-ready data for a totally reflected scalar beam: wavefield
/// maps, Airy-sector comparisons, lateral-shift scans, and the acceptance
/// suite itself.
#[derive(Parser, Debug)]
#[command(name = "tir", version, max_term_width = 80)]
pub struct Cli {
    /// JSON file carrying the same keys as the flags; explicit flags win
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[arg(long, value_enum)]
    pub scenario: Option<Scenario>,

    /// Refractive index of the upper (denser) medium
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<f64>,

    /// Angle of incidence, radians
    #[arg(long, conflicts_with = "theta_i_deg", allow_negative_numbers = true)]
    pub theta_i: Option<f64>,

    /// Angle of incidence, degrees
    #[arg(long, allow_negative_numbers = true)]
    pub theta_i_deg: Option<f64>,

    /// Free-space wavenumber
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<f64>,

    /// Sample rectangle, x0:x1:nx,y0:y1:ny, in the active length units.
    /// classify-map reads the x range as the incidence-angle range in
    /// radians instead.
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub grid: Option<String>,

    /// const | gaussian:center,width | raised-cosine:center,half_width
    /// (lengths in the active units)
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub profile: Option<String>,

    /// Output path; stdout when absent
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// csv for the data scenarios (their default); verify is always json
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// lambda (default): lengths in free-space wavelengths; raw: literal
    #[arg(long, value_enum)]
    pub units: Option<Units>,

    /// Override one acceptance threshold, NAME=VALUE; repeatable
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,

    /// field-map: also report the worst normalized Helmholtz residual per
    /// region (needs grid spacing <= lambda/10)
    #[arg(long)]
    pub check_helmholtz: bool,
}

/// The config file mirror of the flags. Unknown keys are refused so a
/// typo cannot silently fall back to a default.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub scenario: Option<Scenario>,
    pub n: Option<f64>,
    pub theta_i: Option<f64>,
    pub theta_i_deg: Option<f64>,
    pub k: Option<f64>,
    pub grid: Option<String>,
    pub profile: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub units: Option<Units>,
    pub tol: Option<BTreeMap<String, f64>>,
    pub check_helmholtz: Option<bool>,
}

/// One fully-merged run description. Serialized (canonically — struct
/// field order, sorted tolerance map) to feed the config hash.
#[derive(Debug, Serialize)]
pub struct Resolved {
    pub scenario: Scenario,
    pub n: f64,
    pub theta_i: f64,
    pub k: f64,
    pub grid: GridSpec,
    pub profile: ProfileSpec,
    pub format: Format,
    pub units: Units,
    pub tol: BTreeMap<String, f64>,
    pub check_helmholtz: bool,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Resolved {
    /// The medium every scenario computes in.
    pub fn medium(&self) -> Result<MediumConfig, Failure> {
        Ok(MediumConfig::new(self.n, self.theta_i, self.k)?)
    }

    /// Multiplier taking user-facing lengths to raw coordinates.
    pub fn length_unit(&self) -> f64 {
        match self.units {
            Units::Lambda => 2.0 * std::f64::consts::PI / self.k,
            Units::Raw => 1.0,
        }
    }

    /// One deterministic summary line for output headers.
    pub fn summary(&self) -> String {
        format!(
            "scenario={} n={} theta_i={} k={} profile={} units={}",
            self.scenario.name(),
            self.n,
            self.theta_i,
            self.k,
            self.profile.describe(),
            match self.units {
                Units::Lambda => "lambda",
                Units::Raw => "raw",
            }
        )
    }
}

pub fn resolve(cli: Cli) -> Result<Resolved, Failure> {
    let file: FileConfig = match &cli.config {
        None => FileConfig::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("reading {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Config(format!("parsing {}: {e}", path.display())))?
        }
    };

    let scenario = cli.scenario.or(file.scenario).ok_or_else(|| {
        Failure::Config("no scenario given (flag --scenario or config file key)".into())
    })?;

    // Angle: an explicit flag (either spelling) beats the file entirely;
    // inside one layer the two spellings are mutually exclusive.
    let theta_i = if cli.theta_i.is_some() || cli.theta_i_deg.is_some() {
        resolve_angle(cli.theta_i, cli.theta_i_deg)?
    } else if file.theta_i.is_some() || file.theta_i_deg.is_some() {
        resolve_angle(file.theta_i, file.theta_i_deg)?
    } else {
        std::f64::consts::FRAC_PI_3
    };

    let mut tol = file.tol.unwrap_or_default();
    for entry in &cli.tol {
        let (name, value) = entry.split_once('=').ok_or_else(|| {
            Failure::Config(format!("--tol wants NAME=VALUE, got {entry:?}"))
        })?;
        let value: f64 = value.parse().map_err(|_| {
            Failure::Config(format!("--tol {name}: bad value {value:?}"))
        })?;
        tol.insert(name.to_string(), value);
    }

    let n = cli.n.or(file.n).unwrap_or(1.5);
    if !(n.is_finite() && n > 1.0) {
        return Err(Failure::Config(format!("n must be finite and > 1, got {n}")));
    }
    let k = cli.k.or(file.k).unwrap_or(100.0);
    if !(k.is_finite() && k > 0.0) {
        return Err(Failure::Config(format!("k must be finite and > 0, got {k}")));
    }

    let grid = match cli.grid.or(file.grid) {
        Some(text) => GridSpec::parse(&text)?,
        // classify-map reads the x axis as the incidence angle, so the
        // length-box default would be nonsense there; sweep the whole
        // supercritical range instead, with a y row exactly on the
        // interface so all three characters show up.
        None if scenario == Scenario::ClassifyMap => {
            let lo = (1.0 / n).asin() + 0.01;
            let hi = std::f64::consts::FRAC_PI_2 - 0.01;
            if lo >= hi {
                return Err(Failure::Config(format!(
                    "n = {n} leaves no room for the default classify-map \
                     angle sweep; pass --grid with the theta range"
                )));
            }
            GridSpec {
                x0: lo,
                x1: hi,
                nx: 60,
                y0: -1.0,
                y1: 1.0,
                ny: 41,
            }
        }
        None => GridSpec::parse("-8:8:81,-4:4:80")?,
    };
    let profile_text = cli
        .profile
        .or(file.profile)
        .unwrap_or_else(|| "gaussian:0,1".to_string());

    let format = cli.format.or(file.format).unwrap_or(match scenario {
        Scenario::Verify => Format::Json,
        _ => Format::Csv,
    });
    if scenario == Scenario::Verify && format == Format::Csv {
        return Err(Failure::Config(
            "verify emits a pass/fail report, json only; drop --format csv".into(),
        ));
    }

    let resolved = Resolved {
        scenario,
        n,
        theta_i,
        k,
        grid,
        profile: ProfileSpec::parse(&profile_text)?,
        format,
        units: cli.units.or(file.units).unwrap_or(Units::Lambda),
        tol,
        check_helmholtz: cli.check_helmholtz || file.check_helmholtz.unwrap_or(false),
        out: cli.out.or(file.out),
    };

    if resolved.check_helmholtz {
        if resolved.scenario != Scenario::FieldMap {
            return Err(Failure::Config(
                "--check-helmholtz applies to the field-map scenario only".into(),
            ));
        }
        // Residual stencils need the grid to resolve the wave.
        let unit = resolved.length_unit();
        let lambda = 2.0 * std::f64::consts::PI / resolved.k;
        let g = &resolved.grid;
        let dx = (g.x1 - g.x0) * unit / (g.nx - 1) as f64;
        let dy = (g.y1 - g.y0) * unit / (g.ny - 1) as f64;
        let max = lambda / 10.0;
        if dx > max || dy > max {
            return Err(Failure::Config(format!(
                "Helmholtz check needs grid spacing <= lambda/10 = {max:.6}, \
                 got dx = {dx:.6}, dy = {dy:.6}"
            )));
        }
    }
    Ok(resolved)
}

fn resolve_angle(rad: Option<f64>, deg: Option<f64>) -> Result<f64, Failure> {
    match (rad, deg) {
        (Some(_), Some(_)) => Err(Failure::Config(
            "give theta_i or theta_i_deg, not both".into(),
        )),
        (Some(r), None) => Ok(r),
        (None, Some(d)) => Ok(d * std::f64::consts::PI / 180.0),
        (None, None) => unreachable!("caller checked at least one is set"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_args(args: &[&str]) -> Result<Resolved, Failure> {
        let mut argv = vec!["tir"];
        argv.extend_from_slice(args);
        resolve(Cli::parse_from(argv))
    }

    #[test]
    fn defaults_fill_in() {
        let rc = from_args(&["--scenario", "goos-scan"]).unwrap();
        assert_eq!(rc.n, 1.5);
        assert_eq!(rc.k, 100.0);
        assert_eq!(rc.theta_i, std::f64::consts::FRAC_PI_3);
        assert_eq!(rc.format, Format::Csv);
        assert_eq!(rc.units, Units::Lambda);
    }

    #[test]
    fn classify_map_defaults_to_a_supercritical_sweep() {
        let rc = from_args(&["--scenario", "classify-map"]).unwrap();
        let crit = (1.0f64 / rc.n).asin();
        assert!(rc.grid.x0 > crit && rc.grid.x1 < std::f64::consts::FRAC_PI_2);
        assert_eq!(rc.grid.ny % 2, 1, "odd count puts a row on y = 0");
        // An explicit grid still wins.
        let rc = from_args(&["--scenario", "classify-map", "--grid", "0.8:1.2:5,-1:1:4"]).unwrap();
        assert_eq!((rc.grid.x0, rc.grid.nx), (0.8, 5));
        // Near-unity n leaves no angle room for the default sweep.
        let err = from_args(&["--scenario", "classify-map", "--n", "1.0001"]).unwrap_err();
        assert!(matches!(err, Failure::Config(_)), "{err}");
    }

    #[test]
    fn degree_spelling_converts() {
        let rc = from_args(&["--scenario", "goos-scan", "--theta-i-deg", "60"]).unwrap();
        assert!((rc.theta_i - std::f64::consts::FRAC_PI_3).abs() < 1e-15);
    }

    #[test]
    fn grid_parse_rejects_malformed() {
        assert!(from_args(&["--scenario", "field-map", "--grid", "1:2"]).is_err());
        assert!(from_args(&["--scenario", "field-map", "--grid", "0:1:5,0:1:1"]).is_err());
        assert!(from_args(&["--scenario", "field-map", "--grid", "2:1:5,0:1:5"]).is_err());
        assert!(from_args(&["--scenario", "field-map", "--grid", "0:1:5,0:1:5,0:1:5"]).is_err());
    }

    #[test]
    fn profile_parse_accepts_the_three_kinds() {
        for (text, ok) in [
            ("const", true),
            ("gaussian:0,1", true),
            ("raised-cosine:0.5,2", true),
            ("gaussian:1", false),
            ("const:3", false),
            ("triangle:1,2", false),
        ] {
            assert_eq!(
                from_args(&["--scenario", "field-map", "--profile", text]).is_ok(),
                ok,
                "{text}"
            );
        }
    }

    #[test]
    fn verify_refuses_csv() {
        let err = from_args(&["--scenario", "verify", "--format", "csv"]).unwrap_err();
        assert_eq!(err.code(), 2);
    }

    #[test]
    fn helmholtz_check_enforces_spacing() {
        // default grid: 0.2 lambda spacing, too coarse
        let err = from_args(&["--scenario", "field-map", "--check-helmholtz"]).unwrap_err();
        assert_eq!(err.code(), 2);
        let ok = from_args(&[
            "--scenario",
            "field-map",
            "--check-helmholtz",
            "--grid",
            "-0.5:0.5:13,0.05:1.05:13",
        ]);
        assert!(ok.is_ok());
    }

    #[test]
    fn tol_entries_parse() {
        let rc = from_args(&[
            "--scenario",
            "verify",
            "--tol",
            "delta_phase=1e-10",
            "--tol",
            "monodromy=1e-9",
        ])
        .unwrap();
        assert_eq!(rc.tol["delta_phase"], 1e-10);
        assert_eq!(rc.tol["monodromy"], 1e-9);
        assert!(from_args(&["--scenario", "verify", "--tol", "oops"]).is_err());
    }
}
