//! The `atomwall` command-line tool: sweeps written as CSV or JSON tables.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::check::{run_check, CheckOptions};
use crate::constants::{ANGSTROM, MICROMETRE};
use crate::error::{Error, Result};
use crate::table::{Grid, Spacing, SweepTable};
use crate::thermal::{lifshitz, thermal_potentials, v_average, v_average_assembled, v_average_lowt, v_closed};
use crate::units::{denormalize, AtomSpec};
use crate::vacuum::vacuum_potentials;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NON_CONVERGENCE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Vacuum potentials and emission ratio against x0.
    Vacuum,
    /// Thermal potentials against x0 at one temperature.
    Thermal,
    /// Closed forms of the state-averaged potential against x0.
    Average,
    /// Spontaneous emission rate relative to free space against x0.
    Emission,
    /// Ground and excited potentials with the emission ratio on a log grid.
    Figure1,
    /// Averaged potential relative to the Lifshitz form against theta.
    Figure2,
    /// Run the self-check suite.
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// Units of hbar c alpha0 k0^4.
    #[default]
    Hck4,
    /// Ratio to the London value -1/x0^3.
    LvdwRatio,
}

#[derive(Debug, Parser)]
#[command(name = "atomwall", version, about = "Atom-wall dispersion potentials at zero and finite temperature")]
pub struct Args {
    pub command: Command,
    /// First grid value (x0, or theta for figure2).
    #[arg(long)]
    pub grid_min: Option<f64>,
    /// Last grid value.
    #[arg(long)]
    pub grid_max: Option<f64>,
    /// Number of grid points, at least two.
    #[arg(long)]
    pub points: Option<usize>,
    /// Logarithmic grid spacing.
    #[arg(long, conflicts_with = "linear")]
    pub log: bool,
    /// Linear grid spacing.
    #[arg(long)]
    pub linear: bool,
    /// Normalized temperature 2 kB T/(hbar omega0).
    #[arg(long, conflicts_with = "temp_k")]
    pub theta: Option<f64>,
    /// Temperature in kelvin; needs --lambda0-um.
    #[arg(long = "temp-K")]
    pub temp_k: Option<f64>,
    /// Transition wavelength in micrometres.
    #[arg(long = "lambda0-um")]
    pub lambda0_um: Option<f64>,
    /// Static polarizability volume in cubic angstroms.
    #[arg(long = "alpha0-A3")]
    pub alpha0_a3: Option<f64>,
    /// Add distances in micrometres, energies in eV and lifetimes in seconds.
    #[arg(long)]
    pub si: bool,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format, csv by default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_enum)]
    pub normalization: Option<Normalization>,
    /// TOML file with defaults for any of the options above.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Scale factor applied to H0 inside the check suite.
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub h0_scale: f64,
}

/// Options read from a `--config` file; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub grid_min: Option<f64>,
    pub grid_max: Option<f64>,
    pub points: Option<usize>,
    pub spacing: Option<Spacing>,
    pub theta: Option<f64>,
    pub temp_k: Option<f64>,
    pub lambda0_um: Option<f64>,
    pub alpha0_a3: Option<f64>,
    pub si: Option<bool>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub normalization: Option<Normalization>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad config {}: {e}", path.display())))
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub grid: Grid,
    pub theta: Option<f64>,
    pub atom: Option<AtomSpec>,
    pub si: bool,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub normalization: Normalization,
    pub h0_scale: f64,
}

fn default_grid(command: Command) -> (f64, f64, usize, Spacing) {
    match command {
        Command::Thermal | Command::Average => (1.0, 100.0, 50, Spacing::Log),
        Command::Figure2 => (0.05, 5.0, 200, Spacing::Log),
        _ => (1e-2, 1e2, 200, Spacing::Log),
    }
}

impl RunConfig {
    pub fn resolve(args: &Args, file: &FileConfig) -> Result<Self> {
        let (min, max, points, spacing) = default_grid(args.command);
        let spacing = if args.log {
            Spacing::Log
        } else if args.linear {
            Spacing::Linear
        } else {
            file.spacing.unwrap_or(spacing)
        };
        let grid = Grid::new(
            args.grid_min.or(file.grid_min).unwrap_or(min),
            args.grid_max.or(file.grid_max).unwrap_or(max),
            args.points.or(file.points).unwrap_or(points),
            spacing,
        )?;

        let lambda0_um = args.lambda0_um.or(file.lambda0_um);
        let alpha0_a3 = args.alpha0_a3.or(file.alpha0_a3);
        let si = args.si || file.si.unwrap_or(false);
        let atom = match (lambda0_um, alpha0_a3) {
            (Some(l), Some(a)) => Some(AtomSpec::from_wavelength(l * MICROMETRE, a * ANGSTROM.powi(3))?),
            (None, Some(_)) => return Err(Error::InvalidInput("--alpha0-A3 needs --lambda0-um".into())),
            _ => None,
        };
        if si && atom.is_none() {
            return Err(Error::InvalidInput("--si needs --lambda0-um and --alpha0-A3".into()));
        }
        let normalization = args.normalization.or(file.normalization).unwrap_or_default();
        if si && normalization == Normalization::LvdwRatio {
            return Err(Error::InvalidInput("--si cannot be combined with --normalization lvdw-ratio".into()));
        }

        // Flags override the file as a pair: either temperature flag hides both file keys.
        let (theta, temp_k) = if args.theta.is_some() || args.temp_k.is_some() {
            (args.theta, args.temp_k)
        } else {
            (file.theta, file.temp_k)
        };
        let theta = match (theta, temp_k) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidInput("give either theta or a temperature, not both".into()))
            }
            (Some(t), None) => Some(t),
            (None, Some(kelvin)) => {
                let l = lambda0_um.ok_or_else(|| Error::InvalidInput("--temp-K needs --lambda0-um".into()))?;
                // The polarizability does not enter the reduced temperature.
                Some(AtomSpec::from_wavelength(l * MICROMETRE, 1.0)?.reduced_temperature(kelvin))
            }
            (None, None) => None,
        };
        if let Some(t) = theta {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidInput(format!("temperature must be positive, got theta = {t}")));
            }
        }
        if matches!(args.command, Command::Thermal | Command::Average) && theta.is_none() {
            return Err(Error::InvalidInput("this command needs --theta or --temp-K".into()));
        }

        Ok(Self {
            command: args.command,
            grid,
            theta,
            atom,
            si,
            out: args.out.clone().or_else(|| file.out.clone()),
            format: args.format.or(file.format).unwrap_or_default(),
            normalization,
            h0_scale: args.h0_scale,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Abscissa,
    Potential,
    Plain,
    EmissionRatio,
}

struct Column {
    name: &'static str,
    kind: Kind,
}

const fn col(name: &'static str, kind: Kind) -> Column {
    Column { name, kind }
}

/// Applies the output convention to raw rows in `ħcα₀k₀⁴` units; the first
/// column must be `x₀`.
fn finish(cfg: &RunConfig, mut comments: Vec<String>, columns: &[Column], rows: Vec<Vec<f64>>) -> Result<SweepTable> {
    let mut names: Vec<String> = Vec::new();
    for c in columns {
        names.push(match (c.kind, cfg.si) {
            (Kind::Potential, true) => format!("{}_eV", c.name),
            _ => c.name.to_string(),
        });
        if c.kind == Kind::Abscissa && cfg.si {
            names.push("z_um".into());
        }
    }
    let has_ratio = columns.iter().any(|c| c.kind == Kind::EmissionRatio);
    if cfg.si && has_ratio {
        names.push("lifetime_s".into());
    }

    let rows = rows
        .into_iter()
        .map(|raw| {
            let x0 = raw[0];
            let mut row = Vec::with_capacity(names.len());
            let mut ratio = None;
            for (c, &v) in columns.iter().zip(&raw) {
                match (c.kind, cfg.si, cfg.normalization) {
                    (Kind::Abscissa, true, _) => {
                        row.push(v);
                        let atom = cfg.atom.as_ref().expect("si implies an atom");
                        row.push(atom.distance(x0) / MICROMETRE);
                    }
                    (Kind::Potential, true, _) => {
                        let atom = cfg.atom.as_ref().expect("si implies an atom");
                        row.push(denormalize(v, atom).electron_volts());
                    }
                    (Kind::Potential, false, Normalization::LvdwRatio) => row.push(-v * x0 * x0 * x0),
                    (Kind::EmissionRatio, ..) => {
                        ratio = Some(v);
                        row.push(v);
                    }
                    _ => row.push(v),
                }
            }
            if cfg.si {
                if let (Some(r), Some(atom)) = (ratio, cfg.atom.as_ref()) {
                    row.push(1.0 / (atom.free_space_rate() * r));
                }
            }
            row
        })
        .collect();

    comments.insert(0, format!("atomwall {} {}", env!("CARGO_PKG_VERSION"), command_name(cfg.command)));
    comments.push(normalization_comment(cfg));
    SweepTable::new(command_name(cfg.command), comments, names, rows)
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Vacuum => "vacuum",
        Command::Thermal => "thermal",
        Command::Average => "average",
        Command::Emission => "emission",
        Command::Figure1 => "figure1",
        Command::Figure2 => "figure2",
        Command::Check => "check",
    }
}

fn normalization_comment(cfg: &RunConfig) -> String {
    if cfg.si {
        let atom = cfg.atom.as_ref().expect("si implies an atom");
        return format!(
            "units: x0 = 2 k0 z; potentials in eV (unit hbar c alpha0 k0^4 = {:.6e} eV); z in micrometres; \
             lifetime = 1/(2 c alpha0 k0^4 gamma_ratio) in seconds",
            atom.energy_unit().electron_volts()
        );
    }
    match cfg.normalization {
        Normalization::Hck4 => {
            "normalization: potentials in units of hbar c alpha0 k0^4, x0 = 2 k0 z, theta = 2 kB T/(hbar omega0)".into()
        }
        Normalization::LvdwRatio => "normalization: potentials as V/(-1/x0^3), the ratio to the London value \
                                     -hbar omega0 alpha0/(8 z^3); x0 = 2 k0 z"
            .into(),
    }
}

fn parallel_rows(xs: &[f64], row: impl Fn(f64) -> Result<Vec<f64>> + Sync) -> Result<Vec<Vec<f64>>> {
    xs.par_iter().map(|&x| row(x)).collect()
}

pub fn run_vacuum(cfg: &RunConfig) -> Result<SweepTable> {
    let columns = [
        col("x0", Kind::Abscissa),
        col("v0rr", Kind::Potential),
        col("v0fr", Kind::Potential),
        col("vg", Kind::Potential),
        col("ve", Kind::Potential),
        col("gamma_ratio", Kind::EmissionRatio),
    ];
    let rows = parallel_rows(&cfg.grid.values(), |x0| {
        let v = vacuum_potentials(x0)?;
        Ok(vec![x0, v.v0rr, v.v0fr, v.vg, v.ve, v.gamma_ratio])
    })?;
    let comments = vec![
        "v0rr = H0rr(x0)/(pi x0^3) radiation reaction; v0fr = (H0 - H0rr)/(pi x0^3) field fluctuations".into(),
        "vg = H0(x0)/(pi x0^3) ground state; ve = 2 v0rr - vg excited state".into(),
        "gamma_ratio = 1 - G(x0), emission rate in units of 2 c alpha0 k0^4".into(),
    ];
    finish(cfg, comments, &columns, rows)
}

pub fn run_emission(cfg: &RunConfig) -> Result<SweepTable> {
    let columns = [col("x0", Kind::Abscissa), col("gamma_ratio", Kind::EmissionRatio)];
    let rows = parallel_rows(&cfg.grid.values(), |x0| Ok(vec![x0, vacuum_potentials(x0)?.gamma_ratio]))?;
    let comments = vec!["gamma_ratio = 1 - G(x0), emission rate in units of 2 c alpha0 k0^4".into()];
    finish(cfg, comments, &columns, rows)
}

pub fn run_figure1(cfg: &RunConfig) -> Result<SweepTable> {
    let columns = [
        col("x0", Kind::Abscissa),
        col("vg", Kind::Potential),
        col("ve", Kind::Potential),
        col("gamma_ratio", Kind::EmissionRatio),
    ];
    let rows = parallel_rows(&cfg.grid.values(), |x0| {
        let v = vacuum_potentials(x0)?;
        Ok(vec![x0, v.vg, v.ve, v.gamma_ratio])
    })?;
    let comments = vec![
        "vacuum potentials of both states: vg = H0/(pi x0^3), ve = 2 H0rr/(pi x0^3) - vg".into(),
        "gamma_ratio = 1 - G(x0), emission rate in units of 2 c alpha0 k0^4".into(),
    ];
    finish(cfg, comments, &columns, rows)
}

fn theta_of(cfg: &RunConfig) -> Result<f64> {
    cfg.theta
        .ok_or_else(|| Error::InvalidInput("this command needs --theta or --temp-K".into()))
}

pub fn run_thermal(cfg: &RunConfig) -> Result<SweepTable> {
    let theta = theta_of(cfg)?;
    let columns = [
        col("x0", Kind::Abscissa),
        col("z_over_lambda_t", Kind::Plain),
        col("vg", Kind::Potential),
        col("ve", Kind::Potential),
        col("v_t", Kind::Potential),
        col("v_t_err", Kind::Plain),
        col("v_ground", Kind::Potential),
        col("v_excited", Kind::Potential),
        col("p_ground", Kind::Plain),
        col("v_average", Kind::Potential),
        col("v_lifshitz", Kind::Potential),
    ];
    let rows = parallel_rows(&cfg.grid.values(), |x0| {
        let r = thermal_potentials(x0, theta)?;
        Ok(vec![
            x0,
            x0 * theta / 4.0,
            r.vacuum.vg,
            r.vacuum.ve,
            r.v_t,
            r.v_t_err,
            r.v_ground,
            r.v_excited,
            r.p_ground,
            r.v_average,
            lifshitz(x0, theta),
        ])
    })?;
    let comments = vec![
        format!("theta = {theta:.16e}, k0 lambda_T = 2/theta = {:.16e}", 2.0 / theta),
        "v_t = (2/pi) PV int u^3 G(u x0)/((1 - u^2)(exp(2u/theta) - 1)) du by adaptive quadrature; v_t_err its error estimate in hbar c alpha0 k0^4".into(),
        "v_ground = vg + v_t; v_excited = ve - v_t; v_average = p_ground v_ground + (1 - p_ground) v_excited".into(),
        "p_ground = 1/(1 + exp(-2/theta)); v_lifshitz = -theta/x0^3".into(),
    ];
    finish(cfg, comments, &columns, rows)
}

pub fn run_average(cfg: &RunConfig) -> Result<SweepTable> {
    let theta = theta_of(cfg)?;
    let columns = [
        col("x0", Kind::Abscissa),
        col("v_average", Kind::Potential),
        col("v_average_assembled", Kind::Potential),
        col("v_average_lowt", Kind::Potential),
        col("v_closed", Kind::Potential),
        col("v_lifshitz", Kind::Potential),
    ];
    let rows = parallel_rows(&cfg.grid.values(), |x0| {
        Ok(vec![
            x0,
            v_average(x0, theta)?,
            v_average_assembled(x0, theta)?,
            v_average_lowt(x0, theta)?,
            v_closed(x0, theta)?,
            lifshitz(x0, theta),
        ])
    })?;
    let comments = vec![
        format!("theta = {theta:.16e}, k0 lambda_T = 2/theta = {:.16e}", 2.0 / theta),
        "v_average = -theta tanh(1/theta)/x0^3".into(),
        "v_average_assembled = tanh(1/theta) v_closed + 2 v0rr exp(-2/theta)/(1 + exp(-2/theta))".into(),
        "v_average_lowt = v_closed - 2 exp(-2/theta)(v0fr + v_closed - vg)".into(),
        "v_closed = -theta/x0^3 - 2 v0rr/(exp(2/theta) - 1), valid for z > lambda_T; v_lifshitz = -theta/x0^3".into(),
    ];
    finish(cfg, comments, &columns, rows)
}

pub fn run_figure2(cfg: &RunConfig) -> Result<SweepTable> {
    let thetas = cfg.grid.values();
    let rows = parallel_rows(&thetas, |theta| {
        // In units of the London value the x0 dependence cancels.
        let v_mean = -v_average(1.0, theta)?;
        Ok(vec![theta, v_mean, theta, 1.0 - v_mean / theta])
    })?;
    let comments = vec![
        format!("atomwall {} figure2", env!("CARGO_PKG_VERSION")),
        "normalization: potentials as V/(-hbar omega0 alpha0/(8 z^3)), z > lambda_T assumed".into(),
        "v_mean = theta tanh(1/theta) state-averaged potential; v_lifshitz = theta; rel_error = 1 - tanh(1/theta)".into(),
    ];
    let columns = ["theta", "v_mean", "v_lifshitz", "rel_error"].map(String::from).to_vec();
    SweepTable::new("figure2", comments, columns, rows)
}

/// Builds the table for a sweep command.
pub fn build_table(cfg: &RunConfig) -> Result<SweepTable> {
    match cfg.command {
        Command::Vacuum => run_vacuum(cfg),
        Command::Thermal => run_thermal(cfg),
        Command::Average => run_average(cfg),
        Command::Emission => run_emission(cfg),
        Command::Figure1 => run_figure1(cfg),
        Command::Figure2 => run_figure2(cfg),
        Command::Check => Err(Error::InvalidInput("check produces a report, not a table".into())),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } => EXIT_NON_CONVERGENCE,
        _ => EXIT_USAGE,
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let file = match args.config.as_deref().map(FileConfig::load).transpose() {
        Ok(f) => f.unwrap_or_default(),
        Err(e) => {
            eprintln!("atomwall: {e}");
            return EXIT_USAGE;
        }
    };
    let cfg = match RunConfig::resolve(&args, &file) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("atomwall: {e}");
            return EXIT_USAGE;
        }
    };

    if cfg.command == Command::Check {
        let report = run_check(&CheckOptions { h0_scale: cfg.h0_scale });
        let text = format!("{report}\n");
        if let Err(e) = write_output(&cfg.out, &text) {
            eprintln!("atomwall: cannot write output: {e}");
            return EXIT_USAGE;
        }
        return if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    }

    let table = match build_table(&cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("atomwall: {e}");
            return exit_code(&e);
        }
    };
    let text = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    if let Err(e) = write_output(&cfg.out, &text) {
        eprintln!("atomwall: cannot write output: {e}");
        return EXIT_USAGE;
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Args {
        Args::try_parse_from(std::iter::once("atomwall").chain(args.iter().copied())).unwrap()
    }

    fn resolve(args: &[&str]) -> Result<RunConfig> {
        RunConfig::resolve(&parse(args), &FileConfig::default())
    }

    #[test]
    fn defaults_per_command() {
        let c = resolve(&["vacuum"]).unwrap();
        assert_eq!((c.grid.min, c.grid.max, c.grid.points), (1e-2, 1e2, 200));
        assert_eq!(c.format, Format::Csv);
        assert!(resolve(&["thermal"]).is_err());
        assert!(resolve(&["thermal", "--theta", "0.1"]).is_ok());
    }

    #[test]
    fn temperature_in_kelvin_needs_wavelength() {
        assert!(resolve(&["thermal", "--temp-K", "300"]).is_err());
        let c = resolve(&["thermal", "--temp-K", "300", "--lambda0-um", "0.589"]).unwrap();
        // 2 kB T/(hbar c k0) at 300 K and 589 nm
        assert!((c.theta.unwrap() - 0.02456).abs() < 1e-4, "{:?}", c.theta);
        assert!(Args::try_parse_from(["atomwall", "thermal", "--theta", "1", "--temp-K", "3"]).is_err());
    }

    #[test]
    fn si_needs_an_atom() {
        assert!(resolve(&["vacuum", "--si"]).is_err());
        assert!(resolve(&["vacuum", "--si", "--lambda0-um", "0.589", "--alpha0-A3", "24"]).is_ok());
    }

    #[test]
    fn flags_override_the_file() {
        let file: FileConfig = toml::from_str("grid_min = 0.5\npoints = 7\nformat = \"json\"\nspacing = \"linear\"").unwrap();
        let c = RunConfig::resolve(&parse(&["vacuum", "--points", "9"]), &file).unwrap();
        assert_eq!(c.grid.min, 0.5);
        assert_eq!(c.grid.points, 9);
        assert_eq!(c.grid.spacing, Spacing::Linear);
        assert_eq!(c.format, Format::Json);
        assert!(toml::from_str::<FileConfig>("colour = 1").is_err());
    }

    #[test]
    fn vacuum_table_limits() {
        let c = resolve(&["vacuum"]).unwrap();
        let t = run_vacuum(&c).unwrap();
        assert_eq!(t.rows.len(), 200);
        let x = t.column("x0").unwrap();
        let vg = t.column("vg").unwrap();
        let first = vg[0] / (-1.0 / x[0].powi(3));
        let last = vg[199] / (-6.0 / (std::f64::consts::PI * x[199].powi(4)));
        assert!((0.99..=1.01).contains(&first), "{first}");
        assert!((0.99..=1.01).contains(&last), "{last}");
    }

    #[test]
    fn lvdw_ratio_normalization() {
        let c = resolve(&["vacuum", "--normalization", "lvdw-ratio", "--points", "3"]).unwrap();
        let t = run_vacuum(&c).unwrap();
        assert!((t.column("vg").unwrap()[0] - 1.0).abs() < 1e-2);
    }

    #[test]
    fn figure2_values() {
        let c = resolve(&["figure2", "--grid-min", "0.4", "--grid-max", "1.0", "--points", "2", "--linear"]).unwrap();
        let t = run_figure2(&c).unwrap();
        let err = t.column("rel_error").unwrap();
        assert!((err[0] - 0.0134).abs() < 5e-4);
        assert!((err[1] - 0.2384).abs() < 5e-4);
    }

    #[test]
    fn si_columns() {
        let c = resolve(&["emission", "--si", "--lambda0-um", "0.589", "--alpha0-A3", "24", "--points", "4"]).unwrap();
        let t = run_emission(&c).unwrap();
        assert_eq!(t.columns, vec!["x0", "z_um", "gamma_ratio", "lifetime_s"]);
        let c = resolve(&["vacuum", "--si", "--lambda0-um", "0.589", "--alpha0-A3", "24", "--points", "4"]).unwrap();
        let t = run_vacuum(&c).unwrap();
        assert!(t.columns.contains(&"vg_eV".to_string()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["atomwall", "--help"]), EXIT_OK);
        assert_eq!(run(["atomwall", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["atomwall", "vacuum", "--grid-min", "2", "--grid-max", "1"]), EXIT_USAGE);
        assert_eq!(exit_code(&Error::NonConvergence { value: 0.0, err_estimate: 1.0, subdivisions: 1 }), EXIT_NON_CONVERGENCE);
    }
}
