//! Command-line front end: loads walk configurations, runs simulations and
//! limit-law analyses, and emits machine-readable results.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration
//! parse/validation (and I/O) errors, 3 degenerate coin, 4 determinant
//! mismatch between boundary and bulk coins.

mod config;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use halfline_qw::{
    estimate_rho, rho, Coin64, DensityModel64, GenFunBundle64, QuadratureConfig64, StateVector64,
    WalkError, WalkSpec64,
};
use num_complex::Complex64;

use config::{format_float, ConfigError, RunConfig};

const GENFUN_TOLERANCE: f64 = 1e-9;
const SIMULATION_SITE_CUT: usize = 10;

#[derive(Parser)]
#[command(
    name = "halfline-qw",
    version,
    about = "Two-state quantum walks on the half-line: simulation, generating functions, and weak-limit densities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the walk and write per-site amplitudes and probabilities as CSV.
    Simulate {
        /// Walk configuration file.
        #[arg(long)]
        config: PathBuf,
        /// Number of steps to evolve.
        #[arg(long)]
        steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the limit density on a grid and write it as CSV, with the
    /// localization weight in a metadata line.
    Density {
        #[arg(long)]
        config: PathBuf,
        /// Number of interior grid points on (0, |a|).
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the localization weight.
    Rho {
        #[arg(long)]
        config: PathBuf,
        /// quadrature integrates the limit density; simulate sums site
        /// probabilities near the origin at a finite time.
        #[arg(long, value_enum)]
        method: RhoMethod,
        /// Evolution time for the simulate method.
        #[arg(long, default_value_t = 400)]
        steps: usize,
    },
    /// Cross-check generating-function coefficients against direct
    /// evolution; fails (exit 1) if they disagree beyond 1e-9.
    CheckGenfun {
        #[arg(long)]
        config: PathBuf,
        /// Largest site to compare.
        #[arg(long, default_value_t = 10)]
        xmax: usize,
        /// Largest time to compare.
        #[arg(long, default_value_t = 50)]
        tmax: usize,
    },
    /// Print the sup distance between the empirical CDF of X_t/t and the
    /// limit CDF on a 50-point grid.
    CdfCompare {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
    },
    /// Write the bundled example configurations into a directory.
    InitExample {
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RhoMethod {
    Quadrature,
    Simulate,
}

impl fmt::Display for RhoMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoMethod::Quadrature => write!(f, "quadrature"),
            RhoMethod::Simulate => write!(f, "simulate"),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Config { path: PathBuf, source: ConfigError },
    Io { path: PathBuf, source: std::io::Error },
    Walk(WalkError),
    Verification { discrepancy: f64 },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config { path, source } => {
                write!(f, "{}: {source}", path.display())
            }
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Walk(err) => write!(f, "{err}"),
            CliError::Verification { discrepancy } => write!(
                f,
                "generating functions disagree with evolution by {discrepancy:.3e} (tolerance {GENFUN_TOLERANCE:.0e})"
            ),
        }
    }
}

impl From<WalkError> for CliError {
    fn from(err: WalkError) -> Self {
        CliError::Walk(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification { .. } => 1,
            CliError::Config { .. } | CliError::Io { .. } => 2,
            CliError::Walk(WalkError::DegenerateCoin) => 3,
            CliError::Walk(WalkError::AssumptionViolated { .. }) => 4,
            CliError::Walk(_) => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Simulate { config, steps, out } => cmd_simulate(&config, steps, &out),
        Command::Density { config, grid, out } => cmd_density(&config, grid, &out),
        Command::Rho {
            config,
            method,
            steps,
        } => cmd_rho(&config, method, steps),
        Command::CheckGenfun {
            config,
            xmax,
            tmax,
        } => cmd_check_genfun(&config, xmax, tmax),
        Command::CdfCompare { config, steps } => cmd_cdf_compare(&config, steps),
        Command::InitExample { dir } => cmd_init_example(&dir),
    }
}

fn load_spec(path: &Path) -> Result<WalkSpec64, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let config = RunConfig::parse(&text).map_err(|source| CliError::Config {
        path: path.to_owned(),
        source,
    })?;
    config.to_walk_spec().map_err(|source| CliError::Config {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn cmd_simulate(config: &Path, steps: usize, out: &Path) -> Result<(), CliError> {
    let spec = load_spec(config)?;
    let state = StateVector64::evolve(&spec, steps);
    let mut csv = String::from("x,p,psi_down_re,psi_down_im,psi_up_re,psi_up_im\n");
    for (x, amp) in state.amps().iter().enumerate() {
        csv.push_str(&format!(
            "{x},{},{},{},{},{}\n",
            format_float(amp.prob()),
            format_float(amp.down.re),
            format_float(amp.down.im),
            format_float(amp.up.re),
            format_float(amp.up.im),
        ));
    }
    write_file(out, &csv)
}

fn cmd_density(config: &Path, grid: usize, out: &Path) -> Result<(), CliError> {
    let spec = load_spec(config)?;
    let model = DensityModel64::new(&spec, &QuadratureConfig64::default())?;
    let end = model.support_end();
    let mut csv = format!("# rho={}\ny,f_ac\n", format_float(model.rho()));
    for i in 1..=grid {
        let y = end * i as f64 / (grid + 1) as f64;
        let f = model.density_ac(y)?;
        csv.push_str(&format!("{},{}\n", format_float(y), format_float(f)));
    }
    write_file(out, &csv)
}

fn cmd_rho(config: &Path, method: RhoMethod, steps: usize) -> Result<(), CliError> {
    let spec = load_spec(config)?;
    let value = match method {
        RhoMethod::Quadrature => rho(&spec, &QuadratureConfig64::default())?,
        RhoMethod::Simulate => estimate_rho(&spec, steps, SIMULATION_SITE_CUT),
    };
    println!("rho={} method={method}", format_float(value));
    Ok(())
}

fn cmd_check_genfun(config: &Path, xmax: usize, tmax: usize) -> Result<(), CliError> {
    let spec = load_spec(config)?;
    let bundle = GenFunBundle64::new(&spec, xmax, tmax + 1)?;
    let mut state = StateVector64::initial(&spec);
    let mut worst = 0.0f64;
    for t in 0..=tmax {
        if t > 0 {
            state = state.step(&spec);
        }
        for x in 0..=xmax {
            let amp = state.amp(x);
            let dev = (bundle.psi_down[x].coeff(t) - amp.down)
                .norm()
                .max((bundle.psi_up[x].coeff(t) - amp.up).norm());
            worst = worst.max(dev);
        }
    }
    println!("max_discrepancy={} xmax={xmax} tmax={tmax}", format_float(worst));
    if worst > GENFUN_TOLERANCE {
        return Err(CliError::Verification { discrepancy: worst });
    }
    Ok(())
}

fn cmd_cdf_compare(config: &Path, steps: usize) -> Result<(), CliError> {
    let spec = load_spec(config)?;
    let quad = QuadratureConfig64::default();
    let model = DensityModel64::new(&spec, &quad)?;
    let state = StateVector64::evolve(&spec, steps);
    let mut sup = 0.0f64;
    for i in 0..50 {
        let y = i as f64 / 49.0;
        let dist = (state.empirical_cdf(y) - model.cdf(y, &quad)?).abs();
        sup = sup.max(dist);
    }
    println!("sup_distance={} steps={steps}", format_float(sup));
    Ok(())
}

fn cmd_init_example(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let hadamard = Coin64::hadamard();
    let phased = Coin64::phased_hadamard();
    let configs = [
        (
            "hadamard.cfg",
            RunConfig::from_parts(
                Some("homogeneous Hadamard walk"),
                &hadamard,
                &hadamard,
                Complex64::new(s, 0.0),
                Complex64::new(0.0, s),
            ),
        ),
        (
            "phased.cfg",
            RunConfig::from_parts(
                Some("homogeneous phased-Hadamard walk (localizing)"),
                &phased,
                &phased,
                Complex64::new(s, 0.0),
                Complex64::new(0.0, s),
            ),
        ),
        (
            "phased-boundary.cfg",
            RunConfig::from_parts(
                Some("phased-Hadamard boundary coin with Hadamard bulk"),
                &phased,
                &hadamard,
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ),
        ),
    ];
    for (name, config) in configs {
        let path = dir.join(name);
        write_file(&path, &config.emit())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
