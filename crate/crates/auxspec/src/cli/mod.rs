//! Command-line front end: single-energy queries, table reproduction,
//! coefficient fits, error-bound reports and raw oracle runs.
//!
//! Exit status: 0 on success, 1 on domain or convergence errors, 2 on
//! usage errors.

mod config;
mod output;

pub use config::{RunConfig, CONFIG_ENV};
pub use output::{fmt_sig, OutputFormat, OutputRecord};

use crate::closed_form::{self, CoeffFamily};
use crate::error::Error;
use crate::error_bounds;
use crate::fit::{self, ReferenceGrid};
use crate::oracle::{self, RadialProblem};
use crate::potentials::{DimensionlessPotential, LogPotential, PowerLawPotential, QuantumNumbers};
use crate::tables;
use crate::SolvableBase;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "auxspec",
    version,
    about = "Auxiliary-field bound-state energies, numerical oracle, and fitting tools"
)]
pub struct Cli {
    /// JSON configuration file (also read from AUXSPEC_CONFIG).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energies of one potential for a set of states and methods.
    Energy(EnergyArgs),
    /// Reproduce a reference table with deviations (1: chi grid, 2: lambda = 1 spectra).
    Table(TableArgs),
    /// Optimal (b, c) coefficients per lambda and hyperbola fits.
    Fit(FitArgs),
    /// Ground-state error bound report for one exponent and base.
    Bound(BoundArgs),
    /// Converged eigenvalues of the dimensionless Hamiltonian.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum MethodTag {
    AftHarmonic,
    AftCoulomb,
    ImprovedBc1,
    ImprovedBc2,
    ImprovedBc3,
    ImprovedBc4,
    Wkb,
    Airy,
    Oracle,
}

impl MethodTag {
    fn label(&self) -> &'static str {
        match self {
            MethodTag::AftHarmonic => "aft-harmonic",
            MethodTag::AftCoulomb => "aft-coulomb",
            MethodTag::ImprovedBc1 => "improved-bc1",
            MethodTag::ImprovedBc2 => "improved-bc2",
            MethodTag::ImprovedBc3 => "improved-bc3",
            MethodTag::ImprovedBc4 => "improved-bc4",
            MethodTag::Wkb => "wkb",
            MethodTag::Airy => "airy",
            MethodTag::Oracle => "oracle",
        }
    }

    fn family(&self) -> Option<CoeffFamily> {
        match self {
            MethodTag::ImprovedBc1 => Some(CoeffFamily::ExactPair),
            MethodTag::ImprovedBc2 => Some(CoeffFamily::Linear),
            MethodTag::ImprovedBc3 => Some(CoeffFamily::HyperbolaAiry),
            MethodTag::ImprovedBc4 => Some(CoeffFamily::HyperbolaFit),
            _ => None,
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EnergyArgs {
    /// Power-law exponent.
    #[arg(long, conflicts_with = "log")]
    lambda: Option<f64>,
    /// Logarithmic potential a ln(b r).
    #[arg(long)]
    log: bool,
    /// Dimensionless normalization (m = 2, a = 1, b = 1).
    #[arg(long, conflicts_with_all = ["m", "a", "b"])]
    dimensionless: bool,
    /// Particle mass.
    #[arg(long)]
    m: Option<f64>,
    /// Coupling strength.
    #[arg(long)]
    a: Option<f64>,
    /// Inverse length scale of the logarithmic potential.
    #[arg(long)]
    b: Option<f64>,
    /// Radial quantum number or inclusive range (e.g. 2 or 0..3).
    #[arg(long, default_value = "0")]
    n: String,
    /// Orbital quantum number or inclusive range.
    #[arg(long, default_value = "0")]
    l: String,
    /// Method tag; repeat the flag for several methods.
    #[arg(long = "method", required = true)]
    method: Vec<MethodTag>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Significant digits (default 6).
    #[arg(long)]
    digits: Option<usize>,
    /// Coarsest oracle mesh size.
    #[arg(long)]
    mesh: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to reproduce (1 or 2).
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    which: u8,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    digits: Option<usize>,
    #[arg(long)]
    mesh: Option<usize>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct FitArgs {
    /// Fit a single power-law exponent.
    #[arg(long, conflicts_with_all = ["log", "grid"])]
    lambda: Option<f64>,
    /// Fit the logarithmic potential.
    #[arg(long, conflicts_with = "grid")]
    log: bool,
    /// Lambda sample grid: "default" (-1.5..4 in steps of 0.25) or "table1".
    #[arg(long)]
    grid: Option<String>,
    /// Write plot-ready coefficient curves to these two files (b, then c).
    #[arg(long = "emit-plot-data", num_args = 2, value_names = ["B_FILE", "C_FILE"])]
    emit_plot_data: Option<Vec<PathBuf>>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    digits: Option<usize>,
    #[arg(long)]
    mesh: Option<usize>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct BoundArgs {
    /// Power-law exponent.
    #[arg(long)]
    lambda: f64,
    /// Solvable base: harmonic or coulomb.
    #[arg(long)]
    base: BaseArg,
    #[arg(long)]
    digits: Option<usize>,
    #[arg(long)]
    mesh: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BaseArg {
    Harmonic,
    Coulomb,
}

impl From<BaseArg> for SolvableBase {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::Harmonic => SolvableBase::Harmonic,
            BaseArg::Coulomb => SolvableBase::Coulomb,
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct OracleArgs {
    /// Power-law exponent.
    #[arg(long, conflicts_with = "log")]
    lambda: Option<f64>,
    /// Logarithmic potential.
    #[arg(long)]
    log: bool,
    /// Orbital quantum number or inclusive range.
    #[arg(long, default_value = "0")]
    l: String,
    /// Highest radial quantum number.
    #[arg(long, default_value_t = 3)]
    n_max: u32,
    #[arg(long)]
    mesh: Option<usize>,
    /// Domain cutoff override (auto-sized when absent).
    #[arg(long)]
    cutoff: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    digits: Option<usize>,
}

enum Failure {
    Usage(String),
    Run(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

/// Entry point used by the `auxspec` binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::load(cli.config.as_ref()) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::Energy(args) => cmd_energy(args, &cfg),
        Command::Table(args) => cmd_table(args, &cfg),
        Command::Fit(args) => cmd_fit(args, &cfg),
        Command::Bound(args) => cmd_bound(args, &cfg),
        Command::Oracle(args) => cmd_oracle(args, &cfg),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

/// "2" or "0..3" (inclusive).
fn parse_range(spec: &str) -> Result<Vec<u32>, Failure> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Failure::Usage(format!("cannot parse quantum number '{s}'")))
    };
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if hi < lo {
            return Err(Failure::Usage(format!("empty range '{spec}'")));
        }
        Ok((lo..=hi).collect())
    } else {
        Ok(vec![parse_one(spec)?])
    }
}

struct PotentialSpec {
    potential: DimensionlessPotential,
    /// Physical parameters, absent in the dimensionless normalization.
    physical: Option<(f64, f64, f64)>, // (m, a, b)
}

fn potential_spec(args: &EnergyArgs) -> Result<PotentialSpec, Failure> {
    let potential = match (args.lambda, args.log) {
        (Some(lambda), false) => DimensionlessPotential::PowerLaw(lambda),
        (None, true) => DimensionlessPotential::Log,
        _ => {
            return Err(Failure::Usage(
                "specify the potential with --lambda X or --log".into(),
            ))
        }
    };
    if args.dimensionless {
        return Ok(PotentialSpec {
            potential,
            physical: None,
        });
    }
    let m = args
        .m
        .ok_or_else(|| Failure::Usage("--m required (or --dimensionless)".into()))?;
    let a = args
        .a
        .ok_or_else(|| Failure::Usage("--a required (or --dimensionless)".into()))?;
    let b = match potential {
        DimensionlessPotential::Log => args
            .b
            .ok_or_else(|| Failure::Usage("--b required for the log potential".into()))?,
        _ => {
            if args.b.is_some() {
                return Err(Failure::Usage(
                    "--b applies to the log potential only".into(),
                ));
            }
            1.0
        }
    };
    Ok(PotentialSpec {
        potential,
        physical: Some((m, a, b)),
    })
}

fn cmd_energy(args: &EnergyArgs, cfg: &RunConfig) -> Result<String, Failure> {
    let spec = potential_spec(args)?;
    let ns = parse_range(&args.n)?;
    let ells = parse_range(&args.l)?;
    let digits = args.digits.or(cfg.digits).unwrap_or(6);
    let mesh = args
        .mesh
        .or(cfg.mesh_size)
        .unwrap_or(oracle::DEFAULT_MESH_SIZE);

    let mut methods = args.method.clone();
    methods.sort();
    methods.dedup();

    // one oracle solve per ell, shared across methods and n values
    let mut oracle_slices: BTreeMap<u32, crate::oracle::SpectrumSlice> = BTreeMap::new();
    if methods.contains(&MethodTag::Oracle) {
        let n_top = *ns.iter().max().expect("nonempty range");
        for &ell in &ells {
            let problem = RadialProblem::auto(spec.potential, ell, n_top).mesh_size(mesh);
            oracle_slices.insert(ell, oracle::solve_radial(&problem, n_top)?);
        }
    }

    let mut records = Vec::new();
    for &method in &methods {
        for &ell in &ells {
            for &n in &ns {
                let qn = QuantumNumbers::new(n, ell);
                let (value, aux) = energy_value(&spec, method, qn, &oracle_slices)?;
                records.push(OutputRecord {
                    method: method.label().to_string(),
                    lambda: spec.potential.label(),
                    n,
                    ell,
                    value,
                    aux,
                });
            }
        }
    }
    records.sort_by(|a, b| (&a.method, a.n, a.ell).cmp(&(&b.method, b.n, b.ell)));
    Ok(output::render_records(&records, args.format, digits))
}

fn energy_value(
    spec: &PotentialSpec,
    method: MethodTag,
    qn: QuantumNumbers,
    oracle_slices: &BTreeMap<u32, crate::oracle::SpectrumSlice>,
) -> Result<(f64, BTreeMap<String, f64>), Failure> {
    let mut aux = BTreeMap::new();
    match spec.potential {
        DimensionlessPotential::PowerLaw(lambda) => {
            let (m, a, _) = spec.physical.unwrap_or((2.0, 1.0, 1.0));
            let pot = PowerLawPotential::new(m, a, lambda).map_err(Failure::Run)?;
            let prefactor = crate::potentials::dimensionless_prefactor(&pot)?;
            let epsilon = match method {
                MethodTag::AftHarmonic => {
                    aux.insert("rho0".into(), closed_form::rho0_harmonic(&pot, qn)?);
                    let rho0_dim = closed_form::rho0_harmonic(
                        &PowerLawPotential {
                            m: 2.0,
                            a: 1.0,
                            lambda,
                        },
                        qn,
                    )?;
                    if lambda != 2.0 {
                        aux.insert(
                            "r0".into(),
                            (2.0 * rho0_dim / lambda.abs()).powf(1.0 / (lambda - 2.0)),
                        );
                    }
                    closed_form::epsilon_harmonic(lambda, qn)?
                }
                MethodTag::AftCoulomb => {
                    aux.insert("rho0".into(), closed_form::rho0_coulomb(&pot, qn)?);
                    closed_form::epsilon_coulomb(lambda, qn)?
                }
                MethodTag::Wkb => {
                    if closed_form::is_extrapolation(lambda) {
                        aux.insert("extrapolation".into(), 1.0);
                    }
                    closed_form::wkb_epsilon(lambda, qn)?
                }
                MethodTag::Airy => {
                    if lambda != 1.0 || qn.ell != 0 {
                        return Err(Failure::Usage(
                            "the airy method applies to --lambda 1 with l = 0 only".into(),
                        ));
                    }
                    closed_form::airy_epsilon(qn.n)
                }
                MethodTag::Oracle => {
                    let slice = &oracle_slices[&qn.ell];
                    aux.insert(
                        "convergence".into(),
                        slice.convergence_estimates[qn.n as usize],
                    );
                    slice.eigenvalues[qn.n as usize]
                }
                improved => {
                    let family = improved.family().expect("remaining tags are families");
                    if closed_form::is_extrapolation(lambda) {
                        // calibrated on [-3/2, 4]; outside that the value
                        // is an extrapolation
                        aux.insert("extrapolation".into(), 1.0);
                    }
                    closed_form::improved_epsilon(lambda, qn, family)?
                }
            };
            let value = if spec.physical.is_some() {
                if method == MethodTag::AftHarmonic {
                    // identical to prefactor * epsilon; evaluated directly
                    closed_form::eh_energy(&pot, qn)?
                } else if method == MethodTag::AftCoulomb {
                    closed_form::ec_energy(&pot, qn)?
                } else {
                    prefactor * epsilon
                }
            } else {
                epsilon
            };
            Ok((value, aux))
        }
        DimensionlessPotential::Log => {
            let (m, a, b) = spec.physical.unwrap_or((2.0, 1.0, 1.0));
            let pot = LogPotential::new(m, a, b).map_err(Failure::Run)?;
            let value = match method {
                MethodTag::AftHarmonic => {
                    let n_h = qn.harmonic_combination();
                    let rho0 = m * a * a / (2.0 * n_h * n_h);
                    aux.insert("rho0".into(), rho0);
                    aux.insert("r0".into(), (a / (2.0 * rho0)).sqrt());
                    closed_form::log_energy(&pot, qn, SolvableBase::Harmonic)?
                }
                MethodTag::AftCoulomb => {
                    // rho0² = a (n+l+1)²/m
                    let n_c = qn.coulomb_combination();
                    let rho0 = n_c * (a / m).sqrt();
                    aux.insert("rho0".into(), rho0);
                    aux.insert("r0".into(), rho0 / a);
                    closed_form::log_energy(&pot, qn, SolvableBase::Coulomb)?
                }
                MethodTag::Oracle => {
                    let slice = &oracle_slices[&qn.ell];
                    aux.insert(
                        "convergence".into(),
                        slice.convergence_estimates[qn.n as usize],
                    );
                    let eps = slice.eigenvalues[qn.n as usize];
                    if spec.physical.is_some() {
                        closed_form::log_offset(&pot) + a * eps
                    } else {
                        eps
                    }
                }
                MethodTag::Wkb | MethodTag::Airy => {
                    return Err(Failure::Run(Error::Domain(
                        "no semiclassical branch exists for the logarithmic potential".into(),
                    )))
                }
                improved => {
                    let family = improved.family().expect("remaining tags are families");
                    if spec.physical.is_some() {
                        closed_form::improved_log_energy(&pot, qn, family)?
                    } else {
                        closed_form::improved_log_epsilon(qn, family)?
                    }
                }
            };
            // dimensionless aft values: physical formula at m = 2, a = b = 1
            let value = if spec.physical.is_none()
                && matches!(method, MethodTag::AftHarmonic | MethodTag::AftCoulomb)
            {
                let dim_pot = LogPotential::new(2.0, 1.0, 1.0).map_err(Failure::Run)?;
                let base = if method == MethodTag::AftHarmonic {
                    SolvableBase::Harmonic
                } else {
                    SolvableBase::Coulomb
                };
                closed_form::log_energy(&dim_pot, qn, base)?
            } else {
                value
            };
            Ok((value, aux))
        }
    }
}

fn render_err(digits: usize, value: &Result<f64, Error>) -> String {
    match value {
        Ok(v) => fmt_sig(*v, digits),
        Err(_) => "ERR".into(),
    }
}

fn cmd_table(args: &TableArgs, cfg: &RunConfig) -> Result<String, Failure> {
    let digits = args.digits.or(cfg.digits).unwrap_or(6);
    let mesh = args
        .mesh
        .or(cfg.mesh_size)
        .unwrap_or(oracle::DEFAULT_MESH_SIZE);
    let mut out = String::new();
    match args.which {
        1 => {
            let rows = tables::compute_table1(mesh);
            match args.format {
                OutputFormat::Csv | OutputFormat::Jsonl => {
                    out.push_str("lambda,method,value,reference,deviation\n");
                    for row in &rows {
                        let label = row.potential.label();
                        for (method, value, reference) in [
                            (
                                "improved-bc3",
                                &row.chi_hyperbola_airy,
                                Some(row.reference.chi_hyperbola_airy),
                            ),
                            (
                                "improved-bc4",
                                &row.chi_hyperbola_fit,
                                Some(row.reference.chi_hyperbola_fit),
                            ),
                            (
                                "wkb",
                                row.chi_wkb
                                    .as_ref()
                                    .unwrap_or(&Err(Error::Domain(String::new()))),
                                row.reference.chi_wkb,
                            ),
                        ] {
                            if method == "wkb" && row.chi_wkb.is_none() {
                                continue;
                            }
                            let dev = match (value, reference) {
                                (Ok(v), Some(r)) => fmt_sig(v - r, 3),
                                _ => String::new(),
                            };
                            let refs = reference.map_or(String::new(), |r| fmt_sig(r, digits));
                            let _ = writeln!(
                                out,
                                "{label},{method},{},{refs},{dev}",
                                render_err(digits, value)
                            );
                        }
                    }
                }
                OutputFormat::Text => {
                    let _ = writeln!(
                        out,
                        "{:<8}{:>12}{:>10}{:>12}{:>10}{:>12}{:>10}",
                        "lambda", "chi[bc3]", "ref", "chi[bc4]", "ref", "chi[wkb]", "ref"
                    );
                    for row in &rows {
                        let wkb = match &row.chi_wkb {
                            None => "-".to_string(),
                            Some(v) => render_err(digits, v),
                        };
                        let wkb_ref = row
                            .reference
                            .chi_wkb
                            .map_or("-".to_string(), |r| fmt_sig(r, 3));
                        let label = match row.potential {
                            DimensionlessPotential::Log => "log".to_string(),
                            DimensionlessPotential::PowerLaw(l) => fmt_sig(l, 4),
                        };
                        let _ = writeln!(
                            out,
                            "{:<8}{:>12}{:>10}{:>12}{:>10}{:>12}{:>10}",
                            label,
                            render_err(digits, &row.chi_hyperbola_airy),
                            fmt_sig(row.reference.chi_hyperbola_airy, 3),
                            render_err(digits, &row.chi_hyperbola_fit),
                            fmt_sig(row.reference.chi_hyperbola_fit, 3),
                            wkb,
                            wkb_ref,
                        );
                    }
                }
            }
        }
        2 => {
            type RefPick = fn(&tables::Table2Block) -> &[f64; 4];
            type MethodRow<'a> = (&'a str, &'a Vec<[Result<f64, Error>; 4]>, RefPick);
            let computed = tables::compute_table2(mesh);
            let reference = &tables::reference_tables().table2;
            let methods: [MethodRow; 4] = [
                ("oracle", &computed.numeric, |b| &b.numeric),
                ("improved-bc3", &computed.hyperbola_airy, |b| {
                    &b.hyperbola_airy
                }),
                ("improved-bc4", &computed.hyperbola_fit, |b| {
                    &b.hyperbola_fit
                }),
                ("wkb", &computed.wkb, |b| &b.wkb),
            ];
            match args.format {
                OutputFormat::Csv | OutputFormat::Jsonl => {
                    out.push_str("l,method,n,value,reference,deviation\n");
                    for block in &reference.blocks {
                        for (name, grid, pick) in &methods {
                            let refs = pick(block);
                            for n in 0..4 {
                                let value = &grid[block.ell as usize][n];
                                let dev = match value {
                                    Ok(v) => fmt_sig(v - refs[n], 3),
                                    Err(_) => String::new(),
                                };
                                let _ = writeln!(
                                    out,
                                    "{},{name},{n},{},{},{dev}",
                                    block.ell,
                                    render_err(digits, value),
                                    fmt_sig(refs[n], digits)
                                );
                            }
                        }
                    }
                }
                OutputFormat::Text => {
                    let _ = writeln!(
                        out,
                        "{:<4}{:<14}{:>10}{:>10}{:>10}{:>10}{:>12}",
                        "l", "method", "n=0", "n=1", "n=2", "n=3", "max|dev|"
                    );
                    for block in &reference.blocks {
                        for (name, grid, pick) in &methods {
                            let refs = pick(block);
                            let cells = &grid[block.ell as usize];
                            let max_dev = cells
                                .iter()
                                .zip(refs)
                                .filter_map(|(v, r)| v.as_ref().ok().map(|v| (v - r).abs()))
                                .fold(0.0_f64, f64::max);
                            let _ = writeln!(
                                out,
                                "{:<4}{:<14}{:>10}{:>10}{:>10}{:>10}{:>12}",
                                block.ell,
                                name,
                                render_err(digits, &cells[0]),
                                render_err(digits, &cells[1]),
                                render_err(digits, &cells[2]),
                                render_err(digits, &cells[3]),
                                fmt_sig(max_dev, 2),
                            );
                        }
                    }
                }
            }
        }
        _ => unreachable!("clap range"),
    }
    Ok(out)
}

/// λ grid for `fit --grid default`: -1.5 to 4 in steps of 1/4, with 0
/// standing for the logarithmic potential.
fn default_fit_grid() -> Vec<DimensionlessPotential> {
    let mut grid = Vec::new();
    let mut i = 0;
    loop {
        let lambda = -1.5 + 0.25 * f64::from(i);
        if lambda > 4.0 + 1e-9 {
            break;
        }
        if lambda.abs() < 1e-12 {
            grid.push(DimensionlessPotential::Log);
        } else {
            grid.push(DimensionlessPotential::PowerLaw(lambda));
        }
        i += 1;
    }
    grid
}

fn cmd_fit(args: &FitArgs, cfg: &RunConfig) -> Result<String, Failure> {
    let digits = args.digits.or(cfg.digits).unwrap_or(6);
    let mesh = args
        .mesh
        .or(cfg.mesh_size)
        .unwrap_or(oracle::DEFAULT_MESH_SIZE);

    let potentials: Vec<DimensionlessPotential> = if let Some(lambda) = args.lambda {
        vec![DimensionlessPotential::PowerLaw(lambda)]
    } else if args.log {
        vec![DimensionlessPotential::Log]
    } else {
        match args.grid.as_deref() {
            None | Some("default") => match &cfg.lambda_grid {
                Some(grid) => grid
                    .iter()
                    .map(|&l| {
                        if l == 0.0 {
                            DimensionlessPotential::Log
                        } else {
                            DimensionlessPotential::PowerLaw(l)
                        }
                    })
                    .collect(),
                None => default_fit_grid(),
            },
            Some("table1") => tables::table1_potentials(),
            Some(other) => {
                return Err(Failure::Usage(format!(
                    "unknown grid '{other}' (expected 'default' or 'table1')"
                )))
            }
        }
    };

    let mut results = Vec::new();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<8}{:>12}{:>12}{:>14}{:>8}",
        "lambda", "b", "c", "chi", "iters"
    );
    for &potential in &potentials {
        let grid = grid_for(potential, mesh);
        let fitted = fit::fit_bc(&grid)?;
        let _ = writeln!(
            out,
            "{:<8}{:>12}{:>12}{:>14}{:>8}",
            potential.label(),
            fmt_sig(fitted.b_opt, digits),
            fmt_sig(fitted.c_opt, digits),
            fmt_sig(fitted.chi, 3),
            fitted.iterations
        );
        results.push(fitted);
    }

    if results.len() >= 3 {
        let b_points: Vec<(f64, f64)> = results.iter().map(|r| (r.lambda(), r.b_opt)).collect();
        let c_points: Vec<(f64, f64)> = results.iter().map(|r| (r.lambda(), r.c_opt)).collect();
        let b_fit = fit::fit_hyperbola_constrained(&b_points, (-1.0, 1.0), (2.0, 2.0))?;
        let c_fit = fit::fit_hyperbola_constrained(&c_points, (-1.0, 1.0), (2.0, 1.5))?;
        let _ = writeln!(
            out,
            "\nfitted hyperbolae (denominator intercept normalized to 1):"
        );
        for (name, f) in [("b", &b_fit), ("c", &c_fit)] {
            let _ = writeln!(
                out,
                "  {name}(lambda) = ({} lambda + {}) / ({} lambda + 1)",
                fmt_sig(f.p_num.0, digits),
                fmt_sig(f.p_num.1, digits),
                fmt_sig(f.p_den.0, digits),
            );
        }
        if let Some(paths) = &args.emit_plot_data {
            write_plot_data(&paths[0], &results, true, digits)?;
            write_plot_data(&paths[1], &results, false, digits)?;
            let _ = writeln!(
                out,
                "\nplot data written to {} and {}",
                paths[0].display(),
                paths[1].display()
            );
        }
    } else if args.emit_plot_data.is_some() {
        return Err(Failure::Usage(
            "--emit-plot-data needs a lambda grid (use --grid)".into(),
        ));
    }
    Ok(out)
}

/// Columns: lambda, fitted optimum, then the linear and the two hyperbola
/// family predictions.
fn write_plot_data(
    path: &PathBuf,
    results: &[fit::FitResult],
    b_side: bool,
    digits: usize,
) -> Result<(), Failure> {
    let mut text = String::from("# lambda  optimal  linear  hyperbola-airy  hyperbola-fit\n");
    for r in results {
        let lambda = r.lambda();
        let optimal = if b_side { r.b_opt } else { r.c_opt };
        let mut row = format!("{:.4}  {}", lambda, fmt_sig(optimal, digits));
        for family in [
            CoeffFamily::Linear,
            CoeffFamily::HyperbolaAiry,
            CoeffFamily::HyperbolaFit,
        ] {
            let value = if b_side {
                family.b(lambda)
            } else {
                family.c(lambda)
            };
            match value {
                Ok(v) => {
                    let _ = write!(row, "  {}", fmt_sig(v, digits));
                }
                Err(_) => row.push_str("  -"),
            }
        }
        text.push_str(&row);
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn grid_for(potential: DimensionlessPotential, mesh: usize) -> ReferenceGrid {
    let slices: Vec<_> = (0..=fit::GRID_MAX)
        .map(|ell| {
            let problem = RadialProblem::auto(potential, ell, fit::GRID_MAX).mesh_size(mesh);
            oracle::solve_radial(&problem, fit::GRID_MAX).ok()
        })
        .collect();
    ReferenceGrid::from_fn(potential, |n, ell| {
        slices[ell as usize]
            .as_ref()
            .map(|s| s.eigenvalues[n as usize])
    })
}

fn cmd_bound(args: &BoundArgs, cfg: &RunConfig) -> Result<String, Failure> {
    let digits = args.digits.or(cfg.digits).unwrap_or(6);
    let mesh = args
        .mesh
        .or(cfg.mesh_size)
        .unwrap_or(oracle::DEFAULT_MESH_SIZE);
    let base: SolvableBase = args.base.into();

    let problem =
        RadialProblem::auto(DimensionlessPotential::PowerLaw(args.lambda), 0, 0).mesh_size(mesh);
    let eps_num = oracle::solve_radial(&problem, 0)?.eigenvalues[0];
    let report = error_bounds::ground_state_report(base, args.lambda, Some(eps_num))?;
    let solution = error_bounds::dimensionless_ground_solution(base, args.lambda)?;

    let mut out = String::new();
    let _ = writeln!(out, "lambda = {}, base = {}", args.lambda, base.label());
    let _ = writeln!(
        out,
        "approximate energy   E(rho0) = {}",
        fmt_sig(solution.energy, digits)
    );
    let _ = writeln!(
        out,
        "converged eigenvalue eps_num = {}",
        fmt_sig(eps_num, digits)
    );
    let _ = writeln!(
        out,
        "measured (E - eps_num)/|E|   = {}",
        fmt_sig(report.measured_relative.unwrap(), digits)
    );
    let _ = writeln!(
        out,
        "bound    (closed form)       = {}",
        fmt_sig(report.relative_bound, digits)
    );
    let _ = writeln!(
        out,
        "gap      V(r0) - <V>         = {}",
        fmt_sig(report.gap_rhs, digits)
    );
    let _ = writeln!(
        out,
        "inequality measured >= bound: {}",
        if report.bound_satisfied {
            "satisfied"
        } else {
            "violated"
        }
    );
    Ok(out)
}

fn cmd_oracle(args: &OracleArgs, cfg: &RunConfig) -> Result<String, Failure> {
    let digits = args.digits.or(cfg.digits).unwrap_or(6);
    let mesh = args
        .mesh
        .or(cfg.mesh_size)
        .unwrap_or(oracle::DEFAULT_MESH_SIZE);
    let potential = match (args.lambda, args.log) {
        (Some(lambda), false) => DimensionlessPotential::PowerLaw(lambda),
        (None, true) => DimensionlessPotential::Log,
        _ => {
            return Err(Failure::Usage(
                "specify the potential with --lambda X or --log".into(),
            ))
        }
    };
    let ells = parse_range(&args.l)?;
    let mut records = Vec::new();
    for &ell in &ells {
        let mut problem = match (args.cutoff, cfg.domain_cutoff) {
            (Some(c), _) | (None, Some(c)) => RadialProblem::with_cutoff(potential, ell, c),
            (None, None) => RadialProblem::auto(potential, ell, args.n_max),
        };
        problem = problem.mesh_size(mesh);
        let slice = oracle::solve_radial(&problem, args.n_max)?;
        for n in 0..=args.n_max {
            let mut aux = BTreeMap::new();
            aux.insert(
                "convergence".into(),
                slice.convergence_estimates[n as usize],
            );
            records.push(OutputRecord {
                method: "oracle".into(),
                lambda: potential.label(),
                n,
                ell,
                value: slice.eigenvalues[n as usize],
                aux,
            });
        }
    }
    records.sort_by(|a, b| (&a.method, a.n, a.ell).cmp(&(&b.method, b.n, b.ell)));
    Ok(output::render_records(&records, args.format, digits))
}
