//! Command-line surface: `roegen carnot | vdw | catastrophe`.
//!
//! Scenarios come from an optional TOML file (`--config`, key = value
//! sections per module) with flag overrides on top. Outputs are
//! deterministic: identical configuration yields byte-identical files.
//!
//! Exit codes: 0 success, 1 input or domain error (nothing written),
//! 2 numeric validation failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::carnot::{self, CarnotSpec};
use crate::catastrophe;
use crate::emit;
use crate::error::Error;
use crate::state::{IdealIncomeModel, StatePoint, VdWModel};

/// Scaled cusp-equation residual accepted by `catastrophe --check`.
pub const CHECK_RESIDUAL_LIMIT: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "roegen",
    version,
    about = "Economic Carnot cycles, the economic Van der Waals equation, and the cusp catastrophe map"
)]
pub struct Cli {
    /// Scenario file (TOML; sections [model], [carnot], [vdw], [catastrophe])
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Directory for emitted CSV / JSON / SVG files
    #[arg(long, global = true, value_name = "DIR", default_value = ".")]
    out: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and validate the four-leg economic Carnot cycle
    Carnot(CarnotArgs),
    /// Van der Waals equation of state tools
    #[command(subcommand)]
    Vdw(VdwCommand),
    /// Map states onto cusp coordinates, grid the bifurcation set, or verify
    /// the surface correspondence
    Catastrophe(CatastropheArgs),
}

#[derive(Debug, Args)]
struct CarnotArgs {
    /// Hot reservoir stability I_H
    #[arg(long = "I-hot")]
    stability_hot: Option<f64>,
    /// Cold reservoir stability I_C
    #[arg(long = "I-cold")]
    stability_cold: Option<f64>,
    /// Volume Q_1 at vertex 1
    #[arg(long = "Q1")]
    volume_start: Option<f64>,
    /// Volume Q_2 at vertex 2
    #[arg(long = "Q2")]
    volume_expanded: Option<f64>,
    /// Samples per leg
    #[arg(long)]
    samples: Option<usize>,
    /// Economic moles n
    #[arg(long)]
    moles: Option<f64>,
    /// Molar income constant R
    #[arg(long = "R")]
    income_constant: Option<f64>,
    /// Degrees of freedom f (3, 5, or 6)
    #[arg(long = "f")]
    degrees_of_freedom: Option<u32>,
    /// Emit the reversed (consumption) cycle
    #[arg(long)]
    reverse: bool,
    /// Also write static SVG diagrams
    #[arg(long)]
    svg: bool,
}

#[derive(Debug, Subcommand)]
enum VdwCommand {
    /// Print the critical point and the stationary-inflection diagnostics
    Critical(VdwModelArgs),
    /// Sample one iso-ips, raw or Maxwell-corrected, to CSV
    Isotherm(VdwIsothermArgs),
    /// Solve the equal-area construction and print the coexistence JSON
    Maxwell(VdwMaxwellArgs),
    /// Sample the (Q, I) price surface to CSV
    Surface(VdwSurfaceArgs),
}

#[derive(Debug, Args)]
struct VdwModelArgs {
    /// Cohesion parameter a
    #[arg(long)]
    a: Option<f64>,
    /// Excluded volume b
    #[arg(long)]
    b: Option<f64>,
    /// Universal income constant R
    #[arg(long = "R")]
    income_constant: Option<f64>,
    /// Mole count n
    #[arg(long)]
    moles: Option<f64>,
}

#[derive(Debug, Args)]
struct VdwIsothermArgs {
    #[command(flatten)]
    model: VdwModelArgs,
    /// Absolute stability I
    #[arg(long = "I", conflicts_with = "stability_reduced")]
    stability: Option<f64>,
    /// Stability as a multiple of the critical stability
    #[arg(long = "I-reduced")]
    stability_reduced: Option<f64>,
    #[arg(long = "Q-min")]
    volume_min: Option<f64>,
    #[arg(long = "Q-max")]
    volume_max: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Replace the coexistence interval by the flat tie line
    #[arg(long)]
    corrected: bool,
}

#[derive(Debug, Args)]
struct VdwMaxwellArgs {
    #[command(flatten)]
    model: VdwModelArgs,
    /// Absolute stability I
    #[arg(long = "I", conflicts_with = "stability_reduced")]
    stability: Option<f64>,
    /// Stability as a multiple of the critical stability
    #[arg(long = "I-reduced")]
    stability_reduced: Option<f64>,
}

#[derive(Debug, Args)]
struct VdwSurfaceArgs {
    #[command(flatten)]
    model: VdwModelArgs,
    #[arg(long = "Q-min")]
    volume_min: Option<f64>,
    #[arg(long = "Q-max")]
    volume_max: Option<f64>,
    /// Volume grid points
    #[arg(long = "grid-Q")]
    volume_count: Option<usize>,
    /// Lowest stability, as a multiple of the critical stability
    #[arg(long = "I-reduced-min")]
    stability_reduced_min: Option<f64>,
    /// Highest stability, as a multiple of the critical stability
    #[arg(long = "I-reduced-max")]
    stability_reduced_max: Option<f64>,
    /// Stability grid points
    #[arg(long = "grid-I")]
    stability_count: Option<usize>,
}

#[derive(Debug, Args)]
struct CatastropheArgs {
    #[command(flatten)]
    model: VdwModelArgs,
    /// Map one state, given as "P,Q,I"
    #[arg(long, value_name = "P,Q,I", conflicts_with_all = ["grid", "check"])]
    state: Option<String>,
    /// Write the (alpha, beta, root-count) bifurcation grid
    #[arg(long, conflicts_with = "check")]
    grid: bool,
    /// Verify the cusp equation over sampled surface states (the default)
    #[arg(long)]
    check: bool,
    /// Sample count for --check
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    alpha_min: Option<f64>,
    #[arg(long)]
    alpha_max: Option<f64>,
    #[arg(long)]
    grid_alpha: Option<usize>,
    #[arg(long)]
    beta_min: Option<f64>,
    #[arg(long)]
    beta_max: Option<f64>,
    #[arg(long)]
    grid_beta: Option<usize>,
}

// ---------------------------------------------------------------------------
// scenario file

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    model: ModelSection,
    carnot: CarnotSection,
    vdw: VdwSection,
    catastrophe: CatastropheSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ModelSection {
    n: Option<f64>,
    #[serde(rename = "R")]
    income_constant: Option<f64>,
    f: Option<u32>,
    #[serde(rename = "Q_ref")]
    volume_ref: Option<f64>,
    #[serde(rename = "I_ref")]
    stability_ref: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct CarnotSection {
    #[serde(rename = "I_H")]
    stability_hot: Option<f64>,
    #[serde(rename = "I_C")]
    stability_cold: Option<f64>,
    #[serde(rename = "Q_1")]
    volume_start: Option<f64>,
    #[serde(rename = "Q_2")]
    volume_expanded: Option<f64>,
    samples_per_leg: Option<usize>,
    reverse: Option<bool>,
    svg: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct VdwSection {
    a: Option<f64>,
    b: Option<f64>,
    #[serde(rename = "R")]
    income_constant: Option<f64>,
    n: Option<f64>,
    isotherm: VdwIsothermSection,
    maxwell: VdwMaxwellSection,
    surface: VdwSurfaceSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct VdwIsothermSection {
    #[serde(rename = "I")]
    stability: Option<f64>,
    #[serde(rename = "I_reduced")]
    stability_reduced: Option<f64>,
    #[serde(rename = "Q_min")]
    volume_min: Option<f64>,
    #[serde(rename = "Q_max")]
    volume_max: Option<f64>,
    samples: Option<usize>,
    corrected: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct VdwMaxwellSection {
    #[serde(rename = "I")]
    stability: Option<f64>,
    #[serde(rename = "I_reduced")]
    stability_reduced: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct VdwSurfaceSection {
    #[serde(rename = "Q_min")]
    volume_min: Option<f64>,
    #[serde(rename = "Q_max")]
    volume_max: Option<f64>,
    #[serde(rename = "grid_Q")]
    volume_count: Option<usize>,
    #[serde(rename = "I_reduced_min")]
    stability_reduced_min: Option<f64>,
    #[serde(rename = "I_reduced_max")]
    stability_reduced_max: Option<f64>,
    #[serde(rename = "grid_I")]
    stability_count: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct CatastropheSection {
    samples: Option<usize>,
    alpha_min: Option<f64>,
    alpha_max: Option<f64>,
    grid_alpha: Option<usize>,
    beta_min: Option<f64>,
    beta_max: Option<f64>,
    grid_beta: Option<usize>,
}

fn load_config(path: Option<&Path>) -> Result<FileConfig, String> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            toml::from_str(&text).map_err(|e| format!("malformed config {}: {e}", p.display()))
        }
    }
}

/// Parses arguments from the environment, runs the command, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version are successful terminations, everything else
            // is an input error
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, String> {
    let config = load_config(cli.config.as_deref())?;
    match &cli.command {
        Command::Carnot(args) => run_carnot(&config, args, &cli.out),
        Command::Vdw(VdwCommand::Critical(args)) => run_vdw_critical(&config, args),
        Command::Vdw(VdwCommand::Isotherm(args)) => run_vdw_isotherm(&config, args, &cli.out),
        Command::Vdw(VdwCommand::Maxwell(args)) => run_vdw_maxwell(&config, args),
        Command::Vdw(VdwCommand::Surface(args)) => run_vdw_surface(&config, args, &cli.out),
        Command::Catastrophe(args) => run_catastrophe(&config, args, &cli.out),
    }
}

fn lib_err(e: Error) -> String {
    e.to_string()
}

fn ideal_model(config: &FileConfig, args: &CarnotArgs) -> Result<IdealIncomeModel, String> {
    let section = &config.model;
    IdealIncomeModel::with_reference(
        args.moles.or(section.n).unwrap_or(1.0),
        args.income_constant
            .or(section.income_constant)
            .unwrap_or(1.0),
        args.degrees_of_freedom.or(section.f).unwrap_or(3),
        section.volume_ref.unwrap_or(1.0),
        section.stability_ref.unwrap_or(1.0),
    )
    .map_err(lib_err)
}

fn vdw_model(config: &FileConfig, args: &VdwModelArgs) -> Result<VdWModel, String> {
    let section = &config.vdw;
    VdWModel::new(
        args.a.or(section.a).unwrap_or(27.0),
        args.b.or(section.b).unwrap_or(1.0),
        args.income_constant
            .or(section.income_constant)
            .unwrap_or(8.0),
        args.moles.or(section.n).unwrap_or(1.0),
    )
    .map_err(lib_err)
}

fn write_file(out_dir: &Path, name: &str, contents: &str) -> Result<PathBuf, String> {
    fs::create_dir_all(out_dir)
        .map_err(|e| format!("cannot create output directory {}: {e}", out_dir.display()))?;
    let path = out_dir.join(name);
    fs::write(&path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    Ok(path)
}

fn run_carnot(config: &FileConfig, args: &CarnotArgs, out_dir: &Path) -> Result<i32, String> {
    let model = ideal_model(config, args)?;
    let section = &config.carnot;
    let spec = CarnotSpec::new(
        model,
        args.stability_hot
            .or(section.stability_hot)
            .unwrap_or(2.0),
        args.stability_cold
            .or(section.stability_cold)
            .unwrap_or(1.0),
        args.volume_start.or(section.volume_start).unwrap_or(1.0),
        args.volume_expanded
            .or(section.volume_expanded)
            .unwrap_or(std::f64::consts::E),
        args.samples.or(section.samples_per_leg).unwrap_or(1000),
    )
    .map_err(lib_err)?;

    let reverse = args.reverse || section.reverse.unwrap_or(false);
    let svg = args.svg || section.svg.unwrap_or(false);

    let mut report = carnot::build_cycle(&spec).map_err(lib_err)?;
    if reverse {
        report = carnot::reverse_cycle(&report);
    }
    let diagnostics = carnot::validate_cycle(&report);

    let mut written = vec![
        write_file(out_dir, "cycle_qp.csv", &emit::cycle_trace_csv(&report))?,
        write_file(out_dir, "cycle_ei.csv", &emit::cycle_entropy_csv(&report))?,
        write_file(out_dir, "cycle_report.json", &emit::json_line(&report))?,
    ];
    if svg {
        written.push(write_file(out_dir, "cycle_qp.svg", &emit::cycle_qp_svg(&report))?);
        written.push(write_file(out_dir, "cycle_ei.svg", &emit::cycle_ei_svg(&report))?);
    }

    let mut summary = String::new();
    let _ = writeln!(
        summary,
        "economic Carnot cycle{} ({})",
        if reverse { " (reversed)" } else { "" },
        spec.model()
    );
    let _ = writeln!(
        summary,
        "  I_H = {}  I_C = {}  Q_1 = {}  Q_2 = {}  samples/leg = {}",
        spec.stability_hot(),
        spec.stability_cold(),
        spec.volume_start(),
        spec.volume_expanded(),
        spec.samples_per_leg()
    );
    let _ = writeln!(summary, "  W    = {:.6}", report.wealth());
    let _ = writeln!(summary, "  q_H  = {:.6}", report.goods_absorbed());
    let _ = writeln!(summary, "  q_C  = {:.6}", report.goods_rejected());
    let _ = writeln!(summary, "  eta  = {:.6}", report.eta());
    let _ = writeln!(summary, "  E_A  = {:.6}", report.entropy_low());
    let _ = writeln!(summary, "  E_B  = {:.6}", report.entropy_high());
    let _ = writeln!(
        summary,
        "  residuals: dG loop = {:.3e} (limit {:.3e}), area match = {:.3e} (limit {:.3e}), first law = {:.3e} (limit {:.3e})",
        diagnostics.growth_closure,
        diagnostics.growth_limit,
        diagnostics.area_mismatch,
        diagnostics.area_limit,
        diagnostics.first_law,
        diagnostics.first_law_limit,
    );
    let _ = writeln!(
        summary,
        "  validation: {}",
        if diagnostics.pass { "PASS" } else { "FAIL" }
    );
    let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    let _ = writeln!(summary, "  wrote: {}", names.join(", "));
    print!("{summary}");

    Ok(if diagnostics.pass { 0 } else { 2 })
}

fn run_vdw_critical(config: &FileConfig, args: &VdwModelArgs) -> Result<i32, String> {
    let model = vdw_model(config, args)?;
    let diagnostics = model.verify_critical();
    let c = diagnostics.critical;
    println!(
        "critical point: P_c = {}  Q_c = {}  I_c = {}",
        c.price(),
        c.volume(),
        c.stability()
    );
    println!(
        "dP/dQ at critical   = {:e} (scaled residual {:e})",
        diagnostics.slope, diagnostics.slope_residual
    );
    println!(
        "d2P/dQ2 at critical = {:e} (scaled residual {:e})",
        diagnostics.curvature, diagnostics.curvature_residual
    );
    println!(
        "stationary inflection: {}",
        if diagnostics.pass { "PASS" } else { "FAIL" }
    );
    Ok(if diagnostics.pass { 0 } else { 2 })
}

fn resolve_stability(
    model: &VdWModel,
    absolute: Option<f64>,
    reduced: Option<f64>,
    fallback_reduced: f64,
) -> f64 {
    match (absolute, reduced) {
        (Some(i), _) => i,
        (None, Some(r)) => model.stability_from_reduced(r),
        (None, None) => model.stability_from_reduced(fallback_reduced),
    }
}

fn run_vdw_isotherm(
    config: &FileConfig,
    args: &VdwIsothermArgs,
    out_dir: &Path,
) -> Result<i32, String> {
    let model = vdw_model(config, &args.model)?;
    let section = &config.vdw.isotherm;
    let stability = resolve_stability(
        &model,
        args.stability.or(section.stability),
        args.stability_reduced.or(section.stability_reduced),
        0.9,
    );
    let volume_min = args
        .volume_min
        .or(section.volume_min)
        .unwrap_or(1.2 * model.covolume());
    let volume_max = args
        .volume_max
        .or(section.volume_max)
        .unwrap_or(12.0 * model.covolume());
    let samples = args.samples.or(section.samples).unwrap_or(400);
    let corrected = args.corrected || section.corrected.unwrap_or(false);

    let path = model
        .isotherm_path(stability, volume_min, volume_max, samples, corrected)
        .map_err(lib_err)?;
    let file = write_file(out_dir, "vdw_isotherm.csv", &emit::vdw_isotherm_csv(&path))?;

    println!(
        "vdw isotherm ({}) at I = {} ({}), {} samples on [{}, {}]",
        model,
        stability,
        if corrected { "corrected" } else { "raw" },
        samples,
        volume_min,
        volume_max
    );
    if corrected && model.is_subcritical(stability) {
        let coexistence = model.maxwell_construction(stability).map_err(lib_err)?;
        println!(
            "tie line: P_sat = {}  Q_lo = {}  Q_hi = {}",
            coexistence.saturation_price(),
            coexistence.volume_low(),
            coexistence.volume_high()
        );
    }
    println!("wrote: {}", file.display());
    Ok(0)
}

fn run_vdw_maxwell(config: &FileConfig, args: &VdwMaxwellArgs) -> Result<i32, String> {
    let model = vdw_model(config, &args.model)?;
    let section = &config.vdw.maxwell;
    let stability = resolve_stability(
        &model,
        args.stability.or(section.stability),
        args.stability_reduced.or(section.stability_reduced),
        0.9,
    );
    let coexistence = model.maxwell_construction(stability).map_err(lib_err)?;
    print!("{}", emit::json_pretty(&coexistence));
    Ok(0)
}

fn run_vdw_surface(
    config: &FileConfig,
    args: &VdwSurfaceArgs,
    out_dir: &Path,
) -> Result<i32, String> {
    let model = vdw_model(config, &args.model)?;
    let section = &config.vdw.surface;
    let volume_min = args
        .volume_min
        .or(section.volume_min)
        .unwrap_or(1.5 * model.covolume());
    let volume_max = args
        .volume_max
        .or(section.volume_max)
        .unwrap_or(12.0 * model.covolume());
    let volume_count = args.volume_count.or(section.volume_count).unwrap_or(40);
    let reduced_min = args
        .stability_reduced_min
        .or(section.stability_reduced_min)
        .unwrap_or(0.85);
    let reduced_max = args
        .stability_reduced_max
        .or(section.stability_reduced_max)
        .unwrap_or(1.15);
    let stability_count = args
        .stability_count
        .or(section.stability_count)
        .unwrap_or(7);

    let rows = model
        .pressure_grid(
            volume_min,
            volume_max,
            volume_count,
            model.stability_from_reduced(reduced_min),
            model.stability_from_reduced(reduced_max),
            stability_count,
        )
        .map_err(lib_err)?;
    let file = write_file(out_dir, "vdw_surface.csv", &emit::surface_csv(&rows))?;
    println!(
        "vdw surface grid ({}): {} x {} samples, reduced I in [{}, {}]",
        model, volume_count, stability_count, reduced_min, reduced_max
    );
    println!("wrote: {}", file.display());
    Ok(0)
}

fn run_catastrophe(
    config: &FileConfig,
    args: &CatastropheArgs,
    out_dir: &Path,
) -> Result<i32, String> {
    let model = vdw_model(config, &args.model)?;
    let section = &config.catastrophe;

    if let Some(state_text) = &args.state {
        let state = parse_state(state_text)?;
        let coords = catastrophe::phi(&model, &state);
        println!("x = {}", coords.x());
        println!("alpha = {}", coords.alpha());
        println!("beta = {}", coords.beta());
        println!(
            "surface residual = {}",
            catastrophe::surface_residual(&coords)
        );
        return Ok(0);
    }

    if args.grid {
        let rows = catastrophe::bifurcation_grid(
            args.alpha_min.or(section.alpha_min).unwrap_or(-2.0),
            args.alpha_max.or(section.alpha_max).unwrap_or(2.0),
            args.grid_alpha.or(section.grid_alpha).unwrap_or(81),
            args.beta_min.or(section.beta_min).unwrap_or(-2.0),
            args.beta_max.or(section.beta_max).unwrap_or(2.0),
            args.grid_beta.or(section.grid_beta).unwrap_or(81),
        )
        .map_err(lib_err)?;
        let file = write_file(out_dir, "cusp_grid.csv", &emit::bifurcation_csv(&rows))?;
        println!("cusp bifurcation grid: {} points", rows.len());
        println!("wrote: {}", file.display());
        return Ok(0);
    }

    // default mode: verify the surface correspondence on sampled states
    let samples = args.samples.or(section.samples).unwrap_or(1000);
    if samples == 0 {
        return Err("check needs at least one sample".to_string());
    }
    let max_residual = check_surface(&model, samples);
    println!(
        "checked {samples} surface states: max scaled residual = {max_residual:.3e} (limit {CHECK_RESIDUAL_LIMIT:.0e})"
    );
    if max_residual <= CHECK_RESIDUAL_LIMIT {
        println!("PASS");
        Ok(0)
    } else {
        println!("FAIL");
        Ok(2)
    }
}

/// Deterministic low-discrepancy sweep over reduced (Q, I) with positive
/// prices, no RNG involved.
fn check_surface(model: &VdWModel, samples: usize) -> f64 {
    let critical = model.critical_point();
    let (q_lo, q_hi) = (0.45_f64, 8.0_f64);
    let (i_lo, i_hi) = (0.55_f64, 2.5_f64);
    let (log_q_lo, log_q_span) = (q_lo.ln(), (q_hi / q_lo).ln());
    let (log_i_lo, log_i_span) = (i_lo.ln(), (i_hi / i_lo).ln());
    // R2 sequence multipliers
    const A1: f64 = 0.754_877_666_246_692_8;
    const A2: f64 = 0.569_840_290_998_053_2;

    let mut max_residual: f64 = 0.0;
    let mut accepted = 0usize;
    let mut k = 0usize;
    while accepted < samples {
        k += 1;
        let t1 = (k as f64 * A1).fract();
        let t2 = (k as f64 * A2).fract();
        let volume = critical.volume() * (log_q_lo + t1 * log_q_span).exp();
        let stability = critical.stability() * (log_i_lo + t2 * log_i_span).exp();
        let price = match model.pressure(volume, stability) {
            Ok(p) if p > 0.0 && p.is_finite() => p,
            _ => continue,
        };
        accepted += 1;
        let state = StatePoint::new(price, volume, stability).expect("sampled state is positive");
        let coords = catastrophe::phi(model, &state);
        let scale = coords
            .x()
            .abs()
            .powi(3)
            .max((coords.alpha() * coords.x()).abs())
            .max(coords.beta().abs())
            .max(1.0);
        let residual = catastrophe::surface_residual(&coords).abs() / scale;
        max_residual = max_residual.max(residual);
    }
    max_residual
}

fn parse_state(text: &str) -> Result<StatePoint, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("state must be \"P,Q,I\", got \"{text}\""));
    }
    let mut values = [0.0_f64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|e| format!("cannot parse \"{part}\" as a number: {e}"))?;
    }
    StatePoint::new(values[0], values[1], values[2]).map_err(lib_err)
}
