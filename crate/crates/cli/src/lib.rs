//! `pade-roots` command line: argument parsing and subcommand dispatch.

pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pade_roots::lambert::{error_curve, w_eval, w_oracle, CurveStatus};
use pade_roots::physics::delta::{
    double_delta_energies_with, double_delta_residual, single_delta_residual, wavevector,
};
use pade_roots::physics::diffraction::relative_intensity;
use pade_roots::physics::wien::{peak_residual, DEFAULT_CONTOUR_NODES};
use pade_roots::physics::{
    diffraction_maxima, diffraction_profile, planck_profile, single_delta_even_energy, spring_frequency,
    spring_xi, wien_x0, PhysicalConstants, SpringSystem, WienMethod,
};
use pade_roots::trig::first_root_cot_closed;
use pade_roots::{EquationKind, Error, Method, TrigEquation, WBranch, WVariant};

use output::{fixed, sci, Format, Report, TableReport, ValueReport};

/// Decimals for root values and table cells.
const TABLE_DECIMALS: usize = 8;
/// Decimals for Wien and other physical scalars.
const FINE_DECIMALS: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "pade-roots", version, about = "Closed-form roots of tan x = kx, cot x = kx and Lambert W")]
struct Cli {
    /// Output format; scalar answers print a bare number when omitted, tables default to CSV.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One root of tan x = kx or cot x = kx.
    Roots(RootsArgs),
    /// Exact roots and signed errors of the three approximations, n = 1..rows.
    Table(TableArgs),
    /// A Lambert W value.
    Lambert(LambertArgs),
    /// log10 relative error of a W0 approximant over a grid.
    ErrorCurve(ErrorCurveArgs),
    /// Effective spring-mass coefficient or frequency.
    Spring(SpringArgs),
    /// Single-slit diffraction.
    Diffraction {
        #[command(subcommand)]
        command: DiffractionCommand,
    },
    /// Bound states with delta-function interactions.
    Delta {
        #[command(subcommand)]
        command: DeltaCommand,
    },
    /// Peak of the Planck spectrum.
    Wien(WienArgs),
    /// Planck spectral energy density over a wavelength grid.
    Planck(PlanckArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Tan,
    Cot,
}

impl From<KindArg> for EquationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tan => EquationKind::Tan,
            KindArg::Cot => EquationKind::Cot,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Pade,
    Frankel,
    Taylor,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Pade => Method::Pade,
            MethodArg::Frankel => Method::Frankel,
            MethodArg::Taylor => Method::Taylor,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct RootsArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    kappa: f64,
    /// Branch index; the root lies near (n + 1/2)pi for tan and n*pi for cot.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    method: MethodArg,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    kappa: f64,
    #[arg(long, default_value_t = 10)]
    rows: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BranchArg {
    #[value(name = "0")]
    Principal,
    #[value(name = "-1")]
    Lower,
}

impl From<BranchArg> for WBranch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Principal => WBranch::W0,
            BranchArg::Lower => WBranch::Wm1,
        }
    }
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct LambertArgs {
    #[arg(long)]
    x: f64,
    /// taylor:N, pade-i, pade-i-rounded, pade-ii, pade-ii-rounded or oracle.
    #[arg(long, default_value = "oracle")]
    variant: WVariant,
    /// Real branch; approximants exist for the principal branch only.
    #[arg(long, value_enum, default_value = "0")]
    branch: BranchArg,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct GridArgs {
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    points: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<Vec<f64>, Error> {
        if self.points == 0 || !self.from.is_finite() || !self.to.is_finite() {
            return Err(Error::InvalidArgument("grid needs finite bounds and at least one point".into()));
        }
        if self.points == 1 {
            return Ok(vec![self.from]);
        }
        let step = (self.to - self.from) / (self.points - 1) as f64;
        Ok((0..self.points)
            .map(|i| if i + 1 == self.points { self.to } else { self.from + step * i as f64 })
            .collect())
    }

    fn inputs(&self) -> Vec<(String, Value)> {
        vec![
            ("from".into(), json!(self.from)),
            ("to".into(), json!(self.to)),
            ("points".into(), json!(self.points)),
        ]
    }
}

#[derive(Args, Debug)]
struct ErrorCurveArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    variant: WVariant,
}

#[derive(Args, Debug)]
struct SpringArgs {
    /// Mass ratio m/m0.
    #[arg(long, conflicts_with_all = ["m", "m0", "k"], required_unless_present_all = ["m", "m0", "k"])]
    ratio: Option<f64>,
    /// Hung mass.
    #[arg(long, requires_all = ["m0", "k"])]
    m: Option<f64>,
    /// Spring mass.
    #[arg(long, requires_all = ["m", "k"])]
    m0: Option<f64>,
    /// Stiffness.
    #[arg(long, requires_all = ["m", "m0"])]
    k: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum DiffractionCommand {
    /// Positions and relative intensities of secondary maxima 1..n.
    Maxima {
        #[arg(long)]
        n: usize,
    },
    /// sin^2(u)/u^2 over a grid in u.
    Profile(GridArgs),
}

#[derive(Subcommand, Debug)]
enum DeltaCommand {
    /// Even level n of the infinite well with a critical central delta.
    Single {
        #[arg(long)]
        n: usize,
        /// Use the bisection root instead of the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Even and odd levels of two attractive deltas, s = a/b.
    Double {
        #[arg(long)]
        ratio: f64,
        #[arg(long, default_value = "oracle")]
        variant: WVariant,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WienMethodArg {
    Lambert,
    PadeIi,
    PadeIiRounded,
    Contour,
}

#[derive(Args, Debug)]
struct WienArgs {
    #[arg(long, value_enum, default_value = "lambert")]
    method: WienMethodArg,
    /// Quadrature nodes for the contour method.
    #[arg(long, default_value_t = DEFAULT_CONTOUR_NODES)]
    nodes: usize,
    /// Print the displacement constant hc/(k_B x0) in m K instead of x0.
    #[arg(long)]
    constant: bool,
}

#[derive(Args, Debug)]
struct PlanckArgs {
    /// Kelvin.
    #[arg(long)]
    temperature: f64,
    /// Wavelength grid in metres.
    #[command(flatten)]
    grid: GridArgs,
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code: 0 success, 1 domain or numerical error, 2 usage error.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let text = match report.render(cli.format) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 1;
    }
    0
}

fn execute(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Roots(a) => roots(a),
        Command::Table(a) => table(a),
        Command::Lambert(a) => lambert(a),
        Command::ErrorCurve(a) => curve(a),
        Command::Spring(a) => spring(a),
        Command::Diffraction { command } => diffraction(command),
        Command::Delta { command } => delta(command),
        Command::Wien(a) => wien(a),
        Command::Planck(a) => planck(a),
    }
}

fn roots(a: &RootsArgs) -> Result<Report, Error> {
    let eq = TrigEquation::new(a.kind.into(), a.kappa);
    let method: Method = a.method.into();
    let root = eq.root(method, a.n)?;
    Ok(Report::Value(ValueReport {
        inputs: vec![
            ("kind".into(), json!(EquationKind::from(a.kind).to_string())),
            ("kappa".into(), json!(a.kappa)),
            ("n".into(), json!(a.n)),
        ],
        method: method.to_string(),
        value: root.value,
        residual: Some(eq.residual(root.value)),
        decimals: TABLE_DECIMALS,
    }))
}

fn table(a: &TableArgs) -> Result<Report, Error> {
    let kind: EquationKind = a.kind.into();
    let eq = TrigEquation::new(kind, a.kappa);
    let rows = eq.error_table(a.rows)?;
    let (unit, scale) = match kind {
        EquationKind::Tan => ("1e-3", 1e3),
        EquationKind::Cot => ("1e-2", 1e2),
    };
    let ratio = match kind {
        EquationKind::Tan => "exact/pi",
        EquationKind::Cot => "exact/(n pi)",
    };
    let mut columns = vec!["n".to_string(), "exact".into(), ratio.into()];
    columns.extend(["pade", "frankel", "taylor"].map(|m| format!("{m} error [{unit}]")));
    let cell = |x: f64| fixed(x * scale, TABLE_DECIMALS);
    let residual = rows.iter().map(|r| eq.residual(r.exact).abs()).fold(0.0, f64::max);
    let rows = rows
        .iter()
        .map(|r| {
            vec![
                r.branch.to_string(),
                fixed(r.exact, TABLE_DECIMALS),
                fixed(r.ratio, TABLE_DECIMALS),
                cell(r.err_pade),
                r.err_frankel.map(cell).unwrap_or_default(),
                cell(r.err_taylor),
            ]
        })
        .collect();
    Ok(Report::Table(TableReport {
        inputs: vec![
            ("kind".into(), json!(kind.to_string())),
            ("kappa".into(), json!(a.kappa)),
            ("rows".into(), json!(a.rows)),
        ],
        method: "table".into(),
        columns,
        rows,
        residual: Some(residual),
    }))
}

fn lambert(a: &LambertArgs) -> Result<Report, Error> {
    let branch: WBranch = a.branch.into();
    let value = match (a.variant, branch) {
        (WVariant::Oracle, b) => w_oracle(a.x, b)?,
        (v, WBranch::W0) => w_eval(a.x, v)?,
        (v, WBranch::Wm1) => {
            return Err(Error::Unsupported(format!("variant {v} approximates the principal branch only")))
        }
    };
    Ok(Report::Value(ValueReport {
        inputs: vec![("x".into(), json!(a.x)), ("branch".into(), json!(branch.to_string()))],
        method: a.variant.to_string(),
        value,
        residual: Some(value * value.exp() - a.x),
        decimals: FINE_DECIMALS,
    }))
}

fn curve(a: &ErrorCurveArgs) -> Result<Report, Error> {
    let points = error_curve(&a.grid.grid()?, a.variant)?;
    let rows = points
        .iter()
        .map(|p| {
            let status = match p.status {
                CurveStatus::Ok => "ok",
                CurveStatus::ZeroArgument => "zero-argument",
                CurveStatus::OutOfRange => "out-of-range",
                CurveStatus::Undefined => "undefined",
            };
            vec![fixed(p.x, TABLE_DECIMALS), p.delta.map(|d| fixed(d, TABLE_DECIMALS)).unwrap_or_default(), status.into()]
        })
        .collect();
    let mut inputs = a.grid.inputs();
    inputs.push(("variant".into(), json!(a.variant.to_string())));
    Ok(Report::Table(TableReport {
        inputs,
        method: a.variant.to_string(),
        columns: vec!["x".into(), "log10_relative_error".into(), "status".into()],
        rows,
        residual: None,
    }))
}

fn spring(a: &SpringArgs) -> Result<Report, Error> {
    if let Some(r) = a.ratio {
        let xi = spring_xi(r)?;
        let eta = first_root_cot_closed(r)?.value;
        return Ok(Report::Value(ValueReport {
            inputs: vec![("ratio".into(), json!(r))],
            method: "xi".into(),
            value: xi,
            residual: Some(TrigEquation::cot(r).residual(eta)),
            decimals: FINE_DECIMALS,
        }));
    }
    let (m, m0, k) = match (a.m, a.m0, a.k) {
        (Some(m), Some(m0), Some(k)) => (m, m0, k),
        _ => return Err(Error::InvalidArgument("give --ratio or all of --m, --m0, --k".into())),
    };
    let system = SpringSystem::new(m, m0, k)?;
    Ok(Report::Value(ValueReport {
        inputs: vec![("m".into(), json!(m)), ("m0".into(), json!(m0)), ("k".into(), json!(k))],
        method: "omega".into(),
        value: spring_frequency(&system)?,
        residual: None,
        decimals: FINE_DECIMALS,
    }))
}

fn diffraction(c: &DiffractionCommand) -> Result<Report, Error> {
    match c {
        DiffractionCommand::Maxima { n } => {
            if *n == 0 {
                return Err(Error::InvalidArgument("--n must be at least 1".into()));
            }
            let rows = (1..=*n)
                .map(|k| {
                    let (u, ratio) = diffraction_maxima(k)?;
                    Ok(vec![
                        k.to_string(),
                        fixed(u, TABLE_DECIMALS),
                        fixed(ratio, TABLE_DECIMALS),
                        fixed(relative_intensity(u), TABLE_DECIMALS),
                        format!("{:.1}", 100.0 * ratio),
                    ])
                })
                .collect::<Result<_, Error>>()?;
            Ok(Report::Table(TableReport {
                inputs: vec![("n".into(), json!(n))],
                method: "pade".into(),
                columns: ["n", "u", "ratio", "sinc2_at_u", "percent"].map(String::from).to_vec(),
                rows,
                residual: None,
            }))
        }
        DiffractionCommand::Profile(g) => {
            let rows = diffraction_profile(&g.grid()?)
                .into_iter()
                .map(|(u, i)| vec![fixed(u, TABLE_DECIMALS), fixed(i, TABLE_DECIMALS)])
                .collect();
            Ok(Report::Table(TableReport {
                inputs: g.inputs(),
                method: "sinc2".into(),
                columns: vec!["u".into(), "relative_intensity".into()],
                rows,
                residual: None,
            }))
        }
    }
}

fn delta(c: &DeltaCommand) -> Result<Report, Error> {
    match c {
        DeltaCommand::Single { n, oracle } => {
            let energy = single_delta_even_energy(*n, !oracle)?;
            Ok(Report::Value(ValueReport {
                inputs: vec![("n".into(), json!(n))],
                method: if *oracle { "oracle" } else { "pade" }.into(),
                value: energy,
                residual: Some(single_delta_residual((energy / 2.0).max(0.0).sqrt())),
                decimals: FINE_DECIMALS,
            }))
        }
        DeltaCommand::Double { ratio, variant } => {
            let e = double_delta_energies_with(*ratio, *variant)?;
            let mut rows = Vec::new();
            let mut worst: f64 = 0.0;
            for (state, energy, even) in [("even", Some(e.even), true), ("odd", e.odd, false)] {
                let Some(energy) = energy else { continue };
                let k = wavevector(energy);
                let r = double_delta_residual(*ratio, k, even);
                worst = worst.max(r.abs());
                rows.push(vec![state.into(), fixed(energy, FINE_DECIMALS), fixed(k, FINE_DECIMALS), format!("{r:.3e}")]);
            }
            Ok(Report::Table(TableReport {
                inputs: vec![("ratio".into(), json!(ratio))],
                method: variant.to_string(),
                columns: ["state", "energy", "k", "residual"].map(String::from).to_vec(),
                rows,
                residual: Some(worst),
            }))
        }
    }
}

fn wien(a: &WienArgs) -> Result<Report, Error> {
    let method = match a.method {
        WienMethodArg::Lambert => WienMethod::LambertOracle,
        WienMethodArg::PadeIi => WienMethod::PadeII,
        WienMethodArg::PadeIiRounded => WienMethod::PadeIIRounded,
        WienMethodArg::Contour => WienMethod::Contour(a.nodes),
    };
    let x0 = wien_x0(method)?;
    let consts = PhysicalConstants::CODATA_2018;
    let (value, method_name) = if a.constant {
        (consts.h * consts.c / (consts.k_b * x0), format!("{method} constant"))
    } else {
        (x0, method.to_string())
    };
    Ok(Report::Value(ValueReport {
        inputs: vec![("method".into(), json!(method.to_string()))],
        method: method_name,
        value,
        residual: Some(peak_residual(x0)),
        decimals: FINE_DECIMALS,
    }))
}

fn planck(a: &PlanckArgs) -> Result<Report, Error> {
    let rows = planck_profile(&a.grid.grid()?, a.temperature, &PhysicalConstants::CODATA_2018)?
        .into_iter()
        .map(|(l, u)| vec![sci(l), sci(u)])
        .collect();
    let mut inputs = vec![("temperature".into(), json!(a.temperature))];
    inputs.extend(a.grid.inputs());
    Ok(Report::Table(TableReport {
        inputs,
        method: "planck".into(),
        columns: vec!["wavelength_m".into(), "energy_density_J_per_m4".into()],
        rows,
        residual: None,
    }))
}
