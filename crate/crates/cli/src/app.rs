//! Argument parsing and subcommand dispatch.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kforge_core::closed_forms::{lookup_generator, reference_table, weyl_poincare_references, PhysicalBasis};
use kforge_core::dispersion::{write_csv, write_json, DispersionFamily, DispersionModel};
use kforge_core::gauss::parse_rational;
use kforge_core::hopf::DeformedHopf;
use kforge_core::lie::{check_so_n1_isomorphism, kappa_extended};
use kforge_core::realization::{build_generators, derive_functions, RealizationSpec, Side};
use kforge_core::twist::{build_twist, TwistSpec};
use kforge_core::{Error, Rational, DEFAULT_DIM, DEFAULT_ORDER};

use crate::expr::{parse_poly, ParseError};
use crate::verify::{self, Suite};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_IO: i32 = 5;
pub const EXIT_INTERNAL: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "kforge", version, about = "Twisted kappa-Minkowski computer algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites over one twist or the whole grid.
    Verify(VerifyArgs),
    /// Star product of two polynomials.
    Star(StarArgs),
    /// Deformed coproduct and antipode of a generator.
    Coproduct(CoproductArgs),
    /// Functions and operators of the realization a twist induces.
    Realization(RealizationArgs),
    /// Dispersion table on a momentum grid.
    Dispersion(DispersionArgs),
    /// Map of the extended algebra onto so(n,1).
    Isomorphism(IsomorphismArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Jordanian,
    Abelian,
}

#[derive(Debug, Args)]
pub struct TwistArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Exact rational `r` or `s`, e.g. `-1`, `1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub param: String,
    #[arg(long, default_value_t = DEFAULT_DIM)]
    pub dim: usize,
    /// Truncation order; defaults to $KFORGE_ORDER or 6.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Omit together with --param to run the full grid.
    #[arg(long, value_enum, requires = "param")]
    pub family: Option<FamilyArg>,
    /// Exact rational `r` or `s`.
    #[arg(long, allow_hyphen_values = true, requires = "family")]
    pub param: Option<String>,
    #[arg(long, default_value_t = DEFAULT_DIM)]
    pub dim: usize,
    /// Truncation order; defaults to $KFORGE_ORDER or 6.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StarArgs {
    #[command(flatten)]
    pub twist: TwistArgs,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Args)]
pub struct CoproductArgs {
    #[command(flatten)]
    pub twist: TwistArgs,
    /// A generator name such as `P0`, `L1_0`, `D`; at `n = 4` also the physical `N1`, `M3`.
    #[arg(long)]
    pub generator: String,
}

#[derive(Debug, Args)]
pub struct RealizationArgs {
    #[command(flatten)]
    pub twist: TwistArgs,
    #[arg(long, value_enum)]
    pub side: SideArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Abelian,
    Jordanian,
    Minimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct DispersionArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Decimal `s` or `r`; not used by `minimal`.
    #[arg(long, allow_hyphen_values = true)]
    pub param: Option<f64>,
    #[arg(long)]
    pub kappa: f64,
    /// `k0=START:STOP:STEP,knorm=VALUE`; each axis is a value or a range.
    #[arg(long)]
    pub grid: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_DIM)]
    pub dim: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IsomorphismArgs {
    #[arg(long, default_value_t = DEFAULT_DIM)]
    pub dim: usize,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub tau: i8,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DomainViolation(_) | Error::NoSignChange(..) => EXIT_DOMAIN,
            Error::Io(_) => EXIT_IO,
            Error::InvalidRational(_)
            | Error::InvalidSpec(_)
            | Error::UnknownGenerator(_)
            | Error::UnsupportedDimension(..)
            | Error::IndexOutOfRange(..)
            | Error::ZeroJordanianParameter
            | Error::NonUnitPsiConstantTerm => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Self::usage(e.to_string())
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure { code: EXIT_IO, message: e.to_string() }
}

/// `--order`, else `$KFORGE_ORDER`, else the default.
pub fn resolve_order(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("KFORGE_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::usage(format!("KFORGE_ORDER=`{v}` is not a natural number"))),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn twist_spec(family: FamilyArg, param: &str, dim: usize, order: usize) -> Result<TwistSpec, Failure> {
    let p: Rational = parse_rational(param)?;
    Ok(match family {
        FamilyArg::Jordanian => TwistSpec::jordanian(p, dim, order)?,
        FamilyArg::Abelian => TwistSpec::abelian(p, dim, order)?,
    })
}

impl TwistArgs {
    fn spec(&self) -> Result<TwistSpec, Failure> {
        twist_spec(self.family, &self.param, self.dim, resolve_order(self.order)?)
    }
}

/// Writes to `--out` if given, otherwise to `stdout`.
fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, body: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path).map_err(io_failure)?);
            f.write_all(body).and_then(|_| f.flush()).map_err(io_failure)
        }
        None => stdout.write_all(body).map_err(io_failure),
    }
}

fn json(value: &impl serde::Serialize) -> Result<Vec<u8>, Failure> {
    let mut s = serde_json::to_vec_pretty(value).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    s.push(b'\n');
    Ok(s)
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let order = resolve_order(a.order)?;
    let specs = match (&a.family, &a.param) {
        (Some(f), Some(p)) => vec![twist_spec(*f, p, a.dim, order)?],
        _ => verify::grid(a.dim, order)?,
    };
    let report = verify::run(&specs, a.suite)?;
    emit(&a.out, stdout, &json(&report)?)?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure { code: EXIT_VERIFY, message: "verification failed".into() })
    }
}

fn cmd_star(a: &StarArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let spec = a.twist.spec()?;
    let f = parse_poly(&a.lhs, spec.dim)?.to_poly(spec.dim, spec.order)?;
    let g = parse_poly(&a.rhs, spec.dim)?.to_poly(spec.dim, spec.order)?;
    let product = build_twist(&spec)?.star_product(&f, &g)?;
    writeln!(stdout, "{}", product.as_op().text()).map_err(io_failure)
}

fn cmd_coproduct(a: &CoproductArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let spec = a.twist.spec()?;
    let x = lookup_generator(&spec, &a.generator)?;
    let hopf = DeformedHopf::new(&build_twist(&spec)?)?;
    let d = hopf.coproduct(&x)?;
    let s = hopf.antipode(&x)?;
    let mut table = reference_table(&spec)?;
    if spec.dim == 4 && spec.family == (kforge_core::twist::Family::Jordanian { r: -Rational::from_integer(1) }) {
        table.extend(weyl_poincare_references(&PhysicalBasis::new(spec.order)?, spec.order)?);
    }
    let reference = match table.iter().find(|rf| rf.generator == x) {
        None => "none".to_string(),
        Some(rf) => {
            let status = if d == rf.coproduct && s == rf.antipode { "match" } else { "MISMATCH" };
            let printed = if rf.is_erratum() { ", printed form differs (erratum)" } else { "" };
            format!("{} ({status}{printed})", rf.name)
        }
    };
    let body = format!(
        "generator: {}\noperator: {}\ncoproduct: {}\nantipode: {}\nreference: {reference}\n",
        a.generator,
        x.text(),
        d.text(),
        s.text()
    );
    stdout.write_all(body.as_bytes()).map_err(io_failure)
}

fn cmd_realization(a: &RealizationArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let spec = a.twist.spec()?;
    let side = match a.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let rs = RealizationSpec::from_twist(&spec, side)?;
    let f = derive_functions(&rs)?;
    let g = build_generators(&rs)?;
    let mut out = format!(
        "psi = {}, gamma = {}, tau = {}, epsilon = {}, n = {}, N = {}\n",
        rs.psi().display_in("A"),
        kforge_core::gauss::fmt_rational(&rs.gamma()),
        rs.tau(),
        rs.epsilon(),
        rs.dim(),
        rs.order()
    );
    for (name, s) in f.named() {
        out.push_str(&format!("{name}(A) = {}\n", s.display_in("A")));
    }
    for (mu, x) in g.x_up.iter().enumerate() {
        out.push_str(&format!("x^{mu} = {}\n", x.text()));
    }
    for mu in 0..g.dim {
        for nu in mu + 1..g.dim {
            out.push_str(&format!("M{mu}{nu} = {}\n", g.m[mu][nu].text()));
        }
    }
    for (mu, d) in g.d_low.iter().enumerate() {
        out.push_str(&format!("D{mu} = {}\n", d.text()));
    }
    out.push_str(&format!("box = {}\n", g.box_op.text()));
    stdout.write_all(out.as_bytes()).map_err(io_failure)
}

/// One axis of a grid: a single value or an inclusive `start:stop:step` range.
fn parse_axis(src: &str) -> Result<Vec<f64>, Failure> {
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| Failure::usage(format!("bad number `{s}` in --grid")));
    let parts: Vec<&str> = src.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![num(v)?]),
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step.is_nan() || step <= 0.0 || stop < start {
                return Err(Failure::usage("--grid ranges need step > 0 and start <= stop"));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| start + i as f64 * step).collect())
        }
        _ => Err(Failure::usage(format!("bad --grid axis `{src}`"))),
    }
}

/// `k0=...,knorm=...` into `(k0, knorm)` pairs, `k0` outermost.
pub fn parse_grid(src: &str) -> Result<Vec<(f64, f64)>, Failure> {
    let (mut k0, mut knorm) = (None, vec![0.0]);
    for part in src.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| Failure::usage(format!("bad --grid entry `{part}`")))?;
        match name.trim() {
            "k0" => k0 = Some(parse_axis(value)?),
            "knorm" => knorm = parse_axis(value)?,
            other => return Err(Failure::usage(format!("unknown grid axis `{other}`"))),
        }
    }
    let k0 = k0.ok_or_else(|| Failure::usage("--grid needs a k0 axis"))?;
    Ok(k0.iter().flat_map(|&e| knorm.iter().map(move |&k| (e, k))).collect())
}

fn cmd_dispersion(a: &DispersionArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let param = || a.param.ok_or_else(|| Failure::usage("--param is required for this model"));
    let family = match a.model {
        ModelArg::Abelian => DispersionFamily::Abelian { s: param()? },
        ModelArg::Jordanian => DispersionFamily::Jordanian { r: param()? },
        ModelArg::Minimal => DispersionFamily::JordanianMinimal,
    };
    let model = DispersionModel::new(family, a.kappa, a.dim)?;
    let points: Vec<_> = parse_grid(&a.grid)?.into_iter().map(|(k0, k)| model.point(k0, k)).collect();
    let mut buf = Vec::new();
    match a.format {
        FormatArg::Csv => write_csv(&points, &mut buf)?,
        FormatArg::Json => write_json(&model, &points, &mut buf)?,
    }
    emit(&a.out, stdout, &buf)?;
    match points.iter().find(|p| !p.domain_ok) {
        Some(p) => Err(Failure { code: EXIT_DOMAIN, message: format!("k0 = {} is outside the model domain", p.k0) }),
        None => Ok(()),
    }
}

#[derive(serde::Serialize)]
struct IsomorphismOutput {
    report: kforge_core::lie::IsomorphismReport,
    brackets: Vec<String>,
}

fn cmd_isomorphism(a: &IsomorphismArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    if a.tau.abs() != 1 {
        return Err(Failure::usage("--tau must be 1 or -1"));
    }
    if !(2..=kforge_core::weyl::MAX_DIM - 1).contains(&a.dim) {
        return Err(Failure::usage(format!("--dim must lie in 2..={}", kforge_core::weyl::MAX_DIM - 1)));
    }
    let report = check_so_n1_isomorphism(a.dim, a.tau);
    let pass = report.pass;
    let out = IsomorphismOutput { report, brackets: kappa_extended(a.dim, a.tau).bracket_table() };
    stdout.write_all(&json(&out)?).map_err(io_failure)?;
    if pass {
        Ok(())
    } else {
        Err(Failure { code: EXIT_VERIFY, message: "isomorphism check failed".into() })
    }
}

/// Runs a parsed command line, writing normal output to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Star(a) => cmd_star(a, stdout),
        Command::Coproduct(a) => cmd_coproduct(a, stdout),
        Command::Realization(a) => cmd_realization(a, stdout),
        Command::Dispersion(a) => cmd_dispersion(a, stdout),
        Command::Isomorphism(a) => cmd_isomorphism(a, stdout),
    }
}
