//! Command-line front end: single integrals by one or all methods, fixed-point
//! listings, and seeded cross-method verification sweeps.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{MultiPoly, Rational, VarId};
use crate::localization::{self, LocalizationError};
use crate::random::{instance_rng, random_class, random_t_values};
use crate::residues::{
    build_general_formula, build_lg_first_form, build_residue_problem, build_two_bundle_problem, iterated_residue,
    ResidueError, ResidueProblem,
};
use crate::spaces::{enumerate_fixed_points, euler_class, SpaceDescriptor, SpaceError, SpaceKind};
use crate::symfun::{lower_class, parse_class, LoweredClass, SymfunError};

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage, parse and dimension errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code when two methods produce different values.
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("class: {0}")]
    Class(#[from] SymfunError),
    #[error("localization: {0}")]
    Localization(#[from] LocalizationError),
    #[error("residue: {0}")]
    Residue(#[from] ResidueError),
}

#[derive(Parser, Debug)]
#[command(
    name = "grassint",
    version,
    about = "Exact integrals over Grassmannians and flag varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integrate a characteristic class of the tautological bundle.
    Integrate(IntegrateArgs),
    /// List the torus fixed points with their Euler classes.
    FixedPoints {
        /// e.g. grass:2,4, lg:3, og:2,even, og:2,odd, flag:2,4
        #[arg(long)]
        space: SpaceDescriptor,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Compare all methods on random classes over a family of spaces.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Localization,
    Residue,
    General,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exact polynomial in t.
    Symbolic,
    /// Values at random (or given) points t.
    Specialize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct IntegrateArgs {
    #[arg(long)]
    pub space: SpaceDescriptor,
    /// Class in c_i, s[..], e_i, h_i, p_i; flag varieties also accept
    /// polynomials in z1..zm.
    #[arg(long)]
    pub class: String,
    /// Class of the quotient bundle (classical Grassmannians only).
    #[arg(long)]
    pub quotient_class: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    pub mode: Mode,
    #[arg(long, default_value_t = 3)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated rationals t1,t2,...; implies specialize mode.
    #[arg(long, value_delimiter = ',')]
    pub t_values: Option<Vec<String>>,
    /// Comma-separated processing order for residues, e.g. z1,z2.
    #[arg(long, value_delimiter = ',')]
    pub var_order: Option<Vec<VarId>>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Grass,
    Lg,
    OgEven,
    OgOdd,
    Flag,
}

#[derive(clap::Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 4)]
    pub max_n: u32,
    /// Random classes per space.
    #[arg(long, default_value_t = 5)]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include wall-clock timings (makes the report nondeterministic).
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

/// One method's result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodValue {
    /// Canonical polynomial string; for specialize mode the first trial.
    pub value: String,
    /// All trial values in specialize mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub space: String,
    pub class: String,
    pub methods: BTreeMap<String, MethodValue>,
    pub agree: bool,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_values: Option<Vec<BTreeMap<String, String>>>,
}

/// The integral, symbolic or at a list of points.
#[derive(Clone, Copy, Debug)]
enum Evaluation<'a> {
    Symbolic,
    At(&'a [BTreeMap<VarId, Rational>]),
}

/// A single route to the integral.
#[derive(Clone, Debug)]
enum Route {
    Localization,
    Residue(ResidueProblem),
}

fn route_value(
    route: &Route,
    space: &SpaceDescriptor,
    v: &LoweredClass,
    quotient: Option<&LoweredClass>,
    eval: Evaluation<'_>,
) -> Result<Vec<MultiPoly>, CliError> {
    match (route, eval) {
        (Route::Localization, Evaluation::Symbolic) => Ok(vec![match quotient {
            None => localization::localize(space, v)?.value.as_poly(),
            Some(q) => localization::localize_two_bundle(space, v, q)?.value.as_poly(),
        }]),
        (Route::Localization, Evaluation::At(points)) => points
            .iter()
            .map(|t| {
                let value = match quotient {
                    None => localization::specialize(space, v, t)?,
                    Some(q) => localization::specialize_two_bundle(space, v, q, t)?,
                };
                Ok(MultiPoly::constant(value))
            })
            .collect(),
        (Route::Residue(p), Evaluation::Symbolic) => Ok(vec![iterated_residue(p)?.value]),
        (Route::Residue(p), Evaluation::At(points)) => points
            .iter()
            .map(|t| Ok(iterated_residue(&p.specialize(t)?)?.value))
            .collect(),
    }
}

fn with_order(p: ResidueProblem, order: &Option<Vec<VarId>>) -> Result<ResidueProblem, CliError> {
    match order {
        None => Ok(p),
        Some(o) => Ok(p.with_var_order(o.clone())?),
    }
}

/// Parses a class for `space`; flag varieties also take raw polynomials in
/// the Chern roots.
pub fn parse_space_class(space: &SpaceDescriptor, text: &str, roots: u32) -> Result<LoweredClass, CliError> {
    match parse_class(text) {
        Ok(expr) => Ok(lower_class(&expr, roots)?),
        Err(e) if matches!(space.kind(), SpaceKind::Flag { .. }) => match text.parse::<MultiPoly>() {
            Ok(p) => Ok(LoweredClass::new(p, roots)?),
            Err(_) => Err(e.into()),
        },
        Err(e) => Err(e.into()),
    }
}

fn parse_t_values(texts: &[String], n: u32) -> Result<BTreeMap<VarId, Rational>, CliError> {
    if texts.len() != n as usize {
        return Err(CliError::Usage(format!(
            "--t-values needs {n} values for this space, got {}",
            texts.len()
        )));
    }
    texts
        .iter()
        .zip(1..)
        .map(|(s, i)| {
            s.trim()
                .parse::<Rational>()
                .map(|q| (VarId::t(i), q))
                .map_err(|_| CliError::Usage(format!("--t-values: cannot parse {s:?} as a rational")))
        })
        .collect()
}

/// Runs the requested methods on one integral.
pub fn cmd_integrate(args: &IntegrateArgs) -> Result<RunReport, CliError> {
    let space = args.space;
    let v = parse_space_class(&space, &args.class, space.num_root_variables())?;
    let quotient = match (&args.quotient_class, space.kind()) {
        (None, _) => None,
        (Some(text), SpaceKind::Grass { m, n }) => Some(parse_space_class(&space, text, n - m)?),
        (Some(_), _) => {
            return Err(CliError::Usage(format!(
                "--quotient-class is only supported on classical Grassmannians, not {space}"
            )))
        }
    };

    let mut routes: Vec<(String, Route)> = Vec::new();
    let wants = |m: Method| args.method == m || args.method == Method::All;
    if wants(Method::Localization) {
        routes.push(("localization".into(), Route::Localization));
    }
    if wants(Method::Residue) {
        let problem = match &quotient {
            Some(q) => Some(build_two_bundle_problem(&space, &v, q)?),
            None if matches!(space.kind(), SpaceKind::Flag { .. }) => None,
            None => Some(build_residue_problem(&space, &v)?),
        };
        match problem {
            Some(p) => routes.push(("residue".into(), Route::Residue(with_order(p, &args.var_order)?))),
            None if args.method == Method::Residue => {
                return Err(CliError::Usage(format!(
                    "no space-specific residue formula for {space}; use --method general"
                )))
            }
            None => {}
        }
        if let (SpaceKind::Lagrangian { n }, Method::All, None) = (space.kind(), args.method, &quotient) {
            let p = with_order(build_lg_first_form(n, &v)?, &args.var_order)?;
            routes.push(("residue-lg-first".into(), Route::Residue(p)));
        }
    }
    if wants(Method::General) {
        match &quotient {
            None => {
                let p = with_order(build_general_formula(&space, &v)?, &args.var_order)?;
                routes.push(("general".into(), Route::Residue(p)));
            }
            Some(_) if args.method == Method::General => {
                return Err(CliError::Usage(
                    "the general formula takes no quotient class; use --method residue".into(),
                ))
            }
            Some(_) => {}
        }
    }

    let points: Option<Vec<BTreeMap<VarId, Rational>>> = match (&args.t_values, args.mode) {
        (Some(texts), _) => Some(vec![parse_t_values(texts, space.torus_rank())?]),
        (None, Mode::Specialize) => {
            if args.trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            Some(
                (0..args.trials)
                    .map(|k| random_t_values(&mut instance_rng(args.seed, k as u64), space.torus_rank()))
                    .collect(),
            )
        }
        (None, Mode::Symbolic) => None,
    };
    let eval = match &points {
        None => Evaluation::Symbolic,
        Some(p) => Evaluation::At(p),
    };

    let results: Vec<(String, Vec<MultiPoly>, u64)> = routes
        .par_iter()
        .map(|(name, route)| {
            let start = Instant::now();
            let values = route_value(route, &space, &v, quotient.as_ref(), eval)?;
            Ok((name.clone(), values, start.elapsed().as_millis() as u64))
        })
        .collect::<Result<_, CliError>>()?;

    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let methods = results
        .into_iter()
        .map(|(name, values, ms)| {
            let strings: Vec<String> = values.iter().map(MultiPoly::to_string).collect();
            let entry = MethodValue {
                value: strings[0].clone(),
                values: points.as_ref().map(|_| strings),
                ms: Some(ms),
            };
            (name, entry)
        })
        .collect();
    let class = match &args.quotient_class {
        None => args.class.clone(),
        Some(q) => format!("{} ; Q: {q}", args.class),
    };
    Ok(RunReport {
        space: space.to_string(),
        class,
        methods,
        agree,
        seed: args.seed,
        t_values: points.map(|ps| {
            ps.iter()
                .map(|t| t.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect())
                .collect()
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointRow {
    pub point: String,
    pub euler: String,
}

pub fn cmd_fixed_points(space: &SpaceDescriptor) -> Result<Vec<FixedPointRow>, CliError> {
    enumerate_fixed_points(space)
        .iter()
        .map(|p| {
            Ok(FixedPointRow {
                point: p.to_string(),
                euler: euler_class(space, p)?.to_string(),
            })
        })
        .collect()
}

/// One instance of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyInstance {
    pub index: u64,
    pub space: String,
    pub class: String,
    pub degree: u32,
    pub dimension: u32,
    pub methods: BTreeMap<String, MethodValue>,
    pub agree: bool,
    /// Below the dimension the value is 0; at the dimension it is free of t.
    pub degree_law: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub family: Family,
    pub max_n: u32,
    pub trials: u32,
    pub seed: u64,
    pub instances: Vec<VerifyInstance>,
    pub all_agree: bool,
}

/// The spaces of `family` with torus rank at most `max_n`.
pub fn family_spaces(family: Family, max_n: u32) -> Vec<SpaceDescriptor> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        match family {
            Family::Grass => out.extend((1..n).map(|m| SpaceDescriptor::grass(m, n))),
            Family::Lg => out.push(SpaceDescriptor::lagrangian(n)),
            Family::OgEven => out.push(SpaceDescriptor::orthogonal_even(n)),
            Family::OgOdd => out.push(SpaceDescriptor::orthogonal_odd(n)),
            Family::Flag if n >= 2 => out.extend((1..=n).map(|m| SpaceDescriptor::flag(m, n))),
            Family::Flag => {}
        }
    }
    out.into_iter().map(|s| s.expect("valid family parameters")).collect()
}

fn verify_instance(
    space: &SpaceDescriptor,
    index: u64,
    trial: u32,
    seed: u64,
    timings: bool,
) -> Result<VerifyInstance, CliError> {
    let dimension = space.complex_dimension();
    let degree = trial % (dimension + 3);
    let m = space.num_root_variables();
    let expr = random_class(&mut instance_rng(seed, index), m, degree);
    let v = lower_class(&expr, m)?;

    let mut routes = vec![("localization", Route::Localization)];
    if !matches!(space.kind(), SpaceKind::Flag { .. }) {
        routes.push(("residue", Route::Residue(build_residue_problem(space, &v)?)));
    }
    if let SpaceKind::Lagrangian { n } = space.kind() {
        routes.push(("residue-lg-first", Route::Residue(build_lg_first_form(n, &v)?)));
    }
    routes.push(("general", Route::Residue(build_general_formula(space, &v)?)));

    let mut methods = BTreeMap::new();
    let mut values = Vec::new();
    for (name, route) in &routes {
        let start = Instant::now();
        let value = route_value(route, space, &v, None, Evaluation::Symbolic)?.remove(0);
        let ms = start.elapsed().as_millis() as u64;
        methods.insert(
            name.to_string(),
            MethodValue {
                value: value.to_string(),
                values: None,
                ms: timings.then_some(ms),
            },
        );
        values.push(value);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let reference = &values[0];
    let degree_law = match degree.cmp(&dimension) {
        std::cmp::Ordering::Less => reference.is_zero(),
        std::cmp::Ordering::Equal => reference.is_constant(),
        std::cmp::Ordering::Greater => {
            reference.is_zero() || reference.homogeneous_degree() == Some(degree - dimension)
        }
    };
    Ok(VerifyInstance {
        index,
        space: space.to_string(),
        class: expr.to_string(),
        degree,
        dimension,
        methods,
        agree,
        degree_law,
    })
}

/// Runs the sweep in parallel; instances are reported in index order.
pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    let jobs: Vec<(SpaceDescriptor, u32)> = family_spaces(args.family, args.max_n)
        .into_iter()
        .flat_map(|s| (0..args.trials).map(move |k| (s, k)))
        .collect();
    let instances: Vec<VerifyInstance> = jobs
        .par_iter()
        .enumerate()
        .map(|(index, (space, trial))| verify_instance(space, index as u64, *trial, args.seed, args.timings))
        .collect::<Result<_, _>>()?;
    let all_agree = instances.iter().all(|i| i.agree && i.degree_law);
    Ok(VerifyReport {
        family: args.family,
        max_n: args.max_n,
        trials: args.trials,
        seed: args.seed,
        instances,
        all_agree,
    })
}

fn render_integrate(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "space: {}", report.space);
    let _ = writeln!(out, "class: {}", report.class);
    if let Some(points) = &report.t_values {
        for (k, t) in points.iter().enumerate() {
            let assignment: Vec<String> = t.iter().map(|(v, q)| format!("{v}={q}")).collect();
            let _ = writeln!(out, "point {}: {}", k + 1, assignment.join(", "));
        }
    }
    let width = report.methods.keys().map(String::len).max().unwrap_or(0);
    for (name, m) in &report.methods {
        let shown = match &m.values {
            Some(vs) => vs.join(" | "),
            None => m.value.clone(),
        };
        let ms = m.ms.map(|ms| format!("  ({ms} ms)")).unwrap_or_default();
        let _ = writeln!(out, "{name:width$}  {shown}{ms}");
    }
    let _ = writeln!(out, "agree: {}", if report.agree { "yes" } else { "NO" });
    out
}

fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    for inst in &report.instances {
        let value = &inst.methods["localization"].value;
        let status = if inst.agree && inst.degree_law { "ok" } else { "FAIL" };
        let _ = writeln!(
            out,
            "#{:<4} {:<10} deg {:>2}/{:<2} {:<4} {} = {}",
            inst.index, inst.space, inst.degree, inst.dimension, status, inst.class, value
        );
    }
    let _ = writeln!(
        out,
        "{} instances, seed {}: {}",
        report.instances.len(),
        report.seed,
        if report.all_agree {
            "all methods agree"
        } else {
            "DISAGREEMENT"
        }
    );
    out
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Integrate(a) => cmd_integrate(a).map(|r| {
            let text = match a.output {
                Output::Text => render_integrate(&r),
                Output::Json => json(&r),
            };
            (text, r.agree)
        }),
        Command::FixedPoints { space, output } => cmd_fixed_points(space).map(|rows| {
            let text = match output {
                Output::Text => rows.iter().map(|r| format!("{}\t{}\n", r.point, r.euler)).collect(),
                Output::Json => json(&rows),
            };
            (text, true)
        }),
        Command::Verify(a) => cmd_verify(a).map(|r| {
            let text = match a.output {
                Output::Text => render_verify(&r),
                Output::Json => json(&r),
            };
            (text, r.all_agree)
        }),
    };
    match result {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
