//! The `belyi` command line.
//!
//! [`dispatch`] parses an argument list, runs one subcommand and returns the
//! exit status with everything meant for standard output and standard
//! error. Status 0 is success, 2 a usage error and 3 a guard or resource
//! limit. Every reported number names the operation that produced it.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::beleqns::{self, BuildOptions, Chart, CurveModel, RRData, SystemCase};
use crate::bounds::{belyi_upper_bound, khadjavi_exponent, AlgebraicPoint, BranchSet};
use crate::census::{self, verify_fermat4, PassportEntry, CENSUS_MAX_DEGREE};
use crate::error::Error;
use crate::passports::{enumerate_partitions, rh_genus, types_with_genus, RamificationType};
use crate::polysolve::{is_empty_variety, Limits, MonomialOrder, PolynomialSystem, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "belyi", version, about = "Belyi maps: passports, censuses, bounds and equations")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Append wall-clock timing to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of d.
    Partitions { d: usize },
    /// Riemann–Hurwitz genus of a ramification type.
    Genus {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        lambda: String,
    },
    /// Ramification types of a given degree and genus.
    Passports {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        genus: usize,
        /// Also count classes of triples for each type.
        #[arg(long)]
        census: bool,
    },
    /// Classes of permutation triples of one type.
    Census {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        lambda: String,
        /// Worker threads; defaults to BELYI_WORKERS or the core count.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Effective upper bound on the Belyi degree from a branch set.
    Bounds {
        /// Comma-separated rationals and `oo`.
        #[arg(long, default_value = "")]
        branch: String,
        /// Minimal polynomial of an algebraic branch point; repeatable.
        #[arg(long = "minpoly")]
        minpolys: Vec<String>,
        #[arg(long = "deg-pi", default_value_t = 1)]
        deg_pi: usize,
    },
    /// Build or decide polynomial systems.
    System {
        #[command(subcommand)]
        action: SystemCommand,
    },
    /// Replay a worked certificate.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Smallest degree whose census admits a Belyi map of the given genus.
    DegreeSearch(DegreeSearch),
}

#[derive(Subcommand, Debug)]
enum SystemCommand {
    /// Write one system file per case.
    Emit {
        /// `fermat4`, `p1`, or a curve JSON file.
        #[arg(long)]
        curve: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        lambda: String,
        /// `general`, `all`, or a case index.
        #[arg(long, default_value = "general")]
        case: String,
        #[arg(long)]
        out: PathBuf,
        /// Add equations keeping free points in the standard chart.
        #[arg(long)]
        chart_guards: bool,
        /// Refuse `--case all` beyond this many cases.
        #[arg(long, default_value_t = 2000)]
        max_cases: usize,
    },
    /// Decide whether a system file has a solution over the algebraic closure.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct LimitArgs {
    #[arg(long, default_value_t = Limits::default().max_steps)]
    max_steps: usize,
    #[arg(long, default_value_t = Limits::default().max_degree)]
    max_degree: u32,
    #[arg(long, default_value_t = Limits::default().max_basis)]
    max_basis: usize,
}

impl From<LimitArgs> for Limits {
    fn from(a: LimitArgs) -> Self {
        Limits {
            max_steps: a.max_steps,
            max_degree: a.max_degree,
            max_basis: a.max_basis,
        }
    }
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Belyi degree of x^4 + y^4 = z^4.
    Fermat4,
}

#[derive(Args, Debug)]
struct DegreeSearch {
    /// Genus of the curve; implied by `--curve`.
    #[arg(long)]
    genus: Option<usize>,
    #[arg(long)]
    curve: Option<String>,
    #[arg(long)]
    max_degree: usize,
    /// Decide the systems of each candidate degree (needs `--curve`).
    #[arg(long)]
    with_systems: bool,
    /// Systems solved per degree before giving up.
    #[arg(long, default_value_t = 50)]
    max_cases: usize,
    /// Buchberger pair budget for each system.
    #[arg(long, default_value_t = Limits::default().max_steps)]
    max_steps: usize,
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: String,
    json: bool,
    inputs: Vec<(String, Value, &'static str)>,
    results: Vec<(String, Value, &'static str)>,
    lines: Vec<String>,
    details: Map<String, Value>,
    events: Vec<String>,
}

impl Report {
    fn new(command: &str, json: bool) -> Self {
        Report {
            command: command.to_string(),
            json,
            inputs: Vec::new(),
            results: Vec::new(),
            lines: Vec::new(),
            details: Map::new(),
            events: Vec::new(),
        }
    }

    fn input(&mut self, key: &str, v: impl Into<Value>, provenance: &'static str) {
        self.inputs.push((key.to_string(), v.into(), provenance));
    }

    fn result(&mut self, key: &str, v: impl Into<Value>, op: &'static str) {
        self.results.push((key.to_string(), v.into(), op));
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn detail(&mut self, key: &str, v: Value) {
        self.details.insert(key.to_string(), v);
    }

    fn event(&mut self, s: impl Into<String>) {
        self.events.push(s.into());
    }

    fn render(&self) -> String {
        if self.json {
            let inputs: Vec<Value> = self
                .inputs
                .iter()
                .map(|(k, v, p)| json!({"name": k, "value": v, "provenance": p}))
                .collect();
            let results: Vec<Value> = self
                .results
                .iter()
                .map(|(k, v, op)| json!({"name": k, "value": v, "operation": op}))
                .collect();
            let mut out = json!({
                "command": self.command,
                "inputs": inputs,
                "results": results,
                "events": self.events,
            });
            if !self.details.is_empty() {
                out["details"] = Value::Object(self.details.clone());
            }
            let mut s = serde_json::to_string_pretty(&out).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut s = format!("belyi {}\n", self.command);
        for (k, v, p) in &self.inputs {
            s.push_str(&format!("  input  {k} = {} [{p}]\n", plain(v)));
        }
        for (k, v, op) in &self.results {
            s.push_str(&format!("  {k} = {} [{op}]\n", plain(v)));
        }
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        for e in &self.events {
            s.push_str(&format!("  note: {e}\n"));
        }
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } | Error::Precondition(_) | Error::ChartFailure(_) | Error::PrecisionFailure(_) => {
            EXIT_LIMIT
        }
        Error::Io(_) => 1,
        _ => EXIT_USAGE,
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    return Outcome {
                        code: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => EXIT_USAGE,
            };
            return Outcome {
                code,
                stdout: String::new(),
                stderr: text,
            };
        }
    };
    let start = Instant::now();
    let mut report = Report::new(&command_name(&cli.command), cli.json);
    let result = run(&cli.command, &mut report);
    if cli.timing {
        report.event(format!("elapsed {} ms", start.elapsed().as_millis()));
    }
    match result {
        Ok(code) => Outcome {
            code,
            stdout: report.render(),
            stderr: String::new(),
        },
        Err(e) => {
            let code = exit_code(&e);
            let kind = if code == EXIT_LIMIT { "limit" } else { "error" };
            Outcome {
                code,
                stdout: if report.results.is_empty() { String::new() } else { report.render() },
                stderr: format!("belyi: {kind}: {e}\n"),
            }
        }
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Partitions { .. } => "partitions",
        Command::Genus { .. } => "genus",
        Command::Passports { .. } => "passports",
        Command::Census { .. } => "census",
        Command::Bounds { .. } => "bounds",
        Command::System {
            action: SystemCommand::Emit { .. },
        } => "system emit",
        Command::System {
            action: SystemCommand::Solve { .. },
        } => "system solve",
        Command::Verify { .. } => "verify fermat4",
        Command::DegreeSearch(_) => "degree-search",
    }
    .to_string()
}

type Run = Result<i32, Error>;

fn run(c: &Command, r: &mut Report) -> Run {
    match c {
        Command::Partitions { d } => partitions(*d, r),
        Command::Genus { degree, lambda } => genus(*degree, lambda, r),
        Command::Passports { degree, genus, census } => passports(*degree, *genus, *census, r),
        Command::Census { degree, lambda, workers } => census_cmd(*degree, lambda, *workers, r),
        Command::Bounds { branch, minpolys, deg_pi } => bounds(branch, minpolys, *deg_pi, r),
        Command::System { action } => match action {
            SystemCommand::Emit {
                curve,
                degree,
                lambda,
                case,
                out,
                chart_guards,
                max_cases,
            } => emit(curve, *degree, lambda, case, out, *chart_guards, *max_cases, r),
            SystemCommand::Solve { input, order, limits } => solve(input, order, (*limits).into(), r),
        },
        Command::Verify {
            target: VerifyTarget::Fermat4,
        } => fermat4(r),
        Command::DegreeSearch(args) => degree_search(args, r),
    }
}

fn parse_lambda(text: &str, degree: Option<usize>, r: &mut Report) -> Result<RamificationType, Error> {
    let lambda: RamificationType = text.parse()?;
    if let Some(d) = degree {
        r.input("degree", d, "user");
        if d != lambda.degree() {
            return Err(Error::InvalidArgument(format!(
                "--degree {d} but the partitions sum to {}",
                lambda.degree()
            )));
        }
    }
    r.input("lambda", lambda.to_string(), "user");
    Ok(lambda)
}

fn partitions(d: usize, r: &mut Report) -> Run {
    r.input("d", d, "user");
    let ps = enumerate_partitions(d)?;
    r.result("count", ps.len(), "enumerate_partitions");
    for p in &ps {
        r.line(format!("  {p}"));
    }
    r.detail("partitions", json!(ps.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>()));
    Ok(EXIT_OK)
}

fn genus(degree: Option<usize>, lambda: &str, r: &mut Report) -> Run {
    let lambda = parse_lambda(lambda, degree, r)?;
    match rh_genus(&lambda) {
        Some(g) => r.result("genus", g, "rh_genus"),
        None => {
            r.result("genus", Value::Null, "rh_genus");
            r.event("the type fails Riemann–Hurwitz: no Belyi map has it");
        }
    }
    Ok(EXIT_OK)
}

fn passports(d: usize, g: usize, with_census: bool, r: &mut Report) -> Run {
    r.input("degree", d, "user");
    r.input("genus", g, "user");
    if with_census {
        let report = census::passport_report(d, g)?;
        r.result("types", report.len(), "types_with_genus");
        let total: usize = report.iter().map(|e| e.class_count).sum();
        r.result("classes", total, "enumerate_classes");
        let mut rows = Vec::new();
        for e in &report {
            r.line(format!(
                "  {}  classes {} (cyclic {}, noncyclic {})",
                e.lambda,
                e.class_count,
                e.cyclic_count(),
                e.noncyclic_count()
            ));
            rows.push(json!({
                "type": e.lambda.to_string(),
                "lambda": e.lambda.to_json_array(),
                "class_count": e.class_count,
                "cyclic_count": e.cyclic_count(),
                "noncyclic_count": e.noncyclic_count(),
            }));
        }
        r.detail("passports", Value::Array(rows));
    } else {
        let types = types_with_genus(d, g)?;
        r.result("types", types.len(), "types_with_genus");
        for t in &types {
            r.line(format!("  {t}"));
        }
        r.detail("types", json!(types.iter().map(|t| t.to_json_array()).collect::<Vec<_>>()));
    }
    Ok(EXIT_OK)
}

fn census_cmd(degree: Option<usize>, lambda: &str, workers: Option<usize>, r: &mut Report) -> Run {
    let lambda = parse_lambda(lambda, degree, r)?;
    let Some(g) = rh_genus(&lambda) else {
        r.result("classes", 0, "rh_genus");
        r.event("the type fails Riemann–Hurwitz: no triples");
        return Ok(EXIT_OK);
    };
    let workers = workers.unwrap_or_else(census::worker_count).max(1);
    let entry = PassportEntry::build_with_workers(&lambda, workers)?;
    r.result("genus", g, "rh_genus");
    r.result("classes", entry.class_count, "enumerate_classes");
    r.result("cyclic", entry.cyclic_count(), "classify_monodromy");
    r.result("noncyclic", entry.noncyclic_count(), "classify_monodromy");
    let (mn, md) = entry.mass();
    r.result("mass", format!("{mn}/{md}"), "centralizer_order");
    let mut orders: Vec<(String, usize)> = Vec::new();
    for c in &entry.classes {
        let o = c.monodromy_order.to_string();
        match orders.iter_mut().find(|(k, _)| *k == o) {
            Some((_, n)) => *n += 1,
            None => orders.push((o, 1)),
        }
    }
    orders.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let split: Vec<String> = orders.iter().map(|(o, n)| format!("{n}x{o}")).collect();
    r.result("orders", split.join(" "), "group_order");
    for (i, c) in entry.classes.iter().enumerate() {
        r.line(format!(
            "  {:>3}  s0={} s1={} soo={}  order {} {} aut {}",
            i + 1,
            c.triple.sigma0(),
            c.triple.sigma1(),
            c.triple.sigma_inf(),
            c.monodromy_order,
            c.monodromy_tag,
            c.automorphism_count
        ));
    }
    r.detail("classes", json!(entry.classes.iter().map(|c| c.to_json()).collect::<Vec<_>>()));
    Ok(EXIT_OK)
}

fn bounds(branch: &str, minpolys: &[String], deg_pi: usize, r: &mut Report) -> Run {
    r.input("branch", branch, "user");
    r.input("minpolys", json!(minpolys), "user");
    r.input("deg_pi", deg_pi, "user");
    let mut points = Vec::new();
    for tok in branch.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        points.push(tok.parse::<AlgebraicPoint>()?);
    }
    for m in minpolys {
        points.push(AlgebraicPoint::parse_minpoly(m)?);
    }
    let set = BranchSet::new(points)?;
    r.result("N", set.n, "BranchSet::new");
    r.result("H", set.height.to_string(), "height");
    r.result("exponent", khadjavi_exponent(set.n).to_string(), "khadjavi_exponent");
    let bound = belyi_upper_bound(deg_pi, &set)?;
    match bound.as_exact() {
        Some(v) => {
            let s = v.to_string();
            r.result("bound_digits", s.len(), "belyi_upper_bound");
            if s.len() <= 200 {
                r.result("bound", s, "belyi_upper_bound");
            }
        }
        None => r.event("bound too large or irrational to write exactly; reported as log10"),
    }
    r.result("bound_log10", bound.log10(64).to_decimal(12), "belyi_upper_bound");
    if set.infinity_counted {
        r.event("infinity counted as one point of N");
    }
    Ok(EXIT_OK)
}

fn load(curve: &str, d: usize) -> Result<(CurveModel, RRData), Error> {
    if curve.ends_with(".json") || Path::new(curve).is_file() {
        let text = fs::read_to_string(curve).map_err(|e| Error::Io(format!("{curve}: {e}")))?;
        let (c, rr) = beleqns::load_curve(&text)?;
        let rr = rr.for_degree(d, c.genus())?;
        Ok((c, rr))
    } else {
        beleqns::fixture(curve, d)
    }
}

/// Rejects types that fail Riemann–Hurwitz or have the wrong genus.
fn passports_stage(lambda: &RamificationType, genus: usize, r: &mut Report) -> bool {
    match rh_genus(lambda) {
        None => {
            r.result("rejected_at", "passports", "rh_genus");
            r.event("the type fails Riemann–Hurwitz; nothing to emit");
            false
        }
        Some(g) if g != genus => {
            r.result("rejected_at", "passports", "rh_genus");
            r.event(format!("the type has genus {g} but the curve has genus {genus}; nothing to emit"));
            false
        }
        Some(_) => true,
    }
}

#[allow(clippy::too_many_arguments)]
fn emit(
    curve: &str,
    d: usize,
    lambda: &str,
    which: &str,
    out: &Path,
    chart_guards: bool,
    max_cases: usize,
    r: &mut Report,
) -> Run {
    r.input("curve", curve, "user");
    let lambda = parse_lambda(lambda, Some(d), r)?;
    r.input("case", which, "user");
    let (c, rr) = load(curve, d)?;
    if !passports_stage(&lambda, c.genus(), r) {
        return Ok(EXIT_OK);
    }
    r.result("t", rr.t(), "compute_t");
    r.result("n", rr.n(), "expected_rr_dimension");
    let cases = beleqns::enumerate_cases(&c, &rr, &lambda)?;
    r.result("cases", cases.len(), "enumerate_cases");
    let chosen: Vec<(usize, &SystemCase)> = match which {
        "general" => cases.iter().enumerate().take(1).filter(|(_, k)| k.is_general(rr.n())).collect(),
        "all" => {
            if cases.len() > max_cases {
                return Err(Error::ResourceLimit {
                    operation: "system emit --case all",
                    limit: max_cases,
                    requested: cases.len(),
                });
            }
            cases.iter().enumerate().collect()
        }
        idx => {
            let i: usize = idx
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("--case must be general, all or an index, got {idx:?}")))?;
            let case = cases
                .get(i)
                .ok_or_else(|| Error::InvalidArgument(format!("case {i} out of range 0..{}", cases.len())))?;
            vec![(i, case)]
        }
    };
    if chosen.is_empty() {
        return Err(Error::InvalidArgument("no general case to emit".into()));
    }
    fs::create_dir_all(out).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    let options = BuildOptions { chart_guards };
    let mut written = 0;
    let mut flagged = 0;
    let mut files = Vec::new();
    for (i, case) in &chosen {
        if let Chart::TransformRequested { .. } = case.chart {
            let path = out.join(format!("case-{i:05}.chart-request"));
            let text = format!("# case: {case}\n# status: chart transformation requested, no system built\n");
            fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            flagged += 1;
            continue;
        }
        let built = beleqns::build_system(&c, &rr, &lambda, case, options)?;
        let path = out.join(format!("case-{i:05}.sys"));
        fs::write(&path, built.system.to_text()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        written += 1;
        let (cv, ce) = built.core_counts();
        let (v, e) = built.counts();
        files.push(json!({
            "file": path.file_name().unwrap().to_string_lossy(),
            "case": case.to_string(),
            "core_variables": cv,
            "core_equations": ce,
            "variables": v,
            "equations": e,
        }));
        if chosen.len() == 1 {
            r.result("core_variables", cv, "build_system");
            r.result("core_equations", ce, "build_system");
            r.result("gadget", format!("+{} variables, +{} equations", v - cv, e - ce), "build_system");
            r.result("variables", v, "build_system");
            r.result("equations", e, "build_system");
            let items: Vec<String> = built.itemized().iter().map(|(k, n)| format!("{k} {n}")).collect();
            r.result("itemized", items.join(", "), "build_system");
        }
        r.line(format!("  {}  {case}", path.display()));
    }
    r.result("written", written, "build_system");
    r.result("chart_requests", flagged, "enumerate_cases");
    r.detail("files", Value::Array(files));
    Ok(EXIT_OK)
}

fn solve(input: &Path, order: &str, limits: Limits, r: &mut Report) -> Run {
    r.input("in", input.display().to_string(), "user");
    r.input("order", order, "user");
    r.input("max_steps", limits.max_steps, "user");
    let order: MonomialOrder = order.parse()?;
    let text = fs::read_to_string(input).map_err(|e| Error::Io(format!("{}: {e}", input.display())))?;
    let sys = PolynomialSystem::parse(&text)?;
    r.result("variables", sys.num_variables(), "PolynomialSystem::parse");
    r.result("equations", sys.num_equations(), "PolynomialSystem::parse");
    let (verdict, stats) = is_empty_variety(&sys.equations, order, limits)?;
    r.result("pairs_reduced", stats.pairs_reduced, "buchberger");
    r.result("basis_size", stats.basis_size, "buchberger");
    let code = match &verdict {
        Verdict::Empty => {
            r.result("verdict", "empty", "is_empty_variety");
            EXIT_OK
        }
        Verdict::Nonempty => {
            r.result("verdict", "nonempty", "is_empty_variety");
            EXIT_OK
        }
        Verdict::Unknown(why) => {
            r.result("verdict", "unknown", "is_empty_variety");
            r.event(format!("interrupted: {why}"));
            EXIT_LIMIT
        }
    };
    Ok(code)
}

fn fermat4(r: &mut Report) -> Run {
    let cert = verify_fermat4()?;
    r.result("genus", cert.genus, "plane_curve_genus");
    r.result("lower_bound", cert.lower_bound, "lower_bound_from_genus");
    r.result("classes", cert.passport.class_count, "passport_report");
    r.result("cyclic", cert.passport.cyclic_count(), "classify_monodromy");
    r.result("noncyclic", cert.passport.noncyclic_count(), "classify_monodromy");
    r.result("aut_order", cert.aut_order, "declared input");
    r.result("upper_bound", cert.upper_bound, "declared input");
    r.result("beldeg", json!(cert.belyi_degree), "verify_fermat4");
    for e in &cert.evidence {
        r.line(format!("  [{}] {}: {} ({})", e.source, e.step, e.claim, e.operation));
    }
    r.detail("certificate", cert.to_json());
    Ok(if cert.belyi_degree.is_some() { EXIT_OK } else { EXIT_LIMIT })
}

fn degree_search(a: &DegreeSearch, r: &mut Report) -> Run {
    r.input("max_degree", a.max_degree, "user");
    let curve_genus = match &a.curve {
        Some(name) => {
            r.input("curve", name.as_str(), "user");
            Some(load(name, 1)?.0.genus())
        }
        None => None,
    };
    let g = match (a.genus, curve_genus) {
        (Some(g), Some(h)) if g != h => {
            return Err(Error::InvalidArgument(format!("--genus {g} but the curve has genus {h}")))
        }
        (Some(g), _) | (None, Some(g)) => g,
        (None, None) => return Err(Error::InvalidArgument("give --genus or --curve".into())),
    };
    r.input("genus", g, if a.genus.is_some() { "user" } else { "curve" });
    if a.with_systems && a.curve.is_none() {
        return Err(Error::InvalidArgument("--with-systems needs --curve".into()));
    }
    let mut rows = Vec::new();
    let mut code = EXIT_OK;
    for d in 1..=a.max_degree {
        let types = types_with_genus(d, g)?;
        if types.is_empty() {
            rows.push(json!({"degree": d, "types": 0, "status": "no types"}));
            r.line(format!("  d={d}: no ramification types of genus {g}"));
            continue;
        }
        if d > CENSUS_MAX_DEGREE {
            return Err(Error::ResourceLimit {
                operation: "degree-search census",
                limit: CENSUS_MAX_DEGREE,
                requested: d,
            });
        }
        let mut classes = 0;
        let mut live = Vec::new();
        for t in &types {
            let n = census::enumerate_classes(t)?.len();
            classes += n;
            if n > 0 {
                live.push(t.clone());
            }
        }
        if classes == 0 {
            rows.push(json!({"degree": d, "types": types.len(), "classes": 0, "status": "excluded by census"}));
            r.line(format!("  d={d}: {} types, no triples: excluded for every curve of genus {g}", types.len()));
            continue;
        }
        if !a.with_systems {
            rows.push(json!({"degree": d, "types": types.len(), "classes": classes, "status": "candidate"}));
            r.line(format!("  d={d}: {} types, {classes} classes: first candidate", types.len()));
            r.result("census_lower_bound", d, "enumerate_classes");
            r.event(format!("no curve of genus {g} has a Belyi map of degree below {d}"));
            break;
        }
        let name = a.curve.as_deref().unwrap();
        let (c, rr) = load(name, d)?;
        let status = systems_status(&c, &rr, &live, a.max_cases, Limits { max_steps: a.max_steps, ..Limits::default() })?;
        r.line(format!("  d={d}: {} types, {classes} classes: {status}", types.len()));
        rows.push(json!({"degree": d, "types": types.len(), "classes": classes, "status": status}));
        match status.as_str() {
            "realized" => {
                r.result("belyi_degree", d, "is_empty_variety");
                break;
            }
            "excluded by systems" => continue,
            _ => {
                r.result("undetermined_at", d, "is_empty_variety");
                r.event("a system could not be decided within the limits");
                code = EXIT_LIMIT;
                break;
            }
        }
    }
    r.detail("degrees", Value::Array(rows));
    Ok(code)
}

fn systems_status(
    c: &CurveModel,
    rr: &RRData,
    types: &[RamificationType],
    max_cases: usize,
    limits: Limits,
) -> Result<String, Error> {
    let mut solved = 0;
    let mut undecided = false;
    for t in types {
        for case in beleqns::enumerate_cases(c, rr, t)? {
            if case.chart != Chart::Standard {
                undecided = true;
                continue;
            }
            if solved == max_cases {
                return Ok("undetermined (case limit)".into());
            }
            let built = beleqns::build_system(c, rr, t, &case, BuildOptions::default())?;
            solved += 1;
            match is_empty_variety(&built.system.equations, MonomialOrder::GrevLex, limits)?.0 {
                Verdict::Nonempty => return Ok("realized".into()),
                Verdict::Empty => {}
                Verdict::Unknown(_) => undecided = true,
            }
        }
    }
    Ok(if undecided {
        "undetermined (chart requests or interrupted systems)".into()
    } else {
        "excluded by systems".into()
    })
}
