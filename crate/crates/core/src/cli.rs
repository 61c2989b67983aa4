//! The `hypertile` command line: `eval`, `verify`, `optimize` and `tile`.
//!
//! Exit codes: 0 when every selected check passes, 1 when a check fails
//! (the report is still written), 2 on usage or domain errors.

use std::ffi::OsString;
use std::f64::consts::FRAC_PI_3;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::audit::AuditReport;
use crate::error::{GeomError, GeomResult};
use crate::isoperimetry::{
    min_perimeter_polygon_with, perimeter_ratio_scan, sextic_check, verify_concavity,
    verify_doubling, verify_isosceles, verify_regular_monotone, OptimizerOptions, TOL_OPT,
};
use crate::json::to_string_pretty;
use crate::polygons::{
    a_k, angle_from_perimeter, area_fixed_perimeter, circle_area_bound, heron_area, p_k,
    regular_area, regular_perimeter, side_opposite, RegularSpec,
};
use crate::svg::render_tiling;
use crate::tilings::{
    angle_sum_audit, degree_audit, fixture, gauss_bonnet_audit, generate_patch, hull_cover_audit,
    TilingGraph, FIXTURE_NAMES,
};

pub const SEED_ENV: &str = "HYPERTILE_SEED";

#[derive(Debug, Parser)]
#[command(name = "hypertile", version, about = "Hyperbolic polygons, isoperimetric checks and {k,3} tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one closed-form quantity.
    Eval(EvalArgs),
    /// Run numerical verification suites.
    Verify(VerifyArgs),
    /// Minimize the perimeter of an n-gon of fixed area.
    Optimize(OptimizeArgs),
    /// Generate or load a tiling, render it and audit it.
    Tile(TileArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("quantity").required(true)))]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    /// Area a_k of the regular k-gon with 120° angles.
    #[arg(long = "Ak", value_name = "K", group = "quantity")]
    pub ak: Option<f64>,
    /// Perimeter p_k of the regular k-gon with 120° angles.
    #[arg(long = "Pk", value_name = "K", group = "quantity")]
    pub pk: Option<f64>,
    /// Area of the triangle with the given side lengths.
    #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], group = "quantity")]
    pub heron: Option<Vec<f64>>,
    /// Area of the regular n-gon with interior angle θ.
    #[arg(long = "regular-area", num_args = 2, value_names = ["N", "THETA"], group = "quantity")]
    pub regular_area: Option<Vec<f64>>,
    /// Perimeter of the regular n-gon with interior angle θ.
    #[arg(long = "regular-perimeter", num_args = 2, value_names = ["N", "THETA"], group = "quantity")]
    pub regular_perimeter: Option<Vec<f64>>,
    /// Interior angle of the regular n-gon with perimeter P.
    #[arg(long, num_args = 2, value_names = ["N", "P"], group = "quantity")]
    pub angle: Option<Vec<f64>>,
    /// Area A(n) of the regular n-gon with perimeter P.
    #[arg(long = "area-n", num_args = 2, value_names = ["N", "P"], group = "quantity")]
    pub area_n: Option<Vec<f64>>,
    /// Side opposite θ₃ in the triangle with angles θ₁, θ₂, θ₃.
    #[arg(long, num_args = 3, value_names = ["T1", "T2", "T3"], group = "quantity")]
    pub side: Option<Vec<f64>>,
    /// Area of the disk with circumference P.
    #[arg(long = "circle-bound", value_name = "P", group = "quantity")]
    pub circle_bound: Option<f64>,
    /// Emit {"quantity", "inputs", "value"}.
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CheckName {
    Concavity,
    Doubling,
    Isosceles,
    PerimeterRatio,
    RegularMonotone,
    Sextic,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Concavity,
        CheckName::Doubling,
        CheckName::Isosceles,
        CheckName::PerimeterRatio,
        CheckName::RegularMonotone,
        CheckName::Sextic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Concavity => "concavity",
            CheckName::Doubling => "doubling",
            CheckName::Isosceles => "isosceles",
            CheckName::PerimeterRatio => "perimeter_ratio",
            CheckName::RegularMonotone => "regular_monotone",
            CheckName::Sextic => "sextic",
        }
    }
}

/// `lo:hi:step` with `lo < hi` and `step > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl std::str::FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, step] = parts[..] else {
            return Err(format!("expected lo:hi:step, got {s:?}"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
        let g = Grid { lo: num(lo)?, hi: num(hi)?, step: num(step)? };
        if !(g.lo < g.hi) || !(g.step > 0.0) {
            return Err(format!("grid {s} needs lo < hi and step > 0"));
        }
        Ok(g)
    }
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(x) => Err(format!("{x} must be positive")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every check.
    #[arg(long, conflicts_with = "check")]
    pub all: bool,
    /// Run the named check; repeatable.
    #[arg(long, value_enum, required_unless_present = "all")]
    pub check: Vec<CheckName>,
    /// Perimeter for the concavity scan (default p_k(7)).
    #[arg(long = "P", value_name = "P", value_parser = positive)]
    pub perimeter: Option<f64>,
    /// Grid override. Concavity scans n, the perimeter ratio scans k and
    /// doubling uses hi as the largest n and the step.
    #[arg(long)]
    pub grid: Option<Grid>,
    /// k for the doubling check.
    #[arg(long, default_value_t = 7.0, value_parser = positive)]
    pub k: f64,
    /// Area for the regular-monotone check (default π/3).
    #[arg(long, value_parser = positive)]
    pub area: Option<f64>,
    /// Largest n for the regular-monotone check.
    #[arg(long = "n-max", default_value_t = 50)]
    pub n_max: usize,
    /// (z, P) pairs for the isosceles check.
    #[arg(long, default_value_t = 20)]
    pub pairs: usize,
    /// Grid cells per isosceles scan.
    #[arg(long, default_value_t = 100_000)]
    pub points: usize,
    /// Seed for the isosceles pairs.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub area: f64,
    /// Random seed; falls back to HYPERTILE_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Evaluation budget per simplex run.
    #[arg(long = "max-evals")]
    pub max_evals: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["k", "fixture", "input"])))]
pub struct TileArgs {
    /// Side count of the {k,3} disk patch.
    #[arg(long)]
    pub k: Option<usize>,
    /// Reflection depth of the patch.
    #[arg(long, default_value_t = 1, requires = "k")]
    pub depth: usize,
    /// Shipped fixture name.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_NAMES))]
    pub fixture: Option<String>,
    /// Tiling JSON file.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write the tiling JSON here. Without it the tiling goes to stdout
    /// unless audits are requested.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Audits to run, comma separated or repeated.
    #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(AUDIT_NAMES))]
    pub audit: Vec<String>,
    /// k used by the vertex-degree and hull-cover audits.
    #[arg(long = "audit-k", default_value_t = 7.0, value_parser = positive)]
    pub audit_k: f64,
}

/// Tiling audits. The first three are the incidence invariants of the
/// validator, `gauss_bonnet` is the full area audit.
pub const AUDIT_NAMES: [&str; 8] = [
    "all",
    "edge_slots",
    "degrees",
    "connected",
    "gauss_bonnet",
    "angle_sums",
    "vertex_degree",
    "hull_cover",
];

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Optimize(a) => cmd_optimize(&a, out, err),
        Command::Tile(a) => cmd_tile(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(e: std::io::Error) -> GeomError {
    GeomError::Io(e.to_string())
}

fn write_file(path: &PathBuf, contents: &str) -> GeomResult<()> {
    std::fs::write(path, contents).map_err(|e| GeomError::Io(format!("{}: {e}", path.display())))
}

/// Quantity name, named inputs and value for `eval`.
pub fn evaluate(a: &EvalArgs) -> GeomResult<(&'static str, Map<String, Value>, f64)> {
    let named = |names: &[&str], xs: &[f64]| -> Map<String, Value> {
        names.iter().zip(xs).map(|(n, &x)| (n.to_string(), Value::from(x))).collect()
    };
    if let Some(k) = a.ak {
        return Ok(("a_k", named(&["k"], &[k]), a_k(k)?));
    }
    if let Some(k) = a.pk {
        return Ok(("p_k", named(&["k"], &[k]), p_k(k)?));
    }
    if let Some(v) = &a.heron {
        return Ok(("heron_area", named(&["x", "y", "z"], v), heron_area(v[0], v[1], v[2])?));
    }
    if let Some(v) = &a.regular_area {
        let spec = RegularSpec::new(v[0], v[1])?;
        return Ok(("regular_area", named(&["n", "theta"], v), regular_area(spec)));
    }
    if let Some(v) = &a.regular_perimeter {
        let spec = RegularSpec::new(v[0], v[1])?;
        return Ok(("regular_perimeter", named(&["n", "theta"], v), regular_perimeter(spec)?));
    }
    if let Some(v) = &a.angle {
        return Ok(("angle_from_perimeter", named(&["n", "P"], v), angle_from_perimeter(v[0], v[1])?));
    }
    if let Some(v) = &a.area_n {
        return Ok(("area_fixed_perimeter", named(&["n", "P"], v), area_fixed_perimeter(v[0], v[1])?));
    }
    if let Some(v) = &a.side {
        return Ok(("side_opposite", named(&["t1", "t2", "t3"], v), side_opposite(v[0], v[1], v[2])?));
    }
    if let Some(p) = a.circle_bound {
        return Ok(("circle_area_bound", named(&["P"], &[p]), circle_area_bound(p)));
    }
    Err(GeomError::domain("no quantity selected"))
}

pub fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> GeomResult<i32> {
    let (quantity, inputs, value) = evaluate(a)?;
    if a.json {
        let doc = json!({ "quantity": quantity, "inputs": inputs, "value": value });
        writeln!(out, "{}", to_string_pretty(&doc)).map_err(io_err)?;
    } else {
        writeln!(out, "{value:.15}").map_err(io_err)?;
    }
    Ok(0)
}

/// Effective parameters of every verify check, as printed in the header.
pub fn verify_parameters(a: &VerifyArgs) -> GeomResult<Value> {
    let p = match a.perimeter {
        Some(p) => p,
        None => p_k(7.0)?,
    };
    let concavity = a.grid.unwrap_or(Grid { lo: 2.0, hi: 200.0, step: 0.25 });
    let ratio = a.grid.unwrap_or(Grid { lo: 6.01, hi: 100.0, step: 0.05 });
    let (n_hi, step) = a.grid.map_or((400.0, 0.25), |g| (g.hi, g.step));
    Ok(json!({
        "concavity": { "P": p, "lo": concavity.lo, "hi": concavity.hi, "step": concavity.step },
        "doubling": { "k": a.k, "n_hi": n_hi, "step": step },
        "isosceles": { "pairs": a.pairs, "points": a.points, "seed": a.seed },
        "perimeter_ratio": { "lo": ratio.lo, "hi": ratio.hi, "step": ratio.step },
        "regular_monotone": { "area": a.area.unwrap_or(FRAC_PI_3), "n_max": a.n_max },
        "sextic": { "arithmetic": "exact" },
    }))
}

pub fn run_check(name: CheckName, params: &Value) -> GeomResult<AuditReport> {
    let p = &params[name.as_str()];
    let f = |key: &str| p[key].as_f64().expect("numeric parameter");
    let u = |key: &str| p[key].as_u64().expect("integer parameter") as usize;
    match name {
        CheckName::Concavity => verify_concavity(f("P"), f("lo"), f("hi"), f("step")),
        CheckName::Doubling => verify_doubling(f("k"), f("n_hi"), f("step")),
        CheckName::Isosceles => verify_isosceles(u("pairs"), u("points"), p["seed"].as_u64().unwrap_or(1)),
        CheckName::PerimeterRatio => perimeter_ratio_scan(f("lo"), f("hi"), f("step")),
        CheckName::RegularMonotone => verify_regular_monotone(f("area"), u("n_max")),
        CheckName::Sextic => Ok(sextic_check()),
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> GeomResult<i32> {
    let mut checks: Vec<CheckName> = if a.all { CheckName::ALL.to_vec() } else { a.check.clone() };
    checks.sort();
    checks.dedup();
    let params = verify_parameters(a)?;
    let reports = checks
        .par_iter()
        .map(|&c| run_check(c, &params))
        .collect::<GeomResult<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let selected: Vec<&str> = checks.iter().map(|c| c.as_str()).collect();
    let doc = json!({
        "header": { "command": "verify", "checks": selected, "parameters": params },
        "reports": reports,
        "passed": passed,
    });
    let text = to_string_pretty(&doc);
    let summary: &mut dyn Write = match &a.out {
        Some(path) => {
            write_file(path, &(text + "\n"))?;
            out
        }
        None => {
            writeln!(out, "{text}").map_err(io_err)?;
            err
        }
    };
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        writeln!(summary, "{verdict} {} min_slack={:e}", r.check, r.min_slack).map_err(io_err)?;
    }
    Ok(if passed { 0 } else { 1 })
}

pub fn resolve_seed(explicit: Option<u64>) -> GeomResult<u64> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| GeomError::domain(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

pub fn cmd_optimize(a: &OptimizeArgs, out: &mut dyn Write, err: &mut dyn Write) -> GeomResult<i32> {
    let seed = resolve_seed(a.seed)?;
    let mut opts = OptimizerOptions::default();
    if let Some(r) = a.restarts {
        opts.restarts = r;
    }
    if let Some(m) = a.max_evals {
        opts.max_evals = m;
    }
    let res = min_perimeter_polygon_with(a.n, a.area, seed, &opts)?;
    let doc = json!({
        "header": { "command": "optimize", "options": opts, "tol_opt": TOL_OPT },
        "result": res,
    });
    let text = to_string_pretty(&doc) + "\n";
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    writeln!(
        err,
        "perimeter {:.15} benchmark {:.15} gap {:e}",
        res.perimeter, res.benchmark_perimeter, res.perimeter_gap
    )
    .map_err(io_err)?;
    let sound = res.perimeter_gap >= -TOL_OPT;
    Ok(if res.converged && sound { 0 } else { 1 })
}

/// Loads the tiling named by the `source` arguments.
pub fn load_tiling(a: &TileArgs) -> GeomResult<TilingGraph> {
    if let Some(k) = a.k {
        return generate_patch(k, a.depth);
    }
    if let Some(name) = &a.fixture {
        return fixture(name);
    }
    let path = a.input.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path).map_err(|e| GeomError::Io(format!("{}: {e}", path.display())))?;
    TilingGraph::from_json(&text)
}

/// Runs the named tiling audits in `AUDIT_NAMES` order. Each entry is a
/// JSON object with at least `check` and `passed`; `passed` is null and
/// `skipped` holds the reason when an audit's precondition does not hold.
pub fn run_audits(t: &TilingGraph, names: &[String], k: f64) -> GeomResult<Vec<Value>> {
    let all = names.iter().any(|n| n == "all");
    let wanted = |n: &str| all || names.iter().any(|m| m == n);
    let mut reports = Vec::new();
    let invariants = t.check_invariants()?;
    for inv in invariants.iter().filter(|c| c.invariant != "gauss_bonnet") {
        if wanted(inv.invariant) {
            reports.push(json!({
                "check": inv.invariant,
                "passed": inv.passed,
                "message": inv.message,
            }));
        }
    }
    let as_value = |r: AuditReport| serde_json::to_value(r).expect("serializable report");
    let or_error = |check: &str, r: GeomResult<Value>| {
        r.unwrap_or_else(|e| json!({ "check": check, "passed": false, "error": e.to_string() }))
    };
    let skipped = |check: &str, reason: String| json!({ "check": check, "passed": Value::Null, "skipped": reason });
    let unlifted = t.faces.iter().filter(|f| t.face_polygon(f).is_err()).count();
    let area_mismatch = degree_precondition(t, k);
    if wanted("gauss_bonnet") {
        reports.push(or_error("gauss_bonnet", gauss_bonnet_audit(t).map(as_value)));
    }
    if wanted("angle_sums") {
        reports.push(or_error("angle_sums", angle_sum_audit(t).map(as_value)));
    }
    if wanted("vertex_degree") {
        reports.push(match area_mismatch {
            Some(reason) => skipped("vertex_degree", reason),
            None => or_error("vertex_degree", degree_audit(t, k).map(as_value)),
        });
    }
    if wanted("hull_cover") && unlifted > 0 {
        reports.push(skipped("hull_cover", format!("{unlifted} face(s) without a lift")));
    } else if wanted("hull_cover") {
        let r = hull_cover_audit(t, k).map(|h| {
            let passed = h.passed();
            let mut v = serde_json::to_value(h).expect("serializable report");
            v["passed"] = passed.into();
            v
        });
        reports.push(or_error("hull_cover", r));
    }
    Ok(reports)
}

/// Why the vertex-degree audit does not apply: it needs mean face area `A_k`.
fn degree_precondition(t: &TilingGraph, k: f64) -> Option<String> {
    let area = if t.is_closed() { t.topological_area() } else { t.surface_area() };
    let (Ok(area), Ok(ak)) = (area, a_k(k)) else {
        return None;
    };
    let mean = area / t.faces.len() as f64;
    ((mean - ak).abs() > 1e-8 * ak.max(1.0))
        .then(|| format!("mean face area {mean} differs from A_k = {ak} at k = {k}"))
}

pub fn cmd_tile(a: &TileArgs, out: &mut dyn Write, err: &mut dyn Write) -> GeomResult<i32> {
    let t = load_tiling(a)?;
    let tiling_json = t.to_json() + "\n";
    match &a.out {
        Some(path) => write_file(path, &tiling_json)?,
        None if a.audit.is_empty() => out.write_all(tiling_json.as_bytes()).map_err(io_err)?,
        None => {}
    }
    if let Some(path) = &a.svg {
        write_file(path, &render_tiling(&t))?;
    }
    if a.audit.is_empty() {
        return Ok(0);
    }
    let reports = run_audits(&t, &a.audit, a.audit_k)?;
    let passed = reports.iter().all(|r| r["passed"] != Value::Bool(false));
    let doc = json!({
        "header": { "command": "tile", "tiling": t.meta.name, "audits": a.audit, "audit_k": a.audit_k },
        "reports": reports,
        "passed": passed,
    });
    writeln!(out, "{}", to_string_pretty(&doc)).map_err(io_err)?;
    for r in &reports {
        if let Some(reason) = r.get("skipped") {
            writeln!(err, "SKIP {}: {reason}", r["check"].as_str().unwrap_or("?")).map_err(io_err)?;
        } else if r["passed"] == Value::Bool(false) {
            let why = r.get("message").or_else(|| r.get("error")).or_else(|| r.get("verdict"));
            writeln!(err, "FAIL {}: {}", r["check"].as_str().unwrap_or("?"), why.unwrap_or(&Value::Null))
                .map_err(io_err)?;
        }
    }
    Ok(if passed { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hypertile").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grid_parsing() {
        assert_eq!("2:200:0.25".parse::<Grid>().unwrap(), Grid { lo: 2.0, hi: 200.0, step: 0.25 });
        assert!("2:1:0.1".parse::<Grid>().is_err());
        assert!("0:1:0".parse::<Grid>().is_err());
        assert!("0:1".parse::<Grid>().is_err());
    }

    #[test]
    fn eval_ak() {
        let (code, out, _) = run_capture(&["eval", "--Ak", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "1.047197551196598");
    }

    #[test]
    fn eval_json_shape() {
        let (code, out, _) = run_capture(&["eval", "--heron", "1", "1", "1", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["quantity"], "heron_area");
        assert_eq!(v["inputs"]["y"], 1.0);
    }

    #[test]
    fn eval_domain_error_exits_2() {
        let (code, _, err) = run_capture(&["eval", "--Pk", "5"]);
        assert_eq!(code, 2);
        assert!(err.contains("domain"), "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["verify", "--check", "nope"]).0, 2);
        assert_eq!(run_capture(&["eval"]).0, 2);
        assert_eq!(run_capture(&["verify", "--check", "sextic", "--grid", "3:1:1"]).0, 2);
    }

    #[test]
    fn optimize_infeasible() {
        let (code, _, err) = run_capture(&["optimize", "--n", "7", "--area", "20"]);
        assert_eq!(code, 2);
        assert!(err.contains("20"), "{err}");
    }

    #[test]
    fn explicit_seed_wins() {
        assert_eq!(resolve_seed(Some(5)).unwrap(), 5);
    }
}
