//! Command-line front end: parse an arrangement from a file, an inline family
//! spec or a corpus name, dispatch the requested computation, and print the
//! result as a human-readable table or as JSON.
//!
//! The JSON envelope is stable:
//! `{"command": ..., "input_summary": {"n", "rank", "ambient_dim"},
//!   "result": {...}, "seed": ...}`
//! with every coefficient emitted as a decimal string (values can exceed any
//! machine integer). `verify --corpus` has no single input, so its
//! `input_summary` is `null`. All diagnostics go to stderr; exit codes are 0
//! on success, 1 on a computation error, 2 on a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::path::Path;
use std::process::ExitCode;
use zonotopal::arrangement::{parse_arrangement, parse_family_spec, VectorConfiguration};
use zonotopal::corpus;
use zonotopal::coxring::{
    cox_closed_form, cox_table_direct, line_hyperplane_matrix, CoxMode, LineHyperplaneMatrix,
    MultigradedTable, DEFAULT_MAX_A, DEFAULT_MAX_T,
};
use zonotopal::exactmath::scalar::Rat;
use zonotopal::fatpoints::{
    fatpoint_ideal_series, fatpoint_quotient_closed, fatpoint_quotient_corrected,
    fatpoint_quotient_direct,
};
use zonotopal::oracle::flats_ideal_dims;
use zonotopal::tutte::{tutte_by_deletion_contraction, TuttePolynomial};
use zonotopal::verify::{all_passed, corpus_battery, run_battery, CheckResult};
use zonotopal::zonotopal::{
    basis_monomials, hilbert_series, monomial_degree_counts, GradedDims, ZonotopalError,
};

#[derive(Parser)]
#[command(
    name = "zonotopal",
    about = "Exact invariants of hyperplane arrangements: Tutte polynomials, power-ideal \
             Hilbert series, monomial bases, fat-point filtrations, Cox tables",
    after_help = "SOURCES:\n  an arrangement file (see `data/` for the format), an inline family \
                  spec\n  (`braid:4`, `boolean:3,1`, `graphic:1-2,2-3,1-3`), or a corpus name\n  \
                  (b2, u23, u23-211, g, two-pencils, braid3, braid4, boolean21)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial coefficient table (memoized deletion-contraction)
    Tutte(TutteArgs),
    /// Hilbert series of the inverse system of the power ideal at shift k
    Hilbert(HilbertArgs),
    /// Explicit monomial basis of the inverse system at shift k
    Basis(BasisArgs),
    /// Brute-force graded dimensions computed from the ideal generators
    Oracle(OracleArgs),
    /// Fat-point ideal and quotient series of the filtration at step k
    Fatpoints(FatpointsArgs),
    /// Multigraded Cox table in the hyperplane and line gradings
    Cox(CoxArgs),
    /// Cross-check battery over one source or the built-in corpus
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TutteArgs {
    /// Arrangement file, family spec, or corpus name
    source: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Args)]
struct HilbertArgs {
    source: String,
    /// Shift of the power ideal exponents (the closed form needs k >= -2)
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Truncation degree for the oracle route (default n + max(k, 0) + 2)
    #[arg(long)]
    max_degree: Option<usize>,
    /// Closed form, brute-force generators, or both with a comparison
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BasisArgs {
    source: String,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    source: String,
    /// Shift of the power ideal exponents; any integer is accepted here
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Truncation degree (default n + max(k, 0) + 2)
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FatpointsArgs {
    source: String,
    /// Filtration step, 0 <= k <= n
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Truncation degree (default n + 4)
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Ring,
    Central,
    Internal,
}

impl From<ModeArg> for CoxMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Ring => CoxMode::Ring,
            ModeArg::Central => CoxMode::Central,
            ModeArg::Internal => CoxMode::Internal,
        }
    }
}

#[derive(Args)]
struct CoxArgs {
    source: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Ring)]
    mode: ModeArg,
    /// Cap on the polynomial degree d
    #[arg(long, default_value_t = DEFAULT_MAX_T)]
    trunc_t: usize,
    /// Cap on the total hyperplane multiplicity |a|
    #[arg(long, default_value_t = DEFAULT_MAX_A)]
    trunc_a: usize,
    /// Entry-by-entry route, the closed generating function, or both
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifyTarget {
    /// Arrangement file, family spec, or corpus name
    source: Option<String>,
    /// Run the battery over every built-in corpus configuration instead
    #[arg(long)]
    corpus: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: VerifyTarget,
    /// Seed for the sampled directional-degree cross-check
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when a pipe closes early (`zonotopal ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Tutte(args) => cmd_tutte(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Basis(args) => cmd_basis(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Fatpoints(args) => cmd_fatpoints(args),
        Command::Cox(args) => cmd_cox(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Resolve a source string: an existing file wins, then `name:args` family
/// specs, then corpus names.
fn load_source(source: &str) -> Result<VectorConfiguration, CliError> {
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError(format!("cannot read {source}: {e}")))?;
        return parse_arrangement(&text).map_err(|e| CliError(format!("{source}: {e}")));
    }
    if source.contains(':') {
        return Ok(parse_family_spec(source)?);
    }
    if let Some(cfg) = corpus::by_name(source) {
        return Ok(cfg);
    }
    Err(CliError(format!(
        "{source}: no such file, and not a family spec (like `braid:4`) or corpus name"
    )))
}

fn input_summary(cfg: &VectorConfiguration) -> Value {
    json!({
        "n": cfg.len(),
        "rank": cfg.rank(),
        "ambient_dim": cfg.ambient_dim(),
    })
}

fn emit(command: &str, summary: Value, result: Value, seed: u64) {
    let envelope = json!({
        "command": command,
        "input_summary": summary,
        "result": result,
        "seed": seed,
    });
    println!("{envelope}");
}

fn dims_strings(dims: &GradedDims) -> Vec<String> {
    dims.dims().iter().map(|c| c.to_string()).collect()
}

fn dims_list(dims: &GradedDims) -> String {
    format!("[{}]", dims_strings(dims).join(", "))
}

fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

/// Render a signed coefficient list as a polynomial in `var`.
fn render_signed(coeffs: &[Rat], var: &str) -> String {
    let mut text = String::new();
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if text.is_empty() {
            if c.is_negative() {
                "-"
            } else {
                ""
            }
        } else if c.is_negative() {
            " - "
        } else {
            " + "
        };
        let magnitude = c.abs();
        let head = match d {
            0 => rat_string(&magnitude),
            _ if magnitude.is_one() => String::new(),
            _ => format!("{}*", rat_string(&magnitude)),
        };
        let tail = match d {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{d}"),
        };
        text.push_str(&format!("{sign}{head}{tail}"));
    }
    if text.is_empty() {
        text.push('0');
    }
    text
}

fn render_tutte(t: &TuttePolynomial) -> String {
    let mut parts = Vec::new();
    for ((i, j), c) in t.coefficients().iter().rev() {
        if c.is_zero() {
            continue;
        }
        let mut part = String::new();
        if !c.is_one() || (*i, *j) == (0, 0) {
            part.push_str(&c.to_string());
        }
        for (var, power) in [("x", *i), ("y", *j)] {
            if power == 1 {
                part.push_str(&format!("{}{var}", if part.is_empty() { "" } else { " " }));
            } else if power > 1 {
                part.push_str(&format!("{}{var}^{power}", if part.is_empty() { "" } else { " " }));
            }
        }
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn cmd_tutte(args: TutteArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let t = tutte_by_deletion_contraction(&cfg);
    if args.json {
        let coefficients: Vec<Value> = t
            .coefficients()
            .iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| json!({"x_power": i, "y_power": j, "value": c.to_string()}))
            .collect();
        emit(
            "tutte",
            input_summary(&cfg),
            json!({"polynomial": render_tutte(&t), "coefficients": coefficients}),
            0,
        );
    } else {
        println!("T(x, y) = {}", render_tutte(&t));
        println!("x-power  y-power  coefficient");
        for ((i, j), c) in t.coefficients().iter().rev() {
            if !c.is_zero() {
                println!("{i:>7}  {j:>7}  {c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Attach the pointer to the oracle subcommand when the closed form refuses
/// a shift.
fn formula_error(e: ZonotopalError) -> CliError {
    match e {
        ZonotopalError::UnsupportedShift { .. } => {
            CliError(format!("{e}; the `oracle` subcommand computes any shift by brute force"))
        }
        other => CliError(other.to_string()),
    }
}

fn cmd_hilbert(args: HilbertArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let max_degree = args.max_degree.unwrap_or(cfg.len() + args.k.max(0) as usize + 2);
    let formula = match args.method {
        Method::Formula | Method::Both => {
            Some(hilbert_series(&cfg, args.k).map_err(formula_error)?)
        }
        Method::Oracle => None,
    };
    let oracle = match args.method {
        Method::Oracle | Method::Both => Some(flats_ideal_dims(&cfg, args.k, max_degree)),
        Method::Formula => None,
    };
    let agree = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f.truncated(max_degree) == *o),
        _ => None,
    };
    if args.json {
        let mut result = serde_json::Map::new();
        result.insert("k".into(), json!(args.k));
        if let Some(f) = &formula {
            result.insert("formula".into(), json!(dims_strings(f)));
        }
        if let Some(o) = &oracle {
            result.insert("oracle".into(), json!(dims_strings(o)));
            result.insert("max_degree".into(), json!(max_degree));
        }
        if let Some(a) = agree {
            result.insert("agree".into(), json!(a));
        }
        emit("hilbert", input_summary(&cfg), Value::Object(result), 0);
    } else {
        if let Some(f) = &formula {
            println!("closed form: {}", dims_list(f));
            println!("H(q) = {}", f.render("q"));
        }
        if let Some(o) = &oracle {
            println!("oracle (up to degree {max_degree}): {}", dims_list(o));
        }
        if let Some(a) = agree {
            println!("agree: {}", if a { "yes" } else { "NO" });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_basis(args: BasisArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let monomials = basis_monomials(&cfg, args.k).map_err(formula_error)?;
    let counts = monomial_degree_counts(&monomials);
    if args.json {
        let list: Vec<Value> = monomials
            .iter()
            .map(|m| json!({"exponents": &m.exponents, "basis": &m.basis}))
            .collect();
        emit(
            "basis",
            input_summary(&cfg),
            json!({"k": args.k, "degree_counts": dims_strings(&counts), "monomials": list}),
            0,
        );
    } else {
        println!("{} monomials, degree counts {}", monomials.len(), dims_list(&counts));
        println!("exponents (one covector power per column) | underlying basis");
        for m in &monomials {
            let expo: Vec<String> = m.exponents.iter().map(u32::to_string).collect();
            let basis: Vec<String> = m.basis.iter().map(usize::to_string).collect();
            println!("{} | {{{}}}", expo.join(" "), basis.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let max_degree = args.max_degree.unwrap_or(cfg.len() + args.k.max(0) as usize + 2);
    let dims = flats_ideal_dims(&cfg, args.k, max_degree);
    if args.json {
        emit(
            "oracle",
            input_summary(&cfg),
            json!({"k": args.k, "max_degree": max_degree, "dims": dims_strings(&dims)}),
            0,
        );
    } else {
        println!("{}", dims_list(&dims));
        println!("H(q) = {}  (up to degree {max_degree})", dims.render("q"));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fatpoints(args: FatpointsArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let max_degree = args.max_degree.unwrap_or(cfg.len() + 4);
    let ideal = fatpoint_ideal_series(&cfg, args.k, max_degree)?;
    let quotient = fatpoint_quotient_direct(&cfg, args.k, max_degree)?;
    let corrected = fatpoint_quotient_corrected(&cfg, args.k, max_degree)?;
    let printed = fatpoint_quotient_closed(&cfg, args.k, max_degree)?;
    let corrected_ok = corrected.dims() == quotient.dims();
    let printed_dims: Vec<Rat> = (0..=max_degree)
        .map(|d| Rat::from_integer(quotient.dims().coefficient(d).into()))
        .collect();
    let printed_ok = printed
        .iter()
        .chain(std::iter::repeat(&Rat::zero()))
        .zip(&printed_dims)
        .all(|(a, b)| a == b);
    if args.json {
        emit(
            "fatpoints",
            input_summary(&cfg),
            json!({
                "k": args.k,
                "max_degree": max_degree,
                "ideal": dims_strings(ideal.dims()),
                "quotient": dims_strings(quotient.dims()),
                "corrected_closed_form": dims_strings(corrected.dims()),
                "corrected_matches_quotient": corrected_ok,
                "tutte_evaluation_closed_form": printed.iter().map(rat_string).collect::<Vec<_>>(),
                "tutte_evaluation_matches_quotient": printed_ok,
            }),
            0,
        );
    } else {
        println!("ideal series:     {}", ideal.dims().render("t"));
        println!("quotient series:  {}", quotient.dims().render("t"));
        println!(
            "corank-nullity closed form: {}  (matches quotient: {})",
            corrected.dims().render("t"),
            if corrected_ok { "yes" } else { "NO" }
        );
        println!(
            "tutte-evaluation closed form: {}  (matches quotient: {})",
            render_signed(&printed, "t"),
            if printed_ok { "yes" } else { "NO" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn table_entries_json(table: &MultigradedTable) -> Vec<Value> {
    table
        .entries()
        .iter()
        .map(|((d, a), dim)| json!({"d": d, "a": a, "dim": dim.to_string()}))
        .collect()
}

fn print_table(header: &str, entries: impl Iterator<Item = (usize, Vec<u32>, String)>) {
    println!("{header}");
    for (d, a, dim) in entries {
        let a: Vec<String> = a.iter().map(u32::to_string).collect();
        println!("{d:>3}  ({})  {dim}", a.join(", "));
    }
}

fn cmd_cox(args: CoxArgs) -> Result<ExitCode, CliError> {
    let cfg = load_source(&args.source)?;
    let mode: CoxMode = args.mode.into();
    let direct = match args.method {
        Method::Oracle | Method::Both => {
            Some(cox_table_direct(&cfg, mode, args.trunc_t, args.trunc_a)?)
        }
        Method::Formula => None,
    };
    let closed = match args.method {
        Method::Formula | Method::Both => {
            Some(cox_closed_form(&cfg, mode, args.trunc_t, args.trunc_a)?)
        }
        Method::Oracle => None,
    };
    let agree = match (&direct, &closed) {
        (Some(d), Some(c)) => Some(d == c),
        _ => None,
    };
    let table = direct.as_ref().or(closed.as_ref()).expect("one route always runs");
    let matrix: LineHyperplaneMatrix = line_hyperplane_matrix(&cfg)?;
    let truegrading = table.true_grading(&matrix);
    if args.json {
        let lines: Vec<Vec<String>> =
            matrix.lines().iter().map(|l| l.iter().map(|c| c.to_string()).collect()).collect();
        let true_entries: Vec<Value> = truegrading
            .iter()
            .map(|((d, b), dim)| json!({"d": d, "b": b, "dim": dim.to_string()}))
            .collect();
        let mut result = serde_json::Map::new();
        result.insert("mode".into(), json!(mode_name(mode)));
        result.insert("trunc_t".into(), json!(args.trunc_t));
        result.insert("trunc_a".into(), json!(args.trunc_a));
        result.insert("lines".into(), json!(lines));
        result.insert("line_matrix".into(), json!(matrix.entries()));
        result.insert("hyperplane_grading".into(), json!(table_entries_json(table)));
        result.insert("line_grading".into(), json!(true_entries));
        if let Some(a) = agree {
            result.insert("routes_agree".into(), json!(a));
        }
        emit("cox", input_summary(&cfg), Value::Object(result), 0);
    } else {
        println!(
            "mode {}, degree cap {}, multiplicity cap {}",
            mode_name(mode),
            args.trunc_t,
            args.trunc_a
        );
        println!(
            "line-hyperplane matrix ({} lines x {} hyperplanes):",
            matrix.lines_count(),
            cfg.len()
        );
        for (line, row) in matrix.lines().iter().zip(matrix.entries()) {
            let l: Vec<String> = line.iter().map(|c| c.to_string()).collect();
            let r: Vec<String> = row.iter().map(u8::to_string).collect();
            println!("  direction ({}): {}", l.join(", "), r.join(" "));
        }
        print_table(
            "hyperplane grading (d, multiplicities, dim):",
            table.entries().iter().map(|((d, a), dim)| (*d, a.clone(), dim.to_string())),
        );
        print_table(
            "line grading (d, line degrees, dim):",
            truegrading.iter().map(|((d, b), dim)| (*d, b.clone(), dim.to_string())),
        );
        if let Some(a) = agree {
            println!("routes agree: {}", if a { "yes" } else { "NO" });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn mode_name(mode: CoxMode) -> &'static str {
    match mode {
        CoxMode::Ring => "ring",
        CoxMode::Central => "central",
        CoxMode::Internal => "internal",
    }
}

fn check_json(check: &CheckResult) -> Value {
    json!({
        "name": check.name,
        "status": check.status.to_string(),
        "detail": check.detail,
    })
}

fn print_checks(checks: &[CheckResult]) {
    for check in checks {
        println!("  [{}] {} — {}", check.status, check.name, check.detail);
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let (summary, batches) = if args.target.corpus {
        (Value::Null, corpus_battery(args.seed))
    } else {
        let source = args.target.source.as_deref().expect("clap enforces the group");
        let cfg = load_source(source)?;
        let batches = vec![(source.to_string(), run_battery(&cfg, args.seed))];
        (input_summary(&cfg), batches)
    };
    let ok = batches.iter().all(|(_, checks)| all_passed(checks));
    if args.json {
        let configs: Vec<Value> = batches
            .iter()
            .map(|(name, checks)| {
                json!({
                    "name": name,
                    "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        emit("verify", summary, json!({"configs": configs, "all_passed": ok}), args.seed);
    } else {
        for (name, checks) in &batches {
            println!("{name}:");
            print_checks(checks);
        }
        let failed: usize = batches
            .iter()
            .flat_map(|(_, checks)| checks.iter())
            .filter(|c| c.status == zonotopal::verify::CheckStatus::Fail)
            .count();
        if failed == 0 {
            println!("all checks passed");
        } else {
            println!("{failed} check(s) FAILED");
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
