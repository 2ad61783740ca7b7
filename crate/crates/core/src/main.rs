//! Command-line surface: exact and closed-form independence numbers,
//! construction generation and verification, the published bound table,
//! chromatic lower bounds, DIMACS solving, and the dimension-9 counting
//! argument. Exit codes: 0 success, 2 incomplete solve, 1 usage or input
//! error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trigraph::appendix::{self, AppendixEntry, LConstraint};
use trigraph::build;
use trigraph::cache::{cache_key, now_epoch_secs, CacheRecord, ResultCache};
use trigraph::constructions::{self, Construction, ConstructionKind};
use trigraph::formulas;
use trigraph::model::Graph;
use trigraph::solver::{
    max_independent_set, Budget, SolveOptions, SolveOutcome, SolveReport, SOLVER_VERSION,
};

const THREADS_ENV: &str = "TRIGRAPH_THREADS";
const CACHE_DIR_ENV: &str = "TRIGRAPH_CACHE_DIR";
const DEFAULT_CACHE_DIR: &str = ".trigraph-cache";

/// Exact solves above this dimension require an explicit budget.
const DEFAULT_EXACT_LIMIT: usize = 8;

#[derive(Parser)]
#[command(
    name = "trigraph",
    version,
    about = "Exact independence numbers, extremal constructions and chromatic \
             lower bounds for three-support sign-vector distance graphs"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for exact solves (default: available parallelism,
    /// or the TRIGRAPH_THREADS environment variable).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Directory of the append-only result cache
    /// (default: TRIGRAPH_CACHE_DIR or ./.trigraph-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Disable the result cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number of the dimension-n graph, by formula and/or
    /// exact solve.
    Alpha(AlphaArgs),
    /// Generate an extremal construction; optionally verify and report it.
    Construct(ConstructArgs),
    /// Reproduce the published bound table for signplace-constrained
    /// subgraphs.
    Appendix(AppendixArgs),
    /// Chromatic lower bounds ceil(order / alpha) over a dimension range.
    Chi(ChiArgs),
    /// Exact maximum independent set of a DIMACS graph file.
    SolveDimacs(SolveDimacsArgs),
    /// The counting contradiction behind the dimension-9 chromatic bound 22.
    Prop9,
}

#[derive(Args)]
struct AlphaArgs {
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Solve exactly (bounded to n <= 8 unless a budget is given).
    #[arg(long, conflicts_with_all = ["formula", "both"])]
    exact: bool,
    /// Evaluate the closed formula only.
    #[arg(long, conflicts_with = "both")]
    formula: bool,
    /// Both, plus an agreement check (default).
    #[arg(long)]
    both: bool,
    /// Time budget for the exact solve, in seconds.
    #[arg(long)]
    budget: Option<u64>,
    /// Node budget for the exact solve.
    #[arg(long)]
    budget_nodes: Option<u64>,
}

#[derive(Args)]
struct ConstructArgs {
    /// quad | cobra | double-cobra | nagy
    #[arg(long)]
    kind: String,
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Check independence, size and spectrum, and report them.
    #[arg(long)]
    verify: bool,
    /// Write the construction text to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AppendixArgs {
    /// Reproduce all published entries.
    #[arg(long, conflicts_with = "m")]
    all: bool,
    /// Signplace count of a single entry.
    #[arg(long)]
    m: Option<usize>,
    /// Require the place count to equal this value.
    #[arg(long, conflicts_with = "l_min")]
    l: Option<usize>,
    /// Require the place count to be at least this value.
    #[arg(long)]
    l_min: Option<usize>,
    /// Time budget per configuration, in seconds.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct ChiArgs {
    #[arg(long, default_value_t = 3)]
    from: usize,
    #[arg(long, default_value_t = 12)]
    to: usize,
}

#[derive(Args)]
struct SolveDimacsArgs {
    /// DIMACS graph file (p edge header, e lines).
    path: PathBuf,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<u64>,
    /// Node budget.
    #[arg(long)]
    budget_nodes: Option<u64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::Incomplete) => ExitCode::from(2),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum Status {
    Done,
    Incomplete,
}

struct Ctx {
    format: Format,
    threads: Option<usize>,
    cache: Option<ResultCache>,
    started: Instant,
}

impl Ctx {
    fn solve_options(&self, budget: Budget) -> SolveOptions {
        SolveOptions { budget, threads: self.threads }
    }

    /// Exact solve with cache consult/record; returns the report and whether
    /// it came from the cache.
    fn solve_cached(&self, g: &Graph, budget: Budget) -> (SolveReport, bool) {
        let key = self.cache.as_ref().map(|_| cache_key(g));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            let hit = cache.lookup(g, key);
            if hit.corrupt_lines > 0 {
                eprintln!(
                    "warning: skipped {} corrupt cache line(s) in {}",
                    hit.corrupt_lines,
                    cache.file_path().display()
                );
            }
            if hit.rejected > 0 {
                eprintln!("warning: ignored {} cache record(s) that failed verification", hit.rejected);
            }
            if let Some(rec) = hit.record {
                let witness = trigraph::IndependentSet::new(g, rec.witness.unwrap_or_default())
                    .expect("verified cache witness");
                let report = SolveReport {
                    outcome: SolveOutcome::Exact { alpha: rec.alpha },
                    witness,
                    nodes: 0,
                    elapsed: Duration::ZERO,
                    settings: trigraph::solver::SolverSettings::new(
                        self.threads.unwrap_or_else(trigraph::solver::default_threads),
                    ),
                };
                return (report, true);
            }
        }
        let report = max_independent_set(g, self.solve_options(budget));
        if let (Some(cache), Some(key), SolveOutcome::Exact { alpha }) =
            (&self.cache, &key, report.outcome)
        {
            let rec = CacheRecord {
                key: key.clone(),
                alpha,
                witness: Some(report.witness.members().to_vec()),
                timestamp: now_epoch_secs(),
                solver_version: SOLVER_VERSION.to_string(),
            };
            if let Err(e) = cache.append(&rec) {
                eprintln!("warning: could not write cache: {e}");
            }
        }
        (report, false)
    }

    fn emit(&self, command: &str, params: Value, results: Vec<Value>, text: String) {
        match self.format {
            Format::Text => print!("{text}"),
            Format::Json => {
                let envelope = json!({
                    "command": command,
                    "params": params,
                    "results": results,
                    "solver_version": SOLVER_VERSION,
                    "elapsed_ms": self.started.elapsed().as_millis() as u64,
                });
                println!("{}", serde_json::to_string_pretty(&envelope).expect("report serializes"));
            }
            Format::Csv => unreachable!("csv handled per command"),
        }
    }
}

fn budget_from(secs: Option<u64>, nodes: Option<u64>) -> Budget {
    Budget { time: secs.map(Duration::from_secs), nodes }
}

fn run(cli: Cli) -> Result<Status, String> {
    let threads = cli
        .threads
        .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    let cache = if cli.no_cache {
        None
    } else {
        let dir = cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var(CACHE_DIR_ENV).ok().map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Some(ResultCache::new(dir))
    };
    let ctx = Ctx { format: cli.format, threads, cache, started: Instant::now() };
    match cli.command {
        Command::Alpha(args) => cmd_alpha(&ctx, args),
        Command::Construct(args) => cmd_construct(&ctx, args),
        Command::Appendix(args) => cmd_appendix(&ctx, args),
        Command::Chi(args) => cmd_chi(&ctx, args),
        Command::SolveDimacs(args) => cmd_solve_dimacs(&ctx, args),
        Command::Prop9 => cmd_prop9(&ctx),
    }
}

fn report_solve_fields(report: &SolveReport, cached: bool) -> Value {
    let (complete, lower, upper) = match report.outcome {
        SolveOutcome::Exact { alpha } => (true, alpha, alpha),
        SolveOutcome::Incomplete { lower, upper } => (false, lower, upper),
    };
    json!({
        "complete": complete,
        "lower": lower,
        "upper": upper,
        "alpha": report.outcome.alpha(),
        "witness": report.witness.members(),
        "nodes": report.nodes,
        "elapsed_ms": report.elapsed.as_millis() as u64,
        "threads": report.settings.threads,
        "cached": cached,
    })
}

fn cmd_alpha(ctx: &Ctx, args: AlphaArgs) -> Result<Status, String> {
    let n = args.n;
    let mode_exact = args.exact || args.both || (!args.formula && !args.exact);
    let mode_formula = args.formula || args.both || (!args.formula && !args.exact);
    let budget = budget_from(args.budget, args.budget_nodes);
    if mode_exact && n > DEFAULT_EXACT_LIMIT && budget.is_unlimited() {
        return Err(format!(
            "exact solves above n = {DEFAULT_EXACT_LIMIT} need an explicit --budget or --budget-nodes"
        ));
    }
    if mode_exact && n > trigraph::model::MAX_DIM {
        return Err(format!("exact mode supports n <= {}", trigraph::model::MAX_DIM));
    }

    let formula_value = mode_formula.then(|| formulas::alpha_formula(n));
    let solve = if mode_exact {
        let g = build::build_gn(n).map_err(|e| e.to_string())?;
        Some(ctx.solve_cached(&g, budget))
    } else {
        None
    };

    let (complete, exact_value) = match &solve {
        Some((report, _)) => (report.outcome.is_exact(), report.outcome.alpha()),
        None => (true, None),
    };
    let matches = match (formula_value, exact_value) {
        (Some(f), Some(e)) => Some(f == e),
        _ => None,
    };

    let mut result = json!({
        "n": n,
        "formula": formula_value,
        "match": matches,
    });
    if let Some((report, cached)) = &solve {
        let fields = report_solve_fields(report, *cached);
        for (k, v) in fields.as_object().unwrap() {
            result[k] = v.clone();
        }
    }

    match ctx.format {
        Format::Csv => {
            println!("n,formula,exact_lower,exact_upper,complete,match,nodes,elapsed_ms,cached");
            let row = |v: &Value, key: &str| -> String {
                match &v[key] {
                    Value::Null => String::new(),
                    Value::Bool(b) => b.to_string(),
                    other => other.to_string(),
                }
            };
            println!(
                "{},{},{},{},{},{},{},{},{}",
                n,
                formula_value.map(|v| v.to_string()).unwrap_or_default(),
                row(&result, "lower"),
                row(&result, "upper"),
                row(&result, "complete"),
                row(&result, "match"),
                row(&result, "nodes"),
                row(&result, "elapsed_ms"),
                row(&result, "cached"),
            );
        }
        _ => {
            let mut text = format!("n: {n}\n");
            if let Some(f) = formula_value {
                text += &format!("formula: {f}\n");
            }
            if let Some((report, cached)) = &solve {
                match report.outcome {
                    SolveOutcome::Exact { alpha } => {
                        text += &format!("exact: {alpha}\n");
                    }
                    SolveOutcome::Incomplete { lower, upper } => {
                        text += &format!("exact: incomplete, alpha in [{lower}, {upper}]\n");
                    }
                }
                text += &format!(
                    "witness ({}): {}\n",
                    report.witness.len(),
                    join(report.witness.members())
                );
                text += &format!(
                    "nodes: {}\nelapsed_ms: {}\ncached: {}\n",
                    report.nodes,
                    report.elapsed.as_millis(),
                    cached
                );
            }
            if let Some(m) = matches {
                text += &format!("match: {m}\n");
            }
            ctx.emit("alpha", json!({"n": n}), vec![result], text);
        }
    }
    Ok(if complete { Status::Done } else { Status::Incomplete })
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn expected_size(kind: ConstructionKind, n: usize) -> usize {
    match kind {
        ConstructionKind::QuadPacking => 4 * n - 4 * formulas::c_const(n),
        ConstructionKind::Cobra => 3 * n - 14,
        ConstructionKind::DoubleCobra => 6 * n - 28,
        ConstructionKind::NagySet => n - formulas::c_const(n),
        ConstructionKind::Snake => 0,
    }
}

fn cmd_construct(ctx: &Ctx, args: ConstructArgs) -> Result<Status, String> {
    let kind = ConstructionKind::parse(&args.kind)
        .ok_or_else(|| format!("unknown kind '{}' (expected quad, cobra, double-cobra or nagy)", args.kind))?;
    let c: Construction = match kind {
        ConstructionKind::QuadPacking => constructions::quad_packing(args.n),
        ConstructionKind::Cobra => constructions::cobra(args.n),
        ConstructionKind::DoubleCobra => constructions::double_cobra(args.n),
        ConstructionKind::NagySet => constructions::nagy_set(args.n),
        ConstructionKind::Snake => {
            return Err("snakes are built through the library API; generate a cobra instead".into())
        }
    }
    .map_err(|e| e.to_string())?;

    let text_form = c.to_text();
    if let Some(path) = &args.out {
        std::fs::write(path, &text_form).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }

    if !args.verify {
        if args.out.is_none() {
            print!("{text_form}");
        }
        return Ok(Status::Done);
    }

    let independent = c.is_independent();
    let expected = expected_size(kind, args.n);
    let size_ok = c.len() == expected;
    let spectrum: Vec<i32> = c.spectrum().into_iter().collect();
    let result = json!({
        "kind": kind.as_str(),
        "n": args.n,
        "size": c.len(),
        "expected_size": expected,
        "size_ok": size_ok,
        "independent": independent,
        "signplaces": c.signplace_count(),
        "spectrum": spectrum,
    });
    match ctx.format {
        Format::Csv => {
            println!("kind,n,size,expected_size,independent,signplaces,spectrum");
            println!(
                "{},{},{},{},{},{},{}",
                kind.as_str(),
                args.n,
                c.len(),
                expected,
                independent,
                c.signplace_count(),
                spectrum.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(";")
            );
        }
        _ => {
            let text = format!(
                "kind: {}\nn: {}\nsize: {} (expected {})\nindependent: {}\nsignplaces: {}\nspectrum: {}\n",
                kind.as_str(),
                args.n,
                c.len(),
                expected,
                independent,
                c.signplace_count(),
                spectrum.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
            );
            ctx.emit(
                "construct",
                json!({"kind": kind.as_str(), "n": args.n}),
                vec![result],
                text,
            );
        }
    }
    if !independent || !size_ok {
        return Err("construction failed verification".into());
    }
    Ok(Status::Done)
}

fn cmd_appendix(ctx: &Ctx, args: AppendixArgs) -> Result<Status, String> {
    let opts = ctx.solve_options(budget_from(args.budget, None));
    let entries: Vec<AppendixEntry> = if args.all {
        appendix::appendix_table(opts)
    } else if let Some(m) = args.m {
        let l = match (args.l, args.l_min) {
            (Some(k), _) => LConstraint::Equals(k),
            (None, Some(k)) => LConstraint::AtLeast(k),
            (None, None) => LConstraint::Any,
        };
        vec![appendix::appendix_entry(m, l, opts)]
    } else {
        return Err("pass --all or --m <signplaces>".into());
    };

    let exceeded = entries.iter().filter(|e| !e.within_published()).count();
    let incomplete = entries.iter().any(|e| !e.exact);

    match ctx.format {
        Format::Csv => print!("{}", appendix::to_csv(&entries)),
        Format::Text => {
            print!("{}", appendix::to_text(&entries));
            if exceeded > 0 {
                println!(
                    "WARNING: {exceeded} entr(ies) exceed the published bound; \
                     the published value evidently assumes extra side conditions"
                );
            }
        }
        Format::Json => {
            let results = entries
                .iter()
                .map(|e| {
                    let mut v = serde_json::to_value(e).expect("entry serializes");
                    v["status"] = Value::String(e.status_label().to_string());
                    v
                })
                .collect();
            ctx.emit(
                "appendix",
                json!({"all": args.all, "m": args.m, "l": args.l, "l_min": args.l_min}),
                results,
                String::new(),
            );
        }
    }
    Ok(if incomplete { Status::Incomplete } else { Status::Done })
}

fn cmd_chi(ctx: &Ctx, args: ChiArgs) -> Result<Status, String> {
    if args.from < 3 {
        return Err("chromatic bounds start at n = 3".into());
    }
    if args.to < args.from {
        return Err("--to must be at least --from".into());
    }
    let rows: Vec<formulas::ChiBound> = (args.from..=args.to).map(formulas::chi_lower_bound).collect();
    match ctx.format {
        Format::Csv => {
            println!("n,order,alpha,bound");
            for r in &rows {
                println!("{},{},{},{}", r.n, r.order, r.alpha, r.bound);
            }
        }
        Format::Text => {
            println!("   n      order  alpha  bound");
            for r in &rows {
                println!("{:>4} {:>10} {:>6} {:>6}", r.n, r.order, r.alpha, r.bound);
            }
        }
        Format::Json => {
            let results = rows
                .iter()
                .map(|r| serde_json::to_value(r).expect("row serializes"))
                .collect();
            ctx.emit(
                "chi",
                json!({"from": args.from, "to": args.to}),
                results,
                String::new(),
            );
        }
    }
    Ok(Status::Done)
}

fn cmd_solve_dimacs(ctx: &Ctx, args: SolveDimacsArgs) -> Result<Status, String> {
    let text = std::fs::read_to_string(&args.path)
        .map_err(|e| format!("reading {}: {e}", args.path.display()))?;
    let g = build::from_dimacs(&text).map_err(|e| e.to_string())?;
    let (report, cached) = ctx.solve_cached(&g, budget_from(args.budget, args.budget_nodes));
    let result = report_solve_fields(&report, cached);
    match ctx.format {
        Format::Csv => {
            println!("path,order,edges,lower,upper,complete,nodes,elapsed_ms,cached");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                args.path.display(),
                g.order(),
                g.edge_count(),
                report.outcome.lower(),
                report.outcome.upper(),
                report.outcome.is_exact(),
                report.nodes,
                report.elapsed.as_millis(),
                cached
            );
        }
        _ => {
            let mut text = format!(
                "graph: {} ({} vertices, {} edges)\n",
                args.path.display(),
                g.order(),
                g.edge_count()
            );
            match report.outcome {
                SolveOutcome::Exact { alpha } => text += &format!("alpha: {alpha}\n"),
                SolveOutcome::Incomplete { lower, upper } => {
                    text += &format!("alpha: incomplete, in [{lower}, {upper}]\n")
                }
            }
            text += &format!(
                "witness ({}): {}\nnodes: {}\nelapsed_ms: {}\ncached: {}\n",
                report.witness.len(),
                join(report.witness.members()),
                report.nodes,
                report.elapsed.as_millis(),
                cached
            );
            ctx.emit(
                "solve-dimacs",
                json!({"path": args.path.display().to_string()}),
                vec![result],
                text,
            );
        }
    }
    Ok(if report.outcome.is_exact() { Status::Done } else { Status::Incomplete })
}

fn cmd_prop9(ctx: &Ctx) -> Result<Status, String> {
    let cert = formulas::prop9_check();
    match ctx.format {
        Format::Csv => {
            println!("bases_avoiding_place,double_coverage,solutions,class_count,feasible,chromatic_bound");
            println!(
                "{},{},{},{},{},{}",
                cert.bases_avoiding_place,
                cert.double_coverage,
                cert.solutions
                    .iter()
                    .map(|(a, b)| format!("({a};{b})"))
                    .collect::<Vec<_>>()
                    .join(" "),
                cert.class_count,
                cert.feasible,
                cert.chromatic_bound
            );
        }
        _ => {
            let mut text = format!(
                "bases avoiding a fixed place: {}\ncovered twice: {}\n",
                cert.bases_avoiding_place, cert.double_coverage
            );
            text += &format!(
                "solutions of 8a + 5b = {}: {}\n",
                cert.double_coverage,
                cert.solutions
                    .iter()
                    .map(|(a, b)| format!("(a={a}, b={b})"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            text += &format!(
                "a + b = {} feasible: {}\nchromatic lower bound: {}\n",
                cert.class_count, cert.feasible, cert.chromatic_bound
            );
            ctx.emit(
                "prop9",
                json!({}),
                vec![serde_json::to_value(&cert).expect("certificate serializes")],
                text,
            );
        }
    }
    Ok(Status::Done)
}
