mod checks;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latinset::families::{families, Families, Fixtures};
use latinset::format::{render_grid, render_marked, to_json};
use latinset::scan::{scan, ScanMode, ScanReport};
use latinset::two_group::{build_h2, build_h2_hat, build_l, build_multiswap_g, build_p};
use latinset::{complete_unique, ggcs, is_critical_set, CellOrder, Error, Isotopism, PartialLatinSquare};
use serde::Serialize;

use checks::{Check, CheckReport};
use input::{parse_budget, parse_levels, Builtin};

/// Constructs and verifies critical sets in latin squares of the
/// elementary abelian 2-group.
#[derive(Parser)]
#[command(name = "latinset", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a square from one of the families.
    Build(BuildArgs),
    /// Compute a greedy critical set.
    Gcs(GcsArgs),
    /// Check properties of a partial square.
    Verify(VerifyArgs),
    /// Check gcs(α_{k,k'} L_s) for every pair at the given levels.
    Scan(ScanArgs),
    /// Print the recursion tree behind G(k,k',s).
    Trace(TraceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "L")]
    L,
    #[value(name = "P")]
    P,
    #[value(name = "G")]
    G,
    #[value(name = "E")]
    E,
    #[value(name = "A")]
    A,
    #[value(name = "U")]
    U,
    #[value(name = "V")]
    V,
    #[value(name = "H2")]
    H2,
    #[value(name = "H2hat")]
    H2Hat,
    #[value(name = "multiswapG")]
    MultiswapG,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Grid,
    Json,
    /// The square inside its unique completion, entries in parentheses.
    Marked,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Level: order 2^s (for E and A this is m).
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    kp: Option<usize>,
    /// Swap indices for multiswapG, comma separated.
    #[arg(long, value_delimiter = ',')]
    ks: Vec<usize>,
    #[arg(long, value_enum, default_value = "grid")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderKind {
    /// Bottom row first, right to left.
    F0,
    /// The closed-form rank formula, top row first.
    LiteralFormula,
    /// A seeded uniform shuffle.
    Random,
    /// Reverse of f0.
    Reversed,
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in square: L<s>, aL<s> (with --k, --kp) or mL<s> (with --ks).
    #[arg(long, conflicts_with = "input")]
    builtin: Option<String>,
    /// Grid or JSON file; with parenthesised entries only those are read.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    kp: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    ks: Vec<usize>,
}

#[derive(Args)]
struct GcsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Accept a uniquely completable partial square.
    #[arg(long)]
    partial: bool,
    #[arg(long = "f", value_enum, default_value = "f0")]
    order: OrderKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "grid")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// The partial square to check. A marked grid supplies its own ambient
    /// square.
    input: PathBuf,
    /// Full square the input should be a critical set of.
    #[arg(long, conflicts_with = "builtin")]
    against: Option<PathBuf>,
    /// Built-in ambient square, as for `gcs --builtin`.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    kp: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    ks: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "unique,critical,2critical,strong,topdown,gcschar")]
    checks: Vec<Check>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Levels, e.g. `5`, `2..4` (inclusive).
    #[arg(long, value_parser = parse_levels)]
    s: std::ops::RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "conjecture")]
    mode: ModeArg,
    /// Stop starting new pairs after this long, e.g. `3600s`, `10m`.
    #[arg(long, value_parser = parse_budget)]
    budget: Option<Duration>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theorem,
    Conjecture,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    kp: usize,
    #[arg(long)]
    s: usize,
    /// Only this many levels below the root.
    #[arg(long)]
    depth: Option<usize>,
    /// Also build G and compare it with gcs(α_{k,k'} L_s).
    #[arg(long)]
    check: bool,
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoCompletion | Error::NotUnique { .. } | Error::NotUniquelyCompletable => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(args) => build(&args),
        Command::Gcs(args) => gcs(&args),
        Command::Verify(args) => verify(&args),
        Command::Scan(args) => run_scan(&args),
        Command::Trace(args) => trace(&args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// The embedded tables, or those in `$LATINSET_FIXTURES` when set.
fn load_families() -> Result<Families, Failure> {
    match std::env::var_os("LATINSET_FIXTURES") {
        Some(dir) => Ok(Families::new(Fixtures::from_dir(dir.as_ref())?)),
        None => Ok(families().clone()),
    }
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("{kind} needs --{flag}")))
}

fn emit(square: &PartialLatinSquare, format: Format) -> Result<(), Failure> {
    match format {
        Format::Grid => print!("{}", render_grid(square)),
        Format::Json => println!("{}", to_json(square)),
        Format::Marked => print!("{}", render_marked(&complete_unique(square)?, square)),
    }
    Ok(())
}

fn build(args: &BuildArgs) -> Outcome {
    let name = match args.kind {
        Kind::L => "L",
        Kind::P => "P",
        Kind::G => "G",
        Kind::E => "E",
        Kind::A => "A",
        Kind::U => "U",
        Kind::V => "V",
        Kind::H2 => "H2",
        Kind::H2Hat => "H2hat",
        Kind::MultiswapG => "multiswapG",
    };
    let s = || need(args.s, "s", name);
    let k = || need(args.k, "k", name);
    let kp = || need(args.kp, "kp", name);
    let square = match args.kind {
        Kind::L => build_l(s()?)?,
        Kind::P => build_p(s()?)?,
        Kind::G => load_families()?.build_g(k()?, kp()?, s()?)?,
        Kind::E => load_families()?.build_e(k()?, kp()?, s()?)?,
        Kind::A => load_families()?.build_a(k()?, kp()?, s()?)?,
        Kind::U => load_families()?.build_u(k()?, kp()?)?,
        Kind::V => load_families()?.build_v(k()?, kp()?)?,
        Kind::H2 => build_h2(),
        Kind::H2Hat => build_h2_hat(),
        Kind::MultiswapG => {
            if args.ks.is_empty() {
                return Err(Failure::usage("multiswapG needs --ks"));
            }
            build_multiswap_g(s()?, &args.ks)?
        }
    };
    emit(&square, args.format)?;
    Ok(ExitCode::SUCCESS)
}

fn builtin(name: &str, k: Option<usize>, kp: Option<usize>, ks: &[usize]) -> Result<PartialLatinSquare, Failure> {
    let parsed: Builtin = name.parse().map_err(Failure::usage)?;
    let l = build_l(parsed.level())?;
    let n = l.order();
    let iso = match parsed {
        Builtin::L(_) => return Ok(l),
        Builtin::Swapped(_) => Isotopism::row_swap(n, need(k, "k", name)?, need(kp, "kp", name)?)?,
        Builtin::MultiSwapped(_) => {
            if ks.is_empty() {
                return Err(Failure::usage(format!("{name} needs --ks")));
            }
            Isotopism::multi_swap(n, ks)?
        }
    };
    Ok(l.apply(&iso)?)
}

fn read_input(path: &PathBuf) -> Result<latinset::format::GridDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(latinset::format::parse_any(&text)?)
}

fn gcs(args: &GcsArgs) -> Outcome {
    let src = &args.source;
    let square = match (&src.builtin, &src.input) {
        (Some(name), _) => builtin(name, src.k, src.kp, &src.ks)?,
        (None, Some(path)) => read_input(path)?.square,
        (None, None) => return Err(Failure::usage("gcs needs --builtin or --input")),
    };
    if !square.is_full() && !args.partial {
        return Err(Failure::usage("input is not full; pass --partial to accept a partial square"));
    }
    let n = square.order();
    let f = match args.order {
        OrderKind::F0 => CellOrder::f0(n),
        OrderKind::LiteralFormula => CellOrder::f0_literal(n),
        OrderKind::Random => CellOrder::random(n, args.seed),
        OrderKind::Reversed => CellOrder::f0(n).reversed(),
    };
    let c = ggcs(&square, &f)?;
    if !is_critical_set(&c) {
        return Err(Failure {
            code: 1,
            message: "result is not a critical set".into(),
        });
    }
    match args.format {
        Format::Marked => print!("{}", render_marked(&complete_unique(&square)?, &c)),
        format => emit(&c, format)?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    pass: bool,
    checks: &'a [CheckReport],
}

fn verify(args: &VerifyArgs) -> Outcome {
    let doc = read_input(&args.input)?;
    let c = doc.primary().clone();
    let ambient = match (&args.against, &args.builtin) {
        (Some(path), _) => Some(read_input(path)?.square),
        (None, Some(name)) => Some(builtin(name, args.k, args.kp, &args.ks)?),
        (None, None) => doc.marked.is_some().then(|| doc.square.clone()),
    };
    if let Some(l) = &ambient {
        if !l.is_full() || l.order() != c.order() {
            return Err(Failure::usage("ambient square must be full and of the same order"));
        }
    }
    let reports: Vec<CheckReport> = args.checks.iter().map(|&check| checks::run(check, &c, ambient.as_ref())).collect();
    let pass = reports.iter().all(|r| r.pass);
    if args.json {
        let json = VerifyJson { pass, checks: &reports };
        println!("{}", serde_json::to_string_pretty(&json).expect("plain data serialises"));
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct ScanJson<'a> {
    pass: bool,
    #[serde(flatten)]
    report: &'a ScanReport,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn run_scan(args: &ScanArgs) -> Outcome {
    let mode = match args.mode {
        ModeArg::Theorem => ScanMode::Theorem,
        ModeArg::Conjecture => ScanMode::Conjecture,
    };
    let fam = load_families()?;
    let report = scan(&fam, args.s.clone(), mode, args.budget)?;
    let pass = report.passes();
    if args.json {
        let json = ScanJson { pass, report: &report };
        println!("{}", serde_json::to_string_pretty(&json).expect("plain data serialises"));
    } else {
        println!("  s    k   k'  size critical 2-critical strong top-down construction      ms");
        for p in &report.pairs {
            let construction = match p.matches_construction {
                Some(b) => yes(b),
                None => "-",
            };
            println!(
                "{:>3} {:>4} {:>4} {:>5} {:>8} {:>10} {:>6} {:>8} {:>12} {:>7.1}",
                p.s,
                p.k,
                p.k2,
                p.size,
                yes(p.critical),
                yes(p.two_critical),
                yes(p.strong),
                yes(p.top_down),
                construction,
                p.elapsed.as_secs_f64() * 1e3,
            );
        }
        let failed = report.failures().count();
        println!(
            "{} pairs checked, {} failed, {} skipped, {:.3}s",
            report.pairs.len(),
            failed,
            report.skipped.len(),
            report.elapsed.as_secs_f64()
        );
        println!("{}", if pass { "PASS" } else { "FAIL" });
    }
    if pass {
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(p) = report.failures().next() {
        let l = build_l(p.s)?.apply(&Isotopism::row_swap(1 << p.s, p.k, p.k2)?)?;
        let c = latinset::gcs(&l)?;
        eprintln!("counterexample: gcs(α_{{{},{}}} L_{}) inside its square:", p.k, p.k2, p.s);
        eprint!("{}", render_marked(&l, &c));
        if p.matches_construction == Some(false) {
            eprintln!("G({},{},{}) as constructed:", p.k, p.k2, p.s);
            eprint!("{}", render_grid(&fam.build_g(p.k, p.k2, p.s)?));
        }
    } else if let Some((s, k, k2)) = report.skipped.first() {
        eprintln!("budget exhausted before ({k},{k2}) at level {s}");
    }
    Ok(ExitCode::from(1))
}

fn trace(args: &TraceArgs) -> Outcome {
    let fam = load_families()?;
    let tree = fam.expansion_trace(args.k, args.kp, args.s)?;
    let shown = args.depth.map_or_else(|| tree.clone(), |d| tree.truncated(d));
    print!("{shown}");
    if !args.check {
        return Ok(ExitCode::SUCCESS);
    }
    let g = fam.evaluate(&tree)?;
    let l = build_l(args.s)?.apply(&Isotopism::row_swap(1 << args.s, args.k, args.kp)?)?;
    let mut reports = vec![CheckReport::new(
        "construction",
        latinset::gcs(&l)? == g,
        "equals gcs(α_{k,k'} L_s)",
    )];
    reports.extend([Check::Critical, Check::TwoCritical, Check::Strong, Check::TopDown].map(|c| checks::run(c, &g, Some(&l))));
    for r in &reports {
        println!("{r}");
    }
    Ok(if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
