//! Command-line front end.
//!
//! Subcommands: `verify`, `enumerate-verify`, `certificate`, `extremal`,
//! `compare-bounds`. Exit codes: 0 all checks pass, 1 usage or input error,
//! 2 a mathematical violation was found.

use std::fs::File;
use std::io::{BufReader, Read};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{theorem1_bound, theorem1_bound_exact, theorem1_dominates_b};
use crate::cycle::{best_certificate, build_vine_cycles, crossing_chord_cycle};
use crate::graph::Graph;
use crate::graph6;
use crate::harness::{verify_corpus, Check, CheckConfig, VerificationReport};
use crate::vine::find_minimum_vine;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser)]
#[command(
    name = "circumlab",
    version,
    about = "Verify circumference lower bounds on 2-connected graphs, with explicit cycle certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check graph6 input against the bound and lemma properties.
    Verify(VerifyArgs),
    /// Enumerate all 2-connected graphs up to --max-n and verify them.
    EnumerateVerify(EnumerateArgs),
    /// Emit the strongest cycle certificate for one 2-connected graph.
    Certificate(CertificateArgs),
    /// Instantiate the sharpness families and check their exact equalities.
    Extremal(FormatArgs),
    /// Tabulate the three-case bound against sqrt(2p) over a (delta, p) grid.
    CompareBounds(CompareArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Comma-separated checks (default: all of thma,thmb,thm1,thmc,lemma1,lemma2,lemma3,vines,solvers,graph6)
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Worker threads (default: all cores; env CIRCUMLAB_JOBS also applies)
    #[arg(long)]
    jobs: Option<usize>,
    /// Cap on longest-path witnesses examined per graph
    #[arg(long, default_value_t = 50)]
    witness_cap: usize,
    /// Run single-threaded (output is canonically sorted either way)
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// graph6 input file, one record per line ("-" for stdin)
    #[arg(long, default_value = "-")]
    input: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest order to enumerate (3..=8)
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CertificateArgs {
    /// graph6 input file with a single record ("-" for stdin)
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, default_value_t = 50)]
    delta_max: usize,
    #[arg(long, default_value_t = 10_000)]
    p_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/version through this path
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
        }
    };
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::EnumerateVerify(args) => cmd_enumerate_verify(args),
        Command::Certificate(args) => cmd_certificate(args),
        Command::Extremal(args) => cmd_extremal(args),
        Command::CompareBounds(args) => cmd_compare_bounds(args),
    }
}

fn parse_checks(names: &[String]) -> Result<Vec<Check>, String> {
    if names.is_empty() {
        return Ok(Check::all().to_vec());
    }
    names.iter().map(|name| Check::from_str(name)).collect()
}

fn read_input(path: &str) -> Result<String, String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
    } else {
        let file = File::open(path).map_err(|e| format!("opening {path}: {e}"))?;
        BufReader::new(file)
            .read_to_string(&mut text)
            .map_err(|e| format!("reading {path}: {e}"))?;
    }
    Ok(text)
}

/// Parses a graph6 stream, one record per line; blank lines are skipped and
/// errors name the offending line.
fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, String> {
    let mut graphs = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let record = line.trim_end_matches('\r');
        if record.is_empty() {
            continue;
        }
        if record.starts_with(">>") {
            return Err(format!("line {}: header lines are not accepted", index + 1));
        }
        match graph6::decode(record) {
            Ok(g) => graphs.push(g),
            Err(e) => return Err(format!("line {}: {e}", index + 1)),
        }
    }
    if graphs.is_empty() {
        return Err("no graph6 records in input".to_string());
    }
    Ok(graphs)
}

fn resolve_jobs(common: &CommonArgs) -> usize {
    if common.deterministic {
        return 1;
    }
    common
        .jobs
        .or_else(|| {
            std::env::var("CIRCUMLAB_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0) // rayon: 0 means default
}

fn run_corpus(graphs: &[Graph], common: &CommonArgs) -> Result<VerificationReport, String> {
    let checks = parse_checks(&common.checks)?;
    if common.witness_cap == 0 {
        return Err("--witness-cap must be at least 1".to_string());
    }
    let mut config = CheckConfig::with_checks(checks);
    config.witness_cap = common.witness_cap;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(resolve_jobs(common))
        .build()
        .map_err(|e| format!("thread pool: {e}"))?;
    pool.install(|| verify_corpus(graphs, &config))
        .map_err(|e| e.to_string())
}

fn emit_report(report: &VerificationReport, format: Format) -> i32 {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Human => print!("{}", report.to_human()),
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn fail_input(message: String) -> i32 {
    eprintln!("error: {message}");
    EXIT_INPUT_ERROR
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let text = match read_input(&args.input) {
        Ok(text) => text,
        Err(e) => return fail_input(e),
    };
    let graphs = match parse_graph6_stream(&text) {
        Ok(graphs) => graphs,
        Err(e) => return fail_input(e),
    };
    let checks = match parse_checks(&args.common.checks) {
        Ok(checks) => checks,
        Err(e) => return fail_input(e),
    };
    // input that cannot satisfy a gated check is an input error, reported
    // with its line position
    if checks.iter().any(|c| c.requires_two_connected()) {
        let mut line = 0usize;
        for record in text.lines() {
            let record = record.trim_end_matches('\r');
            line += 1;
            if record.is_empty() {
                continue;
            }
            if let Ok(g) = graph6::decode(record) {
                if !g.is_two_connected() {
                    return fail_input(format!("line {line}: not 2-connected"));
                }
            }
        }
    }
    match run_corpus(&graphs, &args.common) {
        Ok(report) => emit_report(&report, args.common.format),
        Err(e) => fail_input(e),
    }
}

fn cmd_enumerate_verify(args: EnumerateArgs) -> i32 {
    if !(3..=8).contains(&args.max_n) {
        return fail_input(format!("--max-n must be within 3..=8, got {}", args.max_n));
    }
    let mut graphs = Vec::new();
    for n in 3..=args.max_n {
        match crate::enumerate::enumerate_two_connected(n) {
            Ok(batch) => graphs.extend(batch),
            Err(e) => return fail_input(e.to_string()),
        }
    }
    match run_corpus(&graphs, &args.common) {
        Ok(report) => emit_report(&report, args.common.format),
        Err(e) => fail_input(e),
    }
}

fn cmd_certificate(args: CertificateArgs) -> i32 {
    let text = match read_input(&args.input) {
        Ok(text) => text,
        Err(e) => return fail_input(e),
    };
    let graphs = match parse_graph6_stream(&text) {
        Ok(graphs) => graphs,
        Err(e) => return fail_input(e),
    };
    if graphs.len() != 1 {
        return fail_input(format!(
            "certificate wants exactly one graph, got {}",
            graphs.len()
        ));
    }
    let g = &graphs[0];
    if !g.is_two_connected() {
        return fail_input("not 2-connected".to_string());
    }
    let cert = match best_certificate(g) {
        Ok(cert) => cert,
        Err(e) => return fail_input(e.to_string()),
    };
    let (p, _) = crate::solver::longest_path(g);
    let delta = g.min_degree();
    let (bound, case) = theorem1_bound_exact(p, delta);

    // supporting detail: the chord cycle and every vine cycle on the
    // certificate's own host path
    let host = cert.host_path.clone();
    let mut constructions = Vec::new();
    if let Some(chord) = crossing_chord_cycle(g, &host) {
        constructions.push(serde_json::json!({
            "construction": chord.construction.to_string(),
            "length": chord.length,
        }));
    }
    let vine = match find_minimum_vine(g, &host) {
        Ok(vine) => vine,
        Err(e) => return fail_input(e.to_string()),
    };
    match build_vine_cycles(g, &host, &vine) {
        Ok(certs) => {
            for c in certs {
                constructions.push(serde_json::json!({
                    "construction": c.construction.to_string(),
                    "length": c.length,
                }));
            }
        }
        Err(e) => return fail_input(e.to_string()),
    }

    let output = serde_json::json!({
        "graph6": g.to_graph6(),
        "p": p,
        "delta": delta,
        "thm1_case": case.to_string(),
        "thm1_bound": bound.to_string(),
        "thm1_ceil": bound.ceil(),
        "certificate": cert,
        "constructions": constructions,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("certificate serializes")
    );
    if cert.length >= bound.ceil() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn cmd_extremal(args: FormatArgs) -> i32 {
    let report = crate::extremal::sharpness_suite();
    emit_report(&report, args.format)
}

fn cmd_compare_bounds(args: CompareArgs) -> i32 {
    if args.delta_max < 2 || args.p_max < 3 {
        return fail_input("grid needs delta_max >= 2 and p_max >= 3".to_string());
    }
    let mut dominated = 0usize;
    let mut out = String::new();
    if args.format == Format::Csv {
        out.push_str("delta,p,thm_b,thm1,case,margin\n");
    }
    for delta in 2..=args.delta_max {
        for p in 3..=args.p_max {
            let thm_b = (2.0 * p as f64).sqrt();
            let (thm1, case) = theorem1_bound(p, delta);
            if !theorem1_dominates_b(p, delta) {
                dominated += 1;
            }
            match args.format {
                Format::Csv => out.push_str(&format!(
                    "{delta},{p},{thm_b:.6},{thm1:.6},{case},{:.6}\n",
                    thm1 - thm_b
                )),
                Format::Human => out.push_str(&format!(
                    "delta={delta:<3} p={p:<6} thm_b={thm_b:<10.4} thm1={thm1:<10.4} case={case}\n"
                )),
                Format::Json => {}
            }
        }
    }
    if args.format == Format::Json {
        let rows = (args.delta_max - 1) * (args.p_max - 2);
        println!(
            "{}",
            serde_json::json!({
                "delta_max": args.delta_max,
                "p_max": args.p_max,
                "rows": rows,
                "rows_where_thm1_not_stronger": dominated,
            })
        );
    } else {
        print!("{out}");
        eprintln!("rows where the three-case bound fails to dominate: {dominated}");
    }
    if dominated == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}
