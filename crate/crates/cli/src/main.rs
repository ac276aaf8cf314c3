use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knotscope::analyze::{analyze_diagram, verify_main_theorem, TheoremVerdict};
use knotscope::corpus::{
    analyze_record, bundled_corpus_path, corpus_run, load_corpus, report_schema, Check,
    KnotRecord, ALL_CHECKS,
};
use knotscope::seifert::murasugi_desum;
use knotscope::Diagram;

#[derive(Parser)]
#[command(name = "knotscope", version, about = "Alternating knot diagram analysis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for one diagram, by PD code or by corpus name.
    Analyze {
        #[arg(long, conflicts_with = "name")]
        pd: Option<String>,
        /// Name in the bundled corpus (or the one named by KNOTSCOPE_CORPUS_DIR).
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the torus-knot characterization on one diagram.
    Theorem {
        #[arg(long)]
        pd: String,
    },
    /// Split a diagram along one nested Seifert circle.
    Desum {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        circle: usize,
    },
    /// Batch verification over a corpus file.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
    /// Report schema tools.
    Schema {
        #[command(subcommand)]
        cmd: SchemaCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run checks over every record of a corpus CSV.
    Run {
        /// Corpus CSV; defaults to the bundled file.
        file: Option<PathBuf>,
        /// Comma-separated subset of: euler,genus-cross,fibered-cross,ag-bound,
        /// trapezoid,rank-nonneg,theorem,lemma37,alexander-product.
        #[arg(long = "check", value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads; 0 picks the machine default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Skip malformed rows instead of aborting.
        #[arg(long)]
        lenient: bool,
    },
}

#[derive(Subcommand)]
enum SchemaCmd {
    /// Print the JSON schema of analyze reports.
    Print,
}

enum Outcome {
    Pass,
    CheckFailures,
}

fn parse_diagram(pd: &str) -> Result<Diagram, String> {
    Diagram::parse(pd).map_err(|e| format!("bad PD code: {e}"))
}

fn lookup_record(name: &str) -> Result<KnotRecord, String> {
    let path = bundled_corpus_path();
    let load = load_corpus(&path, false).map_err(|e| format!("{}: {e}", path.display()))?;
    load.records
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| format!("no record named {name} in {}", path.display()))
}

fn run_analyze(pd: Option<String>, name: Option<String>, json: bool) -> Result<Outcome, String> {
    let report = match (pd, name) {
        (Some(pd), None) => {
            let d = parse_diagram(&pd)?;
            let r = analyze_diagram("input", &d).map_err(|e| e.to_string())?;
            r.to_json()
        }
        (None, Some(name)) => {
            let record = lookup_record(&name)?;
            analyze_record(&record).map_err(|e| format!("{name}: {e}"))?
        }
        _ => return Err("pass exactly one of --pd or --name".into()),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return Ok(Outcome::Pass);
    }
    let b = |v: &serde_json::Value| v.as_bool().unwrap_or(false);
    println!(
        "{}: {} crossings, alternating {}, reduced {}",
        report["name"].as_str().unwrap_or("?"),
        report["diagram"]["crossings"].as_array().map_or(0, Vec::len),
        b(&report["diagram"]["alternating"]),
        b(&report["diagram"]["reduced"]),
    );
    println!(
        "seifert: circles {}, bands {}, nested {}, special {}",
        report["seifert"]["circles"],
        report["seifert"]["bands"],
        report["seifert"]["nested"],
        b(&report["seifert"]["special"]),
    );
    println!(
        "alexander: g {}, coeffs {}, determinant {}",
        report["alexander"]["g"], report["alexander"]["coeffs"], report["invariants"]["determinant"],
    );
    println!(
        "invariants: signature {}, tau {}, fibered {}, sqp_fibered {}",
        report["invariants"]["signature"],
        report["invariants"]["tau_alternating"],
        b(&report["invariants"]["fibered"]),
        b(&report["invariants"]["sqp_fibered"]),
    );
    if !report["ag_bound"].is_null() {
        println!(
            "ag-bound: case {}, {} >= {}, pass {}",
            report["ag_bound"]["case"],
            report["ag_bound"]["lhs"],
            report["ag_bound"]["rhs"],
            b(&report["ag_bound"]["pass"]),
        );
    }
    println!(
        "trapezoid: monotone {}, plateau {}, top-equality {}",
        b(&report["trapezoid"]["monotone_ok"]),
        b(&report["trapezoid"]["plateau_ok"]),
        b(&report["trapezoid"]["top_equality"]),
    );
    for row in report["hf_plus"].as_array().into_iter().flatten() {
        println!("hf+: s {}, b {}, delta {}", row["s"], row["b"], row["delta"]);
    }
    if !report["prop22"].is_null() {
        println!("prop22: {}", report["prop22"].as_str().unwrap_or("?"));
    }
    println!(
        "lemma37: nested {}, both-sides {}",
        report["lemma37"]["nested"], report["lemma37"]["both_sides"],
    );
    if !report["summands"].is_null() {
        println!("summands: {}", report["summands"]);
    }
    let mismatches = report["reference_mismatches"].as_array();
    if let Some(m) = mismatches {
        for line in m {
            println!("reference mismatch: {}", line.as_str().unwrap_or("?"));
        }
    }
    match mismatches.map_or(true, Vec::is_empty) {
        true => Ok(Outcome::Pass),
        false => Ok(Outcome::CheckFailures),
    }
}

fn run_theorem(pd: &str) -> Result<Outcome, String> {
    let d = parse_diagram(pd)?;
    let report = verify_main_theorem("input", &d).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    match report.verdict {
        TheoremVerdict::Failed { .. } => Ok(Outcome::CheckFailures),
        _ => Ok(Outcome::Pass),
    }
}

fn run_desum(pd: &str, circle: usize) -> Result<Outcome, String> {
    let d = parse_diagram(pd)?;
    let (left, right) = murasugi_desum(&d, circle).map_err(|e| e.to_string())?;
    println!("left:  {}", left.pd_code().to_bracket_string());
    println!("right: {}", right.pd_code().to_bracket_string());
    Ok(Outcome::Pass)
}

fn run_corpus(
    file: Option<PathBuf>,
    checks: Vec<String>,
    jobs: usize,
    lenient: bool,
) -> Result<Outcome, String> {
    let path = file.unwrap_or_else(bundled_corpus_path);
    let checks: Vec<Check> = if checks.is_empty() {
        ALL_CHECKS.to_vec()
    } else {
        checks
            .iter()
            .map(|n| Check::from_name(n).ok_or_else(|| format!("unknown check: {n}")))
            .collect::<Result<_, _>>()?
    };
    let load = load_corpus(&path, lenient).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut summary = corpus_run(&load.records, &checks, jobs);
    summary.skipped = load.skipped;
    print!("{}", summary.render());
    match summary.failure_count() {
        0 => Ok(Outcome::Pass),
        _ => Ok(Outcome::CheckFailures),
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.cmd {
        Cmd::Analyze { pd, name, json } => run_analyze(pd, name, json),
        Cmd::Theorem { pd } => run_theorem(&pd),
        Cmd::Desum { pd, circle } => run_desum(&pd, circle),
        Cmd::Corpus { cmd: CorpusCmd::Run { file, checks, jobs, lenient } } => {
            run_corpus(file, checks, jobs, lenient)
        }
        Cmd::Schema { cmd: SchemaCmd::Print } => {
            println!("{}", serde_json::to_string_pretty(&report_schema()).unwrap());
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like other unix filters.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailures) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
