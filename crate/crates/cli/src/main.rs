//! `denniston` — construct, verify, dualize, and export partial difference
//! sets with Denniston parameters in elementary abelian groups of order
//! `p^{3m}`, `p` an odd prime.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use denniston::document::{
    construct_document, dual_document, export_graph, verify_document, GraphFormat, SetKind,
    VerifyMethod,
};
use denniston::{denniston_params, Error, PdsDocument, VerificationReport, DEFAULT_SIZE_GUARD};

const SIZE_GUARD_ENV: &str = "DENNISTON_SIZE_GUARD";

#[derive(Parser)]
#[command(
    name = "denniston",
    about = "Partial difference sets with Denniston parameters: exact construction and verification",
    version
)]
struct Cli {
    /// Ceiling on p^{2m}, the big-field size (also via DENNISTON_SIZE_GUARD).
    #[arg(long, global = true)]
    size_guard: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the (v, k, lambda, mu) tuple and character values.
    Params {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Construct a set and emit its JSON document.
    Construct {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        /// Shift index for kind X_k.
        #[arg(long)]
        k: Option<u64>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a document; exits 1 when verification fails.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Emit the machine-readable JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute the dual of a verified PDS document.
    Dual {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Cayley graph of a PDS document.
    ExportGraph {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    X,
    #[value(name = "X_k")]
    XK,
    D,
    Dual,
    Singer,
}

impl From<KindArg> for SetKind {
    fn from(k: KindArg) -> SetKind {
        match k {
            KindArg::X => SetKind::X,
            KindArg::XK => SetKind::XShift,
            KindArg::D => SetKind::D,
            KindArg::Dual => SetKind::Dual,
            KindArg::Singer => SetKind::Singer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Character,
    Matrix,
    All,
}

impl From<MethodArg> for VerifyMethod {
    fn from(m: MethodArg) -> VerifyMethod {
        match m {
            MethodArg::Brute => VerifyMethod::Brute,
            MethodArg::Character => VerifyMethod::Character,
            MethodArg::Matrix => VerifyMethod::Matrix,
            MethodArg::All => VerifyMethod::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Edgelist => GraphFormat::Edgelist,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guard = resolve_guard(cli.size_guard);
    match run(cli.cmd, guard) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_guard(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(SIZE_GUARD_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SIZE_GUARD)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::ParseError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &PathBuf) -> Result<PdsDocument, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("cannot read {}: {e}", path.display())))?;
    PdsDocument::parse(&text)
}

fn run(cmd: Cmd, guard: u64) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Params { p, m, r } => {
            let params = denniston_params(p, m, r)?;
            println!(
                "v={} k={} lambda={} mu={} theta={},{}",
                params.v,
                params.k,
                params.lambda,
                params.mu,
                params.theta_pos(),
                params.theta_neg()
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { kind, p, m, k, out } => {
            let doc = construct_document(kind.into(), p, m, k, guard)?;
            emit(out.as_ref(), &doc.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            input,
            method,
            json,
        } => {
            let doc = load(&input)?;
            let reports = verify_document(&doc, method.into(), guard)?;
            let all_pass = reports.iter().all(|r| r.pass);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                print_reports(&doc, &reports);
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Dual { input, out } => {
            let doc = load(&input)?;
            let dual = dual_document(&doc, guard)?;
            emit(out.as_ref(), &dual.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ExportGraph { input, format, out } => {
            let doc = load(&input)?;
            let rendered = export_graph(&doc, format.into(), guard)?;
            emit(out.as_ref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_reports(doc: &PdsDocument, reports: &[VerificationReport]) {
    println!(
        "document: kind={} p={} m={} (v={}, k={}, lambda={}, mu={})",
        doc.kind.as_str(),
        doc.p,
        doc.m,
        doc.params.v,
        doc.params.k,
        doc.params.lambda,
        doc.params.mu
    );
    for r in reports {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        let mut line = format!("{:?}: {verdict} ({} ms)", r.method, r.elapsed_ms);
        if let (Some(pos), Some(neg)) = (r.theta_pos_multiplicity, r.theta_neg_multiplicity) {
            line.push_str(&format!(
                "; character multiplicities: theta_pos x{pos}, theta_neg x{neg}"
            ));
        }
        println!("{line}");
        if let Some(f) = &r.failure {
            println!("  first violation: {f}");
        }
    }
}
