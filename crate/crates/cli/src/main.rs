use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ac_core::cert_text;
use ac_core::macros;
use ac_core::search::search_with_progress;
use ac_core::{
    replay, script_4n1, script_4n3, BigIntMatrix, Certificate, Family, FamilyId, Presentation,
    SearchConfig, Status, Strategy,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;

/// Largest family parameter accepted on the command line.
const MAX_N: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "actool", version, about = "Andrews-Curtis trivializations: build, replay, search")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family presentation, e.g. `f4n1:3`, `f4n3:0`, `ak:2`.
    Gen { family: String },
    /// Print the trivialization certificate for `f4n1:<n>` or `f4n3:<n>`.
    Script {
        family: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate file; exit 0 on PASS, 1 on FAIL.
    Replay { file: PathBuf },
    /// Search for a trivialization of a family member or presentation file.
    Search(SearchArgs),
    /// Print the exponent-sum matrix and its determinant.
    Abelianize { target: String },
    /// Print the canonical key of a presentation.
    Canon { target: String },
    /// Emit a certificate reducing every relator to a positive letter or
    /// cyclic core, whichever applies.
    Normalize { target: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Bfs,
    Beam,
    Greedy,
}

#[derive(clap::Args)]
struct SearchArgs {
    target: String,
    #[arg(long, value_enum, default_value = "greedy")]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 32)]
    max_relator_length: usize,
    #[arg(long, default_value_t = 64)]
    max_total_length: usize,
    #[arg(long, default_value_t = 10_000_000)]
    max_states: usize,
    #[arg(long, default_value_t = 10_000)]
    beam_width: usize,
    #[arg(long)]
    allow_stabilize: bool,
    #[arg(long, default_value_t = 3)]
    max_gens: usize,
    /// Print a progress line to stderr every N expansions.
    #[arg(long, value_name = "N")]
    progress: Option<u64>,
    /// Write the certificate here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure { code: EX_USAGE, msg: msg.into() }
    }
    fn data(msg: impl Into<String>) -> Failure {
        Failure { code: EX_DATAERR, msg: msg.into() }
    }
}

fn family(spec: &str) -> Result<FamilyId, Failure> {
    let id: FamilyId = spec.parse().map_err(|e| Failure::usage(format!("{e}")))?;
    if id.n > MAX_N {
        return Err(Failure::usage(format!("n = {} exceeds the limit {MAX_N}", id.n)));
    }
    Ok(id)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EX_NOINPUT,
        msg: format!("{}: {e}", path.display()),
    })
}

/// A family spec, a presentation file, or a certificate file (its initial
/// presentation).
fn target(spec: &str) -> Result<Presentation, Failure> {
    let path = Path::new(spec);
    if !path.exists() && spec.contains(':') {
        return Ok(family(spec)?.presentation());
    }
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with("AC-CERT")) {
        let cert = cert_text::parse(&text).map_err(|e| Failure::data(format!("{spec}: {e}")))?;
        Ok(cert.initial)
    } else {
        Presentation::from_text(&text).map_err(|e| Failure::data(format!("{spec}: {e}")))
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EX_NOINPUT,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, Failure> {
    match cmd {
        Cmd::Gen { family: spec } => {
            print!("{}", family(&spec)?.presentation().to_text());
            Ok(0)
        }
        Cmd::Script { family: spec, out } => {
            let id = family(&spec)?;
            let cert = match id.family {
                Family::F4n1 => script_4n1(id.n as usize),
                Family::F4n3 => script_4n3(id.n as usize),
                Family::Ak => {
                    return Err(Failure::usage("no trivialization script for the ak family"))
                }
            };
            emit(&cert_text::serialize(&cert), out.as_deref())?;
            Ok(0)
        }
        Cmd::Replay { file } => {
            let text = read(&file)?;
            let cert = match cert_text::parse(&text) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    println!("result: FAIL");
                    return Ok(1);
                }
            };
            match replay(&cert) {
                Ok(report) => {
                    println!("{report}");
                    Ok(if report.passed() { 0 } else { 1 })
                }
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    println!("result: FAIL");
                    Ok(1)
                }
            }
        }
        Cmd::Search(args) => search_cmd(args),
        Cmd::Abelianize { target: spec } => {
            let p = target(&spec)?;
            let m = BigIntMatrix::of(&p).map_err(|e| Failure::data(e.to_string()))?;
            let mut s = String::from("matrix:\n");
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "  {}", cells.join(" "));
            }
            let _ = writeln!(s, "det: {}", m.det());
            print!("{s}");
            Ok(0)
        }
        Cmd::Canon { target: spec } => {
            let p = target(&spec)?;
            println!("{}", String::from_utf8_lossy(&p.canonical_key()));
            Ok(0)
        }
        Cmd::Normalize { target: spec } => {
            let p = target(&spec)?;
            let (_, moves) = macros::normalize(&p);
            let cert = Certificate::from_moves(p, moves, Vec::new())
                .map_err(|e| Failure::data(e.to_string()))?;
            print!("{}", cert_text::serialize(&cert));
            Ok(0)
        }
    }
}

fn search_cmd(args: SearchArgs) -> Result<u8, Failure> {
    let start = target(&args.target)?;
    let cfg = SearchConfig {
        max_relator_length: args.max_relator_length,
        max_total_length: args.max_total_length,
        strategy: match args.strategy {
            StrategyArg::Bfs => Strategy::Bfs,
            StrategyArg::Beam => Strategy::Beam,
            StrategyArg::Greedy => Strategy::Greedy,
        },
        beam_width: args.beam_width,
        max_states: args.max_states,
        allow_stabilize: args.allow_stabilize,
        max_gens: args.max_gens,
        progress_interval: args.progress,
    };
    let outcome = search_with_progress(&start, &cfg, |p| eprintln!("{p}"));
    let s = outcome.stats;
    let status = match outcome.status {
        Status::Found => "FOUND",
        Status::Exhausted => "EXHAUSTED",
        Status::Budget => "BUDGET",
    };
    eprintln!(
        "status: {status} expanded={} visited={} deduplicated={} frontier_peak={}",
        s.expanded, s.visited, s.deduplicated, s.frontier_peak
    );
    if let Some(cert) = &outcome.certificate {
        emit(&cert_text::serialize(cert), args.out.as_deref())?;
    }
    Ok(match outcome.status {
        Status::Found => 0,
        Status::Exhausted => 2,
        Status::Budget => 3,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EX_USAGE),
            };
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("actool: {}", f.msg);
            if f.code == EX_USAGE {
                eprintln!("usage: actool <gen|script|replay|search|abelianize|canon|normalize> ... (see --help)");
            }
            ExitCode::from(f.code)
        }
    }
}
