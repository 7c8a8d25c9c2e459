//! `fsind`: indicator scans, double-coset dumps, censuses and claim checks.
//!
//! Exit codes: 0 success or pass, 1 claim failure, 2 usage or input error.

mod config;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fsind::catalog::reports_json;
use fsind::cosets::{census_csv, double_coset_records, double_cosets_csv, double_cosets_json};
use fsind::group::{cyclic, sym_embed};
use fsind::indicators::vanishing_witness;
use fsind::{
    census_sl, double_cosets, run_all, verify, GroupSpec, Limits, Permutation, Scanner, SimpleObject, Status,
    VerificationReport,
};
use thiserror::Error;

use config::Config;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fsind::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("config {path}: {message}")]
    Config { path: PathBuf, message: String },

    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "fsind",
    version,
    about = "Frobenius-Schur indicators of group-theoretical fusion categories C(G,H)"
)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// TOML config file (default: $FSIND_CONFIG, if set)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest group whose elements may be listed
    #[arg(long, global = true)]
    enumeration_bound: Option<usize>,

    /// Largest index |G:H| for coset enumeration
    #[arg(long, global = true)]
    index_bound: Option<usize>,

    /// Seed for character-table construction
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    /// Emit JSON
    #[arg(long)]
    json: bool,

    /// Emit CSV
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indicators of every simple of C(G,H)
    Indicators {
        #[arg(long = "G", value_name = "SPEC")]
        g: GroupSpec,
        #[arg(long = "H", value_name = "SPEC")]
        h: GroupSpec,
        #[arg(long, default_value_t = 2)]
        m: i64,
        #[command(flatten)]
        format: Format,
    },
    /// Double cosets H\G/H with sizes and stabilizer orders
    DoubleCosets {
        #[arg(long = "G", value_name = "SPEC")]
        g: GroupSpec,
        #[arg(long = "H", value_name = "SPEC")]
        h: GroupSpec,
        #[command(flatten)]
        format: Format,
    },
    /// Total and null double-coset counts for S_l ⊂ S_n
    Census {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Check one claim
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check every claim of a profile
    VerifyAll {
        #[arg(long, default_value = "quick")]
        profile: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a worked example
    Example {
        #[arg(long, value_parser = ["ex-minus-one", "ex-nu-p"])]
        id: String,
        #[arg(long)]
        json: bool,
    },
}

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(failed) => ExitCode::from(failed as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let flags = Config {
        enumeration_bound: cli.global.enumeration_bound,
        index_bound: cli.global.index_bound,
        seed: cli.global.seed,
        threads: cli.global.threads,
    };
    let file = Config::resolve(cli.global.config.as_ref())?;
    if let Some(t) = file.threads(&flags) {
        if t == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let scanner = Scanner::new(file.limits(&flags));
    let out = dispatch(cli.command, &scanner)?;
    match &cli.global.out {
        Some(path) => std::fs::write(path, &out.text).map_err(|e| CliError::Io {
            path: path.clone(),
            source: e,
        })?,
        None => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
        }
    }
    Ok(out.failed)
}

fn dispatch(command: Command, sc: &Scanner) -> Result<Output, CliError> {
    match command {
        Command::Indicators { g, h, m, format } => indicators(&g, &h, m, format, sc),
        Command::DoubleCosets { g, h, format } => {
            let dc = double_cosets(&g.build()?, &h.build()?, sc.limits())?;
            Ok(Output::ok(if format.json {
                double_cosets_json(&dc) + "\n"
            } else if format.csv {
                double_cosets_csv(&dc)
            } else {
                let mut s = format!("{} double cosets of {h} in {g}\n", dc.len());
                for r in double_coset_records(&dc) {
                    writeln!(s, "{}\tsize {}\t|S| {}", r.representative, r.size, r.stabilizer_order).unwrap();
                }
                s
            }))
        }
        Command::Census { l, n, format } => {
            let c = census_sl(l, n, sc.limits())?;
            Ok(Output::ok(if format.json {
                serde_json::to_string_pretty(&c).expect("serializable") + "\n"
            } else if format.csv {
                census_csv(&[c])
            } else {
                format!("{},{}\n", c.total, c.null)
            }))
        }
        Command::Verify { claim, n, l, k, json } => {
            let params: BTreeMap<String, usize> = [("n", n), ("l", l), ("k", k)]
                .into_iter()
                .filter_map(|(key, v)| v.map(|v| (key.to_string(), v)))
                .collect();
            let report = verify(&claim, &params, sc)?;
            Ok(reports_output(&[report], json))
        }
        Command::VerifyAll { profile, json } => {
            let t = Instant::now();
            let reports = run_all(&profile, sc)?;
            eprintln!("{} claims in {:.2?}", reports.len(), t.elapsed());
            Ok(reports_output(&reports, json))
        }
        Command::Example { id, json } => example(&id, json, sc),
    }
}

fn indicators(g: &GroupSpec, h: &GroupSpec, m: i64, format: Format, sc: &Scanner) -> Result<Output, CliError> {
    let report = sc
        .scan(&g.build()?, &h.build()?, m)?
        .with_category(g.to_string(), h.to_string());
    if format.json {
        return Ok(Output::ok(report.to_json() + "\n"));
    }
    if format.csv {
        return Ok(Output::ok(report.to_csv()));
    }
    let mut s = format!("C({g}, {h}), m = {m}: {} simples\n", report.entries.len());
    for e in report.entries.iter().filter(|e| e.nu < 0) {
        writeln!(
            s,
            "  nu = {} at g = {}, |S| = {}, chi(1) = {}",
            e.nu, e.rep, e.stab_order, e.chi_degree
        )
        .unwrap();
    }
    let summary: Vec<String> = report.summary.iter().map(|(v, c)| format!("{v}:{c}")).collect();
    writeln!(s, "summary {}", summary.join(" ")).unwrap();
    Ok(Output::ok(s))
}

fn reports_output(reports: &[VerificationReport], json: bool) -> Output {
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    for r in reports {
        eprintln!("{} {:?}: {:.2?}", r.claim, r.parameters, r.runtime);
    }
    if json {
        return Output {
            text: reports_json(reports) + "\n",
            failed,
        };
    }
    let mut s = String::new();
    for r in reports {
        let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(s, "{:<7} {} {}", r.status, r.claim, params.join(" ")).unwrap();
        if let Some(b) = &r.bound {
            write!(s, " ({b})").unwrap();
        }
        if let Some(summary) = &r.evidence.summary {
            let parts: Vec<String> = summary.iter().map(|(v, c)| format!("{v}:{c}")).collect();
            write!(s, " [{}]", parts.join(" ")).unwrap();
        }
        s.push('\n');
        for o in &r.evidence.offending {
            writeln!(s, "        {}: found {}, expected {}", o.what, o.found, o.expected).unwrap();
        }
    }
    let count = |st| reports.iter().filter(|r| r.status == st).count();
    writeln!(
        s,
        "{} pass, {} fail, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    )
    .unwrap();
    Output { text: s, failed }
}

fn example(id: &str, json: bool, sc: &Scanner) -> Result<Output, CliError> {
    let report = verify(id, &BTreeMap::new(), sc)?;
    if json {
        return Ok(reports_output(&[report], true));
    }
    let lim: &Limits = sc.limits();
    let (category, h, g, m) = match id {
        "ex-minus-one" => (
            "C(sym:12, cyclic:12)",
            cyclic(12)?,
            Permutation::parse_with_degree("(1,2,7,8)(3,11,9,5)(4,12,10,6)", 12)?,
            2,
        ),
        _ => (
            "C(sym:7, sym-embed:5,7)",
            sym_embed(5, 7)?,
            Permutation::parse_with_degree("(5,6)", 7)?,
            7,
        ),
    };
    let objs = SimpleObject::all_over(&g, &h, sc.cache(), lim)?;
    let st = &objs[0].stabilizer.group;
    let mut s = format!("{category}: g = {g}, |S(g)| = {}\n", st.order());
    if m != 2 {
        writeln!(
            s,
            "vanishing witness for m = {m}: {}",
            vanishing_witness(&g, &h, m, lim)?
        )
        .unwrap();
    }
    for (i, o) in objs.iter().enumerate() {
        let values: Vec<String> = o.character.values().iter().map(ToString::to_string).collect();
        writeln!(s, "chi_{i} = [{}]: nu_{m} = {}", values.join(", "), o.nu(m, lim)?).unwrap();
    }
    writeln!(s, "{}", report.status).unwrap();
    Ok(Output {
        text: s,
        failed: report.status == Status::Fail,
    })
}
