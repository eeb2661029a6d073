//! Command-line front end. Exit codes: 0 pass, 1 fail, 2 input error;
//! `verify` treats known-gap failures as expected and exits 0 on them.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::checker::suite::{run_suite, sweep_instances, SuiteConfig};
use crate::checker::Instance;
use crate::operators;
use crate::proximity::RuleKind;
use crate::sets::{Subset, Universe, Verdict};
use crate::space::SpaceFile;
use crate::topology;

#[derive(Parser)]
#[command(name = "proxal", version, about = "Finite-model checker for primal-proximity spaces")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space file's primal, relation, or topology
    Check { target: CheckTarget, file: PathBuf },
    /// Evaluate an operator on a subset of the universe
    Op {
        op: OpKind,
        file: PathBuf,
        /// Comma-separated labels; empty string for the empty set
        #[arg(long)]
        set: Option<String>,
        /// Print the operator's full table instead
        #[arg(long)]
        all: bool,
    },
    /// Derive an induced topology and validate it
    Derive { target: DeriveTarget, file: PathBuf },
    /// Run registry theorems on a file instance or an exhaustive sweep
    Verify {
        file: Option<PathBuf>,
        /// Sweep spec `n=K` over all constructed relations up to size K
        #[arg(long)]
        sweep: Option<String>,
        /// Theorem ids, or `all`
        #[arg(long, default_value = "all", value_delimiter = ',')]
        theorems: Vec<String>,
        /// Worker count; defaults to PROXAL_JOBS, then to all cores
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckTarget {
    Primal,
    Proximity,
    Topology,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    PointPrimal,
    ClStar,
    LocalFunction,
    ClDiamond,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveTarget {
    TauHat,
    TauStar,
    TauDiamond,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn fail(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<SpaceFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(format!("{}: {e}", path.display())))?;
    SpaceFile::from_json_str(&text).map_err(|e| fail(format!("{}: {e}", path.display())))
}

fn labels_json(u: &Universe, s: Subset) -> String {
    serde_json::to_string(&u.encode(s)).expect("label lists always serialize")
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.is_pass() {
        0
    } else {
        1
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Check { target, file } => cmd_check(target, &file),
        Command::Op { op, file, set, all } => cmd_op(op, &file, set.as_deref(), all),
        Command::Derive { target, file } => cmd_derive(target, &file),
        Command::Verify {
            file,
            sweep,
            theorems,
            jobs,
            seed,
            format,
        } => cmd_verify(file.as_deref(), sweep.as_deref(), theorems, jobs, seed, format),
    }
}

fn cmd_check(target: CheckTarget, file: &Path) -> Result<i32, CliError> {
    let sf = load(file)?;
    let u = sf.universe()?;
    match target {
        CheckTarget::Primal => {
            let family = sf.primal_family(&u)?;
            let verdict = crate::primal::check_primal(&u, family);
            println!("primal: {}", verdict.render(&u));
            Ok(verdict_code(&verdict))
        }
        CheckTarget::Topology => {
            let opens = sf
                .topology_family(&u)?
                .ok_or_else(|| fail("file has no topology section"))?;
            let verdict = topology::check_topology(&u, opens);
            println!("topology: {}", verdict.render(&u));
            Ok(verdict_code(&verdict))
        }
        CheckTarget::Proximity => {
            let inst = sf.to_instance()?;
            let report = inst.axiom_report();
            for (i, verdict) in report.axioms.iter().enumerate() {
                println!("axiom {}: {}", i + 1, verdict.render(&u));
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn cmd_op(op: OpKind, file: &Path, set: Option<&str>, all: bool) -> Result<i32, CliError> {
    let sf = load(file)?;
    let inst = sf.to_instance()?;
    let u = inst.universe().clone();
    let needs_topology = matches!(op, OpKind::LocalFunction | OpKind::ClDiamond);
    if needs_topology && inst.topology().is_none() {
        return Err(fail("this operator requires a topology section"));
    }
    let apply = |a: Subset| -> Subset {
        match op {
            OpKind::PointPrimal => operators::point_primal(inst.relation(), a),
            OpKind::ClStar => operators::cl_star(inst.relation(), a),
            OpKind::LocalFunction => {
                operators::local_function(inst.topology().unwrap(), inst.primal(), a)
            }
            OpKind::ClDiamond => {
                operators::cl_diamond(inst.topology().unwrap(), inst.primal(), a)
            }
        }
    };
    match (set, all) {
        (Some(_), true) | (None, false) => {
            Err(fail("give exactly one of --set <labels> or --all"))
        }
        (Some(labels), false) => {
            let names: Vec<String> = labels
                .split(',')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            let a = u.decode(&names)?;
            println!("{}", labels_json(&u, apply(a)));
            Ok(0)
        }
        (None, true) => {
            for a in u.subsets() {
                println!("{} -> {}", labels_json(&u, a), labels_json(&u, apply(a)));
            }
            Ok(0)
        }
    }
}

fn cmd_derive(target: DeriveTarget, file: &Path) -> Result<i32, CliError> {
    let sf = load(file)?;
    let inst = sf.to_instance()?;
    let u = inst.universe().clone();
    let (name, opens, verdict) = match target {
        DeriveTarget::TauHat => {
            let opens = inst.tau_hat_family();
            let verdict = topology::check_topology(&u, opens);
            ("tau-hat", opens, verdict)
        }
        DeriveTarget::TauStar => {
            let opens = inst.tau_star_family();
            let verdict = operators::check_kuratowski(&operators::cl_star_map(inst.relation()));
            ("tau-star", opens, verdict)
        }
        DeriveTarget::TauDiamond => {
            let t = inst
                .topology()
                .ok_or_else(|| fail("tau-diamond requires a topology section"))?;
            let opens = topology::tau_diamond_family(t, inst.primal());
            let verdict =
                operators::check_kuratowski(&operators::cl_diamond_map(t, inst.primal()));
            ("tau-diamond", opens, verdict)
        }
    };
    for open in opens.iter(&u) {
        println!("{}", labels_json(&u, open));
    }
    println!("{name}: {} opens, {}", opens.len(), verdict.render(&u));
    Ok(verdict_code(&verdict))
}

fn parse_sweep(spec: &str) -> Result<usize, CliError> {
    let n: usize = spec
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| fail(format!("bad sweep spec `{spec}`; expected n=K with 1 <= K <= 5")))?;
    if n == 0 || n > crate::sets::MAX_UNIVERSE {
        return Err(fail(format!("sweep size {n} out of range 1..=5")));
    }
    Ok(n)
}

fn cmd_verify(
    file: Option<&Path>,
    sweep: Option<&str>,
    theorems: Vec<String>,
    jobs: Option<usize>,
    seed: u64,
    format: Format,
) -> Result<i32, CliError> {
    let jobs = jobs
        .or_else(|| std::env::var("PROXAL_JOBS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(0);
    let (instances, source, kinds): (Vec<Instance>, String, Vec<RuleKind>) = match (file, sweep) {
        (Some(_), Some(_)) => return Err(fail("give a file or --sweep, not both")),
        (None, None) => return Err(fail("give a space file or --sweep n=K")),
        (Some(path), None) => {
            let inst = load(path)?.to_instance()?;
            let kind = inst.relation().kind();
            (vec![inst], path.display().to_string(), vec![kind])
        }
        (None, Some(spec)) => {
            let n = parse_sweep(spec)?;
            let kinds = RuleKind::CONSTRUCTORS.to_vec();
            let instances = sweep_instances(n, &kinds)?;
            (instances, format!("sweep n<={n}"), kinds)
        }
    };
    let config = SuiteConfig {
        source,
        kinds,
        theorems,
        seed,
    };
    let report = run_suite(&instances, config, jobs)?;
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
        ),
    }
    Ok(if report.unexpected_fail_count() == 0 { 0 } else { 1 })
}
