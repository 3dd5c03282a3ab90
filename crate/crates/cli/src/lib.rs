//! Command-line front end for relcalc.
//!
//! [`run`] is the whole program minus process plumbing: it parses `argv`,
//! writes results to `out` and diagnostics to `err`, and returns the exit
//! code. [`Hooks`] lets callers add laws or replace the SCC oracle, which is
//! how fault-injection tests drive the binary's code paths.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use relcalc::format::{parse_edge_list, parse_relation_blocks, to_dot, write_relation};
use relcalc::laws::{
    check_instance, exhaustive_check_with_budget, randomized_check, DEFAULT_BUDGET,
    DEFAULT_DENSITIES,
};
use relcalc::oracle::tarjan_scc;
use relcalc::scc::equivalence_classes;
use relcalc::{
    condense, relation_from_graph, scc_equivalence, CheckConfig, Error, Graph, Law, LawId,
    Partition, Relation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub struct Hooks {
    /// Laws resolvable by `--law` in addition to the built-in catalogue.
    pub extra_laws: Vec<Box<dyn Law>>,
    /// Reference used by `scc --via oracle|both`.
    pub scc_oracle: fn(&Graph) -> Partition,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            extra_laws: Vec::new(),
            scc_oracle: tarjan_scc,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "relcalc",
    version,
    about = "Finite relation algebra and relational SCC"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Model-check relation-algebra laws
    Laws(LawsArgs),
    /// Print strongly connected components, one class per line
    Scc {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Via::Relational)]
        via: Via,
    },
    /// Write the condensation DAG in DOT format
    Condense {
        file: PathBuf,
        /// Output path; standard output when omitted
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the reflexive-transitive closure as an edge list
    Star { file: PathBuf },
}

#[derive(Args)]
struct LawsArgs {
    /// Law identifier, e.g. `main-theorem`
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    law: Option<String>,
    /// Check the whole catalogue
    #[arg(long)]
    all: bool,
    /// Enumerate every instance on carriers 1..=max-size
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    /// Instance cap for exhaustive runs
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Carrier size for randomized runs
    #[arg(long, default_value_t = 8)]
    size: usize,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated edge probabilities
    #[arg(long, value_delimiter = ',')]
    density: Vec<f64>,
    /// Re-check one instance read from a witness file
    #[arg(long, conflicts_with_all = ["all", "exhaustive"])]
    witness: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Relational,
    Oracle,
    Both,
}

/// A failure mapped to its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(path: &Path, e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        }
    }

    fn config(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_CONFIG,
            message: e.to_string(),
        }
    }

    fn io(e: io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(args: I, hooks: &Hooks, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Laws(args) => laws(&args, hooks, out, err),
        Command::Scc { file, via } => scc(&file, via, hooks, out, err),
        Command::Condense { file, dot } => condense_cmd(&file, dot.as_deref(), out, err),
        Command::Star { file } => star(&file, out, err),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn read_graph(path: &Path, err: &mut dyn Write) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(path, e))?;
    let parsed = parse_edge_list(&text).map_err(|e| Failure::input(path, e))?;
    if parsed.duplicates > 0 {
        let _ = writeln!(
            err,
            "warning: {}: {} duplicate edge(s) ignored",
            path.display(),
            parsed.duplicates
        );
    }
    Ok(parsed.graph)
}

fn relation_of(g: &Graph) -> Relation {
    relation_from_graph(g).expect("parser rejects empty carriers")
}

fn resolve<'a>(id: &str, hooks: &'a Hooks) -> Result<&'a dyn Law, Failure> {
    if let Some(law) = hooks.extra_laws.iter().find(|l| l.id() == id) {
        return Ok(law.as_ref());
    }
    let law: LawId = id.parse().map_err(Failure::config)?;
    Ok(LawId::ALL
        .iter()
        .find(|l| **l == law)
        .expect("parsed ids are in the catalogue"))
}

fn laws(args: &LawsArgs, hooks: &Hooks, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let selected: Vec<&dyn Law> = match &args.law {
        Some(id) => vec![resolve(id, hooks)?],
        None => LawId::ALL.iter().map(|l| l as &dyn Law).collect(),
    };
    if let Some(path) = &args.witness {
        return replay(selected[0], path, args.size, out);
    }

    let mut code = EXIT_OK;
    if args.exhaustive {
        if args.max_size == 0 {
            return Err(Failure::config("--max-size must be at least 1"));
        }
        for law in selected {
            for n in 1..=args.max_size {
                match exhaustive_check_with_budget(law, n, args.budget) {
                    Ok(report) => {
                        write!(out, "{report}").map_err(Failure::io)?;
                        if !report.passed() {
                            code = EXIT_VIOLATION;
                        }
                    }
                    Err(e @ Error::BudgetExceeded { .. }) => {
                        let _ = writeln!(err, "error: law={} n={n}: {e}", law.id());
                        if code == EXIT_OK {
                            code = EXIT_CONFIG;
                        }
                        break;
                    }
                    Err(e) => return Err(Failure::config(e)),
                }
            }
        }
    } else {
        let config = CheckConfig {
            size: args.size,
            samples: args.samples,
            seed: args.seed,
            densities: if args.density.is_empty() {
                DEFAULT_DENSITIES.to_vec()
            } else {
                args.density.clone()
            },
        };
        config.validate().map_err(Failure::config)?;
        for law in selected {
            let report = randomized_check(law, &config).map_err(Failure::config)?;
            write!(out, "{report}").map_err(Failure::io)?;
            if !report.passed() {
                code = EXIT_VIOLATION;
            }
        }
    }
    Ok(code)
}

fn replay(law: &dyn Law, path: &Path, size: usize, out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(path, e))?;
    let env = parse_relation_blocks(&text).map_err(|e| Failure::input(path, e))?;
    let carrier = env.first().map_or(size, Relation::size);
    let holds = check_instance(law, carrier, &env).map_err(|e| Failure::input(path, e))?;
    writeln!(
        out,
        "law={} mode=replay n={carrier} verdict={}",
        law.id(),
        if holds { "pass" } else { "fail" }
    )
    .map_err(Failure::io)?;
    Ok(if holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn scc(path: &Path, via: Via, hooks: &Hooks, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = read_graph(path, err)?;
    let relational = || {
        equivalence_classes(&scc_equivalence(&relation_of(&g)))
            .expect("SCC relation is an equivalence")
    };
    let partition = match via {
        Via::Relational => relational(),
        Via::Oracle => (hooks.scc_oracle)(&g),
        Via::Both => {
            let relational = relational();
            let oracle = (hooks.scc_oracle)(&g);
            if relational != oracle {
                let _ = write!(
                    err,
                    "error: relational and oracle partitions differ\n\
                     # relational\n{relational}# oracle\n{oracle}"
                );
                return Ok(EXIT_VIOLATION);
            }
            relational
        }
    };
    write!(out, "{partition}").map_err(Failure::io)?;
    Ok(EXIT_OK)
}

fn condense_cmd(
    path: &Path,
    dot: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let g = read_graph(path, err)?;
    let text = to_dot(&condense(&relation_of(&g)), None);
    match dot {
        Some(target) => fs::write(target, text).map_err(|e| Failure::input(target, e))?,
        None => out.write_all(text.as_bytes()).map_err(Failure::io)?,
    }
    Ok(EXIT_OK)
}

fn star(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = read_graph(path, err)?;
    out.write_all(write_relation(&relation_of(&g).star()).as_bytes())
        .map_err(Failure::io)?;
    Ok(EXIT_OK)
}
