//! Command-line surface: constructions, analysis, verification campaigns,
//! and size-function tables.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clawmat::claw::{line_profile, max_claw};
use clawmat::constructions::{f_value, g_value, BuiltFamily, FamilySpec};
use clawmat::enumeration::{EnumClass, EnumSpec};
use clawmat::error::Error;
use clawmat::graph::SimpleGraph;
use clawmat::matroid::Matroid;
use clawmat::verify::{
    contract_lemma_exhaustive, contract_lemma_property, verify_graph_theorem, verify_lowrank,
    verify_matroid_bound, verify_triangle_free, ExtremalReport,
};

#[derive(Parser)]
#[command(name = "clawmat", version, about = "Matroid and graph extremal verification")]
struct Cli {
    /// Worker parallelism (default: available parallelism)
    #[arg(long, global = true)]
    shards: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Args)]
struct ReportOpts {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stop early and report incomplete coverage after this many seconds
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Where to write counterexample artifacts on a mismatch
    #[arg(long, default_value = "counterexamples.txt")]
    artifact: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family and write it to a file
    Construct {
        /// Family spec, e.g. pg:4, ag:4, mrt:5,2, free:3, cc:3,3+1, gnt:9,2
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Read a matroid or graph file and print its profile
    Analyze {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Full claw census
        #[arg(long)]
        claws: bool,
        /// Line-length profile (simple matroids)
        #[arg(long)]
        lines: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run a verification campaign
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Property-based checks
    #[command(subcommand)]
    Property(PropertyCmd),
    /// Print size-function tables
    Tables {
        /// Which function: f (matroid) or g (graph)
        which: String,
        #[arg(long, default_value_t = 8)]
        r_max: usize,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Extremal bound over an enumerated matroid class
    Bound {
        #[arg(long, value_enum, default_value = "binary")]
        class: EnumClassArg,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        /// Element cap for the enumeration
        #[arg(long, default_value_t = 31)]
        n_max: usize,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Loopless bound 2r - t over basis-system matroids
    Lowrank {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Induced-forest-free edge bound on n-vertex graphs
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        opts: ReportOpts,
    },
    /// Triangle-free bound (t = 1) or conjecture counterexample scan (t >= 2)
    Trianglefree {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        size_cap: usize,
        #[command(flatten)]
        opts: ReportOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumClassArg {
    Binary,
    Rank3,
    Bases,
}

#[derive(Subcommand)]
enum PropertyCmd {
    /// Pseudoclaws of M/X are claws of M
    Contract {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also sweep every basis-system matroid on up to this many elements
        #[arg(long)]
        exhaustive_n: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(Error::from)
        }
    }
}

fn finish_extremal(report: &ExtremalReport, opts: &ReportOpts) -> Result<u8, Error> {
    let text = match opts.format {
        Format::Json => report.to_json(),
        _ => report.to_table(),
    };
    emit(&text, &opts.out)?;
    if !report.counterexamples.is_empty() {
        let mut body = String::new();
        for c in &report.counterexamples {
            body.push_str(&c.record);
            body.push('\n');
        }
        std::fs::write(&opts.artifact, body)?;
        eprintln!(
            "COUNTEREXAMPLE: {} object(s) below the threshold written to {}",
            report.counterexamples.len(),
            opts.artifact.display()
        );
    }
    Ok(report.exit_code() as u8)
}

fn analyze(path: &PathBuf, claws: bool, lines: bool, format: Format) -> Result<u8, Error> {
    let text = std::fs::read_to_string(path)?;
    if text.starts_with("GRAPH") {
        let g = SimpleGraph::parse(&text)?;
        println!("graph on {} vertices, {} edges", g.n(), g.edge_count());
        println!("max stable set: {}", g.max_stable_set());
        return Ok(0);
    }
    let m = Matroid::parse(&text)?;
    if format == Format::Table {
        println!(
            "matroid: n={} rank={} simple={} points={}",
            m.n(),
            m.full_rank(),
            m.is_simple(),
            m.epsilon()
        );
    }
    if claws {
        let report = max_claw(&m)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
            _ => {
                println!("max claw size: {}", report.max_claw_size);
                for (k, c) in &report.counts_by_size {
                    println!("  {k}-claws: {c}");
                }
                for w in &report.witnesses {
                    println!("  witness: {w:?}");
                }
                if report.truncated {
                    println!("  (witness list truncated)");
                }
            }
        }
    }
    if lines {
        let profile = line_profile(&m)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&profile).expect("profile serializes")),
            _ => {
                for (len, c) in &profile.counts {
                    println!("  lines of {len} points: {c}");
                }
                println!("  triangle-free: {}", profile.is_triangle_free());
            }
        }
    }
    Ok(0)
}

fn tables(which: &str, r_max: usize, t_max: usize, format: Format) -> Result<u8, Error> {
    let (name, value): (&str, Box<dyn Fn(usize, usize) -> u64>) = match which {
        "f" => ("f", Box::new(f_value)),
        "g" => ("g", Box::new(g_value)),
        _ => return Err(Error::Input(format!("unknown table `{which}`; use f or g"))),
    };
    let sep = if format == Format::Csv { "," } else { "\t" };
    let header: Vec<String> = (1..=t_max).map(|t| format!("t={t}")).collect();
    println!("{name}{sep}{}", header.join(sep));
    for r in 0..=r_max {
        let row: Vec<String> = (1..=t_max).map(|t| value(r, t).to_string()).collect();
        println!("{r}{sep}{}", row.join(sep));
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Construct { family, out } => {
            let spec = FamilySpec::parse(&family)?;
            let text = match spec.build()? {
                BuiltFamily::Matroid(m) => m.serialize(),
                BuiltFamily::Graph(g) => g.serialize(),
            };
            std::fs::write(&out, text)?;
            Ok(0)
        }
        Command::Analyze { r#in, claws, lines, format } => analyze(&r#in, claws, lines, format),
        Command::Verify(cmd) => match cmd {
            VerifyCmd::Bound { class, r, t, n_max, opts } => {
                let spec = EnumSpec {
                    class: match class {
                        EnumClassArg::Binary => EnumClass::Binary,
                        EnumClassArg::Rank3 => EnumClass::Rank3,
                        EnumClassArg::Bases => EnumClass::Bases,
                    },
                    rank: r,
                    n_max,
                    size_bound: None,
                    require_simple: true,
                };
                let report = verify_matroid_bound(&spec, t, opts.budget_seconds)?;
                finish_extremal(&report, &opts)
            }
            VerifyCmd::Lowrank { r, t, n_max, opts } => {
                let report = verify_lowrank(r, t, n_max, opts.budget_seconds)?;
                finish_extremal(&report, &opts)
            }
            VerifyCmd::Graph { n, t, opts } => {
                let report = verify_graph_theorem(n, t, opts.budget_seconds)?;
                finish_extremal(&report, &opts)
            }
            VerifyCmd::Trianglefree { r, t, size_cap, opts } => {
                let report = verify_triangle_free(r, t, size_cap, opts.budget_seconds)?;
                finish_extremal(&report, &opts)
            }
        },
        Command::Property(PropertyCmd::Contract { trials, seed, exhaustive_n, format, out }) => {
            let mut report = contract_lemma_property(trials, seed)?;
            if let Some(n) = exhaustive_n {
                let sweep = contract_lemma_exhaustive(n)?;
                report.counts_scanned += sweep.counts_scanned;
                report.failures.extend(sweep.failures);
            }
            let text = match format {
                Format::Json => report.to_json(),
                _ => report.to_table(),
            };
            emit(&text, &out)?;
            Ok(report.exit_code() as u8)
        }
        Command::Tables { which, r_max, t_max, format } => tables(&which, r_max, t_max, format),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CLAW_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    if let Some(shards) = cli.shards {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(shards).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Error::Capacity(msg)) => {
            eprintln!("capacity: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
