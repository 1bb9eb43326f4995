use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use regindep::families::DEFAULT_ENUMERATION_CAP;
use regindep::solver::{DEFAULT_CHI_BUDGET, DEFAULT_ORACLE_CLASS_CAP};
use regindep::Graph;
use regindep_cli::*;

/// Exact regular k-independence numbers and checks of their bounds.
#[derive(Parser)]
#[command(name = "regindep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// α_{k-reg} with per-class values and a witness.
    Compute {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "0")]
        k: String,
    },
    /// Closed form vs solver vs oracle for a graph family.
    Family(FamilyArgs),
    /// Diameter bounds on random trees, or the full regime sweep without --n/--t.
    TreeBounds {
        #[arg(long, requires = "t")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        t: Option<usize>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lower bounds on the line graph, as certificates.
    LgBounds {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "0,1,2")]
        k: String,
        #[arg(long, value_enum, default_value_t = BoundGroup::All)]
        theorem: BoundGroup,
        #[arg(long, default_value_t = DEFAULT_CHI_BUDGET)]
        chi_budget: u64,
    },
    /// Every labeled graph of order n against its complement.
    NgScan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0,1,2,5")]
        k: String,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enum_cap: usize,
    },
    /// Subset-enumeration oracle next to the solver.
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "0")]
        k: String,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CLASS_CAP)]
        class_cap: usize,
    },
}

/// Where graphs come from: a file, a family or a named graph.
#[derive(Args)]
struct Source {
    /// graph6 (one per line) or edge-list file.
    #[arg(long, conflicts_with_all = ["family", "named"])]
    input: Option<String>,
    /// complete, path, cycle, star, multipartite or spider.
    #[arg(long, conflicts_with = "named")]
    family: Option<String>,
    /// octahedron, icosahedron, triangle-pendant, fan or apollonian.
    #[arg(long)]
    named: Option<String>,
    /// Order (range allowed for families).
    #[arg(long)]
    n: Option<String>,
    /// Part sizes, e.g. 2,2,3.
    #[arg(long)]
    parts: Option<String>,
    /// Leg orders, e.g. 4,3,3.
    #[arg(long)]
    legs: Option<String>,
    /// Apollonian depth.
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Args)]
struct FamilyArgs {
    /// complete, path, cycle, star, multipartite or spider.
    name: String,
    /// Orders for complete, path, cycle and star (range allowed).
    #[arg(long)]
    n: Option<String>,
    /// Part sizes; repeatable.
    #[arg(long)]
    parts: Vec<String>,
    /// Every supported part multiset with this total or less.
    #[arg(long)]
    max_total: Option<usize>,
    /// Leg orders; repeatable.
    #[arg(long)]
    legs: Vec<String>,
    /// Every spider of this order or less.
    #[arg(long)]
    max_order: Option<usize>,
    /// Defaults to 0..n for each instance.
    #[arg(long)]
    k: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CLASS_CAP)]
    class_cap: usize,
}

fn instances(kind: &str, n: Option<&str>, parts: &[Vec<usize>], legs: &[Vec<usize>]) -> CliResult<Vec<Instance>> {
    let orders = || parse_range(n.ok_or_else(|| usage(format!("{kind} needs --n")))?);
    Ok(match kind {
        "complete" => orders()?.into_iter().map(Instance::Complete).collect(),
        "path" => orders()?.into_iter().map(Instance::Path).collect(),
        "cycle" => orders()?.into_iter().map(Instance::Cycle).collect(),
        "star" => orders()?.into_iter().map(Instance::Star).collect(),
        "multipartite" if !parts.is_empty() => parts.iter().cloned().map(Instance::Multipartite).collect(),
        "multipartite" => return Err(usage("multipartite needs --parts")),
        "spider" if !legs.is_empty() => legs.iter().cloned().map(Instance::Spider).collect(),
        "spider" => return Err(usage("spider needs --legs")),
        other => return Err(usage(format!("unknown family {other:?}"))),
    })
}

fn graphs(src: &Source) -> CliResult<Vec<Graph>> {
    if let Some(path) = &src.input {
        return read_graphs(path);
    }
    if let Some(name) = &src.named {
        let n = src.n.as_deref().map(str::parse).transpose().map_err(|_| usage("--n must be an integer"))?;
        return Ok(vec![named_graph(name, n, src.depth)?]);
    }
    let Some(kind) = &src.family else {
        return Err(usage("give --input, --family or --named"));
    };
    let parts: Vec<Vec<usize>> = src.parts.as_deref().map(parse_list).transpose()?.into_iter().collect();
    let legs: Vec<Vec<usize>> = src.legs.as_deref().map(parse_list).transpose()?.into_iter().collect();
    instances(kind, src.n.as_deref(), &parts, &legs)?.iter().map(Instance::build).collect()
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Compute { source, k } => Ok(cmd_compute(&graphs(source)?, &parse_range(k)?)),
        Command::Family(a) => {
            let mut parts: Vec<Vec<usize>> = a.parts.iter().map(|p| parse_list(p)).collect::<CliResult<_>>()?;
            if let Some(t) = a.max_total {
                parts.extend(supported_part_multisets(t));
            }
            let mut legs: Vec<Vec<usize>> = a.legs.iter().map(|l| parse_list(l)).collect::<CliResult<_>>()?;
            if let Some(m) = a.max_order {
                legs.extend(spiders_up_to(m));
            }
            let insts = instances(&a.name, a.n.as_deref(), &parts, &legs)?;
            let ks = a.k.as_deref().map(parse_range).transpose()?;
            cmd_family(&insts, ks.as_deref(), a.class_cap)
        }
        Command::TreeBounds { n, t, samples, seed } => cmd_tree_bounds(n.zip(*t), *samples, *seed),
        Command::LgBounds {
            source,
            k,
            theorem,
            chi_budget,
        } => cmd_lg_bounds(&graphs(source)?, &parse_range(k)?, *theorem, *chi_budget),
        Command::NgScan { n, k, enum_cap } => cmd_ng_scan(*n, &parse_range(k)?, *enum_cap),
        Command::Oracle { source, k, class_cap } => cmd_oracle(&graphs(source)?, &parse_range(k)?, *class_cap),
    }
}

fn init_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("REGINDEP_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("REGINDEP_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError {
            code: EXIT_OTHER,
            message: e.to_string(),
        })
}

fn emit(cli: &Cli, report: &Report) -> CliResult<()> {
    let (main, summary) = render(report, cli.format);
    let io = |e: std::io::Error| CliError {
        code: EXIT_OTHER,
        message: e.to_string(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, main).map_err(io)?,
        None => std::io::stdout().lock().write_all(main.as_bytes()).map_err(io)?,
    }
    if let Some(s) = summary {
        eprintln!("{s}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_threads().and_then(|()| run(&cli)).and_then(|r| emit(&cli, &r).map(|()| r));
    match result {
        Ok(r) => ExitCode::from(r.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
