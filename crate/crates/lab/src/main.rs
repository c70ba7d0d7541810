use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use fowidth::extension::{
    alice_lower_bound, check_ea, least_n_below, search_witness, turan_tail_bound, Strategy,
};
use fowidth::graph::{is_strongly_regular, Graph};
use fowidth::patterns::{cocomponents, contains_induced, is_cograph, Pattern};
use fowidth::pebble::{solve, SolverConfig, DEFAULT_BUDGET};
use fowidth_lab::input::{parse_graph, read_graphs};
use fowidth_lab::{run_all, Ctx, Profile, Status, DEFAULT_SEED, REGISTRY};
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fowidth", version, about = "First-order definability parameters of finite graphs")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Budget profile: quick, default or deep.
    #[arg(long, global = true, default_value = "default")]
    profile: Profile,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and report its basic invariants.
    Construct {
        graph: String,
        /// Replace the graph by its complement.
        #[arg(long)]
        complement: bool,
        /// Disjoint union with another graph.
        #[arg(long)]
        union: Option<String>,
        /// Join with another graph.
        #[arg(long)]
        join: Option<String>,
        /// Lexicographic product with another graph (this graph outside).
        #[arg(long)]
        lex: Option<String>,
        /// Take the i-th power X^i.
        #[arg(long)]
        power: Option<usize>,
    },
    /// Induced-subgraph detection over one graph or a graph6 stream.
    Detect {
        /// triangle, p4, paw, claw, diamond, or any graph argument.
        #[arg(long)]
        pattern: String,
        /// A graph6 file, `-` for stdin, or a single graph argument.
        #[arg(long = "in")]
        input: String,
    },
    /// The partition chain Pi_0, Pi_1, ... and the cocomponents.
    Decompose {
        #[arg(long = "in")]
        input: String,
    },
    /// Solve the k-pebble game on G and H.
    Pebble {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        k: usize,
        /// Stop after this many rounds.
        #[arg(long)]
        rounds: Option<usize>,
        /// Canonical-position budget (defaults to the profile's).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check the k-extension axiom.
    Ea {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Search for a graph certifying A[F] >= k.
    Witness {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        k: usize,
        /// exhaustive-small[:max_n], gnp-sampling or turan-random-sampling[:parts].
        #[arg(long, default_value = "exhaustive-small")]
        strategy: Strategy,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Exact probability bounds.
    Bounds {
        /// Pattern size for the extension-index lower bound.
        #[arg(long, conflicts_with = "turan")]
        ell: Option<usize>,
        /// Evaluate the Turán tail bound for this k instead.
        #[arg(long)]
        turan: Option<usize>,
        /// Class size for --turan; without it, report the least n below 1 and 1/20.
        #[arg(long, requires = "turan")]
        n: Option<usize>,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        /// `prefix*`, an exact id, or a word of the id's group (`paw`, `alice`, ...).
        #[arg(long)]
        filter: Option<String>,
        /// List the registered checks without running them.
        #[arg(long)]
        list: bool,
    },
}

fn summary(g: &Graph) -> Value {
    json!({
        "graph6": g,
        "n": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "cograph": is_cograph(g),
        "twin_pairs": g.twins().len(),
        "strongly_regular": is_strongly_regular(g),
        "distance_regular": g.is_distance_regular(),
        "connectivity": g.vertex_connectivity(),
    })
}

fn detect(pattern: &str, input: &str) -> anyhow::Result<Value> {
    let graphs = if input == "-" || std::path::Path::new(input).is_file() {
        read_graphs(input)?
    } else {
        vec![parse_graph(input)?]
    };
    let named: Option<Pattern> = pattern.parse().ok();
    let f = match named {
        Some(p) => p.graph(),
        None => parse_graph(pattern)?,
    };
    let verdicts: Vec<Value> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let witness = contains_induced(g, &f);
            let present = match named {
                Some(p) => p.detect(g),
                None => witness.is_some(),
            };
            json!({ "index": i, "graph6": g, "present": present, "witness": witness })
        })
        .collect();
    Ok(json!({ "pattern": f, "graphs": graphs.len(), "verdicts": verdicts }))
}

fn construct(
    graph: &str,
    complement: bool,
    ops: [(&str, &Option<String>); 3],
    power: Option<usize>,
) -> anyhow::Result<Value> {
    let mut g = parse_graph(graph)?;
    for (op, other) in ops {
        if let Some(other) = other {
            let o = parse_graph(other)?;
            g = match op {
                "union" => g.disjoint_union(&o),
                "join" => g.join(&o),
                _ => g.lex_product(&o),
            };
        }
    }
    if let Some(i) = power {
        g = g.power(i)?;
    }
    if complement {
        g = g.complement();
    }
    Ok(summary(&g))
}

fn bounds(ell: Option<usize>, turan: Option<usize>, n: Option<usize>) -> anyhow::Result<Value> {
    match (ell, turan) {
        (Some(ell), _) => Ok(serde_json::to_value(alice_lower_bound(ell)?)?),
        (None, Some(k)) if k >= 2 => match n {
            Some(n) => {
                let b = turan_tail_bound(k, n);
                let below_one = b < BigRational::from_integer(1.into());
                Ok(json!({ "k": k, "n": n, "bound": b.to_string(), "below_one": below_one }))
            }
            None => {
                let one = BigRational::from_integer(1.into());
                let twentieth = BigRational::new(1.into(), 20.into());
                Ok(json!({
                    "k": k,
                    "least_n_below_one": least_n_below(k, &one),
                    "least_n_below_one_twentieth": least_n_below(k, &twentieth),
                }))
            }
        },
        (None, Some(k)) => bail!("the Turán bound needs k >= 2, got {k}"),
        (None, None) => bail!("give --ell or --turan"),
    }
}

fn emit(value: &Value, path: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    if let Some(path) = path {
        std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let ctx = Ctx {
        seed: cli.seed,
        profile: cli.profile,
    };
    let value = match cli.command {
        Command::Construct {
            graph,
            complement,
            union,
            join,
            lex,
            power,
        } => construct(&graph, complement, [("union", &union), ("join", &join), ("lex", &lex)], power)?,
        Command::Detect { pattern, input } => detect(&pattern, &input)?,
        Command::Decompose { input } => {
            let g = parse_graph(&input)?;
            json!({
                "graph6": g,
                "n": g.n(),
                "decomposition": g.decomposition(),
                "cocomponents": cocomponents(&g),
                "cograph": is_cograph(&g),
            })
        }
        Command::Pebble { g, h, k, rounds, budget } => {
            let config = SolverConfig {
                round_cap: rounds,
                budget: budget.unwrap_or(match ctx.profile {
                    Profile::Default => DEFAULT_BUDGET,
                    p => p.pebble_budget(),
                }),
            };
            serde_json::to_value(solve(&parse_graph(&g)?, &parse_graph(&h)?, k, &config)?)?
        }
        Command::Ea { graph, k } => serde_json::to_value(check_ea(&parse_graph(&graph)?, k)?)?,
        Command::Witness {
            pattern,
            k,
            strategy,
            budget,
        } => serde_json::to_value(search_witness(&parse_graph(&pattern)?, k, strategy, budget, ctx.seed)?)?,
        Command::Bounds { ell, turan, n } => bounds(ell, turan, n)?,
        Command::VerifyPaper { filter, list } => {
            if list {
                let checks: Vec<Value> = REGISTRY
                    .iter()
                    .filter(|c| fowidth_lab::registry::matches(c.id, filter.as_deref()))
                    .map(|c| json!({ "check_id": c.id, "anchor": c.anchor, "cost": c.cost, "seeded": c.seeded }))
                    .collect();
                emit(&json!(checks), cli.json.as_ref())?;
                return Ok(ExitCode::SUCCESS);
            }
            let results = run_all(REGISTRY, filter.as_deref(), &ctx);
            for r in &results {
                let tag = match &r.status {
                    Status::Pass => "PASS".to_string(),
                    Status::Fail => "FAIL".to_string(),
                    Status::Skipped { reason } => format!("SKIP ({reason})"),
                };
                eprintln!("{:<30} {tag}  [{:.2}s]", r.check_id, r.wall_time);
            }
            let failed = results.iter().filter(|r| r.failed()).count();
            let report = json!({
                "profile": ctx.profile,
                "seed": ctx.seed,
                "checks": results.len(),
                "failed": failed,
                "results": results,
            });
            emit(&report, cli.json.as_ref())?;
            return Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    };
    emit(&value, cli.json.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
