use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, anyhow};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tmatch::Error;
use tmatch::detect::{Variant, analyze};
use tmatch::gadgets::dump_auxiliary;
use tmatch::generators::{PlantKind, plant_forbidden, random_bounded, sprinkle, vertex_induced_weights};
use tmatch::graph::Graph;
use tmatch::io::{Instance, parse_instance, write_instance};
use tmatch::oracle::{COVER_LIMIT, SUBGRAPH_LIMIT, brute_force_optimum};
use tmatch::pipeline::{Mode, SolveOptions, solve};

/// Maximum weight t-matchings avoiding complete (partite) subgraphs.
#[derive(Parser)]
#[command(name = "tmatch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file ("-" reads stdin).
    Solve(SolveArgs),
    /// Write a seeded random instance.
    Generate(GenerateArgs),
    /// List forbidden subgraphs with their classification.
    Detect(DetectArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantName {
    Restricted,
    Kpq,
}

#[derive(Args)]
struct VariantArgs {
    /// Overrides the variant in the file header.
    #[arg(long, value_enum)]
    variant: Option<VariantName>,
    /// Overrides t from the file header.
    #[arg(short = 't')]
    t: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[command(flatten)]
    variant: VariantArgs,
    /// Ignore weights and solve the cardinality problem.
    #[arg(long)]
    unweighted: bool,
    #[arg(long)]
    json: bool,
    /// Compare against exhaustive search on small instances; exit 5 on mismatch.
    #[arg(long)]
    oracle_check: bool,
    /// Write the auxiliary instance (`u v w kind gadget`) to this file.
    #[arg(long)]
    dump_aux: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(short = 't')]
    t: usize,
    #[arg(long, default_value_t = 0.3)]
    prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// clique, biclique, partite:P:Q, clique-pair, biclique-pair,
    /// biclique-cross-pair, partite-pair:P:Q, dense:P, dense-minus-edge:P,
    /// clique-biclique
    #[arg(long)]
    plant: Option<String>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Random extra edges added after planting.
    #[arg(long, default_value_t = 0)]
    sprinkle: usize,
    #[arg(long, value_enum, default_value = "restricted")]
    variant: VariantName,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Vertex-induced weights on the forbidden subgraphs, random elsewhere.
    #[arg(long)]
    weighted: bool,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    potential_min: i64,
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    potential_max: i64,
    #[arg(long, default_value_t = 9)]
    noise: i64,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DetectArgs {
    input: PathBuf,
    #[command(flatten)]
    variant: VariantArgs,
    #[arg(long)]
    json: bool,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(
                Error::Malformed { .. }
                | Error::Parameters(_)
                | Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::ParallelEdge(..),
            ) => 2,
            Some(Error::DegreeBound { .. } | Error::NegativeWeight { .. } | Error::Overflow(_)) => 3,
            Some(Error::NotVertexInduced { .. }) => 4,
            Some(_) => 1,
            None if error.downcast_ref::<io::Error>().is_some() => 2,
            None => 1,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        anyhow::Error::from(error).into()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => solve_command(a),
        Command::Generate(a) => generate_command(a),
        Command::Detect(a) => detect_command(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.error.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn variant_of(name: VariantName, p: Option<usize>, q: Option<usize>, fallback: Variant) -> anyhow::Result<Variant> {
    Ok(match name {
        VariantName::Restricted => Variant::Restricted,
        VariantName::Kpq => {
            let (fp, fq) = match fallback {
                Variant::KpqFree { p, q } => (Some(p), Some(q)),
                Variant::Restricted => (None, None),
            };
            let p = p.or(fp).ok_or_else(|| Error::Parameters("--variant kpq needs --p".into()))?;
            let q = q.or(fq).ok_or_else(|| Error::Parameters("--variant kpq needs --q".into()))?;
            Variant::KpqFree { p, q }
        }
    })
}

/// Parses the file and applies command-line overrides.
fn load(path: &PathBuf, args: &VariantArgs) -> Result<Instance, Failure> {
    let text = read_input(path)?;
    let mut inst = parse_instance(&text)?;
    if let Some(t) = args.t {
        if t != inst.graph.t() {
            let edges: Vec<_> = inst.graph.edges().iter().map(|e| (e.u, e.v, e.weight / 2)).collect();
            inst.graph = Graph::new(inst.graph.n(), t, &edges)?;
        }
    }
    let name = match (args.variant, inst.variant) {
        (Some(v), _) => Some(v),
        (None, Variant::KpqFree { .. }) if args.p.is_some() || args.q.is_some() => Some(VariantName::Kpq),
        (None, _) => None,
    };
    if let Some(name) = name {
        inst.variant = variant_of(name, args.p, args.q, inst.variant)?;
    }
    inst.variant.validate(inst.graph.t())?;
    Ok(inst)
}

fn sorted_pairs(g: &Graph, ids: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = ids.into_iter().map(|e| (g.edge(e).u, g.edge(e).v)).collect();
    pairs.sort_unstable();
    pairs
}

fn solve_command(args: SolveArgs) -> Result<(), Failure> {
    let mut inst = load(&args.input, &args.variant)?;
    let mode = if inst.weighted && !args.unweighted {
        Mode::Weighted
    } else {
        Mode::Unweighted
    };
    if mode == Mode::Unweighted {
        inst.graph = inst.graph.with_weights(&vec![1; inst.graph.m()])?;
    }
    let g = &inst.graph;
    let sol = solve(
        g,
        SolveOptions {
            variant: inst.variant,
            mode,
        },
    )?;
    if let Some(path) = &args.dump_aux {
        fs::write(path, dump_auxiliary(&sol.aux)).with_context(|| format!("writing {}", path.display()))?;
    }
    let res = &sol.result;
    let weight = res.weight / 2;
    let kept = sorted_pairs(g, res.tmatching.iter().copied());
    let mut out = io::stdout().lock();
    let written = if args.json {
        let record = json!({
            "weight": weight,
            "edges": kept,
            "co_edges": sorted_pairs(g, res.cotmatching.edges.iter().copied()),
            "diagnostics": res.diagnostics,
            "stats": sol.stats,
        });
        writeln!(out, "{}", serde_json::to_string(&record).map_err(anyhow::Error::from)?)
    } else {
        let mut text = format!("weight {weight}\nedges {}\n", kept.len());
        for (u, v) in &kept {
            text.push_str(&format!("{u} {v}\n"));
        }
        out.write_all(text.as_bytes())
    };
    written.map_err(anyhow::Error::from)?;
    if args.oracle_check {
        if g.n() > SUBGRAPH_LIMIT || g.m() > COVER_LIMIT {
            eprintln!(
                "oracle check skipped: {} vertices, {} edges (limits {SUBGRAPH_LIMIT}, {COVER_LIMIT})",
                g.n(),
                g.m()
            );
        } else {
            let (best, _) = brute_force_optimum(g, inst.variant)?;
            if best != res.weight {
                return Err(Failure {
                    code: 5,
                    error: anyhow!("oracle optimum {} differs from {weight}", best / 2),
                });
            }
            eprintln!("oracle check passed");
        }
    }
    Ok(())
}

fn generate_command(args: GenerateArgs) -> Result<(), Failure> {
    let variant = variant_of(args.variant, args.p, args.q, Variant::Restricted)?;
    variant.validate(args.t)?;
    let base = random_bounded(args.n, args.t, args.prob, args.seed)?;
    let planted = match &args.plant {
        Some(kind) => plant_forbidden(&base, kind.parse::<PlantKind>()?, args.count, args.seed.wrapping_add(1))?,
        None => base,
    };
    let mut graph = sprinkle(&planted, args.sprinkle, args.seed.wrapping_add(2))?;
    if args.weighted {
        let detection = analyze(&graph, variant)?;
        let groups: Vec<Vec<usize>> = detection.subgraphs.iter().map(|h| h.vertices.clone()).collect();
        let w = vertex_induced_weights(
            &graph,
            &groups,
            args.potential_min..=args.potential_max,
            args.noise,
            args.seed.wrapping_add(3),
        )?;
        graph = graph.with_weights(&w.weights)?;
    }
    let text = write_instance(&Instance {
        graph,
        variant,
        weighted: args.weighted,
    });
    match &args.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes()).map_err(anyhow::Error::from)?,
    }
    Ok(())
}

fn detect_command(args: DetectArgs) -> Result<(), Failure> {
    let inst = load(&args.input, &args.variant)?;
    let d = analyze(&inst.graph, inst.variant)?;
    let mut out = String::new();
    if args.json {
        out = serde_json::to_string(&d).map_err(anyhow::Error::from)? + "\n";
    } else {
        out.push_str(&format!("subgraphs {} probes {}\n", d.subgraphs.len(), d.probes));
        for h in &d.subgraphs {
            let classes: Vec<String> = if h.is_dense() {
                vec![format!("core {}", join(&h.core, " ")), format!("members {}", h.members.len())]
            } else {
                h.classes().iter().map(|c| join(c, ",")).collect()
            };
            let status = match (h.absorbed, h.problematic) {
                (Some(d), _) => format!("absorbed {d}"),
                (None, true) => "problematic".to_string(),
                (None, false) => "unproblematic".to_string(),
            };
            out.push_str(&format!("{} {} {} {}\n", h.id, h.kind.name(), classes.join(" | "), status));
        }
    }
    io::stdout().write_all(out.as_bytes()).map_err(anyhow::Error::from)?;
    Ok(())
}

fn join(items: &[usize], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
