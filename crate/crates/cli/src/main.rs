use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cubmatch::constructions::{self as cons, Family, Recognizer, NAMES};
use cubmatch::decomposition::{
    invariants_with, nontrivial_tight_cuts, nontrivial_tight_cuts_oracle,
    tight_cut_decomposition_with, two_cut_decomposition_with, DecompositionTree,
};
use cubmatch::io::{graph_to_dot, parse_edge_list, parse_graph6, serialize_edge_list, to_graph6};
use cubmatch::lambda::lambda_profile_with;
use cubmatch::verify::{run_corpus, summarize, Corpus, VerifyOptions};
use cubmatch::{canonical_hash, edge_connectivity, Engine, Multigraph};

#[derive(Parser)]
#[command(
    name = "cubmatch",
    version,
    about = "Lambda-matchability and decompositions of cubic multigraphs"
)]
struct Cli {
    /// Worker threads for corpus runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Deterministic output; this is the only mode and the flag is accepted for scripts.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args)]
struct Input {
    /// Graph file; `-` reads standard input.
    #[arg(long, conflicts_with = "named")]
    input: Option<PathBuf>,
    /// A built-in graph, e.g. K3,3, K33sK4, Petersen.
    #[arg(long)]
    named: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

impl Input {
    fn load(&self) -> Result<Multigraph> {
        if let Some(name) = &self.named {
            return Ok(cons::named(name)?);
        }
        let Some(path) = &self.input else {
            bail!("one of --input or --named is required");
        };
        let text = if path.as_os_str() == "-" {
            io::read_to_string(io::stdin())?
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        Ok(match self.format {
            Format::Edgelist => parse_edge_list(&text)?,
            Format::Graph6 => {
                parse_graph6(text.lines().find(|l| !l.trim().is_empty()).unwrap_or(""))?
            }
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Tight,
    TwoCut,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    J,
    K,
    Kprime,
    L,
    G,
    Gprime,
    N,
    Nprime,
    Negative,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and the λ/ρ profile as JSON.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// `dot` draws the graph itself.
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Tight-cut or 2-cut decomposition tree.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "tight")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Check every bound and formula; exits nonzero if any report is red.
    Verify {
        /// Every 2-connected cubic multigraph up to this order.
        #[arg(long, conflicts_with_all = ["families", "input", "named"])]
        exhaustive: Option<usize>,
        /// Generated family members up to this depth.
        #[arg(long, conflicts_with_all = ["input", "named"])]
        families: Option<usize>,
        /// Run the oracle on graphs up to this order.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Write all connected cubic multigraphs of order n.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_kappa: usize,
        /// Keep only simple graphs; required for graph6 output at n >= 4.
        #[arg(long)]
        simple: bool,
        /// Directory for one file per graph; standard output otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Generate a family member, or test a graph for membership.
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Generate at this depth (or order, for the negative family).
        #[arg(long, conflicts_with_all = ["input", "named"])]
        depth: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Recompute everything by enumeration and compare with the fast path.
    Oracle {
        #[command(flatten)]
        input: Input,
    },
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn print_text(s: &str) -> Result<()> {
    io::stdout().lock().write_all(s.as_bytes())?;
    Ok(())
}

fn fixture_name(hash: &str) -> Option<&'static str> {
    NAMES
        .iter()
        .copied()
        .find(|name| cons::named(name).is_ok_and(|g| canonical_hash(&g) == hash))
}

fn analyze(g: &Multigraph, engine: Engine) -> Result<Value> {
    let kappa = edge_connectivity(g)?;
    let mut out = json!({
        "id": canonical_hash(g),
        "n": g.order(),
        "m": g.size(),
        "cubic": g.is_cubic(),
        "simple": g.is_simple(),
        "bipartite": g.is_bipartite(),
        "edge_connectivity": kappa,
    });
    if g.is_cubic() && kappa >= 2 {
        let p = lambda_profile_with(g, engine)?;
        out["lambda_set"] = json!(p.lambda_set);
        out["lambda"] = json!(p.lambda);
        if p.bipartite {
            out["rho"] = json!(p.rho);
            out["pairs"] = json!(p.pairs);
            out["partners"] = json!(p.partners);
        }
        out["invariants"] = serde_json::to_value(invariants_with(g, engine)?)?;
    }
    Ok(out)
}

fn tree_json(tree: &DecompositionTree) -> Result<Value> {
    let leaves: Vec<Value> = tree
        .leaves()
        .iter()
        .map(|l| json!({"kind": l.kind, "n": l.graph.order(), "hash": l.hash, "name": fixture_name(&l.hash)}))
        .collect();
    Ok(json!({"leaves": leaves, "tree": tree}))
}

fn family_of(f: FamilyArg) -> Option<Family> {
    Some(match f {
        FamilyArg::J => Family::J,
        FamilyArg::K => Family::K,
        FamilyArg::Kprime => Family::Kprime,
        FamilyArg::L => Family::L,
        FamilyArg::G => Family::G,
        FamilyArg::Gprime => Family::Gprime,
        FamilyArg::N => Family::N,
        FamilyArg::Nprime => Family::Nprime,
        FamilyArg::Negative => return None,
    })
}

fn family(f: FamilyArg, depth: Option<usize>, input: &Input) -> Result<()> {
    if let Some(d) = depth {
        return match f {
            FamilyArg::K => print_json(&cons::gen_k(d)),
            FamilyArg::G => print_json(&cons::gen_g(d)),
            FamilyArg::N => print_json(&cons::gen_n(d)),
            FamilyArg::Negative => {
                let g = cons::gen_negative_family(d)?;
                print_json(&json!({"graph": g, "id": canonical_hash(&g)}))
            }
            _ => bail!("generation is available for k, g, n and negative"),
        };
    }
    let g = input.load()?;
    let mut rec = Recognizer::new();
    let out = match f {
        FamilyArg::J => json!({"member": cons::recognize_j(&g)}),
        FamilyArg::K => witness_json(rec.k(&g)),
        FamilyArg::G => witness_json(rec.g(&g)),
        FamilyArg::N => witness_json(rec.n(&g)),
        FamilyArg::Kprime => json!({"member": rec.kprime(&g)}),
        FamilyArg::L => json!({"member": rec.l(&g)}),
        FamilyArg::Gprime => json!({"member": rec.gprime(&g)}),
        FamilyArg::Nprime => json!({"member": rec.nprime(&g)}),
        FamilyArg::Negative => {
            bail!("the negative family has no recognizer; use --depth <n> to generate")
        }
    };
    let mut out = out;
    out["family"] = json!(family_of(f));
    out["id"] = json!(canonical_hash(&g));
    print_json(&out)
}

fn witness_json(w: Option<cons::FamilyWitness>) -> Value {
    match w {
        Some(w) => json!({"member": true, "witness": w}),
        None => json!({"member": false}),
    }
}

fn oracle(g: &Multigraph) -> Result<bool> {
    let fast = analyze(g, Engine::Fast)?;
    let slow = analyze(g, Engine::Oracle)?;
    let mut out = json!({"fast": fast, "oracle": slow});
    let mut agree = fast == slow;
    if g.is_cubic() && edge_connectivity(g)? >= 2 {
        let shores = |cuts: Vec<cubmatch::Cut>| {
            let mut v: Vec<Vec<usize>> = cuts
                .iter()
                .map(|c| c.canonical().shore().to_vec())
                .collect();
            v.sort();
            v
        };
        let (a, b) = (
            shores(nontrivial_tight_cuts(g)?),
            shores(nontrivial_tight_cuts_oracle(g)?),
        );
        agree &= a == b;
        out["tight_cuts_fast"] = json!(a);
        out["tight_cuts_oracle"] = json!(b);
    }
    out["agree"] = json!(agree);
    print_json(&out)?;
    Ok(agree)
}

fn verify(
    exhaustive: Option<usize>,
    families: Option<usize>,
    max_n: usize,
    input: &Input,
) -> Result<bool> {
    let corpus = match (exhaustive, families) {
        (Some(n), _) => Corpus::Exhaustive {
            max_n: n,
            min_kappa: 2,
        },
        (None, Some(d)) => Corpus::Families { depth: d },
        (None, None) => Corpus::Graphs(vec![input.load()?]),
    };
    let reports = run_corpus(
        &corpus,
        &VerifyOptions {
            oracle_max_n: max_n,
        },
    )?;
    let mut out = io::stdout().lock();
    for r in &reports {
        serde_json::to_writer(&mut out, r)?;
        writeln!(out)?;
    }
    let summary = summarize(&reports);
    serde_json::to_writer(&mut out, &json!({ "summary": summary }))?;
    writeln!(out)?;
    Ok(summary.red == 0)
}

fn generate(
    n: usize,
    min_kappa: usize,
    simple: bool,
    out: Option<PathBuf>,
    format: Format,
) -> Result<()> {
    let encode = |g: &Multigraph| -> Result<String> {
        Ok(match format {
            Format::Edgelist => serialize_edge_list(g),
            Format::Graph6 => to_graph6(g)? + "\n",
        })
    };
    let graphs: Vec<Multigraph> = cons::generate_all_cubic(n, min_kappa)?
        .filter(|g| !simple || g.is_simple())
        .collect();
    match out {
        Some(dir) => {
            fs::create_dir_all(&dir)?;
            let ext = match format {
                Format::Edgelist => "txt",
                Format::Graph6 => "g6",
            };
            for (i, g) in graphs.iter().enumerate() {
                fs::write(dir.join(format!("n{n}_{i:05}.{ext}")), encode(g)?)?;
            }
            eprintln!("wrote {} graphs to {}", graphs.len(), dir.display());
        }
        None => {
            let mut stdout = io::stdout().lock();
            for (i, g) in graphs.iter().enumerate() {
                if i > 0 && matches!(format, Format::Edgelist) {
                    writeln!(stdout)?;
                }
                write!(stdout, "{}", encode(g)?)?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let _deterministic = cli.seedless;
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    match cli.command {
        Command::Analyze { input, output } => {
            let g = input.load()?;
            match output {
                Output::Json => print_json(&analyze(&g, Engine::Fast)?)?,
                Output::Dot => print_text(&graph_to_dot(&g, &canonical_hash(&g)))?,
            }
        }
        Command::Decompose {
            input,
            mode,
            output,
        } => {
            let g = input.load()?;
            let tree = match mode {
                Mode::Tight => tight_cut_decomposition_with(&g, Engine::Fast, None)?,
                Mode::TwoCut => two_cut_decomposition_with(&g, Engine::Fast, None)?,
            };
            match output {
                Output::Json => print_json(&tree_json(&tree)?)?,
                Output::Dot => print_text(&tree.to_dot())?,
            }
        }
        Command::Verify {
            exhaustive,
            families,
            max_n,
            input,
        } => return verify(exhaustive, families, max_n, &input),
        Command::Generate {
            n,
            min_kappa,
            simple,
            out,
            format,
        } => generate(n, min_kappa, simple, out, format)?,
        Command::Family {
            family: f,
            depth,
            input,
        } => family(f, depth, &input)?,
        Command::Oracle { input } => return oracle(&input.load()?),
    }
    Ok(true)
}

fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| {
                c.downcast_ref::<serde_json::Error>()
                    .and_then(serde_json::Error::io_error_kind)
            })
            == Some(io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
