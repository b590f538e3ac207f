//! `skewopt`: verify, construct, search for and enumerate optimum skew
//! energy orientations.
//!
//! JSON goes to stdout and diagnostics to stderr. Exit status is 0 for an
//! optimum orientation or plain success, 2 for an input verified not to be
//! optimum (or a search that proved none exists), and 1 for errors.

mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use skewopt::constructions::{g12_family, g26_family, hypercube, p2_lift, PaperMatrix};
use skewopt::io::{edgelist, graph6, sgf};
use skewopt::report::{self, sig10, VerifyReport};
use skewopt::search::{
    brute_force, build_catalog_with, enumerate_streaming, feasibility_bound, find_optimum_orientation,
    EnumerateOptions, SearchOptions, SearchOutcome, THREADS_ENV,
};
use skewopt::{CliqueLevel, Orientation, UndirectedGraph};

use input::Format;

#[derive(Parser)]
#[command(name = "skewopt", version, about = "Optimum skew energy orientations of regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check SᵀS = kI exactly for an sgf file and report the skew energy.
    Verify {
        path: PathBuf,
        /// Degree to test against (default: the k of the sgf header).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Skew energy of an sgf file against the bound n·√Δ.
    Energy { path: PathBuf },
    /// Search for an optimum orientation of a k-regular graph.
    Search {
        /// graph6 (.g6), edge list (.edges) or sgf; other names are sniffed.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Collect one witness per optimum reversal class.
        #[arg(long)]
        all: bool,
        /// Try all 2^m orientations instead of the pruned search.
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// List connected k-regular even neighbourhood graphs on n vertices.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "clique_level")]
        triangle_free: bool,
        /// HAS_K4, HAS_K3_NO_K4 or TRIANGLE_FREE.
        #[arg(long)]
        clique_level: Option<CliqueLevel>,
        /// Drop the even neighbourhood filter and list every regular graph.
        #[arg(long)]
        all_regular: bool,
        /// Keep disconnected graphs as well
        #[arg(long)]
        allow_disconnected: bool,
        /// Run above the measured feasibility bound.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Enumerate a range of orders and decide orientability of every graph.
    Catalog {
        #[arg(long)]
        k: usize,
        /// Inclusive range `a..b`.
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Emit a named optimum orientation.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Order for g12/g26, cycle length for un, dimension for hypercube.
        #[arg(long)]
        n: Option<usize>,
        /// Optimum sgf to lift (p2lift only).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Sgf)]
        format: OutFormat,
    },
    /// Parse and re-serialise an sgf, graph6 or edge-list file.
    Roundtrip {
        path: PathBuf,
        /// Exit with status 2 if the output differs from the input.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Sgf,
    Graph6,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    G4,
    G12,
    G16,
    G17,
    G26,
    G31,
    Un,
    P2lift,
    Hypercube,
}

enum Status {
    Success,
    Negative,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    print!("{}", report::to_pretty(v));
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Verify { path, k } => {
            let signed = input::read_sgf(&path)?;
            let k = k.unwrap_or(signed.k);
            let r = VerifyReport::new(&signed.orientation, k, Some(path.display().to_string()));
            print_json(&r.to_json());
            Ok(if r.is_optimum { Status::Success } else { Status::Negative })
        }
        Command::Energy { path } => {
            let signed = input::read_sgf(&path)?;
            let o = &signed.orientation;
            let energy = o.skew_energy();
            let bound = skewopt::oriented::energy_bound(o.graph());
            print_json(&json!({
                "n": o.order(),
                "max_degree": o.graph().max_degree(),
                "energy": sig10(energy),
                "energy_bound": sig10(bound),
                "ratio": sig10(if bound > 0.0 { energy / bound } else { 1.0 }),
            }));
            Ok(Status::Success)
        }
        Command::Search {
            graph,
            k,
            all,
            brute_force: brute,
            max_nodes,
        } => search(&input::read_graph(&graph)?, k, all, brute, max_nodes),
        Command::Enumerate {
            k,
            n,
            triangle_free,
            clique_level,
            all_regular,
            allow_disconnected,
            force,
            format,
        } => {
            let opts = EnumerateOptions {
                connected: !allow_disconnected,
                even_neighborhoods: !all_regular,
                clique_level: if triangle_free {
                    Some(CliqueLevel::TriangleFree)
                } else {
                    clique_level
                },
                force,
            };
            enumerate(k, n, &opts, format)
        }
        Command::Catalog { k, n_range, out, force } => catalog(k, &n_range, out, force),
        Command::Construct {
            family,
            n,
            input,
            format,
        } => {
            let o = construct(family, n, input)?;
            let k = o.graph().max_degree();
            match format {
                OutFormat::Sgf => print!("{}", sgf::write(&o, k)),
                OutFormat::Graph6 => println!("{}", graph6::encode(o.graph())),
                OutFormat::Both => {
                    print!("{}", sgf::write(&o, k));
                    println!("{}", graph6::encode(o.graph()));
                }
            }
            Ok(Status::Success)
        }
        Command::Roundtrip { path, check } => {
            let text = input::read(&path)?;
            let out = match input::detect(&text) {
                Format::Sgf => {
                    let s = sgf::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
                    sgf::write(&s.orientation, s.k)
                }
                Format::EdgeList => edgelist::write(&edgelist::parse(&text).with_context(|| format!("parsing {}", path.display()))?),
                Format::Graph6 => {
                    let first = text.lines().next().unwrap_or("");
                    let g = graph6::decode(first).with_context(|| format!("parsing {}", path.display()))?;
                    format!("{}\n", graph6::encode(&g))
                }
            };
            print!("{out}");
            let same = out == text || out.trim_end_matches('\n') == text.trim_end_matches('\n');
            if !same {
                eprintln!("note: {} was normalised", path.display());
            }
            Ok(if check && !same { Status::Negative } else { Status::Success })
        }
    }
}

fn search(g: &UndirectedGraph, k: usize, all: bool, brute: bool, max_nodes: Option<u64>) -> Result<Status> {
    if brute {
        if !g.is_regular(k) {
            bail!(skewopt::Error::NotRegular(k));
        }
        let start = Instant::now();
        let r = brute_force(g, k, !all)?;
        print_json(&json!({
            "outcome": if r.first.is_some() { "FOUND" } else { "NONE" },
            "witness": r.first.as_ref().map(|o| sgf::write(o, k)),
            "orientations_checked": r.orientations_checked,
            "optimum_orientations": if all { Some(r.optimum_count) } else { None },
            "time": sig10(start.elapsed().as_secs_f64()),
        }));
        return Ok(if r.first.is_some() { Status::Success } else { Status::Negative });
    }
    let opts = SearchOptions { max_nodes, find_all: all };
    let cert = find_optimum_orientation(g, k, &opts)?;
    if let Some(w) = cert.outcome.witness() {
        // witnesses are re-checked outside the search bookkeeping
        if !w.is_optimum(k) {
            bail!("internal error: search returned a non-optimum witness");
        }
    }
    print_json(&report::search_json(&cert, k));
    match cert.outcome {
        SearchOutcome::Found(_) => Ok(Status::Success),
        SearchOutcome::NotFound => Ok(Status::Negative),
        SearchOutcome::LimitReached => Err(anyhow!("node limit reached before the search finished")),
    }
}

fn enumerate(k: usize, n: usize, opts: &EnumerateOptions, format: ListFormat) -> Result<Status> {
    if n > feasibility_bound(k) && opts.force {
        eprintln!(
            "warning: n = {n} is above the measured bound {} for k = {k}; results stream as they are found",
            feasibility_bound(k)
        );
    }
    let streaming = matches!(format, ListFormat::Graph6);
    let (graphs, stats) = enumerate_streaming(k, n, opts, |e| {
        if streaming {
            println!("{}", e.certificate);
        }
    })?;
    if !streaming {
        print_json(&json!({
            "k": k,
            "n": n,
            "count": graphs.len(),
            "nodes": stats.nodes,
            "graphs": graphs
                .iter()
                .map(|e| json!({"graph6": e.certificate, "clique_level": e.graph.classify_clique_level().as_str()}))
                .collect::<Vec<_>>(),
        }));
    }
    Ok(Status::Success)
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| anyhow!("expected a range `a..b`, got `{s}`"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range end in `{s}`"))?;
    if a > b {
        bail!("empty range `{s}`");
    }
    Ok((a..=b).collect())
}

fn catalog(k: usize, range: &str, out: Option<PathBuf>, force: bool) -> Result<Status> {
    let orders = parse_range(range)?;
    let threads = skewopt::search::catalog::threads_from_env()?;
    if let Some(&top) = orders.last() {
        if top > feasibility_bound(k) && force {
            eprintln!("warning: n = {top} is above the measured bound {} for k = {k}", feasibility_bound(k));
        }
    }
    let opts = EnumerateOptions {
        force,
        ..Default::default()
    };
    let start = Instant::now();
    let entries = build_catalog_with(k, &orders, &opts, threads)?;
    for &n in &orders {
        let at: Vec<_> = entries.iter().filter(|e| e.order == n).collect();
        if !at.is_empty() {
            let orientable = at.iter().filter(|e| e.orientable == Some(true)).count();
            eprintln!("n = {n}: {} graphs, {orientable} orientable", at.len());
        }
    }
    eprintln!(
        "catalog for k = {k} built in {:.2} s ({THREADS_ENV}={})",
        start.elapsed().as_secs_f64(),
        threads.map_or("unset".to_string(), |t| t.to_string())
    );
    let text = report::to_pretty(&report::catalog_json(k, &orders, &entries));
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(Status::Success)
}

fn need_n(n: Option<usize>, family: &str) -> Result<usize> {
    n.ok_or_else(|| anyhow!("--n is required for {family}"))
}

fn construct(family: Family, n: Option<usize>, input: Option<PathBuf>) -> Result<Orientation> {
    Ok(match family {
        Family::G4 => PaperMatrix::G4.orientation(),
        Family::G16 => PaperMatrix::G16.orientation(),
        Family::G17 => PaperMatrix::G17.orientation(),
        Family::G31 => PaperMatrix::G31.orientation(),
        Family::G12 => g12_family(need_n(n, "g12")?)?,
        Family::G26 => g26_family(need_n(n, "g26")?)?,
        Family::Hypercube => hypercube(need_n(n, "hypercube")?),
        Family::Un => {
            let g = UndirectedGraph::u_graph(need_n(n, "un")?)?;
            let cert = find_optimum_orientation(&g, 4, &SearchOptions::default())?;
            match cert.outcome {
                SearchOutcome::Found(o) => o,
                _ => bail!("U_{} has no optimum orientation", g.order() / 2),
            }
        }
        Family::P2lift => {
            let path = input.ok_or_else(|| anyhow!("--input is required for p2lift"))?;
            p2_lift(&input::read_sgf(&path)?.orientation)?
        }
    })
}
