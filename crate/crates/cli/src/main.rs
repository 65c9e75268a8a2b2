mod input;
mod report;

use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use demkit::error::Error;
use demkit::graph::{base_graph, Graph, Vertex};
use demkit::monitor::{em_set, em_sets_all, is_monitoring_set, p_set, p_set_size_zero_reason};
use demkit::solvers::{dem_exact, dem_greedy, DemError, DemResult};
use demkit::structural::{
    bounds_report, dem2_pair_check_with, dem3_triple_check_with, ConditionReport, ConditionResult,
    Dem2Reading,
};
use rayon::prelude::*;

use input::Instance;
use report::{BoundsOut, CharReport, DemReport, EmReport, GenReport, PsetReport, Render, VerifyReport};

const EXIT_INPUT: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "demkit", version, about = "Distance-edge-monitoring sets of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Edge-list file (`n m` header, then one `u v` pair per line).
    #[arg(conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Generate the graph instead, e.g. `grid:4,4` or `random:10,0.3`.
    #[arg(long = "gen", value_name = "FAMILY:PARAMS")]
    gen: Option<String>,
    /// Seed for random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Source {
    fn load(&self) -> Result<Instance> {
        match (&self.input, &self.gen) {
            (Some(path), None) => Instance::from_file(path),
            (None, Some(spec)) => Instance::from_spec(spec, self.seed),
            _ => bail!(Error::BadParameter("give exactly one of a file or --gen".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Greedy,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum distance-edge-monitoring set.
    Dem {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        /// Branch-and-bound node budget for the exact solver.
        #[arg(long)]
        budget: Option<u64>,
        /// Report wall time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Edges monitored by one vertex, or by each vertex.
    Em {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Pairs (x, y), x in M, whose distance changes when an edge is deleted.
    Pset {
        #[command(flatten)]
        source: Source,
        /// Comma-separated vertices, or `all`.
        #[arg(long)]
        monitors: String,
        /// `u,v`, or `centers` for a double star.
        #[arg(long)]
        edge: String,
    },
    /// Check a monitor set and certify every monitored edge.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        monitors: String,
    },
    /// Lower and upper bounds on dem.
    Bounds {
        #[command(flatten)]
        source: Source,
    },
    /// Structural conditions for dem = 1, 2 or 3 against the direct check.
    Char {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        target: u8,
        /// Sources to check; searched lexicographically on the base graph if omitted.
        #[arg(long)]
        tuple: Option<String>,
        /// Read the dem = 2 neighbor condition exactly as printed.
        #[arg(long)]
        literal: bool,
        /// dem = 3 rules to skip, comma-separated (e.g. `3.3,5`).
        #[arg(long, value_delimiter = ',')]
        disable: Vec<String>,
    },
    /// Write a generated graph as an edge list.
    Gen {
        /// `family:params`, e.g. `doublestar:3,3`.
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn emit<R: Render>(r: &R, inst: &Instance, format: Format) -> Result<()> {
    let out = match format {
        Format::Json => r.json()?,
        Format::Csv => r.csv(inst)?,
        Format::Dot => r.dot(inst),
        Format::Text => r.text(inst),
    };
    std::io::stdout().lock().write_all(out.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Dem { source, method, budget, timing } => {
            let inst = source.load()?;
            let g = &inst.graph;
            let mut results = Vec::new();
            let mut code = 0;
            if method != MethodArg::Greedy {
                match dem_exact(g, budget) {
                    Ok(r) => results.push(r),
                    Err(DemError::BudgetExceeded(partial)) => {
                        eprintln!("node budget exhausted; reporting the greedy set");
                        results.push(*partial);
                        code = EXIT_BUDGET;
                    }
                    Err(e) => return Err(dem_error(e)),
                }
            }
            if method != MethodArg::Exact {
                results.push(dem_greedy(g).map_err(dem_error)?);
            }
            if !timing {
                results.iter_mut().for_each(|r: &mut DemResult| r.stats.millis = None);
            }
            let uncovered = results[0].certificate.uncovered.clone();
            emit(&DemReport { graph: inst.info(), results, uncovered }, &inst, source.format)?;
            Ok(code)
        }
        Command::Em { source, vertex } => {
            let inst = source.load()?;
            let sets = match vertex {
                Some(v) => vec![em_set(&inst.graph, inst.vertex(&v)?)?],
                None => em_sets_all(&inst.graph)?,
            };
            emit(&EmReport { graph: inst.info(), sets }, &inst, source.format)?;
            Ok(0)
        }
        Command::Pset { source, monitors, edge } => {
            let inst = source.load()?;
            let monitors = inst.vertex_list(&monitors)?;
            let e = inst.edge(&edge)?;
            let pair_set = p_set(&inst.graph, &monitors, e)?;
            let zero_reason =
                if pair_set.is_empty() { Some(p_set_size_zero_reason(&inst.graph, &monitors, e)?) } else { None };
            emit(&PsetReport { graph: inst.info(), pair_set, zero_reason }, &inst, source.format)?;
            Ok(0)
        }
        Command::Verify { source, monitors } => {
            let inst = source.load()?;
            let monitors = inst.vertex_list(&monitors)?;
            let certificate = is_monitoring_set(&inst.graph, &monitors)?;
            let report =
                VerifyReport { graph: inst.info(), is_monitoring: certificate.is_monitoring(), monitors, certificate };
            emit(&report, &inst, source.format)?;
            Ok(0)
        }
        Command::Bounds { source } => {
            let inst = source.load()?;
            let bounds = bounds_report(&inst.graph)?;
            emit(&BoundsOut { graph: inst.info(), bounds }, &inst, source.format)?;
            Ok(0)
        }
        Command::Char { source, target, tuple, literal, disable } => {
            let inst = source.load()?;
            let tuple = tuple.map(|t| inst.vertex_list_ordered(&t)).transpose()?;
            let disabled: BTreeSet<String> = disable.into_iter().collect();
            let reading = if literal { Dem2Reading::Literal } else { Dem2Reading::Corrected };
            let report = characterize(&inst.graph, target, tuple, reading, &disabled)?;
            emit(&CharReport { graph: inst.info(), target, report }, &inst, source.format)?;
            Ok(0)
        }
        Command::Gen { spec, seed, format } => {
            let inst = Instance::from_spec(&spec, seed)?;
            if let Format::Text = format {
                std::io::stdout().lock().write_all(GenReport::edge_list(&inst).as_bytes())?;
            } else {
                emit(&GenReport { graph: inst.info(), edges: inst.graph.edges().to_vec() }, &inst, format)?;
            }
            Ok(0)
        }
    }
}

/// Condition report for one tuple. Without an explicit tuple, the first
/// base-graph tuple in lexicographic order is taken among those passing both
/// the conditions and the direct check, else the conditions only, else the
/// direct check only, else any.
fn characterize(
    g: &Graph,
    target: u8,
    tuple: Option<Vec<Vertex>>,
    reading: Dem2Reading,
    disabled: &BTreeSet<String>,
) -> Result<ConditionReport> {
    g.require_connected()?;
    let k = target as usize;
    if let Some(t) = &tuple {
        if t.len() != k {
            bail!(Error::BadParameter(format!("--tuple needs {k} vertices, got {}", t.len())));
        }
    }
    if target == 1 {
        let x = match tuple {
            Some(t) => t[0],
            None => g
                .vertices()
                .find(|&x| is_monitoring_set(g, &[x]).is_ok_and(|c| c.is_monitoring()))
                .unwrap_or(0),
        };
        let direct_check = is_monitoring_set(g, &[x])?.is_monitoring();
        let pass = g.is_tree();
        return Ok(ConditionReport {
            tuple: vec![x],
            conditions: vec![ConditionResult { name: "tree".into(), pass, witness: None }],
            direct_check,
            discrepancy: pass != direct_check,
        });
    }

    let base = base_graph(g)?;
    let gb = &base.graph;
    if gb.n() < k {
        bail!(Error::BadParameter(format!("base graph has {} vertices; dem = {k} needs {k} sources", gb.n())));
    }
    let check = |t: &[Vertex]| -> demkit::error::Result<ConditionReport> {
        match t {
            [u, v] => dem2_pair_check_with(gb, *u, *v, reading),
            [u, v, w] => dem3_triple_check_with(gb, [*u, *v, *w], disabled),
            _ => unreachable!("tuples have 2 or 3 entries"),
        }
    };
    let report = match tuple {
        Some(t) => {
            let mapped = t
                .iter()
                .map(|&x| {
                    base.mapping[x].ok_or_else(|| {
                        Error::BadParameter(format!("vertex {x} is pruned from the base graph"))
                    })
                })
                .collect::<demkit::error::Result<Vec<_>>>()?;
            check(&mapped)?
        }
        None => {
            let tuples = tuples(gb.n(), k);
            let reports: Vec<ConditionReport> =
                tuples.par_iter().map(|t| check(t)).collect::<demkit::error::Result<_>>()?;
            // Stable: ties keep lexicographic order.
            let rank = |r: &ConditionReport| match (r.structural_pass(), r.direct_check) {
                (true, true) => 0,
                (true, false) => 1,
                (false, true) => 2,
                (false, false) => 3,
            };
            reports.into_iter().min_by_key(rank).expect("at least one tuple")
        }
    };
    Ok(report.relabel(&base.original))
}

/// Ordered tuples of distinct vertices for 3 sources (the conditions are not
/// symmetric in them), unordered pairs for 2.
fn tuples(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    match k {
        2 => (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v])).collect(),
        _ => (0..n)
            .flat_map(|u| (0..n).flat_map(move |v| (0..n).map(move |w| vec![u, v, w])))
            .filter(|t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2])
            .collect(),
    }
}

/// Unwraps graph errors so the exit code can see them.
fn dem_error(e: DemError) -> anyhow::Error {
    match e {
        DemError::Graph(e) => e.into(),
        other => other.into(),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Disconnected { .. } => EXIT_DISCONNECTED,
                Error::Parse { .. }
                | Error::BadParameter(_)
                | Error::OutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::EdgeNotPresent(_) => EXIT_INPUT,
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("DEMKIT_THREADS").ok().and_then(|t| t.parse::<usize>().ok()) {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
