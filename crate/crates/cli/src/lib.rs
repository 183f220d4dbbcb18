//! Command-line front end: generation, twin analysis, verification, exact
//! solving and theorem certification.
//!
//! Vertices are addressed by label only; identifiers never appear in output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use resolvnet_core::generators::{Classical, Family};
use resolvnet_core::theorems::{self, SCHEMA_VERSION};
use resolvnet_core::{
    all_pairs_distances, is_k_resolving, kappa, solve_k_metric_dimension, twin_partition,
    DistinguisherTable, Graph, ResolveError, TheoremError, TwinKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "resolvnet", version, about = "Fault-tolerant resolvability of interconnection networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph family: bf, benes, sl, hn, path, cycle, kn, kst, ks-plus-empty,
    /// ks-plus-k1kt, random.
    #[arg(required_unless_present = "graph")]
    pub family: Option<String>,
    /// Family parameters.
    pub params: Vec<u32>,
    /// Read the graph from an edge-list file instead.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Seed for the random family.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as an edge list.
    Gen(GraphSource),
    /// List twin classes.
    Twins(GraphSource),
    /// Verify that a vertex set (one label per line) is k-resolving.
    Check {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        set: PathBuf,
    },
    /// Exact k-metric dimension.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Search-node limit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Largest k for which a k-resolving set exists.
    Kappa(GraphSource),
    /// Certify the closed-form ft-metric dimension of one network.
    Certify {
        /// bf, benes or sl.
        family: String,
        param: u32,
    },
    /// Certify every network up to the given sizes and compare with earlier bounds.
    Report {
        #[arg(long, default_value_t = 5)]
        max_r: u32,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
}

/// Outcome of a command that did not succeed.
#[derive(Debug)]
enum Failure {
    /// Bad invocation or input; exit 2.
    Usage(String),
    /// Well-formed request whose answer is negative; exit 1.
    Negative,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn family_from_cli(name: &str, params: &[u32], seed: u64) -> Result<Family, Failure> {
    let want = |count: usize| -> Result<(), Failure> {
        if params.len() != count {
            return Err(Failure::Usage(format!(
                "family {name} takes {count} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let fam = match name {
        "bf" => {
            want(1)?;
            Family::Butterfly(params[0])
        }
        "benes" => {
            want(1)?;
            Family::Benes(params[0])
        }
        "sl" => {
            want(1)?;
            Family::Silicate(params[0])
        }
        "hn" => {
            want(1)?;
            Family::Circumcoronene(params[0])
        }
        "path" => {
            want(1)?;
            Family::Classical(Classical::Path(params[0]))
        }
        "cycle" => {
            want(1)?;
            Family::Classical(Classical::Cycle(params[0]))
        }
        "kn" => {
            want(1)?;
            Family::Classical(Classical::Complete(params[0]))
        }
        "kst" => {
            want(2)?;
            Family::Classical(Classical::CompleteBipartite(params[0], params[1]))
        }
        "ks-plus-empty" => {
            want(2)?;
            Family::Classical(Classical::JoinCompleteEmpty(params[0], params[1]))
        }
        "ks-plus-k1kt" => {
            want(2)?;
            Family::Classical(Classical::JoinCompleteK1UnionKt(params[0], params[1]))
        }
        "random" => match params {
            [n] => Family::Random { n: *n, percent: 30, seed },
            [n, percent] => Family::Random {
                n: *n,
                percent: *percent,
                seed,
            },
            _ => return Err(Failure::Usage("family random takes <n> [percent]".into())),
        },
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    Ok(fam)
}

fn load_graph(source: &GraphSource, err: &mut dyn Write) -> Result<Graph, Failure> {
    let g = match (&source.graph, &source.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Graph::parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        (None, Some(name)) => {
            let fam = family_from_cli(name, &source.params, source.seed)?;
            let g = fam.generate()?;
            let below = match fam {
                Family::Butterfly(r) | Family::Benes(r) => r < 3,
                Family::Silicate(n) => n < 2,
                _ => false,
            };
            if below {
                writeln!(err, "warning: {name} parameter below the range the closed forms cover")?;
            }
            g
        }
        (None, None) => return Err(Failure::Usage("no graph given".into())),
    };
    Ok(g)
}

fn distance_table(g: &Graph) -> Result<DistinguisherTable, Failure> {
    let dm = all_pairs_distances(g)?;
    Ok(DistinguisherTable::new(&dm))
}

fn read_set_file(path: &Path, g: &Graph) -> Result<Vec<usize>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let index = g.label_index();
    let mut set = Vec::new();
    for line in text.lines() {
        let label = line.split('#').next().unwrap_or("").trim();
        if label.is_empty() {
            continue;
        }
        let &v = index
            .get(label)
            .ok_or_else(|| Failure::Usage(format!("unknown vertex label {label:?} in {}", path.display())))?;
        set.push(v);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Maps an infeasible-multiplicity error to a labelled message on stderr.
fn resolve_failure(g: &Graph, e: ResolveError, err: &mut dyn Write) -> Failure {
    match e {
        ResolveError::Infeasible { k, x, y, distinguishers } => {
            let _ = writeln!(
                err,
                "infeasible: no {k}-resolving set exists; pair {} / {} has only {distinguishers} distinguishers",
                g.label(x),
                g.label(y)
            );
            Failure::Negative
        }
        ResolveError::SingleVertex => {
            let _ = writeln!(err, "infeasible: {e}");
            Failure::Negative
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn cmd_gen(source: &GraphSource, format: OutputFormat, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    #[derive(Serialize)]
    struct GenJson {
        schema: &'static str,
        order: usize,
        size: usize,
        edges: Vec<[String; 2]>,
    }
    let g = load_graph(source, err)?;
    match format {
        OutputFormat::Text => out.write_all(g.to_edge_list().as_bytes())?,
        OutputFormat::Json => {
            let mut edges: Vec<_> = g.edges().collect();
            edges.sort_unstable_by_key(|&(u, v)| (v, u));
            emit_json(
                out,
                &GenJson {
                    schema: SCHEMA_VERSION,
                    order: g.order(),
                    size: g.size(),
                    edges: edges
                        .into_iter()
                        .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                        .collect(),
                },
            )?
        }
    }
    Ok(())
}

fn cmd_twins(source: &GraphSource, format: OutputFormat, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    #[derive(Serialize)]
    struct ClassJson {
        kind: TwinKind,
        members: Vec<String>,
    }
    #[derive(Serialize)]
    struct TwinsJson {
        schema: &'static str,
        order: usize,
        twin_vertices: usize,
        all_vertices_twins: bool,
        structure_ok: bool,
        classes: Vec<ClassJson>,
    }
    let g = load_graph(source, err)?;
    let p = twin_partition(&g)?;
    let structure = p.check_structure(&g);
    let classes: Vec<ClassJson> = p
        .non_singleton()
        .map(|c| ClassJson {
            kind: c.kind,
            members: labels(&g, &c.members),
        })
        .collect();
    let twin_vertices: usize = classes.iter().map(|c| c.members.len()).sum();
    match format {
        OutputFormat::Text => {
            writeln!(
                out,
                "{} twin classes, {twin_vertices} of {} vertices are twins",
                classes.len(),
                g.order()
            )?;
            for c in &classes {
                let kind = if c.kind == TwinKind::True { "true " } else { "false" };
                writeln!(out, "{kind} {}", c.members.join(" "))?;
            }
            if let Err(e) = &structure {
                writeln!(out, "structure violation: {e}")?;
            }
        }
        OutputFormat::Json => emit_json(
            out,
            &TwinsJson {
                schema: SCHEMA_VERSION,
                order: g.order(),
                twin_vertices,
                all_vertices_twins: twin_vertices == g.order(),
                structure_ok: structure.is_ok(),
                classes,
            },
        )?,
    }
    Ok(())
}

fn cmd_check(
    source: &GraphSource,
    k: usize,
    set_path: &Path,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    #[derive(Serialize)]
    struct CheckJson {
        schema: &'static str,
        k: usize,
        size: usize,
        pass: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        violating_pair: Option<[String; 2]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        covered: Option<usize>,
    }
    let g = load_graph(source, err)?;
    let set = read_set_file(set_path, &g)?;
    let table = distance_table(&g)?;
    let violation = is_k_resolving(&table, &set, k)?;
    match format {
        OutputFormat::Text => match &violation {
            None => writeln!(out, "pass: {} vertices form a {k}-resolving set", set.len())?,
            Some(v) => writeln!(
                out,
                "fail: pair {} / {} has {} distinguishers in the set, needs {k}",
                g.label(v.x),
                g.label(v.y),
                v.covered
            )?,
        },
        OutputFormat::Json => emit_json(
            out,
            &CheckJson {
                schema: SCHEMA_VERSION,
                k,
                size: set.len(),
                pass: violation.is_none(),
                violating_pair: violation.map(|v| [g.label(v.x).to_string(), g.label(v.y).to_string()]),
                covered: violation.map(|v| v.covered),
            },
        )?,
    }
    if violation.is_some() {
        return Err(Failure::Negative);
    }
    Ok(())
}

fn cmd_solve(
    source: &GraphSource,
    k: usize,
    budget: Option<u64>,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    #[derive(Serialize)]
    struct SolveJson {
        schema: &'static str,
        k: usize,
        value: usize,
        witness: Vec<String>,
        forced: Vec<String>,
        nodes_explored: u64,
        complete: bool,
    }
    let g = load_graph(source, err)?;
    let table = distance_table(&g)?;
    if g.order() == 1 && k == 1 {
        writeln!(err, "warning: single-vertex graph; the empty set resolves it vacuously")?;
    }
    let r = solve_k_metric_dimension(&table, k, budget).map_err(|e| resolve_failure(&g, e, err))?;
    if !r.complete {
        writeln!(err, "warning: node budget exhausted; value is an upper bound")?;
    }
    match format {
        OutputFormat::Text => {
            writeln!(
                out,
                "{}-metric dimension: {}{}",
                k,
                r.value,
                if r.complete { "" } else { " (upper bound, search incomplete)" }
            )?;
            writeln!(out, "witness: {}", labels(&g, &r.witness).join(" "))?;
            writeln!(out, "forced: {} vertices", r.forced.len())?;
            writeln!(out, "nodes explored: {}", r.nodes_explored)?;
        }
        OutputFormat::Json => emit_json(
            out,
            &SolveJson {
                schema: SCHEMA_VERSION,
                k: r.k,
                value: r.value,
                witness: labels(&g, &r.witness),
                forced: labels(&g, &r.forced),
                nodes_explored: r.nodes_explored,
                complete: r.complete,
            },
        )?,
    }
    Ok(())
}

fn cmd_kappa(source: &GraphSource, format: OutputFormat, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    #[derive(Serialize)]
    struct KappaJson {
        schema: &'static str,
        kappa: usize,
        weakest_pair: [String; 2],
    }
    let g = load_graph(source, err)?;
    let table = distance_table(&g)?;
    let value = kappa(&table).map_err(|e| resolve_failure(&g, e, err))?;
    let ((x, y), _) = table.weakest_pair().expect("kappa succeeded");
    let pair = [g.label(x).to_string(), g.label(y).to_string()];
    match format {
        OutputFormat::Text => writeln!(out, "kappa = {value} (pair {} / {})", pair[0], pair[1])?,
        OutputFormat::Json => emit_json(
            out,
            &KappaJson {
                schema: SCHEMA_VERSION,
                kappa: value,
                weakest_pair: pair,
            },
        )?,
    }
    Ok(())
}

fn certify_failure(e: TheoremError) -> Failure {
    Failure::Usage(e.to_string())
}

fn cmd_certify(family: &str, param: u32, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let cert = match family {
        "bf" => theorems::certify_butterfly(param),
        "benes" => theorems::certify_benes(param),
        "sl" => theorems::certify_silicate(param),
        other => return Err(Failure::Usage(format!("certify supports bf, benes and sl, not {other:?}"))),
    }
    .map_err(certify_failure)?;
    match format {
        OutputFormat::Text => write!(out, "{cert}")?,
        OutputFormat::Json => emit_json(out, &cert)?,
    }
    if !cert.is_proven() {
        return Err(Failure::Negative);
    }
    Ok(())
}

fn cmd_report(max_r: u32, max_n: u32, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    let report = theorems::certify_all(max_r, max_n).map_err(certify_failure)?;
    match format {
        OutputFormat::Text => write!(out, "{report}")?,
        OutputFormat::Json => emit_json(out, &report)?,
    }
    if report.failed > 0 {
        return Err(Failure::Negative);
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.output;
    let outcome = match &cli.command {
        Command::Gen(source) => cmd_gen(source, format, out, err),
        Command::Twins(source) => cmd_twins(source, format, out, err),
        Command::Check { source, k, set } => cmd_check(source, *k as usize, set, format, out, err),
        Command::Solve { source, k, budget } => cmd_solve(source, *k as usize, *budget, format, out, err),
        Command::Kappa(source) => cmd_kappa(source, format, out, err),
        Command::Certify { family, param } => cmd_certify(family, *param, format, out),
        Command::Report { max_r, max_n } => cmd_report(*max_r, *max_n, format, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Negative) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
