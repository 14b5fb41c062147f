//! Argument parsing and command bodies for the `loclu` binary.
//!
//! Every command prints one JSON document (to stdout or `--output`). Field
//! order is fixed and each report echoes the effective configuration, so a
//! run can be repeated from its own output.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::attributes::AttributeMatrix;
use crate::cluster::{most_multimodal_attribute, run_loclu, ColumnDip, Preference};
use crate::dip::{dip_test, DipConfig, DipResult};
use crate::error::{Error, Result};
use crate::graph::PowerIterConfig;
use crate::io;
use crate::measures::{cluster_of, f1, nmi};
use crate::synthgen::{generate, variable_size_spec, SyntheticSpec};

#[derive(Debug, Parser)]
#[command(
    name = "loclu",
    version,
    about = "Seed-driven local clustering on attributed graphs"
)]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find the local cluster around a seed vertex.
    Cluster(ClusterArgs),
    /// Write a planted-partition benchmark instance.
    Generate(GenerateArgs),
    /// Score a detected cluster against a ground-truth cluster.
    Eval(EvalArgs),
    /// Run the dip test on one CSV column.
    Dip(DipArgs),
}

/// Which attributes the cluster must be unimodal in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Designated {
    /// Every attribute column.
    All,
    /// The single attribute with the largest dip over the whole graph.
    Auto,
    /// None; only the graph embedding is swept.
    None,
    List(Vec<usize>),
}

impl FromStr for Designated {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "all" => Ok(Designated::All),
            "auto" => Ok(Designated::Auto),
            "none" | "" => Ok(Designated::None),
            list => list
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| format!("bad attribute index {t:?}: {e}"))
                })
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(Designated::List),
        }
    }
}

impl fmt::Display for Designated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Designated::All => f.write_str("all"),
            Designated::Auto => f.write_str("auto"),
            Designated::None => f.write_str("none"),
            Designated::List(v) => {
                let parts: Vec<String> = v.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl Designated {
    /// Concrete attribute indexes for a matrix.
    pub fn resolve(&self, x: &AttributeMatrix) -> Result<Vec<usize>> {
        Ok(match self {
            Designated::All => (0..x.num_cols()).collect(),
            Designated::Auto => most_multimodal_attribute(x)?.into_iter().collect(),
            Designated::None => Vec::new(),
            Designated::List(v) => v.clone(),
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct DipArgsCommon {
    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Bootstrap replicates for the p-value.
    #[arg(long, default_value_t = 1000)]
    pub bootstrap_b: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ClusterArgs {
    /// Edge-list file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Attribute CSV; without it the graph embedding alone drives the search.
    #[arg(long)]
    pub attrs: Option<PathBuf>,
    /// Ground-truth labels; adds F1 and NMI against the seed's cluster.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    #[arg(long)]
    pub seed_vertex: usize,
    /// `all`, `auto`, `none`, or a comma-separated list of column indexes.
    #[arg(long, default_value = "all")]
    pub designated: Designated,
    #[command(flatten)]
    pub dip: DipArgsCommon,
    /// Power-iteration stopping threshold.
    #[arg(long, default_value_t = 0.001)]
    pub epsilon_hat: f64,
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    /// Directory for graph.txt, attrs.csv, labels.txt and spec.json.
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Comma-separated block sizes (before bisection).
    #[arg(long, default_value = "500,500", conflicts_with = "size_range")]
    pub sizes: String,
    /// Draw `--clusters` block sizes uniformly from `LOW,HIGH`.
    #[arg(long, requires = "clusters")]
    pub size_range: Option<String>,
    #[arg(long)]
    pub clusters: Option<usize>,
    #[arg(long, default_value_t = 0.35)]
    pub p_in: f64,
    #[arg(long, default_value_t = 0.01)]
    pub p_out: f64,
    #[arg(long, default_value_t = 20)]
    pub d: usize,
    #[arg(long, default_value_t = 0.5)]
    pub relevant_ratio: f64,
    /// Keep relevant means of different clusters at least this far apart.
    #[arg(long)]
    pub min_separation: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Detected member ids, one per line.
    #[arg(long)]
    pub detected: PathBuf,
    /// Ground-truth member ids, one per line.
    #[arg(long)]
    pub truth: PathBuf,
    /// Number of vertices in the graph.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct DipArgs {
    /// CSV file (same format as attribute files).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub column: usize,
    #[command(flatten)]
    pub dip: DipArgsCommon,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
}

#[derive(Serialize)]
struct ClusterConfigEcho<'a> {
    graph: &'a Path,
    attrs: Option<&'a Path>,
    labels: Option<&'a Path>,
    seed_vertex: usize,
    designated_mode: String,
    designated: &'a [usize],
    alpha: f64,
    bootstrap_b: usize,
    epsilon_hat: f64,
    max_iter: usize,
    rng_seed: u64,
}

#[derive(Serialize)]
struct Evaluation {
    truth_label: usize,
    f1: f64,
    nmi: f64,
}

#[derive(Serialize)]
struct ClusterReport<'a> {
    config: ClusterConfigEcho<'a>,
    n: usize,
    edges: usize,
    self_loops_dropped: usize,
    duplicates_merged: usize,
    size: usize,
    members: &'a [usize],
    gu: f64,
    au: f64,
    compactness: f64,
    iterations: usize,
    passes: usize,
    sweep_order: &'a [ColumnDip],
    per_attribute_dips: &'a [ColumnDip],
    #[serde(skip_serializing_if = "Option::is_none")]
    evaluation: Option<Evaluation>,
}

fn cmd_cluster(args: &ClusterArgs) -> Result<String> {
    let (graph, report) = io::load_graph(&args.graph)?;
    let n = graph.num_vertices();
    let x = match &args.attrs {
        Some(p) => io::load_attributes(p, Some(n))?.matrix,
        None => AttributeMatrix::empty(n),
    };
    let designated = args.designated.resolve(&x)?;
    let pref = Preference::new(args.seed_vertex, designated);
    let picfg = PowerIterConfig {
        epsilon_hat: args.epsilon_hat,
        max_iter: args.max_iter,
        rng_seed: args.rng_seed,
    };
    let dipcfg = DipConfig {
        alpha: args.dip.alpha,
        bootstrap_b: args.dip.bootstrap_b,
        rng_seed: args.rng_seed,
    };
    let result = run_loclu(&graph, &x, &pref, &picfg, &dipcfg)?;

    let evaluation = match &args.labels {
        Some(p) => {
            let labels = io::load_ids(p)?;
            if labels.len() != n {
                return Err(Error::input(format!(
                    "{}: {} labels for {n} vertices",
                    p.display(),
                    labels.len()
                )));
            }
            let truth = cluster_of(&labels, args.seed_vertex);
            Some(Evaluation {
                truth_label: labels[args.seed_vertex],
                f1: f1(&result.members, &truth)?,
                nmi: nmi(&result.members, &truth, n)?,
            })
        }
        None => None,
    };

    let out = ClusterReport {
        config: ClusterConfigEcho {
            graph: &args.graph,
            attrs: args.attrs.as_deref(),
            labels: args.labels.as_deref(),
            seed_vertex: args.seed_vertex,
            designated_mode: args.designated.to_string(),
            designated: &pref.designated,
            alpha: dipcfg.alpha,
            bootstrap_b: dipcfg.bootstrap_b,
            epsilon_hat: picfg.epsilon_hat,
            max_iter: picfg.max_iter,
            rng_seed: args.rng_seed,
        },
        n,
        edges: graph.num_edges(),
        self_loops_dropped: report.self_loops_dropped,
        duplicates_merged: report.duplicates_merged,
        size: result.members.len(),
        members: &result.members,
        gu: result.gu,
        au: result.au,
        compactness: result.compactness,
        iterations: result.embedding.iterations,
        passes: result.passes,
        sweep_order: &result.sweep_order,
        per_attribute_dips: &result.per_attribute_dips,
        evaluation,
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Error::input(format!("bad {what} {t:?}: {e}")))
        })
        .collect()
}

#[derive(Serialize)]
struct GenerateReport<'a> {
    spec: &'a SyntheticSpec,
    n: usize,
    edges: usize,
    clusters: usize,
    graph: PathBuf,
    attrs: PathBuf,
    labels: PathBuf,
}

fn cmd_generate(args: &GenerateArgs) -> Result<String> {
    let base = match (&args.size_range, args.clusters) {
        (Some(range), Some(k)) => {
            let [lo, hi] = parse_list::<usize>(range, "size")?[..] else {
                return Err(Error::input("--size-range expects LOW,HIGH"));
            };
            variable_size_spec(lo, hi, k, args.rng_seed)?
        }
        _ => SyntheticSpec {
            cluster_sizes: parse_list(&args.sizes, "size")?,
            ..SyntheticSpec::default()
        },
    };
    let spec = SyntheticSpec {
        p_in: args.p_in,
        p_out: args.p_out,
        d: args.d,
        relevant_ratio: args.relevant_ratio,
        min_mean_separation: args.min_separation,
        rng_seed: args.rng_seed,
        ..base
    };
    let inst = generate(&spec)?;

    std::fs::create_dir_all(&args.out_dir).map_err(|source| Error::Io {
        path: args.out_dir.display().to_string(),
        source,
    })?;
    let graph = args.out_dir.join("graph.txt");
    let attrs = args.out_dir.join("attrs.csv");
    let labels = args.out_dir.join("labels.txt");
    io::write_graph(&graph, &inst.graph)?;
    io::write_attributes(&attrs, &inst.x)?;
    io::write_ids(&labels, &inst.truth)?;
    let spec_path = args.out_dir.join("spec.json");
    std::fs::write(&spec_path, serde_json::to_string_pretty(&spec)?).map_err(|source| {
        Error::Io {
            path: spec_path.display().to_string(),
            source,
        }
    })?;

    let out = GenerateReport {
        spec: &spec,
        n: inst.graph.num_vertices(),
        edges: inst.graph.num_edges(),
        clusters: spec.num_clusters(),
        graph,
        attrs,
        labels,
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

#[derive(Serialize)]
struct EvalReport<'a> {
    detected: &'a Path,
    truth: &'a Path,
    n: usize,
    f1: f64,
    nmi: f64,
}

fn cmd_eval(args: &EvalArgs) -> Result<String> {
    let detected = io::load_ids(&args.detected)?;
    let truth = io::load_ids(&args.truth)?;
    let out = EvalReport {
        detected: &args.detected,
        truth: &args.truth,
        n: args.n,
        f1: f1(&detected, &truth)?,
        nmi: nmi(&detected, &truth, args.n)?,
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

#[derive(Serialize)]
struct DipReport<'a> {
    input: &'a Path,
    column: usize,
    column_name: &'a str,
    alpha: f64,
    bootstrap_b: usize,
    rng_seed: u64,
    n: usize,
    result: DipResult,
    unimodal: bool,
}

fn cmd_dip(args: &DipArgs) -> Result<String> {
    let loaded = io::load_attributes(&args.input, None)?;
    if args.column >= loaded.matrix.num_cols() {
        return Err(Error::input(format!(
            "column {} out of range ({} columns)",
            args.column,
            loaded.matrix.num_cols()
        )));
    }
    let cfg = DipConfig {
        alpha: args.dip.alpha,
        bootstrap_b: args.dip.bootstrap_b,
        rng_seed: args.rng_seed,
    };
    let values = loaded.matrix.column(args.column);
    let result = dip_test(&values, &cfg)?;
    let out = DipReport {
        input: &args.input,
        column: args.column,
        column_name: &loaded.names[args.column],
        alpha: cfg.alpha,
        bootstrap_b: cfg.bootstrap_b,
        rng_seed: cfg.rng_seed,
        n: values.len(),
        unimodal: result.is_unimodal(cfg.alpha),
        result,
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

/// Runs a parsed command and returns its JSON report.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Cluster(a) => cmd_cluster(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Dip(a) => cmd_dip(a),
    }
}

/// Parses `args`, runs the command and writes the report. Exit status is 0
/// on success, 1 for bad input (including bad flags) and 2 otherwise.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let written = execute(&cli).and_then(|text| match &cli.output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    });
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
