mod io;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clockfree::cutsets::{clique_atoms, find_clique_cutset, find_star_cutset};
use clockfree::graph::encode_graph6;
use clockfree::harness::{graph6_stream, render_report, run_suite, ReportFormat, SuiteId, SuiteParams};
use clockfree::obstructions::{generate_obstruction, is_t_clean, ObstructionKind};
use clockfree::separations::{central_bag, core_of, extend_bag, family_x, find_small_separator};
use clockfree::treewidth::{decomposition_along_clique_cutsets, exact_treewidth, validate_decomposition};
use clockfree::weights::Weighting;
use clockfree::{find_pattern, Error, Graph, PatternKind, Result};
use serde_json::{json, Value};

use crate::io::{read_graphs, read_one_graph, read_text, render_graph, GraphFormat, Output};

#[derive(Parser)]
#[command(name = "clockfree", version, about = "Clock-free graph tools: pattern detection, cutsets, treewidth and balanced separators")]
struct Cli {
    /// Worker threads for parallel work [default: all cores]
    #[arg(long, global = true, env = "CLOCKFREE_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Where graphs come from and where results go.
#[derive(Args)]
struct Io {
    /// Input file; stdin when absent or `-`
    #[arg(short, long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Input file, as an alternative to --input
    #[arg(value_name = "INPUT", conflicts_with = "input")]
    positional: Option<PathBuf>,

    /// Output file; stdout when absent or `-`
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Input graph format; detected from the content when absent
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

impl Io {
    fn source(&self) -> Option<&Path> {
        self.input.as_deref().or(self.positional.as_deref())
    }

    fn graphs(&self) -> Result<Vec<Graph>> {
        read_graphs(self.source(), self.format)
    }

    fn graph(&self) -> Result<Graph> {
        read_one_graph(self.source(), self.format)
    }

    fn out(&self) -> Output {
        Output::new(self.output.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find a pattern; prints witness JSON or `absent`, exits 1 when found
    Detect {
        /// hole, wheel, clock, t-clock, diamond, paw, seagull, claw, prism,
        /// pyramid, short-pyramid, theta or three-path-config
        #[arg(long)]
        pattern: String,
        /// Distance for `t-clock`
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        io: Io,
    },
    /// Generate an obstruction or three-path configuration
    Generate(GenerateArgs),
    /// Test for induced basic obstructions; exits 1 when one is found
    CleanCheck {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Find a star or clique cutset, or the clique-cutset atom tree
    Cutset {
        #[arg(long, value_enum, default_value = "clique")]
        kind: CutsetKind,
        #[command(flatten)]
        io: Io,
    },
    /// Treewidth, exactly or through clique-cutset atoms
    Treewidth {
        /// Exact dynamic programme over the whole graph
        #[arg(long)]
        exact: bool,
        /// Print the decomposition as JSON as well as the width
        #[arg(long)]
        decomposition: bool,
        #[command(flatten)]
        io: Io,
    },
    /// A (w, 1/2)-balanced separator of a clock-free graph with its trace
    Separator {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Also write the trace to this file
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Central bag, marker paths and moved weighting
    Bag {
        #[command(flatten)]
        weights: WeightsArg,
        #[command(flatten)]
        io: Io,
    },
    /// Run a verification suite; exits 1 when it finds a counterexample
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WeightsArg {
    /// JSON weighting {"vertex": "p/q"}; uniform when absent
    #[arg(long, value_name = "FILE")]
    weights: Option<PathBuf>,
}

impl WeightsArg {
    fn load(&self, n: usize) -> Result<Weighting> {
        match &self.weights {
            Some(p) => Weighting::from_json(&fs::read_to_string(p)?, n),
            None => Weighting::uniform(n),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CutsetKind {
    Star,
    Clique,
    Atoms,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratedKind {
    Complete,
    CompleteBipartite,
    Wall,
    LineOfWall,
    PohoataDavies,
    Prism,
    Pyramid,
    Theta,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: GeneratedKind,
    /// Order of a complete graph
    #[arg(long)]
    n: Option<usize>,
    /// Size of a wall or complete bipartite graph
    #[arg(long)]
    t: Option<usize>,
    /// Subdivisions per wall edge
    #[arg(long, default_value_t = 0)]
    subdivisions: usize,
    /// Tree height of a Pohoata-Davies graph
    #[arg(long)]
    h: Option<usize>,
    /// Three path lengths, e.g. 2,3,3
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<usize>>,
    /// Write the manifest {kind, params, n, m} to this file
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,
    /// Output format; json prints the manifest with the graph6 string
    #[arg(long, value_enum, default_value = "g6")]
    format: GraphFormat,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// S1 to S12
    #[arg(long)]
    suite: String,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    /// Cleanness parameter for the treewidth sweep
    #[arg(long)]
    t: Option<usize>,
    /// Longest path in the short-pyramid suite
    #[arg(long)]
    path_len_max: Option<usize>,
    /// graph6 corpus to use instead of the internal enumeration
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportArg,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Json,
    Csv,
    Text,
}

impl From<ReportArg> for ReportFormat {
    fn from(r: ReportArg) -> Self {
        match r {
            ReportArg::Json => ReportFormat::Json,
            ReportArg::Csv => ReportFormat::Csv,
            ReportArg::Text => ReportFormat::Text,
        }
    }
}

/// Finished normally; `true` means something was found where its absence
/// was asked about.
type Found = bool;

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs --{flag}")))
}

fn detect(pattern: &str, t: Option<usize>, io: &Io) -> Result<Found> {
    let kind: PatternKind = match (pattern, t) {
        ("t-clock", Some(t)) => format!("t-clock:{t}").parse()?,
        ("t-clock", None) => return Err(Error::InvalidParameter("t-clock needs --t".into())),
        (p, _) => p.parse()?,
    };
    let mut out = io.out();
    let mut found = false;
    for g in io.graphs()? {
        match find_pattern(&g, kind)? {
            Some(w) => {
                found = true;
                out.line(serde_json::to_string(&w)?);
            }
            None => out.line("absent"),
        }
    }
    out.finish()?;
    Ok(found)
}

fn generate(a: &GenerateArgs) -> Result<Found> {
    let lengths = || -> Result<[usize; 3]> {
        match need(a.lengths.as_deref(), "lengths", "this generator")? {
            &[x, y, z] => Ok([x, y, z]),
            l => Err(Error::InvalidParameter(format!("--lengths takes three values, got {}", l.len()))),
        }
    };
    let kind = match a.kind {
        GeneratedKind::Complete => ObstructionKind::Complete { n: need(a.n, "n", "complete")? },
        GeneratedKind::CompleteBipartite => ObstructionKind::CompleteBipartite { t: need(a.t, "t", "complete-bipartite")? },
        GeneratedKind::Wall => ObstructionKind::Wall { t: need(a.t, "t", "wall")?, subdivisions: a.subdivisions },
        GeneratedKind::LineOfWall => {
            ObstructionKind::LineOfWall { t: need(a.t, "t", "line-of-wall")?, subdivisions: a.subdivisions }
        }
        GeneratedKind::PohoataDavies => ObstructionKind::PohoataDavies { h: need(a.h, "h", "pohoata-davies")? },
        GeneratedKind::Prism => ObstructionKind::Prism { lengths: lengths()? },
        GeneratedKind::Pyramid => ObstructionKind::Pyramid { lengths: lengths()? },
        GeneratedKind::Theta => ObstructionKind::Theta { lengths: lengths()? },
    };
    let g = generate_obstruction(&kind)?;
    let mut manifest = serde_json::to_value(&kind)?;
    manifest["n"] = json!(g.n());
    manifest["m"] = json!(g.edge_count());
    if let Some(p) = &a.manifest {
        fs::write(p, serde_json::to_string_pretty(&manifest)? + "\n")?;
    }
    let mut out = Output::new(a.output.clone());
    match a.format {
        GraphFormat::Json => {
            manifest["graph6"] = json!(encode_graph6(&g));
            out.line(manifest.to_string());
        }
        f => out.raw(render_graph(&g, f)),
    }
    out.finish()?;
    Ok(false)
}

fn clean_check(t: usize, io: &Io) -> Result<Found> {
    let mut out = io.out();
    let mut dirty = false;
    for g in io.graphs()? {
        let c = is_t_clean(&g, t)?;
        dirty |= !c.clean;
        out.line(serde_json::to_string(&c)?);
    }
    out.finish()?;
    Ok(dirty)
}

fn cutset(kind: CutsetKind, io: &Io) -> Result<Found> {
    let mut out = io.out();
    for g in io.graphs()? {
        let v = match kind {
            CutsetKind::Star => find_star_cutset(&g).map(serde_json::to_value).transpose()?,
            CutsetKind::Clique => find_clique_cutset(&g).map(serde_json::to_value).transpose()?,
            CutsetKind::Atoms => Some(serde_json::to_value(clique_atoms(&g))?),
        };
        out.line(v.map_or_else(|| "absent".to_string(), |v| v.to_string()));
    }
    out.finish()?;
    Ok(false)
}

fn treewidth(exact: bool, decomposition: bool, io: &Io) -> Result<Found> {
    let mut out = io.out();
    for g in io.graphs()? {
        let td = if exact { exact_treewidth(&g)?.1 } else { decomposition_along_clique_cutsets(&g)? };
        let width = validate_decomposition(&g, &td).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
        if decomposition {
            out.line(json!({ "treewidth": width, "decomposition": td }).to_string());
        } else {
            out.line(width.to_string());
        }
    }
    out.finish()?;
    Ok(false)
}

fn separator(weights: &WeightsArg, t: usize, trace_path: Option<&Path>, io: &Io) -> Result<Found> {
    let g = io.graph()?;
    let w = weights.load(g.n())?;
    let (s, trace) = find_small_separator(&g, &w, t)?;
    if let Some(p) = trace_path {
        fs::write(p, serde_json::to_string_pretty(&trace)? + "\n")?;
    }
    let mut out = io.out();
    out.line(serde_json::to_string_pretty(&json!({ "separator": s, "trace": trace }))?);
    out.finish()?;
    Ok(false)
}

fn bag(weights: &WeightsArg, io: &Io) -> Result<Found> {
    let g = io.graph()?;
    let w = weights.load(g.n())?;
    let family = family_x(&g, &w)?;
    let core = core_of(&g, &w, &family)?;
    let bag = extend_bag(&g, &w, central_bag(&g, &w, &core)?)?;
    let w_star: Option<Value> = bag.w_star.as_ref().map(|ws| json!(ws.to_json_map()));
    let report = json!({
        "family_size": family.len(),
        "core": core.iter().map(|p| p.x).collect::<Vec<_>>(),
        "beta": bag.beta,
        "beta_star": bag.beta_star,
        "non_crossing": bag.non_crossing,
        "records": bag.records,
        "unassigned": bag.unassigned,
        "w_star": w_star,
    });
    let mut out = io.out();
    out.line(serde_json::to_string_pretty(&report)?);
    out.finish()?;
    Ok(false)
}

fn verify(a: &VerifyArgs) -> Result<Found> {
    let id: SuiteId = a.suite.parse()?;
    let corpus = match &a.corpus {
        Some(p) => Some(graph6_stream(read_text(Some(p))?.as_bytes()).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    let params = SuiteParams {
        nmax: a.nmax,
        seed: a.seed,
        samples: a.samples,
        t: a.t,
        path_len_max: a.path_len_max,
        corpus,
    };
    let report = run_suite(id, &params)?;
    let mut out = Output::new(a.output.clone());
    out.raw(render_report(&report, a.format.into())?);
    out.finish()?;
    Ok(!report.ok())
}

fn run(cli: Cli) -> Result<Found> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::InvalidParameter(format!("cannot start {jobs} threads: {e}")))?;
    }
    match &cli.command {
        Command::Detect { pattern, t, io } => detect(pattern, *t, io),
        Command::Generate(a) => generate(a),
        Command::CleanCheck { t, io } => clean_check(*t, io),
        Command::Cutset { kind, io } => cutset(*kind, io),
        Command::Treewidth { exact, decomposition, io } => treewidth(*exact, *decomposition, io),
        Command::Separator { weights, t, trace, io } => separator(weights, *t, trace.as_deref(), io),
        Command::Bag { weights, io } => bag(weights, io),
        Command::Verify(a) => verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) if e.is_scale_cap() => {
            eprintln!("clockfree: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("clockfree: {e}");
            ExitCode::from(2)
        }
    }
}
