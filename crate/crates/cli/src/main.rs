use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use degspec::harness::{
    self, comparison_table, scan_phi_mu, standard_checks, verify, Check, CorpusGraph,
    CorpusSource, CorpusSpec, Outcome, VerifyConfig,
};
use degspec::{analyze, graph6, AnalysisConfig, Family, SpectralConfig, DEFAULT_TOL};

mod output;

#[derive(Parser)]
#[command(
    name = "degspec",
    version,
    about = "Spectral radius, Q-index and degree-based bounds for simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write graphs as graph6, one per line.
    Gen(GenArgs),
    /// Per-graph report of every bound with exactness flags.
    Bounds(RunArgs),
    /// Q-index comparison table with a footer of column means.
    Table(RunArgs),
    /// Run the invariant suite; exits nonzero if any check fails.
    Verify(VerifyArgs),
    /// Search the corpus for graphs with n/(n - mu) > phi.
    ScanPhiMu(RunArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// `exhaustive N`, `random N P COUNT`, `edges MIN MAX`, or a named
    /// family such as `star 10`, `kbip 3 4`, `multipartite 3 3 4`.
    #[arg(required = true, num_args = 1..)]
    family: Vec<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only connected graphs (exhaustive mode).
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    irregular_only: bool,
}

/// Corpus selection plus shared numeric flags.
#[derive(Args)]
struct RunArgs {
    /// graph6 file, one graph per line; `-` reads stdin.
    input: Option<PathBuf>,
    /// Every labeled graph on N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Random graphs G(N, P), COUNT of them, from --seed.
    #[arg(long, num_args = 3, value_names = ["N", "P", "COUNT"])]
    random: Option<Vec<String>>,
    /// Connected graphs up to isomorphism with MIN..=MAX edges.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
    edges: Option<Vec<usize>>,
    /// Named family in colon form, e.g. `wheel:10` or `kbip:3:4`; repeatable.
    #[arg(long = "family", value_name = "SPEC")]
    families: Vec<Family>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    connected: bool,
    /// Drop regular graphs (max degree = min degree).
    #[arg(long)]
    irregular_only: bool,
    /// Power-iteration residual tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest order for the exact phi search.
    #[arg(long, default_value_t = degspec::partite::DEFAULT_PHI_LIMIT)]
    max_exact_n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Add a check that is false on most graphs, to exercise failure
    /// reporting.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

impl RunArgs {
    fn spectral(&self) -> Result<SpectralConfig> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            bail!("--tol must be a positive number, got {}", self.tol);
        }
        Ok(SpectralConfig::with_tol(self.tol))
    }

    fn corpus(&self) -> Result<Vec<CorpusGraph>> {
        let chosen = [
            self.input.is_some(),
            self.exhaustive.is_some(),
            self.random.is_some(),
            self.edges.is_some(),
            !self.families.is_empty(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if chosen != 1 {
            bail!("choose exactly one corpus: INPUT, --exhaustive, --random, --edges or --family");
        }
        let source = if let Some(path) = &self.input {
            CorpusSource::Graphs(read_graph6(path)?)
        } else if let Some(n) = self.exhaustive {
            CorpusSource::Exhaustive {
                n,
                connected: self.connected,
            }
        } else if let Some(r) = &self.random {
            random_source(&r[0], &r[1], &r[2], self.seed)?
        } else if let Some(e) = &self.edges {
            CorpusSource::ConnectedByEdges {
                min_m: e[0],
                max_m: e[1],
            }
        } else {
            CorpusSource::Named(self.families.clone())
        };
        let mut graphs = CorpusSpec::new(source)
            .irregular_only(self.irregular_only)
            .materialize()?;
        if self.connected {
            graphs.retain(|c| c.graph.is_connected());
        }
        Ok(graphs)
    }
}

fn random_source(n: &str, p: &str, count: &str, seed: u64) -> Result<CorpusSource> {
    Ok(CorpusSource::Random {
        n: n.parse().with_context(|| format!("bad vertex count `{n}`"))?,
        p: p.parse().with_context(|| format!("bad probability `{p}`"))?,
        count: count.parse().with_context(|| format!("bad count `{count}`"))?,
        seed,
    })
}

fn read_graph6(path: &PathBuf) -> Result<Vec<CorpusGraph>> {
    let (text, label) = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        (s, "stdin".to_string())
    } else {
        let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        (s, path.display().to_string())
    };
    let graphs = graph6::parse_graph6_lines(&text)
        .map_err(|(line, e)| anyhow::anyhow!("{label}:{line}: {e}"))?;
    // Ids are 1-based line numbers among non-blank lines.
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| CorpusGraph::new(format!("{}", i + 1), g))
        .collect())
}

fn gen(args: &GenArgs) -> Result<()> {
    let name = args.family[0].as_str();
    let params: Vec<&str> = args.family[1..].iter().map(String::as_str).collect();
    let source = match (name, params.as_slice()) {
        ("exhaustive", [n]) => CorpusSource::Exhaustive {
            n: n.parse().with_context(|| format!("bad vertex count `{n}`"))?,
            connected: args.connected,
        },
        ("exhaustive", _) => bail!("usage: gen exhaustive N"),
        ("random", [n, p, count]) => random_source(n, p, count, args.seed)?,
        ("edges", [lo, hi]) => CorpusSource::ConnectedByEdges {
            min_m: lo.parse().with_context(|| format!("bad edge count `{lo}`"))?,
            max_m: hi.parse().with_context(|| format!("bad edge count `{hi}`"))?,
        },
        ("edges", _) => bail!("usage: gen edges MIN MAX"),
        _ => CorpusSource::Named(vec![Family::parse(name, &params)?]),
    };
    let mut graphs = CorpusSpec::new(source)
        .irregular_only(args.irregular_only)
        .materialize()?;
    if args.connected {
        graphs.retain(|c| c.graph.is_connected());
    }
    let mut text = String::new();
    for c in &graphs {
        text.push_str(&degspec::write_graph6(&c.graph));
        text.push('\n');
    }
    match &args.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn bounds(args: &RunArgs) -> Result<()> {
    let config = AnalysisConfig {
        spectral: args.spectral()?,
        max_exact_n: args.max_exact_n,
        ..AnalysisConfig::default()
    };
    let corpus = args.corpus()?;
    let reports = corpus
        .iter()
        .map(|c| analyze(&c.id, &c.graph, &config).with_context(|| format!("graph {}", c.id)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => output::bounds_text(&mut out, &reports)?,
        Format::Csv => output::bounds_csv(&mut out, &reports)?,
        Format::Json => output::json(&mut out, "reports", &reports)?,
    }
    Ok(())
}

fn table(args: &RunArgs) -> Result<()> {
    let table = comparison_table(&args.corpus()?, &args.spectral()?)?;
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => output::table_text(&mut out, &table)?,
        Format::Csv => {
            output::table_csv(&mut out, &table)?;
            output::table_summary(&mut io::stderr().lock(), &table)?;
        }
        Format::Json => output::json(&mut out, "table", &table)?,
    }
    Ok(())
}

fn fault_check() -> Check {
    Check {
        name: "injected_fault_mu_below_max_degree_minus_half",
        run: |f, _| {
            let delta = f.ds.max() as f64;
            if f.mu.value <= delta - 0.5 {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("mu = {} > {}", f.mu.value, delta - 0.5))
            }
        },
    }
}

fn run_verify(args: &VerifyArgs) -> Result<bool> {
    let run = &args.run;
    let config = VerifyConfig {
        spectral: run.spectral()?,
        max_exact_n: run.max_exact_n,
        ..VerifyConfig::default()
    };
    let mut checks = standard_checks();
    if args.inject_fault {
        checks.push(fault_check());
    }
    let summary = verify(&run.corpus()?, &checks, &config);
    let mut out = io::stdout().lock();
    match run.format {
        Format::Text => output::verify_text(&mut out, &summary)?,
        Format::Csv => output::verify_csv(&mut out, &summary)?,
        Format::Json => output::json(&mut out, "verify", &summary)?,
    }
    Ok(summary.all_passed())
}

fn scan(args: &RunArgs) -> Result<()> {
    let config = VerifyConfig {
        spectral: args.spectral()?,
        max_exact_n: args.max_exact_n,
        ..VerifyConfig::default()
    };
    let result: harness::PhiMuScan = scan_phi_mu(&args.corpus()?, &config)?;
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => output::scan_text(&mut out, &result)?,
        Format::Csv => output::scan_csv(&mut out, &result)?,
        Format::Json => output::json(&mut out, "scan", &result)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => gen(a).map(|()| true),
        Command::Bounds(a) => bounds(a).map(|()| true),
        Command::Table(a) => table(a).map(|()| true),
        Command::Verify(a) => run_verify(a),
        Command::ScanPhiMu(a) => scan(a).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e)
            if e
                .downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            // Downstream closed early, e.g. `| head`.
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
