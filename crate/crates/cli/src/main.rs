use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ucir_core::graph6::{write_corpus, ReadMode};
use ucir_core::harness::{convergence_table, run_campaign, scan_corpus, Campaign, CampaignConfig};
use ucir_core::{categorical_power, categorical_product, family, read_corpus, Family, Graph, VertexCap};

/// Exact independence-ratio invariants of graphs and their categorical
/// powers. Inputs and outputs are graph6 files, one graph per line; `-`
/// stands for stdin or stdout.
#[derive(Parser)]
#[command(name = "ucir", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report (CSV) for every graph in a corpus.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Abort on the first malformed line instead of skipping it.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Categorical product of every left graph with every right graph.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// K-th categorical power of every graph.
    Power {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Run a verification campaign over a corpus.
    Verify(VerifyArgs),
    /// Exact i(G^k) for k = 1..=K next to the limit A(G).
    Converge {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short, default_value_t = CampaignConfig::default().power_depth)]
        k: usize,
    },
    /// List the built-in families or write one as graph6.
    Families {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        /// Family name followed by its parameters.
        #[arg(long, num_args = 1.., value_name = "NAME PARAMS")]
        emit: Option<Vec<String>>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// weak, strong, question1, union, zhu or fpm-oracle.
    campaign: Campaign,
    #[arg(long = "in")]
    input: PathBuf,
    /// Number of sampled pairs; every pair when omitted.
    #[arg(long)]
    pairs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    fail_fast: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

fn open_output(path: &Path) -> Result<Box<dyn Write>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufWriter::new(io::stdout())));
    }
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(Box::new(BufWriter::new(file)))
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    read_corpus(open_input(path)?, ReadMode::FailFast)
        .map(|e| e.map(|e| e.graph))
        .collect::<ucir_core::Result<_>>()
        .with_context(|| format!("reading {}", path.display()))
}

fn write_graphs<'a>(path: &Path, graphs: impl IntoIterator<Item = &'a Graph>) -> Result<()> {
    let mut out = open_output(path)?;
    write_corpus(&mut out, graphs)?;
    out.flush()?;
    Ok(())
}

fn run(command: Command) -> Result<u8> {
    let cap = VertexCap::from_env();
    match command {
        Command::Compute { input, out, fail_fast } => {
            let config = CampaignConfig { fail_fast, vertex_cap: cap, ..CampaignConfig::default() };
            let report = scan_corpus(open_input(&input)?, &config)
                .with_context(|| format!("reading {}", input.display()))?;
            for (line, err) in &report.skipped_lines {
                eprintln!("warning: line {line} skipped: {err}");
            }
            let mut w = open_output(&out)?;
            report.write_csv(&mut w)?;
            w.flush()?;
            for (row, check) in report.failures() {
                eprintln!("line {}: {check}", row.line);
            }
            eprintln!("{}", report.summary);
            Ok(report.summary.exit_code() as u8)
        }
        Command::Product { left, right, out } => {
            let (gs, hs) = (read_graphs(&left)?, read_graphs(&right)?);
            let mut products = Vec::with_capacity(gs.len() * hs.len());
            for g in &gs {
                for h in &hs {
                    products.push(categorical_product(g, h, cap)?);
                }
            }
            write_graphs(&out, &products)?;
            Ok(0)
        }
        Command::Power { input, k, out } => {
            let powers = read_graphs(&input)?
                .iter()
                .map(|g| categorical_power(g, k, cap))
                .collect::<ucir_core::Result<Vec<_>>>()?;
            write_graphs(&out, &powers)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let graphs = read_graphs(&args.input)?;
            let config = CampaignConfig {
                seed: args.seed,
                pair_samples: args.pairs,
                fail_fast: args.fail_fast,
                vertex_cap: cap,
                ..CampaignConfig::default()
            };
            let report = run_campaign(args.campaign, &graphs, &config)?;
            for (idx, result) in report.results.iter().filter(|(_, r)| r.failed()) {
                let graphs: Vec<String> = idx.iter().map(|i| format!("#{i}")).collect();
                println!("{} {result}", graphs.join(","));
            }
            println!("{}: {}", args.campaign, report.summary);
            Ok(report.summary.exit_code() as u8)
        }
        Command::Converge { input, k } => {
            let mut failed = false;
            for (idx, g) in read_graphs(&input)?.iter().enumerate() {
                let table = convergence_table(g, k, cap)?;
                let result = table.result(g);
                println!("#{idx} {} A = {}", ucir_core::encode_graph6(g), table.ultimate);
                for (k, i) in &table.rows {
                    println!("  k={k} i={i}");
                }
                println!("  {result}");
                failed |= result.failed();
            }
            Ok(failed as u8)
        }
        Command::Families { list, emit, out } => {
            if let Some(spec) = emit {
                let (name, params) = spec.split_first().expect("clap requires one value");
                let which: Family = name.parse()?;
                let params = params
                    .iter()
                    .map(|p| p.parse::<usize>().with_context(|| format!("bad parameter `{p}`")))
                    .collect::<Result<Vec<_>>>()?;
                write_graphs(&out, [&family(which, &params)?])?;
            } else if list {
                for f in Family::ALL {
                    println!("{:<22} {}", f.name(), f.params_help());
                }
            } else {
                bail!("families needs --list or --emit");
            }
            Ok(0)
        }
    }
}
