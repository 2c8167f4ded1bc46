//! Command-line front end: stemming, batch processing, corpus evaluation,
//! and the processor timing model.
//!
//! Exit codes follow a stable contract: 0 on success, 1 when a word yields
//! no root (semantic failure), 2 on usage or configuration errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use rootpipe::io;
use rootpipe::render::{self, OutputFormat};
use rootpipe_core::eval::{evaluate_text, frequency_table};
use rootpipe_core::pipeline::{self, ProcessorMode, ProcessorModel};
use rootpipe_core::stemmer::{extract_root, ExtractOptions};
use rootpipe_core::tokenize;

#[derive(Parser)]
#[command(
    name = "rootpipe",
    version,
    about = "Arabic verb-root extraction with a five-stage processor timing model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the root of a single word
    Stem(StemArgs),
    /// Stem every token of a file, one result line per token
    Batch(BatchArgs),
    /// Measure extraction accuracy over a corpus against a gold root set
    Eval(EvalArgs),
    /// Closed-form timing and cycle-level simulation of the processors
    Simulate(SimulateArgs),
    /// Partition counts of a root lexicon
    LexiconStats(LexiconStatsArgs),
}

#[derive(Args)]
struct StemmingOpts {
    /// Root lexicon file (one root per line, '#' comments)
    #[arg(long, env = "ROOTPIPE_LEXICON", value_name = "PATH")]
    lexicon: PathBuf,
    /// Disable the stage-5 infix repairs
    #[arg(long)]
    no_infix: bool,
    /// Stem-list capacity (the hardware bound is 6)
    #[arg(long, default_value_t = 6)]
    capacity: usize,
    /// Test infix repairs against the full five-letter mnemonic
    #[arg(long)]
    full_infix: bool,
}

impl StemmingOpts {
    fn extract_options(&self, trace: bool) -> anyhow::Result<ExtractOptions> {
        if self.capacity == 0 {
            bail!("--capacity must be at least 1");
        }
        Ok(ExtractOptions {
            infix_processing: !self.no_infix,
            capacity: self.capacity,
            trace,
            full_infix_set: self.full_infix,
        })
    }
}

#[derive(Args)]
struct DisplayOpts {
    /// Render letters as romanized names instead of Arabic
    #[arg(long)]
    latin: bool,
    /// Output style
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Records,
}

impl From<OutputArg> for OutputFormat {
    fn from(v: OutputArg) -> Self {
        match v {
            OutputArg::Text => OutputFormat::Text,
            OutputArg::Records => OutputFormat::Records,
        }
    }
}

#[derive(Args)]
struct StemArgs {
    /// The word to stem
    word: String,
    #[command(flatten)]
    stemming: StemmingOpts,
    #[command(flatten)]
    display: DisplayOpts,
    /// Print the per-stage trace lines
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct BatchArgs {
    /// Input file; every whitespace token is stemmed
    file: PathBuf,
    #[command(flatten)]
    stemming: StemmingOpts,
    #[command(flatten)]
    display: DisplayOpts,
}

#[derive(Args)]
struct EvalArgs {
    /// Corpus file
    corpus: PathBuf,
    /// Gold root set (same format as the lexicon)
    #[arg(long, value_name = "PATH")]
    gold: PathBuf,
    /// Optional word<TAB>root map for token-level accuracy
    #[arg(long, value_name = "PATH")]
    gold_map: Option<PathBuf>,
    /// Reference count table to compare against (requires --actual)
    #[arg(long, value_name = "PATH", requires = "actual")]
    compare: Option<PathBuf>,
    /// Actual count table used as the comparison denominator
    #[arg(long, value_name = "PATH")]
    actual: Option<PathBuf>,
    #[command(flatten)]
    stemming: StemmingOpts,
    #[command(flatten)]
    display: DisplayOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Np,
    P,
    Both,
}

#[derive(Args)]
struct SimulateArgs {
    /// Word count for closed-form timing
    #[arg(short = 'n', long = "words", conflicts_with = "corpus")]
    words: Option<u64>,
    /// Corpus file to stream through the stage model
    corpus: Option<PathBuf>,
    /// Which processor variants to run
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,
    /// Non-pipelined clock frequency in Hz
    #[arg(long = "fmax-np", default_value_t = 10.4e6)]
    fmax_np: f64,
    /// Pipelined clock frequency in Hz
    #[arg(long = "fmax-p", default_value_t = 10.78e6)]
    fmax_p: f64,
    /// LUT count for throughput-to-area ratios
    #[arg(long)]
    luts: Option<u64>,
    /// Logic-register count for throughput-to-area ratios
    #[arg(long)]
    lrs: Option<u64>,
    /// Emit the per-cycle stage-occupancy log (corpus mode)
    #[arg(long)]
    trace: bool,
    /// Root lexicon, required in corpus mode
    #[arg(long, env = "ROOTPIPE_LEXICON", value_name = "PATH")]
    lexicon: Option<PathBuf>,
    #[command(flatten)]
    display: DisplayOpts,
}

#[derive(Args)]
struct LexiconStatsArgs {
    #[arg(long, env = "ROOTPIPE_LEXICON", value_name = "PATH")]
    lexicon: PathBuf,
    #[command(flatten)]
    display: DisplayOpts,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Stem(args) => cmd_stem(args),
        Command::Batch(args) => cmd_batch(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::LexiconStats(args) => cmd_lexicon_stats(args),
    }
}

fn cmd_stem(args: StemArgs) -> anyhow::Result<ExitCode> {
    if args.word.trim().is_empty() {
        bail!("empty word");
    }
    let options = args.stemming.extract_options(args.trace)?;
    let lexicon = io::load_lexicon(&args.stemming.lexicon)?;
    match extract_root(&args.word, &lexicon, &options) {
        Ok(result) => {
            for line in render::render_stem(&result, args.display.latin, args.display.output.into())
            {
                println!("{line}");
            }
            if result.root.is_some() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Err(err) => {
            eprintln!("no root: {err}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_batch(args: BatchArgs) -> anyhow::Result<ExitCode> {
    let options = args.stemming.extract_options(false)?;
    let lexicon = io::load_lexicon(&args.stemming.lexicon)?;
    let text = io::read_corpus(&args.file)?;
    let latin = args.display.latin;

    let (mut extracted, mut not_found, mut errors) = (0usize, 0usize, 0usize);
    let tokens = tokenize(&text);
    for token in &tokens {
        let line = match extract_root(token, &lexicon, &options) {
            Ok(result) => {
                if result.root.is_some() {
                    extracted += 1;
                } else {
                    not_found += 1;
                }
                render::batch_line(token, &Ok(result), latin)
            }
            Err(err) => {
                errors += 1;
                render::batch_line(token, &Err(render::error_code(&err)), latin)
            }
        };
        println!("{line}");
    }
    println!(
        "# tokens={} extracted={extracted} notfound={not_found} errors={errors}",
        tokens.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: EvalArgs) -> anyhow::Result<ExitCode> {
    let options = args.stemming.extract_options(false)?;
    let lexicon = io::load_lexicon(&args.stemming.lexicon)?;
    let gold = io::load_gold_roots(&args.gold)?;
    let gold_map: Option<BTreeMap<String, String>> = args
        .gold_map
        .as_deref()
        .map(|p| io::load_gold_map(std::path::Path::new(p)))
        .transpose()?;
    let text = io::read_corpus(&args.corpus)?;
    let format: OutputFormat = args.display.output.into();

    let report = evaluate_text(&text, &gold, &lexicon, &options, gold_map.as_ref())
        .context("evaluation failed")?;
    for line in render::render_eval(&report, format) {
        println!("{line}");
    }

    let table = frequency_table(&text, &lexicon, &options);
    if format == OutputFormat::Text && !table.is_empty() {
        println!("root frequencies:");
    }
    for line in render::render_frequency(&table, format) {
        println!("{line}");
    }

    if let (Some(compare), Some(actual)) = (args.compare.as_deref(), args.actual.as_deref()) {
        let reference = io::load_counts(compare)?;
        let actual = io::load_counts(actual)?;
        let rows =
            rootpipe_core::eval::compare_reports(&report.per_root_counts, &reference, &actual)
                .context("count comparison failed")?;
        if format == OutputFormat::Text {
            println!("count comparison:");
        }
        for line in render::render_diff_rows(&rows, format) {
            println!("{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn selected_models(args: &SimulateArgs) -> anyhow::Result<Vec<(&'static str, ProcessorModel)>> {
    let np = ProcessorModel::new(ProcessorMode::NonPipelined, args.fmax_np)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let p = ProcessorModel::new(ProcessorMode::Pipelined, args.fmax_p)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(match args.mode {
        ModeArg::Np => vec![("np", np)],
        ModeArg::P => vec![("p", p)],
        ModeArg::Both => vec![("np", np), ("p", p)],
    })
}

fn cmd_simulate(args: SimulateArgs) -> anyhow::Result<ExitCode> {
    let format: OutputFormat = args.display.output.into();
    let models = selected_models(&args)?;

    let mut reports = Vec::new();
    if let Some(corpus) = &args.corpus {
        let lexicon_path = args
            .lexicon
            .as_deref()
            .context("--lexicon is required in corpus mode")?;
        let lexicon = io::load_lexicon(lexicon_path)?;
        let text = io::read_corpus(corpus)?;
        let tokens = tokenize(&text);
        if tokens.is_empty() {
            bail!("corpus has no tokens");
        }
        for (prefix, model) in &models {
            let run = pipeline::simulate_trace(model, &tokens, &lexicon, &Default::default())
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            if args.trace {
                for event in &run.log {
                    match format {
                        OutputFormat::Text => println!("{}", event.render()),
                        OutputFormat::Records => println!("{}", event.render_record()),
                    }
                }
            }
            let extracted = run
                .results
                .iter()
                .filter(|r| r.as_ref().is_ok_and(|x| x.root.is_some()))
                .count();
            for line in render::render_sim_report(prefix, &run.report, format) {
                println!("{line}");
            }
            match format {
                OutputFormat::Text => println!("[{prefix}] roots extracted: {extracted}"),
                OutputFormat::Records => println!("{prefix}_extracted={extracted}"),
            }
            reports.push((*prefix, run.report));
        }
    } else {
        let word_count = match args.words {
            Some(0) => bail!("word count must be at least 1"),
            Some(n) => n,
            None => bail!("supply a word count (-n) or a corpus file"),
        };
        for (prefix, model) in &models {
            let report =
                pipeline::report(model, word_count).map_err(|e| anyhow::anyhow!("{e}"))?;
            for line in render::render_sim_report(prefix, &report, format) {
                println!("{line}");
            }
            reports.push((*prefix, report));
        }
    }

    if let (Some(luts), Some(lrs)) = (args.luts, args.lrs) {
        for (prefix, report) in &reports {
            let area =
                pipeline::area_ratios(report, luts, lrs).map_err(|e| anyhow::anyhow!("{e}"))?;
            for line in render::render_area_report(prefix, &area, format) {
                println!("{line}");
            }
        }
    }

    if reports.len() == 2 {
        let ratio = pipeline::speedup(&reports[1].1, &reports[0].1)
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        match format {
            OutputFormat::Text => println!("speedup (pipelined over non-pipelined): {ratio:.2}"),
            OutputFormat::Records => println!("speedup={ratio}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lexicon_stats(args: LexiconStatsArgs) -> anyhow::Result<ExitCode> {
    let lexicon = io::load_lexicon(&args.lexicon)?;
    let stats = lexicon.stats();
    match OutputFormat::from(args.display.output) {
        OutputFormat::Text => {
            println!("lexicon: {}", lexicon.source());
            println!("bilateral roots:     {}", stats.bilateral);
            println!("trilateral roots:    {}", stats.trilateral);
            println!("quadrilateral roots: {}", stats.quadrilateral);
            println!("total:               {}", stats.total);
        }
        OutputFormat::Records => {
            println!("bilateral={}", stats.bilateral);
            println!("trilateral={}", stats.trilateral);
            println!("quadrilateral={}", stats.quadrilateral);
            println!("total={}", stats.total);
        }
    }
    Ok(ExitCode::SUCCESS)
}
