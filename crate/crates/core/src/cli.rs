//! `mixlang` command line.
//!
//! Exit status is 0 on success, 1 for runtime or data errors and 2 for
//! usage or configuration errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use indexmap::IndexSet;
use log::info;

use crate::config::PipelineConfig;
use crate::corpus::{load_corpus, load_gold, load_predictions};
use crate::embeddings::{write_manifest, ManifestEntry};
use crate::error::{Error, Result};
use crate::eval::{compare_headlines, evaluate_run, Headline};
use crate::langid::{load_model, save_model, NgramLanguageModel};
use crate::lexicon::{EmbeddedLexicon, SentimentLexicon};
use crate::scorer::{write_jsonl, Pipeline};
use crate::segmenter::segment;
use crate::text_prep::{normalize, tokenize};

/// Environment variable selecting the log level.
pub const LOG_ENV: &str = "MIXLANG_LOG";

#[derive(Debug, Parser)]
#[command(name = "mixlang", version, about = "Sentiment classification of code-switched text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train the token language model from per-language word lists.
    TrainLangid {
        #[arg(long)]
        config: PathBuf,
        /// Defaults to `langid.model` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every (text, language) pair that classification will embed.
    EmitManifest {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Classify a CSV corpus into JSONL records.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Overrides `workers` from the config.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Score predictions against a gold CSV.
    Evaluate {
        #[arg(long)]
        gold: PathBuf,
        #[arg(long)]
        pred: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Percentage-point deltas of accuracy and macro F1 between two reports.
    ReportCompare {
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long)]
        baseline: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BadConfig(_) | Error::BadLanguageTag(_) | Error::MissingLexicon(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or(LOG_ENV, "warn")).try_init();

    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::TrainLangid { config, out } => train_langid(&config, out.as_deref()),
        Command::EmitManifest { config, input, output } => emit_manifest(&config, &input, &output),
        Command::Classify {
            config,
            input,
            output,
            workers,
        } => classify(&config, &input, &output, workers),
        Command::Evaluate { gold, pred, output } => evaluate(&gold, &pred, output.as_deref()),
        Command::ReportCompare {
            candidate,
            baseline,
            output,
        } => report_compare(&candidate, &baseline, output.as_deref()),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn emit(output: Option<&Path>, json: &str) -> Result<()> {
    match output {
        Some(p) => write_file(p, format!("{json}\n").as_bytes()),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{json}").and_then(|()| out.flush()) {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::io(Path::new("<stdout>"), e)),
                _ => Ok(()),
            }
        }
    }
}

fn model_path(config: &PipelineConfig) -> Result<&Path> {
    config
        .model_path
        .as_deref()
        .ok_or_else(|| Error::BadConfig("`langid.model` is not set".into()))
}

fn train_langid(config_path: &Path, out: Option<&Path>) -> Result<()> {
    let config = PipelineConfig::load(config_path)?;
    let out = match out {
        Some(p) => p,
        None => model_path(&config)?,
    };
    let corpus = config.training_corpus()?;
    let model = NgramLanguageModel::train(&corpus, &config.train)?;
    save_model(&model, out)?;
    info!("wrote {} ({} n-grams)", out.display(), model.vocab_size());
    Ok(())
}

/// Every string classification will embed: lexicon words first, then the
/// segments of each text, each `(text, language)` pair exactly once.
pub fn manifest_entries<S: AsRef<str>>(
    model: &NgramLanguageModel,
    lexicons: &[SentimentLexicon],
    texts: impl IntoIterator<Item = S>,
) -> Result<Vec<ManifestEntry>> {
    let mut entries = IndexSet::new();
    for lex in lexicons {
        for word in lex.positive().iter().chain(lex.negative()) {
            entries.insert(ManifestEntry {
                text: word.clone(),
                lang: lex.language().clone(),
            });
        }
    }
    for text in texts {
        let clean = normalize(text.as_ref());
        let tokens = tokenize(&clean);
        let labels = model.label_tokens(&tokens)?;
        for seg in segment(&tokens, &labels)? {
            entries.insert(ManifestEntry {
                text: seg.text,
                lang: seg.language,
            });
        }
    }
    Ok(entries.into_iter().collect())
}

fn emit_manifest(config_path: &Path, input: &Path, output: &Path) -> Result<()> {
    let config = PipelineConfig::load(config_path)?;
    let model = load_model(model_path(&config)?)?;
    let lexicons = config.load_lexicons()?;
    let corpus = load_corpus(input)?;
    let entries = manifest_entries(&model, &lexicons, corpus.iter().map(|r| r.text.as_str()))?;
    let mut buf = Vec::new();
    write_manifest(&entries, &mut buf)?;
    write_file(output, &buf)?;
    info!("wrote {} manifest entries to {}", entries.len(), output.display());
    Ok(())
}

/// Builds the classification pipeline described by `config`.
pub fn build_pipeline(config: &PipelineConfig) -> Result<Pipeline> {
    let model = load_model(model_path(config)?)?;
    for lang in model.languages() {
        if !config.languages.iter().any(|l| &l.language == lang) {
            return Err(Error::MissingLexicon(lang.to_string()));
        }
    }
    let provider = config.build_provider()?;
    let lexicons = config
        .load_lexicons()?
        .into_iter()
        .map(|lex| EmbeddedLexicon::embed(provider.as_ref(), lex))
        .collect::<Result<Vec<_>>>()?;
    Pipeline::new(model, provider, lexicons, config.aggregation)
}

fn classify(config_path: &Path, input: &Path, output: &Path, workers: Option<usize>) -> Result<()> {
    let config = PipelineConfig::load(config_path)?;
    let pipeline = build_pipeline(&config)?;
    let corpus = load_corpus(input)?;
    let raws: Vec<_> = corpus.iter().map(|r| r.raw()).collect();
    let workers = workers.unwrap_or(config.workers).max(1);
    let records = pipeline.classify_batch(&raws, workers).map_err(|(i, e)| {
        Error::parse(input, corpus[i].line, format!("record {:?}: {e}", corpus[i].id))
    })?;
    let mut buf = Vec::new();
    write_jsonl(&records, &mut buf)?;
    write_file(output, &buf)?;
    info!("classified {} records into {}", records.len(), output.display());
    Ok(())
}

fn evaluate(gold: &Path, pred: &Path, output: Option<&Path>) -> Result<()> {
    let gold = load_gold(gold)?;
    let predictions = load_predictions(pred)?;
    let report = evaluate_run(&predictions, &gold)?;
    emit(output, &serde_json::to_string_pretty(&report)?)
}

fn read_headline(path: &Path) -> Result<Headline> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(path, e.line(), e.to_string()))
}

fn report_compare(candidate: &Path, baseline: &Path, output: Option<&Path>) -> Result<()> {
    let deltas = compare_headlines(read_headline(candidate)?, read_headline(baseline)?);
    emit(output, &serde_json::to_string_pretty(&deltas)?)
}
