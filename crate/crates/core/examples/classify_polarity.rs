// Builds the full pipeline from the example config and classifies the
// example tweets, printing per-segment scores.
//
// Run with `cargo run --example classify_polarity`.

use std::path::Path;

use mixlang::cli::build_pipeline;
use mixlang::config::PipelineConfig;
use mixlang::corpus::load_corpus;
use mixlang::langid::{save_model, NgramLanguageModel};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let mut config = PipelineConfig::load(&Path::new(DATA).join("config.toml"))?;
    // train into a scratch directory instead of next to the config
    let dir = tempfile::tempdir()?;
    let model_path = dir.path().join("model.nblm");
    let model = NgramLanguageModel::train(&config.training_corpus()?, &config.train)?;
    save_model(&model, &model_path)?;
    config.model_path = Some(model_path);

    let pipeline = build_pipeline(&config)?;
    let corpus = load_corpus(&Path::new(DATA).join("tweets.csv"))?;
    for record in &corpus {
        let score = pipeline.classify(&record.text)?;
        println!("{} {:<8} pos={:.4} neg={:.4}  {}", record.id, score.label.as_str(), score.pos_total, score.neg_total, record.text);
        for s in &score.segments {
            println!("      [{}] {:<30} pos={:+.4} neg={:+.4}", s.segment.language, s.segment.text, s.pos, s.neg);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
