// The exporter handshake: write the manifest of every (text, language)
// pair the classifier will embed, fill a cache for it (here with the hash
// provider standing in for an external model), and classify cache-only.
//
// Run with `cargo run --example manifest_handshake`.

use std::fs;
use std::path::Path;

use mixlang::cli::{build_pipeline, manifest_entries};
use mixlang::config::{PipelineConfig, ProviderConfig};
use mixlang::corpus::load_corpus;
use mixlang::embeddings::{read_manifest, write_manifest, EmbeddingCache};
use mixlang::langid::{save_model, NgramLanguageModel};
use mixlang::prelude::*;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let mut config = PipelineConfig::load(&Path::new(DATA).join("config.toml"))?;
    let model = NgramLanguageModel::train(&config.training_corpus()?, &config.train)?;
    let model_path = dir.path().join("model.nblm");
    save_model(&model, &model_path)?;
    config.model_path = Some(model_path);

    let corpus = load_corpus(&Path::new(DATA).join("tweets.csv"))?;
    let lexicons = config.load_lexicons()?;
    let entries = manifest_entries(&model, &lexicons, corpus.iter().map(|r| r.text.as_str()))?;
    let manifest_path = dir.path().join("manifest.jsonl");
    let mut buf = Vec::new();
    write_manifest(&entries, &mut buf)?;
    fs::write(&manifest_path, &buf)?;
    println!("manifest: {} entries", entries.len());

    // exporter side
    let exporter = HashProvider::new(64, 0)?;
    let mut cache = EmbeddingCache::new(exporter.dim())?;
    for e in read_manifest(fs::File::open(&manifest_path)?, &manifest_path)? {
        let v = exporter.embed(&e.text, &e.lang)?;
        cache.insert(e.text, e.lang, v)?;
    }
    let cache_path = dir.path().join("cache.jsonl");
    cache.save(&cache_path)?;

    let hashed = build_pipeline(&config)?;
    config.provider = ProviderConfig::Cache { path: cache_path, fallback_seed: None };
    let cached = build_pipeline(&config)?;
    for record in &corpus {
        let a = cached.classify(&record.text)?;
        let b = hashed.classify(&record.text)?;
        assert_eq!((a.pos_total, a.neg_total), (b.pos_total, b.neg_total));
        println!("{} {:<8} (cache-only run agrees with direct hashing)", record.id, a.label.as_str());
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
