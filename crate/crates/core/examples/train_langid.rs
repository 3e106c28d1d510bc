// Trains the character n-gram language model, saves and reloads it, and
// prints per-token labels and switch points for a code-switched sentence.
//
// Run with `cargo run --example train_langid`.

use std::path::Path;

use mixlang::langid::{load_model, save_model, training_tokens};
use mixlang::prelude::*;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(DATA);
    let corpus = vec![
        (LanguageTag::new("en")?, training_tokens(&data.join("train/en.txt"))?),
        (LanguageTag::new("es")?, training_tokens(&data.join("train/es.txt"))?),
    ];
    let model = NgramLanguageModel::train(&corpus, &TrainConfig::default())?;
    println!("trained on {} n-gram types, priors {:?}", model.vocab_size(), model.priors());

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("model.nblm");
    save_model(&model, &path)?;
    let model = load_model(&path)?;

    let clean = normalize("My amigo was muy feliz today!");
    let tokens = tokenize(&clean);
    let labels = model.label_tokens(&tokens)?;
    for (token, label) in tokens.iter().zip(&labels) {
        println!("{token:>8}  {}  p={:.3}", label.language, label.posterior);
    }
    println!("switch points: {:?}", switch_points(&labels));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
