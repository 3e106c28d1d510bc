// Normalizes raw tweets and splits them into tokens.
//
// Run with `cargo run --example normalize_tweets`.

use mixlang::corpus::load_corpus;
use mixlang::text_prep::{normalize, tokenize};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let corpus = load_corpus(std::path::Path::new(DATA).join("tweets.csv").as_path())?;
    for record in &corpus {
        let clean = normalize(&record.text);
        // normalization is idempotent
        assert_eq!(normalize(clean.as_str()), clean);
        println!("{:>3}  {:<45} -> {:?}", record.id, record.text, tokenize(&clean));
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
