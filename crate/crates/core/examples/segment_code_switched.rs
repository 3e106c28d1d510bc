// Splits code-switched sentences into maximal same-language segments.
//
// Run with `cargo run --example segment_code_switched`.

use mixlang::prelude::*;

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let (en, es) = (LanguageTag::new("en")?, LanguageTag::new("es")?);
    let model = NgramLanguageModel::train(
        &[
            (en, vec!["the", "movie", "was", "really", "good", "and", "my", "friend"]),
            (es, vec!["la", "pelicula", "fue", "muy", "buena", "y", "mi", "amigo"]),
        ],
        &TrainConfig::default(),
    )?;

    for raw in ["The movie fue muy buena", "mi amigo and my friend!", "really really good"] {
        let clean = normalize(raw);
        let tokens = tokenize(&clean);
        let labels = model.label_tokens(&tokens)?;
        let segments = segment(&tokens, &labels)?;
        assert_eq!(segments.len(), switch_points(&labels).len() + 1);
        let shown: Vec<String> = segments.iter().map(|s| format!("[{}: {}]", s.language, s.text)).collect();
        println!("{raw:<28} {}", shown.join(" "));
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
