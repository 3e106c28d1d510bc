// Hash embeddings, cosine similarity and the JSONL embedding cache.
//
// Run with `cargo run --example hash_embeddings`.

use mixlang::embeddings::EmbeddingCache;
use mixlang::prelude::*;

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let provider = HashProvider::new(64, 0)?;
    let en = LanguageTag::new("en")?;

    let words = ["good", "goodness", "great", "terrible"];
    let vectors: Vec<EmbeddingVector> =
        words.iter().map(|w| provider.embed(w, &en)).collect::<std::result::Result<_, _>>()?;
    for (w, v) in words.iter().zip(&vectors) {
        println!("{w:>9}  cos(good, {w}) = {:+.4}", cosine(&vectors[0], v)?);
    }
    // cosine ignores scale
    assert!((cosine(&vectors[0], &vectors[2].scaled(7.5))? - cosine(&vectors[0], &vectors[2])?).abs() < 1e-12);

    let mut cache = EmbeddingCache::new(provider.dim())?;
    for (w, v) in words.iter().zip(&vectors) {
        cache.insert(*w, en.clone(), v.clone())?;
    }
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("cache.jsonl");
    cache.save(&path)?;
    let reloaded = EmbeddingCache::load(&path)?;
    assert_eq!(reloaded.get("great", &en), Some(&vectors[2]));
    println!("cache round trip: {} vectors of dim {}", reloaded.len(), reloaded.dim());

    let cached = CacheProvider::new(reloaded, None)?;
    match cached.embed("unseen", &en) {
        Err(e) => println!("cache-only lookup of an unseen text: {e}"),
        Ok(_) => unreachable!("not in the cache"),
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
