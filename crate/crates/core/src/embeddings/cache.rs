//! Embedding cache and manifest files.
//!
//! Both are newline-delimited JSON. A cache record is
//! `{"text":..,"lang":..,"dim":..,"vec":[..]}`; a manifest record is
//! `{"text":..,"lang":..}`. Line order carries no meaning.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::langid::LanguageTag;

use super::{EmbeddingProvider, EmbeddingVector};

#[derive(Serialize)]
struct CacheRecordOut<'a> {
    text: &'a str,
    lang: &'a str,
    dim: usize,
    vec: &'a [f64],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CacheRecordIn {
    text: String,
    lang: String,
    dim: usize,
    vec: Vec<f64>,
}

/// A `(text, language)` pair that needs an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub text: String,
    pub lang: LanguageTag,
}

/// In-memory mapping from `(text, language)` to a vector of fixed dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingCache {
    dim: usize,
    entries: HashMap<LanguageTag, HashMap<String, EmbeddingVector>>,
}

impl EmbeddingCache {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadConfig("cache dimension must be positive".into()));
        }
        Ok(EmbeddingCache {
            dim,
            entries: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Inserts or replaces the vector for `(text, lang)`.
    pub fn insert(&mut self, text: impl Into<String>, lang: LanguageTag, vec: EmbeddingVector) -> Result<()> {
        if vec.dim() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: vec.dim(),
            });
        }
        self.entries.entry(lang).or_default().insert(text.into(), vec);
        Ok(())
    }

    /// `None` signals a miss.
    pub fn get(&self, text: &str, lang: &LanguageTag) -> Option<&EmbeddingVector> {
        self.entries.get(lang)?.get(text)
    }

    /// Entries sorted by language, then text.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &LanguageTag, &EmbeddingVector)> {
        let mut all: Vec<_> = self
            .entries
            .iter()
            .flat_map(|(lang, m)| m.iter().map(move |(t, v)| (t.as_str(), lang, v)))
            .collect();
        all.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        all.into_iter()
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        for (text, lang, vec) in self.iter() {
            let rec = CacheRecordOut {
                text,
                lang: lang.as_str(),
                dim: vec.dim(),
                vec: vec.components(),
            };
            serde_json::to_writer(&mut out, &rec)?;
            out.write_all(b"\n").map_err(|e| Error::io("<cache>", e))?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        fs::write(path, buf).map_err(|e| Error::io(path, e))
    }

    /// Parses a cache stream. Later records for the same key replace earlier
    /// ones. Blank lines are skipped; a stream with no records is an error
    /// because its dimension is unknown.
    pub fn read_from<R: Read>(input: R, path: &Path) -> Result<Self> {
        let mut cache: Option<EmbeddingCache> = None;
        for (i, line) in BufReader::new(input).lines().enumerate() {
            let n = i + 1;
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: CacheRecordIn =
                serde_json::from_str(&line).map_err(|e| Error::parse(path, n, e.to_string()))?;
            if rec.vec.len() != rec.dim {
                return Err(Error::parse(
                    path,
                    n,
                    format!("declared dim {} but vector has {} entries", rec.dim, rec.vec.len()),
                ));
            }
            let lang = LanguageTag::new(&rec.lang).map_err(|e| Error::parse(path, n, e.to_string()))?;
            let vec = EmbeddingVector::new(rec.vec).map_err(|e| Error::parse(path, n, e.to_string()))?;
            let cache = match &mut cache {
                Some(c) => c,
                None => cache.insert(EmbeddingCache::new(rec.dim)?),
            };
            cache.insert(rec.text, lang, vec)?;
        }
        cache.ok_or_else(|| Error::parse(path, 0, "cache file has no records"))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read_from(file, path)
    }
}

pub fn write_manifest<'a, W: Write>(
    entries: impl IntoIterator<Item = &'a ManifestEntry>,
    mut out: W,
) -> Result<()> {
    for entry in entries {
        serde_json::to_writer(&mut out, entry)?;
        out.write_all(b"\n").map_err(|e| Error::io("<manifest>", e))?;
    }
    Ok(())
}

pub fn read_manifest<R: Read>(input: R, path: &Path) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let entry = serde_json::from_str(&line).map_err(|e| Error::parse(path, i + 1, e.to_string()))?;
        entries.push(entry);
    }
    Ok(entries)
}

/// Serves vectors from an [`EmbeddingCache`], optionally delegating misses
/// to a fallback provider of the same dimension.
pub struct CacheProvider {
    cache: EmbeddingCache,
    fallback: Option<Box<dyn EmbeddingProvider>>,
}

impl CacheProvider {
    pub fn new(cache: EmbeddingCache, fallback: Option<Box<dyn EmbeddingProvider>>) -> Result<Self> {
        if let Some(f) = &fallback {
            if f.dim() != cache.dim() {
                return Err(Error::DimMismatch {
                    expected: cache.dim(),
                    found: f.dim(),
                });
            }
        }
        Ok(CacheProvider { cache, fallback })
    }

    pub fn cache(&self) -> &EmbeddingCache {
        &self.cache
    }
}

impl EmbeddingProvider for CacheProvider {
    fn name(&self) -> &str {
        "cache"
    }

    fn dim(&self) -> usize {
        self.cache.dim()
    }

    fn embed(&self, text: &str, lang: &LanguageTag) -> Result<EmbeddingVector> {
        if let Some(v) = self.cache.get(text, lang) {
            return Ok(v.clone());
        }
        match &self.fallback {
            Some(f) => f.embed(text, lang),
            None => Err(Error::CacheMiss {
                text: text.to_string(),
                lang: lang.to_string(),
            }),
        }
    }
}
