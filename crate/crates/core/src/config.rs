//! Pipeline configuration file.
//!
//! ```toml
//! languages = ["en", "es"]
//! aggregation = "mean"          # or "max"
//! workers = 4
//!
//! [langid]
//! model = "model.nblm"
//! n_range = [1, 2, 3]
//! alpha = 1.0
//! # priors = [0.5, 0.5]
//!
//! [provider]
//! kind = "hash"                  # or "cache"
//! dim = 64
//! seed = 0
//! # path = "cache.jsonl"         # cache only
//! # hash_fallback = true         # cache only; uses the cache dim and `seed`
//!
//! [lang.en]
//! positive = "lexicons/en_pos.txt"
//! negative = "lexicons/en_neg.txt"
//! train = "train/en.txt"         # optional, defaults to the lexicon words
//! ```
//!
//! Relative paths are resolved against the directory holding the file.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::embeddings::{CacheProvider, EmbeddingCache, EmbeddingProvider, HashProvider};
use crate::error::{Error, Result};
use crate::langid::{training_tokens, LanguageTag, TrainConfig};
use crate::lexicon::SentimentLexicon;
use crate::scorer::Aggregation;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    languages: Vec<String>,
    #[serde(default)]
    aggregation: Aggregation,
    #[serde(default = "default_workers")]
    workers: usize,
    #[serde(default)]
    langid: RawLangid,
    provider: RawProvider,
    #[serde(default)]
    lang: BTreeMap<String, RawLanguage>,
}

fn default_workers() -> usize {
    1
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLangid {
    model: Option<PathBuf>,
    n_range: Option<Vec<usize>>,
    alpha: Option<f64>,
    priors: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProvider {
    kind: String,
    dim: Option<usize>,
    #[serde(default)]
    seed: u64,
    path: Option<PathBuf>,
    #[serde(default)]
    hash_fallback: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLanguage {
    positive: Option<PathBuf>,
    negative: Option<PathBuf>,
    train: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProviderConfig {
    Hash { dim: usize, seed: u64 },
    Cache { path: PathBuf, fallback_seed: Option<u64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LanguageFiles {
    pub language: LanguageTag,
    pub positive: PathBuf,
    pub negative: PathBuf,
    pub train: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub languages: Vec<LanguageFiles>,
    pub train: TrainConfig,
    pub model_path: Option<PathBuf>,
    pub provider: ProviderConfig,
    pub aggregation: Aggregation,
    pub workers: usize,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadConfig(msg.into())
}

impl PipelineConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base).map_err(|e| match e {
            Error::BadConfig(m) => bad(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Parses config text, resolving relative paths against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
        let resolve = |p: PathBuf| if p.is_absolute() { p } else { base.join(p) };

        if raw.languages.len() < 2 {
            return Err(bad("at least two languages must be declared"));
        }
        let mut seen = BTreeSet::new();
        let mut languages = Vec::new();
        for code in &raw.languages {
            let tag = LanguageTag::new(code).map_err(|e| bad(e.to_string()))?;
            if !seen.insert(code.clone()) {
                return Err(bad(format!("language {code} declared twice")));
            }
            let files = raw
                .lang
                .get(code)
                .ok_or_else(|| bad(format!("missing [lang.{code}] section")))?;
            let positive = files
                .positive
                .clone()
                .ok_or_else(|| bad(format!("[lang.{code}] has no positive lexicon path")))?;
            let negative = files
                .negative
                .clone()
                .ok_or_else(|| bad(format!("[lang.{code}] has no negative lexicon path")))?;
            languages.push(LanguageFiles {
                language: tag,
                positive: resolve(positive),
                negative: resolve(negative),
                train: files.train.clone().map(resolve),
            });
        }
        if let Some(extra) = raw.lang.keys().find(|k| !seen.contains(*k)) {
            return Err(bad(format!("[lang.{extra}] is not a declared language")));
        }

        let mut train = TrainConfig::default();
        if let Some(n) = raw.langid.n_range {
            train.n_range = n.into_iter().collect();
        }
        if let Some(a) = raw.langid.alpha {
            train.alpha = a;
        }
        if let Some(p) = raw.langid.priors {
            if p.len() != languages.len() {
                return Err(bad(format!("{} priors for {} languages", p.len(), languages.len())));
            }
            train.priors = Some(p);
        }

        let provider = match raw.provider.kind.as_str() {
            "hash" => {
                let dim = raw.provider.dim.ok_or_else(|| bad("hash provider needs `dim`"))?;
                if dim < 2 {
                    return Err(bad("hash provider `dim` must be at least 2"));
                }
                ProviderConfig::Hash {
                    dim,
                    seed: raw.provider.seed,
                }
            }
            "cache" => ProviderConfig::Cache {
                path: resolve(raw.provider.path.ok_or_else(|| bad("cache provider needs `path`"))?),
                fallback_seed: raw.provider.hash_fallback.then_some(raw.provider.seed),
            },
            other => return Err(bad(format!("unknown provider kind {other:?}, expected hash or cache"))),
        };
        if raw.workers == 0 {
            return Err(bad("`workers` must be at least 1"));
        }

        Ok(PipelineConfig {
            languages,
            train,
            model_path: raw.langid.model.map(resolve),
            provider,
            aggregation: raw.aggregation,
            workers: raw.workers,
        })
    }

    pub fn language_tags(&self) -> Vec<LanguageTag> {
        self.languages.iter().map(|l| l.language.clone()).collect()
    }

    pub fn load_lexicons(&self) -> Result<Vec<SentimentLexicon>> {
        self.languages
            .iter()
            .map(|l| SentimentLexicon::load(&l.positive, &l.negative, l.language.clone()))
            .collect()
    }

    /// Training tokens per language, from the `train` file when given and
    /// from the lexicon words otherwise.
    pub fn training_corpus(&self) -> Result<Vec<(LanguageTag, Vec<String>)>> {
        self.languages
            .iter()
            .map(|l| {
                let tokens = match &l.train {
                    Some(path) => training_tokens(path)?,
                    None => {
                        let lex = SentimentLexicon::load(&l.positive, &l.negative, l.language.clone())?;
                        lex.positive()
                            .iter()
                            .chain(lex.negative())
                            .flat_map(|w| w.split(' '))
                            .map(str::to_string)
                            .collect()
                    }
                };
                Ok((l.language.clone(), tokens))
            })
            .collect()
    }

    pub fn build_provider(&self) -> Result<Box<dyn EmbeddingProvider>> {
        Ok(match &self.provider {
            ProviderConfig::Hash { dim, seed } => Box::new(HashProvider::new(*dim, *seed)?),
            ProviderConfig::Cache { path, fallback_seed } => {
                let cache = EmbeddingCache::load(path)?;
                let fallback = match fallback_seed {
                    Some(seed) => {
                        Some(Box::new(HashProvider::new(cache.dim(), *seed)?) as Box<dyn EmbeddingProvider>)
                    }
                    None => None,
                };
                Box::new(CacheProvider::new(cache, fallback)?)
            }
        })
    }
}
