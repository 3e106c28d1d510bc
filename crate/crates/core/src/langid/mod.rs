//! Token-level language identification with a multinomial Naive Bayes model
//! over padded character n-grams, and code-switch point extraction.

mod format;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use format::{load_model, read_model, save_model, write_model, training_tokens};

const BOS: char = '^';
const EOS: char = '$';

/// Two-letter lowercase language code such as `en` or `es`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LanguageTag(String);

impl LanguageTag {
    pub fn new(code: &str) -> Result<Self> {
        if code.len() == 2 && code.bytes().all(|b| b.is_ascii_lowercase()) {
            Ok(LanguageTag(code.to_string()))
        } else {
            Err(Error::BadLanguageTag(code.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for LanguageTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LanguageTag::new(s)
    }
}

impl TryFrom<String> for LanguageTag {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        LanguageTag::new(&s)
    }
}

impl From<LanguageTag> for String {
    fn from(tag: LanguageTag) -> String {
        tag.0
    }
}

impl fmt::Display for LanguageTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Training settings for [`NgramLanguageModel::train`].
#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    /// n-gram lengths to extract; `{1, 2, 3}` by default.
    pub n_range: BTreeSet<usize>,
    /// Laplace smoothing constant, must be positive.
    pub alpha: f64,
    /// Optional prior override, aligned with the declared languages.
    /// When absent, priors are proportional to training token counts.
    pub priors: Option<Vec<f64>>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            n_range: [1, 2, 3].into_iter().collect(),
            alpha: 1.0,
            priors: None,
        }
    }
}

impl TrainConfig {
    pub fn with_n_range(n_range: impl IntoIterator<Item = usize>) -> Self {
        TrainConfig {
            n_range: n_range.into_iter().collect(),
            ..TrainConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() {
            return Err(Error::BadConfig("n-gram range is empty".into()));
        }
        if self.n_range.contains(&0) {
            return Err(Error::BadConfig("n-gram length 0 is not allowed".into()));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::BadConfig(format!(
                "smoothing constant must be positive, got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Character n-grams of `token` for every length in `n_range`, with
/// repetition. Unigrams are taken from the bare token; longer grams from
/// the token wrapped in `^` and `$`.
pub fn char_ngrams(token: &str, n_range: &BTreeSet<usize>) -> Vec<String> {
    let bare: Vec<char> = token.chars().collect();
    let padded: Vec<char> = std::iter::once(BOS)
        .chain(bare.iter().copied())
        .chain(std::iter::once(EOS))
        .collect();
    let mut grams = Vec::new();
    for &n in n_range {
        let chars = if n == 1 { &bare } else { &padded };
        if chars.len() < n {
            continue;
        }
        grams.extend(chars.windows(n).map(|w| w.iter().collect::<String>()));
    }
    grams
}

/// Per-language character n-gram statistics with Laplace smoothing.
///
/// Immutable once built; share freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct NgramLanguageModel {
    languages: Vec<LanguageTag>,
    n_range: BTreeSet<usize>,
    alpha: f64,
    vocab: HashSet<String>,
    counts: Vec<HashMap<String, u64>>,
    totals: Vec<u64>,
    priors: Vec<f64>,
}

/// Language label assigned to one token.
#[derive(Debug, Clone, PartialEq)]
pub struct TokenLabel {
    pub token_index: usize,
    pub language: LanguageTag,
    pub posterior: f64,
}

impl NgramLanguageModel {
    /// Trains on per-language token lists. Declaration order of `corpus`
    /// fixes the language order used for tie-breaking.
    pub fn train<S: AsRef<str>>(
        corpus: &[(LanguageTag, Vec<S>)],
        config: &TrainConfig,
    ) -> Result<Self> {
        config.validate()?;
        if corpus.len() < 2 {
            return Err(Error::BadConfig(format!(
                "at least two languages are required, got {}",
                corpus.len()
            )));
        }
        let mut seen = HashSet::new();
        for (lang, _) in corpus {
            if !seen.insert(lang) {
                return Err(Error::BadConfig(format!("language {lang} declared twice")));
            }
        }

        let mut counts = Vec::with_capacity(corpus.len());
        let mut token_counts = Vec::with_capacity(corpus.len());
        for (lang, tokens) in corpus {
            let mut tally: HashMap<String, u64> = HashMap::new();
            let mut n_tokens = 0usize;
            for token in tokens.iter().map(AsRef::as_ref).filter(|t| !t.is_empty()) {
                n_tokens += 1;
                for gram in char_ngrams(token, &config.n_range) {
                    *tally.entry(gram).or_default() += 1;
                }
            }
            if n_tokens == 0 {
                return Err(Error::EmptyCorpus(lang.to_string()));
            }
            counts.push(tally);
            token_counts.push(n_tokens as f64);
        }

        let priors = match &config.priors {
            Some(p) => p.clone(),
            None => {
                let sum: f64 = token_counts.iter().sum();
                token_counts.iter().map(|c| c / sum).collect()
            }
        };
        let languages = corpus.iter().map(|(l, _)| l.clone()).collect();
        Self::from_parts(languages, config.n_range.clone(), config.alpha, priors, counts)
    }

    pub(crate) fn from_parts(
        languages: Vec<LanguageTag>,
        n_range: BTreeSet<usize>,
        alpha: f64,
        priors: Vec<f64>,
        counts: Vec<HashMap<String, u64>>,
    ) -> Result<Self> {
        TrainConfig {
            n_range: n_range.clone(),
            alpha,
            priors: None,
        }
        .validate()?;
        if priors.len() != languages.len() || counts.len() != languages.len() {
            return Err(Error::BadConfig(format!(
                "{} languages but {} priors",
                languages.len(),
                priors.len()
            )));
        }
        if priors.iter().any(|p| !(*p > 0.0 && p.is_finite())) {
            return Err(Error::BadConfig("priors must be positive".into()));
        }
        let prior_sum: f64 = priors.iter().sum();
        let priors = priors.iter().map(|p| p / prior_sum).collect();

        let vocab: HashSet<String> = counts.iter().flat_map(|c| c.keys().cloned()).collect();
        let totals = counts.iter().map(|c| c.values().sum()).collect();
        Ok(NgramLanguageModel {
            languages,
            n_range,
            alpha,
            vocab,
            counts,
            totals,
            priors,
        })
    }

    pub fn languages(&self) -> &[LanguageTag] {
        &self.languages
    }

    pub fn n_range(&self) -> &BTreeSet<usize> {
        &self.n_range
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    /// Number of distinct n-grams seen in training, excluding the UNK slot.
    pub fn vocab_size(&self) -> usize {
        self.vocab.len()
    }

    pub fn count(&self, lang: usize, gram: &str) -> u64 {
        self.counts[lang].get(gram).copied().unwrap_or(0)
    }

    pub fn total(&self, lang: usize) -> u64 {
        self.totals[lang]
    }

    pub(crate) fn counts(&self) -> &[HashMap<String, u64>] {
        &self.counts
    }

    pub fn language_index(&self, lang: &LanguageTag) -> Option<usize> {
        self.languages.iter().position(|l| l == lang)
    }

    /// Smoothed P(gram | language). Grams outside the vocabulary share the
    /// UNK mass `alpha / (total + alpha * (|vocab| + 1))`.
    pub fn gram_probability(&self, lang: usize, gram: &str) -> f64 {
        let denom = self.totals[lang] as f64 + self.alpha * (self.vocab.len() + 1) as f64;
        (self.count(lang, gram) as f64 + self.alpha) / denom
    }

    /// Posterior distribution over the declared languages for one token,
    /// aligned with [`languages`](Self::languages).
    pub fn token_posterior(&self, token: &str) -> Result<Vec<f64>> {
        if token.is_empty() {
            return Err(Error::EmptyToken);
        }
        let grams = char_ngrams(token, &self.n_range);
        let log_scores: Vec<f64> = (0..self.languages.len())
            .map(|l| {
                grams
                    .iter()
                    .fold(self.priors[l].ln(), |acc, g| acc + self.gram_probability(l, g).ln())
            })
            .collect();
        let max = log_scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = log_scores.iter().map(|s| (s - max).exp()).collect();
        let z: f64 = weights.iter().sum();
        Ok(weights.into_iter().map(|w| w / z).collect())
    }

    /// Labels each token with its most probable language. Ties go to the
    /// language declared first.
    pub fn label_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Vec<TokenLabel>> {
        tokens
            .iter()
            .enumerate()
            .map(|(i, token)| {
                let posterior = self.token_posterior(token.as_ref())?;
                let mut best = 0;
                for (l, p) in posterior.iter().enumerate().skip(1) {
                    if *p > posterior[best] {
                        best = l;
                    }
                }
                Ok(TokenLabel {
                    token_index: i,
                    language: self.languages[best].clone(),
                    posterior: posterior[best],
                })
            })
            .collect()
    }
}

/// Indices where the language label differs from the previous token's.
pub fn switch_points(labels: &[TokenLabel]) -> Vec<usize> {
    labels
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].language != w[1].language)
        .map(|(i, _)| i + 1)
        .collect()
}
