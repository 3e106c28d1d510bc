//! Polarity classification by embedding similarity.
//!
//! Each monolingual segment is embedded as a whole and compared against the
//! positive and negative lexicon vectors of its own language. Per-lexicon
//! similarities are reduced by [`Aggregation`] (mean by default), summed
//! over segments, and the larger total wins. Ties are `Negative`.

use std::collections::HashMap;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embeddings::{cosine, EmbeddingProvider, EmbeddingVector};
use crate::error::{Error, LexiconSide, Result};
use crate::langid::{LanguageTag, NgramLanguageModel, TokenLabel};
use crate::lexicon::EmbeddedLexicon;
use crate::segmenter::{segment, Segment};
use crate::text_prep::{normalize, tokenize, RawText};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
        }
    }

    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }

    /// `pos > neg` is Positive; everything else, ties included, is Negative.
    pub fn from_totals(pos: f64, neg: f64) -> Polarity {
        if pos > neg {
            Polarity::Positive
        } else {
            Polarity::Negative
        }
    }
}

impl FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "positive" => Ok(Polarity::Positive),
            "negative" => Ok(Polarity::Negative),
            _ => Err(Error::BadConfig(format!("unknown polarity label {s:?}"))),
        }
    }
}

/// How cosine similarities against one lexicon side are reduced.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregation {
    #[default]
    Mean,
    Max,
}

impl FromStr for Aggregation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean" => Ok(Aggregation::Mean),
            "max" => Ok(Aggregation::Max),
            _ => Err(Error::BadConfig(format!("unknown aggregation {s:?}, expected mean or max"))),
        }
    }
}

/// Similarity of one segment vector to a set of lexicon vectors.
pub fn set_similarity(
    segment: &EmbeddingVector,
    lexicon: &[EmbeddingVector],
    aggregation: Aggregation,
) -> Result<f64> {
    if lexicon.is_empty() {
        return Err(Error::EmptyLexicon(None));
    }
    let sims = lexicon
        .iter()
        .map(|w| cosine(segment, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(match aggregation {
        Aggregation::Mean => sims.iter().sum::<f64>() / sims.len() as f64,
        Aggregation::Max => sims.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentScore {
    pub segment: Segment,
    pub pos: f64,
    pub neg: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolarityScore {
    pub pos_total: f64,
    pub neg_total: f64,
    pub label: Polarity,
    pub segments: Vec<SegmentScore>,
    /// Per-token language labels the segmentation was built from.
    pub token_labels: Vec<TokenLabel>,
}

impl PolarityScore {
    pub fn to_record(&self, id: &str) -> ClassificationRecord {
        ClassificationRecord {
            id: id.to_string(),
            label: self.label,
            pos: self.pos_total,
            neg: self.neg_total,
            segments: self
                .segments
                .iter()
                .map(|s| SegmentRecord {
                    lang: s.segment.language.clone(),
                    text: s.segment.text.clone(),
                    pos: s.pos,
                    neg: s.neg,
                })
                .collect(),
        }
    }
}

/// One line of classification output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub id: String,
    pub label: Polarity,
    pub pos: f64,
    pub neg: f64,
    pub segments: Vec<SegmentRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentRecord {
    pub lang: LanguageTag,
    pub text: String,
    pub pos: f64,
    pub neg: f64,
}

pub fn write_jsonl<'a, W: Write>(
    records: impl IntoIterator<Item = &'a ClassificationRecord>,
    mut out: W,
) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n").map_err(|e| Error::io("<output>", e))?;
    }
    Ok(())
}

/// Language model, embedding provider and per-language lexicons bundled
/// for classification. Immutable; `classify` may be called concurrently.
pub struct Pipeline {
    model: NgramLanguageModel,
    provider: Box<dyn EmbeddingProvider>,
    lexicons: HashMap<LanguageTag, EmbeddedLexicon>,
    aggregation: Aggregation,
}

impl Pipeline {
    /// Every language the model can emit needs a lexicon embedded at the
    /// provider's dimension.
    pub fn new(
        model: NgramLanguageModel,
        provider: Box<dyn EmbeddingProvider>,
        lexicons: impl IntoIterator<Item = EmbeddedLexicon>,
        aggregation: Aggregation,
    ) -> Result<Self> {
        let lexicons: HashMap<LanguageTag, EmbeddedLexicon> = lexicons
            .into_iter()
            .map(|l| (l.language().clone(), l))
            .collect();
        for lang in model.languages() {
            let lex = lexicons
                .get(lang)
                .ok_or_else(|| Error::MissingLexicon(lang.to_string()))?;
            if lex.dim() != provider.dim() {
                return Err(Error::DimMismatch {
                    expected: provider.dim(),
                    found: lex.dim(),
                });
            }
        }
        Ok(Pipeline {
            model,
            provider,
            lexicons,
            aggregation,
        })
    }

    pub fn model(&self) -> &NgramLanguageModel {
        &self.model
    }

    pub fn provider(&self) -> &dyn EmbeddingProvider {
        self.provider.as_ref()
    }

    pub fn lexicon(&self, lang: &LanguageTag) -> Option<&EmbeddedLexicon> {
        self.lexicons.get(lang)
    }

    pub fn aggregation(&self) -> Aggregation {
        self.aggregation
    }

    /// Normalizes, tokenizes, labels and segments `text`.
    pub fn segment_text(&self, text: &str) -> Result<(Vec<TokenLabel>, Vec<Segment>)> {
        let clean = normalize(text);
        let tokens = tokenize(&clean);
        let labels = self.model.label_tokens(&tokens)?;
        let segments = segment(&tokens, &labels)?;
        Ok((labels, segments))
    }

    pub fn score_segments(&self, segments: Vec<Segment>) -> Result<Vec<SegmentScore>> {
        segments
            .into_iter()
            .map(|segment| {
                let lex = self
                    .lexicons
                    .get(&segment.language)
                    .ok_or_else(|| Error::MissingLexicon(segment.language.to_string()))?;
                let vec = self.provider.embed(&segment.text, &segment.language)?;
                let pos = set_similarity(&vec, lex.vectors(LexiconSide::Positive), self.aggregation)?;
                let neg = set_similarity(&vec, lex.vectors(LexiconSide::Negative), self.aggregation)?;
                Ok(SegmentScore { segment, pos, neg })
            })
            .collect()
    }

    pub fn classify(&self, text: &str) -> Result<PolarityScore> {
        let (token_labels, segments) = self.segment_text(text)?;
        let segments = self.score_segments(segments)?;
        let pos_total: f64 = segments.iter().map(|s| s.pos).sum();
        let neg_total: f64 = segments.iter().map(|s| s.neg).sum();
        Ok(PolarityScore {
            pos_total,
            neg_total,
            label: Polarity::from_totals(pos_total, neg_total),
            segments,
            token_labels,
        })
    }

    pub fn classify_raw(&self, raw: &RawText) -> Result<ClassificationRecord> {
        Ok(self.classify(&raw.content)?.to_record(&raw.id))
    }

    /// Classifies a batch on up to `workers` threads. Output order always
    /// matches input order; on failure the error of the earliest failing
    /// record is returned along with its index.
    pub fn classify_batch(
        &self,
        inputs: &[RawText],
        workers: usize,
    ) -> std::result::Result<Vec<ClassificationRecord>, (usize, Error)> {
        use rayon::prelude::*;

        let run = || -> Vec<Result<ClassificationRecord>> {
            inputs.par_iter().map(|r| self.classify_raw(r)).collect()
        };
        let results = if workers <= 1 {
            inputs.iter().map(|r| self.classify_raw(r)).collect()
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                Ok(pool) => pool.install(run),
                Err(_) => run(),
            }
        };
        results
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.map_err(|e| (i, e)))
            .collect()
    }
}
