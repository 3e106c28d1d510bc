//! Per-language positive/negative sentiment word lists and their embeddings.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use log::warn;

use crate::embeddings::{EmbeddingProvider, EmbeddingVector};
use crate::error::{Error, LexiconSide, Result};
use crate::langid::LanguageTag;
use crate::text_prep::normalize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentimentLexicon {
    language: LanguageTag,
    positive: Vec<String>,
    negative: Vec<String>,
}

/// Lowercases, drops blanks and `#` comments, dedupes keeping the first
/// occurrence, and rejects entries normalization would alter.
fn clean_words<I, S>(lines: I, side: LexiconSide, lang: &LanguageTag) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut seen = HashSet::new();
    let mut words = Vec::new();
    let mut rejected = Vec::new();
    for line in lines {
        let line = line.as_ref().trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word = line.to_lowercase();
        if normalize(&word).as_str() != word {
            rejected.push(word);
            continue;
        }
        if seen.insert(word.clone()) {
            words.push(word);
        }
    }
    if !rejected.is_empty() {
        warn!("{lang} {side} lexicon: rejected {} entries not in normalized form: {rejected:?}", rejected.len());
    }
    words
}

impl SentimentLexicon {
    pub fn new<I, J, S, T>(language: LanguageTag, positive: I, negative: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let positive = clean_words(positive, LexiconSide::Positive, &language);
        if positive.is_empty() {
            return Err(Error::EmptyLexicon(Some(LexiconSide::Positive)));
        }
        let negative = clean_words(negative, LexiconSide::Negative, &language);
        if negative.is_empty() {
            return Err(Error::EmptyLexicon(Some(LexiconSide::Negative)));
        }
        Ok(SentimentLexicon {
            language,
            positive,
            negative,
        })
    }

    /// Reads one word per line from each file. LF and CRLF are accepted.
    pub fn load(positive_path: &Path, negative_path: &Path, language: LanguageTag) -> Result<Self> {
        let pos = fs::read_to_string(positive_path).map_err(|e| Error::io(positive_path, e))?;
        let neg = fs::read_to_string(negative_path).map_err(|e| Error::io(negative_path, e))?;
        SentimentLexicon::new(language, pos.lines(), neg.lines())
    }

    pub fn language(&self) -> &LanguageTag {
        &self.language
    }

    pub fn positive(&self) -> &[String] {
        &self.positive
    }

    pub fn negative(&self) -> &[String] {
        &self.negative
    }

    pub fn words(&self, side: LexiconSide) -> &[String] {
        match side {
            LexiconSide::Positive => &self.positive,
            LexiconSide::Negative => &self.negative,
        }
    }
}

/// A lexicon with one vector per word, aligned index-wise.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedLexicon {
    lexicon: SentimentLexicon,
    positive_vecs: Vec<EmbeddingVector>,
    negative_vecs: Vec<EmbeddingVector>,
}

impl EmbeddedLexicon {
    pub fn embed<P: EmbeddingProvider + ?Sized>(provider: &P, lexicon: SentimentLexicon) -> Result<Self> {
        let embed_all = |words: &[String]| -> Result<Vec<EmbeddingVector>> {
            words
                .iter()
                .map(|w| {
                    let v = provider.embed(w, &lexicon.language).and_then(|v| {
                        if v.dim() == provider.dim() {
                            Ok(v)
                        } else {
                            Err(Error::DimMismatch {
                                expected: provider.dim(),
                                found: v.dim(),
                            })
                        }
                    });
                    v.map_err(|e| Error::LexiconWord {
                        word: w.clone(),
                        source: Box::new(e),
                    })
                })
                .collect()
        };
        let positive_vecs = embed_all(&lexicon.positive)?;
        let negative_vecs = embed_all(&lexicon.negative)?;
        Ok(EmbeddedLexicon {
            lexicon,
            positive_vecs,
            negative_vecs,
        })
    }

    pub fn lexicon(&self) -> &SentimentLexicon {
        &self.lexicon
    }

    pub fn language(&self) -> &LanguageTag {
        &self.lexicon.language
    }

    pub fn dim(&self) -> usize {
        self.positive_vecs[0].dim()
    }

    pub fn vectors(&self, side: LexiconSide) -> &[EmbeddingVector] {
        match side {
            LexiconSide::Positive => &self.positive_vecs,
            LexiconSide::Negative => &self.negative_vecs,
        }
    }
}
