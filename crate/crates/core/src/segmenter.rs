//! Grouping of labelled tokens into maximal monolingual runs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::langid::{LanguageTag, TokenLabel};

/// A maximal run of same-language tokens covering `start..end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub language: LanguageTag,
    pub start: usize,
    pub end: usize,
    pub text: String,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

/// Partitions `tokens` into segments. Empty input yields no segments.
pub fn segment<S: AsRef<str>>(tokens: &[S], labels: &[TokenLabel]) -> Result<Vec<Segment>> {
    if tokens.len() != labels.len() {
        return Err(Error::LengthMismatch {
            tokens: tokens.len(),
            labels: labels.len(),
        });
    }
    let mut segments = Vec::new();
    let mut start = 0;
    for i in 1..=tokens.len() {
        if i == tokens.len() || labels[i].language != labels[start].language {
            let text = tokens[start..i]
                .iter()
                .map(AsRef::as_ref)
                .collect::<Vec<_>>()
                .join(" ");
            segments.push(Segment {
                language: labels[start].language.clone(),
                start,
                end: i,
                text,
            });
            start = i;
        }
    }
    Ok(segments)
}
