//! CSV corpora (`id,text[,label]`) and prediction JSONL readers.

use std::collections::HashSet;
use std::fs;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::eval::LabeledExample;
use crate::scorer::{ClassificationRecord, Polarity};
use crate::text_prep::RawText;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusRecord {
    /// 1-based line where the record starts.
    pub line: usize,
    pub id: String,
    pub text: String,
    pub label: Option<Polarity>,
}

impl CorpusRecord {
    pub fn raw(&self) -> RawText {
        RawText::new(self.id.clone(), self.text.clone())
    }
}

/// Reads an RFC 4180 CSV with header `id,text` or `id,text,label`.
/// Ids must be non-empty and unique; labels are case-insensitive.
pub fn read_corpus<R: Read>(input: R, path: &Path) -> Result<Vec<CorpusRecord>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let headers = reader.headers().map_err(csv_err)?.clone();
    let cols: Vec<&str> = headers.iter().map(str::trim).collect();
    let has_label = match cols.as_slice() {
        ["id", "text"] => false,
        ["id", "text", "label"] => true,
        _ => {
            return Err(Error::parse(
                path,
                1,
                format!("expected header id,text[,label], found {}", cols.join(",")),
            ))
        }
    };

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(csv_err)?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let id = row.get(0).unwrap_or_default().to_string();
        if id.is_empty() {
            return Err(Error::parse(path, line, "empty id"));
        }
        if !seen.insert(id.clone()) {
            return Err(Error::parse(path, line, format!("duplicate id {id:?}")));
        }
        let text = row.get(1).unwrap_or_default().to_string();
        let label = match row.get(2).filter(|_| has_label).map(str::trim) {
            None | Some("") => None,
            Some(l) => Some(l.parse::<Polarity>().map_err(|e| Error::parse(path, line, e.to_string()))?),
        };
        out.push(CorpusRecord { line, id, text, label });
    }
    Ok(out)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusRecord>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus(file, path)
}

/// Like [`load_corpus`], but every row must carry a label.
pub fn load_gold(path: &Path) -> Result<Vec<LabeledExample>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let records = read_corpus(file, path)?;
    records
        .into_iter()
        .map(|r| match r.label {
            Some(gold) => Ok(LabeledExample {
                id: r.id,
                text: r.text,
                gold,
            }),
            None => Err(Error::parse(path, r.line, format!("missing label for id {:?}", r.id))),
        })
        .collect()
}

/// Reads classification JSONL, keeping only `(id, label)`.
pub fn read_predictions<R: Read>(input: R, path: &Path) -> Result<Vec<(String, Polarity)>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(input).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: ClassificationRecord =
            serde_json::from_str(&line).map_err(|e| Error::parse(path, i + 1, e.to_string()))?;
        out.push((rec.id, rec.label));
    }
    Ok(out)
}

pub fn load_predictions(path: &Path) -> Result<Vec<(String, Polarity)>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_predictions(file, path)
}
