//! `NBLM v1` model files and plain token-list training files.
//!
//! ```text
//! NBLM v1
//! languages en es
//! nrange 1 2 3
//! alpha 1
//! priors 0.5 0.5
//! en ^a 3
//! es b$ 1
//! ```
//!
//! Count lines are `<lang> <gram> <count>`, sorted by language declaration
//! order and then by gram. Backslash, space, tab, CR and LF inside a gram
//! are escaped as `\\`, `\s`, `\t`, `\r`, `\n`.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{LanguageTag, NgramLanguageModel};

const HEADER: &str = "NBLM v1";

fn escape(gram: &str) -> String {
    let mut out = String::with_capacity(gram.len());
    for c in gram.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            ' ' => out.push_str("\\s"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(s: &str) -> Option<String> {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        out.push(match chars.next()? {
            '\\' => '\\',
            's' => ' ',
            't' => '\t',
            'r' => '\r',
            'n' => '\n',
            _ => return None,
        });
    }
    Some(out)
}

/// Serializes `model` in `NBLM v1` format. Output is deterministic.
pub fn write_model<W: Write>(model: &NgramLanguageModel, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{HEADER}")?;
    let langs: Vec<&str> = model.languages().iter().map(LanguageTag::as_str).collect();
    writeln!(out, "languages {}", langs.join(" "))?;
    let n: Vec<String> = model.n_range().iter().map(usize::to_string).collect();
    writeln!(out, "nrange {}", n.join(" "))?;
    writeln!(out, "alpha {}", model.alpha())?;
    let priors: Vec<String> = model.priors().iter().map(f64::to_string).collect();
    writeln!(out, "priors {}", priors.join(" "))?;
    for (lang, counts) in model.languages().iter().zip(model.counts()) {
        let mut grams: Vec<(&String, &u64)> = counts.iter().collect();
        grams.sort();
        for (gram, count) in grams {
            writeln!(out, "{lang} {} {count}", escape(gram))?;
        }
    }
    Ok(())
}

pub fn save_model(model: &NgramLanguageModel, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_model(model, &mut buf).expect("writing to a Vec cannot fail");
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

/// Parses an `NBLM v1` stream. `path` is used only in error messages.
pub fn read_model<R: Read>(input: R, path: &Path) -> Result<NgramLanguageModel> {
    let reader = BufReader::new(input);
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next_line = |want: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some((n, Ok(l))) => Ok((n, l)),
            Some((_, Err(e))) => Err(Error::io(path, e)),
            None => Err(Error::parse(path, 0, format!("unexpected end of file, expected {want}"))),
        }
    };

    let (n, header) = next_line("header")?;
    if header.trim_end() != HEADER {
        return Err(Error::parse(path, n, format!("expected {HEADER:?} header")));
    }

    let mut field = |key: &str| -> Result<(usize, Vec<String>)> {
        let (n, line) = next_line(key)?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(key) {
            return Err(Error::parse(path, n, format!("expected {key:?} line")));
        }
        Ok((n, parts.map(str::to_string).collect()))
    };

    let (n, langs) = field("languages")?;
    let languages = langs
        .iter()
        .map(|l| LanguageTag::new(l).map_err(|e| Error::parse(path, n, e.to_string())))
        .collect::<Result<Vec<_>>>()?;

    let (n, ns) = field("nrange")?;
    let n_range = ns
        .iter()
        .map(|v| v.parse::<usize>().map_err(|e| Error::parse(path, n, e.to_string())))
        .collect::<Result<BTreeSet<_>>>()?;

    let (n, alpha) = field("alpha")?;
    let alpha = match alpha.as_slice() {
        [a] => a.parse::<f64>().map_err(|e| Error::parse(path, n, e.to_string()))?,
        _ => return Err(Error::parse(path, n, "expected one smoothing value")),
    };

    let (n, ps) = field("priors")?;
    let priors = ps
        .iter()
        .map(|v| v.parse::<f64>().map_err(|e| Error::parse(path, n, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    if priors.len() != languages.len() {
        return Err(Error::parse(path, n, "prior count does not match language count"));
    }

    let mut counts: Vec<HashMap<String, u64>> = vec![HashMap::new(); languages.len()];
    for (n, line) in lines {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(' ').collect();
        let [lang, gram, count] = parts.as_slice() else {
            return Err(Error::parse(path, n, "expected `<lang> <gram> <count>`"));
        };
        let l = languages
            .iter()
            .position(|t| t.as_str() == *lang)
            .ok_or_else(|| Error::parse(path, n, format!("undeclared language {lang:?}")))?;
        let gram = unescape(gram).ok_or_else(|| Error::parse(path, n, "bad escape in n-gram"))?;
        let count: u64 = count
            .parse()
            .map_err(|e: std::num::ParseIntError| Error::parse(path, n, e.to_string()))?;
        counts[l].insert(gram, count);
    }

    NgramLanguageModel::from_parts(languages, n_range, alpha, priors, counts)
}

pub fn load_model(path: &Path) -> Result<NgramLanguageModel> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_model(file, path)
}

/// Reads a one-token-per-line training file. Surrounding whitespace is
/// trimmed and blank lines are skipped.
pub fn training_tokens(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::TrainConfig;
    use super::*;
    use proptest::prelude::*;

    fn tag(s: &str) -> LanguageTag {
        LanguageTag::new(s).unwrap()
    }

    #[test]
    fn round_trip_preserves_model() {
        let model = NgramLanguageModel::train(
            &[
                (tag("en"), vec!["the", "dog", "a b", "x\\y"]),
                (tag("es"), vec!["el", "perro", "ñandú"]),
            ],
            &TrainConfig::default(),
        )
        .unwrap();
        let mut buf = Vec::new();
        write_model(&model, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("NBLM v1\nlanguages en es\nnrange 1 2 3\nalpha 1\n"));
        let back = read_model(&buf[..], Path::new("m")).unwrap();
        assert_eq!(back, model);
        let mut again = Vec::new();
        write_model(&back, &mut again).unwrap();
        assert_eq!(again, buf);
    }

    #[test]
    fn bad_header_reports_line_one() {
        let err = read_model(&b"NBLM v2\n"[..], Path::new("m")).unwrap_err();
        assert_eq!(err.line(), Some(1));
    }

    #[test]
    fn bad_count_line_reports_its_number() {
        let src = "NBLM v1\nlanguages en es\nnrange 1\nalpha 1\npriors 0.5 0.5\nen a 2\nes b x\n";
        let err = read_model(src.as_bytes(), Path::new("m")).unwrap_err();
        assert_eq!(err.line(), Some(7));

        let src = "NBLM v1\nlanguages en es\nnrange 1\nalpha 1\npriors 0.5 0.5\nfr a 2\n";
        let err = read_model(src.as_bytes(), Path::new("m")).unwrap_err();
        assert_eq!(err.line(), Some(6));
    }

    proptest! {
        #[test]
        fn escape_round_trip(s in "[a-z \\\\\t\r\n^$]{0,12}") {
            let e = escape(&s);
            prop_assert!(!e.contains(' ') && !e.contains('\n'));
            prop_assert_eq!(unescape(&e), Some(s));
        }
    }
}
