//! Test-only reference arithmetic, written without touching the library's
//! scoring code paths. Each function recomputes its quantity from scratch
//! with explicit loops and probability products.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

// ---------------------------------------------------------------- hashing

pub fn fnv(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub fn hash_vec(text: &str, dim: usize, seed: u64) -> Vec<f64> {
    let s: Vec<char> = format!("^{text}$").chars().collect();
    let mut v = vec![0.0; dim];
    let mut i = 0;
    while i + 3 <= s.len() {
        let tri: String = s[i..i + 3].iter().collect();
        let h = fnv(tri.as_bytes()) ^ seed;
        let sign = if h & (1u64 << 63) != 0 { -1.0 } else { 1.0 };
        v[(h % dim as u64) as usize] += sign;
        i += 1;
    }
    let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n != 0.0 {
        for x in &mut v {
            *x /= n;
        }
    }
    v
}

pub fn cos(u: &[f64], v: &[f64]) -> f64 {
    let mut dot = 0.0;
    let mut nu = 0.0;
    let mut nv = 0.0;
    for i in 0..u.len() {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    dot / (nu.sqrt() * nv.sqrt())
}

// ------------------------------------------------------------ naive bayes

pub fn grams(token: &str, ns: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    for &n in ns {
        let s: Vec<char> = if n == 1 {
            token.chars().collect()
        } else {
            format!("^{token}$").chars().collect()
        };
        if s.len() >= n {
            for i in 0..=s.len() - n {
                out.push(s[i..i + n].iter().collect());
            }
        }
    }
    out
}

/// Posterior by direct enumeration of prior * product of smoothed
/// likelihoods, normalized over languages. No logarithms.
pub fn nb_posterior(corpus: &[(&str, Vec<String>)], ns: &[usize], alpha: f64, token: &str) -> Vec<f64> {
    NbOracle::new(corpus, ns, alpha).posterior(token)
}

/// The counts behind [`nb_posterior`], gathered once for repeated queries.
pub struct NbOracle {
    ns: Vec<usize>,
    alpha: f64,
    counts: Vec<HashMap<String, f64>>,
    totals: Vec<f64>,
    priors: Vec<f64>,
    vocab: f64,
}

impl NbOracle {
    pub fn new(corpus: &[(&str, Vec<String>)], ns: &[usize], alpha: f64) -> Self {
        let mut counts: Vec<HashMap<String, f64>> = Vec::new();
        let mut vocab: Vec<String> = Vec::new();
        let mut n_tokens = Vec::new();
        for (_, toks) in corpus {
            let mut c = HashMap::new();
            let mut k = 0.0;
            for t in toks.iter().filter(|t| !t.is_empty()) {
                k += 1.0;
                for g in grams(t, ns) {
                    if !vocab.contains(&g) {
                        vocab.push(g.clone());
                    }
                    *c.entry(g).or_insert(0.0) += 1.0;
                }
            }
            counts.push(c);
            n_tokens.push(k);
        }
        let all: f64 = n_tokens.iter().sum();
        NbOracle {
            ns: ns.to_vec(),
            alpha,
            totals: counts.iter().map(|c| c.values().sum()).collect(),
            counts,
            priors: n_tokens.iter().map(|k| k / all).collect(),
            vocab: vocab.len() as f64 + 1.0,
        }
    }

    pub fn posterior(&self, token: &str) -> Vec<f64> {
        let q = grams(token, &self.ns);
        let mut joint = Vec::new();
        for (l, c) in self.counts.iter().enumerate() {
            let mut p = self.priors[l];
            for g in &q {
                let k = c.get(g).copied().unwrap_or(0.0);
                p *= (k + self.alpha) / (self.totals[l] + self.alpha * self.vocab);
            }
            joint.push(p);
        }
        let z: f64 = joint.iter().sum();
        joint.iter().map(|p| p / z).collect()
    }
}

/// Argmax with first-declared tie-break.
pub fn argmax(p: &[f64]) -> usize {
    let mut best = 0;
    for i in 1..p.len() {
        if p[i] > p[best] {
            best = i;
        }
    }
    best
}

// ----------------------------------------------------------- end to end

pub struct OracleLexicon {
    pub lang: &'static str,
    pub pos: Vec<&'static str>,
    pub neg: Vec<&'static str>,
}

pub struct OracleScore {
    pub segments: Vec<(String, String)>,
    pub pos: f64,
    pub neg: f64,
    pub positive: bool,
}

/// Full classification: brute-force NB labels, maximal runs, hash
/// embeddings, mean cosine per lexicon side, sums over segments.
/// `text` must already be clean.
pub fn classify(
    text: &str,
    corpus: &[(&str, Vec<String>)],
    ns: &[usize],
    lexicons: &[OracleLexicon],
    dim: usize,
    seed: u64,
) -> OracleScore {
    let tokens: Vec<&str> = if text.is_empty() { vec![] } else { text.split(' ').collect() };
    let langs: Vec<&str> = tokens
        .iter()
        .map(|t| corpus[argmax(&nb_posterior(corpus, ns, 1.0, t))].0)
        .collect();
    let mut segments: Vec<(String, String)> = Vec::new();
    for (t, l) in tokens.iter().zip(&langs) {
        match segments.last_mut() {
            Some((sl, st)) if sl == l => {
                st.push(' ');
                st.push_str(t);
            }
            _ => segments.push((l.to_string(), t.to_string())),
        }
    }
    let (mut pos, mut neg) = (0.0, 0.0);
    for (l, s) in &segments {
        let lex = lexicons.iter().find(|x| x.lang == l).unwrap();
        let sv = hash_vec(s, dim, seed);
        let mean = |words: &[&str]| {
            words.iter().map(|w| cos(&sv, &hash_vec(w, dim, seed))).sum::<f64>() / words.len() as f64
        };
        pos += mean(&lex.pos);
        neg += mean(&lex.neg);
    }
    OracleScore {
        segments,
        pos,
        neg,
        positive: pos > neg,
    }
}

// ------------------------------------------------------------- fixtures

pub fn toy_lexicons() -> Vec<OracleLexicon> {
    vec![
        OracleLexicon {
            lang: "en",
            pos: vec!["good", "great", "happy", "love", "excellent", "wonderful", "nice", "awesome"],
            neg: vec!["bad", "terrible", "sad", "hate", "awful", "horrible", "ugly", "worst"],
        },
        OracleLexicon {
            lang: "es",
            pos: vec!["bueno", "genial", "feliz", "amor", "excelente", "maravilloso", "bonito", "alegre"],
            neg: vec!["malo", "terrible", "triste", "odio", "horrible", "feo", "peor", "asco"],
        },
    ]
}

pub const EN_FILLER: &[&str] = &["the", "movie", "was", "really", "this", "day", "is", "my", "friend", "today"];
pub const ES_FILLER: &[&str] = &["la", "pelicula", "fue", "muy", "este", "dia", "es", "mi", "amigo", "hoy"];

/// Language-model training tokens: lexicon words plus filler vocabulary.
pub fn toy_training() -> Vec<(&'static str, Vec<String>)> {
    let lex = toy_lexicons();
    let fillers = [EN_FILLER, ES_FILLER];
    lex.iter()
        .zip(fillers)
        .map(|(l, f)| {
            let mut toks: Vec<String> = l.pos.iter().chain(&l.neg).map(|s| s.to_string()).collect();
            toks.extend(f.iter().map(|s| s.to_string()));
            (l.lang, toks)
        })
        .collect()
}

/// A random bilingual sentence of 2..=10 words drawn from both languages'
/// lexicons and filler words, with occasional noise that normalization
/// removes.
pub fn synthetic_sentence<R: Rng>(rng: &mut R) -> String {
    let lex = toy_lexicons();
    let n = rng.gen_range(2..=10);
    let mut words = Vec::new();
    for _ in 0..n {
        let l = &lex[rng.gen_range(0..2)];
        let w = match rng.gen_range(0..4) {
            0 => *l.pos.choose(rng).unwrap(),
            1 => *l.neg.choose(rng).unwrap(),
            _ => {
                if l.lang == "en" {
                    *EN_FILLER.choose(rng).unwrap()
                } else {
                    *ES_FILLER.choose(rng).unwrap()
                }
            }
        };
        let w = match rng.gen_range(0..12) {
            0 => w.to_uppercase(),
            1 => format!("{w}!"),
            2 => format!("#{w}"),
            3 => format!("{w} 2024"),
            4 => format!("@{w}"),
            _ => w.to_string(),
        };
        words.push(w);
    }
    words.join(" ")
}

// ------------------------------------------------- library-side fixtures

use mixlang::prelude::*;

pub fn tag(s: &str) -> LanguageTag {
    LanguageTag::new(s).unwrap()
}

pub fn toy_model() -> NgramLanguageModel {
    let corpus: Vec<(LanguageTag, Vec<String>)> =
        toy_training().into_iter().map(|(l, t)| (tag(l), t)).collect();
    NgramLanguageModel::train(&corpus, &TrainConfig::default()).unwrap()
}

pub fn toy_sentiment_lexicons() -> Vec<SentimentLexicon> {
    toy_lexicons()
        .iter()
        .map(|l| SentimentLexicon::new(tag(l.lang), &l.pos, &l.neg).unwrap())
        .collect()
}

pub fn toy_pipeline_with(model: NgramLanguageModel, dim: usize, seed: u64) -> Pipeline {
    let provider = HashProvider::new(dim, seed).unwrap();
    let lexicons: Vec<_> = toy_sentiment_lexicons()
        .into_iter()
        .map(|l| EmbeddedLexicon::embed(&provider, l).unwrap())
        .collect();
    Pipeline::new(model, Box::new(provider), lexicons, Aggregation::Mean).unwrap()
}

pub fn toy_pipeline() -> Pipeline {
    toy_pipeline_with(toy_model(), 64, 0)
}
