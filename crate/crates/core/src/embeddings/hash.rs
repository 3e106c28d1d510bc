use crate::error::{Error, Result};
use crate::langid::LanguageTag;

use super::{EmbeddingProvider, EmbeddingVector};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

pub fn fnv1a_64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

/// Signed feature hashing of the padded character trigrams of `text`,
/// L2-normalized. Empty text maps to the zero vector.
pub fn hash_embed(text: &str, dim: usize, seed: u64) -> Result<EmbeddingVector> {
    if dim < 2 {
        return Err(Error::BadConfig(format!("hash embedding dim must be >= 2, got {dim}")));
    }
    let padded: Vec<char> = std::iter::once('^')
        .chain(text.chars())
        .chain(std::iter::once('$'))
        .collect();
    let mut buckets = vec![0.0f64; dim];
    let mut buf = String::new();
    for window in padded.windows(3) {
        buf.clear();
        buf.extend(window);
        let h = fnv1a_64(buf.as_bytes()) ^ seed;
        let sign = if h >> 63 == 0 { 1.0 } else { -1.0 };
        buckets[(h % dim as u64) as usize] += sign;
    }
    let norm = buckets.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        buckets.iter_mut().for_each(|x| *x /= norm);
    }
    EmbeddingVector::new(buckets)
}

/// Deterministic [`hash_embed`] backend. The language tag is ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashProvider {
    dim: usize,
    seed: u64,
}

impl HashProvider {
    pub fn new(dim: usize, seed: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::BadConfig(format!("hash embedding dim must be >= 2, got {dim}")));
        }
        Ok(HashProvider { dim, seed })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl EmbeddingProvider for HashProvider {
    fn name(&self) -> &str {
        "hash"
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn embed(&self, text: &str, _lang: &LanguageTag) -> Result<EmbeddingVector> {
        hash_embed(text, self.dim, self.seed)
    }
}
