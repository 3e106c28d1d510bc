//! Fixed-dimension text embeddings behind a provider abstraction.
//!
//! Two backends ship with the crate: [`HashProvider`], a deterministic
//! feature-hashing embedder used for tests and demos, and [`CacheProvider`],
//! which serves vectors computed offline by an external sentence encoder.

mod cache;
mod hash;

use crate::error::{Error, Result};
use crate::langid::LanguageTag;

pub use cache::{read_manifest, write_manifest, CacheProvider, EmbeddingCache, ManifestEntry};
pub use hash::{fnv1a_64, hash_embed, HashProvider};

/// Norms below this are treated as zero by [`cosine`].
pub const ZERO_NORM: f64 = 1e-12;

/// A dense vector with finite components.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingVector(Vec<f64>);

impl EmbeddingVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::BadConfig("embedding dimension must be positive".into()));
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::BadConfig("embedding components must be finite".into()));
        }
        Ok(EmbeddingVector(components))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn into_components(self) -> Vec<f64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Multiplies every component by `factor`.
    pub fn scaled(&self, factor: f64) -> EmbeddingVector {
        EmbeddingVector(self.0.iter().map(|c| c * factor).collect())
    }
}

/// Cosine similarity, clamped to `[-1, 1]`.
pub fn cosine(u: &EmbeddingVector, v: &EmbeddingVector) -> Result<f64> {
    if u.dim() != v.dim() {
        return Err(Error::DimMismatch {
            expected: u.dim(),
            found: v.dim(),
        });
    }
    let (nu, nv) = (u.norm(), v.norm());
    if nu < ZERO_NORM || nv < ZERO_NORM {
        return Err(Error::ZeroVector);
    }
    let dot: f64 = u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum();
    Ok((dot / (nu * nv)).clamp(-1.0, 1.0))
}

/// Source of embeddings for `(text, language)` pairs.
///
/// Implementations must be deterministic, and every vector they return must
/// have dimension [`dim`](EmbeddingProvider::dim).
pub trait EmbeddingProvider: Send + Sync {
    fn name(&self) -> &str;

    fn dim(&self) -> usize;

    fn embed(&self, text: &str, lang: &LanguageTag) -> Result<EmbeddingVector>;
}

impl<P: EmbeddingProvider + ?Sized> EmbeddingProvider for Box<P> {
    fn name(&self) -> &str {
        (**self).name()
    }

    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn embed(&self, text: &str, lang: &LanguageTag) -> Result<EmbeddingVector> {
        (**self).embed(text, lang)
    }
}

impl<P: EmbeddingProvider + ?Sized> EmbeddingProvider for std::sync::Arc<P> {
    fn name(&self) -> &str {
        (**self).name()
    }

    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn embed(&self, text: &str, lang: &LanguageTag) -> Result<EmbeddingVector> {
        (**self).embed(text, lang)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(c: &[f64]) -> EmbeddingVector {
        EmbeddingVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn cosine_examples() {
        let a = v(&[0.3, -1.2, 4.0]);
        assert!((cosine(&a, &a).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(cosine(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
        let c = cosine(&v(&[1.0, 1.0]), &v(&[1.0, 0.0])).unwrap();
        assert!((c - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn cosine_errors() {
        assert!(matches!(
            cosine(&v(&[1.0, 0.0]), &v(&[1.0, 0.0, 0.0])),
            Err(Error::DimMismatch { expected: 2, found: 3 })
        ));
        assert!(matches!(cosine(&v(&[0.0, 0.0]), &v(&[1.0, 0.0])), Err(Error::ZeroVector)));
        assert!(matches!(cosine(&v(&[1.0, 0.0]), &v(&[1e-13, 0.0])), Err(Error::ZeroVector)));
    }

    #[test]
    fn vector_validation() {
        assert!(EmbeddingVector::new(vec![]).is_err());
        assert!(EmbeddingVector::new(vec![f64::NAN]).is_err());
        assert!(EmbeddingVector::new(vec![f64::INFINITY, 1.0]).is_err());
    }

    fn pair() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
        (2usize..=32).prop_flat_map(|d| {
            (
                proptest::collection::vec(-10.0f64..10.0, d),
                proptest::collection::vec(-10.0f64..10.0, d),
            )
        })
    }

    proptest! {
        #[test]
        fn cosine_symmetric_bounded_scale_invariant((a, b) in pair(), s in 0.001f64..1000.0, t in 0.001f64..1000.0) {
            let (a, b) = (v(&a), v(&b));
            prop_assume!(a.norm() > 1e-6 && b.norm() > 1e-6);
            let c = cosine(&a, &b).unwrap();
            prop_assert_eq!(c, cosine(&b, &a).unwrap());
            prop_assert!((-1.0..=1.0).contains(&c));
            let scaled = cosine(&a.scaled(s), &b.scaled(t)).unwrap();
            prop_assert!((scaled - c).abs() < 1e-9);
        }
    }
}
