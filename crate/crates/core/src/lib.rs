//! Sentiment classification of code-switched text.
//!
//! The pipeline normalizes a text, labels each token with its language using
//! a character n-gram Naive Bayes model, groups tokens into monolingual
//! segments, and compares each segment's embedding with the positive and
//! negative lexicon embeddings of its language. The summed similarities
//! decide the polarity.
//!
//! ```
//! use mixlang::prelude::*;
//!
//! let en = LanguageTag::new("en").unwrap();
//! let es = LanguageTag::new("es").unwrap();
//! let model = NgramLanguageModel::train(
//!     &[(en.clone(), vec!["good", "day"]), (es.clone(), vec!["bueno", "día"])],
//!     &TrainConfig::default(),
//! )
//! .unwrap();
//! let provider = HashProvider::new(64, 0).unwrap();
//! let lexicons = [
//!     SentimentLexicon::new(en, ["good"], ["bad"]).unwrap(),
//!     SentimentLexicon::new(es, ["bueno"], ["malo"]).unwrap(),
//! ]
//! .map(|l| EmbeddedLexicon::embed(&provider, l).unwrap());
//! let pipeline = Pipeline::new(model, Box::new(provider), lexicons, Aggregation::Mean).unwrap();
//! assert_eq!(pipeline.classify("Good día, bueno!").unwrap().label, Polarity::Positive);
//! ```

pub mod cli;
pub mod config;
pub mod corpus;
pub mod embeddings;
pub mod error;
pub mod eval;
pub mod langid;
pub mod lexicon;
pub mod scorer;
pub mod segmenter;
pub mod text_prep;

pub use error::{Error, LexiconSide, Result};

pub mod prelude {
    pub use crate::embeddings::{
        cosine, hash_embed, CacheProvider, EmbeddingCache, EmbeddingProvider, EmbeddingVector,
        HashProvider,
    };
    pub use crate::error::{Error, LexiconSide, Result};
    pub use crate::eval::{compare_reports, evaluate_run, ConfusionMatrix, EvalReport};
    pub use crate::langid::{switch_points, LanguageTag, NgramLanguageModel, TokenLabel, TrainConfig};
    pub use crate::lexicon::{EmbeddedLexicon, SentimentLexicon};
    pub use crate::scorer::{set_similarity, Aggregation, Pipeline, Polarity, PolarityScore};
    pub use crate::segmenter::{segment, Segment};
    pub use crate::text_prep::{normalize, tokenize, CleanText, RawText};
}
