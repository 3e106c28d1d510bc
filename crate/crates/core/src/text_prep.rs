//! Normalization of raw social-media text into clean, space-separated tokens.
//!
//! Removal passes run in a fixed order: lowercase, URLs, emails, mentions,
//! hashtags, emoji, digit runs, punctuation, and finally whitespace collapse.
//! Every removed span is replaced by a space so neighbouring words never fuse.

use std::fmt;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

/// A text record as read from a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawText {
    pub id: String,
    pub content: String,
}

impl RawText {
    pub fn new(id: impl Into<String>, content: impl Into<String>) -> Self {
        RawText {
            id: id.into(),
            content: content.into(),
        }
    }
}

/// Lowercased text with all noise removed and tokens separated by single spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CleanText(String);

impl CleanText {
    /// Accepts `s` only if it is already in normalized form.
    pub fn parse(s: &str) -> Option<CleanText> {
        let clean = normalize(s);
        (clean.0 == s).then_some(clean)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CleanText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for CleanText {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

fn is_url(token: &str) -> bool {
    token.starts_with("http://") || token.starts_with("https://") || token.starts_with("www.")
}

fn is_email(token: &str) -> bool {
    let mut parts = token.split('@');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(_), Some(domain), None) => domain.contains('.'),
        _ => false,
    }
}

fn is_mention(token: &str) -> bool {
    token.starts_with('@')
}

fn is_hashtag(token: &str) -> bool {
    token.starts_with('#')
}

/// Emoji code points stripped during normalization.
pub fn is_emoji(c: char) -> bool {
    matches!(c,
        '\u{1F300}'..='\u{1FAFF}'
        | '\u{2600}'..='\u{27BF}'
        | '\u{FE0F}'
        | '\u{200D}')
}

/// The 32 ASCII punctuation characters plus Spanish inverted marks,
/// curly quotes and en/em dashes.
pub fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '¿' | '¡' | '\u{2018}' | '\u{2019}' | '\u{201C}' | '\u{201D}' | '\u{2013}' | '\u{2014}'
        )
}

fn digit_runs() -> &'static Regex {
    static DIGITS: OnceLock<Regex> = OnceLock::new();
    // `\d` is Unicode-aware: general category Nd.
    DIGITS.get_or_init(|| Regex::new(r"\d+").expect("static pattern"))
}

/// Drops every whitespace-delimited token matched by `pred`, leaving a space.
fn drop_tokens(text: &str, pred: impl Fn(&str) -> bool) -> String {
    text.split_whitespace()
        .map(|t| if pred(t) { " " } else { t })
        .collect::<Vec<_>>()
        .join(" ")
}

fn replace_chars(text: &str, pred: impl Fn(char) -> bool) -> String {
    text.chars().map(|c| if pred(c) { ' ' } else { c }).collect()
}

/// Normalizes arbitrary Unicode text. Never fails; degenerate input yields
/// the empty `CleanText`. Idempotent.
pub fn normalize(text: &str) -> CleanText {
    let lowered = text.to_lowercase();
    let text = drop_tokens(&lowered, is_url);
    let text = drop_tokens(&text, is_email);
    let text = drop_tokens(&text, is_mention);
    let text = drop_tokens(&text, is_hashtag);
    let text = replace_chars(&text, is_emoji);
    let text = digit_runs().replace_all(&text, " ");
    let text = replace_chars(&text, is_punctuation);
    CleanText(text.split_whitespace().collect::<Vec<_>>().join(" "))
}

/// Splits clean text on single spaces. Empty input yields no tokens.
pub fn tokenize(clean: &CleanText) -> Vec<&str> {
    if clean.is_empty() {
        Vec::new()
    } else {
        clean.0.split(' ').collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowercases_and_strips_punctuation() {
        assert_eq!(normalize("Hello WORLD!!").as_str(), "hello world");
    }

    #[test]
    fn removal_order_example() {
        // lowercase -> url gone -> #fun, @bob gone -> 123 gone
        assert_eq!(
            normalize("check https://t.co/x y 123 #fun @bob").as_str(),
            "check y"
        );
    }

    #[test]
    fn empty_input() {
        assert_eq!(normalize("").as_str(), "");
        assert_eq!(normalize("  \t\n ").as_str(), "");
        assert_eq!(normalize("!!! 123 @x #y").as_str(), "");
    }

    #[test]
    fn spanish_letters_survive() {
        assert_eq!(
            normalize("¿Qué PASÓ, Señor? ¡Mañana!").as_str(),
            "qué pasó señor mañana"
        );
    }

    #[test]
    fn emails_and_www_removed() {
        assert_eq!(
            normalize("mail me at Bob.Smith@Example.com or www.site.org now").as_str(),
            "mail me at or now"
        );
    }

    #[test]
    fn emoji_do_not_fuse_words() {
        assert_eq!(normalize("love😍it ☀️day").as_str(), "love it day");
    }

    #[test]
    fn non_ascii_digits_removed() {
        assert_eq!(normalize("tengo ٣٤ años").as_str(), "tengo años");
    }

    #[test]
    fn curly_quotes_and_dashes() {
        assert_eq!(normalize("“great”—really–yes ‘ok’").as_str(), "great really yes ok");
    }

    #[test]
    fn tokenize_examples() {
        let c = CleanText::parse("hola my friend").unwrap();
        assert_eq!(tokenize(&c), vec!["hola", "my", "friend"]);
        assert!(tokenize(&CleanText::default()).is_empty());
        let c = CleanText::parse("a b").unwrap();
        assert_eq!(tokenize(&c), vec!["a", "b"]);
    }

    #[test]
    fn parse_rejects_unclean() {
        assert!(CleanText::parse("Hola").is_none());
        assert!(CleanText::parse("a  b").is_none());
        assert!(CleanText::parse(" a").is_none());
    }

    fn tweetish() -> impl Strategy<Value = String> {
        let piece = prop_oneof![
            "[a-zA-ZñáéíóúÑÁ]{1,8}",
            "[0-9]{1,4}",
            Just("http://t.co/abc".to_string()),
            Just("www.x.es".to_string()),
            Just("@user".to_string()),
            Just("#tag".to_string()),
            Just("a@b.c".to_string()),
            "[!-/:-@\\[-`{-~¿¡“”‘’–—]{1,3}",
            Just("😀".to_string()),
            Just("\u{200D}\u{FE0F}".to_string()),
            "[ \t\n]{1,3}",
        ];
        proptest::collection::vec(piece, 0..12).prop_map(|v| v.concat())
    }

    proptest! {
        #[test]
        fn idempotent_on_tweets(s in tweetish()) {
            let once = normalize(&s);
            prop_assert_eq!(normalize(once.as_str()), once);
        }

        #[test]
        fn idempotent_on_any_unicode(s in "\\PC{0,40}") {
            let once = normalize(&s);
            prop_assert_eq!(normalize(once.as_str()), once);
        }

        #[test]
        fn output_is_clean(s in tweetish()) {
            let out = normalize(&s);
            let out = out.as_str();
            prop_assert!(!out.starts_with(' ') && !out.ends_with(' '));
            prop_assert!(!out.contains("  "));
            for c in out.chars() {
                prop_assert!(!is_punctuation(c) && !is_emoji(c) && !c.is_ascii_digit());
                prop_assert!(c.to_lowercase().eq(std::iter::once(c)));
                prop_assert!(c == ' ' || !c.is_whitespace());
            }
            for t in out.split(' ').filter(|t| !t.is_empty()) {
                prop_assert!(!is_url(t) && !is_email(t) && !is_mention(t) && !is_hashtag(t));
            }
        }

        #[test]
        fn tokenize_round_trip(s in tweetish()) {
            let clean = normalize(&s);
            prop_assert_eq!(tokenize(&clean).join(" "), clean.as_str());
        }
    }
}
