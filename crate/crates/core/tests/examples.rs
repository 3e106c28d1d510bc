macro_rules! example_test {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(normalize_tweets, "normalize_tweets.rs", normalize_tweets_runs);
example_test!(train_langid, "train_langid.rs", train_langid_runs);
example_test!(segment_code_switched, "segment_code_switched.rs", segment_code_switched_runs);
example_test!(hash_embeddings, "hash_embeddings.rs", hash_embeddings_runs);
example_test!(classify_polarity, "classify_polarity.rs", classify_polarity_runs);
example_test!(evaluate_tables, "evaluate_tables.rs", evaluate_tables_runs);
example_test!(manifest_handshake, "manifest_handshake.rs", manifest_handshake_runs);
