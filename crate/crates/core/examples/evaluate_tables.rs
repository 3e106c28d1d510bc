// Confusion-matrix metrics: recomputes the headline numbers of two
// published multilingual-embedding runs and compares them with a
// lexicon baseline.
//
// Run with `cargo run --example evaluate_tables`.

use mixlang::eval::{compare_headlines, Headline};
use mixlang::prelude::*;

pub fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    // cells: (predicted positive, gold positive), (predicted positive, gold
    // negative), (predicted negative, gold positive), (predicted negative, gold negative)
    let runs = [("xlm", ConfusionMatrix::from_cells(429, 201, 160, 624)), ("use", ConfusionMatrix::from_cells(553, 77, 321, 463))];
    let baseline = Headline { accuracy: 0.633, macro_f1: 0.6236 };
    for (name, matrix) in runs {
        let report = EvalReport::from_matrix(matrix)?;
        let d = compare_headlines(report.headline(), baseline);
        println!(
            "{name}: accuracy {:.2}%  macro F1 {:.2}%  macro P {:.2}%  macro R {:.2}%  (vs baseline {:+.2} / {:+.2} pp)",
            report.accuracy * 100.0,
            report.macro_f1 * 100.0,
            report.macro_precision * 100.0,
            report.macro_recall * 100.0,
            d.accuracy,
            d.macro_f1
        );
    }

    let predictions = vec![("a".to_string(), Polarity::Positive), ("b".to_string(), Polarity::Negative)];
    let gold = vec![
        mixlang::eval::LabeledExample { id: "a".into(), text: "good".into(), gold: Polarity::Positive },
        mixlang::eval::LabeledExample { id: "b".into(), text: "bueno".into(), gold: Polarity::Positive },
    ];
    let report = evaluate_run(&predictions, &gold)?;
    println!("two-example run: accuracy {:.2}, macro F1 {:.3}", report.accuracy, report.macro_f1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
