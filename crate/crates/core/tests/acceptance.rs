//! The acceptance gate: all criteria from the verification suite, printed
//! one row per criterion so the log shows exactly which measurements
//! carried the verdicts. Run with `--nocapture` to see the rows for a
//! passing run, e.g.
//!
//! ```text
//! cargo test -p tir-core --test acceptance -- --nocapture
//! ```

use tir_core::verify::{run_all, Tolerances, CRITERION_COUNT};

#[test]
fn all_acceptance_criteria_pass() {
    let reports = run_all(&Tolerances::default());
    assert_eq!(reports.len(), CRITERION_COUNT);

    for report in &reports {
        // Visible in the test log even without --nocapture when it fails.
        println!("{report}");
    }

    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("#{} {}: {}", r.index, r.name, r.detail))
        .collect();
    assert!(
        failed.is_empty(),
        "{} of {CRITERION_COUNT} acceptance criteria failed:\n{}",
        failed.len(),
        failed.join("\n")
    );
}
