use std::io::Write;

use luspace_core::acceptance::{run_all, SuiteConfig};

#[test]
fn acceptance_criteria() {
    let results = run_all(&SuiteConfig::full());
    // Written to the raw handle so the lines survive libtest output capture.
    let mut err = std::io::stderr().lock();
    for r in &results {
        writeln!(err, "{r}").unwrap();
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
