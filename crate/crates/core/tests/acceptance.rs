//! Runs every acceptance criterion at full size and prints one line each.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use blockgraph::verify::{run_criterion, Suite, VerifyConfig};

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let mut failed = 0;
    for &id in Suite::All.criteria() {
        let start = Instant::now();
        let report = run_criterion(id, &config);
        println!("{report} [{:.1?}]", start.elapsed());
        if !report.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
