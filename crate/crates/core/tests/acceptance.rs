//! The nine acceptance criteria, each run at full size and checked exactly.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure
//! or blown time budget.

use std::process::ExitCode;
use std::time::Duration;

use qcgl::verify::{run_all, VerifyConfig};

/// Wall-clock budget per criterion, in seconds.
const BUDGETS: [u64; 9] = [10, 5, 10, 60, 60, 30, 60, 30, 1];

fn main() -> ExitCode {
    let results = run_all(&VerifyConfig::default());
    assert_eq!(results.len(), 9);
    let mut failed = 0;
    for r in &results {
        let budget = Duration::from_secs(BUDGETS[r.id as usize - 1]);
        if r.elapsed <= budget {
            println!("{r}");
        } else {
            println!("{r} [FAIL: over the {}s budget]", budget.as_secs());
        }
        if !r.passed || r.elapsed > budget {
            failed += 1;
        }
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
