//! Runs every acceptance criterion and prints one PASS/FAIL line each.

use std::process::ExitCode;

use abelian_core::selftest::{run_criterion, SelftestConfig};

fn main() -> ExitCode {
    let config = SelftestConfig::default();
    let mut failed = 0;
    for id in 1..=10 {
        let r = run_criterion(id, &config);
        println!("{}", r.line());
        if !r.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
