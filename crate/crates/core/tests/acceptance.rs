//! One line per acceptance criterion; set `SEED` to vary the draws and
//! `CRITERION=k` to run a single one.

use std::process::ExitCode;

use adreal::selftest::{run_one, seed_from_env};

fn main() -> ExitCode {
    // `cargo test` passes harness flags such as `--nocapture`; none apply here
    let seed = seed_from_env();
    let only: Option<usize> = std::env::var("CRITERION").ok().and_then(|s| s.parse().ok());
    println!("acceptance (seed {seed})");
    let mut failed = Vec::new();
    for index in 1..=8 {
        if only.is_some_and(|k| k != index) {
            continue;
        }
        let started = std::time::Instant::now();
        let report = run_one(index, seed).expect("criterion index in range");
        println!("{}  [{:.1?}]", report.line(), started.elapsed());
        for f in report.failures.iter().skip(1) {
            println!("    {f}");
        }
        if !report.passed() {
            failed.push(index);
        }
    }
    if failed.is_empty() {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
