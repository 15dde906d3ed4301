//! Runs every property suite and prints a summary.
//!
//!     cargo run --release --example verify -- 3 8

use fockspace::verify::{verify, Suite, DEFAULT_SEED};
use fockspace::Modulus;

fn main() -> fockspace::Result<()> {
    let mut args = std::env::args().skip(1);
    let e: Modulus = args.next().as_deref().unwrap_or("3").parse()?;
    let d: usize = args.next().map(|s| s.parse().expect("max size")).unwrap_or(8);

    let report = verify(&Suite::ALL, e, d, DEFAULT_SEED);
    for s in &report.suites {
        let status = if s.passed { "pass" } else { "FAIL" };
        println!("{:<11} {status} {:>7} checks {:>6} ms", s.name, s.checked, s.elapsed_ms.unwrap_or(0));
        if let Some(cx) = &s.counterexample {
            println!("  counterexample: {cx}");
        }
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
