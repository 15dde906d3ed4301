//! Normal forms in the degenerate affine Hecke algebra.
//!
//!     cargo run --example hecke -- 3 "t1*t2*y3*t2*t1"

use fockspace::hecke::{parse_expression, verify_relations, Permutation};

fn main() -> fockspace::Result<()> {
    let mut args = std::env::args().skip(1);
    let rank: usize = args.next().map(|s| s.parse().expect("rank")).unwrap_or(3);
    let expr = args.next().unwrap_or_else(|| "t1*t2*y3*t2*t1".to_string());

    let h = parse_expression(&expr, rank)?;
    println!("{expr} = {h:?}");
    for (basis, c) in h.terms() {
        println!("  {c} · y^{:?} · {:?}", basis.exponents, basis.permutation.one_line());
    }

    let w = Permutation::from_one_line(&[3, 1, 2])?;
    println!("reduced words of {:?}: {:?}", w.one_line(), w.reduced_words());

    for check in verify_relations(rank) {
        println!("{:<16} {}", check.name, if check.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
