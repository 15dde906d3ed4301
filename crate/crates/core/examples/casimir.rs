//! Casimir scalars and the eigenvalues of `X` and `Y` on Weyl factors.
//!
//!     cargo run --example casimir -- "[3,1]" 5

use fockspace::casimir::{casimir_scalar, eigenvalue_table};
use fockspace::{Modulus, Partition};

fn main() -> fockspace::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = args.next().as_deref().unwrap_or("[3,1]").parse()?;
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(lambda.size() + 1);

    println!("c_{n}({lambda}) = {}", casimir_scalar(&lambda, n)?);
    let table = eigenvalue_table(&lambda, n, Modulus::ZERO)?;
    for entry in &table.entries {
        let op = if entry.kind == "remove" { "X" } else { "Y" };
        match entry.eigenvalue {
            Some(ev) => println!(
                "{op} on V({}) [{} box {}]: eigenvalue {ev}, content {}",
                entry.partition, entry.kind, entry.cell, entry.content
            ),
            None => println!("{op} on V({}): outside GL_{n}", entry.partition),
        }
    }
    Ok(())
}
