//! Young diagrams: residues, addable/removable boxes, rim hooks and cores.
//!
//!     cargo run --example partitions -- "[4,3,1]" 3

use fockspace::partition::{m_counts, p_core, p_weight};
use fockspace::{Modulus, Partition};

fn main() -> fockspace::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = args.next().as_deref().unwrap_or("[4,3,1]").parse()?;
    let e: Modulus = args.next().as_deref().unwrap_or("3").parse()?;

    println!("λ = {lambda}, |λ| = {}, λ' = {}", lambda.size(), lambda.conjugate());
    println!("residues of λ mod {e}:");
    for row in 1..=lambda.len() as u32 {
        let line: Vec<String> =
            (1..=lambda.row_len(row)).map(|col| fockspace::Cell::new(row, col).residue(e).to_string()).collect();
        println!("  {}", line.join(" "));
    }
    println!("residue counts: {:?}", m_counts(&lambda, e));

    let show = |cells: Vec<fockspace::Cell>| {
        cells.iter().map(|c| format!("{c}:{}", c.residue(e))).collect::<Vec<_>>().join(" ")
    };
    println!("addable   {}", show(lambda.addable_cells()));
    println!("removable {}", show(lambda.removable_cells()));

    for hook in lambda.removable_rim_hooks(e.value()) {
        let cells: Vec<String> = hook.cells.iter().map(|c| c.to_string()).collect();
        println!("rim {e}-hook {} leaves {}", cells.join(""), hook.remainder);
    }
    println!("{e}-core {} with {e}-weight {}", p_core(&lambda, e), p_weight(&lambda, e));
    Ok(())
}
