//! The Chevalley generators on the Fock space and their operator matrices.
//!
//!     cargo run --example fock_space

use fockspace::fock::{op_matrix, weight};
use fockspace::partition::n_value;
use fockspace::{FockVector, Modulus, OpKind, Partition, Residue};

fn main() -> fockspace::Result<()> {
    let e = Modulus::new(3)?;
    let lambda: Partition = "[2,1]".parse()?;
    let v = FockVector::basis(lambda.clone());

    for i in e.active_residues(0) {
        println!("f_{i} v{lambda} = {:?}", v.apply_f(i));
        println!("e_{i} v{lambda} = {:?}", v.apply_e(i));
        println!("h_{i} v{lambda} = {:?}  (n_{i} = {})", v.apply_h(i), n_value(&lambda, i));
    }

    // [e_i, f_i] = h_i on this vector
    let i = Residue::new(1, e)?;
    let comm = &v.apply_f(i).apply_e(i) - &v.apply_e(i).apply_f(i);
    assert_eq!(comm, v.apply_h(i));
    println!("[e_1, f_1] v{lambda} = {comm:?}");

    println!("wt({lambda}) = ω_0 - {}", serde_json::to_string(&weight(&lambda, e)).unwrap());

    // f_2 : Λ_2 -> Λ_3, basis lexicographically descending
    let m = op_matrix(OpKind::F, Residue::new(2, e)?, 2);
    println!("matrix of f_2 from degree 2 (rows {:?}, cols {:?}):", m.rows, m.cols);
    for row in &m.rows {
        let line: Vec<String> = m.cols.iter().map(|col| m.get(row, col).to_string()).collect();
        println!("  {:>8} | {}", row.to_string(), line.join(" "));
    }
    Ok(())
}
