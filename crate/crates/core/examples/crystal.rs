//! Signatures, the crystal operators and the crystal graph.
//!
//!     cargo run --example crystal > crystal.dot

use fockspace::crystal::{crystal_graph, e_tilde, epsilon, f_tilde, phi, reduced_signature, signature};
use fockspace::{Modulus, Partition, Residue};

fn main() -> fockspace::Result<()> {
    let e = Modulus::new(3)?;
    let lambda: Partition = "[3,2,1]".parse()?;
    for i in e.active_residues(0) {
        let sig = signature(&lambda, i);
        eprintln!(
            "i={i}: signature {sig} reduced {} ε={} φ={} ẽ={:?} f̃={:?}",
            reduced_signature(&sig),
            epsilon(&lambda, i),
            phi(&lambda, i),
            e_tilde(&lambda, i),
            f_tilde(&lambda, i),
        );
    }

    // walk down to ∅ along ẽ, then print the graph in DOT
    let mut cur = lambda.clone();
    let mut path = vec![cur.to_string()];
    while let Some((i, prev)) = e.active_residues(0).into_iter().find_map(|i: Residue| e_tilde(&cur, i).map(|p| (i, p)))
    {
        path.push(format!("-{i}-> {prev}"));
        cur = prev;
    }
    eprintln!("ẽ-path: {}", path.join(" "));

    let graph = crystal_graph(e, 4);
    eprintln!(
        "{} nodes, {} reachable from ∅, highest weight {:?}",
        graph.nodes.len(),
        graph.reachable_from_empty().len(),
        graph.highest_weight_nodes()
    );
    print!("{}", graph.to_dot());
    Ok(())
}
