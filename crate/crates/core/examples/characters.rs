//! Schur polynomials, branching to one fewer variable and the Pieri rule.
//!
//!     cargo run --example characters

use fockspace::characters::{branch_r1, pieri_matrix, pieri_mult, schur, schur_expand, SymPolynomial};
use fockspace::Partition;

fn main() -> fockspace::Result<()> {
    let lambda: Partition = "[2,1]".parse()?;
    println!("s_{lambda}(x1,x2,x3) = {:?}", schur(&lambda, 3));

    let product = &schur(&lambda, 3) * &SymPolynomial::standard(3);
    println!("s_{lambda} · (x1+x2+x3) = {:?}", schur_expand(&product)?);
    println!("pieri {lambda} in 3 variables: {:?}", pieri_mult(&lambda, 3)?);
    println!("pieri {lambda} in 2 variables: {:?}", pieri_mult(&lambda, 2)?);
    println!("branch {lambda} from GL_3 to GL_2: {:?}", branch_r1(&lambda, 2)?);

    let m = pieri_matrix(3)?;
    println!("Pieri matrix Λ_3 -> Λ_4 has {} nonzero entries", m.entries.len());
    Ok(())
}
