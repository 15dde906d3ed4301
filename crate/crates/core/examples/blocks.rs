//! Blocks of partitions by core, and their grouping by weight across degrees.
//!
//!     cargo run --example blocks -- 2 6

use fockspace::blocks::{blocks, derived_equivalence_classes_up_to, same_block};
use fockspace::{Modulus, Partition};

fn main() -> fockspace::Result<()> {
    let mut args = std::env::args().skip(1);
    let e: Modulus = args.next().as_deref().unwrap_or("2").parse()?;
    let d: usize = args.next().map(|s| s.parse().expect("degree")).unwrap_or(6);

    for b in blocks(d, e) {
        let members: Vec<String> = b.members.iter().map(|m| m.to_string()).collect();
        println!("core {:<8} weight {}: {}", b.core.to_string(), b.p_weight, members.join(" "));
    }

    let a: Partition = "[2,2]".parse()?;
    let b: Partition = "[3,1]".parse()?;
    println!("{a} and {b} in one block for e={e}: {}", same_block(&a, &b, e)?);

    if !e.is_zero() {
        for class in derived_equivalence_classes_up_to(d, e)? {
            let cores: Vec<String> = class.iter().map(|b| format!("{}@{}", b.core, b.degree)).collect();
            println!("weight {}: {}", class[0].p_weight, cores.join(" "));
        }
    }
    Ok(())
}
