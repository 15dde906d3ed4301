//! Casimir scalars `c_n(λ)` and the eigenvalues of `X` and `Y` on Weyl factors.
//!
//! `E` and `F` split into generalized eigenspaces `E_j`, `F_j` of `X` and `Y`.
//! On the Weyl factor `V(μ)` of `E(V(λ))`, `X` acts by a scalar computable from
//! two Casimir scalars; the same holds for `Y` on `F(V(λ))`. Each eigenvalue
//! function below evaluates that Casimir difference and cross-checks it against
//! the content of the box that was added or removed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Cell, Modulus, Partition, Residue};

/// `Σ_{i=1}^{n} (n - 2i + 1) λ_i + λ_i²` for a weight given as an explicit
/// `n`-tuple.
pub fn casimir_scalar_of_tuple(weight: &[i64]) -> i64 {
    let n = weight.len() as i64;
    weight.iter().enumerate().map(|(k, &l)| (n - 2 * (k as i64 + 1) + 1) * l + l * l).sum()
}

/// `c_n(λ)`, padding `λ` with zeros to length `n`.
pub fn casimir_scalar(lambda: &Partition, n: usize) -> Result<i64> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { partition: lambda.clone(), parts: lambda.len(), n });
    }
    let mut tuple: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    tuple.resize(n, 0);
    Ok(casimir_scalar_of_tuple(&tuple))
}

fn halve_and_check(lambda: &Partition, cell: Cell, numerator: i64, e: Modulus) -> Result<Residue> {
    if numerator % 2 != 0 {
        return Err(Error::EigenvalueMismatch {
            partition: lambda.clone(),
            cell,
            detail: format!("Casimir difference {numerator} is odd"),
        });
    }
    let j = numerator / 2;
    if j != cell.content() {
        return Err(Error::EigenvalueMismatch {
            partition: lambda.clone(),
            cell,
            detail: format!("eigenvalue {j} differs from content {}", cell.content()),
        });
    }
    Ok(Residue::from_content(j, e))
}

/// Scalar of `X` on the Weyl factor `V(λ - b)` of `E(V(λ))`:
/// `(c_{n+1}(λ) - c_n(λ - b) - |λ| - n) / 2`, reduced mod `e`.
///
/// Requires `n ≥ ℓ(λ)`.
pub fn x_eigenvalue(lambda: &Partition, cell: Cell, n: usize, e: Modulus) -> Result<Residue> {
    let mu = lambda.remove_cell(cell)?;
    let numerator = casimir_scalar(lambda, n + 1)? - casimir_scalar(&mu, n)? - lambda.size() as i64 - n as i64;
    halve_and_check(lambda, cell, numerator, e)
}

/// Scalar of `Y` on the Weyl factor `V(λ + b)` of `F(V(λ))`:
/// `(c_n(λ + b) - c_n(λ) - n) / 2`, reduced mod `e`. The `-n` is `c_n` of the
/// standard module.
///
/// Requires `n ≥ row(b)`.
pub fn y_eigenvalue(lambda: &Partition, cell: Cell, n: usize, e: Modulus) -> Result<Residue> {
    let mu = lambda.add_cell(cell)?;
    let numerator = casimir_scalar(&mu, n)? - casimir_scalar(lambda, n)? - n as i64;
    halve_and_check(lambda, cell, numerator, e)
}

/// One row of [`eigenvalue_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueEntry {
    pub kind: &'static str,
    pub cell: Cell,
    pub partition: Partition,
    pub content: i64,
    /// `None` when `n` is too small for the box to fit.
    pub eigenvalue: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueTable {
    pub partition: Partition,
    pub n: usize,
    pub modulus: u32,
    pub casimir: i64,
    pub entries: Vec<EigenvalueEntry>,
}

/// `c_n(λ)` plus the `X` eigenvalue for every removable box and the `Y`
/// eigenvalue for every addable box.
pub fn eigenvalue_table(lambda: &Partition, n: usize, e: Modulus) -> Result<EigenvalueTable> {
    let casimir = casimir_scalar(lambda, n)?;
    let mut entries = Vec::new();
    for cell in lambda.removable_cells() {
        entries.push(EigenvalueEntry {
            kind: "remove",
            cell,
            partition: lambda.remove_cell(cell)?,
            content: cell.content(),
            eigenvalue: Some(x_eigenvalue(lambda, cell, n, e)?.value()),
        });
    }
    for cell in lambda.addable_cells() {
        let eigenvalue = if cell.row as usize <= n { Some(y_eigenvalue(lambda, cell, n, e)?.value()) } else { None };
        entries.push(EigenvalueEntry {
            kind: "add",
            cell,
            partition: lambda.add_cell(cell)?,
            content: cell.content(),
            eigenvalue,
        });
    }
    Ok(EigenvalueTable { partition: lambda.clone(), n, modulus: e.value(), casimir, entries })
}
