//! Characters of Weyl modules as Schur polynomials, and the two
//! multiplicity-free decompositions that drive `E` and `F`: branching from
//! `n + 1` to `n` variables, and multiplication by the standard character.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fock::SparseMatrix;
use crate::partition::{partitions_of, Partition};

/// A polynomial in `num_vars` variables with integer coefficients, keyed by
/// exponent vector. Used for symmetric polynomials, though symmetry is only
/// checked on demand.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SymPolynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::monomial(vec![0; num_vars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = SymPolynomial::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    /// `x_1 + ... + x_n`, the character of the standard module.
    pub fn standard(num_vars: usize) -> Self {
        let mut p = SymPolynomial::zero(num_vars);
        for k in 0..num_vars {
            let mut exps = vec![0; num_vars];
            exps[k] = 1;
            p.add_term(exps, BigInt::one());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.num_vars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn scale(&self, k: &BigInt) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.num_vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Lexicographically greatest exponent vector with a nonzero coefficient.
    pub fn leading_exponent(&self) -> Option<&Vec<u32>> {
        self.terms.keys().next_back()
    }

    /// Invariance under every adjacent swap `x_k <-> x_{k+1}`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.num_vars.saturating_sub(1)).all(|k| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(k, k + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Sets the last variable to zero.
    pub fn restrict_last_var(&self) -> SymPolynomial {
        assert!(self.num_vars >= 1, "no variable to restrict");
        let mut out = SymPolynomial::zero(self.num_vars - 1);
        for (e, c) in &self.terms {
            if e[self.num_vars - 1] == 0 {
                out.add_term(e[..self.num_vars - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// The coefficient of `x_n^k` as a polynomial in the first `n - 1` variables.
    pub fn last_var_coefficient(&self, k: u32) -> SymPolynomial {
        assert!(self.num_vars >= 1, "no last variable");
        let mut out = SymPolynomial::zero(self.num_vars - 1);
        for (e, c) in &self.terms {
            if e[self.num_vars - 1] == k {
                out.add_term(e[..self.num_vars - 1].to_vec(), c.clone());
            }
        }
        out
    }
}

impl Add for &SymPolynomial {
    type Output = SymPolynomial;

    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPolynomial {
    type Output = SymPolynomial;

    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &SymPolynomial {
    type Output = SymPolynomial;

    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.num_vars, rhs.num_vars);
        let mut out = SymPolynomial::zero(self.num_vars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (k, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "·x{}", k + 1)?,
                    _ => write!(f, "·x{}^{}", k + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

/// `s_λ(x_1, ..., x_n)` as a sum over semistandard tableaux of shape `λ` with
/// entries at most `n`. Zero when `λ` has more than `n` rows.
pub fn schur(lambda: &Partition, n: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(n);
    if lambda.len() > n {
        return out;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut tableau: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n];
    fill(&shape, 0, 0, n as u32, &mut tableau, &mut content, &mut out);
    out
}

fn fill(
    shape: &[usize],
    row: usize,
    col: usize,
    n: u32,
    tableau: &mut Vec<Vec<u32>>,
    content: &mut Vec<u32>,
    out: &mut SymPolynomial,
) {
    if row == shape.len() {
        out.add_term(content.clone(), BigInt::one());
        return;
    }
    if col == shape[row] {
        fill(shape, row + 1, 0, n, tableau, content, out);
        return;
    }
    let left = if col > 0 { tableau[row][col - 1] } else { 1 };
    let above = if row > 0 { tableau[row - 1][col] + 1 } else { 1 };
    // an entry in row r (0-based) is at least r + 1, and the column below must still fit
    let below_rows = shape[row + 1..].iter().take_while(|&&len| len > col).count() as u32;
    let hi = n - below_rows;
    for v in left.max(above)..=hi {
        tableau[row][col] = v;
        content[v as usize - 1] += 1;
        fill(shape, row, col + 1, n, tableau, content, out);
        content[v as usize - 1] -= 1;
    }
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly cancelling
/// the leading monomial with the matching Schur polynomial.
pub fn schur_expand(f: &SymPolynomial) -> Result<BTreeMap<Partition, BigInt>> {
    let n = f.num_vars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Partition, SymPolynomial> = HashMap::new();
    while let Some(lead) = rest.leading_exponent().cloned() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(lead));
        }
        let coeff = rest.coefficient(&lead);
        let mu = Partition::from_trusted(lead.clone());
        let s = cache.entry(mu.clone()).or_insert_with(|| schur(&mu, n));
        if s.coefficient(&lead) != BigInt::one() {
            return Err(Error::NotSymmetric(lead));
        }
        rest = &rest - &s.scale(&coeff);
        out.insert(mu, coeff);
    }
    Ok(out)
}

/// Schur expansion of the `t¹` part of `s_λ(x_1, ..., x_n, t)`: the Weyl
/// factors of the degree-one piece of the restriction from `n + 1` to `n`.
///
/// Every `μ` with `μ → λ` and at most `n` rows appears once. Requires
/// `ℓ(λ) ≤ n + 1`.
pub fn branch_r1(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, BigInt>> {
    if lambda.len() > n + 1 {
        return Err(Error::TooManyParts { partition: lambda.clone(), parts: lambda.len(), n: n + 1 });
    }
    let full = schur(lambda, n + 1);
    schur_expand(&full.last_var_coefficient(1))
}

/// Schur expansion of `(x_1 + ... + x_n) · s_λ(x_1, ..., x_n)`.
///
/// Every `μ` with `λ → μ` and at most `n` rows appears once. Requires `ℓ(λ) ≤ n`.
pub fn pieri_mult(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, BigInt>> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { partition: lambda.clone(), parts: lambda.len(), n });
    }
    schur_expand(&(&SymPolynomial::standard(n) * &schur(lambda, n)))
}

/// The matrix of `V ↦ standard ⊗ V` on Weyl characters, from `Λ_d` to
/// `Λ_{d+1}`, with enough variables that no row bound applies.
pub fn pieri_matrix(degree: usize) -> Result<SparseMatrix> {
    let n = degree + 1;
    let cols = partitions_of(degree);
    let rows = partitions_of(degree + 1);
    let index: BTreeMap<&Partition, usize> = rows.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut entries = Vec::new();
    for (c, lambda) in cols.iter().enumerate() {
        for (mu, coeff) in pieri_mult(lambda, n)? {
            entries.push((index[&mu], c, coeff));
        }
    }
    entries.sort_by_key(|e| (e.0, e.1));
    Ok(SparseMatrix { rows, cols, entries })
}

/// Flattens a Schur expansion into a sorted multiset, repeating each
/// partition by its (positive) coefficient.
pub fn as_multiset(expansion: &BTreeMap<Partition, BigInt>) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for (p, c) in expansion {
        let k: u64 =
            c.try_into().map_err(|_| Error::Precondition(format!("coefficient {c} of {p} is not a multiplicity")))?;
        out.extend(std::iter::repeat_n(p.clone(), k as usize));
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}
