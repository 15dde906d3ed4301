//! The level-one Fock space: finite integer combinations of basis vectors
//! `v_λ`, acted on by the Chevalley generators `e_i`, `f_i`, `h_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::partition::{m_counts, n_value, partitions_of, Modulus, Partition, Residue};

/// A finite sum `Σ c_λ v_λ` with exact integer coefficients and no stored zeros.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `v_λ`.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn scale(&self, k: &BigInt) -> FockVector {
        if k.is_zero() {
            return FockVector::zero();
        }
        FockVector { terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect() }
    }

    /// `f_i`: add an `i`-box in every possible way.
    pub fn apply_f(&self, i: Residue) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in &self.terms {
            for cell in lambda.addable_cells() {
                if cell.residue(i.modulus()) == i {
                    let mu = lambda.add_cell(cell).expect("addable");
                    out.add_term(mu, c.clone());
                }
            }
        }
        out
    }

    /// `e_i`: remove an `i`-box in every possible way.
    pub fn apply_e(&self, i: Residue) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in &self.terms {
            for cell in lambda.removable_cells() {
                if cell.residue(i.modulus()) == i {
                    let mu = lambda.remove_cell(cell).expect("removable");
                    out.add_term(mu, c.clone());
                }
            }
        }
        out
    }

    /// `h_i`: diagonal, `v_λ ↦ n_i(λ) v_λ`.
    pub fn apply_h(&self, i: Residue) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * BigInt::from(n_value(lambda, i)));
        }
        out
    }

    /// Applies a word of generators, rightmost first.
    pub fn apply_word(&self, word: &[(OpKind, Residue)]) -> FockVector {
        word.iter().rev().fold(self.clone(), |v, &(kind, i)| v.apply(kind, i))
    }

    pub fn apply(&self, kind: OpKind, i: Residue) -> FockVector {
        match kind {
            OpKind::E => self.apply_e(i),
            OpKind::F => self.apply_f(i),
            OpKind::H => self.apply_h(i),
        }
    }
}

pub fn apply_e(v: &FockVector, i: Residue) -> FockVector {
    v.apply_e(i)
}

pub fn apply_f(v: &FockVector, i: Residue) -> FockVector {
    v.apply_f(i)
}

pub fn apply_h(v: &FockVector, i: Residue) -> FockVector {
    v.apply_h(i)
}

impl Add for &FockVector {
    type Output = FockVector;

    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FockVector {
    type Output = FockVector;

    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &FockVector {
    type Output = FockVector;

    fn neg(self) -> FockVector {
        FockVector { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let body: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}·v{p}")).collect();
        f.write_str(&body.join(" + "))
    }
}

/// The affine weight `ω_0 - Σ m_i α_i`, stored as the map `i ↦ m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub modulus: Modulus,
    pub alpha_mult: BTreeMap<i64, u64>,
}

impl Weight {
    /// `⟨wt, h_i⟩` computed from the Cartan matrix: `δ_{i0} - Σ_j a_{ij} m_j`.
    pub fn pairing(&self, i: Residue) -> i64 {
        let delta = i64::from(i.value() == 0);
        delta - self.alpha_mult.iter().map(|(&j, &m)| cartan_entry(self.modulus, i.value(), j) * m as i64).sum::<i64>()
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.alpha_mult.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

pub fn weight(lambda: &Partition, modulus: Modulus) -> Weight {
    Weight { modulus, alpha_mult: m_counts(lambda, modulus) }
}

/// Generalized Cartan matrix entry `a_{ij}` of `sl_∞` (`e = 0`) or affine `sl_e`.
pub fn cartan_entry(modulus: Modulus, i: i64, j: i64) -> i64 {
    let e = modulus.value() as i64;
    let (i, j) = (modulus.reduce(i), modulus.reduce(j));
    if i == j {
        return 2;
    }
    match e {
        0 => {
            if (i - j).abs() == 1 {
                -1
            } else {
                0
            }
        }
        2 => -2,
        _ => {
            if (i - j).rem_euclid(e) == 1 || (j - i).rem_euclid(e) == 1 {
                -1
            } else {
                0
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    E,
    F,
    H,
}

/// A sparse integer matrix whose rows and columns are indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// `(row, col, coeff)`, sorted by `(row, col)`, no zero entries.
    pub entries: Vec<(usize, usize, BigInt)>,
}

impl SparseMatrix {
    /// Builds the matrix of a linear map given by its column images.
    pub fn from_columns(rows: Vec<Partition>, cols: Vec<Partition>, images: Vec<FockVector>) -> Self {
        let index: BTreeMap<&Partition, usize> = rows.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut entries = Vec::new();
        for (c, image) in images.iter().enumerate() {
            for (p, coeff) in image.terms() {
                let r = *index.get(p).expect("image lies in the row space");
                entries.push((r, c, coeff.clone()));
            }
        }
        entries.sort_by_key(|e| (e.0, e.1));
        SparseMatrix { rows, cols, entries }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries: Vec<_> = self.entries.iter().map(|(r, c, x)| (*c, *r, x.clone())).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        SparseMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries }
    }

    /// Entrywise sum; both matrices must share row and column indices.
    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, c, x) in self.entries.iter().chain(&other.entries) {
            *acc.entry((*r, *c)).or_default() += x;
        }
        SparseMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).map(|((r, c), x)| (r, c, x)).collect(),
        }
    }

    pub fn zero(rows: Vec<Partition>, cols: Vec<Partition>) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> BigInt {
        let r = self.rows.iter().position(|p| p == row);
        let c = self.cols.iter().position(|p| p == col);
        match (r, c) {
            (Some(r), Some(c)) => {
                self.entries.iter().find(|e| e.0 == r && e.1 == c).map(|e| e.2.clone()).unwrap_or_default()
            }
            _ => BigInt::zero(),
        }
    }
}

/// Matrix of `e_i`, `f_i` or `h_i` with columns indexed by `Λ_d` and rows by
/// `Λ_{d-1}`, `Λ_{d+1}` or `Λ_d` respectively, both in lexicographically
/// descending order.
pub fn op_matrix(kind: OpKind, i: Residue, degree: usize) -> SparseMatrix {
    let cols = partitions_of(degree);
    let rows = match kind {
        OpKind::E if degree == 0 => Vec::new(),
        OpKind::E => partitions_of(degree - 1),
        OpKind::F => partitions_of(degree + 1),
        OpKind::H => cols.clone(),
    };
    let images: Vec<FockVector> =
        cols.par_iter().map(|lambda| FockVector::basis(lambda.clone()).apply(kind, i)).collect();
    SparseMatrix::from_columns(rows, cols, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn r(v: i64, e: u32) -> Residue {
        Residue::new(v, Modulus::new(e).unwrap()).unwrap()
    }

    fn v(p: Partition) -> FockVector {
        FockVector::basis(p)
    }

    #[test]
    fn f_action() {
        assert_eq!(v(Partition::empty()).apply_f(r(0, 3)), v(partition![1]));
        assert_eq!(v(partition![2]).apply_f(r(2, 3)), &v(partition![3]) + &v(partition![2, 1]));
        assert!(v(partition![2]).apply_f(r(0, 3)).is_zero());
    }

    #[test]
    fn e_action() {
        for i in 0..3 {
            assert!(v(Partition::empty()).apply_e(r(i, 3)).is_zero());
        }
        assert_eq!(v(partition![2, 1]).apply_e(r(2, 3)), v(partition![2]));
        assert_eq!(v(partition![3, 1]).apply_e(r(2, 3)), &v(partition![2, 1]) + &v(partition![3]));
    }

    #[test]
    fn h_action() {
        assert_eq!(v(Partition::empty()).apply_h(r(0, 3)), v(Partition::empty()));
        assert!(v(partition![2, 1]).apply_h(r(2, 3)).is_zero());
        assert_eq!(v(partition![1]).apply_h(r(0, 2)), -&v(partition![1]));
    }

    #[test]
    fn weights() {
        let e3 = Modulus::new(3).unwrap();
        let e2 = Modulus::new(2).unwrap();
        assert!(weight(&Partition::empty(), e3).alpha_mult.is_empty());
        assert_eq!(weight(&partition![2, 1], e3).alpha_mult, BTreeMap::from([(0, 1), (1, 1), (2, 1)]));
        assert_eq!(weight(&partition![2], e2), weight(&partition![1, 1], e2));
        assert_eq!(weight(&partition![2], e2).alpha_mult, BTreeMap::from([(0, 1), (1, 1)]));
    }

    #[test]
    fn matrices() {
        let m = op_matrix(OpKind::F, r(0, 2), 0);
        assert_eq!(m.rows, vec![partition![1]]);
        assert_eq!(m.cols, vec![Partition::empty()]);
        assert_eq!(m.entries, vec![(0, 0, BigInt::one())]);

        let m = op_matrix(OpKind::E, r(2, 3), 3);
        let col = m.cols.iter().position(|p| *p == partition![2, 1]).unwrap();
        let in_col: Vec<_> = m.entries.iter().filter(|e| e.1 == col).collect();
        assert_eq!(in_col.len(), 1);
        assert_eq!(m.rows[in_col[0].0], partition![2]);
        assert_eq!(in_col[0].2, BigInt::one());

        for e in [0, 2, 3, 5] {
            let i = Residue::new(0, Modulus::new(e).unwrap()).unwrap();
            let m = op_matrix(OpKind::H, i, 0);
            assert_eq!(m.entries, vec![(0, 0, BigInt::one())]);
        }
    }

    #[test]
    fn cartan_matrix() {
        let e = |v| Modulus::new(v).unwrap();
        assert_eq!(cartan_entry(e(2), 0, 1), -2);
        assert_eq!(cartan_entry(e(3), 0, 2), -1);
        assert_eq!(cartan_entry(e(5), 0, 2), 0);
        assert_eq!(cartan_entry(e(0), -1, 0), -1);
        assert_eq!(cartan_entry(e(0), 4, 4), 2);
    }
}
