//! Young-diagram combinatorics.
//!
//! Partitions are stored as weakly decreasing positive row lengths and drawn in
//! English notation: row 1 is the top row, column 1 the leftmost column. Boxes
//! are addressed 1-based as `(row, col)`.
//!
//! Every list of boxes returned here is ordered along the rim from bottom left
//! to top right, which is the same as ordering by increasing content.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition.
///
/// The derived ordering is lexicographic on the parts, so `[1,1] < [2]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1, "boxes are 1-based");
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn residue(self, modulus: Modulus) -> Residue {
        Residue::from_content(self.content(), modulus)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `col - row` of a box.
pub fn content(cell: Cell) -> i64 {
    cell.content()
}

/// Content of a box reduced into `[0, e)`, or left alone when `e = 0`.
pub fn residue(cell: Cell, modulus: Modulus) -> Residue {
    cell.residue(modulus)
}

/// The quantum characteristic `e`: either 0 or at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub const ZERO: Modulus = Modulus(0);

    pub fn new(e: u32) -> Result<Self> {
        if e == 1 {
            return Err(Error::InvalidModulus(e));
        }
        Ok(Modulus(e))
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn reduce(self, value: i64) -> i64 {
        if self.0 == 0 {
            value
        } else {
            value.rem_euclid(self.0 as i64)
        }
    }

    /// Residues that can act non-trivially on partitions of size at most `degree`.
    ///
    /// For `e > 0` this is all of `Z/eZ`. For `e = 0` it is the window
    /// `[-degree-1, degree+1]`, which contains the content of every addable or
    /// removable box of such a partition.
    pub fn active_residues(self, degree: usize) -> Vec<Residue> {
        if self.0 == 0 {
            let w = degree as i64 + 1;
            (-w..=w).map(|v| Residue { value: v, modulus: self }).collect()
        } else {
            (0..self.0 as i64).map(|v| Residue { value: v, modulus: self }).collect()
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let e: u32 = s.trim().parse().map_err(|_| Error::Precondition(format!("invalid modulus `{s}`")))?;
        Modulus::new(e)
    }
}

/// An element of `Z/eZ` (or of `Z` when `e = 0`) in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: i64,
    modulus: Modulus,
}

impl Residue {
    /// Rejects values outside `[0, e)` when `e > 0`.
    pub fn new(value: i64, modulus: Modulus) -> Result<Self> {
        let e = modulus.value();
        if e > 0 && !(0..e as i64).contains(&value) {
            return Err(Error::ResidueOutOfRange { value, modulus: e });
        }
        Ok(Residue { value, modulus })
    }

    pub fn from_content(content: i64, modulus: Modulus) -> Self {
        Residue { value: modulus.reduce(content), modulus }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    /// `self + k`, reduced.
    pub fn shift(self, k: i64) -> Residue {
        Residue::from_content(self.value + k, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A rim hook of a partition together with what remains after removing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    /// The boxes of the strip, bottom left to top right.
    pub cells: Vec<Cell>,
    pub remainder: Partition,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ParsePartition { text: fmt_parts(&parts), reason: format!("part {} is zero", pos + 1) });
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::ParsePartition {
                text: fmt_parts(&parts),
                reason: format!("parts {} and {} increase", w + 1, w + 2),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from any sequence, dropping trailing zeros.
    pub(crate) fn from_trusted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: u32) -> u32 {
        if row == 0 {
            return u32::MAX;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-based).
    pub fn col_len(&self, col: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= col).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition::from_trusted((1..=width).map(|c| self.col_len(c)).collect())
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All boxes, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(k, &len)| (1..=len).map(move |l| Cell::new(k as u32 + 1, l)))
    }

    pub fn hook_length(&self, cell: Cell) -> u32 {
        debug_assert!(self.contains(cell));
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Boxes whose addition leaves a partition, bottom left to top right.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let n = self.parts.len() as u32;
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        for k in (1..=n + 1).rev() {
            let len = self.row_len(k);
            if k == 1 || self.row_len(k - 1) > len {
                out.push(Cell::new(k, len + 1));
            }
        }
        out
    }

    /// Boxes whose removal leaves a partition, bottom left to top right.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let n = self.parts.len() as u32;
        (1..=n)
            .rev()
            .filter(|&k| self.row_len(k + 1) < self.row_len(k))
            .map(|k| Cell::new(k, self.row_len(k)))
            .collect()
    }

    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && self.row_len(cell.row) + 1 == cell.col
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row_len(cell.row) == cell.col && self.row_len(cell.row + 1) < cell.col
    }

    pub fn add_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.is_addable(cell) {
            return Err(Error::NotAddable { partition: self.clone(), cell });
        }
        let mut parts = self.parts.clone();
        let k = cell.row as usize - 1;
        if k == parts.len() {
            parts.push(1);
        } else {
            parts[k] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.is_removable(cell) {
            return Err(Error::NotRemovable { partition: self.clone(), cell });
        }
        let mut parts = self.parts.clone();
        parts[cell.row as usize - 1] -= 1;
        Ok(Partition::from_trusted(parts))
    }

    /// Every rim hook of the given length, ordered by the content of its
    /// bottom-left box.
    ///
    /// The rim hook hanging off box `(r, c)` runs along the rim from the end of
    /// row `r` down to the foot of column `c`; it has `hook_length(r, c)` boxes.
    pub fn removable_rim_hooks(&self, length: u32) -> Vec<RimHook> {
        let mut hooks = Vec::new();
        if length == 0 {
            return hooks;
        }
        for cell in self.cells() {
            if self.hook_length(cell) != length {
                continue;
            }
            let top = cell.row;
            let foot = self.col_len(cell.col);
            let mut cells = Vec::with_capacity(length as usize);
            let mut parts = self.parts.clone();
            for k in (top..=foot).rev() {
                let first = if k == foot { cell.col } else { self.row_len(k + 1) };
                for l in first..=self.row_len(k) {
                    cells.push(Cell::new(k, l));
                }
                parts[k as usize - 1] = if k == foot { cell.col - 1 } else { self.row_len(k + 1) - 1 };
            }
            debug_assert_eq!(cells.len(), length as usize);
            hooks.push(RimHook { cells, remainder: Partition::from_trusted(parts) });
        }
        hooks.sort_by_key(|h| h.cells[0].content());
        hooks
    }

    /// `λ_k - λ_{k+1} < e` for every `k`.
    pub fn is_restricted(&self, modulus: Modulus) -> bool {
        let e = modulus.value();
        e == 0 || (1..=self.parts.len() as u32).all(|k| self.row_len(k) - self.row_len(k + 1) < e)
    }
}

fn fmt_parts(parts: &[u32]) -> String {
    let body: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("[{}]", body.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_parts(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::ParsePartition { text: s.to_string(), reason };
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected `[` ... `]`".into()))?;
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| tok.trim().parse::<u32>().map_err(|_| err(format!("bad part `{}`", tok.trim()))))
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::ParsePartition { reason, .. } => err(reason),
            other => other,
        })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples; panics on an invalid sequence.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("valid partition") };
}

/// All partitions of `d`, lexicographically descending.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `d`, by size and then lexicographically descending.
pub fn partitions_up_to(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

/// Number of `i`-boxes of `λ`.
pub fn m_count(lambda: &Partition, i: Residue) -> u64 {
    let e = i.modulus();
    lambda.cells().filter(|c| c.residue(e) == i).count() as u64
}

/// Residue multiplicities of all boxes; zero counts are omitted.
pub fn m_counts(lambda: &Partition, modulus: Modulus) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for c in lambda.cells() {
        *out.entry(c.residue(modulus).value()).or_insert(0) += 1;
    }
    out
}

/// `m_{i-1} + m_{i+1} - 2 m_i + δ_{i0}`.
///
/// For `e = 2` the residues `i - 1` and `i + 1` coincide and the term is
/// counted twice.
pub fn n_value(lambda: &Partition, i: Residue) -> i64 {
    let m = |r: Residue| m_count(lambda, r) as i64;
    let delta = i64::from(i.value() == 0);
    m(i.shift(-1)) + m(i.shift(1)) - 2 * m(i) + delta
}

/// The `e`-core, by repeatedly stripping the first rim `e`-hook.
pub fn p_core(lambda: &Partition, modulus: Modulus) -> Partition {
    let e = modulus.value();
    if e == 0 {
        return lambda.clone();
    }
    let mut current = lambda.clone();
    while let Some(hook) = current.removable_rim_hooks(e).into_iter().next() {
        current = hook.remainder;
    }
    current
}

/// `(|λ| - |core|) / e`, zero for `e = 0`.
pub fn p_weight(lambda: &Partition, modulus: Modulus) -> usize {
    let e = modulus.value() as usize;
    if e == 0 {
        return 0;
    }
    let removed = lambda.size() - p_core(lambda, modulus).size();
    debug_assert_eq!(removed % e, 0);
    removed / e
}

/// The set of partitions reachable as the end of some maximal sequence of rim
/// `e`-hook removals, explored exhaustively.
pub fn terminal_cores(lambda: &Partition, modulus: Modulus) -> BTreeSet<Partition> {
    fn go(lambda: &Partition, e: u32, memo: &mut HashMap<Partition, BTreeSet<Partition>>) -> BTreeSet<Partition> {
        if let Some(hit) = memo.get(lambda) {
            return hit.clone();
        }
        let hooks = lambda.removable_rim_hooks(e);
        let result = if hooks.is_empty() {
            BTreeSet::from([lambda.clone()])
        } else {
            let mut acc = BTreeSet::new();
            for h in hooks {
                acc.extend(go(&h.remainder, e, memo));
            }
            acc
        };
        memo.insert(lambda.clone(), result.clone());
        result
    }
    let e = modulus.value();
    if e == 0 {
        return BTreeSet::from([lambda.clone()]);
    }
    go(lambda, e, &mut HashMap::new())
}
