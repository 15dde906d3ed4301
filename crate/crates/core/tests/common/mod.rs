//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the library's algorithms beyond the `Partition`
//! container itself, so agreement with the library is real evidence.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use fockspace::hecke::{HeckeElement, Permutation};
use fockspace::{Cell, Partition};

pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

// ---------------------------------------------------------------------------
// Cores on the abacus

/// `e`-core and `e`-weight from β-numbers: slide every bead up its runner.
pub fn abacus_core(lambda: &Partition, e: u32) -> (Partition, usize) {
    if e == 0 {
        return (lambda.clone(), 0);
    }
    let l = lambda.len();
    let beads: Vec<usize> = lambda.parts().iter().enumerate().map(|(k, &p)| p as usize + l - (k + 1)).collect();
    let e = e as usize;
    let mut per_runner = vec![0usize; e];
    for &b in &beads {
        per_runner[b % e] += 1;
    }
    let mut pushed: Vec<usize> = Vec::new();
    for (r, &count) in per_runner.iter().enumerate() {
        pushed.extend((0..count).map(|k| r + k * e));
    }
    pushed.sort_unstable_by(|a, b| b.cmp(a));
    let moved = (beads.iter().sum::<usize>() - pushed.iter().sum::<usize>()) / e;
    let parts: Vec<u32> = pushed.iter().enumerate().map(|(k, &b)| (b + k + 1 - l) as u32).filter(|&p| p > 0).collect();
    (Partition::new(parts).expect("abacus gives a partition"), moved)
}

// ---------------------------------------------------------------------------
// Rim hooks by exhaustive search over box subsets

fn is_partition_shape(rows: &[u32]) -> bool {
    rows.windows(2).all(|w| w[0] >= w[1])
}

/// Every rim `e`-hook, found by trying all `e`-subsets of boxes: the subset
/// must be edge-connected, contain no 2×2 square, and leave a partition.
pub fn brute_rim_hook_remainders(lambda: &Partition, e: u32) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    let cells: Vec<Cell> = lambda.cells().collect();
    let e = e as usize;
    if e == 0 || e > cells.len() {
        return out;
    }
    let mut chosen = Vec::with_capacity(e);
    subsets(&cells, e, 0, &mut chosen, &mut |subset| {
        let set: BTreeSet<(u32, u32)> = subset.iter().map(|c| (c.row, c.col)).collect();
        // leaves a partition: removed boxes form a suffix of each row
        let mut rows: Vec<u32> = lambda.parts().to_vec();
        for (r, c) in &set {
            rows[*r as usize - 1] = rows[*r as usize - 1].min(*c - 1);
        }
        let removed: usize = lambda.size() - rows.iter().map(|&x| x as usize).sum::<usize>();
        if removed != set.len() || !is_partition_shape(&rows) {
            return;
        }
        if set
            .iter()
            .any(|&(r, c)| set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1)))
        {
            return;
        }
        if !connected(&set) {
            return;
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        out.insert(Partition::new(rows).expect("checked shape"));
    });
    out
}

fn subsets(cells: &[Cell], k: usize, from: usize, chosen: &mut Vec<Cell>, f: &mut dyn FnMut(&[Cell])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for idx in from..cells.len() {
        if cells.len() - idx < k - chosen.len() {
            break;
        }
        chosen.push(cells[idx]);
        subsets(cells, k, idx + 1, chosen, f);
        chosen.pop();
    }
}

fn connected(set: &BTreeSet<(u32, u32)>) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((r, c)) = stack.pop() {
        let nbrs = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
        for n in nbrs {
            if set.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == set.len()
}

/// Every partition reachable by removing rim hooks until none is left.
pub fn brute_terminal_cores(lambda: &Partition, e: u32) -> BTreeSet<Partition> {
    let next = brute_rim_hook_remainders(lambda, e);
    if next.is_empty() {
        return BTreeSet::from([lambda.clone()]);
    }
    next.iter().flat_map(|mu| brute_terminal_cores(mu, e)).collect()
}

// ---------------------------------------------------------------------------
// Box enumeration

pub fn residue_of(cell: Cell, e: u32) -> i64 {
    let c = cell.col as i64 - cell.row as i64;
    if e == 0 {
        c
    } else {
        c.rem_euclid(e as i64)
    }
}

/// Addable minus removable boxes of residue `i`.
pub fn ladder_count(lambda: &Partition, i: i64, e: u32) -> i64 {
    let mut n = 0;
    for r in 1..=lambda.len() as u32 + 1 {
        let len = lambda.row_len(r);
        let above = if r == 1 { u32::MAX } else { lambda.row_len(r - 1) };
        if len < above && residue_of(Cell { row: r, col: len + 1 }, e) == i {
            n += 1;
        }
        if len > 0 && lambda.row_len(r + 1) < len && residue_of(Cell { row: r, col: len }, e) == i {
            n -= 1;
        }
    }
    n
}

pub fn with_box_added(lambda: &Partition) -> Vec<Partition> {
    let mut rows = lambda.parts().to_vec();
    rows.push(0);
    let mut out = Vec::new();
    for r in 0..rows.len() {
        if r == 0 || rows[r] < rows[r - 1] {
            let mut next = rows.clone();
            next[r] += 1;
            while next.last() == Some(&0) {
                next.pop();
            }
            out.push(Partition::new(next).expect("addable"));
        }
    }
    out
}

pub fn with_box_removed(lambda: &Partition) -> Vec<Partition> {
    let rows = lambda.parts();
    let mut out = Vec::new();
    for r in 0..rows.len() {
        if r + 1 == rows.len() || rows[r] > rows[r + 1] {
            let mut next = rows.to_vec();
            next[r] -= 1;
            while next.last() == Some(&0) {
                next.pop();
            }
            out.push(Partition::new(next).expect("removable"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomials with small integer coefficients

pub type Poly = BTreeMap<Vec<u32>, i128>;

pub fn poly_add_into(acc: &mut Poly, p: &Poly, k: i128) {
    for (m, c) in p {
        let slot = acc.entry(m.clone()).or_insert(0);
        *slot += c * k;
        if *slot == 0 {
            acc.remove(m);
        }
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            poly_add_into(&mut out, &Poly::from([(m, 1)]), ca * cb);
        }
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_k` in `n` variables.
pub fn complete_h(k: i64, n: usize) -> Poly {
    let mut out = Poly::new();
    if k < 0 {
        return out;
    }
    fn go(rest: u32, idx: usize, cur: &mut Vec<u32>, out: &mut Poly) {
        if idx + 1 == cur.len() {
            cur[idx] = rest;
            out.insert(cur.clone(), 1);
            return;
        }
        for a in 0..=rest {
            cur[idx] = a;
            go(rest - a, idx + 1, cur, out);
        }
    }
    if n == 0 {
        if k == 0 {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    go(k as u32, 0, &mut vec![0; n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i128 {
    let inv = (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `s_λ(x_1, ..., x_n) = det(h_{λ_i - i + j})` by the Leibniz formula.
pub fn jacobi_trudi(lambda: &Partition, n: usize) -> Poly {
    let l = lambda.len();
    let parts = lambda.parts();
    let mut out = Poly::new();
    for p in permutations(l) {
        let mut term = complete_h(0, n);
        for i in 0..l {
            let k = parts[i] as i64 - i as i64 + p[i] as i64;
            term = poly_mul(&term, &complete_h(k, n));
            if term.is_empty() {
                break;
            }
        }
        poly_add_into(&mut out, &term, sign(&p));
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomial representations of the degenerate affine Hecke algebra
//
// `y_j` acts by multiplication by `x_j` and `τ_i` by `ε s_i - ∂_i`, where `s_i`
// swaps `x_i, x_{i+1}` and `∂_i` is the divided difference. Both signs `ε = ±1`
// satisfy the defining relations.

fn swap_exps(m: &[u32], i: usize) -> Vec<u32> {
    let mut s = m.to_vec();
    s.swap(i - 1, i);
    s
}

fn divided_difference(p: &Poly, i: usize) -> Poly {
    let mut out = Poly::new();
    for (m, &c) in p {
        let (a, b) = (m[i - 1], m[i]);
        if a == b {
            continue;
        }
        let (hi, lo, sgn) = if a > b { (a, b, 1) } else { (b, a, -1) };
        for k in 0..hi - lo {
            let mut t = m.clone();
            t[i - 1] = lo + (hi - lo - 1 - k);
            t[i] = lo + k;
            poly_add_into(&mut out, &Poly::from([(t, 1)]), c * sgn);
        }
    }
    out
}

fn act_tau(p: &Poly, i: usize, eps: i128) -> Poly {
    let mut out = Poly::new();
    for (m, &c) in p {
        poly_add_into(&mut out, &Poly::from([(swap_exps(m, i), 1)]), c * eps);
    }
    poly_add_into(&mut out, &divided_difference(p, i), -1);
    out
}

fn act_permutation(p: &Poly, w: &Permutation, eps: i128) -> Poly {
    let mut cur = p.clone();
    for &i in w.reduced_word().iter().rev() {
        cur = act_tau(&cur, i, eps);
    }
    cur
}

/// The image of `h` acting on `p`.
pub fn hecke_act(h: &HeckeElement, p: &Poly, eps: i128) -> Poly {
    let mut out = Poly::new();
    for (basis, c) in h.terms() {
        let c: i128 = c.try_into().expect("small coefficient");
        let moved = act_permutation(p, &basis.permutation, eps);
        let shifted = poly_mul(&Poly::from([(basis.exponents.clone(), 1)]), &moved);
        poly_add_into(&mut out, &shifted, c);
    }
    out
}

/// Monomials of total degree at most `d` in `n` variables, as test vectors.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Poly> {
    (0..=d as i64).flat_map(|k| complete_h(k, n).into_keys()).map(|m| Poly::from([(m, 1)])).collect()
}
