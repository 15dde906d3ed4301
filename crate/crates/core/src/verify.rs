//! Exhaustive and seeded property checks over small ranges.
//!
//! Every check returns the number of instances it examined, or a concrete
//! counterexample. Suites bundle checks and are what `fockspace verify` runs.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::blocks;
use crate::casimir::{casimir_scalar, casimir_scalar_of_tuple, x_eigenvalue, y_eigenvalue};
use crate::characters::{branch_r1, pieri_matrix, pieri_mult, schur};
use crate::crystal::{crystal_graph, e_tilde, epsilon, f_tilde, phi, reduced_signature, Sign, Signature};
use crate::fock::{cartan_entry, op_matrix, weight, FockVector, OpKind, SparseMatrix};
use crate::hecke::{verify_relations, HeckeElement, Permutation};
use crate::partition::{
    n_value, p_core, p_weight, partitions_of, partitions_up_to, terminal_cores, Cell, Modulus, Partition,
};

/// Instances examined, or the first counterexample.
pub type CheckResult = Result<u64, String>;

pub const DEFAULT_SEED: u64 = 0x5EED_F0C5;

fn v(p: &Partition) -> FockVector {
    FockVector::basis(p.clone())
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

// ---------------------------------------------------------------------------
// Kac–Moody relations on the Fock space

/// `(e_i f_j - f_j e_i) v_λ = δ_{ij} n_i(λ) v_λ`.
pub fn check_commutator(e: Modulus, max_size: usize) -> CheckResult {
    let residues = e.active_residues(max_size + 1);
    let lambdas = partitions_up_to(max_size);
    let counts: Vec<CheckResult> = lambdas
        .par_iter()
        .map(|lambda| {
            let base = v(lambda);
            let mut n = 0;
            for &i in &residues {
                let e_i = base.apply_e(i);
                for &j in &residues {
                    let lhs = &base.apply_f(j).apply_e(i) - &e_i.apply_f(j);
                    let rhs = if i == j { base.apply_h(i) } else { FockVector::zero() };
                    if lhs != rhs {
                        return Err(format!("λ={lambda} i={i} j={j}: [e_i,f_j]v = {lhs:?}, expected {rhs:?}"));
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    counts.into_iter().sum()
}

/// `f_i v_λ` has weight `wt(λ) - α_i` and `e_i v_λ` has weight `wt(λ) + α_i`.
pub fn check_weight_ladder(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for lambda in partitions_up_to(max_size) {
        let base = weight(&lambda, e);
        for i in e.active_residues(max_size + 1) {
            let mut down = base.alpha_mult.clone();
            *down.entry(i.value()).or_insert(0) += 1;
            for (mu, _) in v(&lambda).apply_f(i).terms() {
                if weight(mu, e).alpha_mult != down {
                    return Err(format!("f_{i} v{lambda} has a term v{mu} of the wrong weight"));
                }
                n += 1;
            }
            let mut up = base.alpha_mult.clone();
            let has_box = up.get_mut(&i.value()).map(|m| *m -= 1).is_some();
            up.retain(|_, m| *m > 0);
            for (mu, _) in v(&lambda).apply_e(i).terms() {
                if !has_box {
                    return Err(format!("e_{i} v{lambda} is nonzero but λ has no {i}-box"));
                }
                if weight(mu, e).alpha_mult != up {
                    return Err(format!("e_{i} v{lambda} has a term v{mu} of the wrong weight"));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `n_i(λ)` equals `⟨wt(λ), h_i⟩` computed from the Cartan matrix.
pub fn check_cartan_pairing(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for lambda in partitions_up_to(max_size) {
        let wt = weight(&lambda, e);
        for i in e.active_residues(max_size + 1) {
            let (direct, paired) = (n_value(&lambda, i), wt.pairing(i));
            if direct != paired {
                return Err(format!("λ={lambda} i={i}: n_i = {direct}, ⟨wt, h_i⟩ = {paired}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// `[h_i, e_j] = a_{ij} e_j` and `[h_i, f_j] = -a_{ij} f_j` on every `v_λ`.
pub fn check_cartan_action(e: Modulus, max_size: usize) -> CheckResult {
    let residues = e.active_residues(max_size + 1);
    let mut n = 0;
    for lambda in partitions_up_to(max_size) {
        let base = v(&lambda);
        for &i in &residues {
            for &j in &residues {
                let a = BigInt::from(cartan_entry(e, i.value(), j.value()));
                let ej = base.apply_e(j);
                let lhs = &ej.apply_h(i) - &base.apply_h(i).apply_e(j);
                if lhs != ej.scale(&a) {
                    return Err(format!("λ={lambda}: [h_{i}, e_{j}] v = {lhs:?}, expected {a}·e_{j} v"));
                }
                let fj = base.apply_f(j);
                let lhs = &fj.apply_h(i) - &base.apply_h(i).apply_f(j);
                if lhs != fj.scale(&-a.clone()) {
                    return Err(format!("λ={lambda}: [h_{i}, f_{j}] v = {lhs:?}, expected -{a}·f_{j} v"));
                }
                n += 2;
            }
        }
    }
    Ok(n)
}

/// `Σ_k (-1)^k C(N,k) x_i^{N-k} x_j x_i^k v_λ = 0` with `N = 1 - a_{ij}`, for
/// `x = e` and `x = f` and every `i ≠ j`.
pub fn check_serre(e: Modulus, max_size: usize) -> CheckResult {
    let residues = e.active_residues(max_size + 1);
    let lambdas = partitions_up_to(max_size);
    let counts: Vec<CheckResult> = lambdas
        .par_iter()
        .map(|lambda| {
            let base = v(lambda);
            let mut n = 0;
            for &i in &residues {
                for &j in &residues {
                    if i == j {
                        continue;
                    }
                    let big_n = (1 - cartan_entry(e, i.value(), j.value())) as u32;
                    for kind in [OpKind::E, OpKind::F] {
                        let mut total = FockVector::zero();
                        for k in 0..=big_n {
                            let mut word = vec![(kind, i); (big_n - k) as usize];
                            word.push((kind, j));
                            word.extend(std::iter::repeat_n((kind, i), k as usize));
                            let sign = if k % 2 == 0 { 1 } else { -1 };
                            let term = base.apply_word(&word).scale(&BigInt::from(sign * binomial(big_n, k)));
                            total = &total + &term;
                        }
                        if !total.is_zero() {
                            return Err(format!("λ={lambda} {kind:?} i={i} j={j}: Serre sum = {total:?}"));
                        }
                        n += 1;
                    }
                }
            }
            Ok(n)
        })
        .collect();
    counts.into_iter().sum()
}

/// `f_i^N v_λ = 0` for `N` one more than the number of addable `i`-boxes, and
/// `f_i^{N-1} v_λ ≠ 0`.
pub fn check_integrability(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for lambda in partitions_up_to(max_size) {
        for i in e.active_residues(max_size + 1) {
            let addable = lambda.addable_cells().iter().filter(|c| c.residue(e) == i).count();
            let mut w = v(&lambda);
            for _ in 0..addable {
                w = w.apply_f(i);
            }
            if w.is_zero() {
                return Err(format!("λ={lambda} i={i}: f_i^{addable} v_λ vanished early"));
            }
            if !w.apply_f(i).is_zero() {
                return Err(format!("λ={lambda} i={i}: f_i^{} v_λ ≠ 0", addable + 1));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// The matrix of `e_i` from degree `d + 1` is the transpose of that of `f_i` from degree `d`.
pub fn check_transpose(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for d in 0..max_size {
        for i in e.active_residues(d + 1) {
            let f = op_matrix(OpKind::F, i, d);
            let em = op_matrix(OpKind::E, i, d + 1);
            if em != f.transpose() {
                return Err(format!("degree {d} residue {i}: [E] is not [F]ᵀ"));
            }
            n += 1;
        }
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Crystal

/// Partial inverse, string lengths and `φ_i - ε_i = n_i`, plus the fact that
/// `f̃_i λ` occurs in `f_i v_λ` with coefficient 1.
pub fn check_crystal_axioms(e: Modulus, max_size: usize) -> CheckResult {
    let residues = e.active_residues(max_size + 1);
    let lambdas = partitions_up_to(max_size);
    let counts: Vec<CheckResult> = lambdas
        .par_iter()
        .map(|lambda| {
            let mut n = 0;
            for &i in &residues {
                if let Some(mu) = f_tilde(lambda, i) {
                    if e_tilde(&mu, i).as_ref() != Some(lambda) {
                        return Err(format!("ẽ_{i} f̃_{i} {lambda} ≠ {lambda}"));
                    }
                    if v(lambda).apply_f(i).coeff(&mu) != BigInt::from(1) {
                        return Err(format!("v{mu} does not occur once in f_{i} v{lambda}"));
                    }
                }
                if let Some(mu) = e_tilde(lambda, i) {
                    if f_tilde(&mu, i).as_ref() != Some(lambda) {
                        return Err(format!("f̃_{i} ẽ_{i} {lambda} ≠ {lambda}"));
                    }
                }
                let eps = epsilon(lambda, i);
                let mut steps = 0;
                let mut cur = lambda.clone();
                while let Some(next) = e_tilde(&cur, i) {
                    cur = next;
                    steps += 1;
                }
                if steps != eps {
                    return Err(format!("λ={lambda} i={i}: ε = {eps} but the ẽ-string has length {steps}"));
                }
                let ph = phi(lambda, i);
                let mut steps = 0;
                let mut cur = lambda.clone();
                while let Some(next) = f_tilde(&cur, i) {
                    cur = next;
                    steps += 1;
                }
                if steps != ph {
                    return Err(format!("λ={lambda} i={i}: φ = {ph} but the f̃-string has length {steps}"));
                }
                if ph as i64 - eps as i64 != n_value(lambda, i) {
                    return Err(format!(
                        "λ={lambda} i={i}: φ - ε = {} but n_i = {}",
                        ph as i64 - eps as i64,
                        n_value(lambda, i)
                    ));
                }
                n += 1;
            }
            Ok(n)
        })
        .collect();
    counts.into_iter().sum()
}

/// All results of cancelling adjacent `+-` pairs in every possible order.
fn reduce_all_orders(word: &[Sign]) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut any = false;
    for k in 0..word.len().saturating_sub(1) {
        if word[k] == Sign::Plus && word[k + 1] == Sign::Minus {
            any = true;
            let mut shorter = word.to_vec();
            shorter.drain(k..k + 2);
            out.extend(reduce_all_orders(&shorter));
        }
    }
    if !any {
        out.insert(word.iter().map(|s| if *s == Sign::Plus { '+' } else { '-' }).collect());
    }
    out
}

/// Every `±` word up to `max_len` reduces to a single word regardless of the
/// cancellation order, and the stack scan finds it.
pub fn check_signature_confluence(max_len: usize) -> CheckResult {
    let mut n = 0;
    for len in 0..=max_len {
        for mask in 0u32..(1 << len) {
            let signs: Vec<Sign> =
                (0..len).map(|k| if mask >> k & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
            let results = reduce_all_orders(&signs);
            let sig = Signature {
                symbols: signs.iter().enumerate().map(|(k, &s)| (s, Cell::new(1, k as u32 + 1))).collect(),
            };
            let scanned = reduced_signature(&sig).to_string();
            if results.len() != 1 || !results.contains(&scanned) {
                return Err(format!("word {sig}: orders give {results:?}, stack scan gives {scanned}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// The component of `∅` in the crystal graph: everything when `e = 0`, the
/// `e`-restricted partitions otherwise.
pub fn check_crystal_component(e: Modulus, max_size: usize) -> CheckResult {
    let g = crystal_graph(e, max_size);
    let reached = g.reachable_from_empty();
    for node in &g.nodes {
        let expected = node.partition.is_restricted(e);
        if reached.contains(&node.partition) != expected {
            return Err(format!(
                "{} is {}reachable from ∅ but {}e-restricted",
                node.partition,
                if expected { "not " } else { "" },
                if expected { "" } else { "not " }
            ));
        }
    }
    for edge in &g.edges {
        if edge.dst.size() != edge.src.size() + 1 {
            return Err(format!("edge {} -> {} skips a degree", edge.src, edge.dst));
        }
    }
    Ok(g.nodes.len() as u64)
}

// ---------------------------------------------------------------------------
// Cores and blocks

/// Weight equality ⟺ core equality on every pair in `Λ_d`; for `e = 0` the
/// weight map is injective on `Λ_d`.
pub fn check_block_theorem(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for d in 0..=max_size {
        let lambdas = partitions_of(d);
        let wts: Vec<_> = lambdas.iter().map(|l| weight(l, e)).collect();
        let cores: Vec<_> = lambdas.iter().map(|l| p_core(l, e)).collect();
        for a in 0..lambdas.len() {
            for b in 0..lambdas.len() {
                if (wts[a] == wts[b]) != (cores[a] == cores[b]) {
                    return Err(format!(
                        "{} and {}: weights {}equal, cores {}equal",
                        lambdas[a],
                        lambdas[b],
                        if wts[a] == wts[b] { "" } else { "not " },
                        if cores[a] == cores[b] { "" } else { "not " }
                    ));
                }
                if e.is_zero() && a != b && wts[a] == wts[b] {
                    return Err(format!("{} and {} share a weight for e = 0", lambdas[a], lambdas[b]));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Blocks partition `Λ_d`, carry their members' weight, and have a constant `e`-weight.
pub fn check_block_structure(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for d in 0..=max_size {
        let bs = blocks(d, e);
        let total: usize = bs.iter().map(|b| b.members.len()).sum();
        if total != partitions_of(d).len() {
            return Err(format!("degree {d}: blocks cover {total} partitions"));
        }
        for b in &bs {
            if e.is_zero() && b.members.len() != 1 {
                return Err(format!("degree {d}: block of {} is not a singleton for e = 0", b.core));
            }
            if !e.is_zero() && b.p_weight * e.value() as usize + b.core.size() != d {
                return Err(format!("degree {d}: block of {} has p-weight {}", b.core, b.p_weight));
            }
            for m in &b.members {
                if p_core(m, e) != b.core || weight(m, e) != b.weight || p_weight(m, e) != b.p_weight {
                    return Err(format!("{m} does not match its block (core {})", b.core));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Every maximal sequence of rim `e`-hook removals ends at `p_core(λ, e)`.
pub fn check_core_well_defined(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for lambda in partitions_up_to(max_size) {
        let ends = terminal_cores(&lambda, e);
        let core = p_core(&lambda, e);
        if ends.len() != 1 || !ends.contains(&core) {
            return Err(format!("{lambda}: removal sequences end at {ends:?}, greedy core {core}"));
        }
        if !core.removable_rim_hooks(e.value()).is_empty() && !e.is_zero() {
            return Err(format!("{lambda}: greedy core {core} still has a rim hook"));
        }
        n += 1;
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Casimir

/// `c_{n+1}(λ) - c_n(λ - b) = 2(λ_ℓ - ℓ) + |λ| + n` for every removable box
/// `b = (ℓ, λ_ℓ)` and `n ∈ {|λ|, ..., |λ| + 3}`; zero padding does not change `c_n`.
pub fn check_casimir_identity(max_size: usize) -> CheckResult {
    let mut n_checked = 0;
    for lambda in partitions_up_to(max_size) {
        let k = lambda.size();
        for n in k.max(lambda.len())..=k + 3 {
            for cell in lambda.removable_cells() {
                let mu = lambda.remove_cell(cell).expect("removable");
                let lhs = casimir_scalar(&lambda, n + 1).map_err(|e| e.to_string())?
                    - casimir_scalar(&mu, n).map_err(|e| e.to_string())?;
                let l = cell.row as i64;
                let rhs = 2 * (lambda.row_len(cell.row) as i64 - l) + k as i64 + n as i64;
                if lhs != rhs {
                    return Err(format!("λ={lambda} box {cell} n={n}: {lhs} ≠ {rhs}"));
                }
                n_checked += 1;
            }
            let mut padded: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
            padded.resize(n, 0);
            if casimir_scalar_of_tuple(&padded) != casimir_scalar(&lambda, n).map_err(|e| e.to_string())? {
                return Err(format!("λ={lambda} n={n}: padded tuple gives a different scalar"));
            }
        }
    }
    Ok(n_checked)
}

/// `X` and `Y` eigenvalues equal the residues of the boxes, for every allowed `n`.
pub fn check_eigenvalues(e: Modulus, max_size: usize) -> CheckResult {
    let mut n_checked = 0;
    for lambda in partitions_up_to(max_size) {
        let k = lambda.size();
        for n in k.max(1)..=k + 3 {
            for cell in lambda.removable_cells() {
                let got = x_eigenvalue(&lambda, cell, n, e).map_err(|err| err.to_string())?;
                if got != cell.residue(e) {
                    return Err(format!("λ={lambda} n={n}: X on V(λ - {cell}) is {got}"));
                }
                n_checked += 1;
            }
            if n > k {
                for cell in lambda.addable_cells() {
                    let got = y_eigenvalue(&lambda, cell, n, e).map_err(|err| err.to_string())?;
                    if got != cell.residue(e) {
                        return Err(format!("λ={lambda} n={n}: Y on V(λ + {cell}) is {got}"));
                    }
                    n_checked += 1;
                }
            }
        }
    }
    Ok(n_checked)
}

/// Splitting `[F]` by `Y`-eigenvalue recovers `f_j`: for each `j`, the boxes
/// with eigenvalue `j` are exactly the addable `j`-boxes, so `Σ_j` over those
/// reproduces `op_matrix(F, j)`.
pub fn check_eigenspace_split(e: Modulus, max_size: usize) -> CheckResult {
    let mut n = 0;
    for d in 0..max_size {
        for j in e.active_residues(d + 1) {
            let cols = partitions_of(d);
            let rows = partitions_of(d + 1);
            let images: Vec<FockVector> = cols
                .iter()
                .map(|lambda| {
                    let mut out = FockVector::zero();
                    for cell in lambda.addable_cells() {
                        let eig = y_eigenvalue(lambda, cell, d + 1, e).expect("identity");
                        if eig == j {
                            out.add_term(lambda.add_cell(cell).expect("addable"), BigInt::from(1));
                        }
                    }
                    out
                })
                .collect();
            let split = SparseMatrix::from_columns(rows, cols, images);
            if split != op_matrix(OpKind::F, j, d) {
                return Err(format!("degree {d}: Y-eigenspace {j} of [F] differs from [F_{j}]"));
            }
            n += 1;
        }
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Characters

/// `s_λ(x_1..x_n)|_{x_n = 0} = s_λ(x_1..x_{n-1})` and symmetry of every `s_λ`.
pub fn check_schur_stability(max_size: usize, max_vars: usize) -> CheckResult {
    let mut n_checked = 0;
    for lambda in partitions_up_to(max_size) {
        for n in 1..=max_vars {
            let s = schur(&lambda, n);
            if !s.is_symmetric() {
                return Err(format!("s{lambda} in {n} variables is not symmetric"));
            }
            if lambda.len() < n && s.restrict_last_var() != schur(&lambda, n - 1) {
                return Err(format!("s{lambda}: restricting {n} → {} variables is unstable", n - 1));
            }
            n_checked += 1;
        }
    }
    Ok(n_checked)
}

fn as_set(expansion: BTreeMap<Partition, BigInt>, label: &str) -> Result<BTreeSet<Partition>, String> {
    let mut out = BTreeSet::new();
    for (p, c) in expansion {
        if c != BigInt::from(1) {
            return Err(format!("{label}: {p} has multiplicity {c}"));
        }
        out.insert(p);
    }
    Ok(out)
}

/// Branching and Pieri expansions agree with removing/adding one box.
pub fn check_branching_and_pieri(max_size: usize, max_vars: usize) -> CheckResult {
    let mut n_checked = 0;
    for lambda in partitions_up_to(max_size) {
        for n in 1..=max_vars {
            if lambda.len() <= n + 1 {
                let label = format!("branch {lambda} n={n}");
                let got = as_set(branch_r1(&lambda, n).map_err(|e| e.to_string())?, &label)?;
                let expected: BTreeSet<Partition> = lambda
                    .removable_cells()
                    .into_iter()
                    .map(|c| lambda.remove_cell(c).expect("removable"))
                    .filter(|mu| mu.len() <= n)
                    .collect();
                if got != expected {
                    return Err(format!("{label}: {got:?} ≠ {expected:?}"));
                }
                n_checked += 1;
            }
            if lambda.len() <= n {
                let label = format!("pieri {lambda} n={n}");
                let got = as_set(pieri_mult(&lambda, n).map_err(|e| e.to_string())?, &label)?;
                let expected: BTreeSet<Partition> = lambda
                    .addable_cells()
                    .into_iter()
                    .map(|c| lambda.add_cell(c).expect("addable"))
                    .filter(|mu| mu.len() <= n)
                    .collect();
                if got != expected {
                    return Err(format!("{label}: {got:?} ≠ {expected:?}"));
                }
                n_checked += 1;
            }
        }
    }
    Ok(n_checked)
}

/// `Σ_i [F_i]` on `Λ_d` equals the Pieri matrix.
pub fn check_pieri_matrix(e: Modulus, max_degree: usize) -> CheckResult {
    for d in 0..=max_degree {
        let total = e
            .active_residues(d)
            .into_iter()
            .map(|i| op_matrix(OpKind::F, i, d))
            .reduce(|a, b| a.add(&b))
            .expect("at least one residue");
        let pieri = pieri_matrix(d).map_err(|err| err.to_string())?;
        if total != pieri {
            return Err(format!("degree {d}: Σ_i [F_i] differs from the Pieri matrix"));
        }
    }
    Ok(max_degree as u64 + 1)
}

// ---------------------------------------------------------------------------
// Hecke algebra

pub fn check_hecke_relations(ranks: &[usize]) -> CheckResult {
    let mut n = 0;
    for &rank in ranks {
        for check in verify_relations(rank) {
            if !check.passed {
                return Err(format!("rank {rank} {}: {}", check.name, check.counterexample.unwrap_or_default()));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn random_basis_element(rng: &mut ChaCha8Rng, rank: usize, max_degree: u32) -> HeckeElement {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; rank];
    for _ in 0..degree {
        exps[rng.gen_range(0..rank)] += 1;
    }
    let perms = Permutation::all(rank);
    let w = perms[rng.gen_range(0..perms.len())].clone();
    let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    HeckeElement::basis(exps, w, BigInt::from(c))
}

/// `(a·b)·c = a·(b·c)` on seeded random basis elements of ranks 2..=4 with
/// `y`-degree at most 3; also checks the degree filtration on each product.
pub fn check_hecke_associativity(seed: u64, triples: usize) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..triples {
        let rank = 2 + t % 3;
        let a = random_basis_element(&mut rng, rank, 3);
        let b = random_basis_element(&mut rng, rank, 3);
        let c = random_basis_element(&mut rng, rank, 3);
        let ab = a.multiply(&b).expect("rank");
        let bc = b.multiply(&c).expect("rank");
        let left = ab.multiply(&c).expect("rank");
        let right = a.multiply(&bc).expect("rank");
        if left != right {
            return Err(format!("({a:?})·({b:?})·({c:?}): {left:?} ≠ {right:?}"));
        }
        if ab.y_degree() > a.y_degree() + b.y_degree() {
            return Err(format!("deg(({a:?})·({b:?})) = {} exceeds the sum", ab.y_degree()));
        }
    }
    Ok(triples as u64)
}

/// `w · y^a` straightened along every reduced word of `w` gives one answer,
/// for all `w ∈ S_rank` and exponents up to `max_exp`.
pub fn check_reduced_word_independence(rank: usize, max_exp: u32) -> CheckResult {
    let mut n = 0;
    let mut exps = vec![0u32; rank];
    loop {
        let y = HeckeElement::basis(exps.clone(), Permutation::identity(rank), BigInt::from(1));
        for w in Permutation::all(rank) {
            let words = w.reduced_words();
            let first = y.left_mul_word(&words[0]);
            for word in &words[1..] {
                if y.left_mul_word(word) != first {
                    return Err(format!("w={w:?} y^{exps:?}: words {:?} and {word:?} disagree", words[0]));
                }
                n += 1;
            }
            let direct = HeckeElement::basis(vec![0; rank], w.clone(), BigInt::from(1)).multiply(&y).expect("rank");
            if direct != first {
                return Err(format!("w={w:?} y^{exps:?}: multiply disagrees with straightening"));
            }
        }
        // next exponent vector in base max_exp + 1
        let mut k = 0;
        while k < rank && exps[k] == max_exp {
            exps[k] = 0;
            k += 1;
        }
        if k == rank {
            break;
        }
        exps[k] += 1;
    }
    Ok(n)
}

/// Products inside `Z[y]` or inside `Z S_n` never produce cross terms.
pub fn check_hecke_embeddings(rank: usize, max_exp: u32) -> CheckResult {
    let mut n = 0;
    let perms = Permutation::all(rank);
    for w in &perms {
        for u in &perms {
            let prod = HeckeElement::basis(vec![0; rank], w.clone(), BigInt::from(1))
                .multiply(&HeckeElement::basis(vec![0; rank], u.clone(), BigInt::from(1)))
                .expect("rank");
            let expected = HeckeElement::basis(vec![0; rank], w.compose(u), BigInt::from(1));
            if prod != expected {
                return Err(format!("{w:?}·{u:?} = {prod:?}"));
            }
            n += 1;
        }
    }
    let monomials: Vec<Vec<u32>> = (0..rank)
        .flat_map(|k| {
            (0..=max_exp).map(move |p| {
                let mut e = vec![0; rank];
                e[k] = p;
                e
            })
        })
        .collect();
    for a in &monomials {
        for b in &monomials {
            let id = Permutation::identity(rank);
            let prod = HeckeElement::basis(a.clone(), id.clone(), BigInt::from(1))
                .multiply(&HeckeElement::basis(b.clone(), id.clone(), BigInt::from(1)))
                .expect("rank");
            let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if prod != HeckeElement::basis(sum, id, BigInt::from(1)) {
                return Err(format!("y^{a:?}·y^{b:?} = {prod:?}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Suites

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Blocks,
    Casimir,
    Characters,
    Crystal,
    Hecke,
    KacMoody,
    Serre,
}

impl Suite {
    /// Sorted by name.
    pub const ALL: [Suite; 7] =
        [Suite::Blocks, Suite::Casimir, Suite::Characters, Suite::Crystal, Suite::Hecke, Suite::KacMoody, Suite::Serre];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Blocks => "blocks",
            Suite::Casimir => "casimir",
            Suite::Characters => "characters",
            Suite::Crystal => "crystal",
            Suite::Hecke => "hecke",
            Suite::KacMoody => "kacmoody",
            Suite::Serre => "serre",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().copied().find(|s| s.name() == name).map(|s| vec![s])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParameters {
    pub modulus: u32,
    pub max_size: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub parameters: SuiteParameters,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    /// Drops wall-clock timings so that the report is reproducible byte for byte.
    pub fn without_timings(mut self) -> Self {
        for s in &mut self.suites {
            s.elapsed_ms = None;
        }
        self
    }
}

type Check<'a> = (&'static str, Box<dyn Fn() -> CheckResult + Send + Sync + 'a>);

fn suite_checks(suite: Suite, e: Modulus, d: usize, seed: u64) -> Vec<Check<'static>> {
    match suite {
        Suite::KacMoody => vec![
            ("commutator", Box::new(move || check_commutator(e, d))),
            ("weight_ladder", Box::new(move || check_weight_ladder(e, d))),
            ("cartan_pairing", Box::new(move || check_cartan_pairing(e, d))),
            ("integrability", Box::new(move || check_integrability(e, d))),
            ("transpose", Box::new(move || check_transpose(e, d))),
        ],
        Suite::Serre => vec![
            ("cartan_action", Box::new(move || check_cartan_action(e, d))),
            ("serre", Box::new(move || check_serre(e, d))),
        ],
        Suite::Crystal => vec![
            ("axioms", Box::new(move || check_crystal_axioms(e, d))),
            ("confluence", Box::new(|| check_signature_confluence(10))),
            ("component_of_empty", Box::new(move || check_crystal_component(e, d))),
        ],
        Suite::Blocks => vec![
            ("weight_iff_core", Box::new(move || check_block_theorem(e, d))),
            ("structure", Box::new(move || check_block_structure(e, d))),
            ("core_well_defined", Box::new(move || check_core_well_defined(e, d))),
        ],
        Suite::Casimir => vec![
            ("branching_identity", Box::new(move || check_casimir_identity(d))),
            ("eigenvalues", Box::new(move || check_eigenvalues(e, d))),
            ("eigenspace_split", Box::new(move || check_eigenspace_split(e, d.min(6)))),
        ],
        Suite::Characters => vec![
            ("stability", Box::new(move || check_schur_stability(d.min(6), 4))),
            ("branching_pieri", Box::new(move || check_branching_and_pieri(d.min(6), 4))),
            ("pieri_matrix", Box::new(move || check_pieri_matrix(e, d.min(6)))),
        ],
        Suite::Hecke => vec![
            ("relations", Box::new(|| check_hecke_relations(&[2, 3, 4]))),
            ("associativity", Box::new(move || check_hecke_associativity(seed, 100))),
            ("reduced_words", Box::new(|| check_reduced_word_independence(3, 2))),
            ("embeddings", Box::new(|| check_hecke_embeddings(3, 3))),
        ],
    }
}

/// Runs one suite; the first failing check supplies the counterexample.
pub fn run_suite(suite: Suite, e: Modulus, max_size: usize, seed: u64) -> SuiteOutcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut counterexample = None;
    for (name, check) in suite_checks(suite, e, max_size, seed) {
        match check() {
            Ok(n) => checked += n,
            Err(cx) => {
                counterexample = Some(format!("{name}: {cx}"));
                break;
            }
        }
    }
    SuiteOutcome {
        name: suite.name(),
        parameters: SuiteParameters { modulus: e.value(), max_size, seed },
        passed: counterexample.is_none(),
        checked,
        counterexample,
        elapsed_ms: Some(start.elapsed().as_millis()),
    }
}

/// Runs the suites in parallel; the report lists them sorted by name, once each.
pub fn verify(suites: &[Suite], e: Modulus, max_size: usize, seed: u64) -> VerifyReport {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    VerifyReport { suites: suites.par_iter().map(|&s| run_suite(s, e, max_size, seed)).collect() }
}
