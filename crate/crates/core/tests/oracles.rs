//! The library against independent reference implementations.

mod common;

use std::collections::BTreeSet;

use common::*;
use fockspace::characters::{branch_r1, pieri_mult, schur};
use fockspace::crystal::f_tilde;
use fockspace::fock::weight;
use fockspace::hecke::{HeckeElement, Permutation};
use fockspace::partition::{n_value, p_core, p_weight, partitions_of, partitions_up_to, terminal_cores};
use fockspace::{FockVector, Modulus, Residue};
use num_bigint::BigInt;

fn m(e: u32) -> Modulus {
    Modulus::new(e).unwrap()
}

#[test]
fn enumeration_matches_box_adding() {
    // Λ_{d+1} is exactly the set of one-box extensions of Λ_d.
    for d in 0..10 {
        let grown: BTreeSet<_> = partitions_of(d).iter().flat_map(with_box_added).collect();
        let listed: BTreeSet<_> = partitions_of(d + 1).into_iter().collect();
        assert_eq!(grown, listed, "degree {}", d + 1);
    }
}

#[test]
fn cores_match_abacus() {
    for e in [2, 3, 4, 5] {
        for lambda in partitions_up_to(10) {
            let (core, w) = abacus_core(&lambda, e);
            assert_eq!(p_core(&lambda, m(e)), core, "{lambda} e={e}");
            assert_eq!(p_weight(&lambda, m(e)), w, "{lambda} e={e}");
        }
    }
}

#[test]
fn rim_hooks_match_subset_search() {
    for lambda in partitions_up_to(8) {
        for len in 1..=5 {
            let got: BTreeSet<_> = lambda.removable_rim_hooks(len).into_iter().map(|h| h.remainder).collect();
            assert_eq!(got, brute_rim_hook_remainders(&lambda, len), "{lambda} length {len}");
        }
    }
}

#[test]
fn rim_hook_cells_are_the_difference() {
    for lambda in partitions_up_to(8) {
        for len in 1..=4 {
            for hook in lambda.removable_rim_hooks(len) {
                let inner: BTreeSet<_> = hook.remainder.cells().collect();
                let diff: Vec<_> = lambda.cells().filter(|c| !inner.contains(c)).collect();
                let mut cells = hook.cells.clone();
                cells.sort();
                let mut diff_sorted = diff.clone();
                diff_sorted.sort();
                assert_eq!(cells, diff_sorted, "{lambda} length {len}");
                assert!(hook.cells.windows(2).all(|w| w[0].content() < w[1].content()));
            }
        }
    }
}

#[test]
fn terminal_cores_match_exhaustive_search() {
    for e in [2, 3] {
        for lambda in partitions_up_to(8) {
            let brute = brute_terminal_cores(&lambda, e);
            assert_eq!(terminal_cores(&lambda, m(e)), brute, "{lambda} e={e}");
            assert_eq!(brute, BTreeSet::from([abacus_core(&lambda, e).0]), "{lambda} e={e}");
        }
    }
}

#[test]
fn block_theorem_against_abacus() {
    // weights from residue counts, cores from the abacus: no shared code path
    for e in [2, 3, 5] {
        for d in 0..=10 {
            let lambdas = partitions_of(d);
            let wts: Vec<_> = lambdas.iter().map(|l| weight(l, m(e))).collect();
            let cores: Vec<_> = lambdas.iter().map(|l| abacus_core(l, e).0).collect();
            for a in 0..lambdas.len() {
                for b in a..lambdas.len() {
                    assert_eq!(wts[a] == wts[b], cores[a] == cores[b], "{} {} e={e}", lambdas[a], lambdas[b]);
                }
            }
        }
    }
}

#[test]
fn n_value_is_addable_minus_removable() {
    for e in [0, 2, 3, 5] {
        for lambda in partitions_up_to(9) {
            for i in m(e).active_residues(10) {
                assert_eq!(n_value(&lambda, i), ladder_count(&lambda, i.value(), e), "{lambda} i={i} e={e}");
            }
        }
    }
}

#[test]
fn chevalley_generators_by_box_enumeration() {
    for e in [0, 2, 3] {
        for lambda in partitions_up_to(7) {
            for i in m(e).active_residues(8) {
                let v = FockVector::basis(lambda.clone());
                let mut f = FockVector::zero();
                for mu in with_box_added(&lambda) {
                    let cell = mu.cells().find(|c| !lambda.contains(*c)).unwrap();
                    if residue_of(cell, e) == i.value() {
                        f.add_term(mu, BigInt::from(1));
                    }
                }
                let mut ee = FockVector::zero();
                for mu in with_box_removed(&lambda) {
                    let cell = lambda.cells().find(|c| !mu.contains(*c)).unwrap();
                    if residue_of(cell, e) == i.value() {
                        ee.add_term(mu, BigInt::from(1));
                    }
                }
                assert_eq!(v.apply_f(i), f, "f_{i} on {lambda}, e={e}");
                assert_eq!(v.apply_e(i), ee, "e_{i} on {lambda}, e={e}");
                let h = FockVector::basis(lambda.clone()).scale(&BigInt::from(ladder_count(&lambda, i.value(), e)));
                assert_eq!(v.apply_h(i), h, "h_{i} on {lambda}, e={e}");
            }
        }
    }
}

#[test]
fn schur_matches_jacobi_trudi() {
    for lambda in partitions_up_to(5) {
        for n in 1..=4 {
            let s = schur(&lambda, n);
            let got: Poly = s.terms().map(|(mono, c)| (mono.clone(), i128::try_from(c).unwrap())).collect();
            assert_eq!(got, jacobi_trudi(&lambda, n), "s_{lambda} in {n} variables");
        }
    }
}

#[test]
fn branching_and_pieri_multisets_match_box_enumeration() {
    for lambda in partitions_up_to(6) {
        for n in 1..=4 {
            if lambda.len() <= n + 1 {
                let mut got: Vec<_> = branch_r1(&lambda, n)
                    .unwrap()
                    .into_iter()
                    .flat_map(|(mu, c)| std::iter::repeat_n(mu, usize::try_from(c).unwrap()))
                    .collect();
                got.sort();
                let mut expected: Vec<_> = with_box_removed(&lambda).into_iter().filter(|mu| mu.len() <= n).collect();
                expected.sort();
                assert_eq!(got, expected, "branch {lambda} n={n}");
            }
            if lambda.len() <= n {
                let mut got: Vec<_> = pieri_mult(&lambda, n)
                    .unwrap()
                    .into_iter()
                    .flat_map(|(mu, c)| std::iter::repeat_n(mu, usize::try_from(c).unwrap()))
                    .collect();
                got.sort();
                let mut expected: Vec<_> = with_box_added(&lambda).into_iter().filter(|mu| mu.len() <= n).collect();
                expected.sort();
                assert_eq!(got, expected, "pieri {lambda} n={n}");
            }
        }
    }
}

#[test]
fn crystal_successor_keeps_fewer_addable_boxes() {
    for e in [0, 2, 3, 5] {
        for lambda in partitions_up_to(9) {
            for i in m(e).active_residues(10) {
                let addable = |p: &fockspace::Partition| -> BTreeSet<_> {
                    p.addable_cells().into_iter().filter(|c| residue_of(*c, e) == i.value()).collect()
                };
                if let Some(mu) = f_tilde(&lambda, i) {
                    assert!(addable(&mu).is_subset(&addable(&lambda)), "{lambda} -> {mu}, i={i}");
                }
            }
        }
    }
}

fn sample_elements(rank: usize) -> Vec<HeckeElement> {
    let mut out = Vec::new();
    for w in Permutation::all(rank) {
        for k in 0..rank {
            let mut exps = vec![0; rank];
            exps[k] = (k % 3) as u32;
            exps[(k + 1) % rank] += 1;
            out.push(HeckeElement::basis(exps, w.clone(), BigInt::from(1 + k as i64)));
        }
    }
    out
}

#[test]
fn hecke_product_respects_polynomial_representations() {
    for rank in [2, 3] {
        let elems = sample_elements(rank);
        let vectors = monomials_up_to(rank, 2);
        for a in &elems {
            for b in elems.iter().step_by(3) {
                let ab = a.multiply(b).unwrap();
                for eps in [1, -1] {
                    for p in &vectors {
                        let lhs = hecke_act(&ab, p, eps);
                        let rhs = hecke_act(a, &hecke_act(b, p, eps), eps);
                        assert_eq!(lhs, rhs, "rank {rank}: ({a:?})·({b:?}) on {p:?}, ε={eps}");
                    }
                }
            }
        }
    }
}

#[test]
fn polynomial_representation_satisfies_cross_relation() {
    // sanity check on the oracle itself: τ_i y_{i+1} - y_i τ_i acts as 1
    let rank = 3;
    for eps in [1, -1] {
        for p in monomials_up_to(rank, 3) {
            for i in 1..rank {
                let lhs = HeckeElement::tau(i, rank)
                    .unwrap()
                    .multiply(&HeckeElement::y(i + 1, rank).unwrap())
                    .unwrap()
                    .sub(&HeckeElement::y(i, rank).unwrap().multiply(&HeckeElement::tau(i, rank).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(hecke_act(&lhs, &p, eps), p);
            }
        }
    }
}

#[test]
fn residues_reject_out_of_range() {
    assert!(Residue::new(3, m(3)).is_err());
    assert!(Residue::new(-1, m(3)).is_err());
    assert!(Residue::new(-7, Modulus::ZERO).is_ok());
}
