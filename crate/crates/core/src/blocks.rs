//! Block decomposition of `Λ_d` by `e`-core, and grouping of blocks by `e`-weight.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{weight, Weight};
use crate::partition::{p_core, partitions_of, Modulus, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    #[serde(serialize_with = "ser_modulus")]
    pub modulus: Modulus,
    pub degree: usize,
    pub core: Partition,
    /// Lexicographically descending.
    pub members: Vec<Partition>,
    pub weight: Weight,
    pub p_weight: usize,
}

fn ser_modulus<S: serde::Serializer>(m: &Modulus, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u32(m.value())
}

/// Classes of `Λ_d` with a common `e`-core, sorted by core (lexicographically
/// descending). Each block carries the weight of its first member.
pub fn blocks(degree: usize, modulus: Modulus) -> Vec<Block> {
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in partitions_of(degree) {
        by_core.entry(p_core(&lambda, modulus)).or_default().push(lambda);
    }
    by_core
        .into_iter()
        .rev()
        .map(|(core, members)| {
            let p_weight = match modulus.value() {
                0 => 0,
                e => (degree - core.size()) / e as usize,
            };
            Block { modulus, degree, weight: weight(&members[0], modulus), core, members, p_weight }
        })
        .collect()
}

pub fn same_block(lambda: &Partition, mu: &Partition, modulus: Modulus) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.clone(), right: mu.clone() });
    }
    Ok(p_core(lambda, modulus) == p_core(mu, modulus))
}

/// Blocks of `Λ_d` grouped by `e`-weight, in increasing weight.
pub fn derived_equivalence_classes(degree: usize, modulus: Modulus) -> Result<Vec<Vec<Block>>> {
    group_by_weight(blocks(degree, modulus), modulus)
}

/// Like [`derived_equivalence_classes`] but pools blocks of every degree up to
/// `max_degree`.
pub fn derived_equivalence_classes_up_to(max_degree: usize, modulus: Modulus) -> Result<Vec<Vec<Block>>> {
    group_by_weight((0..=max_degree).flat_map(|d| blocks(d, modulus)).collect(), modulus)
}

fn group_by_weight(all: Vec<Block>, modulus: Modulus) -> Result<Vec<Vec<Block>>> {
    if modulus.is_zero() {
        return Err(Error::Precondition("derived equivalence classes need a modulus e >= 2".into()));
    }
    let mut groups: BTreeMap<usize, Vec<Block>> = BTreeMap::new();
    for b in all {
        groups.entry(b.p_weight).or_default().push(b);
    }
    Ok(groups.into_values().collect())
}
