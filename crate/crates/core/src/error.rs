use thiserror::Error;

use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: expected 0 or an integer >= 2")]
    InvalidModulus(u32),

    #[error("residue {value} is outside the canonical range [0, {modulus})")]
    ResidueOutOfRange { value: i64, modulus: u32 },

    #[error("residues {left} and {right} carry different moduli")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("malformed partition `{text}`: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("box {cell} is not addable to {partition}")]
    NotAddable { partition: Partition, cell: Cell },

    #[error("box {cell} is not removable from {partition}")]
    NotRemovable { partition: Partition, cell: Cell },

    #[error("{partition} has {parts} parts but only {n} variables/rows are available")]
    TooManyParts { partition: Partition, parts: usize, n: usize },

    #[error("partitions {left} and {right} have different sizes")]
    SizeMismatch { left: Partition, right: Partition },

    #[error("eigenvalue identity failed for {partition} at box {cell}: {detail}")]
    EigenvalueMismatch { partition: Partition, cell: Cell, detail: String },

    #[error("polynomial is not symmetric: leading exponent {0:?} is not a partition")]
    NotSymmetric(Vec<u32>),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("generator {name}{index} is out of range for rank {rank}")]
    GeneratorOutOfRange { name: char, index: usize, rank: usize },

    #[error("expression error at offset {offset}: {reason}")]
    ParseExpression { offset: usize, reason: String },

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
