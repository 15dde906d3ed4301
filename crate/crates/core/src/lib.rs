//! Exact combinatorics of the level-one Fock space representation.
//!
//! * [`partition`]: Young diagrams, contents and residues, addable and
//!   removable boxes, rim hooks, `e`-cores and `e`-weights.
//! * [`fock`]: the Fock space with the Chevalley generators `e_i`, `f_i`,
//!   `h_i`, weights and operator matrices.
//! * [`casimir`]: Casimir scalars and the `X`/`Y` eigenvalues on Weyl factors.
//! * [`crystal`]: signatures and the crystal operators `ẽ_i`, `f̃_i`.
//! * [`blocks`]: blocks of `Λ_d` and their grouping by `e`-weight.
//! * [`characters`]: Schur polynomials, branching and Pieri expansions.
//! * [`hecke`]: the degenerate affine Hecke algebra in normal form.
//! * [`verify`]: property suites over small ranges.
//! * [`cli`]: the `fockspace` command.
//!
//! All arithmetic is exact; coefficients are arbitrary-precision integers.

pub mod blocks;
pub mod casimir;
pub mod characters;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use fock::{FockVector, OpKind, SparseMatrix, Weight};
pub use hecke::{HeckeElement, Permutation};
pub use partition::{Cell, Modulus, Partition, Residue};
