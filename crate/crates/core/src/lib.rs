//! Brauer monoid arithmetic and the quark presentation of its singular part.
//!
//! Elements of the Brauer monoid of rank `n` are perfect matchings on the
//! `2n` points `{1..n} ∪ {1'..n'}` ([`BrauerDiagram`]). The non-invertible
//! elements form a subsemigroup generated by the idempotent *atoms*
//! `σ_{i,j}`, and this crate provides:
//!
//! * [`diagram`]: validated diagrams, chain-composition product, corank,
//!   Green's relations, permutation embedding and exhaustive enumeration
//!   with a perfect ranking.
//! * [`presentation`]: quarks, words, the seven defining relations as
//!   single-step rewrites, the evaluation map `φ`, the anti-involution,
//!   the connected/disjoint normal form, standard idempotents and the
//!   `γ` generators of the group `H₁`.
//! * [`decomposition`]: constructive factorization of any singular diagram
//!   into atoms, and the irreducibility check of the atom set.
//! * [`geodesics`]: exact word lengths by breadth-first search on the
//!   Cayley graph, and the closed-form length of `H₁` elements through their
//!   cyclic decomposition.
//! * [`sequences`]: connected sequences of 2-subsets, their equivalence,
//!   the intersection graph `Γₙ` and the class/path counts.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod combinatorics;
pub mod decomposition;
pub mod diagram;
mod error;
pub mod geodesics;
pub mod presentation;
pub mod sequences;

pub use diagram::{BrauerDiagram, GreenRelation, Point};
pub use error::{Error, Result};
pub use presentation::{Quark, Word};

/// Largest supported rank. Points are stored as `u8` in a fixed array.
pub const MAX_RANK: usize = 16;
