//! Exact-arithmetic homology of the two-step nilpotent Lie algebras
//! `L_H(V) = (H ⊗ V) ⊕ S²(V)` attached to a symplectic vector space `H`,
//! and of the free two-step nilpotent Lie algebra `Lie₂(V) = V ⊕ Λ²V`.
//!
//! The crate builds the Chevalley-Eilenberg complex of each algebra as a
//! weight-graded family of monomial bases, realizes the boundary ∂, its
//! partner ∂*, the Laplacian Δ = ∂*∂ + ∂∂*, and the GL(V)/Sp(H) operators
//! as sparse integer matrices on each weight block, and computes homology
//! two independent ways (Laplacian kernels and ker/im ranks).
//! Decompositions into Sp(H)-modules tensor Schur functors are read off
//! from weight characters by greedy highest-weight peeling.
//!
//! Everything is exact: matrices are over arbitrary-precision integers and
//! eliminations are fraction-free. The crate is `no_std` (with `alloc`);
//! IO, file formats, and parallel drivers live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cecomplex;
pub mod homology;
pub mod matrix;
pub mod partition;
pub mod twostep;
pub mod weightchar;

pub use cecomplex::{ChainBlock, ChainMonomial, Complex, OperatorName, SymplecticBasis};
pub use matrix::{KernelBasis, SparseIntMatrix};
pub use partition::{Dominance, FrobeniusCoords, Partition};
pub use weightchar::{DecompositionReport, GlWeight, SpLabel, SpWeight, WeightCharacter};

pub use homology::{HomologyDims, HomologyError, HomologyResult};
