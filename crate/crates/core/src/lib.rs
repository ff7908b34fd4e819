//! Exact computer algebra for a family of twisted W-algebra characters,
//! their classical-limit screening operators, and the rank-1 Virasoro
//! structure of Fock modules.
//!
//! Everything here is computed over exact fields (arbitrary-precision
//! rationals and univariate rational functions); there are no floats and no
//! modular shortcuts. The crate is `no_std` + `alloc` so the algebra layer
//! stays free of platform concerns; IO and orchestration live in the
//! companion CLI crate.
//!
//! Module map:
//! - [`field`]: rationals, the `Field` abstraction, univariate rational
//!   functions in one formal parameter (the level `kappa`, alias `gamma`).
//! - [`linalg`]: sparse exact matrices, reduced echelon form, rank,
//!   canonical nullspace bases.
//! - [`rootsys`]: finite root-system data (rank <= 4), Weyl groups, pairings.
//! - [`qseries`]: truncated power series in `q`, Euler products.
//! - [`characters`]: graded and twisted character formulas, duality checks.
//! - [`fock`]: colored Fock monomial bases and rank-1 boson mode actions.
//! - [`screening`]: classical screening operators, Serre/commutator checks,
//!   joint kernel dimensions.
//! - [`virasoro`]: Virasoro modes on rank-1 Fock spaces, singular vectors,
//!   Shapovalov forms.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod characters;
pub mod field;
pub mod fock;
pub mod linalg;
pub mod qseries;
pub mod rootsys;
pub mod screening;
pub mod virasoro;
