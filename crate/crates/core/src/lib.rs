//! Invariant (co)homology of groups with a group action.
//!
//! Everything here is exact: abelian groups are finite presentations over the
//! integers, all normal forms are computed with arbitrary-precision arithmetic,
//! and every isomorphism that the library reports has been established by an
//! explicit integer matrix calculation, never by counting or hashing.
//!
//! The main entry points:
//!
//! * [`finitegroup`] — multiplication-table groups, actions by automorphisms,
//!   semidirect products, quotients.
//! * [`abelian`] — integer matrices, Smith/Hermite normal forms, finitely
//!   presented abelian groups and their homomorphisms.
//! * [`barcomplex`] — bar complexes, the invariant subcomplex of a group
//!   action, ordinary and invariant homology, and the comparison maps between
//!   them.
//! * [`qgmod`] — modules carrying compatible actions of two groups, the
//!   invariant cochain complexes built from them, and equivariant derivations.
//! * [`extensions`] — equivariant factor sets and classification of group
//!   extensions with abelian kernel.
//! * [`h1`] — the weighed orbit abelianization and the orbit group, the two
//!   degree-one models.
//! * [`laurent`] — exact Laurent-polynomial arithmetic and the periodic
//!   resolution for the sign action on the infinite cyclic group.
//!
//! The crate is `no_std` (alloc only); all IO lives in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod abelian;
pub mod barcomplex;
mod error;
pub mod extensions;
pub mod finitegroup;
pub mod h1;
pub mod laurent;
pub mod qgmod;

pub use error::{Error, Result};
