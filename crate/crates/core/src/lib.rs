//! Exact computations in the derived and orbit categories of Dynkin path
//! algebras: silting objects, simple-minded collections, simple-minded
//! systems and cluster-tilting objects, together with the exceptional
//! mutations relating them.
//!
//! The crate is `no_std` (it needs `alloc`). IO, parallel search and the
//! command line live in the `silting` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod derived;
pub mod error;
pub mod exceptional;
pub mod field;
pub mod linalg;
pub mod orbit;
pub mod quiver_rep;
pub mod root_data;
pub mod witness;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
