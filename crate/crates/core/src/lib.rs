#![cfg_attr(not(test), no_std)]
//! Purely inseparable extensions of rational function fields over `F_p`:
//! towers, cotangent complexes, restricted Lie algebroids and the
//! inseparable Galois correspondence.

extern crate alloc;

mod error;
pub mod funcfield;
pub mod linalg;
pub mod tower;
pub mod cotangent;
pub mod algebroid;
pub mod random;
pub mod galois;

pub use error::{Error, Result};
