//! Finite directed categories given as quivers with relations: exact module
//! computations, standard modules and stratification, and generalized APR tilting.
//!
//! Composition is right to left throughout: the word `g*a` means `a` first. Matrices
//! act on column vectors.
#![no_std]

extern crate alloc;

pub mod error;
pub mod exactlin;
pub mod modcat;
pub mod presentation;
pub mod strata;
pub mod tilting;

pub use error::{Error, Result};

#[cfg(test)]
mod fixtures;
