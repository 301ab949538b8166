//! Cayley graphs, mirror di-Cayley graphs and their spectra over finite groups
//! and finite commutative rings.

pub mod algebra;
pub mod error;
pub mod finring;
pub mod graphs;
pub mod par;
pub mod products;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Result};
