//! Exact arithmetic over finite fields and the invariants built on it:
//! Cartier–Manin data of hyperelliptic curves, mod-p Dieudonné modules,
//! Artin–Schreier translation groups, spaces of logarithmic differentials,
//! symmetric Newton polygons, and Nielsen classes of permutation tuples.

pub mod artin_schreier;
pub mod dieudonne;
pub mod error;
pub mod field;
pub mod hyperelliptic;
pub mod newton;
pub mod nielsen;
pub mod pagot;

pub use error::{Error, Result};
pub use field::{Elem, Field, Matrix, Poly};
