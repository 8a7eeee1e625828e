//! Exact PBW normal forms for the rational double affine Hecke-Clifford
//! algebra, the rational spin double affine Hecke algebra, the rational
//! covering double affine Hecke algebra and the rational Cherednik algebra of
//! classical types A, B, D.

pub mod cdaha;
pub mod clifford;
pub mod dahca;
pub mod dunkl;
pub mod error;
pub mod expr;
pub mod lin;
pub mod pbw;
pub mod poly;
pub mod scalars;
pub mod sdaha;
pub mod spin;
mod text;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
