//! Group association schemes, Terwilliger algebras and Wedderburn blocks for
//! non-abelian groups with an abelian subgroup of index two.

pub mod abelian;
pub mod arith;
pub mod characters;
pub mod conjugacy;
pub mod cyclotomic;
pub mod error;
pub mod export;
pub mod group;
pub mod linalg;
pub mod scheme;
pub mod wedderburn;

pub use error::{Error, Result};
