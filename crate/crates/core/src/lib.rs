//! Exact-arithmetic invariants of Legendrian links presented by contact
//! surgery diagrams, tight contact structure counts on thickened tori, and
//! the classification tables for Legendrian Hopf links built from them.

pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod exact;
pub mod selfcheck;
pub mod slopes;
pub mod surgery;

pub use error::{Error, Result};
