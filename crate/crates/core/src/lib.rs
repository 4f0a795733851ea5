//! Exact witnesses for commutators of finite multiplicative order.

pub mod cli;
pub mod error;
pub mod exact;
pub mod rings;
pub mod structure;
pub mod weightset;
pub mod witness;

pub use error::{Error, Result};
