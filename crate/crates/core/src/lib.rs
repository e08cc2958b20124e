pub mod arith;
pub mod census;
pub mod cli;
pub mod error;
pub mod moduli;
pub mod record;
pub mod signatures;
pub mod superelliptic;
pub mod uniqueness;

pub use error::{Error, Result};
