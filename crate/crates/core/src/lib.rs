//! Restriction of simple algebraic group modules to a principal A1-subgroup.

pub mod a1mod;
pub mod characteristic;
pub mod charalg;
pub mod error;
pub mod ingest;
pub mod jantzen;
pub mod paperdata;
pub mod principal;
pub mod rootsys;
pub mod sweep;

pub use characteristic::Characteristic;
pub use error::{Error, Result};
