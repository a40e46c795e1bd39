//! Files, census tables, the verification battery and the command line for
//! `kluniform-core`.

pub mod catalog;
pub mod census;
pub mod cli;
mod error;
pub mod format;
pub mod memo;
pub mod verify;

pub use error::{Error, Result};
