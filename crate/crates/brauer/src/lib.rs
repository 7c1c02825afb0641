//! File formats, parallel drivers and the command-line front end for
//! [`brauer_core`].

pub mod cache;
pub mod cli;
mod error;
pub mod json;
pub mod parallel;
pub mod verify;

pub use error::{Error, Result};
