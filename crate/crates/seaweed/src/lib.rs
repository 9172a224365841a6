//! Std companion to `seaweed-core`: conjecture sweeps with NDJSON
//! persistence, output formatting, SVG meander rendering, and the pieces
//! of the `seaweed` command-line tool.

pub mod error;
pub mod format;
pub mod svg;
pub mod sweep;

pub use error::{Error, Result};
pub use seaweed_core;
