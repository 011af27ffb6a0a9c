//! File formats, verification suites and the command-line front end for
//! `gzschubert-core`.

pub mod cli;
pub mod formats;
pub mod verify;

pub use gzschubert_core as core;
