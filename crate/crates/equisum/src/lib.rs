//! Command-line front end and file formats for `equisum-core`.
//!
//! The binary is `equisum`; see [`cli`] for the subcommands and the exit-code
//! contract. [`format`] holds the canonical JSON schema for partitionings.

pub mod bench;
pub mod cli;
pub mod format;
pub mod render;
