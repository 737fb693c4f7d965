//! Library side of the `heegner` binary: configuration, record serialization
//! and the subcommands, usable from tests without spawning a process.

pub mod commands;
pub mod config;
pub mod record;
pub mod selftest;

pub use config::{Format, RunConfig};
pub use record::{Emitter, Record, Status, SCHEMA_VERSION};
