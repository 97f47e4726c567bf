//! Command implementations for the `qwalk` binary, exposed as a library so
//! the acceptance and integration suites drive them in-process.

pub mod cache;
pub mod commands;
pub mod invariant;
pub mod report;
pub mod verify;

pub use commands::{
    cmd_convert, cmd_invariant, cmd_iso, cmd_scan, read_family, CommandError, ConvertTarget,
    ScanOptions,
};
pub use invariant::{InvariantConfig, InvariantKind};
pub use report::ScanReport;
pub use verify::{cmd_verify, VerifyReport};
