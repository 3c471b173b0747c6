//! File formats and command implementations behind the `connpart` binary.

pub mod commands;
pub mod format;
