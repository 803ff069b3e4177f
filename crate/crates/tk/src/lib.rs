//! File formats, reports and verification suites for the `tk` command.

pub mod commands;
pub mod dot;
pub mod format;
pub mod guard;
pub mod report;
pub mod sample;
