//! Specification documents, reports and the command-line front end for `whyd-core`.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;

pub use error::CliError;
pub use report::{emit_report, Format, ReportDocument};
pub use spec::{load, parse, save, SpecDocument, Workspace};
