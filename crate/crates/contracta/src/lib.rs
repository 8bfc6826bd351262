//! File formats, reports and the command-line front end for `contracta-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use format::{parse_presentation, print_presentation, FormatError};
pub use report::Report;
