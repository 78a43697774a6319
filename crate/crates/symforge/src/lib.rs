//! File formats, reports and the command line for `symforge-core`.

pub mod cli;
pub mod formats;
pub mod report;
