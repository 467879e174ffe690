//! Command-line front end and file formats for `quandle-core`.

pub mod cli;
pub mod formats;
