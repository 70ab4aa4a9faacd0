//! File formats and the command-line front end for `residuemat-core`.

pub mod cli;
pub mod json;
pub mod matrix_text;

pub use json::{ClassificationJson, RealizationJson};
pub use matrix_text::{format_matrix, parse_matrix, MatrixTextError};
