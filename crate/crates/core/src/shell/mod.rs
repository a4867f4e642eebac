//! Catalog, text formats, reports and the command-line front end.

pub mod catalog;
pub mod claimed;
pub mod cli;
pub mod graphio;
pub mod parse;
pub mod report;
pub mod verify;
pub mod witnesses;
