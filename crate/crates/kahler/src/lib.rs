//! Text front end for `kahler-core`: expression parser, JSON formats,
//! table rendering, verification reports and the command-line driver.

pub mod cli;
pub mod formats;
pub mod parse;
pub mod report;
pub mod tables;
