//! Library side of the `bicc` command: checks, reports, input parsing and
//! dot output.

pub mod checks;
pub mod dot;
pub mod input;
pub mod report;
