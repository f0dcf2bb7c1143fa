//! Command-line front end for `mellin-gamma`: argument parsing, knot-file
//! input, JSON/CSV/plain output with 17 significant digits, and the
//! invariant self-test.

pub mod command;
pub mod format;
pub mod knots;
pub mod selftest;

pub use command::{run, Outcome};
