//! Command-line front end for `kforge-core`: an expression parser, the
//! verification suites and the subcommand dispatcher.

pub mod app;
pub mod expr;
pub mod verify;
