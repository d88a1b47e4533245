//! Command-line front-end for `metalie-core`: expression syntax and subcommands.

pub mod commands;
pub mod syntax;

pub use commands::{run, Outcome, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use syntax::{parse_expr, parse_lie, parse_permutation, parse_poly, print_canonical, LieExpr, Pos, SyntaxError};
