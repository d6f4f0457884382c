//! The script DSL: declarations for theories, spaces, bundles, embeddings
//! and orientation pairs; commands `eval`, `push`, `pull`, `assert`,
//! `check`; deterministic JSON reports.

pub mod ast;
pub mod parse;
pub mod run;

pub use ast::{Cmd, Decl, Item, Script};
pub use parse::{parse, ParseCode, ParseError};
pub use run::{run, run_text, Flags, Report, ResultEntry};
