//! Formulas, antecedent structures, sequents and their ASCII syntax.

mod formula;
mod parse;
mod structure;

pub use formula::{BinaryMode, Formula, UnaryMode};
pub use parse::{parse_formula, print_formula, ParseError};
pub use structure::{canonical_sequent, Label, Sequent, SequentKey, Site, Structure};
