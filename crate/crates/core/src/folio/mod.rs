//! First-order formulas over `{+, ·, 0, 1, <}` with the defined predicates
//! π₁, π₂, ϱ, σ, `|` and `≤`: parsing, printing, the axiom catalog, and a
//! bounded three-valued evaluator over ℕ, 𝒞(ℤ[X]) and 𝒞(ℚ_ℤ[X]).

mod ast;
mod catalog;
mod eval;
mod models;
mod parse;
mod pretty;
mod structure;

pub use ast::{Formula, Pred, Term, MAX_NUMERAL};
pub use catalog::{axiom_catalog, definition, lookup, names, Entry};
pub use eval::{
    check_structure, eval_bounded, eval_term, verify, AxiomReport, Binding, Cert, CheckOptions, EvalConfig,
    EvalError, Evaluator, Outcome, Refutation, StructureReport,
};
pub use models::{QzStructure, ZxStructure};
pub use parse::{parse, parse_term, ParseError};
pub use pretty::{pretty, pretty_ascii, pretty_term, pretty_with, Style};
pub use structure::{NatStructure, Structure, TriBool};
