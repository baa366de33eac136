//! Regular Turán numbers: the largest edge count of a regular `n`-vertex graph that
//! avoids a fixed pattern `F`.
//!
//! The crate offers explicit constructions with auditable deletion plans, closed-form
//! values for the families where they are known, and an exhaustive search that decides
//! small cases outright.

pub mod cli;
pub mod construct;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod pattern;

pub use construct::{construct_for, ConstructionPlan, ConstructionResult};
pub use formulas::{ex_turan, rex_formula, FormulaConfig, RexStatus, RexValue};
pub use graph::Graph;
pub use oracle::{exists_regular_free, rex_exact, verify_claim, SearchBudget};
pub use pattern::ForbiddenPattern;
