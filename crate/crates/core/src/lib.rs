//! Finite relation algebra over `{0, .., n-1}`.
//!
//! * [`relation`]: packed bit-matrix relations with meet, join, complement,
//!   Heyting residual, composition, converse and reflexive-transitive closure.
//! * [`laws`]: a catalogue of relation-algebra laws and an exhaustive /
//!   randomized finite model checker with counterexample witnesses.
//! * [`scc`]: strongly connected components computed relationally through
//!   the starth root `R ∩ (R⌣)*`, plus condensation into a DAG.
//! * [`oracle`]: independent reference algorithms used for cross-checking.
//! * [`format`]: edge-list documents and DOT export.

pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod laws;
pub mod oracle;
pub mod partition;
pub mod relation;
pub mod scc;

pub use error::{EquivalenceProperty, Error, Result};
pub use graph::{graph_from_relation, relation_from_graph, Graph};
pub use laws::{CheckConfig, Law, LawId, LawReport, Mode, Outcome, Verdict};
pub use partition::Partition;
pub use relation::Relation;
pub use scc::{condense, scc_equivalence, starth_root, CondensationDag};
