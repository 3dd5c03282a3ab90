//! Strongly connected components as relation algebra.
//!
//! For an edge relation `R`, two nodes are strongly connected iff they are
//! related by `R* ∩ (R*)⌣`. That equivalence has the starth root
//! `R ∩ (R⌣)*`: an edge `u → v` is kept iff `v` can get back to `u`, and the
//! closure of the kept edges is exactly the SCC equivalence.

use std::collections::BTreeSet;

use crate::error::{EquivalenceProperty, Error, Result};
use crate::partition::Partition;
use crate::relation::Relation;

/// `R ∩ (R⌣)*`: the edges of `R` that lie on a cycle.
pub fn starth_root(r: &Relation) -> Relation {
    r.meet(&r.converse().star())
        .expect("operands share the carrier")
}

/// The mutual-reachability equivalence `R* ∩ (R*)⌣`.
///
/// Debug builds also compute `(R ∩ (R⌣)*)*` and assert the two agree.
pub fn scc_equivalence(r: &Relation) -> Relation {
    let closure = r.star();
    let equivalence = closure
        .meet(&closure.converse())
        .expect("operands share the carrier");
    debug_assert_eq!(
        starth_root(r).star(),
        equivalence,
        "starth root closure disagrees with R* ∩ (R*)⌣ for R = {r}"
    );
    equivalence
}

/// Checks reflexivity, symmetry and transitivity in that order, reporting
/// the first property that fails.
pub fn check_equivalence(e: &Relation) -> Result<(), EquivalenceProperty> {
    let n = e.size();
    let identity = Relation::identity(n).expect("size taken from a relation");
    if !identity.is_subset(e).expect("same carrier") {
        return Err(EquivalenceProperty::Reflexive);
    }
    if e.converse() != *e {
        return Err(EquivalenceProperty::Symmetric);
    }
    if !e
        .compose(e)
        .and_then(|ee| ee.is_subset(e))
        .expect("same carrier")
    {
        return Err(EquivalenceProperty::Transitive);
    }
    Ok(())
}

pub fn is_equivalence(e: &Relation) -> bool {
    check_equivalence(e).is_ok()
}

/// Classes of an equivalence relation in canonical [`Partition`] form.
pub fn equivalence_classes(e: &Relation) -> Result<Partition> {
    check_equivalence(e).map_err(Error::NotAnEquivalence)?;
    let n = e.size();
    let mut labels = vec![usize::MAX; n];
    for x in 0..n {
        if labels[x] != usize::MAX {
            continue;
        }
        for y in e.successors(x) {
            labels[y] = x;
        }
    }
    Ok(Partition::from_labels(&labels))
}

/// Quotient of a relation by its SCC partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensationDag {
    pub partition: Partition,
    /// Pairs of class indices `(i, j)`, `i ≠ j`, with some edge from class
    /// `i` to class `j` in the source relation.
    pub edges: BTreeSet<(usize, usize)>,
}

impl CondensationDag {
    /// The edge set as a relation over class indices.
    pub fn quotient(&self) -> Relation {
        Relation::from_pairs(self.partition.class_count(), self.edges.iter().copied())
            .expect("class indices are in range and there is at least one class")
    }

    /// `Q* ∩ (Q*)⌣ ⊆ I` on the quotient `Q`.
    pub fn is_acyclic(&self) -> bool {
        let q = self.quotient();
        let identity = Relation::identity(q.size()).expect("non-empty quotient");
        scc_equivalence(&q)
            .is_subset(&identity)
            .expect("same carrier")
    }
}

/// Decomposes `r` into its strongly connected components and the acyclic
/// graph between them.
pub fn condense(r: &Relation) -> CondensationDag {
    let partition =
        equivalence_classes(&scc_equivalence(r)).expect("SCC relation is an equivalence");
    let edges = r
        .pairs()
        .map(|(a, b)| (partition.class_of(a), partition.class_of(b)))
        .filter(|(i, j)| i != j)
        .collect();
    let dag = CondensationDag { partition, edges };
    debug_assert!(dag.is_acyclic(), "condensation has a cycle");
    dag
}
