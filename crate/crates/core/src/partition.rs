use std::fmt;

/// A partition of the carrier `{0, .., n-1}` into disjoint classes.
///
/// Canonical form: each class is sorted ascending, its representative is its
/// minimum element, and classes are ordered by representative. Two partitions
/// of the same carrier are equal iff they group elements identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    representative: Vec<usize>,
    class_index: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds the canonical partition grouping elements with equal labels.
    /// `labels[x]` is an arbitrary component id for element `x`.
    pub fn from_labels<L: Eq + std::hash::Hash + Copy>(labels: &[L]) -> Self {
        let mut first_seen = std::collections::HashMap::new();
        let mut class_index = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, label) in labels.iter().enumerate() {
            let idx = *first_seen.entry(*label).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(x);
            class_index.push(idx);
        }
        // Scanning elements in ascending order yields classes already sorted
        // by their minimum element.
        let representative = class_index.iter().map(|&c| classes[c][0]).collect();
        Partition {
            representative,
            class_index,
            classes,
        }
    }

    /// Carrier size.
    pub fn size(&self) -> usize {
        self.representative.len()
    }

    pub fn representative(&self, x: usize) -> usize {
        self.representative[x]
    }

    /// Index into [`Partition::classes`] of the class containing `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_index[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_index[x] == self.class_index[y]
    }
}

/// One class per line, members separated by spaces.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for class in &self.classes {
            let members: Vec<String> = class.iter().map(usize::to_string).collect();
            writeln!(f, "{}", members.join(" "))?;
        }
        Ok(())
    }
}
