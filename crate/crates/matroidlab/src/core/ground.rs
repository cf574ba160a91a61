use std::collections::HashSet;

use crate::core::Subset;
use crate::error::{Error, Result};

/// Hard default for the ground-set size guard. Every algorithm here is
/// exponential, so this is a correctness feature, not a suggestion.
pub const DEFAULT_MAX_ELEMENTS: usize = 20;

/// Absolute cap imposed by the 32-bit subset encoding.
pub const ABSOLUTE_MAX_ELEMENTS: usize = 32;

/// A labeled ground set. Index `i` and `labels[i]` are in bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<GroundSet> {
        Self::with_limit(labels, DEFAULT_MAX_ELEMENTS)
    }

    pub fn with_limit(labels: Vec<String>, max_elements: usize) -> Result<GroundSet> {
        let max = max_elements.min(ABSOLUTE_MAX_ELEMENTS);
        if labels.len() > max {
            return Err(Error::Resource(format!(
                "ground set has {} elements, guard is {max}",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::Domain(format!("duplicate element label {l:?}")));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.size())
    }

    /// Renders a subset as its sorted label list.
    pub fn label_set(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn subset_of_labels(&self, labels: &[String]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            match self.index_of(l) {
                Some(i) => s = s.with(i),
                None => return Err(Error::Domain(format!("unknown element label {l:?}"))),
            }
        }
        Ok(s)
    }
}

/// Generates labels `e1..en` when a constructor has no better names.
pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_labels_rejected() {
        assert!(GroundSet::new(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn size_guard() {
        let labels = default_labels("e", 25);
        assert!(matches!(GroundSet::new(labels), Err(Error::Resource(_))));
        let labels = default_labels("e", 25);
        assert!(GroundSet::with_limit(labels, 32).is_ok());
    }
}
