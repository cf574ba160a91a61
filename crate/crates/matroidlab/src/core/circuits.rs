use crate::core::{subsets_by_size, Matroid, Subset};
use crate::error::Result;

/// All circuits (minimal dependent sets), ascending by size then by bit
/// value. Exponential scan over the whole ground set; the ground-set guard
/// already bounds the size at construction.
pub fn circuits(m: &Matroid) -> Result<Vec<Subset>> {
    let mut found: Vec<Subset> = Vec::new();
    for s in subsets_by_size(m.size()) {
        if s.is_empty() {
            continue;
        }
        if found.iter().any(|c| c.is_subset_of(s)) {
            continue;
        }
        if m.r(s) < s.len() {
            found.push(s);
        }
    }
    Ok(found)
}

/// Cocircuits: circuits of the dual.
pub fn cocircuits(m: &Matroid) -> Result<Vec<Subset>> {
    circuits(&m.dual())
}
