//! Classification of elements as deletable, contractible, or elastic, with
//! the separation-triple route cross-checked against the direct
//! simplification route.

use crate::connectivity::{
    cyclic_3_separations, is_three_connected, vertical_3_separations, SeparationTriple,
};
use crate::core::{cosimplify, simplify, Matroid, Subset};
use crate::error::{Error, Result};

/// e is deletable when co(M\e) is 3-connected.
pub fn is_deletable(m: &Matroid, e: usize) -> Result<bool> {
    let deleted = m.delete(Subset::singleton(e))?;
    let (co, _) = cosimplify(&deleted);
    Ok(is_three_connected(&co))
}

/// e is contractible when si(M/e) is 3-connected.
pub fn is_contractible(m: &Matroid, e: usize) -> Result<bool> {
    let contracted = m.contract(Subset::singleton(e))?;
    let (si, _) = simplify(&contracted);
    Ok(is_three_connected(&si))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementStatus {
    pub element: usize,
    pub deletable: bool,
    pub contractible: bool,
}

impl ElementStatus {
    pub fn elastic(&self) -> bool {
        self.deletable && self.contractible
    }
}

/// Per-element classification of a 3-connected matroid. `applicable` is
/// false for ground sets with at most three elements, where the notions
/// degenerate; the statuses are still reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElasticityReport {
    pub applicable: bool,
    pub statuses: Vec<ElementStatus>,
    /// Vertical 3-separation triples found (witnesses against
    /// contractibility).
    pub vertical_triples: Vec<SeparationTriple>,
    /// Cyclic 3-separation triples found (witnesses against deletability).
    pub cyclic_triples: Vec<SeparationTriple>,
}

impl ElasticityReport {
    pub fn elastic_elements(&self) -> Vec<usize> {
        self.statuses
            .iter()
            .filter(|s| s.elastic())
            .map(|s| s.element)
            .collect()
    }

    pub fn elastic_count(&self) -> usize {
        self.statuses.iter().filter(|s| s.elastic()).count()
    }
}

/// Classifies every element, requiring the triple-based characterization
/// (no vertical triple at e ⇔ contractible, no cyclic triple at e ⇔
/// deletable) to agree with the direct route via minors and
/// simplification. Disagreement is reported as a consistency error.
pub fn elasticity_report(m: &Matroid) -> Result<ElasticityReport> {
    if !is_three_connected(m) {
        return Err(Error::Precondition(
            "elasticity is defined for 3-connected matroids".into(),
        ));
    }
    let n = m.size();
    let mut statuses = Vec::with_capacity(n);
    if n <= 3 {
        for e in 0..n {
            statuses.push(ElementStatus {
                element: e,
                deletable: is_deletable(m, e)?,
                contractible: is_contractible(m, e)?,
            });
        }
        return Ok(ElasticityReport {
            applicable: false,
            statuses,
            vertical_triples: Vec::new(),
            cyclic_triples: Vec::new(),
        });
    }
    let vertical = vertical_3_separations(m)?;
    let cyclic = cyclic_3_separations(m)?;
    for e in 0..n {
        let deletable = is_deletable(m, e)?;
        let contractible = is_contractible(m, e)?;
        let cyclic_free = !cyclic.iter().any(|t| t.e == e);
        let vertical_free = !vertical.iter().any(|t| t.e == e);
        if deletable != cyclic_free || contractible != vertical_free {
            return Err(Error::Consistency(format!(
                "element {}: direct route says deletable={deletable} contractible={contractible}, \
                 triple route says deletable={cyclic_free} contractible={vertical_free}",
                m.ground().label(e)
            )));
        }
        statuses.push(ElementStatus { element: e, deletable, contractible });
    }
    Ok(ElasticityReport {
        applicable: true,
        statuses,
        vertical_triples: vertical,
        cyclic_triples: cyclic,
    })
}
