//! Exhaustive checkers for the structural claims the library is built
//! around, plus a naive-oracle cross-check of the optimized algorithms.

pub mod oracle;

use crate::connectivity::{
    cyclic_3_separations, is_three_connected, vertical_3_separations,
};
use crate::core::{Matroid, Subset};
use crate::elasticity::{elasticity_report, is_contractible, is_deletable};
use crate::error::{Error, Result};
use crate::structures::{fans, theta_separators, triads, triangles, ThetaWitness};
use oracle::RankTable;

/// Result of running one verifier over one matroid.
#[derive(Clone, Debug)]
pub struct VerificationOutcome {
    pub claim: String,
    /// Whether the claim's hypotheses hold for this matroid.
    pub applicable: bool,
    /// Number of individual instances checked.
    pub instances: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn fmt_set(m: &Matroid, s: Subset) -> String {
    format!("{{{}}}", m.ground().label_set(s).join(","))
}

fn require_three_connected(m: &Matroid) -> Result<()> {
    if !is_three_connected(m) {
        return Err(Error::Precondition(
            "verification requires a 3-connected matroid".into(),
        ));
    }
    Ok(())
}

/// Every element of a 3-connected matroid is deletable or contractible.
pub fn verify_bixby(m: &Matroid) -> Result<VerificationOutcome> {
    require_three_connected(m)?;
    let mut violations = Vec::new();
    for e in 0..m.size() {
        if !is_deletable(m, e)? && !is_contractible(m, e)? {
            violations.push(format!(
                "element {} is neither deletable nor contractible",
                m.ground().label(e)
            ));
        }
    }
    Ok(VerificationOutcome {
        claim: "every element is deletable or contractible".into(),
        applicable: true,
        instances: m.size(),
        violations,
        notes: Vec::new(),
    })
}

/// Which disjunct settled one vertical 3-separation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem1Disjunct {
    TwoElasticInX { elastic: Vec<usize> },
    FourFan,
    ThetaSeparator { support: Subset },
    None,
}

#[derive(Clone, Debug)]
pub struct Theorem1Instance {
    pub x: Subset,
    pub e: usize,
    pub y: Subset,
    pub disjunct: Theorem1Disjunct,
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub outcome: VerificationOutcome,
    pub instances: Vec<Theorem1Instance>,
}

/// Does some ordering of the 4-element set `s` form a fan?
fn is_four_element_fan(m: &Matroid, s: Subset) -> bool {
    if s.len() != 4 {
        return false;
    }
    let tri = triangles(m);
    let tra = triads(m);
    let idx = s.indices();
    let mut perm = [0usize, 1, 2, 3];
    // Heap's algorithm is overkill for 24 cases; just enumerate.
    let mut perms = Vec::with_capacity(24);
    fn go(perm: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
        if k == 4 {
            out.push(*perm);
            return;
        }
        for i in k..4 {
            perm.swap(k, i);
            go(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    go(&mut perm, 0, &mut perms);
    perms.iter().any(|p| {
        let w1 = Subset::from_indices([idx[p[0]], idx[p[1]], idx[p[2]]]);
        let w2 = Subset::from_indices([idx[p[1]], idx[p[2]], idx[p[3]]]);
        let (t1, d1) = (tri.contains(&w1), tra.contains(&w1));
        let (t2, d2) = (tri.contains(&w2), tra.contains(&w2));
        (t1 || d1) && (t2 || d2) && (!t1 || d2) && (!d1 || t2)
    })
}

/// For every vertical 3-separation (X, {e}, Y) with Y ∪ {e} maximal: X
/// contains two elastic elements, or X ∪ {e} is a 4-element fan, or X lies
/// inside a theta-separator support.
pub fn verify_theorem1(m: &Matroid) -> Result<Theorem1Report> {
    require_three_connected(m)?;
    let triples = vertical_3_separations(m)?;
    // every augmented side of every triple, for maximality comparisons
    let augmented: Vec<Subset> = triples
        .iter()
        .flat_map(|t| [t.x.with(t.e), t.y.with(t.e)])
        .collect();
    let mut oriented: Vec<(Subset, usize, Subset)> = Vec::new();
    for t in &triples {
        for (x, y) in [(t.x, t.y), (t.y, t.x)] {
            let y_aug = y.with(t.e);
            if !augmented.iter().any(|a| y_aug.is_proper_subset_of(*a)) {
                oriented.push((x, t.e, y));
            }
        }
    }
    if oriented.is_empty() {
        return Ok(Theorem1Report {
            outcome: VerificationOutcome {
                claim: "maximal vertical 3-separations have elastic pairs, 4-fans, or theta-separators".into(),
                applicable: false,
                instances: 0,
                violations: Vec::new(),
                notes: vec!["no vertical 3-separations".into()],
            },
            instances: Vec::new(),
        });
    }
    let report = elasticity_report(m)?;
    let elastic = Subset::from_indices(report.elastic_elements());
    let witnesses: Vec<ThetaWitness> = theta_separators(m)?;
    let mut instances = Vec::new();
    let mut violations = Vec::new();
    for (x, e, y) in oriented {
        let in_x: Vec<usize> = x.intersect(elastic).indices();
        let disjunct = if in_x.len() >= 2 {
            Theorem1Disjunct::TwoElasticInX { elastic: in_x }
        } else if is_four_element_fan(m, x.with(e)) {
            Theorem1Disjunct::FourFan
        } else if let Some(w) = witnesses.iter().find(|w| x.is_subset_of(w.union())) {
            Theorem1Disjunct::ThetaSeparator { support: w.union() }
        } else {
            violations.push(format!(
                "no disjunct holds for X={} e={} Y={}",
                fmt_set(m, x),
                m.ground().label(e),
                fmt_set(m, y)
            ));
            Theorem1Disjunct::None
        };
        instances.push(Theorem1Instance { x, e, y, disjunct });
    }
    Ok(Theorem1Report {
        outcome: VerificationOutcome {
            claim: "maximal vertical 3-separations have elastic pairs, 4-fans, or theta-separators".into(),
            applicable: true,
            instances: instances.len(),
            violations,
            notes: Vec::new(),
        },
        instances,
    })
}

/// With at least 7 elements, no 4-element fan, and no theta-separator there
/// are at least four elastic elements; with at most 6 elements every
/// element is elastic.
pub fn verify_corollary2(m: &Matroid) -> Result<VerificationOutcome> {
    require_three_connected(m)?;
    let claim = "at least four elastic elements (all of them when |E| <= 6)".to_string();
    let n = m.size();
    let report = elasticity_report(m)?;
    if n <= 6 {
        let mut violations = Vec::new();
        if report.applicable && report.elastic_count() != n {
            for s in &report.statuses {
                if !s.elastic() {
                    violations.push(format!(
                        "element {} is not elastic in a matroid with {} elements",
                        m.ground().label(s.element),
                        n
                    ));
                }
            }
        }
        return Ok(VerificationOutcome {
            claim,
            applicable: report.applicable,
            instances: n,
            violations,
            notes: Vec::new(),
        });
    }
    let has_four_fan = fans(m).iter().any(|f| f.len() >= 4);
    let has_theta = !theta_separators(m)?.is_empty();
    if has_four_fan || has_theta {
        let mut notes = Vec::new();
        if has_four_fan {
            notes.push("hypothesis fails: a 4-element fan exists".into());
        }
        if has_theta {
            notes.push("hypothesis fails: a theta-separator exists".into());
        }
        return Ok(VerificationOutcome {
            claim,
            applicable: false,
            instances: 0,
            violations: Vec::new(),
            notes,
        });
    }
    let count = report.elastic_count();
    let violations = if count >= 4 {
        Vec::new()
    } else {
        vec![format!("only {count} elastic elements")]
    };
    Ok(VerificationOutcome {
        claim,
        applicable: true,
        instances: 1,
        violations,
        notes: Vec::new(),
    })
}

/// Recomputes everything with the naive rank-table oracle and diffs it
/// against the optimized implementations.
pub fn oracle_crosscheck(m: &Matroid) -> Result<VerificationOutcome> {
    let n = m.size();
    if n > 12 {
        return Err(Error::Resource(format!(
            "oracle cross-check limited to 12 elements, got {n}"
        )));
    }
    let table = RankTable::from_matroid(m)?;
    let dual_table = table.dual();
    let dual = m.dual();
    let mut violations = Vec::new();
    let mut instances = 0usize;
    for bits in 0..1u32 << n {
        let s = Subset::from_bits(bits);
        instances += 2;
        if table.r(s) != m.r(s) {
            violations.push(format!(
                "rank mismatch at {}: oracle {} vs {}",
                fmt_set(m, s),
                table.r(s),
                m.r(s)
            ));
        }
        if dual_table.r(s) != dual.r(s) {
            violations.push(format!(
                "dual rank mismatch at {}: oracle {} vs {}",
                fmt_set(m, s),
                dual_table.r(s),
                dual.r(s)
            ));
        }
    }
    instances += 1;
    let three = is_three_connected(m);
    if table.is_three_connected() != three {
        violations.push("3-connectivity disagreement".into());
    }
    if three {
        let fast_v: Vec<(Subset, usize, Subset)> = vertical_3_separations(m)?
            .into_iter()
            .map(|t| (t.x, t.e, t.y))
            .collect();
        let fast_c: Vec<(Subset, usize, Subset)> = cyclic_3_separations(m)?
            .into_iter()
            .map(|t| (t.x, t.e, t.y))
            .collect();
        instances += 2;
        if table.vertical_triples() != fast_v {
            violations.push("vertical 3-separation lists disagree".into());
        }
        if dual_table.vertical_triples() != fast_c {
            violations.push("cyclic 3-separation lists disagree".into());
        }
        if n >= 4 {
            let report = elasticity_report(m)?;
            for s in &report.statuses {
                instances += 1;
                let (del, con) = table.elasticity(s.element);
                if del != s.deletable || con != s.contractible {
                    violations.push(format!(
                        "elasticity mismatch at {}: oracle ({del},{con}) vs ({},{})",
                        m.ground().label(s.element),
                        s.deletable,
                        s.contractible
                    ));
                }
            }
        }
    }
    Ok(VerificationOutcome {
        claim: "optimized algorithms agree with the naive oracle".into(),
        applicable: true,
        instances,
        violations,
        notes: Vec::new(),
    })
}
