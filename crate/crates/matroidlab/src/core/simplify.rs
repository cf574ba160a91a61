use std::collections::BTreeMap;

use crate::core::{Matroid, Subset};

/// Records which original elements each surviving representative stands for
/// after simplification or cosimplification. The class sets partition the
/// original non-loop (resp. non-coloop) elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementMap {
    pub classes: BTreeMap<String, Vec<String>>,
}

impl ElementMap {
    pub fn identity(m: &Matroid) -> ElementMap {
        ElementMap {
            classes: m
                .ground()
                .labels()
                .iter()
                .map(|l| (l.clone(), vec![l.clone()]))
                .collect(),
        }
    }
}

/// Removes loops and keeps the lowest-index representative of each parallel
/// class.
pub fn simplify(m: &Matroid) -> (Matroid, ElementMap) {
    let n = m.size();
    if n == 0 {
        return (m.clone(), ElementMap::default());
    }
    let loops = Subset::from_indices((0..n).filter(|&e| m.is_loop(e)));
    let mut assigned = loops;
    let mut removed = loops;
    let mut map = ElementMap::default();
    for e in 0..n {
        if assigned.contains(e) {
            continue;
        }
        // Parallel class of e among the unassigned non-loops.
        let class: Vec<usize> = (e..n)
            .filter(|&f| {
                f == e
                    || (!assigned.contains(f)
                        && m.r(Subset::from_indices([e, f])) == 1)
            })
            .collect();
        for &f in &class {
            assigned = assigned.with(f);
            if f != e {
                removed = removed.with(f);
            }
        }
        map.classes.insert(
            m.ground().label(e).to_string(),
            class.iter().map(|&f| m.ground().label(f).to_string()).collect(),
        );
    }
    let simplified = m.delete(removed).expect("removed within ground set");
    (simplified, map)
}

/// Cosimplification: simplification in the dual, i.e. removes coloops and
/// collapses series classes.
pub fn cosimplify(m: &Matroid) -> (Matroid, ElementMap) {
    let (sd, map) = simplify(&m.dual());
    (sd.dual(), map)
}
