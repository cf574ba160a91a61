//! Connectivity function, k-separation enumeration, 3-connectivity, vertical
//! and cyclic 3-separation triples, maximality marking, and the swirl-like
//! flower predicate.

use crate::core::{subsets_by_size, Matroid, Subset};
use crate::error::{Error, Result};

/// Which notion a separation triple witnesses. A triple is cyclic exactly
/// when it is vertical in the dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparationKind {
    Vertical,
    Cyclic,
}

/// A partition (X, {e}, Y) of the ground set witnessing that e cannot be
/// contracted (vertical) or deleted (cyclic) while staying 3-connected.
/// X is the side of smaller cardinality, ties broken by bit order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationTriple {
    pub x: Subset,
    pub e: usize,
    pub y: Subset,
    pub kind: SeparationKind,
    /// Set by [`mark_maximal`]: no other triple's augmented side properly
    /// contains Y + e.
    pub y_maximal: bool,
}

/// λ(S) = r(S) + r(E-S) - r(E).
pub fn lambda(m: &Matroid, s: Subset) -> Result<usize> {
    m.rank(s)?;
    Ok(lam(m, s))
}

pub(crate) fn lam(m: &Matroid, s: Subset) -> usize {
    m.r(s) + m.r(m.full_set().minus(s)) - m.rank_full()
}

/// Local connectivity ⊓(X, Y) = r(X) + r(Y) - r(X ∪ Y).
pub fn local_connectivity(m: &Matroid, x: Subset, y: Subset) -> Result<usize> {
    m.rank(x)?;
    m.rank(y)?;
    Ok(m.r(x) + m.r(y) - m.r(x.union(y)))
}

/// All k-separations (λ(X) <= k-1, both sides of size >= k), with the side
/// containing element 0 listed first.
pub fn k_separations(m: &Matroid, k: usize) -> Result<Vec<(Subset, Subset)>> {
    if k < 1 {
        return Err(Error::Domain("k-separations need k >= 1".into()));
    }
    let n = m.size();
    let full = m.full_set();
    let mut out = Vec::new();
    for s in subsets_by_size(n) {
        if !s.contains(0) {
            continue;
        }
        let t = full.minus(s);
        if s.len() >= k && t.len() >= k && lam(m, s) <= k - 1 {
            out.push((s, t));
        }
    }
    Ok(out)
}

/// No 1-separations and no 2-separations.
pub fn is_three_connected(m: &Matroid) -> bool {
    let n = m.size();
    if n == 0 {
        return true;
    }
    let full = m.full_set();
    for bits in 1..1u64 << n {
        let s = Subset::from_bits(bits as u32);
        if !s.contains(0) {
            continue; // complements are symmetric
        }
        let t = full.minus(s);
        if t.is_empty() {
            continue;
        }
        let l = lam(m, s);
        if l == 0 || (l <= 1 && s.len() >= 2 && t.len() >= 2) {
            return false;
        }
    }
    true
}

fn require_three_connected(m: &Matroid) -> Result<()> {
    if is_three_connected(m) {
        Ok(())
    } else {
        Err(Error::Precondition("matroid is not 3-connected".into()))
    }
}

/// All vertical 3-separation triples (X, {e}, Y): both augmented sides are
/// vertical 3-separations and e lies in the closure of each side. Output is
/// sorted by (|X|, X, e) and each triple appears once per (e, {X, Y}).
pub fn vertical_3_separations(m: &Matroid) -> Result<Vec<SeparationTriple>> {
    require_three_connected(m)?;
    Ok(vertical_triples_inner(m, SeparationKind::Vertical))
}

/// Cyclic triples: the vertical triples of the dual, on the same partition.
pub fn cyclic_3_separations(m: &Matroid) -> Result<Vec<SeparationTriple>> {
    require_three_connected(m)?;
    Ok(vertical_triples_inner(&m.dual(), SeparationKind::Cyclic))
}

fn vertical_triples_inner(m: &Matroid, kind: SeparationKind) -> Vec<SeparationTriple> {
    let n = m.size();
    let full = m.full_set();
    let mut out = Vec::new();
    // Both augmented sides need rank >= 3, hence size >= 3: skip smaller X.
    if n >= 7 {
        for bits in 0..1u64 << n {
            let x = Subset::from_bits(bits as u32);
            if x.len() < 3 || x.len() > n - 4 {
                continue;
            }
            let rest = full.minus(x);
            // Canonical orientation: |X| <= |Y| (= n - 1 - |X|), ties by bits.
            if 2 * x.len() > n - 1 {
                continue;
            }
            if m.r(x) < 3 {
                continue;
            }
            let clx = m.cl(x);
            for e in rest.iter() {
                if !clx.contains(e) {
                    continue;
                }
                let y = rest.without(e);
                if 2 * x.len() == n - 1 && y.bits() < x.bits() {
                    continue;
                }
                if m.r(y) < 3 || !m.cl(y).contains(e) {
                    continue;
                }
                let l = lam(m, x.with(e));
                if l > 2 {
                    continue;
                }
                // In a 3-connected matroid every 3-separation with sides of
                // size >= 3 is exactly 3-separating.
                assert_eq!(l, 2, "vertical triple is not exactly 3-separating");
                out.push(SeparationTriple {
                    x,
                    e,
                    y,
                    kind,
                    y_maximal: false,
                });
            }
        }
    }
    out.sort_by_key(|t| (t.x.len(), t.x.bits(), t.e));
    out
}

/// Marks each triple whose augmented side Y + e is maximal: not properly
/// contained in any augmented side (either orientation) of another triple.
pub fn mark_maximal(triples: &[SeparationTriple]) -> Vec<SeparationTriple> {
    let mut sides: Vec<Subset> = Vec::with_capacity(triples.len() * 2);
    for t in triples {
        sides.push(t.y.with(t.e));
        sides.push(t.x.with(t.e));
    }
    triples
        .iter()
        .map(|t| {
            let ye = t.y.with(t.e);
            let maximal = !sides.iter().any(|s| ye.is_proper_subset_of(*s));
            SeparationTriple {
                y_maximal: maximal,
                ..t.clone()
            }
        })
        .collect()
}

/// Convenience: maximal-marked vertical triples.
pub fn vertical_3_separations_marked(m: &Matroid) -> Result<Vec<SeparationTriple>> {
    Ok(mark_maximal(&vertical_3_separations(m)?))
}

pub fn cyclic_3_separations_marked(m: &Matroid) -> Result<Vec<SeparationTriple>> {
    Ok(mark_maximal(&cyclic_3_separations(m)?))
}

/// Swirl-like flower predicate: the petals cyclically partition E, every
/// consecutive proper union is exactly 3-separating, and local connectivity
/// is 1 between consecutive petals and 0 otherwise.
pub fn is_swirl_like(m: &Matroid, petals: &[Subset]) -> Result<bool> {
    let k = petals.len();
    let mut union = Subset::EMPTY;
    let mut total = 0;
    for p in petals {
        m.rank(*p)?;
        if p.len() < 2 {
            return Err(Error::Domain("every petal needs at least 2 elements".into()));
        }
        union = union.union(*p);
        total += p.len();
    }
    if union != m.full_set() || total != m.size() {
        return Err(Error::Domain("petals do not partition the ground set".into()));
    }
    if k < 4 {
        return Err(Error::Domain("a swirl-like flower needs at least 4 petals".into()));
    }
    for start in 0..k {
        let mut u = Subset::EMPTY;
        for len in 1..k {
            u = u.union(petals[(start + len - 1) % k]);
            if lam(m, u) != 2 {
                return Ok(false);
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = (j - i == 1) || (i == 0 && j == k - 1);
            let want = usize::from(consecutive);
            let got = m.r(petals[i]) + m.r(petals[j]) - m.r(petals[i].union(petals[j]));
            if got != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
