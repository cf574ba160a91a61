//! Local structure detection: triangles and triads, segments and cosegments,
//! fans, and theta-separator witnesses.

use std::collections::BTreeMap;

use crate::connectivity::is_three_connected;
use crate::core::{Matroid, Subset};
use crate::error::{Error, Result};

/// All 3-element circuits, in canonical subset order.
pub fn triangles(m: &Matroid) -> Vec<Subset> {
    let n = m.size();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = Subset::from_indices([i, j, k]);
                if m.is_circuit(s) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| s.bits());
    out
}

/// All 3-element cocircuits.
pub fn triads(m: &Matroid) -> Vec<Subset> {
    triangles(&m.dual())
}

/// A maximal set of at least three elements whose restriction is a line
/// U_{2,k}. When the underlying line carries loops or parallel pairs, the
/// lowest-index representative of each parallel class is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub elements: Subset,
    /// Whether the element set equals its own closure.
    pub closed: bool,
}

/// Maximal segments of `m`.
pub fn segments(m: &Matroid) -> Vec<Segment> {
    let n = m.size();
    let mut seen: Vec<Subset> = Vec::new();
    let mut out: Vec<Segment> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let pair = Subset::from_indices([i, j]);
            if m.r(pair) != 2 {
                continue;
            }
            let line = m.cl(pair);
            // strip loops, keep one representative per parallel class
            let mut reps = Subset::EMPTY;
            for e in line.iter() {
                if m.is_loop(e) {
                    continue;
                }
                let parallel_twin = reps
                    .iter()
                    .any(|f| m.r(Subset::from_indices([e, f])) == 1);
                if !parallel_twin {
                    reps = reps.with(e);
                }
            }
            if reps.len() >= 3 && !seen.contains(&reps) {
                seen.push(reps);
                out.push(Segment {
                    elements: reps,
                    closed: m.cl(reps) == reps,
                });
            }
        }
    }
    out.sort_by_key(|s| s.elements.bits());
    out
}

/// Maximal cosegments of `m` (segments of the dual, reported on the same
/// ground set).
pub fn cosegments(m: &Matroid) -> Vec<Segment> {
    segments(&m.dual())
}

/// A consecutive window of a fan: whether it is a triangle, a triad, or
/// (in degenerate matroids such as U_{2,4}) both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanWindow {
    pub triangle: bool,
    pub triad: bool,
}

/// An ordered fan: every consecutive triple of elements is a triangle or a
/// triad, and consecutive windows alternate between the two. Oriented so
/// the smaller endpoint comes first; `windows[i]` classifies the triple
/// starting at `order[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub order: Vec<usize>,
    pub windows: Vec<FanWindow>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn element_set(&self) -> Subset {
        Subset::from_indices(self.order.iter().copied())
    }

    /// The first element is a spoke end when the first window is a triangle.
    pub fn starts_with_triangle(&self) -> bool {
        self.windows.first().is_some_and(|w| w.triangle)
    }
}

fn window_of(tri: &[Subset], tra: &[Subset], s: Subset) -> Option<FanWindow> {
    let triangle = tri.contains(&s);
    let triad = tra.contains(&s);
    if triangle || triad {
        Some(FanWindow { triangle, triad })
    } else {
        None
    }
}

/// If the earlier window is a triangle the next must be a triad, and vice
/// versa; a window that is both imposes both obligations.
fn windows_alternate(prev: FanWindow, next: FanWindow) -> bool {
    (!prev.triangle || next.triad) && (!prev.triad || next.triangle)
}

fn extend_search(
    m: &Matroid,
    tri: &[Subset],
    tra: &[Subset],
    order: &mut Vec<usize>,
    windows: &mut Vec<FanWindow>,
    found: &mut BTreeMap<u32, Vec<usize>>,
) {
    let k = order.len();
    let mut extended = false;
    for x in 0..m.size() {
        if order.contains(&x) {
            continue;
        }
        let w = Subset::from_indices([order[k - 2], order[k - 1], x]);
        if let Some(win) = window_of(tri, tra, w) {
            if windows_alternate(*windows.last().unwrap(), win) {
                extended = true;
                order.push(x);
                windows.push(win);
                extend_search(m, tri, tra, order, windows, found);
                order.pop();
                windows.pop();
            }
        }
    }
    if extended {
        return;
    }
    // no right extension; a maximal fan must not extend leftward either
    let left_extendable = (0..m.size()).any(|x| {
        if order.contains(&x) {
            return false;
        }
        let w = Subset::from_indices([x, order[0], order[1]]);
        window_of(tri, tra, w).is_some_and(|win| windows_alternate(win, windows[0]))
    });
    if left_extendable {
        return;
    }
    let mut seq = order.clone();
    if seq[seq.len() - 1] < seq[0] {
        seq.reverse();
    }
    let key = Subset::from_indices(seq.iter().copied()).bits();
    match found.get_mut(&key) {
        Some(best) if *best <= seq => {}
        Some(best) => *best = seq,
        None => {
            found.insert(key, seq);
        }
    }
}

/// All maximal fans of length at least 3, one canonical orientation per
/// element set.
pub fn fans(m: &Matroid) -> Vec<Fan> {
    let tri = triangles(m);
    let tra = triads(m);
    let mut seeds: Vec<Subset> = tri.clone();
    for t in &tra {
        if !seeds.contains(t) {
            seeds.push(*t);
        }
    }
    let mut found: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for seed in &seeds {
        let idx = seed.indices();
        let perms = [
            [idx[0], idx[1], idx[2]],
            [idx[0], idx[2], idx[1]],
            [idx[1], idx[0], idx[2]],
            [idx[1], idx[2], idx[0]],
            [idx[2], idx[0], idx[1]],
            [idx[2], idx[1], idx[0]],
        ];
        for p in perms {
            let win = window_of(&tri, &tra, *seed).unwrap();
            let mut order = p.to_vec();
            let mut windows = vec![win];
            extend_search(m, &tri, &tra, &mut order, &mut windows, &mut found);
        }
    }
    let mut out: Vec<Fan> = found
        .into_values()
        .map(|order| {
            let windows = order
                .windows(3)
                .map(|w| window_of(&tri, &tra, Subset::from_indices(w.iter().copied())).unwrap())
                .collect();
            Fan { order, windows }
        })
        .collect();
    out.sort_by(|a, b| (a.len(), &a.order).cmp(&(b.len(), &b.order)));
    out
}

/// Whether the restriction to `w ∪ z` is a theta structure, with the
/// recovered pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ThetaKind {
    Theta,
    ThetaMinus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaStructure {
    pub kind: ThetaKind,
    /// (z element, paired segment element).
    pub partners: Vec<(usize, usize)>,
    /// The z element with no partner, for [`ThetaKind::ThetaMinus`].
    pub unpartnered: Option<usize>,
}

/// Circuits of `m` contained in `s`, i.e. the circuits of the restriction.
fn circuits_within(m: &Matroid, s: Subset) -> Vec<Subset> {
    let idx = s.indices();
    let mut subs: Vec<Subset> = Vec::new();
    for bits in 1..1u64 << idx.len() {
        let mut t = Subset::EMPTY;
        for (pos, &e) in idx.iter().enumerate() {
            if bits >> pos & 1 == 1 {
                t = t.with(e);
            }
        }
        subs.push(t);
    }
    subs.sort_by_key(|t| (t.len(), t.bits()));
    let mut out: Vec<Subset> = Vec::new();
    for t in subs {
        if !m.is_independent(t) && !out.iter().any(|c| c.is_subset_of(t)) {
            out.push(t);
        }
    }
    out
}

/// Tests whether `m` restricted to `w ∪ z` is a theta structure with
/// segment part `w` and cosegment part `z`, by recovering the pairing and
/// comparing the full circuit census against the defining one.
pub fn is_theta_restriction(m: &Matroid, w: Subset, z: Subset) -> Result<Option<ThetaStructure>> {
    m.rank(w.union(z))?;
    if !w.intersect(z).is_empty() {
        return Err(Error::Domain("theta restriction: w and z overlap".into()));
    }
    let n = z.len();
    if n < 3 || (w.len() != n && w.len() + 1 != n) {
        return Ok(None);
    }
    let cs = circuits_within(m, w.union(z));
    let mut partners: Vec<(usize, usize)> = Vec::new();
    let mut unpartnered: Option<usize> = None;
    for zi in z.iter() {
        let hits: Vec<usize> = w
            .iter()
            .filter(|&x| cs.contains(&z.without(zi).with(x)))
            .collect();
        match hits.as_slice() {
            [] if unpartnered.is_none() => unpartnered = Some(zi),
            [x] => partners.push((zi, *x)),
            _ => return Ok(None),
        }
    }
    let paired = Subset::from_indices(partners.iter().map(|&(_, x)| x));
    if paired.len() != partners.len() || paired != w {
        return Ok(None); // pairing not injective, or misses part of w
    }
    if (unpartnered.is_some() && w.len() != n - 1) || (unpartnered.is_none() && w.len() != n) {
        return Ok(None);
    }

    let mut expected: Vec<Subset> = Vec::new();
    let widx = w.indices();
    for a in 0..widx.len() {
        for b in a + 1..widx.len() {
            for c in b + 1..widx.len() {
                expected.push(Subset::from_indices([widx[a], widx[b], widx[c]]));
            }
        }
    }
    for &(zi, x) in &partners {
        expected.push(z.without(zi).with(x));
    }
    for zi in z.iter() {
        for a in 0..partners.len() {
            for b in a + 1..partners.len() {
                let (zj, xj) = partners[a];
                let (zk, xk) = partners[b];
                if zi != zj && zi != zk {
                    expected.push(z.without(zi).with(xj).with(xk));
                }
            }
        }
    }
    expected.sort_by_key(|t| (t.len(), t.bits()));
    if cs != expected {
        return Ok(None);
    }
    Ok(Some(ThetaStructure {
        kind: if unpartnered.is_some() {
            ThetaKind::ThetaMinus
        } else {
            ThetaKind::Theta
        },
        partners,
        unpartnered,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ThetaSide {
    Primal,
    Dual,
}

/// A theta structure found as a restriction of the matroid or its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaWitness {
    pub side: ThetaSide,
    pub w: Subset,
    pub z: Subset,
    pub structure: ThetaStructure,
}

impl ThetaWitness {
    pub fn union(&self) -> Subset {
        self.w.union(self.z)
    }
}

fn assemble_witnesses(
    n_mat: &Matroid,
    side: ThetaSide,
    z: Subset,
    options: &[Vec<Option<usize>>],
    pos: usize,
    w: Subset,
    skipped: usize,
    out: &mut Vec<ThetaWitness>,
) -> Result<()> {
    if pos == options.len() {
        if skipped > 0 && z.len() - skipped < 2 {
            return Ok(());
        }
        if let Some(structure) = is_theta_restriction(n_mat, w, z)? {
            out.push(ThetaWitness { side, w, z, structure });
        }
        return Ok(());
    }
    for &opt in &options[pos] {
        match opt {
            Some(x) if !w.contains(x) => {
                assemble_witnesses(n_mat, side, z, options, pos + 1, w.with(x), skipped, out)?;
            }
            None if skipped == 0 => {
                assemble_witnesses(n_mat, side, z, options, pos + 1, w, 1, out)?;
            }
            _ => {}
        }
    }
    Ok(())
}

/// All maximal theta-separator witnesses, over both the matroid and its
/// dual. Empty unless rank and corank are at least 4. Witnesses whose
/// support is properly contained in another same-side witness's support
/// are dropped.
pub fn theta_separators(m: &Matroid) -> Result<Vec<ThetaWitness>> {
    if !is_three_connected(m) {
        return Err(Error::Precondition(
            "theta-separator search requires a 3-connected matroid".into(),
        ));
    }
    if m.rank_full() < 4 || m.corank_full() < 4 {
        return Ok(Vec::new());
    }
    let mut all: Vec<ThetaWitness> = Vec::new();
    for (side, n_mat) in [(ThetaSide::Primal, m.clone()), (ThetaSide::Dual, m.dual())] {
        let full = n_mat.full_set();
        for seg in cosegments(&n_mat) {
            let c = seg.elements;
            // every subset z of the cosegment with |z| >= 3
            let mut sub = c.bits();
            loop {
                let z = Subset::from_bits(sub);
                if z.len() >= 3 {
                    let options: Vec<Vec<Option<usize>>> = z
                        .iter()
                        .map(|zi| {
                            let mut o: Vec<Option<usize>> = full
                                .minus(z)
                                .iter()
                                .filter(|&x| n_mat.is_circuit(z.without(zi).with(x)))
                                .map(Some)
                                .collect();
                            o.push(None);
                            o
                        })
                        .collect();
                    assemble_witnesses(&n_mat, side, z, &options, 0, Subset::EMPTY, 0, &mut all)?;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & c.bits();
            }
        }
    }
    // dedupe by (side, support)
    let mut distinct: Vec<ThetaWitness> = Vec::new();
    for wt in all {
        if !distinct
            .iter()
            .any(|d| d.side == wt.side && d.union() == wt.union())
        {
            distinct.push(wt);
        }
    }
    // keep only maximal supports within each side
    let mut out: Vec<ThetaWitness> = Vec::new();
    for wt in &distinct {
        let dominated = distinct
            .iter()
            .any(|d| d.side == wt.side && wt.union().is_proper_subset_of(d.union()));
        if !dominated {
            out.push(wt.clone());
        }
    }
    out.sort_by_key(|wt| (wt.side, wt.union().bits(), wt.z.bits()));
    Ok(out)
}
