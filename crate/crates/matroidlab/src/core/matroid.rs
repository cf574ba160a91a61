use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::core::{GroundSet, Subset};
use crate::error::{Error, Result};

/// Upper bound on memoized rank entries per matroid. 2^20 subsets of a
/// maximal ground set would still fit, but derived wrappers multiply, so the
/// cache is capacity-bounded and transparently falls through when full.
const RANK_CACHE_CAP: usize = 1 << 21;

/// An immutable matroid: a ground set plus a rank-oracle backend. Cloning is
/// cheap (shared `Arc`), and concurrent read-only queries are safe; the rank
/// cache is an interior-mutability detail invisible to semantics.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

struct Inner {
    ground: GroundSet,
    backend: Backend,
    cache: Mutex<HashMap<u32, u32>>,
}

/// Concrete rank semantics. `Dual`, `Minor`, `Relaxed`, and `Glued` wrap
/// other matroids and derive their rank through the standard identities.
pub enum Backend {
    /// Rank function `min(|S|, r)`.
    Uniform { rank: usize },
    /// Columns of a matrix over the prime field GF(p), one per element.
    Linear { prime: u32, columns: Vec<Vec<u32>> },
    /// Explicit basis list; independence is "subset of some basis".
    Bases { bases: Vec<Subset> },
    /// Cycle matroid of a multigraph given by endpoint pairs.
    Graphic { edges: Vec<(usize, usize)> },
    Dual(Matroid),
    Minor {
        inner: Matroid,
        /// Inner index of each surviving outer element, ascending.
        keep: Vec<usize>,
        /// Contracted set, in inner coordinates. Deleted elements are the
        /// inner elements neither kept nor contracted.
        contracted: Subset,
    },
    /// Circuit-hyperplane relaxation: the relaxed set becomes a basis.
    Relaxed { inner: Matroid, relaxed: Subset },
    Glued(Glued),
}

/// Generalized parallel connection of two matroids across a shared line.
/// Ranks are derived from the closure operator of the connection, which is
/// the fixpoint of alternately applying each side's closure to its trace.
pub struct Glued {
    pub left: Matroid,
    pub right: Matroid,
    /// Per glued index, the corresponding index in `left` (if any).
    pub to_left: Vec<Option<usize>>,
    /// Per glued index, the corresponding index in `right` (if any).
    pub to_right: Vec<Option<usize>>,
    /// Per left index, the glued index.
    pub from_left: Vec<usize>,
    /// Per right index, the glued index.
    pub from_right: Vec<usize>,
}

impl Matroid {
    pub fn new(ground: GroundSet, backend: Backend) -> Matroid {
        Matroid {
            inner: Arc::new(Inner {
                ground,
                backend,
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn backend(&self) -> &Backend {
        &self.inner.backend
    }

    pub fn size(&self) -> usize {
        self.inner.ground.size()
    }

    pub fn full_set(&self) -> Subset {
        self.inner.ground.full_set()
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full_set()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "subset {s:?} has bits outside the {}-element ground set",
                self.size()
            )))
        }
    }

    /// Rank of `S`, memoized per matroid.
    pub fn rank(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.r(s))
    }

    /// Internal rank; `s` must lie within the ground set.
    pub(crate) fn r(&self, s: Subset) -> usize {
        debug_assert!(s.is_subset_of(self.full_set()));
        if let Some(&v) = self.inner.cache.lock().unwrap().get(&s.bits()) {
            return v as usize;
        }
        let v = self.compute_rank(s);
        let mut cache = self.inner.cache.lock().unwrap();
        if cache.len() < RANK_CACHE_CAP {
            cache.insert(s.bits(), v as u32);
        }
        v
    }

    /// Rank computed straight from the backend, bypassing the memo table.
    /// The brute-force oracle uses this to seed its circuit census so its
    /// code path shares nothing with the cached route.
    pub fn rank_uncached(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.compute_rank(s))
    }

    fn compute_rank(&self, s: Subset) -> usize {
        match &self.inner.backend {
            Backend::Uniform { rank } => s.len().min(*rank),
            Backend::Linear { prime, columns } => linear_rank(*prime, columns, s),
            Backend::Bases { bases } => bases_rank(bases, s),
            Backend::Graphic { edges } => graphic_rank(edges, s),
            Backend::Dual(m) => {
                let full = m.full_set();
                s.len() + m.r(full.minus(s)) - m.r(full)
            }
            Backend::Minor {
                inner,
                keep,
                contracted,
            } => {
                let mapped = Subset::from_indices(s.iter().map(|i| keep[i]));
                inner.r(mapped.union(*contracted)) - inner.r(*contracted)
            }
            Backend::Relaxed { inner, relaxed } => {
                inner.r(s) + usize::from(s == *relaxed)
            }
            Backend::Glued(g) => glued_rank(g, s),
        }
    }

    /// Rank of the whole matroid.
    pub fn rank_full(&self) -> usize {
        self.r(self.full_set())
    }

    /// Corank `r*(S) = |S| + r(E-S) - r(E)`.
    pub fn corank(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rstar(s))
    }

    pub(crate) fn rstar(&self, s: Subset) -> usize {
        let full = self.full_set();
        s.len() + self.r(full.minus(s)) - self.r(full)
    }

    pub fn corank_full(&self) -> usize {
        self.rstar(self.full_set())
    }

    /// `cl(S) = {e : r(S + e) = r(S)}`.
    pub fn closure(&self, s: Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.cl(s))
    }

    pub(crate) fn cl(&self, s: Subset) -> Subset {
        let rs = self.r(s);
        let mut out = s;
        for e in self.full_set().minus(s).iter() {
            if self.r(s.with(e)) == rs {
                out = out.with(e);
            }
        }
        out
    }

    /// Closure in the dual.
    pub fn coclosure(&self, s: Subset) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(self.clstar(s))
    }

    pub(crate) fn clstar(&self, s: Subset) -> Subset {
        let rs = self.rstar(s);
        let mut out = s;
        for e in self.full_set().minus(s).iter() {
            if self.rstar(s.with(e)) == rs {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.r(s) == s.len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.r(Subset::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rstar(Subset::singleton(e)) == 0
    }

    /// `S` is a circuit: dependent with every proper subset independent.
    pub fn is_circuit(&self, s: Subset) -> bool {
        if s.is_empty() || self.r(s) != s.len() - 1 {
            return false;
        }
        s.iter().all(|e| {
            let t = s.without(e);
            self.r(t) == t.len()
        })
    }

    pub fn is_cocircuit(&self, s: Subset) -> bool {
        self.dual().is_circuit(s)
    }

    pub fn dual(&self) -> Matroid {
        if let Backend::Dual(m) = &self.inner.backend {
            return m.clone();
        }
        Matroid::new(self.inner.ground.clone(), Backend::Dual(self.clone()))
    }

    pub fn delete(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        Ok(self.minor(s, Subset::EMPTY))
    }

    pub fn contract(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        Ok(self.minor(Subset::EMPTY, s))
    }

    pub fn restrict(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        Ok(self.minor(self.full_set().minus(s), Subset::EMPTY))
    }

    fn minor(&self, deleted: Subset, contracted: Subset) -> Matroid {
        let keep: Vec<usize> = self
            .full_set()
            .minus(deleted)
            .minus(contracted)
            .iter()
            .collect();
        let labels = keep
            .iter()
            .map(|&i| self.ground().label(i).to_string())
            .collect();
        let ground = GroundSet::with_limit(labels, 32).expect("shrinking ground set");
        Matroid::new(
            ground,
            Backend::Minor {
                inner: self.clone(),
                keep,
                contracted,
            },
        )
    }

    /// Relaxes a circuit-hyperplane into a basis (used to build whirls from
    /// wheels). Fails unless `s` really is both a circuit and a hyperplane.
    pub fn relax(&self, s: Subset) -> Result<Matroid> {
        self.check_subset(s)?;
        if !self.is_circuit(s) {
            return Err(Error::Construction(format!(
                "relaxation target {:?} is not a circuit",
                self.ground().label_set(s)
            )));
        }
        if self.cl(s) != s || self.r(s) != self.rank_full() - 1 {
            return Err(Error::Construction(format!(
                "relaxation target {:?} is not a hyperplane",
                self.ground().label_set(s)
            )));
        }
        Ok(Matroid::new(
            self.inner.ground.clone(),
            Backend::Relaxed {
                inner: self.clone(),
                relaxed: s,
            },
        ))
    }

    /// Verifies the rank axioms: normalization, unit increase, monotonicity,
    /// and (local, hence full) submodularity. Exhaustive over all subsets;
    /// intended for construction-time validation and tests at desk scale.
    pub fn check_rank_axioms(&self) -> Result<()> {
        let n = self.size();
        if self.r(Subset::EMPTY) != 0 {
            return Err(Error::Consistency("r(empty) != 0".into()));
        }
        for bits in 0..1u64 << n {
            let s = Subset::from_bits(bits as u32);
            let rs = self.r(s);
            if rs > s.len() {
                return Err(Error::Consistency(format!("r({s:?}) > |{s:?}|")));
            }
            for e in self.full_set().minus(s).iter() {
                let rse = self.r(s.with(e));
                if rse < rs || rse > rs + 1 {
                    return Err(Error::Consistency(format!(
                        "rank not monotone-unit at {s:?} + {e}"
                    )));
                }
                // local submodularity: r(S+e) + r(S+f) >= r(S+e+f) + r(S)
                for f in self.full_set().minus(s).iter() {
                    if f <= e {
                        continue;
                    }
                    let rsf = self.r(s.with(f));
                    let rsef = self.r(s.with(e).with(f));
                    if rse + rsf < rsef + rs {
                        return Err(Error::Consistency(format!(
                            "submodularity fails at {s:?} with {e},{f}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, r={}, {})",
            self.size(),
            self.rank_full(),
            match &self.inner.backend {
                Backend::Uniform { .. } => "uniform",
                Backend::Linear { .. } => "linear",
                Backend::Bases { .. } => "bases",
                Backend::Graphic { .. } => "graphic",
                Backend::Dual(_) => "dual",
                Backend::Minor { .. } => "minor",
                Backend::Relaxed { .. } => "relaxed",
                Backend::Glued(_) => "glued",
            }
        )
    }
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn linear_rank(prime: u32, columns: &[Vec<u32>], s: Subset) -> usize {
    let p = prime as u64;
    let rows = columns.first().map_or(0, |c| c.len());
    let mut mat: Vec<Vec<u64>> = s
        .iter()
        .map(|i| columns[i].iter().map(|&x| x as u64 % p).collect())
        .collect();
    let mut rank = 0;
    for row in 0..rows {
        let Some(pivot) = (rank..mat.len()).find(|&c| mat[c][row] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = modinv(mat[rank][row], p);
        for c in 0..mat.len() {
            if c != rank && mat[c][row] != 0 {
                let factor = mat[c][row] * inv % p;
                for r in row..rows {
                    let sub = factor * mat[rank][r] % p;
                    mat[c][r] = (mat[c][r] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

fn bases_rank(bases: &[Subset], s: Subset) -> usize {
    // Greedy over the independence predicate "contained in some basis";
    // greedy is exact for matroids.
    let mut ind = Subset::EMPTY;
    for e in s.iter() {
        let cand = ind.with(e);
        if bases.iter().any(|b| cand.is_subset_of(*b)) {
            ind = cand;
        }
    }
    ind.len()
}

fn graphic_rank(edges: &[(usize, usize)], s: Subset) -> usize {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    fn find(parent: &mut HashMap<usize, usize>, v: usize) -> usize {
        let p = *parent.entry(v).or_insert(v);
        if p == v {
            v
        } else {
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
    }
    let mut rank = 0;
    for i in s.iter() {
        let (u, v) = edges[i];
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru != rv {
            parent.insert(ru, rv);
            rank += 1;
        }
    }
    rank
}

/// Closure in the glued matroid: alternately close the trace on each side
/// until stable. Flats of a generalized parallel connection are exactly the
/// sets whose traces are flats on both sides.
pub(crate) fn glued_closure(g: &Glued, s: Subset) -> Subset {
    fn close_side(
        side: &Matroid,
        to_side: &[Option<usize>],
        from_side: &[usize],
        cur: Subset,
    ) -> Subset {
        let trace = Subset::from_indices(cur.iter().filter_map(|i| to_side[i]));
        let closed = side.cl(trace);
        let mut out = cur;
        for j in closed.iter() {
            out = out.with(from_side[j]);
        }
        out
    }
    let mut cur = s;
    loop {
        let mut next = close_side(&g.left, &g.to_left, &g.from_left, cur);
        next = close_side(&g.right, &g.to_right, &g.from_right, next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn glued_rank(g: &Glued, s: Subset) -> usize {
    // r(S) counts the elements of S (in index order) that leave the closure
    // of their predecessors; valid for any matroid given its closure.
    let mut seen = Subset::EMPTY;
    let mut rank = 0;
    for e in s.iter() {
        if seen.is_empty() {
            if !glued_closure(g, Subset::EMPTY).contains(e) {
                rank += 1;
            }
        } else if !glued_closure(g, seen).contains(e) {
            rank += 1;
        }
        seen = seen.with(e);
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::default_labels;

    fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::new(
            GroundSet::new(default_labels("e", n)).unwrap(),
            Backend::Uniform { rank: r },
        )
    }

    #[test]
    fn uniform_ranks() {
        let m = uniform(2, 4);
        assert_eq!(m.rank(Subset::EMPTY).unwrap(), 0);
        assert_eq!(m.rank(Subset::from_indices([0, 1, 2])).unwrap(), 2);
        assert_eq!(m.rank_full(), 2);
        assert!(m.rank(Subset::singleton(5)).is_err());
    }

    #[test]
    fn dual_involution() {
        let m = uniform(2, 5);
        let dd = m.dual().dual();
        for bits in 0..32u32 {
            let s = Subset::from_bits(bits);
            assert_eq!(m.r(s), dd.r(s));
        }
        assert_eq!(m.dual().rank_full(), 3);
    }

    #[test]
    fn minor_rank_identities() {
        let m = uniform(3, 6);
        let d = m.delete(Subset::singleton(5)).unwrap();
        assert_eq!(d.size(), 5);
        assert_eq!(d.rank_full(), 3);
        let c = m.contract(Subset::singleton(0)).unwrap();
        assert_eq!(c.rank_full(), 2);
        assert_eq!(c.ground().label(0), "e2");
    }

    #[test]
    fn linear_matches_uniform_u24() {
        // U_{2,4} over GF(3): columns (1,0),(0,1),(1,1),(1,2).
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
        let lin = Matroid::new(
            GroundSet::new(default_labels("e", 4)).unwrap(),
            Backend::Linear {
                prime: 3,
                columns: cols,
            },
        );
        let uni = uniform(2, 4);
        for bits in 0..16u32 {
            let s = Subset::from_bits(bits);
            assert_eq!(lin.r(s), uni.r(s), "at {s:?}");
        }
    }

    #[test]
    fn bases_matches_uniform_u24() {
        let mut bases = vec![];
        for a in 0..4 {
            for b in a + 1..4 {
                bases.push(Subset::from_indices([a, b]));
            }
        }
        let m = Matroid::new(
            GroundSet::new(default_labels("e", 4)).unwrap(),
            Backend::Bases { bases },
        );
        let uni = uniform(2, 4);
        for bits in 0..16u32 {
            let s = Subset::from_bits(bits);
            assert_eq!(m.r(s), uni.r(s));
        }
    }

    #[test]
    fn graphic_triangle_rank() {
        // Triangle: 3 vertices, 3 edges, rank 2.
        let m = Matroid::new(
            GroundSet::new(default_labels("e", 3)).unwrap(),
            Backend::Graphic {
                edges: vec![(0, 1), (1, 2), (2, 0)],
            },
        );
        assert_eq!(m.rank_full(), 2);
        assert!(m.is_circuit(Subset::full(3)));
    }

    #[test]
    fn closure_and_coclosure() {
        let m = uniform(2, 4);
        assert_eq!(m.cl(Subset::from_indices([0, 1])), Subset::full(4));
        assert_eq!(m.cl(Subset::singleton(0)), Subset::singleton(0));
        assert_eq!(m.closure(m.full_set()).unwrap(), m.full_set());
    }

    #[test]
    fn rank_axioms_hold() {
        uniform(2, 5).check_rank_axioms().unwrap();
        uniform(0, 3).check_rank_axioms().unwrap();
    }

    #[test]
    fn relax_requires_circuit_hyperplane() {
        let m = uniform(2, 4);
        assert!(m.relax(Subset::from_indices([0, 1, 2])).is_err());
    }
}
