//! A deliberately naive rank table used to cross-check the optimized
//! implementations. Ranks are rebuilt from the independence predicate alone
//! (via circuits and a subset DP), and every derived notion is computed
//! straight from its definition over the full table.

use crate::core::{Matroid, Subset};
use crate::error::{Error, Result};

pub const ORACLE_MAX_ELEMENTS: usize = 16;

/// Exhaustive rank table over a ground set of at most 16 elements.
#[derive(Clone, Debug)]
pub struct RankTable {
    n: usize,
    table: Vec<u8>,
}

impl RankTable {
    /// Rebuilds ranks from scratch: independence is taken from the backend
    /// (uncached), circuits are its minimal failures, and the rank of a
    /// dependent set is recovered by deleting one element at a time.
    pub fn from_matroid(m: &Matroid) -> Result<RankTable> {
        let n = m.size();
        if n > ORACLE_MAX_ELEMENTS {
            return Err(Error::Resource(format!(
                "rank table limited to {ORACLE_MAX_ELEMENTS} elements, got {n}"
            )));
        }
        let size = 1usize << n;
        let mut ind = vec![false; size];
        for bits in 0..size {
            let s = Subset::from_bits(bits as u32);
            ind[bits] = m.rank_uncached(s)? == s.len();
        }
        // dep[S]: S contains a circuit, i.e. S is dependent or some subset is
        let mut dep = vec![false; size];
        for bits in 0..size {
            let s = Subset::from_bits(bits as u32);
            dep[bits] = !ind[bits] || s.iter().any(|e| dep[s.without(e).bits() as usize]);
            if dep[bits] == ind[bits] {
                return Err(Error::Consistency(format!(
                    "backend independence is not downward closed at {:?}",
                    s
                )));
            }
        }
        let mut table = vec![0u8; size];
        for bits in 0..size {
            let s = Subset::from_bits(bits as u32);
            table[bits] = if ind[bits] {
                s.len() as u8
            } else {
                s.iter()
                    .map(|e| table[s.without(e).bits() as usize])
                    .max()
                    .unwrap()
            };
        }
        Ok(RankTable { n, table })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn r(&self, s: Subset) -> usize {
        self.table[s.bits() as usize] as usize
    }

    pub fn rank_full(&self) -> usize {
        self.r(self.full_set())
    }

    pub fn lambda(&self, s: Subset) -> usize {
        self.r(s) + self.r(self.full_set().minus(s)) - self.rank_full()
    }

    pub fn cl(&self, s: Subset) -> Subset {
        let mut out = s;
        for x in self.full_set().minus(s).iter() {
            if self.r(s.with(x)) == self.r(s) {
                out = out.with(x);
            }
        }
        out
    }

    pub fn dual(&self) -> RankTable {
        let size = 1usize << self.n;
        let full = self.rank_full();
        let mut table = vec![0u8; size];
        for bits in 0..size {
            let s = Subset::from_bits(bits as u32);
            table[bits] =
                (s.len() + self.r(self.full_set().minus(s)) - full) as u8;
        }
        RankTable { n: self.n, table }
    }

    fn expand(s: Subset, e: usize) -> Subset {
        let mut out = Subset::EMPTY;
        for i in s.iter() {
            out = out.with(if i < e { i } else { i + 1 });
        }
        out
    }

    pub fn delete(&self, e: usize) -> RankTable {
        let n = self.n - 1;
        let table = (0..1usize << n)
            .map(|bits| self.table[Self::expand(Subset::from_bits(bits as u32), e).bits() as usize])
            .collect();
        RankTable { n, table }
    }

    pub fn contract(&self, e: usize) -> RankTable {
        let n = self.n - 1;
        let re = self.r(Subset::singleton(e));
        let table = (0..1usize << n)
            .map(|bits| {
                let s = Self::expand(Subset::from_bits(bits as u32), e).with(e);
                (self.r(s) - re) as u8
            })
            .collect();
        RankTable { n, table }
    }

    /// Removes loops and all but the lowest-index member of each parallel
    /// class.
    pub fn simplify(&self) -> RankTable {
        let mut drop: Vec<usize> = Vec::new();
        for e in 0..self.n {
            let redundant = self.r(Subset::singleton(e)) == 0
                || (0..e).any(|f| {
                    self.r(Subset::singleton(f)) == 1
                        && self.r(Subset::from_indices([e, f])) == 1
                });
            if redundant {
                drop.push(e);
            }
        }
        let mut cur = self.clone();
        for &e in drop.iter().rev() {
            cur = cur.delete(e);
        }
        cur
    }

    pub fn cosimplify(&self) -> RankTable {
        self.dual().simplify().dual()
    }

    /// Literal scan over all partitions for 1- and 2-separations.
    pub fn is_three_connected(&self) -> bool {
        let full = self.full_set();
        for bits in 1..full.bits() {
            let s = Subset::from_bits(bits);
            let t = full.minus(s);
            let l = self.lambda(s);
            if l == 0 {
                return false;
            }
            if l <= 1 && s.len() >= 2 && t.len() >= 2 {
                return false;
            }
        }
        true
    }

    /// Vertical 3-separation triples straight from the definition: both
    /// (X ∪ e, Y) and (X, Y ∪ e) are vertical 3-separations and e lies in
    /// cl(X) ∩ cl(Y). Canonicalized so the smaller side (ties by bits)
    /// comes first.
    pub fn vertical_triples(&self) -> Vec<(Subset, usize, Subset)> {
        let full = self.full_set();
        let mut out: Vec<(Subset, usize, Subset)> = Vec::new();
        for e in 0..self.n {
            let rest = full.without(e);
            let sub_bits = rest.bits();
            let mut bits = sub_bits;
            loop {
                let x = Subset::from_bits(bits);
                let y = rest.minus(x);
                let good = self.is_vertical_3_separation(x.with(e), y)
                    && self.is_vertical_3_separation(x, y.with(e))
                    && self.cl(x).contains(e)
                    && self.cl(y).contains(e);
                if good {
                    let (a, b) = if (x.len(), x.bits()) <= (y.len(), y.bits()) {
                        (x, y)
                    } else {
                        (y, x)
                    };
                    if !out.contains(&(a, e, b)) {
                        out.push((a, e, b));
                    }
                }
                if bits == 0 {
                    break;
                }
                bits = (bits - 1) & sub_bits;
            }
        }
        out.sort_by_key(|&(x, e, _)| (x.len(), x.bits(), e));
        out
    }

    fn is_vertical_3_separation(&self, a: Subset, b: Subset) -> bool {
        a.len() >= 3
            && b.len() >= 3
            && self.lambda(a) <= 2
            && self.r(a) >= 3
            && self.r(b) >= 3
    }

    /// (deletable, contractible) for one element, entirely by definition.
    pub fn elasticity(&self, e: usize) -> (bool, bool) {
        let deletable = self.delete(e).cosimplify().is_three_connected();
        let contractible = self.contract(e).simplify().is_three_connected();
        (deletable, contractible)
    }
}
