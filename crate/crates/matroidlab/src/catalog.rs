//! Constructors for the matroid families used as the verification corpus:
//! the theta family, wheels and whirls, uniform matroids, generalized
//! parallel connections across a line, and seeded random linear matroids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_three_connected;
use crate::core::{default_labels, Backend, Glued, GroundSet, Matroid, Subset};
use crate::error::{Error, Result};

/// U_{r,n} on labels e1..en.
pub fn uniform(rank: usize, n: usize) -> Result<Matroid> {
    if rank > n {
        return Err(Error::Construction(format!("uniform({rank},{n}): rank > size")));
    }
    Ok(Matroid::new(
        GroundSet::new(default_labels("e", n))?,
        Backend::Uniform { rank },
    ))
}

/// The cycle matroid of K4, realized as the rank-3 wheel.
pub fn mk4() -> Result<Matroid> {
    wheel(3)
}

/// Graphic matroid of the r-spoke wheel: hub vertex 0, rim vertices 1..r.
/// Labels r1..rr for rim edges, s1..sr for spokes.
pub fn wheel(r: usize) -> Result<Matroid> {
    if r < 2 {
        return Err(Error::Construction(format!("wheel({r}): need r >= 2")));
    }
    let mut labels = default_labels("r", r);
    labels.extend(default_labels("s", r));
    let mut edges = Vec::with_capacity(2 * r);
    for i in 0..r {
        edges.push((1 + i, 1 + (i + 1) % r)); // rim edge ri
    }
    for i in 0..r {
        edges.push((0, 1 + i)); // spoke si
    }
    Ok(Matroid::new(GroundSet::new(labels)?, Backend::Graphic { edges }))
}

/// Whirl: the wheel with its rim circuit-hyperplane relaxed into a basis.
pub fn whirl(r: usize) -> Result<Matroid> {
    let w = wheel(r)?;
    let rim = Subset::from_indices(0..r);
    w.relax(rim)
}

/// The circuit list defining theta(n), in ground-set indices
/// (w1..wn = 0..n-1, z1..zn = n..2n-1).
fn theta_circuits(n: usize) -> Vec<Subset> {
    let z_all = Subset::from_indices(n..2 * n);
    let mut cs = Vec::new();
    // (i) all 3-element subsets of W
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                cs.push(Subset::from_indices([i, j, k]));
            }
        }
    }
    // (ii) (Z - zi) + wi
    for i in 0..n {
        cs.push(z_all.without(n + i).with(i));
    }
    // (iii) (Z - zi) + {wj, wk}, i, j, k distinct
    for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                if i != j && i != k {
                    cs.push(z_all.without(n + i).with(j).with(k));
                }
            }
        }
    }
    cs
}

/// theta(n): the 2n-element rank-n matroid on W ∪ Z whose circuits are the
/// 3-subsets of W, the sets (Z - zi) + wi, and the sets (Z - zi) + {wj, wk}.
/// Realized as an explicit-bases backend derived from that circuit list.
pub fn theta(n: usize) -> Result<Matroid> {
    if n < 2 {
        return Err(Error::Construction(format!("theta({n}): need n >= 2")));
    }
    let mut labels = default_labels("w", n);
    labels.extend(default_labels("z", n));
    let ground = GroundSet::new(labels)?;
    let circuits = theta_circuits(n);
    let total = 2 * n;
    let independent: Vec<Subset> = (0..1u64 << total)
        .map(|b| Subset::from_bits(b as u32))
        .filter(|s| !circuits.iter().any(|c| c.is_subset_of(*s)))
        .collect();
    let rank = independent.iter().map(|s| s.len()).max().unwrap_or(0);
    let bases: Vec<Subset> = independent.into_iter().filter(|s| s.len() == rank).collect();
    Ok(Matroid::new(ground, Backend::Bases { bases }))
}

/// theta(n) minus one segment element; well defined up to isomorphism, so we
/// delete w_n.
pub fn theta_minus(n: usize) -> Result<Matroid> {
    if n < 3 {
        return Err(Error::Construction(format!("theta_minus({n}): need n >= 3")));
    }
    let t = theta(n)?;
    t.delete(Subset::singleton(n - 1))
}

fn is_simple(m: &Matroid) -> bool {
    let n = m.size();
    (0..n).all(|e| !m.is_loop(e))
        && (0..n).all(|e| {
            (e + 1..n).all(|f| m.r(Subset::from_indices([e, f])) == 2)
        })
}

/// Generalized parallel connection of `theta_part` and `host` across a
/// shared line. `line_map` pairs segment-element labels of `theta_part`
/// with labels of a segment of `host`; the paired elements are identified
/// and keep the host's labels.
pub fn glue(theta_part: &Matroid, host: &Matroid, line_map: &[(String, String)]) -> Result<Matroid> {
    let n = line_map.len();
    if n < 2 {
        return Err(Error::Construction("glue: line map needs at least 2 pairs".into()));
    }
    if !is_three_connected(host) {
        return Err(Error::Construction("glue: host is not 3-connected".into()));
    }
    let mut w_set = Subset::EMPTY;
    let mut image = Subset::EMPTY;
    let mut w_to_host: Vec<(usize, usize)> = Vec::with_capacity(n);
    for (wl, hl) in line_map {
        let wi = theta_part
            .ground()
            .index_of(wl)
            .ok_or_else(|| Error::Construction(format!("glue: no element {wl:?} in theta part")))?;
        let hi = host
            .ground()
            .index_of(hl)
            .ok_or_else(|| Error::Construction(format!("glue: no element {hl:?} in host")))?;
        if w_set.contains(wi) || image.contains(hi) {
            return Err(Error::Construction("glue: line map is not injective".into()));
        }
        w_set = w_set.with(wi);
        image = image.with(hi);
        w_to_host.push((wi, hi));
    }
    // Both traces of the shared set must be lines: rank 2, no parallel pairs.
    for (part, s, name) in [(theta_part, w_set, "theta side"), (host, image, "host side")] {
        if part.r(s) != 2 {
            return Err(Error::Construction(format!("glue: shared set is not a line ({name})")));
        }
        let idx = s.indices();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                if part.r(Subset::from_indices([i, j])) != 2 {
                    return Err(Error::Construction(format!(
                        "glue: shared set has a parallel pair ({name})"
                    )));
                }
            }
        }
    }

    let host_n = host.size();
    let rest: Vec<usize> = theta_part.full_set().minus(w_set).indices();
    let mut labels: Vec<String> = host.ground().labels().to_vec();
    for &i in &rest {
        labels.push(theta_part.ground().label(i).to_string());
    }
    let ground = GroundSet::new(labels)
        .map_err(|e| Error::Construction(format!("glue: {e}")))?;

    let size = ground.size();
    let mut to_left: Vec<Option<usize>> = vec![None; size];
    let mut to_right: Vec<Option<usize>> = vec![None; size];
    let mut from_left: Vec<usize> = vec![0; theta_part.size()];
    let mut from_right: Vec<usize> = vec![0; host_n];
    for h in 0..host_n {
        to_right[h] = Some(h);
        from_right[h] = h;
    }
    for &(wi, hi) in &w_to_host {
        to_left[hi] = Some(wi);
        from_left[wi] = hi;
    }
    for (k, &ti) in rest.iter().enumerate() {
        to_left[host_n + k] = Some(ti);
        from_left[ti] = host_n + k;
    }

    let glued = Matroid::new(
        ground,
        Backend::Glued(Glued {
            left: theta_part.clone(),
            right: host.clone(),
            to_left,
            to_right,
            from_left,
            from_right,
        }),
    );

    // Post-construction validation: rank axioms, and both factors unchanged
    // under restriction.
    if glued.size() <= 12 {
        glued
            .check_rank_axioms()
            .map_err(|e| Error::Construction(format!("glue: rank axioms fail: {e}")))?;
    }
    for bits in 0..1u64 << theta_part.size() {
        let s = Subset::from_bits(bits as u32);
        let mapped = Subset::from_indices(s.iter().map(|i| glued_from_left(&glued, i)));
        if glued.r(mapped) != theta_part.r(s) {
            return Err(Error::Construction(
                "glue: restriction to the theta part changed".into(),
            ));
        }
    }
    for bits in 0..1u64 << host_n {
        let s = Subset::from_bits(bits as u32);
        if glued.r(s) != host.r(s) {
            return Err(Error::Construction("glue: restriction to the host changed".into()));
        }
    }
    Ok(glued)
}

fn glued_from_left(glued: &Matroid, left_idx: usize) -> usize {
    match glued.backend() {
        Backend::Glued(g) => g.from_left[left_idx],
        _ => unreachable!("glued_from_left on non-glued matroid"),
    }
}

/// Canonical glued instance: theta(n) attached to uniform(2, host_size)
/// along w_i -> e_i.
pub fn glued_theta_uniform(n: usize, host_size: usize) -> Result<Matroid> {
    let t = theta(n)?;
    let host = uniform(2, host_size)?;
    let map: Vec<(String, String)> = (1..=n)
        .map(|i| (format!("w{i}"), format!("e{i}")))
        .collect();
    glue(&t, &host, &map)
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

const RANDOM_LINEAR_RETRIES: usize = 2000;

/// Deterministic pseudo-random r x n matrix over GF(p), retried until the
/// resulting matroid is simple, cosimple, and 3-connected.
pub fn random_linear(p: u32, rank: usize, n: usize, seed: u64) -> Result<Matroid> {
    if !is_prime(p) {
        return Err(Error::Construction(format!("random_linear: {p} is not prime")));
    }
    if p > 1 << 16 {
        return Err(Error::Construction("random_linear: prime too large".into()));
    }
    if rank > n {
        return Err(Error::Construction("random_linear: rank > size".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground = GroundSet::new(default_labels("e", n))?;
    for _ in 0..RANDOM_LINEAR_RETRIES {
        let columns: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..rank).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let m = Matroid::new(ground.clone(), Backend::Linear { prime: p, columns });
        if m.rank_full() == rank && is_simple(&m) && is_simple(&m.dual()) && is_three_connected(&m)
        {
            return Ok(m);
        }
    }
    Err(Error::Construction(format!(
        "random_linear(p={p}, r={rank}, n={n}, seed={seed}): retry budget exhausted"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::circuits;

    #[test]
    fn theta2_is_two_parallel_pairs() {
        let t = theta(2).unwrap();
        assert_eq!(t.rank_full(), 2);
        let cs = circuits(&t).unwrap();
        // circuits {w1,z2} and {w2,z1}
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn theta_rank_is_n() {
        for n in 2..=6 {
            assert_eq!(theta(n).unwrap().rank_full(), n, "theta({n})");
        }
    }

    #[test]
    fn theta4_circuit_census_matches_definition() {
        let t = theta(4).unwrap();
        let mut expected = theta_circuits(4);
        expected.sort_by_key(|s| (s.len(), s.bits()));
        let got = circuits(&t).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn theta_minus_is_deletion_of_wn() {
        let tm = theta_minus(4).unwrap();
        assert_eq!(tm.size(), 7);
        assert_eq!(tm.ground().label(3), "z1");
        assert_eq!(tm.rank_full(), 4);
    }

    #[test]
    fn wheel3_is_mk4() {
        let w = wheel(3).unwrap();
        assert_eq!(w.size(), 6);
        assert_eq!(w.rank_full(), 3);
        assert_eq!(circuits(&w).unwrap().len(), 7); // 4 triangles + 3 squares
    }

    #[test]
    fn whirl_basics() {
        let wh = whirl(3).unwrap();
        assert_eq!(wh.rank_full(), 3);
        assert_eq!(wh.size(), 6);
        // rim is now a basis
        assert_eq!(wh.r(Subset::from_indices(0..3)), 3);
        wh.check_rank_axioms().unwrap();
        assert_eq!(whirl(2).unwrap().rank_full(), 2); // whirl(2) = U_{2,4}
    }

    #[test]
    fn random_linear_is_deterministic() {
        let a = random_linear(3, 4, 9, 7).unwrap();
        let b = random_linear(3, 4, 9, 7).unwrap();
        for bits in (0..1u64 << 9).step_by(17) {
            let s = Subset::from_bits(bits as u32);
            assert_eq!(a.r(s), b.r(s));
        }
        assert!(is_three_connected(&a));
    }

    #[test]
    fn glue_theta4_u25() {
        let g = glued_theta_uniform(4, 5).unwrap();
        assert_eq!(g.size(), 9);
        assert_eq!(g.rank_full(), 4);
        assert!(is_three_connected(&g));
    }
}
