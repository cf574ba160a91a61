//! One test per acceptance criterion, each printing a single pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines even on success.

use std::sync::OnceLock;

use matroidlab::catalog::{
    glued_theta_uniform, mk4, random_linear, theta, theta_minus, uniform, wheel, whirl,
};
use matroidlab::connectivity::{
    is_three_connected, lambda, vertical_3_separations, vertical_3_separations_marked,
};
use matroidlab::core::{subsets_by_size, Matroid, Subset};
use matroidlab::elasticity::elasticity_report;
use matroidlab::structures::{fans, segments, theta_separators, ThetaKind, ThetaSide};
use matroidlab::verify::{
    oracle_crosscheck, verify_bixby, verify_corollary2, verify_theorem1, Theorem1Disjunct,
};

fn report(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("ACCEPTANCE {criterion}: pass");
    } else {
        println!("ACCEPTANCE {criterion}: FAIL");
        for f in failures {
            println!("  - {f}");
        }
        panic!("{criterion}: {} failure(s)", failures.len());
    }
}

type Corpus = Vec<(String, Matroid)>;

fn catalog_corpus() -> Corpus {
    let mut c: Corpus = Vec::new();
    for n in 3..=6 {
        c.push((format!("theta({n})"), theta(n).unwrap()));
    }
    for r in [4, 5] {
        c.push((format!("wheel({r})"), wheel(r).unwrap()));
        c.push((format!("whirl({r})"), whirl(r).unwrap()));
    }
    c.push(("mk4".into(), mk4().unwrap()));
    for (r, n) in [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6), (4, 8)] {
        c.push((format!("uniform({r},{n})"), uniform(r, n).unwrap()));
    }
    c.push(("glue(theta(4),uniform(2,5))".into(), glued_theta_uniform(4, 5).unwrap()));
    c
}

fn random_small() -> Corpus {
    (0..50)
        .map(|seed| {
            (
                format!("randomLinear(5,3,6,{seed})"),
                random_linear(5, 3, 6, seed).unwrap(),
            )
        })
        .collect()
}

fn random_medium() -> Corpus {
    (0..100)
        .map(|seed| {
            let n = 8 + (seed as usize) % 3;
            (
                format!("randomLinear(3,4,{n},{seed})"),
                random_linear(3, 4, n, seed).unwrap(),
            )
        })
        .collect()
}

fn full_corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut c = catalog_corpus();
        c.extend(random_small());
        c.extend(random_medium());
        c
    })
}

/// theta(n) with w_i and z_i interchanged, as a subset map.
fn swap_wz(n: usize, s: Subset) -> Subset {
    Subset::from_indices(s.iter().map(|i| if i < n { i + n } else { i - n }))
}

#[test]
fn criterion_01_theta_family() {
    let mut failures = Vec::new();
    for n in 3..=6 {
        let t = theta(n).unwrap();
        if t.rank_full() != n {
            failures.push(format!("theta({n}) has rank {}", t.rank_full()));
        }
        if !is_three_connected(&t) {
            failures.push(format!("theta({n}) is not 3-connected"));
        }
        // self-dual under w_i <-> z_i: dual rank of S equals rank of swapped S
        let dual = t.dual();
        for bits in 0..1u32 << (2 * n) {
            let s = Subset::from_bits(bits);
            if dual.rank(s).unwrap() != t.rank(swap_wz(n, s)).unwrap() {
                failures.push(format!("theta({n}) self-duality fails at {s:?}"));
                break;
            }
        }
    }
    // theta(3) is rank-function-equal to M(K4) under some bijection
    let t3 = theta(3).unwrap();
    let k4 = mk4().unwrap();
    let mut perm = [0usize; 6];
    let mut found = false;
    fn search(t3: &Matroid, k4: &Matroid, perm: &mut [usize; 6], used: u8, pos: usize) -> bool {
        if pos == 6 {
            return (0..1u32 << 6).all(|bits| {
                let s = Subset::from_bits(bits);
                let mapped = Subset::from_indices(s.iter().map(|i| perm[i]));
                t3.rank(s).unwrap() == k4.rank(mapped).unwrap()
            });
        }
        for target in 0..6 {
            if used >> target & 1 == 0 {
                perm[pos] = target;
                if search(t3, k4, perm, used | 1 << target, pos + 1) {
                    return true;
                }
            }
        }
        false
    }
    if search(&t3, &k4, &mut perm, 0, 0) {
        found = true;
    }
    if !found {
        failures.push("no rank-preserving bijection theta(3) -> M(K4)".into());
    }
    report("criterion 1 (theta family)", &failures);
}

#[test]
fn criterion_02_no_elastic_families() {
    let mut failures = Vec::new();
    let families: Vec<(String, Matroid)> = vec![
        ("wheel(4)".into(), wheel(4).unwrap()),
        ("wheel(5)".into(), wheel(5).unwrap()),
        ("whirl(4)".into(), whirl(4).unwrap()),
        ("whirl(5)".into(), whirl(5).unwrap()),
        ("theta(4)".into(), theta(4).unwrap()),
        ("theta(5)".into(), theta(5).unwrap()),
    ];
    for (name, m) in &families {
        match elasticity_report(m) {
            Ok(rep) if rep.elastic_count() != 0 => {
                failures.push(format!("{name}: {} elastic elements", rep.elastic_count()))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    for (name, m) in [("theta(4)", theta(4).unwrap()), ("theta(5)", theta(5).unwrap())] {
        if fans(&m).iter().any(|f| f.len() >= 4) {
            failures.push(format!("{name}: has a fan of length >= 4"));
        }
    }
    report("criterion 2 (no-elastic families)", &failures);
}

#[test]
fn criterion_03_small_matroid_elasticity() {
    let mut failures = Vec::new();
    let mut corpus: Corpus = vec![("mk4".into(), mk4().unwrap())];
    for (r, n) in [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6)] {
        corpus.push((format!("uniform({r},{n})"), uniform(r, n).unwrap()));
    }
    corpus.extend(random_small());
    for (name, m) in &corpus {
        let n = m.size();
        assert!((4..=6).contains(&n), "{name} outside size window");
        match elasticity_report(m) {
            Ok(rep) if rep.elastic_count() != n => failures.push(format!(
                "{name}: {} of {} elements elastic",
                rep.elastic_count(),
                n
            )),
            Ok(_) => {}
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    report("criterion 3 (small-matroid elasticity)", &failures);
}

#[test]
fn criterion_04_bixby() {
    let mut failures = Vec::new();
    for (name, m) in full_corpus() {
        match verify_bixby(m) {
            Ok(out) if !out.passed() => {
                failures.push(format!("{name}: {:?}", out.violations))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    report("criterion 4 (Bixby's lemma)", &failures);
}

#[test]
fn criterion_05_theorem1_trichotomy() {
    let mut failures = Vec::new();
    for (name, m) in full_corpus() {
        match verify_theorem1(m) {
            Ok(rep) if !rep.outcome.passed() => {
                failures.push(format!("{name}: {:?}", rep.outcome.violations))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let wheel_rep = verify_theorem1(&wheel(4).unwrap()).unwrap();
    if !wheel_rep
        .instances
        .iter()
        .any(|i| i.disjunct == Theorem1Disjunct::FourFan)
    {
        failures.push("wheel(4): 4-fan disjunct never fires".into());
    }
    let glued_rep = verify_theorem1(&glued_theta_uniform(4, 5).unwrap()).unwrap();
    if !glued_rep
        .instances
        .iter()
        .any(|i| matches!(i.disjunct, Theorem1Disjunct::ThetaSeparator { .. }))
    {
        failures.push("glued: theta-separator disjunct never fires".into());
    }
    report("criterion 5 (theorem 1 trichotomy)", &failures);
}

#[test]
fn criterion_06_corollary2() {
    let mut failures = Vec::new();
    for (name, m) in full_corpus() {
        match verify_corollary2(m) {
            Ok(out) if !out.passed() => {
                failures.push(format!("{name}: {:?}", out.violations))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let u48 = uniform(4, 8).unwrap();
    let out = verify_corollary2(&u48).unwrap();
    if !out.applicable || !out.passed() {
        failures.push("uniform(4,8): corollary hypotheses should hold and pass".into());
    }
    if fans(&u48).iter().any(|f| f.len() >= 4) {
        failures.push("uniform(4,8): unexpected 4-element fan".into());
    }
    if !theta_separators(&u48).unwrap().is_empty() {
        failures.push("uniform(4,8): unexpected theta-separator".into());
    }
    if elasticity_report(&u48).unwrap().elastic_count() < 4 {
        failures.push("uniform(4,8): fewer than 4 elastic elements".into());
    }
    report("criterion 6 (corollary)", &failures);
}

#[test]
fn criterion_07_theta_separator_elasticity() {
    let mut failures = Vec::new();
    // full theta witness: no element of the separator support is elastic
    let g = glued_theta_uniform(4, 5).unwrap();
    let wits = theta_separators(&g).unwrap();
    let primal = wits
        .iter()
        .find(|w| w.side == ThetaSide::Primal && w.structure.kind == ThetaKind::Theta)
        .expect("glued instance must carry a primal theta witness");
    let rep = elasticity_report(&g).unwrap();
    let elastic = Subset::from_indices(rep.elastic_elements());
    if !primal.union().intersect(elastic).is_empty() {
        failures.push("glued: elastic element inside the theta-separator".into());
    }
    // theta-minus host: delete one segment-image element from the glued
    // instance, re-verify the hypotheses, then the unpartnered cosegment
    // element is the separator's only elastic element
    let e4 = g.ground().index_of("e4").unwrap();
    let host = g.delete(Subset::singleton(e4)).unwrap();
    if !is_three_connected(&host) || host.rank_full() < 4 || host.corank_full() < 4 {
        failures.push("theta-minus host: hypotheses fail".into());
    } else {
        let wits = theta_separators(&host).unwrap();
        match wits
            .iter()
            .find(|w| w.side == ThetaSide::Primal && w.structure.kind == ThetaKind::ThetaMinus)
        {
            None => failures.push("theta-minus host: no primal theta-minus witness".into()),
            Some(wit) => {
                let unpartnered = wit.structure.unpartnered.expect("theta-minus has one");
                let rep = elasticity_report(&host).unwrap();
                let elastic = Subset::from_indices(rep.elastic_elements());
                let inside = wit.union().intersect(elastic);
                if inside != Subset::singleton(unpartnered) {
                    failures.push(format!(
                        "theta-minus host: elastic-in-separator set {:?} is not exactly the \
                         unpartnered element {}",
                        host.ground().label_set(inside),
                        host.ground().label(unpartnered)
                    ));
                }
            }
        }
    }
    report("criterion 7 (theta-separator elasticity)", &failures);
}

#[test]
fn criterion_08_fan_elasticity_pattern() {
    let mut failures = Vec::new();
    for (name, m) in [("wheel(4)", wheel(4).unwrap()), ("wheel(5)", wheel(5).unwrap())] {
        let rep = elasticity_report(&m).unwrap();
        let elastic = Subset::from_indices(rep.elastic_elements());
        for f in fans(&m) {
            let inside = f.element_set().intersect(elastic);
            let allowed = match f.len() {
                4 => Subset::from_indices([f.order[1], f.order[2]]),
                5 => Subset::singleton(f.order[2]),
                _ => Subset::EMPTY,
            };
            if !inside.is_subset_of(allowed) {
                failures.push(format!(
                    "{name}: fan {:?} has elastic elements outside the allowed positions",
                    f.order
                ));
            }
            if !inside.is_empty() {
                failures.push(format!("{name}: fan {:?} has elastic elements", f.order));
            }
        }
    }
    report("criterion 8 (fan elasticity pattern)", &failures);
}

#[test]
fn criterion_09_dual_route_and_oracle() {
    let mut failures = Vec::new();
    for (name, m) in full_corpus() {
        // elasticity_report fails with a consistency error on any
        // route-A/route-B disagreement
        if let Err(e) = elasticity_report(m) {
            failures.push(format!("{name}: {e}"));
        }
        if m.size() <= 12 {
            match oracle_crosscheck(m) {
                Ok(out) if !out.passed() => {
                    failures.push(format!("{name}: {:?}", out.violations))
                }
                Ok(_) => {}
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
    }
    report("criterion 9 (dual-route and oracle consistency)", &failures);
}

// criterion 10: micro-lemma property suites, exhaustive at |E| <= 8

fn small_corpus() -> Corpus {
    let mut c: Corpus = Vec::new();
    for (r, n) in [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6), (4, 8)] {
        c.push((format!("uniform({r},{n})"), uniform(r, n).unwrap()));
    }
    c.push(("mk4".into(), mk4().unwrap()));
    c.push(("wheel(4)".into(), wheel(4).unwrap()));
    c.push(("whirl(4)".into(), whirl(4).unwrap()));
    c.push(("theta(3)".into(), theta(3).unwrap()));
    c.push(("theta(4)".into(), theta(4).unwrap()));
    c.push(("thetaMinus(4)".into(), theta_minus(4).unwrap()));
    let g = glued_theta_uniform(4, 5).unwrap();
    let e4 = g.ground().index_of("e4").unwrap();
    c.push(("glued\\e4".into(), g.delete(Subset::singleton(e4)).unwrap()));
    for seed in 0..5 {
        c.push((format!("random6({seed})"), random_linear(5, 3, 6, seed).unwrap()));
        c.push((format!("random8({seed})"), random_linear(3, 4, 8, seed).unwrap()));
    }
    c
}

fn lambda_table(m: &Matroid) -> Vec<usize> {
    (0..1u32 << m.size())
        .map(|bits| lambda(m, Subset::from_bits(bits)).unwrap())
        .collect()
}

/// Literal vertical 3-separation triple predicate, from the definition.
fn is_vertical_triple(m: &Matroid, x: Subset, e: usize, y: Subset) -> bool {
    let vert = |a: Subset, b: Subset| {
        a.len() >= 3
            && b.len() >= 3
            && lambda(m, a).unwrap() <= 2
            && m.rank(a).unwrap() >= 3
            && m.rank(b).unwrap() >= 3
    };
    vert(x.with(e), y)
        && vert(x, y.with(e))
        && m.closure(x).unwrap().contains(e)
        && m.closure(y).unwrap().contains(e)
}

#[test]
fn criterion_10_micro_lemma_suites() {
    let mut failures = Vec::new();
    for (name, m) in small_corpus() {
        let n = m.size();
        assert!(n <= 8, "{name} too large for the exhaustive suite");
        let full = m.full_set();
        let lam = lambda_table(&m);
        let l = |s: Subset| lam[s.bits() as usize];

        // lambda submodularity
        'submod: for xb in 0..1u32 << n {
            for yb in 0..1u32 << n {
                let (x, y) = (Subset::from_bits(xb), Subset::from_bits(yb));
                if l(x) + l(y) < l(x.intersect(y)) + l(x.union(y)) {
                    failures.push(format!("{name}: lambda submodularity fails at {x:?},{y:?}"));
                    break 'submod;
                }
            }
        }

        if is_three_connected(&m) {
            // uncrossing (k = 3)
            'uncross: for xb in 0..1u32 << n {
                for yb in 0..1u32 << n {
                    let (x, y) = (Subset::from_bits(xb), Subset::from_bits(yb));
                    if l(x) > 2 || l(y) > 2 {
                        continue;
                    }
                    if x.intersect(y).len() >= 2 && l(x.union(y)) > 2 {
                        failures.push(format!("{name}: uncrossing (i) fails at {x:?},{y:?}"));
                        break 'uncross;
                    }
                    if full.minus(x.union(y)).len() >= 2 && l(x.intersect(y)) > 2 {
                        failures.push(format!("{name}: uncrossing (ii) fails at {x:?},{y:?}"));
                        break 'uncross;
                    }
                }
            }

            // 3-separating single-element extension characterization
            for xb in 0..1u32 << n {
                let x = Subset::from_bits(xb);
                if l(x) != 2 {
                    continue;
                }
                let in_cl = m.closure(x).unwrap().union(m.coclosure(x).unwrap());
                for e in full.minus(x).iter() {
                    if (l(x.with(e)) <= 2) != in_cl.contains(e) {
                        failures.push(format!(
                            "{name}: 3-separating extension characterization fails at {x:?}+{e}"
                        ));
                    }
                }
            }

            // triple shrinking: (X - cl(Y), e, cl(Y) - e) stays vertical,
            // and dually for cyclic triples
            for (mm, kind) in [(m.clone(), "vertical"), (m.dual(), "cyclic-as-dual")] {
                for t in vertical_3_separations(&mm).unwrap() {
                    for (x, y) in [(t.x, t.y), (t.y, t.x)] {
                        let cly = mm.closure(y).unwrap();
                        if !is_vertical_triple(&mm, x.minus(cly), t.e, cly.without(t.e)) {
                            failures.push(format!(
                                "{name}: {kind} triple shrinking fails at ({x:?},{},{y:?})",
                                t.e
                            ));
                        }
                    }
                }
            }

            // maximal vertical sides are closed
            for t in vertical_3_separations_marked(&m).unwrap() {
                if t.y_maximal {
                    let aug = t.y.with(t.e);
                    if m.closure(aug).unwrap() != aug {
                        failures.push(format!("{name}: maximal side {aug:?} is not closed"));
                    }
                }
            }

            // segment deletion: |L| >= 4 keeps single deletions 3-connected
            for seg in segments(&m) {
                if seg.elements.len() >= 4 {
                    for e in seg.elements.iter() {
                        let del = m.delete(Subset::singleton(e)).unwrap();
                        if !is_three_connected(&del) {
                            failures.push(format!(
                                "{name}: deleting {} from a long segment breaks 3-connectivity",
                                m.ground().label(e)
                            ));
                        }
                    }
                }
            }
        }

        // orthogonality: e in cl(X) iff e not in cl*(Y), X and Y
        // partitioning E - e
        for e in 0..n {
            let rest = full.without(e);
            let mut sub = rest.bits();
            loop {
                let x = Subset::from_bits(sub);
                let y = rest.minus(x);
                let in_cl = m.closure(x).unwrap().contains(e);
                let in_costar = m.coclosure(y).unwrap().contains(e);
                if in_cl == in_costar {
                    failures.push(format!("{name}: orthogonality fails at e={e} X={x:?}"));
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest.bits();
            }
        }
        let _ = subsets_by_size(n); // keep enumeration helper exercised
    }
    report("criterion 10 (micro-lemma suites)", &failures);
}
