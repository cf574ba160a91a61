//! The matroid document format, report serialization, and conversions
//! between library types and their label-based JSON forms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::connectivity::{
    cyclic_3_separations_marked, is_three_connected, vertical_3_separations_marked,
    SeparationTriple,
};
use crate::core::{default_labels, Backend, GroundSet, Matroid, Subset};
use crate::elasticity::{elasticity_report, ElasticityReport};
use crate::error::{Error, Result};
use crate::structures::{fans, segments, theta_separators, Fan, Segment, ThetaKind, ThetaSide, ThetaWitness};
use crate::verify::VerificationOutcome;

/// Tree-structured matroid description. Labels are explicit except for
/// constructions, which auto-generate them (w1../z1.. for theta, r1../s1..
/// for wheels, e1.. otherwise).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum MatroidDocument {
    Uniform {
        rank: usize,
        size: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Linear {
        prime: u32,
        columns: BTreeMap<String, Vec<u32>>,
    },
    Graphic {
        edges: Vec<(usize, usize, String)>,
    },
    Bases {
        elements: Vec<String>,
        bases: Vec<Vec<String>>,
    },
    Construction(Construction),
    Derived(Derived),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "camelCase")]
pub enum Construction {
    Theta { n: usize },
    ThetaMinus { n: usize },
    Wheel { r: usize },
    Whirl { r: usize },
    Uniform { rank: usize, size: usize },
    Mk4 {},
    Glued {
        theta: Box<MatroidDocument>,
        host: Box<MatroidDocument>,
        #[serde(rename = "lineMap")]
        line_map: Vec<(String, String)>,
    },
    RandomLinear { prime: u32, rank: usize, size: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "op", rename_all = "camelCase")]
pub enum Derived {
    Dual { of: Box<MatroidDocument> },
    Delete { of: Box<MatroidDocument>, elements: Vec<String> },
    Contract { of: Box<MatroidDocument>, elements: Vec<String> },
    Relax {
        of: Box<MatroidDocument>,
        #[serde(rename = "circuitHyperplane")]
        circuit_hyperplane: Vec<String>,
    },
    Glue {
        theta: Box<MatroidDocument>,
        host: Box<MatroidDocument>,
        #[serde(rename = "lineMap")]
        line_map: Vec<(String, String)>,
    },
}

/// Parses a document and constructs the matroid, guarded by
/// `max_elements` and validated (rank axioms for ground sets of at most 12
/// elements).
pub fn parse(text: &str, max_elements: usize) -> Result<Matroid> {
    let doc: MatroidDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    build(&doc, max_elements)
}

/// Constructs a matroid from an already-decoded document.
pub fn build(doc: &MatroidDocument, max_elements: usize) -> Result<Matroid> {
    let m = build_inner(doc, max_elements)?;
    if m.size() > max_elements {
        return Err(Error::Resource(format!(
            "matroid has {} elements, limit is {max_elements}",
            m.size()
        )));
    }
    if m.size() <= 12 {
        m.check_rank_axioms()
            .map_err(|e| Error::Parse(format!("document violates rank axioms: {e}")))?;
    }
    Ok(m)
}

fn ground(labels: Vec<String>, max_elements: usize) -> Result<GroundSet> {
    GroundSet::with_limit(labels, max_elements)
}

fn build_inner(doc: &MatroidDocument, max: usize) -> Result<Matroid> {
    match doc {
        MatroidDocument::Uniform { rank, size, labels } => {
            let labels = match labels {
                Some(ls) => {
                    if ls.len() != *size {
                        return Err(Error::Parse(format!(
                            "uniform: {} labels for size {size}",
                            ls.len()
                        )));
                    }
                    ls.clone()
                }
                None => default_labels("e", *size),
            };
            if *rank > *size {
                return Err(Error::Parse(format!("uniform: rank {rank} > size {size}")));
            }
            Ok(Matroid::new(ground(labels, max)?, Backend::Uniform { rank: *rank }))
        }
        MatroidDocument::Linear { prime, columns } => {
            let mut d = 2u64;
            let p = u64::from(*prime);
            while d * d <= p {
                if p % d == 0 {
                    return Err(Error::Parse(format!("linear: {prime} is not prime")));
                }
                d += 1;
            }
            if *prime < 2 {
                return Err(Error::Parse(format!("linear: {prime} is not prime")));
            }
            let labels: Vec<String> = columns.keys().cloned().collect();
            let height = columns
                .values()
                .next()
                .map(Vec::len)
                .ok_or_else(|| Error::Parse("linear: no columns".into()))?;
            let mut cols = Vec::with_capacity(labels.len());
            for (label, col) in columns {
                if col.len() != height {
                    return Err(Error::Parse(format!(
                        "linear: column {label:?} has {} entries, expected {height}",
                        col.len()
                    )));
                }
                if let Some(v) = col.iter().find(|&&v| v >= *prime) {
                    return Err(Error::Parse(format!(
                        "linear: column {label:?} entry {v} not reduced mod {prime}"
                    )));
                }
                cols.push(col.clone());
            }
            Ok(Matroid::new(
                ground(labels, max)?,
                Backend::Linear { prime: *prime, columns: cols },
            ))
        }
        MatroidDocument::Graphic { edges } => {
            let labels: Vec<String> = edges.iter().map(|(_, _, l)| l.clone()).collect();
            let es: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
            Ok(Matroid::new(ground(labels, max)?, Backend::Graphic { edges: es }))
        }
        MatroidDocument::Bases { elements, bases } => {
            let g = ground(elements.clone(), max)?;
            if bases.is_empty() {
                return Err(Error::Parse("bases: empty basis list".into()));
            }
            let width = bases[0].len();
            let mut sets = Vec::with_capacity(bases.len());
            for b in bases {
                if b.len() != width {
                    return Err(Error::Parse(format!(
                        "bases: basis {b:?} has {} elements, expected {width}",
                        b.len()
                    )));
                }
                let s = g.subset_of_labels(b).map_err(|e| Error::Parse(e.to_string()))?;
                if s.len() != width {
                    return Err(Error::Parse(format!("bases: basis {b:?} repeats an element")));
                }
                sets.push(s);
            }
            Ok(Matroid::new(g, Backend::Bases { bases: sets }))
        }
        MatroidDocument::Construction(c) => build_construction(c, max),
        MatroidDocument::Derived(d) => build_derived(d, max),
    }
}

fn build_construction(c: &Construction, max: usize) -> Result<Matroid> {
    match c {
        Construction::Theta { n } => catalog::theta(*n),
        Construction::ThetaMinus { n } => catalog::theta_minus(*n),
        Construction::Wheel { r } => catalog::wheel(*r),
        Construction::Whirl { r } => catalog::whirl(*r),
        Construction::Uniform { rank, size } => catalog::uniform(*rank, *size),
        Construction::Mk4 {} => catalog::mk4(),
        Construction::Glued { theta, host, line_map } => {
            let t = build_inner(theta, max)?;
            let h = build_inner(host, max)?;
            catalog::glue(&t, &h, line_map)
        }
        Construction::RandomLinear { prime, rank, size, seed } => {
            catalog::random_linear(*prime, *rank, *size, *seed)
        }
    }
}

fn build_derived(d: &Derived, max: usize) -> Result<Matroid> {
    match d {
        Derived::Dual { of } => Ok(build_inner(of, max)?.dual()),
        Derived::Delete { of, elements } => {
            let m = build_inner(of, max)?;
            let s = m.ground().subset_of_labels(elements)?;
            m.delete(s)
        }
        Derived::Contract { of, elements } => {
            let m = build_inner(of, max)?;
            let s = m.ground().subset_of_labels(elements)?;
            m.contract(s)
        }
        Derived::Relax { of, circuit_hyperplane } => {
            let m = build_inner(of, max)?;
            let s = m.ground().subset_of_labels(circuit_hyperplane)?;
            m.relax(s)
        }
        Derived::Glue { theta, host, line_map } => {
            let t = build_inner(theta, max)?;
            let h = build_inner(host, max)?;
            catalog::glue(&t, &h, line_map)
        }
    }
}

/// Canonical serialization of a document (sorted keys, stable bytes).
pub fn document_to_string(doc: &MatroidDocument) -> String {
    let value = serde_json::to_value(doc).expect("document serialization cannot fail");
    serde_json::to_string_pretty(&value).expect("json value printing cannot fail")
}

// label-based JSON views of the library types

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ElementStatusJson {
    pub element: String,
    pub deletable: bool,
    pub contractible: bool,
    pub elastic: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ElasticityJson {
    pub applicable: bool,
    pub num_elastic: usize,
    pub elements: Vec<ElementStatusJson>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TripleJson {
    pub x: Vec<String>,
    pub e: String,
    pub y: Vec<String>,
    pub y_maximal: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FanJson {
    pub order: Vec<String>,
    pub length: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SegmentJson {
    pub elements: Vec<String>,
    pub closed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaWitnessJson {
    pub side: String,
    pub kind: String,
    pub w: Vec<String>,
    pub z: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unpartnered: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationJson {
    pub claim: String,
    pub applicable: bool,
    pub passed: bool,
    pub instances: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

/// Full analysis of one matroid, serialized with labels only.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub elements: Vec<String>,
    pub size: usize,
    pub rank: usize,
    pub corank: usize,
    pub three_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elasticity: Option<ElasticityJson>,
    pub fans: Vec<FanJson>,
    pub segments: Vec<SegmentJson>,
    pub cosegments: Vec<SegmentJson>,
    pub theta_separators: Vec<ThetaWitnessJson>,
    pub vertical_triples: Vec<TripleJson>,
    pub cyclic_triples: Vec<TripleJson>,
}

fn labels_of(m: &Matroid, s: Subset) -> Vec<String> {
    m.ground().label_set(s)
}

pub fn elasticity_json(m: &Matroid, rep: &ElasticityReport) -> ElasticityJson {
    ElasticityJson {
        applicable: rep.applicable,
        num_elastic: rep.elastic_count(),
        elements: rep
            .statuses
            .iter()
            .map(|s| ElementStatusJson {
                element: m.ground().label(s.element).to_string(),
                deletable: s.deletable,
                contractible: s.contractible,
                elastic: s.elastic(),
            })
            .collect(),
    }
}

pub fn triple_json(m: &Matroid, t: &SeparationTriple) -> TripleJson {
    TripleJson {
        x: labels_of(m, t.x),
        e: m.ground().label(t.e).to_string(),
        y: labels_of(m, t.y),
        y_maximal: t.y_maximal,
    }
}

pub fn fan_json(m: &Matroid, f: &Fan) -> FanJson {
    FanJson {
        order: f.order.iter().map(|&i| m.ground().label(i).to_string()).collect(),
        length: f.len(),
    }
}

pub fn segment_json(m: &Matroid, s: &Segment) -> SegmentJson {
    SegmentJson {
        elements: labels_of(m, s.elements),
        closed: s.closed,
    }
}

pub fn theta_witness_json(m: &Matroid, w: &ThetaWitness) -> ThetaWitnessJson {
    ThetaWitnessJson {
        side: match w.side {
            ThetaSide::Primal => "primal".into(),
            ThetaSide::Dual => "dual".into(),
        },
        kind: match w.structure.kind {
            ThetaKind::Theta => "theta".into(),
            ThetaKind::ThetaMinus => "thetaMinus".into(),
        },
        w: labels_of(m, w.w),
        z: labels_of(m, w.z),
        unpartnered: w
            .structure
            .unpartnered
            .map(|i| m.ground().label(i).to_string()),
    }
}

pub fn verification_json(v: &VerificationOutcome) -> VerificationJson {
    VerificationJson {
        claim: v.claim.clone(),
        applicable: v.applicable,
        passed: v.passed(),
        instances: v.instances,
        violations: v.violations.clone(),
        notes: v.notes.clone(),
    }
}

/// Computes the full analysis. Elasticity and the separation census are
/// only populated for 3-connected matroids, where they are defined.
pub fn analyze(m: &Matroid) -> Result<AnalysisReport> {
    let three = is_three_connected(m);
    let (elasticity, vertical, cyclic, witnesses) = if three {
        let rep = elasticity_report(m)?;
        (
            Some(elasticity_json(m, &rep)),
            vertical_3_separations_marked(m)?,
            cyclic_3_separations_marked(m)?,
            theta_separators(m)?,
        )
    } else {
        (None, Vec::new(), Vec::new(), Vec::new())
    };
    Ok(AnalysisReport {
        schema_version: 1,
        elements: m.ground().labels().to_vec(),
        size: m.size(),
        rank: m.rank_full(),
        corank: m.corank_full(),
        three_connected: three,
        elasticity,
        fans: fans(m).iter().map(|f| fan_json(m, f)).collect(),
        segments: segments(m).iter().map(|s| segment_json(m, s)).collect(),
        cosegments: segments(&m.dual()).iter().map(|s| segment_json(m, s)).collect(),
        theta_separators: witnesses.iter().map(|w| theta_witness_json(m, w)).collect(),
        vertical_triples: vertical.iter().map(|t| triple_json(m, t)).collect(),
        cyclic_triples: cyclic.iter().map(|t| triple_json(m, t)).collect(),
    })
}

/// Machine-stable JSON: serde_json maps are ordered, so keys come out
/// sorted and identical inputs produce identical bytes.
pub fn emit_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serialization cannot fail");
    let mut s = serde_json::to_string_pretty(&v).expect("json value printing cannot fail");
    s.push('\n');
    s
}

fn fmt_labels(ls: &[String]) -> String {
    format!("{{{}}}", ls.join(","))
}

/// Human-readable summary of an analysis report.
pub fn emit_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!(
        "matroid: {} elements, rank {}, corank {}, {}3-connected",
        r.size,
        r.rank,
        r.corank,
        if r.three_connected { "" } else { "not " }
    ));
    line(format!("elements: {}", fmt_labels(&r.elements)));
    match &r.elasticity {
        Some(e) if e.applicable => {
            line(format!("elastic elements: {}", e.num_elastic));
            for s in &e.elements {
                line(format!(
                    "  {}: {}{}{}",
                    s.element,
                    if s.deletable { "deletable " } else { "" },
                    if s.contractible { "contractible " } else { "" },
                    if s.elastic { "(elastic)" } else { "" }
                ));
            }
        }
        Some(_) => line("elasticity: not applicable (too few elements)".into()),
        None => line("elasticity: undefined (not 3-connected)".into()),
    }
    line(format!("fans: {}", r.fans.len()));
    for f in &r.fans {
        line(format!("  ({})", f.order.join(",")));
    }
    line(format!("segments: {}", r.segments.len()));
    for s in &r.segments {
        line(format!("  {}{}", fmt_labels(&s.elements), if s.closed { " closed" } else { "" }));
    }
    line(format!("cosegments: {}", r.cosegments.len()));
    for s in &r.cosegments {
        line(format!("  {}", fmt_labels(&s.elements)));
    }
    line(format!("theta separators: {}", r.theta_separators.len()));
    for w in &r.theta_separators {
        line(format!(
            "  {} {} w={} z={}{}",
            w.side,
            w.kind,
            fmt_labels(&w.w),
            fmt_labels(&w.z),
            w.unpartnered
                .as_ref()
                .map(|u| format!(" unpartnered={u}"))
                .unwrap_or_default()
        ));
    }
    line(format!("vertical 3-separation triples: {}", r.vertical_triples.len()));
    for t in &r.vertical_triples {
        line(format!(
            "  X={} e={} Y={}{}",
            fmt_labels(&t.x),
            t.e,
            fmt_labels(&t.y),
            if t.y_maximal { " (Y+e maximal)" } else { "" }
        ));
    }
    line(format!("cyclic 3-separation triples: {}", r.cyclic_triples.len()));
    for t in &r.cyclic_triples {
        line(format!(
            "  X={} e={} Y={}{}",
            fmt_labels(&t.x),
            t.e,
            fmt_labels(&t.y),
            if t.y_maximal { " (Y+e maximal)" } else { "" }
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_uniform_doc() {
        let m = parse(r#"{"type":"uniform","rank":2,"size":4}"#, 20).unwrap();
        assert_eq!(m.rank_full(), 2);
        assert_eq!(m.size(), 4);
        assert_eq!(m.ground().label(0), "e1");
    }

    #[test]
    fn parse_construction_theta() {
        let m = parse(r#"{"type":"construction","family":"theta","n":4}"#, 20).unwrap();
        assert_eq!(m.rank_full(), 4);
        assert_eq!(m.ground().label(0), "w1");
    }

    #[test]
    fn parse_derived_dual() {
        let m = parse(
            r#"{"type":"derived","op":"dual","of":{"type":"uniform","rank":1,"size":3}}"#,
            20,
        )
        .unwrap();
        assert_eq!(m.rank_full(), 2);
    }

    #[test]
    fn guard_enforced() {
        let err = parse(r#"{"type":"uniform","rank":3,"size":25}"#, 20).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn bad_basis_named() {
        let err = parse(
            r#"{"type":"bases","elements":["a","b","c"],"bases":[["a","b"],["c"]]}"#,
            20,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("\"c\""), "{msg}");
    }

    #[test]
    fn inconsistent_bases_rejected() {
        // {a,b} and {c,d} as the only bases violate basis exchange
        let err = parse(
            r#"{"type":"bases","elements":["a","b","c","d"],"bases":[["a","b"],["c","d"]]}"#,
            20,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn document_round_trip() {
        let text = r#"{"type":"construction","family":"wheel","r":4}"#;
        let doc: MatroidDocument = serde_json::from_str(text).unwrap();
        let canon = document_to_string(&doc);
        let doc2: MatroidDocument = serde_json::from_str(&canon).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(canon, document_to_string(&doc2));
    }

    #[test]
    fn analysis_deterministic_and_labeled() {
        let m = parse(r#"{"type":"construction","family":"mk4"}"#, 20).unwrap();
        let a = emit_json(&analyze(&m).unwrap());
        let b = emit_json(&analyze(&m).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"numElastic\": 6"));
        assert!(a.contains("\"schemaVersion\": 1"));
    }
}
