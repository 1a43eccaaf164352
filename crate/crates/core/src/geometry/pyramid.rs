//! The pyramid over `(Q,·)` whose base is the cycle `∘0, ∘1, ∗1, ∗0`.
//!
//! Lengths are letter counts of the words as written. The coordinates
//! attached for export are schematic: apex edges of 2 units cannot reach the
//! centre of a 6 by 12 rectangle.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::word::{Letter, TranslationWord, WordTriple};
use crate::certificate::{Certificate, Clause};
use crate::config::{Bounds, Conventions};
use crate::error::{Error, Result};
use crate::isotopy::isotopism_failure;
use crate::loops::Loop;
use crate::osborn::{build_isotope, gamma_word, is_universal_osborn, phi0, phi1, w_of, GammaKind, IsotopeLabel, ParamTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Apex,
    Base,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub label: IsotopeLabel,
    /// Schematic position; not to scale.
    pub coords: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub name: String,
    pub from: IsotopeLabel,
    pub to: IsotopeLabel,
    pub kind: EdgeKind,
    pub triple: WordTriple,
    pub length: usize,
    /// Whether the evaluated triple maps `from` onto `to`.
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PyramidGraph {
    pub params: ParamTriple,
    pub metric: bool,
    pub nodes: Vec<Node>,
    /// Apex edges first, then the base cycle in order.
    pub edges: Vec<Edge>,
}

impl PyramidGraph {
    pub fn apex_lengths(&self) -> Vec<usize> {
        self.lengths(EdgeKind::Apex)
    }

    /// Base lengths in cycle order `∘0-∘1, ∘1-∗1, ∗1-∗0, ∗0-∘0`.
    pub fn base_lengths(&self) -> Vec<usize> {
        self.lengths(EdgeKind::Base)
    }

    fn lengths(&self, kind: EdgeKind) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| e.length)
            .collect()
    }

    pub fn edge(&self, name: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.name == name)
    }
}

fn w(letters: Vec<Letter>) -> TranslationWord {
    letters.into()
}

/// Builds the graph at `p`, verifying every edge against the loops at its
/// ends. Fails with `HypothesisFailed` unless `l` is universal Osborn.
pub fn build_pyramid(l: &Loop, p: ParamTriple, bounds: &Bounds, conv: &Conventions) -> Result<PyramidGraph> {
    let p = p.check(l)?;
    let report = is_universal_osborn(l, bounds)?;
    if !report.holds {
        return Err(Error::HypothesisFailed(
            "the pyramid is built over a universal Osborn loop".into(),
        ));
    }
    Ok(pyramid_unchecked(l, p, conv))
}

/// The graph without the hypothesis check, for exploration.
pub fn pyramid_unchecked(l: &Loop, p: ParamTriple, conv: &Conventions) -> PyramidGraph {
    use IsotopeLabel::*;
    let g = |k| gamma_word(l, k, p, conv);
    let id = TranslationWord::identity;
    let apex = |name: &str, to, a, b| (name.to_string(), Dot, to, EdgeKind::Apex, WordTriple::new(a, b, id()));
    let base = |name: &str, from, to, k| (name.to_string(), from, to, EdgeKind::Base, WordTriple::diagonal(g(k)));
    let specs = vec![
        apex("dot->o0", Circ0, w(vec![Letter::right(phi0(l, p))]), w(vec![Letter::left(p.u)])),
        apex("dot->o1", Circ1, w(vec![Letter::right(w_of(l, p))]), w(vec![Letter::left(p.u)])),
        apex("dot->s1", Star1, w(vec![Letter::right(p.v)]), w(vec![Letter::left(phi1(l, p, conv.phi1))])),
        apex("dot->s0", Star0, w(vec![Letter::right(p.v)]), w(vec![Letter::left(p.x)])),
        base("gamma01o", Circ0, Circ1, GammaKind::Gamma01Circ),
        base("gamma1", Star1, Circ1, GammaKind::Gamma1),
        base("gamma01s", Star0, Star1, GammaKind::Gamma01Star),
        base("gamma0", Circ0, Star0, GammaKind::Gamma0),
    ];
    let edges = specs
        .into_iter()
        .map(|(name, from, to, kind, triple)| {
            let t = triple.eval(l);
            let failure = isotopism_failure(
                &t,
                &build_isotope(l, from, p, conv),
                &build_isotope(l, to, p, conv),
            )
            .map(|(x, y)| [x, y]);
            Edge {
                name,
                from,
                to,
                kind,
                length: triple.len(),
                triple,
                verified: failure.is_none(),
                failure,
            }
        })
        .collect();
    let node = |label, coords| Node { label, coords };
    PyramidGraph {
        params: p,
        metric: false,
        nodes: vec![
            node(Dot, [3.0, 6.0, 4.0]),
            node(Circ0, [0.0, 0.0, 0.0]),
            node(Circ1, [6.0, 0.0, 0.0]),
            node(Star1, [6.0, 12.0, 0.0]),
            node(Star0, [0.0, 12.0, 0.0]),
        ],
        edges,
    }
}

/// Opposite base sides have equal length and every apex edge has the same
/// length. Equal opposite sides make a parallelogram; the report says so.
pub fn verify_rectangle(g: &PyramidGraph) -> Certificate {
    let mut cert = Certificate::new("pyramid-rectangle", g.params);
    let base = g.base_lengths();
    let apex = g.apex_lengths();
    let sides = base.len() == 4;
    cert.push(Clause::new("four_base_sides", sides).with_witness((!sides).then(|| base.clone())));
    if sides {
        let first = base[0] == base[2];
        let second = base[1] == base[3];
        cert.push(Clause::new("opposite_sides_equal", first && second).with_witness(Some(json!({ "sides": base }))));
    }
    let apex_equal = apex.len() == 4 && apex.iter().all(|&a| a == apex[0]);
    cert.push(Clause::new("apex_edges_equal", apex_equal).with_witness(Some(json!({ "apex": apex }))));
    cert.push(Clause::new("right_angles_established", false).informational());
    cert.note("equal opposite sides establish a parallelogram; the word lengths carry no angle");
    cert
}

/// `verify_rectangle` plus a required clause per edge that its triple is a
/// verified isotopism between its ends.
pub fn pyramid_certificate(g: &PyramidGraph) -> Certificate {
    let mut cert = verify_rectangle(g);
    cert.check = "pyramid".into();
    for e in &g.edges {
        let clause = Clause::from_failure(
            format!("{}:{}->{}", e.name, e.from, e.to),
            e.failure.map(|pair| json!({ "pair": pair })),
        );
        cert.push(clause);
    }
    cert
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
}

pub fn export_graph(g: &PyramidGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => serde_json::to_string_pretty(g).expect("graph serializes"),
        GraphFormat::Dot => {
            let mut out = String::from("digraph pyramid {\n");
            for n in &g.nodes {
                let _ = writeln!(out, "  \"{}\";", n.label);
            }
            for e in &g.edges {
                let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}:{}\"];", e.from, e.to, e.name, e.length);
            }
            out.push_str("}\n");
            out
        }
    }
}

pub fn parse_graph(json: &str) -> Result<PyramidGraph> {
    serde_json::from_str(json).map_err(|e| Error::Malformed {
        line: e.line(),
        message: e.to_string(),
    })
}
