//! Simplicial complexes whose vertices are isotopes, the maps between them
//! and the topologies of isotopes.
//!
//! Vertices are labels (`dot`, `o0`, `s1`, ...). Two labels are different
//! vertices even when their tables coincide. Simplexes are non-empty.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::{Certificate, Clause};
use crate::config::{Bounds, Conventions};
use crate::error::{Error, Result};
use crate::isotopy::find_isomorphism;
use crate::loops::Loop;
use crate::osborn::theorem::{eq12_holds, eq12b_holds};
use crate::osborn::{build_isotope, is_universal_osborn, IsotopeLabel, ParamTriple};
use crate::parallel::map_ordered;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamTriple>,
    pub vertices: Vec<String>,
    pub simplexes: Vec<Vec<String>>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, simplexes: Vec<Vec<String>>) -> Self {
        SimplicialComplex {
            params: None,
            vertices,
            simplexes,
        }
    }

    /// `max |σ| - 1`; `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplexes.iter().map(|s| s.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Vertices and simplexes of both, each listed once.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            if !vertices.contains(v) {
                vertices.push(v.clone());
            }
        }
        let mut seen: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        let mut simplexes = Vec::new();
        for s in self.simplexes.iter().chain(&other.simplexes) {
            if seen.insert(s.iter().cloned().collect()) {
                simplexes.push(s.clone());
            }
        }
        SimplicialComplex {
            params: self.params.or(other.params),
            vertices,
            simplexes,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "vertices": self.vertices,
            "simplexes": self.simplexes,
            "dimension": self.dimension(),
        });
        if let Some(p) = self.params {
            v["params"] = json!(p);
        }
        v
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed {
            line: e.line(),
            message: e.to_string(),
        })
    }

    fn simplex_sets(&self) -> BTreeSet<BTreeSet<&str>> {
        self.simplexes
            .iter()
            .map(|s| s.iter().map(String::as_str).collect())
            .collect()
    }
}

fn labels(names: &[IsotopeLabel]) -> Vec<String> {
    names.iter().map(|l| l.name().to_string()).collect()
}

/// `K_i`: `{dot, ∘i, ∗i}` with the three points and `{∘i, ∗i}`.
pub fn build_k(i: usize, p: ParamTriple) -> Result<SimplicialComplex> {
    if i > 3 {
        return Err(Error::UnknownName(format!("K{i}")));
    }
    let (o, s) = (IsotopeLabel::circ(i), IsotopeLabel::star(i));
    let vertices = labels(&[IsotopeLabel::Dot, o, s]);
    let mut simplexes: Vec<Vec<String>> = vertices.iter().map(|v| vec![v.clone()]).collect();
    simplexes.push(labels(&[o, s]));
    Ok(SimplicialComplex {
        params: Some(p),
        vertices,
        simplexes,
    })
}

/// The 16-simplex complex on `dot, ∘0, ∘1, ∗0, ∗1`: every point, and every
/// non-empty subset of `{∘0, ∘1, ∗0, ∗1}`.
pub fn build_k10(p: ParamTriple) -> SimplicialComplex {
    use IsotopeLabel::*;
    let four = [Circ0, Circ1, Star0, Star1];
    let vertices = labels(&[Dot, Circ0, Circ1, Star0, Star1]);
    let mut simplexes = vec![vec![Dot.name().to_string()]];
    for size in 1..=4 {
        for mask in 1u32..16 {
            if mask.count_ones() as usize == size {
                let members: Vec<IsotopeLabel> = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| four[b]).collect();
                simplexes.push(labels(&members));
            }
        }
    }
    SimplicialComplex {
        params: Some(p),
        vertices,
        simplexes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValidationMode {
    Abstract,
    Isotopes,
}

/// The loop and conventions that resolve labels in isotopes mode.
#[derive(Debug, Clone, Copy)]
pub struct IsotopeContext<'a> {
    pub base: &'a Loop,
    pub params: ParamTriple,
    pub conv: &'a Conventions,
}

/// Checks the closure axioms and, in isotopes mode, that the members of
/// every simplex are pairwise isomorphic.
pub fn validate_complex(
    k: &SimplicialComplex,
    mode: ValidationMode,
    ctx: Option<IsotopeContext<'_>>,
) -> Result<Certificate> {
    let mut cert = Certificate::new(
        "complex",
        json!({ "mode": mode, "dimension": k.dimension(), "params": k.params }),
    );
    let vertex_set: BTreeSet<&str> = k.vertices.iter().map(String::as_str).collect();
    let duplicate = (vertex_set.len() != k.vertices.len()).then(|| k.vertices.clone());
    cert.push(Clause::from_failure("vertices_distinct", duplicate));

    let bad = k
        .simplexes
        .iter()
        .find(|s| s.is_empty() || s.iter().any(|v| !vertex_set.contains(v.as_str())));
    cert.push(Clause::from_failure("simplexes_are_vertex_sets", bad));

    let family = k.simplex_sets();
    let missing = k.vertices.iter().find(|v| !family.contains(&BTreeSet::from([v.as_str()])));
    cert.push(Clause::from_failure("points_are_simplexes", missing));

    let not_closed = family.iter().find_map(|s| {
        let items: Vec<&str> = s.iter().copied().collect();
        (1u64..(1 << items.len()) - 1).find_map(|mask| {
            let face: BTreeSet<&str> = (0..items.len()).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect();
            (!family.contains(&face)).then(|| json!({ "simplex": s, "face": face }))
        })
    });
    cert.push(Clause::from_failure("faces_are_simplexes", not_closed));

    if mode == ValidationMode::Isotopes {
        let ctx = ctx.ok_or_else(|| Error::UnknownVertex("isotopes mode needs a base loop".into()))?;
        let mut resolved: HashMap<&str, Loop> = HashMap::new();
        for v in &k.vertices {
            let label: IsotopeLabel = v.parse()?;
            resolved.insert(v, build_isotope(ctx.base, label, ctx.params, ctx.conv));
        }
        let mut memo: HashMap<(&str, &str), bool> = HashMap::new();
        let mut failure = None;
        'outer: for s in &k.simplexes {
            for (i, a) in s.iter().enumerate() {
                for b in &s[i + 1..] {
                    let (Some(la), Some(lb)) = (resolved.get(a.as_str()), resolved.get(b.as_str())) else {
                        continue;
                    };
                    let key = if a <= b { (a.as_str(), b.as_str()) } else { (b.as_str(), a.as_str()) };
                    let iso = *memo
                        .entry(key)
                        .or_insert_with(|| find_isomorphism(la, lb).expect("isotopes share the order").is_some());
                    if !iso {
                        failure = Some(json!({ "simplex": s, "pair": [a, b] }));
                        break 'outer;
                    }
                }
            }
        }
        cert.push(Clause::from_failure("members_isomorphic", failure));
    }
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplexName {
    K0,
    K1,
    K2,
    K3,
    K01,
    K23,
    K0123,
    K10,
}

impl ComplexName {
    pub const ALL: [ComplexName; 8] = [
        ComplexName::K0,
        ComplexName::K1,
        ComplexName::K2,
        ComplexName::K3,
        ComplexName::K01,
        ComplexName::K23,
        ComplexName::K0123,
        ComplexName::K10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComplexName::K0 => "K0",
            ComplexName::K1 => "K1",
            ComplexName::K2 => "K2",
            ComplexName::K3 => "K3",
            ComplexName::K01 => "K01",
            ComplexName::K23 => "K23",
            ComplexName::K0123 => "K0123",
            ComplexName::K10 => "K10",
        }
    }

    /// Statements proved in both directions.
    pub fn is_equivalence(self) -> bool {
        matches!(self, ComplexName::K0 | ComplexName::K1 | ComplexName::K01 | ComplexName::K10)
    }

    pub fn build(self, p: ParamTriple) -> SimplicialComplex {
        let k = |i| build_k(i, p).expect("index below 4");
        match self {
            ComplexName::K0 => k(0),
            ComplexName::K1 => k(1),
            ComplexName::K2 => k(2),
            ComplexName::K3 => k(3),
            ComplexName::K01 => k(0).union(&k(1)),
            ComplexName::K23 => k(2).union(&k(3)),
            ComplexName::K0123 => k(0).union(&k(1)).union(&k(2)).union(&k(3)),
            ComplexName::K10 => build_k10(p),
        }
    }
}

impl std::fmt::Display for ComplexName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ComplexName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        ComplexName::ALL
            .into_iter()
            .find(|c| c.name() == t)
            .ok_or_else(|| Error::UnknownName(format!("unknown complex {s:?}")))
    }
}

/// Validates the named complex at every `p` and compares the outcome with
/// the loop-theoretic side: universal Osborn, and for `K10` also the
/// equations for `γ01∘` and `γ01∗` at every `p`. Equivalences require both
/// directions; the others require only the forward one.
pub fn theorem_k(
    l: &Loop,
    which: ComplexName,
    bounds: &Bounds,
    conv: &Conventions,
    jobs: usize,
) -> Result<Certificate> {
    let universal = is_universal_osborn(l, bounds)?.holds;
    let ps: Vec<ParamTriple> = ParamTriple::all(l.order()).collect();
    let per_p = map_ordered(&ps, jobs, |&p| {
        let k = which.build(p);
        let ctx = IsotopeContext { base: l, params: p, conv };
        let cert = validate_complex(&k, ValidationMode::Isotopes, Some(ctx)).expect("builder labels resolve");
        let equations = which == ComplexName::K10 && eq12_holds(l, p, conv) && eq12b_holds(l, p, conv);
        (cert, equations)
    });
    let first_invalid = ps.iter().zip(&per_p).find(|(_, (c, _))| !c.pass);
    let all_valid = first_invalid.is_none();
    let loop_side = if which == ComplexName::K10 {
        universal && per_p.iter().all(|(_, e)| *e)
    } else {
        universal
    };

    let mut cert = Certificate::new(format!("theorem-{which}"), json!("all"));
    let witness = first_invalid.map(|(p, (c, _))| {
        let failing: Vec<&Clause> = c.failures().collect();
        json!({ "p": p.as_array(), "clauses": failing })
    });
    let holds = per_p.iter().filter(|(c, _)| c.pass).count();
    cert.push(
        Clause::new("complex_valid_all_p", all_valid)
            .with_witness(witness)
            .with_tally(holds, ps.len())
            .informational(),
    );
    cert.push(Clause::new("universal_osborn", universal).informational());
    if which == ComplexName::K10 {
        let eq = per_p.iter().filter(|(_, e)| *e).count();
        cert.push(
            Clause::new("eq12_and_eq12b_all_p", eq == ps.len())
                .with_tally(eq, ps.len())
                .informational(),
        );
    }
    let detail = || json!({ "loop_side": loop_side, "complex_side": all_valid });
    cert.push(Clause::new("forward", !loop_side || all_valid).with_witness((loop_side && !all_valid).then(detail)));
    let converse = Clause::new("converse", !all_valid || loop_side).with_witness((all_valid && !loop_side).then(detail));
    cert.push(if which.is_equivalence() { converse } else { converse.informational() });
    Ok(cert)
}

/// Vertex map `dot ↦ dot, ∘i ↦ ∘j, ∗i ↦ ∗j`.
pub fn f_ij(i: usize, j: usize) -> BTreeMap<String, String> {
    let mut f = BTreeMap::new();
    f.insert("dot".to_string(), "dot".to_string());
    f.insert(IsotopeLabel::circ(i).name().to_string(), IsotopeLabel::circ(j).name().to_string());
    f.insert(IsotopeLabel::star(i).name().to_string(), IsotopeLabel::star(j).name().to_string());
    f
}

/// Whether the image of every simplex of `k` is a simplex of `target`.
pub fn simplicial_map_check(
    f: &BTreeMap<String, String>,
    k: &SimplicialComplex,
    target: &SimplicialComplex,
) -> Result<bool> {
    if let Some(v) = k.vertices.iter().find(|v| !f.contains_key(*v)) {
        return Err(Error::UnknownVertex(format!("map is undefined at {v}")));
    }
    let family = target.simplex_sets();
    Ok(k.simplexes.iter().all(|s| {
        let image: BTreeSet<&str> = s.iter().map(|v| f[v].as_str()).collect();
        family.contains(&image)
    }))
}

/// Contains `∅` and `V`, and is closed under pairwise union and intersection.
pub fn is_topology(v: &[String], family: &[Vec<String>]) -> bool {
    let sets: BTreeSet<BTreeSet<&str>> = family
        .iter()
        .map(|s| s.iter().map(String::as_str).collect())
        .collect();
    let whole: BTreeSet<&str> = v.iter().map(String::as_str).collect();
    if !sets.contains(&BTreeSet::new()) || !sets.contains(&whole) {
        return false;
    }
    if sets.iter().any(|s| !s.is_subset(&whole)) {
        return false;
    }
    sets.iter().all(|a| {
        sets.iter().all(|b| {
            sets.contains(&a.union(b).copied().collect::<BTreeSet<_>>())
                && sets.contains(&a.intersection(b).copied().collect::<BTreeSet<_>>())
        })
    })
}

/// Every subset of `v`.
pub fn power_set(v: &[String]) -> Vec<Vec<String>> {
    assert!(v.len() < 20, "power set too large");
    (0u32..1 << v.len())
        .map(|mask| (0..v.len()).filter(|b| mask >> b & 1 == 1).map(|b| v[b].clone()).collect())
        .collect()
}

/// The isotopes at `p` grouped by isomorphism type, in label order.
pub fn isomorphism_classes(l: &Loop, names: &[IsotopeLabel], p: ParamTriple, conv: &Conventions) -> Vec<Vec<String>> {
    let loops: Vec<Loop> = names.iter().map(|&n| build_isotope(l, n, p, conv)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..loops.len() {
        let home = classes
            .iter()
            .position(|c| find_isomorphism(&loops[c[0]], &loops[i]).expect("same order").is_some());
        match home {
            Some(c) => classes[c].push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| names[i].name().to_string()).collect())
        .collect()
}

/// All unions of the given classes.
pub fn class_unions(classes: &[Vec<String>]) -> Vec<Vec<String>> {
    (0u32..1 << classes.len())
        .map(|mask| {
            (0..classes.len())
                .filter(|b| mask >> b & 1 == 1)
                .flat_map(|b| classes[b].iter().cloned())
                .collect()
        })
        .collect()
}

/// The two topology lemmas at `p`: the power set of the isotopes is a
/// topology, and when all isotopes are isomorphic the family `{∅, V}` (the
/// unions of isomorphism classes) is one whose members are pairwise
/// isomorphic.
pub fn topology_lemmas(l: &Loop, p: ParamTriple, conv: &Conventions) -> Certificate {
    let names = IsotopeLabel::ALL;
    let v = labels(&names);
    let mut cert = Certificate::new("topology", p);
    cert.push(Clause::new("power_set_is_topology", is_topology(&v, &power_set(&v))));
    let classes = isomorphism_classes(l, &names, p, conv);
    let unions = class_unions(&classes);
    cert.push(Clause::new("class_unions_are_topology", is_topology(&v, &unions)));
    let single = classes.len() == 1;
    cert.push(
        Clause::new("single_isomorphism_class", single)
            .with_witness((!single).then(|| classes.clone()))
            .informational(),
    );
    if !single {
        cert.note("isotopes at p are not all isomorphic; the G-loop lemma does not apply here");
    }
    let bare = vec![vec![], vec![v[0].clone()]];
    cert.push(Clause::new("bare_hypothesis_family_is_topology", is_topology(&v, &bare)).informational());
    cert
}
