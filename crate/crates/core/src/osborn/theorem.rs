//! Extensional checkers for the isomorphism theorems between the isotopes.
//!
//! Each checker evaluates both sides of a stated equivalence (or
//! implication) at every `p = (x, u, v)` and reports any disagreement as a
//! failed required clause. Statements that quantify over all `p` inside a
//! global property (boolean group, BS₂ membership for every `p`) are read
//! with the quantifier outermost.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::gamma::{gamma23_forms, gamma_word, GammaKind};
use super::params::{build_isotope, w_of, IsotopeLabel, ParamTriple};
use super::is_universal_osborn;
use crate::certificate::{Certificate, Clause};
use crate::config::{Bounds, Conventions};
use crate::error::{Error, Result};
use crate::isotopy::{
    autotopism_from_isomorphism, autotopisms_with_first, autotopisms_with_second,
    autotopisms_with_third, bryant_schneider_identity_test, bs2_contains, find_isomorphism,
    is_autotopism, is_isomorphism, IsoTriple, PrincipalPair,
};
use crate::loops::{Loop, Side};
use crate::parallel::map_ordered;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremName {
    #[serde(rename = "2post1.10")]
    T10,
    #[serde(rename = "2post1.11")]
    T11,
    #[serde(rename = "2post1.11b")]
    T11b,
    #[serde(rename = "2post1.12")]
    T12,
    #[serde(rename = "2post1.13")]
    T13,
    #[serde(rename = "2post1.14")]
    T14,
    #[serde(rename = "2post1.15")]
    T15,
    #[serde(rename = "2post1.16")]
    T16,
    #[serde(rename = "2post1.17")]
    T17,
    #[serde(rename = "2post1.17b")]
    T17b,
    #[serde(rename = "2post1.17c")]
    T17c,
    #[serde(rename = "2post1.18")]
    T18,
    #[serde(rename = "2post1.19")]
    T19,
    #[serde(rename = "2post1.20")]
    T20,
    #[serde(rename = "2post1.21")]
    T21,
    #[serde(rename = "remark.commutator")]
    Commutator,
}

impl TheoremName {
    pub const ALL: [TheoremName; 16] = [
        TheoremName::T10,
        TheoremName::T11,
        TheoremName::T11b,
        TheoremName::T12,
        TheoremName::T13,
        TheoremName::T14,
        TheoremName::T15,
        TheoremName::T16,
        TheoremName::T17,
        TheoremName::T17b,
        TheoremName::T17c,
        TheoremName::T18,
        TheoremName::T19,
        TheoremName::T20,
        TheoremName::T21,
        TheoremName::Commutator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremName::T10 => "2post1.10",
            TheoremName::T11 => "2post1.11",
            TheoremName::T11b => "2post1.11b",
            TheoremName::T12 => "2post1.12",
            TheoremName::T13 => "2post1.13",
            TheoremName::T14 => "2post1.14",
            TheoremName::T15 => "2post1.15",
            TheoremName::T16 => "2post1.16",
            TheoremName::T17 => "2post1.17",
            TheoremName::T17b => "2post1.17b",
            TheoremName::T17c => "2post1.17c",
            TheoremName::T18 => "2post1.18",
            TheoremName::T19 => "2post1.19",
            TheoremName::T20 => "2post1.20",
            TheoremName::T21 => "2post1.21",
            TheoremName::Commutator => "remark.commutator",
        }
    }

    /// Statements made for arbitrary loops rather than universal Osborn ones.
    pub fn needs_universal_osborn(self) -> bool {
        !matches!(self, TheoremName::T17c | TheoremName::T21)
    }

    pub fn uses_bs2(self) -> bool {
        matches!(self, TheoremName::T17c | TheoremName::T20 | TheoremName::T21)
    }
}

impl fmt::Display for TheoremName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace(':', ".");
        TheoremName::ALL
            .into_iter()
            .find(|n| n.name() == t)
            .ok_or_else(|| Error::UnknownName(format!("unknown theorem {s:?}")))
    }
}

/// One clause outcome at one `p`; `None` when the clause does not apply.
struct Outcome {
    name: &'static str,
    required: bool,
    result: Option<(bool, Value)>,
}

fn req(name: &'static str, ok: bool, detail: Value) -> Outcome {
    Outcome {
        name,
        required: true,
        result: Some((ok, detail)),
    }
}

fn info(name: &'static str, ok: bool, detail: Value) -> Outcome {
    Outcome {
        name,
        required: false,
        result: Some((ok, detail)),
    }
}

fn skip(name: &'static str, required: bool) -> Outcome {
    Outcome {
        name,
        required,
        result: None,
    }
}

/// Runs `f` at every `p` and folds the outcomes into clauses: a clause
/// passes iff it held wherever it applied.
fn scan<F>(l: &Loop, jobs: usize, f: F) -> Vec<Clause>
where
    F: Fn(ParamTriple) -> Vec<Outcome> + Sync,
{
    let ps: Vec<ParamTriple> = ParamTriple::all(l.order()).collect();
    let results = map_ordered(&ps, jobs, |&p| f(p));
    let mut acc: Vec<(Clause, usize, usize)> = Vec::new();
    for (p, outcomes) in ps.iter().zip(results) {
        for o in outcomes {
            let slot = match acc.iter().position(|(c, _, _)| c.name == o.name) {
                Some(i) => i,
                None => {
                    let mut c = Clause::new(o.name, true);
                    c.required = o.required;
                    acc.push((c, 0, 0));
                    acc.len() - 1
                }
            };
            let (clause, holds, total) = &mut acc[slot];
            if let Some((ok, detail)) = o.result {
                *total += 1;
                if ok {
                    *holds += 1;
                } else if clause.pass {
                    clause.pass = false;
                    let mut w = json!({ "p": p.as_array() });
                    if !detail.is_null() {
                        w["detail"] = detail;
                    }
                    clause.witness = Some(w);
                }
            }
        }
    }
    acc.into_iter()
        .map(|(c, holds, total)| c.with_tally(holds, total))
        .collect()
}

/// Shorthand for the quantities every checker needs at one `p`.
struct At<'a> {
    l: &'a Loop,
    p: ParamTriple,
    conv: &'a Conventions,
    w: usize,
}

impl<'a> At<'a> {
    fn new(l: &'a Loop, p: ParamTriple, conv: &'a Conventions) -> Self {
        At {
            l,
            p,
            conv,
            w: w_of(l, p),
        }
    }

    fn iso(&self, label: IsotopeLabel) -> Loop {
        build_isotope(self.l, label, self.p, self.conv)
    }

    fn pair(&self, label: IsotopeLabel) -> PrincipalPair {
        label.pair(self.l, self.p, self.conv).expect("isotope label")
    }

    fn perm(&self, k: GammaKind) -> Perm {
        gamma_word(self.l, k, self.p, self.conv).eval(self.l)
    }

    fn uv(&self) -> usize {
        self.l.mul(self.p.u, self.p.v)
    }

    fn xv(&self) -> usize {
        self.l.mul(self.p.x, self.p.v)
    }

    /// Eq. 11 for `(I, β, γ)`.
    fn eq11(&self, beta: &Perm, gamma: &Perm) -> bool {
        let (l, u, v, w) = (self.l, self.p.u, self.p.v, self.w);
        let first = l.mul(l.rdiv(l.mul(u, beta.inverse().apply(w)), v), w);
        let second = l.mul(l.rdiv(gamma.inverse().apply(self.xv()), v), w);
        first == self.uv() && second == self.uv()
    }

    /// Eq. 11b for `(δ, I, π)`.
    fn eq11b(&self, delta: &Perm, pi: &Perm) -> bool {
        let (l, x, u, v) = (self.l, self.p.x, self.p.u, self.p.v);
        let first = l.mul(x, l.ldiv(u, l.mul(delta.apply(x), v)));
        let second = l.mul(x, l.ldiv(u, pi.apply(self.xv())));
        first == self.uv() && second == self.uv()
    }

    fn eq11_witnesses(&self) -> Vec<IsoTriple> {
        let i = Perm::identity(self.l.order());
        autotopisms_with_first(self.l, &i)
            .into_iter()
            .filter(|t| self.eq11(&t.b, &t.c))
            .collect()
    }

    fn eq11b_witnesses(&self) -> Vec<IsoTriple> {
        let i = Perm::identity(self.l.order());
        autotopisms_with_second(self.l, &i)
            .into_iter()
            .filter(|t| self.eq11b(&t.a, &t.c))
            .collect()
    }

    /// Eq. 12 for `ψ0`.
    fn eq12(&self) -> bool {
        let (l, u, v, w) = (self.l, self.p.u, self.p.v, self.w);
        let psi = self.perm(GammaKind::Psi0);
        let first = l
            .pairs()
            .all(|(y, z)| l.mul(y, l.ldiv(u, psi.apply(l.mul(u, z)))) == psi.apply(l.mul(y, z)));
        let second = l.mul(l.rdiv(psi.inverse().apply(self.xv()), v), w) == self.uv();
        first && second
    }

    /// Eq. 12b for `ψ1`.
    fn eq12b(&self) -> bool {
        let (l, x, u, v) = (self.l, self.p.x, self.p.u, self.p.v);
        let psi = self.perm(GammaKind::Psi1);
        let first = l
            .pairs()
            .all(|(y, z)| l.mul(l.rdiv(psi.apply(l.mul(y, v)), v), z) == psi.apply(l.mul(y, z)));
        let second = l.mul(x, l.ldiv(u, psi.apply(self.xv()))) == self.uv();
        first && second
    }

    /// `[x·(w μ^-1)]ν = xλ·w`.
    fn eq13_tail(&self, lambda: &Perm, mu: &Perm, nu: &Perm) -> bool {
        let (l, x, w) = (self.l, self.p.x, self.w);
        nu.apply(l.mul(x, mu.inverse().apply(w))) == l.mul(lambda.apply(x), w)
    }

    /// The right-hand side shared by Eq. 14, 15 and 16: both forms of `γ23∘`
    /// agree and some `(λ, μ, γ23∘)` in AUT satisfies the tail equation.
    fn eq14(&self) -> bool {
        let (right, left) = gamma23_forms(self.l, self.p, self.conv);
        right == left
            && autotopisms_with_third(self.l, &right)
                .iter()
                .any(|t| self.eq13_tail(&t.a, &t.b, &right))
    }

    fn isomorphic(&self, a: IsotopeLabel, b: IsotopeLabel) -> Option<Perm> {
        find_isomorphism(&self.iso(a), &self.iso(b)).expect("isotopes share the order")
    }

    fn maps(&self, theta: &Perm, a: IsotopeLabel, b: IsotopeLabel) -> bool {
        is_isomorphism(theta, &self.iso(a), &self.iso(b))
    }
}

fn is_boolean_group(l: &Loop) -> bool {
    l.is_associative() && l.elements().all(|x| l.mul(x, x) == l.identity())
}

/// Memoised BS₂ membership.
struct Bs2<'a> {
    l: &'a Loop,
    bounds: &'a Bounds,
    cache: Mutex<HashMap<Perm, bool>>,
}

impl<'a> Bs2<'a> {
    fn new(l: &'a Loop, bounds: &'a Bounds) -> Result<Self> {
        Bounds::check("BS2 membership", l.order(), bounds.bs2)?;
        Ok(Bs2 {
            l,
            bounds,
            cache: Mutex::new(HashMap::new()),
        })
    }

    fn contains(&self, theta: &Perm) -> bool {
        if let Some(&hit) = self.cache.lock().unwrap().get(theta) {
            return hit;
        }
        let hit = bs2_contains(self.l, theta, self.bounds)
            .expect("order checked against the bound")
            .is_some();
        self.cache.lock().unwrap().insert(theta.clone(), hit);
        hit
    }
}

/// Runs the named checker. Theorems stated for universal Osborn loops fail
/// with `HypothesisFailed` on other loops.
pub fn check_theorem(
    l: &Loop,
    name: TheoremName,
    bounds: &Bounds,
    conv: &Conventions,
    jobs: usize,
) -> Result<Certificate> {
    let universal = is_universal_osborn(l, bounds)?;
    if name.needs_universal_osborn() && !universal.holds {
        let w = universal.witness.expect("failure has a witness");
        return Err(Error::HypothesisFailed(format!(
            "{name} assumes a universal Osborn loop; OS3 fails in Q_({},{}) at {:?}",
            w.pair.f, w.pair.g, w.triple
        )));
    }
    let bs2 = if name.uses_bs2() {
        Some(Bs2::new(l, bounds)?)
    } else {
        None
    };
    let mut cert = Certificate::new(name.name(), json!("all"));
    let clauses = match name {
        TheoremName::T10 => theorem_10(l, conv, jobs),
        TheoremName::T11 => theorem_11(l, conv, jobs),
        TheoremName::T11b => theorem_11b(l, conv, jobs),
        TheoremName::T12 => corollary_12(l, conv, jobs),
        TheoremName::T13 => corollary_13(l, conv, jobs),
        TheoremName::T14 => theorem_14(l, conv, jobs),
        TheoremName::T15 => theorem_15(l, conv, jobs),
        TheoremName::T16 => corollary_16(l, conv, jobs),
        TheoremName::T17 => theorem_17(l, conv, jobs),
        TheoremName::T17b => theorem_17b(l, conv, jobs),
        TheoremName::T17c => lemma_17c(l, universal.holds, bs2.as_ref().unwrap(), conv, jobs),
        TheoremName::T18 => theorem_18(l, conv, jobs),
        TheoremName::T19 => lemma_19(l, conv, jobs),
        TheoremName::T20 => corollary_20(l, bs2.as_ref().unwrap(), conv, jobs),
        TheoremName::T21 => corollary_21(l, universal.holds, bs2.as_ref().unwrap(), conv, jobs),
        TheoremName::Commutator => remark_commutator(l, conv, jobs),
    };
    for c in clauses {
        cert.push(c);
    }
    Ok(cert)
}

fn theorem_10(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let o = at.iso(Circ0) == at.iso(Circ1);
        let s = at.iso(Star0) == at.iso(Star1);
        let (a, b) = (at.pair(Circ0), at.pair(Circ1));
        let route = bryant_schneider_identity_test(l, a.f, a.g, b.f, b.g);
        vec![
            info("o0_identity_o1", o, Value::Null),
            info("s0_identity_s1", s, Value::Null),
            req(
                "bryant_schneider_route",
                route == o,
                json!({ "test": route, "tables_equal": o }),
            ),
        ]
    });
    let boolean = is_boolean_group(l);
    let (o, s) = (clauses[0].pass, clauses[1].pass);
    clauses.insert(2, Clause::new("boolean_group", boolean).informational());
    let agree = o == s && s == boolean;
    clauses.push(
        Clause::new("equivalence", agree)
            .with_witness((!agree).then(|| json!({ "o0_identity_o1": o, "s0_identity_s1": s, "boolean_group": boolean }))),
    );
    clauses
}

fn theorem_11(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let theta = at.isomorphic(Circ0, Circ1);
        let rhs = !at.eq11_witnesses().is_empty();
        let mut out = vec![
            req("equivalence", theta.is_some() == rhs, json!({ "isomorphic": theta.is_some(), "eq11": rhs })),
            info("isomorphic", theta.is_some(), Value::Null),
        ];
        match theta {
            Some(theta) => {
                let (fg, cd) = (at.pair(Circ0), at.pair(Circ1));
                let t = autotopism_from_isomorphism(l, fg, cd, &theta).expect("verified isomorphism");
                out.push(req("eq10m_bridge", is_autotopism(l, &t), json!({ "theta": theta })));
                let gamma01 = at.perm(GammaKind::Gamma01Circ);
                out.push(req(
                    "bridge_identity_iff_gamma01o",
                    t.a.is_identity() == (theta == gamma01),
                    json!({ "theta": theta }),
                ));
            }
            None => {
                out.push(skip("eq10m_bridge", true));
                out.push(skip("bridge_identity_iff_gamma01o", true));
            }
        }
        out
    })
}

fn theorem_11b(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let theta = at.isomorphic(Star0, Star1);
        let rhs = !at.eq11b_witnesses().is_empty();
        let mut out = vec![
            req("equivalence", theta.is_some() == rhs, json!({ "isomorphic": theta.is_some(), "eq11b": rhs })),
            info("isomorphic", theta.is_some(), Value::Null),
        ];
        match theta {
            Some(theta) => {
                let (fg, cd) = (at.pair(Star0), at.pair(Star1));
                let t = autotopism_from_isomorphism(l, fg, cd, &theta).expect("verified isomorphism");
                out.push(req("eq10m_bridge", is_autotopism(l, &t), json!({ "theta": theta })));
            }
            None => out.push(skip("eq10m_bridge", true)),
        }
        out
    })
}

fn corollary_12(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    let lefts: Vec<Perm> = l.elements().map(|a| l.translation(Side::Left, a)).collect();
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let names = ["autotopism_exists", "gamma_is_conjugate", "item1", "item2", "rho_regular"];
        if at.isomorphic(Circ0, Circ1).is_none() {
            return names.iter().map(|&n| skip(n, true)).collect();
        }
        let found = at.eq11_witnesses();
        let (lu, lu_inv) = (&lefts[p.u], l.inverse_translation(Side::Left, p.u));
        let conj = |t: &IsoTriple| lu_inv.then(&t.b).then(lu) == t.c;
        let Some(t) = found.iter().find(|t| conj(t)).or(found.first()) else {
            let mut v = vec![req("autotopism_exists", false, Value::Null)];
            v.extend(names[1..].iter().map(|&n| skip(n, true)));
            return v;
        };
        let (beta, gamma) = (&t.b, &t.c);
        let commutes = |a: &Perm, b: &Perm| a.commutator(b).is_identity();
        let item1 = (gamma == beta) == (commutes(beta, lu) || commutes(gamma, lu));
        let item2 = (gamma == lu) == (beta == lu);
        let detail = json!({ "beta": beta, "gamma": gamma });
        let mut v = vec![
            req("autotopism_exists", true, Value::Null),
            req("gamma_is_conjugate", conj(t), detail.clone()),
            req("item1", item1, detail.clone()),
            req("item2", item2, detail.clone()),
        ];
        if lefts.iter().all(|la| commutes(beta, la)) {
            let i = Perm::identity(l.order());
            let rho = is_autotopism(l, &IsoTriple::new(i, beta.clone(), beta.clone()));
            v.push(req("rho_regular", rho, detail.clone()));
        } else {
            v.push(skip("rho_regular", true));
        }
        v.push(info("beta_is_left_translation", beta != lu, detail));
        v
    });
    let abelian = l.is_associative() && l.is_commutative();
    if let Some(c) = clauses.iter_mut().find(|c| c.name == "beta_is_left_translation") {
        // only informative when some β equals L_u; then the loop should be an abelian group
        c.pass = c.pass || abelian;
        c.name = "abelian_when_beta_is_left_translation".into();
    }
    clauses
}

fn corollary_13(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    let rights: Vec<Perm> = l.elements().map(|a| l.translation(Side::Right, a)).collect();
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let names = ["autotopism_exists", "pi_is_conjugate", "item1", "item2", "lambda_regular"];
        if at.isomorphic(Star0, Star1).is_none() {
            return names.iter().map(|&n| skip(n, true)).collect();
        }
        let found = at.eq11b_witnesses();
        let (rv, rv_inv) = (&rights[p.v], l.inverse_translation(Side::Right, p.v));
        let conj = |t: &IsoTriple| rv_inv.then(&t.a).then(rv) == t.c;
        let Some(t) = found.iter().find(|t| conj(t)).or(found.first()) else {
            let mut v = vec![req("autotopism_exists", false, Value::Null)];
            v.extend(names[1..].iter().map(|&n| skip(n, true)));
            return v;
        };
        let (delta, pi) = (&t.a, &t.c);
        let commutes = |a: &Perm, b: &Perm| a.commutator(b).is_identity();
        let item1 = (pi == delta) == (commutes(delta, rv) || commutes(pi, rv));
        let item2 = (delta == rv) == (pi == rv);
        let detail = json!({ "delta": delta, "pi": pi });
        let mut v = vec![
            req("autotopism_exists", true, Value::Null),
            req("pi_is_conjugate", conj(t), detail.clone()),
            req("item1", item1, detail.clone()),
            req("item2", item2, detail.clone()),
        ];
        if rights.iter().all(|ra| commutes(delta, ra)) {
            let i = Perm::identity(l.order());
            let lambda = is_autotopism(l, &IsoTriple::new(delta.clone(), i, delta.clone()));
            v.push(req("lambda_regular", lambda, detail.clone()));
        } else {
            v.push(skip("lambda_regular", true));
        }
        v.push(info("delta_is_right_translation", delta != rv, detail));
        v
    });
    let abelian = l.is_associative() && l.is_commutative();
    if let Some(c) = clauses.iter_mut().find(|c| c.name == "delta_is_right_translation") {
        c.pass = c.pass || abelian;
        c.name = "abelian_when_delta_is_right_translation".into();
    }
    clauses
}

fn theorem_14(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let lhs = at.isomorphic(Circ0, Circ1).is_some() && at.isomorphic(Star0, Star1).is_some();
        let rhs = !at.eq11_witnesses().is_empty() && !at.eq11b_witnesses().is_empty();
        vec![
            req("equivalence", lhs == rhs, json!({ "isomorphic": lhs, "eq10": rhs })),
            info("both_isomorphic", lhs, Value::Null),
        ]
    })
}

fn theorem_15(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let g01o = at.perm(GammaKind::Gamma01Circ);
        let g01s = at.perm(GammaKind::Gamma01Star);
        let hyp = at.maps(&g01o, Circ0, Circ1) && at.maps(&g01s, Star0, Star1);
        let mut v = vec![info("hypothesis", hyp, Value::Null)];
        if hyp {
            let lhs = at
                .perm(GammaKind::Gamma0)
                .then(&g01s)
                .then(&at.perm(GammaKind::Gamma1));
            let ok = lhs == g01o;
            v.push(req("composition", ok, json!({ "lhs": lhs, "gamma01o": g01o })));
        } else {
            v.push(skip("composition", true));
        }
        v
    })
}

fn corollary_16(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let hyp = at.isomorphic(Circ0, Circ1).is_some() && at.isomorphic(Star0, Star1).is_some();
        let g01o = at.perm(GammaKind::Gamma01Circ);
        let g01s = at.perm(GammaKind::Gamma01Star);
        let (lu, rv) = (l.translation(Side::Left, p.u), l.translation(Side::Right, p.v));
        let beta = lu.then(&g01o).then(&lu.inverse());
        let delta = rv.then(&g01s).then(&rv.inverse());
        vec![
            info("hypothesis", hyp, Value::Null),
            info("beta_identity", beta.is_identity(), Value::Null),
            info("gamma_identity", g01o.is_identity(), Value::Null),
            info("delta_identity", delta.is_identity(), Value::Null),
            info("pi_identity", g01s.is_identity(), Value::Null),
            info("o0_identity_o1", at.iso(Circ0) == at.iso(Circ1), Value::Null),
            info("s0_identity_s1", at.iso(Star0) == at.iso(Star1), Value::Null),
        ]
    });
    clauses.push(Clause::new("boolean_group", is_boolean_group(l)).informational());
    let hyp = clauses[0].pass;
    let values: Vec<bool> = clauses[1..].iter().map(|c| c.pass).collect();
    let agree = values.iter().all(|&b| b == values[0]);
    let clause = if hyp {
        Clause::new("equivalence", agree).with_witness((!agree).then(|| json!(values)))
    } else {
        Clause::new("equivalence", true)
    };
    clauses.push(clause);
    clauses
}

fn theorem_17(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let lhs = at.maps(&at.perm(GammaKind::Gamma01Circ), Circ0, Circ1);
        let rhs = at.eq12();
        vec![
            req("equivalence", lhs == rhs, json!({ "gamma01o_isomorphism": lhs, "eq12": rhs })),
            info("eq12", rhs, Value::Null),
        ]
    })
}

fn theorem_17b(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let lhs = at.maps(&at.perm(GammaKind::Gamma01Star), Star0, Star1);
        let rhs = at.eq12b();
        vec![
            req("equivalence", lhs == rhs, json!({ "gamma01s_isomorphism": lhs, "eq12b": rhs })),
            info("eq12b", rhs, Value::Null),
        ]
    })
}

fn lemma_17c(l: &Loop, universal: bool, bs2: &Bs2, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let member = |k| bs2.contains(&at.perm(k));
        vec![
            info("eq12", at.eq12(), Value::Null),
            info("eq12b", at.eq12b(), Value::Null),
            info("gamma0_gamma01o_in_bs2", member(GammaKind::Gamma0) && member(GammaKind::Gamma01Circ), Value::Null),
            info("gamma1_gamma01s_in_bs2", member(GammaKind::Gamma1) && member(GammaKind::Gamma01Star), Value::Null),
        ]
    });
    let pass = |i: usize| clauses[i].pass;
    let (lhs1, rhs1) = (universal && pass(0), pass(2));
    let (lhs2, rhs2) = (universal && pass(1), pass(3));
    clauses.insert(0, Clause::new("universal_osborn", universal).informational());
    clauses.push(
        Clause::new("item1", lhs1 == rhs1).with_witness((lhs1 != rhs1).then(|| json!({ "lhs": lhs1, "rhs": rhs1 }))),
    );
    clauses.push(
        Clause::new("item2", lhs2 == rhs2).with_witness((lhs2 != rhs2).then(|| json!({ "lhs": lhs2, "rhs": rhs2 }))),
    );
    clauses
}

fn theorem_18(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let lhs = at.isomorphic(Circ2, Circ3).is_some();
        let lambda = at.perm(GammaKind::Lambda13);
        let mu = at.perm(GammaKind::Mu13);
        let rhs = autotopisms_with_first(l, &lambda)
            .iter()
            .any(|t| t.b == mu && at.eq13_tail(&lambda, &mu, &t.c));
        vec![
            req("equivalence", lhs == rhs, json!({ "isomorphic": lhs, "eq13": rhs })),
            info("eq13", rhs, Value::Null),
        ]
    })
}

fn lemma_19(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    use IsotopeLabel::*;
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let (right, left) = gamma23_forms(l, p, conv);
        let lhs = at.maps(&right, Circ2, Circ3);
        let rhs = at.eq14();
        vec![
            req("equivalence", lhs == rhs, json!({ "gamma23o_isomorphism": lhs, "eq14": rhs })),
            info("forms_agree", right == left, json!({ "right": right, "left": left })),
        ]
    })
}

fn corollary_20(l: &Loop, bs2: &Bs2, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let (right, _) = gamma23_forms(l, p, conv);
        let lhs = bs2.contains(&right);
        let rhs = at.eq14();
        vec![
            req("equivalence", lhs == rhs, json!({ "gamma23o_in_bs2": lhs, "eq15": rhs })),
            info("gamma23o_in_bs2", lhs, Value::Null),
        ]
    })
}

fn corollary_21(l: &Loop, universal: bool, bs2: &Bs2, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    let mut clauses = scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let (right, _) = gamma23_forms(l, p, conv);
        vec![
            info("gamma23o_in_bs2", bs2.contains(&right), Value::Null),
            info("gamma0_in_bs2", bs2.contains(&at.perm(GammaKind::Gamma0)), Value::Null),
            info("eq16", at.eq14(), Value::Null),
        ]
    });
    let hyp = universal && clauses[0].pass;
    let concl = clauses[1].pass && clauses[2].pass;
    clauses.insert(0, Clause::new("universal_osborn", universal).informational());
    clauses.push(
        Clause::new("implication", !hyp || concl)
            .with_witness((hyp && !concl).then(|| json!({ "hypothesis": hyp, "conclusion": concl }))),
    );
    clauses
}

fn remark_commutator(l: &Loop, conv: &Conventions, jobs: usize) -> Vec<Clause> {
    scan(l, jobs, |p| {
        let at = At::new(l, p, conv);
        let g0 = at.perm(GammaKind::Gamma0);
        let g1 = at.perm(GammaKind::Gamma1);
        let left = l
            .inverse_translation(Side::Left, p.u)
            .then(&l.translation(Side::Left, p.x));
        let right = l
            .inverse_translation(Side::Right, p.v)
            .then(&l.translation(Side::Right, at.w));
        let trivial = left.commutator(&right).is_identity();
        vec![
            req("equivalence", (g0 == g1) == trivial, json!({ "gamma0_eq_gamma1": g0 == g1, "commutator_trivial": trivial })),
            info("gamma0_eq_gamma1", g0 == g1, Value::Null),
        ]
    })
}

/// Whether `γ01∘` satisfies its defining equations at `p`.
pub fn eq12_holds(l: &Loop, p: ParamTriple, conv: &Conventions) -> bool {
    At::new(l, p, conv).eq12()
}

/// Whether `γ01∗` satisfies its defining equations at `p`.
pub fn eq12b_holds(l: &Loop, p: ParamTriple, conv: &Conventions) -> bool {
    At::new(l, p, conv).eq12b()
}
