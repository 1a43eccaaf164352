//! Principal isotopes, isotopisms, autotopisms and isomorphism search.
//!
//! A triple `(α, β, γ)` is an isotopism from `(G,·)` to `(H,∘)` when
//! `xα ∘ yβ = (x·y)γ` for all `x, y`.

use serde::{Deserialize, Serialize};

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::loops::{Loop, Side};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsoTriple {
    pub a: Perm,
    pub b: Perm,
    pub c: Perm,
}

impl IsoTriple {
    pub fn new(a: Perm, b: Perm, c: Perm) -> Self {
        assert!(a.len() == b.len() && b.len() == c.len());
        IsoTriple { a, b, c }
    }

    pub fn identity(n: usize) -> Self {
        let i = Perm::identity(n);
        IsoTriple::new(i.clone(), i.clone(), i)
    }

    pub fn isomorphism(theta: Perm) -> Self {
        IsoTriple::new(theta.clone(), theta.clone(), theta)
    }

    /// Componentwise, `self` first.
    pub fn then(&self, other: &IsoTriple) -> IsoTriple {
        IsoTriple::new(
            self.a.then(&other.a),
            self.b.then(&other.b),
            self.c.then(&other.c),
        )
    }

    pub fn inverse(&self) -> IsoTriple {
        IsoTriple::new(self.a.inverse(), self.b.inverse(), self.c.inverse())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.is_identity() && self.c.is_identity()
    }
}

/// Parameters `(f, g)` of the principal isotope `Q_{f,g}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrincipalPair {
    pub f: usize,
    pub g: usize,
}

impl PrincipalPair {
    pub fn new(f: usize, g: usize) -> Self {
        PrincipalPair { f, g }
    }
}

/// `Q_{f,g}`: `x∘y = (x/g)·(f\y)`, with identity `f·g`.
pub fn principal_isotope(l: &Loop, p: PrincipalPair) -> Loop {
    let n = l.order();
    let table = l
        .pairs()
        .map(|(x, y)| l.mul(l.rdiv(x, p.g), l.ldiv(p.f, y)))
        .collect();
    let identity = l.mul(p.f, p.g);
    let iso = Loop::from_table_unchecked(n, identity, table);
    debug_assert!(iso
        .elements()
        .all(|x| iso.mul(identity, x) == x && iso.mul(x, identity) == x));
    iso
}

/// First pair `(x, y)` where `xα ∘ yβ ≠ (x·y)γ`, or `None` for an isotopism.
pub fn isotopism_failure(t: &IsoTriple, g: &Loop, h: &Loop) -> Option<(usize, usize)> {
    g.pairs()
        .find(|&(x, y)| h.mul(t.a.apply(x), t.b.apply(y)) != t.c.apply(g.mul(x, y)))
}

pub fn is_isotopism(t: &IsoTriple, g: &Loop, h: &Loop) -> Result<bool> {
    same_order(g, h)?;
    if t.a.len() != g.order() {
        return Err(Error::OrderMismatch {
            left: t.a.len(),
            right: g.order(),
        });
    }
    Ok(isotopism_failure(t, g, h).is_none())
}

pub fn is_autotopism(l: &Loop, t: &IsoTriple) -> bool {
    isotopism_failure(t, l, l).is_none()
}

pub fn is_isomorphism(theta: &Perm, g: &Loop, h: &Loop) -> bool {
    g.order() == h.order()
        && theta.len() == g.order()
        && g.pairs()
            .all(|(x, y)| h.mul(theta.apply(x), theta.apply(y)) == theta.apply(g.mul(x, y)))
}

fn same_order(g: &Loop, h: &Loop) -> Result<()> {
    if g.order() == h.order() {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        })
    }
}

/// The autotopism with first component `alpha` and `eβ = c`, if there is
/// one. Setting `y = e` forces `γ = α·R_c`, and `x = e` forces
/// `β = γ·𝕃_{eα}`.
pub fn autotopism_from_first(l: &Loop, alpha: &Perm, c: usize) -> Option<IsoTriple> {
    let a = alpha.apply(l.identity());
    let gamma: Vec<usize> = l.elements().map(|x| l.mul(alpha.apply(x), c)).collect();
    let beta: Vec<usize> = l.elements().map(|y| l.ldiv(a, gamma[y])).collect();
    let ok = l
        .pairs()
        .all(|(x, y)| l.mul(alpha.apply(x), beta[y]) == gamma[l.mul(x, y)]);
    ok.then(|| {
        IsoTriple::new(
            alpha.clone(),
            Perm::from_images_unchecked(beta),
            Perm::from_images_unchecked(gamma),
        )
    })
}

/// The autotopism with second component `beta` and `eα = a`, if any.
pub fn autotopism_from_second(l: &Loop, beta: &Perm, a: usize) -> Option<IsoTriple> {
    let c = beta.apply(l.identity());
    let gamma: Vec<usize> = l.elements().map(|y| l.mul(a, beta.apply(y))).collect();
    let alpha: Vec<usize> = l.elements().map(|x| l.rdiv(gamma[x], c)).collect();
    let ok = l
        .pairs()
        .all(|(x, y)| l.mul(alpha[x], beta.apply(y)) == gamma[l.mul(x, y)]);
    ok.then(|| {
        IsoTriple::new(
            Perm::from_images_unchecked(alpha),
            beta.clone(),
            Perm::from_images_unchecked(gamma),
        )
    })
}

/// The autotopism with third component `gamma` and `eβ = c`, if any:
/// `y = e` gives `α = γ·𝕉_c`, then `x = e` gives `β = γ·𝕃_{eα}`.
pub fn autotopism_from_third(l: &Loop, gamma: &Perm, c: usize) -> Option<IsoTriple> {
    let alpha: Vec<usize> = l.elements().map(|x| l.rdiv(gamma.apply(x), c)).collect();
    let a = alpha[l.identity()];
    let beta: Vec<usize> = l.elements().map(|y| l.ldiv(a, gamma.apply(y))).collect();
    let ok = l
        .pairs()
        .all(|(x, y)| l.mul(alpha[x], beta[y]) == gamma.apply(l.mul(x, y)));
    ok.then(|| {
        IsoTriple::new(
            Perm::from_images_unchecked(alpha),
            Perm::from_images_unchecked(beta),
            gamma.clone(),
        )
    })
}

/// Every autotopism whose first component is `alpha`.
pub fn autotopisms_with_first(l: &Loop, alpha: &Perm) -> Vec<IsoTriple> {
    l.elements()
        .filter_map(|c| autotopism_from_first(l, alpha, c))
        .collect()
}

/// Every autotopism whose second component is `beta`.
pub fn autotopisms_with_second(l: &Loop, beta: &Perm) -> Vec<IsoTriple> {
    l.elements()
        .filter_map(|a| autotopism_from_second(l, beta, a))
        .collect()
}

/// Every autotopism whose third component is `gamma`.
pub fn autotopisms_with_third(l: &Loop, gamma: &Perm) -> Vec<IsoTriple> {
    l.elements()
        .filter_map(|c| autotopism_from_third(l, gamma, c))
        .collect()
}

/// The full autotopism group, ordered by `α` (lexicographic) then `eβ`.
pub fn autotopisms(l: &Loop, bounds: &Bounds) -> Result<Vec<IsoTriple>> {
    Bounds::check("autotopism enumeration", l.order(), bounds.autotopisms)?;
    let mut out = Vec::new();
    let mut alpha: Vec<usize> = l.elements().collect();
    loop {
        let p = Perm::from_images_unchecked(alpha.clone());
        out.extend(autotopisms_with_first(l, &p));
        if !next_permutation(&mut alpha) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub autotopic: bool,
    pub lambda_regular: bool,
    pub rho_regular: bool,
}

pub fn regularity(l: &Loop, u: &Perm) -> Regularity {
    let i = Perm::identity(l.order());
    Regularity {
        autotopic: !autotopisms_with_first(l, u).is_empty(),
        lambda_regular: is_autotopism(l, &IsoTriple::new(u.clone(), i.clone(), u.clone())),
        rho_regular: is_autotopism(l, &IsoTriple::new(i, u.clone(), u.clone())),
    }
}

/// An isomorphism `θ: G → H`, found by mapping generators of `G` in index
/// order and propagating through products. The first solution in that order
/// is returned.
pub fn find_isomorphism(g: &Loop, h: &Loop) -> Result<Option<Perm>> {
    same_order(g, h)?;
    let mut search = IsoSearch::new(g, h);
    if !search.assign(g.identity(), h.identity()) {
        return Ok(None);
    }
    let gens = generators(g);
    Ok(search.extend(&gens).then(|| search.into_perm()))
}

pub fn are_isomorphic(g: &Loop, h: &Loop) -> bool {
    matches!(find_isomorphism(g, h), Ok(Some(_)))
}

/// Greedy generating set: scan elements in index order and keep each one
/// not already in the subloop generated so far.
pub fn generators(l: &Loop) -> Vec<usize> {
    let n = l.order();
    let mut inside = vec![false; n];
    inside[l.identity()] = true;
    let mut members = vec![l.identity()];
    let mut gens = Vec::new();
    for x in l.elements() {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        members.push(x);
        // closure under products; finite, so divisions stay inside too
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..=i {
                let b = members[j];
                for z in [l.mul(a, b), l.mul(b, a)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

const UNSET: usize = usize::MAX;

struct IsoSearch<'a> {
    g: &'a Loop,
    h: &'a Loop,
    map: Vec<usize>,
    used: Vec<bool>,
    /// Assigned elements of `G`, in assignment order.
    trail: Vec<usize>,
}

impl<'a> IsoSearch<'a> {
    fn new(g: &'a Loop, h: &'a Loop) -> Self {
        let n = g.order();
        IsoSearch {
            g,
            h,
            map: vec![UNSET; n],
            used: vec![false; n],
            trail: Vec::with_capacity(n),
        }
    }

    fn set(&mut self, x: usize, y: usize) -> bool {
        match self.map[x] {
            UNSET if !self.used[y] => {
                self.map[x] = y;
                self.used[y] = true;
                self.trail.push(x);
                true
            }
            UNSET => false,
            prev => prev == y,
        }
    }

    /// Assigns `x ↦ y` and everything it forces. On failure the partial
    /// state is left for the caller to undo.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let start = self.trail.len();
        if !self.set(x, y) {
            return false;
        }
        let mut next = start;
        while next < self.trail.len() {
            let a = self.trail[next];
            let mut j = 0;
            while j <= next {
                let b = self.trail[j];
                let (ia, ib) = (self.map[a], self.map[b]);
                if !self.set(self.g.mul(a, b), self.h.mul(ia, ib))
                    || !self.set(self.g.mul(b, a), self.h.mul(ib, ia))
                {
                    return false;
                }
                j += 1;
            }
            next += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    fn extend(&mut self, gens: &[usize]) -> bool {
        let Some((&x, rest)) = gens.split_first() else {
            return self.trail.len() == self.g.order();
        };
        if self.map[x] != UNSET {
            return self.extend(rest);
        }
        for y in 0..self.g.order() {
            if self.used[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.extend(rest) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn into_perm(self) -> Perm {
        let theta = Perm::from_images_unchecked(self.map);
        debug_assert!(is_isomorphism(&theta, self.g, self.h));
        theta
    }
}

/// An autotopism `(α, β, γ)` of `Q` with `(f, g, fg)(α, β, γ) = (c, d, cd)`,
/// searched directly in `AUT(Q)`.
pub fn drisko(
    l: &Loop,
    fg: PrincipalPair,
    cd: PrincipalPair,
    bounds: &Bounds,
) -> Result<Option<IsoTriple>> {
    Ok(drisko_witnesses(l, fg, cd, bounds, true)?.into_iter().next())
}

/// All autotopisms satisfying the Drisko condition.
pub fn drisko_all(
    l: &Loop,
    fg: PrincipalPair,
    cd: PrincipalPair,
    bounds: &Bounds,
) -> Result<Vec<IsoTriple>> {
    drisko_witnesses(l, fg, cd, bounds, false)
}

fn drisko_witnesses(
    l: &Loop,
    fg: PrincipalPair,
    cd: PrincipalPair,
    bounds: &Bounds,
    first_only: bool,
) -> Result<Vec<IsoTriple>> {
    Bounds::check("drisko search", l.order(), bounds.autotopisms)?;
    let (f, g, c, d) = (fg.f, fg.g, cd.f, cd.g);
    let (src, dst) = (l.mul(f, g), l.mul(c, d));
    let mut out = Vec::new();
    let mut alpha: Vec<usize> = l.elements().collect();
    loop {
        if alpha[f] == c {
            let p = Perm::from_images_unchecked(alpha.clone());
            for t in autotopisms_with_first(l, &p) {
                if t.b.apply(g) == d && t.c.apply(src) == dst {
                    out.push(t);
                    if first_only {
                        return Ok(out);
                    }
                }
            }
        }
        if !next_permutation(&mut alpha) {
            return Ok(out);
        }
    }
}

/// From an isomorphism `θ: Q_{f,g} → Q_{c,d}` builds the autotopism
/// `(R_g θ R_d^-1, L_f θ L_c^-1, θ)` of `Q`.
pub fn autotopism_from_isomorphism(
    l: &Loop,
    fg: PrincipalPair,
    cd: PrincipalPair,
    theta: &Perm,
) -> Result<IsoTriple> {
    let src = principal_isotope(l, fg);
    let dst = principal_isotope(l, cd);
    if !is_isomorphism(theta, &src, &dst) {
        return Err(Error::NotAnIsomorphism);
    }
    let a = l
        .translation(Side::Right, fg.g)
        .then(theta)
        .then(&l.inverse_translation(Side::Right, cd.g));
    let b = l
        .translation(Side::Left, fg.f)
        .then(theta)
        .then(&l.inverse_translation(Side::Left, cd.f));
    let t = IsoTriple::new(a, b, theta.clone());
    debug_assert!(is_autotopism(l, &t));
    Ok(t)
}

/// `Q_{a,b}` and `Q_{c,d}` share a table iff `c·b` and `a·d` lie in the
/// middle nucleus of `Q_{a,b}` and `a·b = c·d`.
pub fn bryant_schneider_identity_test(l: &Loop, a: usize, b: usize, c: usize, d: usize) -> bool {
    if l.mul(a, b) != l.mul(c, d) {
        return false;
    }
    let iso = principal_isotope(l, PrincipalPair::new(a, b));
    iso.is_in_middle_nucleus(l.mul(c, b)) && iso.is_in_middle_nucleus(l.mul(a, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GLoopReport {
    pub holds: bool,
    /// First `(a, b)` with `Q ≇ Q_{a,b}`.
    pub witness: Option<(usize, usize)>,
}

pub fn is_g_loop(l: &Loop, bounds: &Bounds) -> Result<GLoopReport> {
    Bounds::check("G-loop test", l.order(), bounds.universal)?;
    let witness = l
        .pairs()
        .find(|&(a, b)| !are_isomorphic(l, &principal_isotope(l, PrincipalPair::new(a, b))));
    Ok(GLoopReport {
        holds: witness.is_none(),
        witness,
    })
}

/// Evidence `(a, b, c, d)` that `θ` is an isomorphism `Q_{a,b} → Q_{c,d}`.
/// For each `(a, b)` the target identity is `(ab)θ`, so only factorizations
/// `c·d = (ab)θ` are tried.
pub fn bs2_contains(l: &Loop, theta: &Perm, bounds: &Bounds) -> Result<Option<[usize; 4]>> {
    Bounds::check("BS2 membership", l.order(), bounds.bs2)?;
    if theta.len() != l.order() {
        return Err(Error::OrderMismatch {
            left: theta.len(),
            right: l.order(),
        });
    }
    for (a, b) in l.pairs() {
        let target = theta.apply(l.mul(a, b));
        for c in l.elements() {
            let d = l.ldiv(c, target);
            let ok = l.pairs().all(|(x, y)| {
                let src = l.mul(l.rdiv(x, b), l.ldiv(a, y));
                let dst = l.mul(l.rdiv(theta.apply(x), d), l.ldiv(c, theta.apply(y)));
                theta.apply(src) == dst
            });
            if ok {
                return Ok(Some([a, b, c, d]));
            }
        }
    }
    Ok(None)
}
