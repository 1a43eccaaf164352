//! The ten acceptance criteria. Each prints one PASS/FAIL line; the test
//! then checks that exactly the known-unattainable criteria are red.

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use osborn_core::enumerate::{builtin, builtins, enumerate_loops, NamedLoop};
use osborn_core::geometry::{build_pyramid, verify_rectangle};
use osborn_core::isotopy::{
    autotopism_from_isomorphism, autotopisms, bryant_schneider_identity_test, drisko, find_isomorphism,
    is_autotopism, is_isomorphism, principal_isotope,
};
use osborn_core::osborn::{
    build_isotope, check_theorem, gamma, is_osborn, is_universal_osborn, os3_failure, verify_diagram_all, Diagram,
    GammaKind, IsotopeLabel, ParamTriple, TheoremName,
};
use osborn_core::simplicial::{
    build_k, build_k10, f_ij, simplicial_map_check, theorem_k, validate_complex, ComplexName, IsotopeContext,
    ValidationMode,
};
use osborn_core::{Bounds, Conventions, IsoTriple, Loop, Perm, PrincipalPair};

const JOBS: usize = 4;

/// The unattainable criteria; see the project notes for the analysis.
const EXPECTED_RED: [usize; 2] = [2, 9];

fn bounds() -> Bounds {
    Bounds::default()
}

fn conv() -> Conventions {
    Conventions::default()
}

/// Every enumerated loop of order 1 to 6.
fn enumerated() -> &'static Vec<NamedLoop> {
    static CELL: OnceLock<Vec<NamedLoop>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=6 {
            let mut i = 0;
            enumerate_loops(n, &bounds(), |l| {
                out.push(NamedLoop::new(format!("o{n}_{i}"), l.clone()));
                i += 1;
            })
            .unwrap();
        }
        out
    })
}

fn groups_up_to_six() -> Vec<&'static NamedLoop> {
    enumerated().iter().filter(|l| l.table.is_associative()).collect()
}

/// Built-ins and enumerated loops of order at most 5 that are universal
/// Osborn, plus M(S3,2). Enumerated tables equal to a built-in are skipped.
fn universal_corpus() -> &'static Vec<NamedLoop> {
    static CELL: OnceLock<Vec<NamedLoop>> = OnceLock::new();
    CELL.get_or_init(|| {
        let fixed = builtins();
        let mut out: Vec<NamedLoop> = fixed
            .iter()
            .filter(|b| is_universal_osborn(&b.table, &bounds()).unwrap().holds)
            .cloned()
            .collect();
        for l in enumerated().iter().filter(|l| l.table.order() <= 5) {
            if fixed.iter().all(|b| b.table != l.table) && is_universal_osborn(&l.table, &bounds()).unwrap().holds {
                out.push(l.clone());
            }
        }
        out
    })
}

type Criterion = (usize, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_loops(n, &bounds(), |_| {}).unwrap()).collect();
    let six_start = Instant::now();
    let six = enumerate_loops(6, &bounds(), |_| {}).unwrap();
    let six_time = six_start.elapsed();
    let mut all = counts;
    all.push(six);
    let ok = all == [1, 1, 1, 4, 56, 9408] && six_time < Duration::from_secs(60);
    outcome(ok, format!("counts {all:?}, order 6 in {six_time:?} (total {:?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let groups = groups_up_to_six();
    let bad: Vec<&str> = groups
        .iter()
        .filter(|g| !is_osborn(&g.table).holds || !is_universal_osborn(&g.table, &bounds()).unwrap().holds)
        .map(|g| g.name.as_str())
        .collect();
    let n5 = os3_failure(&builtin("N5").unwrap().table);
    let ok = bad.is_empty() && n5 == Some([1, 2, 3]);
    outcome(
        ok,
        format!(
            "{} groups, {} failing Osborn; N5 first OS3 witness {n5:?}, expected Some([1, 2, 3])",
            groups.len(),
            bad.len()
        ),
    )
}

fn criterion_3() -> Outcome {
    let c = conv();
    let mut subjects: Vec<(String, Loop)> = groups_up_to_six()
        .into_iter()
        .filter(|g| is_universal_osborn(&g.table, &bounds()).unwrap().holds)
        .map(|g| (g.name.clone(), g.table.clone()))
        .collect();
    subjects.push(("M(S3,2)".into(), builtin("M(S3,2)").unwrap().table));
    let mut failures = Vec::new();
    let mut m_time = Duration::ZERO;
    for (name, l) in &subjects {
        let start = Instant::now();
        for d in Diagram::ALL {
            if !verify_diagram_all(l, d, &c, JOBS).pass {
                failures.push(format!("{name}/{d}"));
            }
        }
        if name == "M(S3,2)" {
            m_time = start.elapsed();
        }
    }
    let n5 = builtin("N5").unwrap().table;
    let n5_fails = !verify_diagram_all(&n5, Diagram::D7, &c, JOBS).pass;
    let ok = failures.is_empty() && n5_fails && m_time < Duration::from_secs(120);
    outcome(
        ok,
        format!(
            "{} loops x 6 diagrams, failures {failures:?}; N5 diagram 7 fails: {n5_fails}; M(S3,2) scan {m_time:?}",
            subjects.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let identity_clauses = |l: &Loop| {
        let cert = check_theorem(l, TheoremName::T10, &bounds(), &conv(), JOBS).unwrap();
        let o = cert.clause("o0_identity_o1").unwrap().pass;
        let s = cert.clause("s0_identity_s1").unwrap().pass;
        (o, s, cert.pass)
    };
    let mut problems = Vec::new();
    for name in ["Z2xZ2", "Z2^3"] {
        let (o, s, _) = identity_clauses(&builtin(name).unwrap().table);
        if !(o && s) {
            problems.push(format!("{name} should hold"));
        }
    }
    for name in ["Z3", "Z4", "Z5", "Z6", "S3"] {
        let (o, s, _) = identity_clauses(&builtin(name).unwrap().table);
        if o || s {
            problems.push(format!("{name} should fail somewhere"));
        }
    }
    for l in universal_corpus() {
        if !identity_clauses(&l.table).2 {
            problems.push(format!("{} clause disagreement", l.name));
        }
    }
    outcome(problems.is_empty(), format!("{} corpus loops, problems {problems:?}", universal_corpus().len()))
}

fn is_iso(l: &Loop, theta: &Perm, from: &str, to: &str, p: ParamTriple, c: &Conventions) -> bool {
    let a = build_isotope(l, from.parse::<IsotopeLabel>().unwrap(), p, c);
    let b = build_isotope(l, to.parse::<IsotopeLabel>().unwrap(), p, c);
    is_isomorphism(theta, &a, &b)
}

fn criterion_5() -> Outcome {
    let c = conv();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for nl in universal_corpus() {
        let l = &nl.table;
        for p in ParamTriple::all(l.order()) {
            let g = |k| gamma(l, k, p, &c).unwrap();
            let (g0, g1, g01o, g01s) = (
                g(GammaKind::Gamma0),
                g(GammaKind::Gamma1),
                g(GammaKind::Gamma01Circ),
                g(GammaKind::Gamma01Star),
            );
            if !(is_iso(l, &g01o, "o0", "o1", p, &c) && is_iso(l, &g01s, "s0", "s1", p, &c)) {
                continue;
            }
            checked += 1;
            if g0.then(&g01s).then(&g1) != g01o {
                failures.push(format!("{} at {:?}", nl.name, p.as_array()));
            }
        }
    }
    let z3 = builtin("Z3").unwrap().table;
    let p = ParamTriple::new(1, 0, 0);
    let shift = |k: usize| Perm::from_images((0..3).map(|x| (x + k) % 3).collect()).unwrap();
    let spot = [
        (GammaKind::Gamma0, 2),
        (GammaKind::Gamma01Circ, 2),
        (GammaKind::Gamma1, 2),
        (GammaKind::Gamma01Star, 1),
    ]
    .iter()
    .all(|&(k, s)| gamma(&z3, k, p, &c).unwrap() == shift(s));
    outcome(
        failures.is_empty() && spot && checked > 0,
        format!("{checked} (loop, p) with both arrows verified, failures {failures:?}; Z3 spot values {spot}"),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut drisko_cases = 0usize;
    for nl in enumerated().iter().filter(|l| l.table.order() <= 4) {
        let l = &nl.table;
        for (f, g, c, d) in tuples(l.order()) {
            let (fg, cd) = (PrincipalPair::new(f, g), PrincipalPair::new(c, d));
            let via_aut = drisko(l, fg, cd, &bounds()).unwrap().is_some();
            let direct = find_isomorphism(&principal_isotope(l, fg), &principal_isotope(l, cd))
                .unwrap()
                .is_some();
            drisko_cases += 1;
            if via_aut != direct {
                mismatches.push(format!("drisko {} ({f},{g},{c},{d})", nl.name));
            }
        }
    }
    let drisko_time = start.elapsed();
    let bs_start = Instant::now();
    let mut bs_cases = 0usize;
    for nl in enumerated().iter().filter(|l| l.table.order() <= 5) {
        let l = &nl.table;
        for (a, b, c, d) in tuples(l.order()) {
            let identity_map = principal_isotope(l, PrincipalPair::new(a, b)) == principal_isotope(l, PrincipalPair::new(c, d));
            bs_cases += 1;
            if bryant_schneider_identity_test(l, a, b, c, d) != identity_map {
                mismatches.push(format!("bs {} ({a},{b},{c},{d})", nl.name));
            }
        }
    }
    let bs_time = bs_start.elapsed();
    let ok = mismatches.is_empty() && bs_time < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "{drisko_cases} drisko cases in {drisko_time:?}, {bs_cases} identity-test cases in {bs_time:?}, mismatches {:?}",
            &mismatches[..mismatches.len().min(5)]
        ),
    )
}

fn tuples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n * n * n * n).map(move |i| (i / (n * n * n), i / (n * n) % n, i / n % n, i % n))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let pool: Vec<NamedLoop> = builtins()
        .into_iter()
        .chain(enumerated().iter().filter(|l| (2..=5).contains(&l.table.order())).cloned())
        .collect();
    let mut verified = 0usize;
    let mut attempts = 0usize;
    let mut failures = Vec::new();
    while verified < 1000 && attempts < 100_000 {
        attempts += 1;
        let nl = &pool[rng.gen_range(0..pool.len())];
        let l = &nl.table;
        let n = l.order();
        let mut pick = || rng.gen_range(0..n);
        let (fg, cd) = (PrincipalPair::new(pick(), pick()), PrincipalPair::new(pick(), pick()));
        let Some(theta) = find_isomorphism(&principal_isotope(l, fg), &principal_isotope(l, cd)).unwrap() else {
            continue;
        };
        verified += 1;
        match autotopism_from_isomorphism(l, fg, cd, &theta) {
            Ok(t) if is_autotopism(l, &t) => {}
            _ => failures.push(format!("{} {fg:?} {cd:?}", nl.name)),
        }
    }
    outcome(
        verified == 1000 && failures.is_empty(),
        format!("{verified} isomorphisms sampled in {attempts} draws, failures {failures:?}"),
    )
}

fn criterion_8() -> Outcome {
    let c = conv();
    let mut problems = Vec::new();
    let mut subjects: Vec<NamedLoop> = builtins().into_iter().filter(|b| b.table.order() <= 5).collect();
    subjects.extend(
        enumerated()
            .iter()
            .filter(|l| l.table.order() <= 5 && subjects_exclude(&l.table))
            .cloned(),
    );
    subjects.push(builtin("M(S3,2)").unwrap());
    for nl in &subjects {
        let cert = theorem_k(&nl.table, ComplexName::K0, &bounds(), &c, JOBS).unwrap();
        if !cert.pass {
            problems.push(format!("K0 disagreement on {}", nl.name));
        }
    }
    let klein = builtin("Z2xZ2").unwrap().table;
    for p in ParamTriple::all(4) {
        let k = build_k10(p);
        let shape = k.vertices.len() == 5 && k.simplexes.len() == 16 && k.dimension() == 3;
        let ctx = IsotopeContext { base: &klein, params: p, conv: &c };
        if !shape || !validate_complex(&k, ValidationMode::Isotopes, Some(ctx)).unwrap().pass {
            problems.push(format!("K10 on Z2xZ2 at {:?}", p.as_array()));
        }
    }
    for nl in universal_corpus() {
        let l = &nl.table;
        for i in 0..4 {
            for j in (0..4).filter(|&j| j != i) {
                let f = f_ij(i, j);
                let bad = ParamTriple::all(l.order()).find(|&p| {
                    let (ki, kj) = (build_k(i, p).unwrap(), build_k(j, p).unwrap());
                    let ctx = IsotopeContext { base: l, params: p, conv: &c };
                    let valid = validate_complex(&kj, ValidationMode::Isotopes, Some(ctx)).unwrap().pass;
                    !(valid && simplicial_map_check(&f, &ki, &kj).unwrap())
                });
                if let Some(p) = bad {
                    problems.push(format!("f{i}{j} on {} at {:?}", nl.name, p.as_array()));
                }
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!("{} loops for K0, problems {:?}", subjects.len(), &problems[..problems.len().min(5)]),
    )
}

fn subjects_exclude(l: &Loop) -> bool {
    builtins().iter().all(|b| &b.table != l)
}

fn criterion_9() -> Outcome {
    let c = conv();
    let mut problems = Vec::new();
    let mut graphs = 0usize;
    for nl in universal_corpus() {
        let l = &nl.table;
        let mut bad_at = None;
        let mut bad_count = 0usize;
        for p in ParamTriple::all(l.order()) {
            let g = build_pyramid(l, p, &bounds(), &c).unwrap();
            graphs += 1;
            let ok = g.apex_lengths() == [2, 2, 2, 2]
                && g.base_lengths() == [6, 12, 6, 12]
                && g.edges.iter().all(|e| e.verified)
                && verify_rectangle(&g).pass;
            if !ok {
                bad_count += 1;
                bad_at.get_or_insert(p.as_array());
            }
        }
        if let Some(p) = bad_at {
            problems.push(format!("{} fails at {bad_count} p, first {p:?}", nl.name));
        }
    }
    outcome(problems.is_empty(), format!("{graphs} pyramids, problems {problems:?}"))
}

/// All `n!` permutations of `0..n`.
fn all_perms(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(Perm::from_images(prefix.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Tries every triple of permutations against the table directly.
fn brute_force_autotopisms(l: &Loop) -> BTreeSet<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n = l.order();
    let perms = all_perms(n);
    let mut out = BTreeSet::new();
    for a in &perms {
        for b in &perms {
            for c in &perms {
                let ok = (0..n).all(|x| (0..n).all(|y| c.apply(l.mul(x, y)) == l.mul(a.apply(x), b.apply(y))));
                if ok {
                    out.insert((a.images().to_vec(), b.images().to_vec(), c.images().to_vec()));
                }
            }
        }
    }
    out
}

fn criterion_10() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, expected) in [("Z2", 4), ("Z3", 18), ("Z2xZ2", 96)] {
        let l = builtin(name).unwrap().table;
        let found: BTreeSet<_> = autotopisms(&l, &bounds())
            .unwrap()
            .into_iter()
            .map(|t: IsoTriple| (t.a.images().to_vec(), t.b.images().to_vec(), t.c.images().to_vec()))
            .collect();
        let oracle = brute_force_autotopisms(&l);
        ok &= found.len() == expected && found == oracle;
        lines.push(format!("{name} {} (oracle {})", found.len(), oracle.len()));
    }
    outcome(ok, lines.join(", "))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (1, "enumeration counts", criterion_1),
        (2, "Osborn baseline", criterion_2),
        (3, "diagram theorems", criterion_3),
        (4, "identity-map isomorphisms", criterion_4),
        (5, "gamma composition", criterion_5),
        (6, "Drisko and identity-test cross-validation", criterion_6),
        (7, "autotopisms from isomorphisms", criterion_7),
        (8, "simplicial suite", criterion_8),
        (9, "pyramid", criterion_9),
        (10, "autotopism counts", criterion_10),
    ];
    let mut red = BTreeSet::new();
    for (n, title, check) in criteria {
        let start = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        // Raw stderr writes are not captured, so the lines show in every run.
        let _ = writeln!(
            std::io::stderr(),
            "criterion {n}: {verdict} {title} [{:.1?}] {}",
            start.elapsed(),
            o.detail
        );
        if !o.pass {
            red.insert(n);
        }
    }
    let expected: BTreeSet<usize> = EXPECTED_RED.into_iter().collect();
    assert_eq!(red, expected, "failing criteria differ from the documented unattainable set");
}
