use std::sync::OnceLock;

use proptest::prelude::*;

use osborn_core::classify::{classify, Flag};
use osborn_core::enumerate::{builtins, chein_double, enumerate_loops, Filter};
use osborn_core::geometry::{word_length, Letter, TranslationWord, WordTriple};
use osborn_core::isotopy::{autotopisms, find_isomorphism, is_autotopism, is_isomorphism, principal_isotope};
use osborn_core::osborn::{os3_failure, verify_diagram, Diagram, ParamTriple};
use osborn_core::simplicial::{build_k, build_k10, validate_complex, IsotopeContext, ValidationMode};
use osborn_core::{Certificate, Conventions, Loop, Perm, PrincipalPair, Side};

/// Built-ins up to order 8 and every enumerated loop of order 2 to 5.
fn pool() -> &'static Vec<Loop> {
    static CELL: OnceLock<Vec<Loop>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<Loop> = builtins().into_iter().map(|b| b.table).filter(|l| l.order() <= 8).collect();
        for n in 2..=5 {
            enumerate_loops(n, &Default::default(), |l| out.push(l.clone())).unwrap();
        }
        out
    })
}

fn groups() -> Vec<&'static Loop> {
    pool().iter().filter(|l| l.is_associative()).collect()
}

fn any_loop() -> impl Strategy<Value = &'static Loop> {
    (0..pool().len()).prop_map(|i| &pool()[i])
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn loop_and_params() -> impl Strategy<Value = (&'static Loop, ParamTriple)> {
    any_loop().prop_flat_map(|l| {
        let n = l.order();
        (Just(l), 0..n, 0..n, 0..n).prop_map(|(l, x, u, v)| (l, ParamTriple::new(x, u, v)))
    })
}

fn letter(n: usize) -> impl Strategy<Value = Letter> {
    (0..n, 0..4u8).prop_map(|(a, k)| match k {
        0 => Letter::right(a),
        1 => Letter::left(a),
        2 => Letter::right_inv(a),
        _ => Letter::left_inv(a),
    })
}

fn word(n: usize) -> impl Strategy<Value = TranslationWord> {
    prop::collection::vec(letter(n), 0..6).prop_map(TranslationWord::new)
}

/// The copy of `l` with every element renamed by `theta`.
fn relabel(l: &Loop, theta: &Perm) -> Loop {
    let n = l.order();
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            table[theta.apply(x) * n + theta.apply(y)] = theta.apply(l.mul(x, y));
        }
    }
    Loop::from_table(n, table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_composition_is_a_group((p, q, r) in (1usize..7).prop_flat_map(|n| (perm(n), perm(n), perm(n)))) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert!(p.inverse().then(&p).is_identity());
        prop_assert_eq!(p.to_string().parse::<Perm>().unwrap(), p.clone());
        for x in 0..p.len() {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn tables_round_trip_through_text(l in any_loop()) {
        prop_assert_eq!(&Loop::parse(&l.render()).unwrap(), l);
    }

    #[test]
    fn divisions_invert_multiplication(l in any_loop(), a in 0usize..16, b in 0usize..16) {
        let (a, b) = (a % l.order(), b % l.order());
        prop_assert_eq!(l.mul(a, l.ldiv(a, b)), b);
        prop_assert_eq!(l.mul(l.rdiv(b, a), a), b);
        prop_assert!(l.translation(Side::Right, a).then(&l.inverse_translation(Side::Right, a)).is_identity());
    }

    #[test]
    fn principal_isotopes_are_loops(l in any_loop(), f in 0usize..16, g in 0usize..16) {
        let (f, g) = (f % l.order(), g % l.order());
        let iso = principal_isotope(l, PrincipalPair::new(f, g));
        prop_assert_eq!(iso.identity(), l.mul(f, g));
        let rebuilt = Loop::from_table(iso.order(), iso.table().to_vec());
        prop_assert!(rebuilt.is_ok());
    }

    #[test]
    fn word_evaluation_is_a_homomorphism((l, w1, w2) in any_loop().prop_flat_map(|l| (Just(l), word(l.order()), word(l.order())))) {
        let joined = w1.then(&w2);
        prop_assert_eq!(joined.eval(l), w1.eval(l).then(&w2.eval(l)));
        prop_assert_eq!(word_length(&joined), word_length(&w1) + word_length(&w2));
        let t = WordTriple::new(w1.clone(), w2.clone(), joined.clone());
        prop_assert_eq!(word_length(&t), 2 * word_length(&joined));
    }

    #[test]
    fn isomorphic_copies_are_found((l, theta) in any_loop().prop_flat_map(|l| (Just(l), perm(l.order())))) {
        let copy = relabel(l, &theta);
        let found = find_isomorphism(l, &copy).unwrap();
        prop_assert!(found.is_some());
        prop_assert!(is_isomorphism(&found.unwrap(), l, &copy));
    }

    #[test]
    fn chein_doubles_of_groups_are_moufang(i in 0usize..64) {
        let gs = groups();
        let g = gs[i % gs.len()];
        let m = chein_double(g).unwrap();
        prop_assert_eq!(m.order(), 2 * g.order());
        prop_assert!(classify(&m).contains(Flag::Moufang));
        prop_assert_eq!(m.is_associative(), g.is_commutative());
    }

    #[test]
    fn groups_satisfy_os3(i in 0usize..64) {
        let gs = groups();
        prop_assert_eq!(os3_failure(gs[i % gs.len()]), None);
    }

    #[test]
    fn builders_produce_valid_complexes((l, p) in loop_and_params(), i in 0usize..4) {
        let conv = Conventions::default();
        for k in [build_k(i, p).unwrap(), build_k10(p)] {
            prop_assert!(validate_complex(&k, ValidationMode::Abstract, None).unwrap().pass);
            let json = k.to_json().to_string();
            prop_assert_eq!(osborn_core::simplicial::SimplicialComplex::from_json(&json).unwrap(), k.clone());
        }
        if l.is_associative() {
            let ctx = IsotopeContext { base: l, params: p, conv: &conv };
            prop_assert!(validate_complex(&build_k(i, p).unwrap(), ValidationMode::Isotopes, Some(ctx)).unwrap().pass);
        }
    }

    #[test]
    fn certificates_round_trip_through_json((l, p) in loop_and_params(), d in 0usize..6) {
        let cert = verify_diagram(l, Diagram::ALL[d], p, &Conventions::default());
        let back: Certificate = serde_json::from_str(&cert.to_json()).unwrap();
        prop_assert_eq!(back, cert);
    }

    #[test]
    fn filters_round_trip_through_display(ops in prop::collection::vec((0u8..3, 0usize..5), 1..5)) {
        let atoms = ["group", "moufang", "osborn", "universal_osborn", "order<=4"];
        let mut expr = atoms[ops[0].1].to_string();
        for &(op, a) in &ops[1..] {
            expr = match op {
                0 => format!("({expr}) & {}", atoms[a]),
                1 => format!("({expr}) | {}", atoms[a]),
                _ => format!("!({expr})"),
            };
        }
        let f: Filter = expr.parse().unwrap();
        prop_assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn autotopisms_form_a_group(i in 0usize..256, j in 0usize..256) {
        let small: Vec<&Loop> = pool().iter().filter(|l| l.order() <= 4).collect();
        let l = small[i % small.len()];
        let all = autotopisms(l, &Default::default()).unwrap();
        let (s, t) = (&all[j % all.len()], &all[(i * 7 + j) % all.len()]);
        prop_assert!(is_autotopism(l, &s.then(t)));
        prop_assert!(is_autotopism(l, &s.inverse()));
        prop_assert!(all.contains(&s.then(t)));
    }
}
