//! The named test corpus: fixed examples followed by enumerated loops.

use super::{chein_double, enumerate_loops, permutation_group, Filter};
use crate::config::Bounds;
use crate::error::Result;
use crate::loops::Loop;
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedLoop {
    pub name: String,
    pub table: Loop,
}

impl NamedLoop {
    pub fn new(name: impl Into<String>, table: Loop) -> Self {
        NamedLoop {
            name: name.into(),
            table,
        }
    }
}

fn cyclic(n: usize) -> Loop {
    Loop::from_table(n, (0..n * n).map(|i| (i / n + i % n) % n).collect()).expect("cyclic table")
}

fn elementary_abelian(k: u32) -> Loop {
    let n = 1usize << k;
    Loop::from_table(n, (0..n * n).map(|i| (i / n) ^ (i % n)).collect()).expect("xor table")
}

fn symmetric3() -> Loop {
    let mut perms: Vec<Perm> = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    perms.push(Perm::from_images(vec![a, b, c]).expect("permutation"));
                }
            }
        }
    }
    permutation_group(&perms).expect("S3 is closed")
}

/// A non-Osborn loop of order 5, pinned so its counterexamples are stable.
pub const N5_ROWS: [[usize; 5]; 5] = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
];

fn n5() -> Loop {
    Loop::from_rows(N5_ROWS.iter().map(|r| r.to_vec()).collect()).expect("N5 is a loop")
}

/// `Z1..Z6, Z2xZ2, Z2^3, S3, N5, M(S3,2)` in that order.
pub fn builtins() -> Vec<NamedLoop> {
    let mut out: Vec<NamedLoop> = (1..=6).map(|n| NamedLoop::new(format!("Z{n}"), cyclic(n))).collect();
    out.push(NamedLoop::new("Z2xZ2", elementary_abelian(2)));
    out.push(NamedLoop::new("Z2^3", elementary_abelian(3)));
    let s3 = symmetric3();
    let m = chein_double(&s3).expect("S3 is a group");
    out.push(NamedLoop::new("S3", s3));
    out.push(NamedLoop::new("N5", n5()));
    out.push(NamedLoop::new("M(S3,2)", m));
    out
}

/// Looks a built-in up by name, ignoring case and accepting `x` or `×`.
pub fn builtin(name: &str) -> Option<NamedLoop> {
    let key = |s: &str| s.to_ascii_lowercase().replace('×', "x").replace(' ', "");
    let wanted = key(name);
    builtins().into_iter().find(|b| key(&b.name) == wanted)
}

/// The groups among the built-ins and the enumerated loops up to `max_order`.
pub fn named_groups(max_order: usize, bounds: &Bounds) -> Result<Vec<NamedLoop>> {
    corpus(&"group".parse()?, max_order, bounds)
}

/// Built-ins of order at most `max_order` that match, then every enumerated
/// loop of order at most `min(max_order, bounds.enumerate)` that matches and
/// whose table differs from all built-ins. Enumerated loops are named
/// `o<n>_<index>` by their position in the enumeration.
pub fn corpus(filter: &Filter, max_order: usize, bounds: &Bounds) -> Result<Vec<NamedLoop>> {
    let fixed = builtins();
    let mut out = Vec::new();
    for b in &fixed {
        if b.table.order() <= max_order && filter.matches(&b.table, bounds)? {
            out.push(b.clone());
        }
    }
    for n in 1..=max_order.min(bounds.enumerate) {
        let mut index = 0;
        let mut failure = None;
        enumerate_loops(n, bounds, |l| {
            let i = index;
            index += 1;
            if failure.is_some() || fixed.iter().any(|b| b.table.table() == l.table()) {
                return;
            }
            match filter.matches(l, bounds) {
                Ok(true) => out.push(NamedLoop::new(format!("o{n}_{i}"), l.clone())),
                Ok(false) => {}
                Err(e) => failure = Some(e),
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::osborn::os3_failure;

    fn names(v: &[NamedLoop]) -> Vec<&str> {
        v.iter().map(|l| l.name.as_str()).collect()
    }

    #[test]
    fn builtin_list() {
        let b = builtins();
        assert_eq!(
            names(&b),
            vec!["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z2^3", "S3", "N5", "M(S3,2)"]
        );
        let rows: Vec<String> = builtin("n5")
            .unwrap()
            .table
            .rows()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(rows, vec!["01234", "10342", "23401", "34120", "42013"]);
        assert!(builtin("z2×z2").is_some());
        assert!(builtin("S3").unwrap().table.is_associative());
        assert!(!builtin("S3").unwrap().table.is_commutative());
    }

    #[test]
    fn boolean_groups_up_to_four() {
        let c = corpus(&"boolean_group".parse().unwrap(), 4, &Bounds::default()).unwrap();
        assert_eq!(names(&c), vec!["Z1", "Z2", "Z2xZ2"]);
    }

    #[test]
    fn n5_not_osborn() {
        assert!(os3_failure(&builtin("N5").unwrap().table).is_some());
    }

    #[test]
    fn enumerated_entries_are_named_by_index() {
        let c = corpus(&"!group".parse().unwrap(), 5, &Bounds::default()).unwrap();
        assert!(c.iter().any(|l| l.name == "N5"));
        assert!(c.iter().any(|l| l.name.starts_with("o5_")));
        assert!(c.iter().all(|l| !l.table.is_associative()));
    }
}
