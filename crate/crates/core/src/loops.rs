//! Finite loops given by their Cayley tables.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseKind {
    /// `x^λ = e/x`, so `x^λ·x = e`.
    Lambda,
    /// `x^ρ = x\e`, so `x·x^ρ = e`.
    Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nucleus {
    Left,
    Middle,
    Right,
}

/// A loop on `{0, .., n-1}`. Immutable once validated; the division tables
/// are filled in at construction so every operation is a table lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Loop {
    n: usize,
    identity: usize,
    table: Vec<usize>,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
}

impl Loop {
    /// Validates a table given as rows and detects the identity element.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed {
                line: 1,
                message: "order must be at least 1".into(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed {
                    line: r + 2,
                    message: format!("row {r} has {} entries, expected {n}", row.len()),
                });
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Malformed {
                    line: r + 2,
                    message: format!("entry {v} out of range for order {n}"),
                });
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        Self::from_table(n, table)
    }

    /// `table` is row-major, `table[x * n + y] = x·y`.
    pub fn from_table(n: usize, table: Vec<usize>) -> Result<Self> {
        assert_eq!(table.len(), n * n);
        check_latin(n, &table)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(Error::NoIdentity)?;
        Ok(Self::assemble(n, identity, table))
    }

    /// Skips the Latin check. The caller guarantees a Latin square with
    /// identity `identity`.
    pub(crate) fn from_table_unchecked(n: usize, identity: usize, table: Vec<usize>) -> Self {
        debug_assert!(check_latin(n, &table).is_ok());
        Self::assemble(n, identity, table)
    }

    fn assemble(n: usize, identity: usize, table: Vec<usize>) -> Self {
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = table[x * n + y];
                // x·y = z  =>  x\z = y and z/y = x
                ldiv[x * n + z] = y;
                rdiv[z * n + y] = x;
            }
        }
        Loop {
            n,
            identity,
            table,
            ldiv,
            rdiv,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// `a\b`: the unique `z` with `a·z = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.n + b]
    }

    /// `a/b`: the unique `z` with `z·b = a`.
    #[inline]
    pub fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv[a * self.n + b]
    }

    pub fn divide(&self, side: Side, a: usize, b: usize) -> usize {
        match side {
            Side::Left => self.ldiv(a, b),
            Side::Right => self.rdiv(a, b),
        }
    }

    /// `R_a: x ↦ x·a` or `L_a: y ↦ a·y`.
    pub fn translation(&self, side: Side, a: usize) -> Perm {
        let image = match side {
            Side::Right => self.elements().map(|x| self.mul(x, a)).collect(),
            Side::Left => self.table[a * self.n..(a + 1) * self.n].to_vec(),
        };
        Perm::from_images_unchecked(image)
    }

    /// Inverse translation: `x ↦ x/a` (right) or `y ↦ a\y` (left).
    pub fn inverse_translation(&self, side: Side, a: usize) -> Perm {
        let image = match side {
            Side::Right => self.elements().map(|x| self.rdiv(x, a)).collect(),
            Side::Left => self.elements().map(|y| self.ldiv(a, y)).collect(),
        };
        Perm::from_images_unchecked(image)
    }

    pub fn inverse_element(&self, kind: InverseKind, x: usize) -> usize {
        match kind {
            InverseKind::Lambda => self.rdiv(self.identity, x),
            InverseKind::Rho => self.ldiv(x, self.identity),
        }
    }

    pub fn nucleus(&self, which: Nucleus) -> BTreeSet<usize> {
        self.elements()
            .filter(|&a| match which {
                Nucleus::Left => self.is_in_left_nucleus(a),
                Nucleus::Middle => self.is_in_middle_nucleus(a),
                Nucleus::Right => self.is_in_right_nucleus(a),
            })
            .collect()
    }

    pub fn is_in_left_nucleus(&self, a: usize) -> bool {
        self.pairs()
            .all(|(x, y)| self.mul(self.mul(a, x), y) == self.mul(a, self.mul(x, y)))
    }

    pub fn is_in_middle_nucleus(&self, a: usize) -> bool {
        self.pairs()
            .all(|(x, y)| self.mul(self.mul(x, a), y) == self.mul(x, self.mul(a, y)))
    }

    pub fn is_in_right_nucleus(&self, a: usize) -> bool {
        self.pairs()
            .all(|(x, y)| self.mul(self.mul(x, y), a) == self.mul(x, self.mul(y, a)))
    }

    pub fn is_associative(&self) -> bool {
        self.elements().all(|a| self.is_in_middle_nucleus(a))
    }

    pub fn is_commutative(&self) -> bool {
        self.pairs().all(|(x, y)| self.mul(x, y) == self.mul(y, x))
    }

    pub(crate) fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    pub fn check_element(&self, element: usize) -> Result<usize> {
        if element < self.n {
            Ok(element)
        } else {
            Err(Error::OutOfRange {
                element,
                order: self.n,
            })
        }
    }

    /// Parses the `.loop` text format: optional `#` comment lines, the order
    /// on the first remaining line, then `n` rows of `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first, header) = lines.next().ok_or(Error::Malformed {
            line: 1,
            message: "empty input".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Malformed {
            line: first,
            message: format!("expected the order, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Malformed {
                line: first,
                message: "order must be at least 1".into(),
            });
        }

        let mut table = Vec::with_capacity(n * n);
        let mut last_line = first;
        for r in 0..n {
            let (lineno, line) = lines.next().ok_or(Error::Malformed {
                line: last_line + 1,
                message: format!("expected {n} rows, found {r}"),
            })?;
            last_line = lineno;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Malformed {
                        line: lineno,
                        message: format!("bad token {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Malformed {
                    line: lineno,
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::Malformed {
                    line: lineno,
                    message: format!("entry {v} out of range for order {n}"),
                });
            }
            table.extend(row);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Malformed {
                line: lineno,
                message: "trailing data after the table".into(),
            });
        }
        Loop::from_table(n, table)
    }

    /// Renders in the `.loop` format; `parse(render())` is the identity.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Loop")
            .field("order", &self.n)
            .field("identity", &self.identity)
            .field("rows", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

fn check_latin(n: usize, table: &[usize]) -> Result<()> {
    for r in 0..n {
        let mut seen = vec![false; n];
        for c in 0..n {
            let v = table[r * n + c];
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotLatin {
                    line: Line::Row,
                    index: r,
                    row: r,
                    col: c,
                });
            }
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for r in 0..n {
            let v = table[r * n + c];
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotLatin {
                    line: Line::Column,
                    index: c,
                    row: r,
                    col: c,
                });
            }
        }
    }
    Ok(())
}
