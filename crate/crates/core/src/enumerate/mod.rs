//! Loops for testing: every reduced Latin square of a small order, the Chein
//! double of a group, and a named corpus.

pub mod corpus;
pub mod filter;

pub use corpus::{builtin, builtins, corpus, named_groups, NamedLoop};
pub use filter::Filter;

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::loops::Loop;
use crate::parallel::map_ordered;
use crate::perm::Perm;

/// Row-major backtracking over the cells not fixed by the first row and
/// column. `used_row[r]` and `used_col[c]` are bitmasks of placed symbols.
struct Search {
    n: usize,
    table: Vec<usize>,
    used_row: Vec<u32>,
    used_col: Vec<u32>,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut table = vec![0; n * n];
        let mut used_row = vec![0u32; n];
        let mut used_col = vec![0u32; n];
        for i in 0..n {
            table[i] = i;
            table[i * n] = i;
            used_row[i] |= 1 << i;
            used_col[i] |= 1 << i;
        }
        Search {
            n,
            table,
            used_row,
            used_col,
        }
    }

    /// Index of the `k`-th free cell.
    fn cell(&self, k: usize) -> (usize, usize) {
        let m = self.n - 1;
        (1 + k / m, 1 + k % m)
    }

    fn free_cells(&self) -> usize {
        (self.n - 1) * (self.n - 1)
    }

    fn place(&mut self, k: usize, s: usize) {
        let (r, c) = self.cell(k);
        self.table[r * self.n + c] = s;
        self.used_row[r] |= 1 << s;
        self.used_col[c] |= 1 << s;
    }

    fn unplace(&mut self, k: usize, s: usize) {
        let (r, c) = self.cell(k);
        self.used_row[r] &= !(1 << s);
        self.used_col[c] &= !(1 << s);
    }

    fn candidates(&self, k: usize) -> u32 {
        let (r, c) = self.cell(k);
        let all = (1u32 << self.n) - 1;
        all & !(self.used_row[r] | self.used_col[c])
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == self.free_cells() {
            visit(&self.table);
            return;
        }
        let mut options = self.candidates(k);
        while options != 0 {
            let s = options.trailing_zeros() as usize;
            options &= options - 1;
            self.place(k, s);
            self.run(k + 1, visit);
            self.unplace(k, s);
        }
    }
}

/// Calls `visit` on every loop of order `n` with identity `0` whose first
/// row and column are `0, 1, ..., n-1`, in lexicographic order of the
/// tables. Returns how many were visited.
pub fn enumerate_loops(n: usize, bounds: &Bounds, mut visit: impl FnMut(&Loop)) -> Result<usize> {
    enumerate_tables(n, bounds, |table| visit(&Loop::from_table_unchecked(n, 0, table.to_vec())))
}

/// As `enumerate_loops`, handing out the raw row-major tables.
pub fn enumerate_tables(n: usize, bounds: &Bounds, mut visit: impl FnMut(&[usize])) -> Result<usize> {
    check_order(n, bounds)?;
    let mut count = 0;
    Search::new(n).run(0, &mut |t| {
        count += 1;
        visit(t);
    });
    Ok(count)
}

/// The number of loops `enumerate_loops` would visit, splitting the search
/// on the choices for the first free cell.
pub fn count_loops(n: usize, bounds: &Bounds, jobs: usize) -> Result<usize> {
    check_order(n, bounds)?;
    if n < 3 {
        return enumerate_tables(n, bounds, |_| {});
    }
    let root = Search::new(n);
    let mut firsts = Vec::new();
    let mut options = root.candidates(0);
    while options != 0 {
        firsts.push(options.trailing_zeros() as usize);
        options &= options - 1;
    }
    let counts = map_ordered(&firsts, jobs, |&s| {
        let mut search = Search::new(n);
        search.place(0, s);
        let mut count = 0usize;
        search.run(1, &mut |_| count += 1);
        count
    });
    Ok(counts.into_iter().sum())
}

fn check_order(n: usize, bounds: &Bounds) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange { element: 0, order: 0 });
    }
    Bounds::check("loop enumeration", n, bounds.enumerate.min(31))
}

/// `G × {0, 1}` with `(g,0)(h,0) = (gh,0)`, `(g,0)(h,1) = (hg,1)`,
/// `(g,1)(h,0) = (gh⁻¹,1)` and `(g,1)(h,1) = (h⁻¹g,0)`. The pair `(g, i)` is
/// element `g + i·|G|`.
pub fn chein_double(g: &Loop) -> Result<Loop> {
    if !g.is_associative() {
        return Err(Error::NotAGroup);
    }
    let n = g.order();
    let inv = |x: usize| g.ldiv(x, g.identity());
    let m = 2 * n;
    let mut table = vec![0; m * m];
    for a in 0..m {
        for b in 0..m {
            let (x, i) = (a % n, a / n);
            let (y, j) = (b % n, b / n);
            let value = match (i, j) {
                (0, 0) => g.mul(x, y),
                (0, 1) => n + g.mul(y, x),
                (1, 0) => n + g.mul(x, inv(y)),
                _ => g.mul(inv(y), x),
            };
            table[a * m + b] = value;
        }
    }
    Loop::from_table(m, table)
}

/// The group of the given permutations under composition, with elements
/// numbered in the order given. The set must be closed.
pub fn permutation_group(perms: &[Perm]) -> Result<Loop> {
    let n = perms.len();
    let index = |p: &Perm| perms.iter().position(|q| q == p);
    let mut table = Vec::with_capacity(n * n);
    for a in perms {
        for b in perms {
            table.push(index(&a.then(b)).ok_or(Error::NotAGroup)?);
        }
    }
    Loop::from_table(n, table)
}
