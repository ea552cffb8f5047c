//! Partitions, Young tableaux and permutations.
//!
//! Cells are 1-based `(row, column)` pairs. The content of a cell is stored as
//! the integer diagonal exponent `column - row`; the `(r,s)`-content it stands
//! for is `(s/r)^(column - row)`.
//!
//! Enumeration orders are fixed so that everything downstream prints
//! deterministically:
//!
//! - [`partitions`] lists partitions in reverse-lexicographic order,
//!   `(3), (2,1), (1,1,1)`.
//! - [`Partition::standard_tableaux`] lists tableaux in lexicographic order of
//!   their row sequence (the row holding 1, the row holding 2, ...), so the
//!   row-reading tableau comes first and the column-reading tableau last.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Diagonal exponent `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (1-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row) >= cell.col
    }

    /// Hook length `λ_i + λ'_j - i - j + 1` of a cell inside the diagram.
    pub fn hook(&self, cell: Cell) -> usize {
        let conj = self.conjugate();
        hook_with(self, &conj, cell)
    }

    pub fn hooks(&self) -> BTreeMap<Cell, usize> {
        let conj = self.conjugate();
        self.cells().map(|c| (c, hook_with(self, &conj, c))).collect()
    }

    /// `b(λ) = Σ_i C(λ'_i, 2)`.
    pub fn b_stat(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| c * c.saturating_sub(1) / 2)
            .sum()
    }

    /// Cells whose union with the diagram is again a diagram, ordered by row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// Cells whose removal leaves a diagram, ordered by row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Number of standard tableaux, from the hook length formula.
    pub fn num_standard(&self) -> u128 {
        let num: u128 = (1..=self.weight() as u128).product();
        let den: u128 = self.hooks().values().map(|&h| h as u128).product();
        num / den
    }

    /// All standard tableaux of this shape, in lexicographic order of row
    /// sequences.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let m = self.weight();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        fill_standard(self, 1, m, &mut rows, &mut out);
        out
    }

    /// `∏_{(i,j)} (n + j - i) / h_(i,j)`: the dimension of the irreducible
    /// polynomial `gl_n`-module of highest weight `λ`.
    pub fn hook_content_dim(&self, n: usize) -> u128 {
        if self.len() > n {
            return 0;
        }
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (cell, h) in self.hooks() {
            num *= (n as i64 + cell.content()) as u128;
            den *= h as u128;
        }
        num / den
    }
}

fn hook_with(lambda: &Partition, conj: &Partition, cell: Cell) -> usize {
    lambda.part(cell.row) + conj.part(cell.col) + 1 - cell.row - cell.col
}

fn fill_standard(
    shape: &Partition,
    next: usize,
    m: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > m {
        out.push(StandardTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let fits = len < shape.parts[i] && (i == 0 || rows[i - 1].len() > len);
        if fits {
            rows[i].push(next);
            fill_standard(shape, next + 1, m, rows, out);
            rows[i].pop();
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `"2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `m` in reverse-lexicographic order.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// All vectors of `parts` nonnegative integers summing to `m`, in
/// lexicographically decreasing order.
pub fn compositions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if m == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(m, parts, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
///
/// Built by adding the letters `1, 2, ...` as successive horizontal strips.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u128 {
    if mu.iter().sum::<usize>() != lambda.weight() {
        return 0;
    }
    fn strips(lambda: &Partition, nu: &[usize], mu: &[usize]) -> u128 {
        let Some((&k, rest)) = mu.split_first() else {
            return u128::from(nu.iter().zip(lambda.parts()).all(|(a, b)| a == b));
        };
        let mut total = 0;
        let mut next = nu.to_vec();
        add_strip(lambda, nu, &mut next, 0, k, rest, &mut total);
        total
    }
    // distribute `k` boxes over the rows of `nu` as a horizontal strip inside `lambda`
    fn add_strip(
        lambda: &Partition,
        nu: &[usize],
        next: &mut Vec<usize>,
        row: usize,
        k: usize,
        rest: &[usize],
        total: &mut u128,
    ) {
        if row == nu.len() {
            if k == 0 {
                *total += strips(lambda, next, rest);
            }
            return;
        }
        let above = if row == 0 { usize::MAX } else { nu[row - 1] };
        let cap = lambda.part(row + 1).min(above) - nu[row];
        for add in 0..=cap.min(k) {
            next[row] = nu[row] + add;
            add_strip(lambda, nu, next, row + 1, k - add, rest, total);
        }
        next[row] = nu[row];
    }
    let start = vec![0; lambda.len()];
    strips(lambda, &start, mu)
}

/// A standard filling of a Young diagram by `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates that `rows` is a standard filling of a partition shape.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let m = shape.weight();
        let mut seen = vec![false; m + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={m}"
                )));
            }
            seen[x] = true;
        }
        for row in &rows {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau("rows must increase".into()));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("columns must increase".into()));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.weight()
    }

    /// Cell holding entry `k`.
    pub fn cell_of(&self, k: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&x| x == k)
                .map(|j| Cell::new(i + 1, j + 1))
        })
    }

    /// `c_k = col - row` of the cell holding `k`, for `k = 1..=m`.
    pub fn content_exponents(&self) -> Vec<i64> {
        let mut out = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out[x - 1] = j as i64 - i as i64;
            }
        }
        out
    }

    /// The tableau with its largest entry removed, and the removed cell.
    /// `None` for the empty tableau.
    pub fn remove_largest(&self) -> Option<(StandardTableau, Cell)> {
        let m = self.size();
        let cell = self.cell_of(m)?;
        let mut rows = self.rows.clone();
        rows[cell.row - 1].pop();
        if rows[cell.row - 1].is_empty() {
            rows.pop();
        }
        let shape = Partition {
            parts: rows.iter().map(Vec::len).collect(),
        };
        Some((StandardTableau { shape, rows }, cell))
    }

    pub fn check_shape(&self, lambda: &Partition) -> Result<()> {
        if &self.shape != lambda {
            return Err(Error::ShapeMismatch {
                tableau: self.to_string(),
                partition: lambda.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return StandardTableau::from_rows(vec![]);
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim().parse::<usize>().map_err(|_| {
                            Error::InvalidTableau(format!("bad entry {x:?} in {s:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::from_rows(rows)
    }
}

/// A permutation of `1..=m` in one-line notation.
///
/// Products follow function composition, so right multiplication by the
/// adjacent transposition `s_i` swaps the entries at positions `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            one_line: (1..=m as u8).collect(),
        }
    }

    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::Parse(format!("{values:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            one_line: values.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Product `s_{i_1} s_{i_2} ⋯ s_{i_k}` in `S_m`.
    pub fn from_word(m: usize, word: &[usize]) -> Self {
        let mut p = Permutation::identity(m);
        for &i in word {
            p.swap_right(i);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.one_line.len()
    }

    /// Value at position `i` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| v as usize).collect()
    }

    /// Right multiplication by `s_i` in place.
    pub fn swap_right(&mut self, i: usize) {
        self.one_line.swap(i - 1, i);
    }

    pub fn times_generator(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.swap_right(i);
        p
    }

    /// Whether `ℓ(σ s_i) > ℓ(σ)`.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.one_line[i - 1] < self.one_line[i]
    }

    /// Coxeter length, i.e. the inversion count.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// A reduced word, found by peeling off the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..p.arity()).find(|&i| !p.ascends_at(i)) {
            rev.push(i);
            p.swap_right(i);
        }
        rev.reverse();
        rev
    }

    /// Same permutation viewed inside `S_m`, fixing `arity()+1..=m`.
    pub fn embed(&self, m: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.extend(self.arity() as u8 + 1..=m as u8);
        Permutation { one_line }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.one_line {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line digits, e.g. `"132"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(values)
    }
}

/// The word `1, (2,1), (3,2,1), …, (k-1,…,1)` of the longest element of `S_k`.
pub fn longest_word(k: usize) -> Vec<usize> {
    (1..k).flat_map(|j| (1..=j).rev()).collect()
}

/// The longest element `w_k` of `S_k`.
pub fn longest_element(k: usize) -> Permutation {
    Permutation::from_word(k, &longest_word(k))
}
