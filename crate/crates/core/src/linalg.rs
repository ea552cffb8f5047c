//! Sparse exact linear algebra: column-major operators, fraction-free row
//! reduction, spans, ranks and kernels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactring::{format_rational, Rational};

/// Sparse vector keyed by basis index.
pub type SparseVec = BTreeMap<usize, Rational>;

/// `acc += c · v`.
pub fn add_scaled(acc: &mut SparseVec, v: &SparseVec, c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in v {
        let entry = acc.entry(i).or_insert_with(Rational::zero);
        *entry += x * c;
        if entry.is_zero() {
            acc.remove(&i);
        }
    }
}

/// Linear map between coordinate spaces, stored as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinOp {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl LinOp {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinOp {
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinOp::diagonal((0..dim).map(|_| Rational::one()).collect())
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let rows = entries.len();
        let cols = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                let mut col = SparseVec::new();
                if !x.is_zero() {
                    col.insert(i, x);
                }
                col
            })
            .collect();
        LinOp { rows, cols }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions add up.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut op = LinOp::zero(rows, cols);
        for (i, j, x) in entries {
            assert!(i < rows && j < cols, "entry ({i}, {j}) out of range");
            let mut single = SparseVec::new();
            single.insert(i, Rational::one());
            add_scaled(&mut op.cols[j], &single, &x);
        }
        op
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        LinOp { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, x) in v {
            add_scaled(&mut out, &self.cols[j], x);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        assert_eq!(self.cols(), other.rows, "dimension mismatch in composition");
        LinOp {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &LinOp) -> LinOp {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &LinOp) -> LinOp {
        self.add_scaled(other, &-Rational::one())
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &LinOp, c: &Rational) -> LinOp {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        let mut out = self.clone();
        for (acc, col) in out.cols.iter_mut().zip(&other.cols) {
            add_scaled(acc, col, c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LinOp {
        if c.is_zero() {
            return LinOp::zero(self.rows, self.cols());
        }
        LinOp {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(&i, x)| (i, x * c)).collect())
                .collect(),
        }
    }

    /// `self · other - other · self`.
    pub fn commutator(&self, other: &LinOp) -> LinOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// Kronecker product, with `self` acting on the left factor: column
    /// `j_a · other.cols + j_b` holds `self[:, j_a] ⊗ other[:, j_b]`.
    pub fn kron(&self, other: &LinOp) -> LinOp {
        let rows = self.rows * other.rows;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = SparseVec::new();
                for (&i, x) in a {
                    for (&k, y) in b {
                        col.insert(i * other.rows + k, x * y);
                    }
                }
                cols.push(col);
            }
        }
        LinOp { rows, cols }
    }

    /// Nonzero entries as `(row, col, value)`, column by column.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, x)| (i, j, x.clone())))
            .collect()
    }

    /// `[[row, col, "p/q"], …]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.triplets()
                .into_iter()
                .map(|(i, j, x)| serde_json::json!([i, j, format_rational(&x)]))
                .collect(),
        )
    }

    /// Entries flattened into one vector, row-major.
    pub fn flatten(&self) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                out.insert(i * self.cols() + j, x.clone());
            }
        }
        out
    }
}

type IntVec = BTreeMap<usize, BigInt>;

/// Clears denominators and divides out the content, so the leading entry is
/// a positive integer and the entries are coprime.
fn primitive(v: &SparseVec) -> IntVec {
    let lcm = v
        .values()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVec = v
        .iter()
        .map(|(&i, x)| (i, x.numer() * (&lcm / x.denom())))
        .collect();
    normalize(ints)
}

fn normalize(mut v: IntVec) -> IntVec {
    let Some(lead) = v.values().next() else {
        return v;
    };
    let mut g = v.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for x in v.values_mut() {
            *x /= &g;
        }
    }
    v
}

fn to_rational(v: &IntVec) -> SparseVec {
    v.iter()
        .map(|(&i, x)| (i, Rational::from_integer(x.clone())))
        .collect()
}

/// Integer row-echelon form keyed by pivot, built incrementally.
///
/// Elimination is fraction-free: a vector `v` with leading index `p` is
/// replaced by `b_p v - v_p b` for the stored row `b` with pivot `p`, and its
/// content is divided out. The pivot of each row is its first nonzero entry.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, IntVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: IntVec) -> IntVec {
        while let Some((&p, vp)) = v.iter().next() {
            let Some(b) = self.rows.get(&p) else {
                break;
            };
            let (bp, vp) = (b[&p].clone(), vp.clone());
            let mut next = IntVec::new();
            for (&i, x) in &v {
                next.insert(i, x * &bp);
            }
            for (&i, y) in b {
                let e = next.entry(i).or_insert_with(BigInt::zero);
                *e -= y * &vp;
                if e.is_zero() {
                    next.remove(&i);
                }
            }
            v = normalize(next);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank went up.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(primitive(v));
        match r.keys().next() {
            Some(&p) => {
                self.rows.insert(p, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(primitive(v)).is_empty()
    }

    /// The stored rows, ordered by pivot.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().map(to_rational).collect()
    }
}

pub fn echelon_of(vectors: &[SparseVec]) -> Echelon {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e
}

pub fn rank(vectors: &[SparseVec]) -> usize {
    echelon_of(vectors).rank()
}

/// An echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[SparseVec]) -> Vec<SparseVec> {
    echelon_of(vectors).basis()
}

/// A basis of the column space of `op`.
pub fn image_basis(op: &LinOp) -> Vec<SparseVec> {
    span_basis(op.columns())
}

pub fn op_rank(op: &LinOp) -> usize {
    rank(op.columns())
}

/// Whether the two families span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let ea = echelon_of(a);
    let eb = echelon_of(b);
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

/// A basis of `{c : Σ_j c_j vectors[j] = 0}`, as dense coefficient vectors.
///
/// Each vector is augmented by a unit tag in coordinates past `ambient`;
/// an augmented vector whose `ambient` part reduces to zero carries a kernel
/// element in its tag part.
pub fn relations(vectors: &[SparseVec], ambient: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (j, v) in vectors.iter().enumerate() {
        assert!(v.keys().all(|&i| i < ambient), "vector outside ambient space");
        let mut aug = v.clone();
        aug.insert(ambient + j, Rational::one());
        let r = e.reduce(primitive(&aug));
        match r.keys().next() {
            Some(&p) if p < ambient => {
                e.rows.insert(p, r);
            }
            Some(_) => {
                let mut c = vec![Rational::zero(); vectors.len()];
                for (&i, x) in &r {
                    c[i - ambient] = Rational::from_integer(x.clone());
                }
                out.push(c);
            }
            None => unreachable!("tag coordinate keeps the vector nonzero"),
        }
    }
    out
}

/// A basis of the kernel of `op`.
pub fn kernel_basis(op: &LinOp) -> Vec<SparseVec> {
    relations(op.columns(), op.rows())
        .into_iter()
        .map(|c| {
            c.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn v(entries: &[(usize, i64, i64)]) -> SparseVec {
        entries.iter().map(|&(i, p, q)| (i, rat(p, q))).collect()
    }

    /// Dense rank by textbook Gaussian elimination over the rationals.
    fn dense_rank(rows: &[Vec<Rational>]) -> usize {
        let mut m: Vec<Vec<Rational>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[rank][c];
                    for k in 0..ncols {
                        let d = &m[rank][k] * &f;
                        m[i][k] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero_images() {
        assert_eq!(image_basis(&LinOp::identity(4)).len(), 4);
        assert!(image_basis(&LinOp::zero(3, 3)).is_empty());
    }

    #[test]
    fn rank_with_fractions() {
        let a = v(&[(0, 1, 2), (1, 1, 3)]);
        let b = v(&[(0, 3, 1), (1, 2, 1)]);
        let c = v(&[(2, -5, 7)]);
        assert_eq!(rank(&[a.clone(), b.clone()]), 1);
        assert_eq!(rank(&[a.clone(), b, c.clone()]), 2);
        let a4 = v(&[(0, 2, 1), (1, 4, 3)]);
        assert!(same_span(&[a.clone(), c.clone()], &[c.clone(), a4]));
        assert!(!same_span(&[a], &[c]));
    }

    #[test]
    fn rank_matches_dense_elimination() {
        let rows: Vec<Vec<Rational>> = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1), rat(0, 1)],
            vec![rat(2, 3), rat(4, 3), rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 5), rat(-1, 1), rat(7, 1)],
            vec![rat(1, 1), rat(11, 5), rat(2, 1), rat(7, 1)],
        ];
        let sparse: Vec<SparseVec> = rows
            .iter()
            .map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        assert_eq!(rank(&sparse), dense_rank(&rows));
        assert_eq!(rank(&sparse), 2);
    }

    #[test]
    fn kernel_of_projection() {
        // columns e0, e0, e1: kernel spanned by (1, -1, 0)
        let op = LinOp::from_entries(
            2,
            3,
            [(0, 0, rat(1, 1)), (0, 1, rat(1, 1)), (1, 2, rat(1, 1))],
        );
        let k = kernel_basis(&op);
        assert_eq!(k.len(), 1);
        assert!(op.apply(&k[0]).is_empty());
    }

    #[test]
    fn composition_and_kron() {
        let a = LinOp::from_entries(2, 2, [(0, 1, rat(1, 1))]);
        let b = LinOp::from_entries(2, 2, [(1, 0, rat(1, 1))]);
        assert_eq!(a.compose(&b), LinOp::from_entries(2, 2, [(0, 0, rat(1, 1))]));
        let k = a.kron(&LinOp::identity(2));
        assert_eq!(k.entry(0, 2), rat(1, 1));
        assert_eq!(k.entry(1, 3), rat(1, 1));
        assert_eq!(k.nnz(), 2);
        assert_eq!(a.commutator(&b), LinOp::diagonal(vec![rat(1, 1), rat(-1, 1)]));
    }

    #[test]
    fn json_triplets() {
        let a = LinOp::from_entries(2, 2, [(1, 0, rat(-2, 3))]);
        assert_eq!(a.to_json(), serde_json::json!([[1, 0, "-2/3"]]));
    }
}
