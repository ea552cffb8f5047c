//! `U_{r,s}(sl_n)` on tensor powers of its defining module `V = C^n`.
//!
//! Generators act on `V` by
//!
//! ```text
//! e_j = E_{j,j+1}      f_j = E_{j+1,j}
//! ω_j  = r E_jj + s E_{j+1,j+1} + Σ_{k≠j,j+1} E_kk
//! ω_j' = s E_jj + r E_{j+1,j+1} + Σ_{k≠j,j+1} E_kk
//! ```
//!
//! and on `V^{⊗m}` through the coproduct `Δ(e) = e⊗1 + ω⊗e`,
//! `Δ(f) = 1⊗f + f⊗ω'`, with `ω, ω'` group-like. Basis words
//! `v_{i_1} ⊗ ⋯ ⊗ v_{i_m}` are indexed lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exactring::{format_rational, pow_i64, rat, Params, Rational};
use crate::linalg::{echelon_of, kernel_basis, rank, same_span, LinOp, SparseVec};

/// `V^{⊗m}` with `dim V = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorSpace {
    pub n: usize,
    pub m: usize,
}

impl TensorSpace {
    pub fn new(n: usize, m: usize) -> Self {
        TensorSpace { n, m }
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.m as u32)
    }

    /// Letters (1-based) of the basis word with the given index.
    pub fn word(&self, mut index: usize) -> Vec<usize> {
        let mut w = vec![0; self.m];
        for slot in w.iter_mut().rev() {
            *slot = index % self.n + 1;
            index /= self.n;
        }
        w
    }

    pub fn index(&self, word: &[usize]) -> usize {
        assert_eq!(word.len(), self.m);
        word.iter().fold(0, |acc, &a| {
            assert!(1 <= a && a <= self.n, "letter {a} out of range");
            acc * self.n + (a - 1)
        })
    }

    /// The word as a string of letters, e.g. `"12"`.
    pub fn word_label(&self, index: usize) -> String {
        self.word(index)
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(if self.n > 9 { "." } else { "" })
    }

    /// Letter multiplicities of the word with the given index.
    pub fn content(&self, index: usize) -> GlWeight {
        let mut mu = vec![0; self.n];
        for a in self.word(index) {
            mu[a - 1] += 1;
        }
        GlWeight(mu)
    }

    /// A vector as `{word: "p/q"}`.
    pub fn vector_json(&self, v: &SparseVec) -> BTreeMap<String, String> {
        v.iter()
            .map(|(&i, x)| (self.word_label(i), format_rational(x)))
            .collect()
    }
}

/// A `gl_n` weight given by letter multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GlWeight(pub Vec<usize>);

impl GlWeight {
    /// The unit weight `ε_i`, 1-based.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        GlWeight(v)
    }

    /// `λ` padded with zeros to length `n`; `None` if it has more than `n` parts.
    pub fn padded(parts: &[usize], n: usize) -> Option<Self> {
        if parts.len() > n {
            return None;
        }
        let mut v = parts.to_vec();
        v.resize(n, 0);
        Some(GlWeight(v))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(λ̂(ω_i), λ̂(ω_i'))` for `i = 1..n-1`, where
/// `λ̂(ω_i) = r^{λ_i} s^{λ_{i+1}}` and `λ̂(ω_i') = r^{λ_{i+1}} s^{λ_i}`.
pub fn weight_eigenvalues(mu: &GlWeight, params: &Params) -> Vec<(Rational, Rational)> {
    let (r, s) = (params.r(), params.s());
    (0..mu.n().saturating_sub(1))
        .map(|i| {
            let (a, b) = (mu.0[i] as i64, mu.0[i + 1] as i64);
            (pow_i64(r, a) * pow_i64(s, b), pow_i64(r, b) * pow_i64(s, a))
        })
        .collect()
}

/// A generator of `U_{r,s}(sl_n)`, index `1 ≤ i < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    Omega(usize),
    OmegaInv(usize),
    OmegaPrime(usize),
    OmegaPrimeInv(usize),
}

impl Generator {
    pub fn all(n: usize) -> Vec<Generator> {
        (1..n)
            .flat_map(|i| {
                [
                    Generator::E(i),
                    Generator::F(i),
                    Generator::Omega(i),
                    Generator::OmegaInv(i),
                    Generator::OmegaPrime(i),
                    Generator::OmegaPrimeInv(i),
                ]
            })
            .collect()
    }

    pub fn index(&self) -> usize {
        match *self {
            Generator::E(i)
            | Generator::F(i)
            | Generator::Omega(i)
            | Generator::OmegaInv(i)
            | Generator::OmegaPrime(i)
            | Generator::OmegaPrimeInv(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "e{i}"),
            Generator::F(i) => write!(f, "f{i}"),
            Generator::Omega(i) => write!(f, "w{i}"),
            Generator::OmegaInv(i) => write!(f, "w{i}^-1"),
            Generator::OmegaPrime(i) => write!(f, "w'{i}"),
            Generator::OmegaPrimeInv(i) => write!(f, "w'{i}^-1"),
        }
    }
}

/// The matrix unit `E_ij` on `C^n`, 1-based.
pub fn matrix_unit(n: usize, i: usize, j: usize) -> LinOp {
    LinOp::from_entries(n, n, [(i - 1, j - 1, Rational::one())])
}

fn omega_diag(n: usize, j: usize, a: &Rational, b: &Rational) -> LinOp {
    let mut d: Vec<Rational> = (0..n).map(|_| Rational::one()).collect();
    d[j - 1] = a.clone();
    d[j] = b.clone();
    LinOp::diagonal(d)
}

/// Matrices of the generators on `V` or on `V^{⊗m}`.
#[derive(Debug, Clone)]
pub struct Representation {
    space: TensorSpace,
    ops: BTreeMap<Generator, LinOp>,
}

impl Representation {
    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn get(&self, g: Generator) -> &LinOp {
        &self.ops[&g]
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Generator, &LinOp)> {
        self.ops.iter()
    }
}

/// The defining representation on `V`.
pub fn defining_rep(n: usize, params: &Params) -> Representation {
    assert!(n >= 2, "sl_n needs n >= 2");
    let (r, s) = (params.r(), params.s());
    let mut ops = BTreeMap::new();
    for j in 1..n {
        ops.insert(Generator::E(j), matrix_unit(n, j, j + 1));
        ops.insert(Generator::F(j), matrix_unit(n, j + 1, j));
        ops.insert(Generator::Omega(j), omega_diag(n, j, r, s));
        ops.insert(Generator::OmegaInv(j), omega_diag(n, j, &r.recip(), &s.recip()));
        ops.insert(Generator::OmegaPrime(j), omega_diag(n, j, s, r));
        ops.insert(Generator::OmegaPrimeInv(j), omega_diag(n, j, &s.recip(), &r.recip()));
    }
    Representation {
        space: TensorSpace::new(n, 1),
        ops,
    }
}

fn tensor_power(op: &LinOp, k: usize) -> LinOp {
    (0..k).fold(LinOp::identity(1), |acc, _| acc.kron(op))
}

/// The action of `g` on `V^{⊗m}` through the iterated coproduct.
pub fn coproduct_action(g: Generator, n: usize, m: usize, params: &Params) -> LinOp {
    let v = defining_rep(n, params);
    coproduct_from(&v, g, m)
}

fn coproduct_from(v: &Representation, g: Generator, m: usize) -> LinOp {
    let n = v.space.n;
    let id = LinOp::identity(n);
    let dim = n.pow(m as u32);
    match g {
        Generator::E(i) => {
            let (e, w) = (v.get(g), v.get(Generator::Omega(i)));
            (1..=m).fold(LinOp::zero(dim, dim), |acc, k| {
                let term = tensor_power(w, k - 1).kron(e).kron(&tensor_power(&id, m - k));
                acc.add(&term)
            })
        }
        Generator::F(i) => {
            let (f, w) = (v.get(g), v.get(Generator::OmegaPrime(i)));
            (1..=m).fold(LinOp::zero(dim, dim), |acc, k| {
                let term = tensor_power(&id, k - 1).kron(f).kron(&tensor_power(w, m - k));
                acc.add(&term)
            })
        }
        _ => tensor_power(v.get(g), m),
    }
}

/// All generators acting on `V^{⊗m}`.
pub fn coproduct_rep(n: usize, m: usize, params: &Params) -> Representation {
    let v = defining_rep(n, params);
    let ops = Generator::all(n)
        .into_iter()
        .map(|g| (g, coproduct_from(&v, g, m)))
        .collect();
    Representation {
        space: TensorSpace::new(n, m),
        ops,
    }
}

/// The relations of `U_{r,s}(sl_n)` checked as matrix identities in `rep`.
pub fn relation_suite(rep: &Representation, params: &Params) -> Vec<Check> {
    let n = rep.space.n;
    let dim = rep.space.dim();
    let (r, s) = (params.r().clone(), params.s().clone());
    let id = LinOp::identity(dim);
    let e = |i| rep.get(Generator::E(i));
    let f = |i| rep.get(Generator::F(i));
    let w = |i| rep.get(Generator::Omega(i));
    let wi = |i| rep.get(Generator::OmegaInv(i));
    let wp = |i| rep.get(Generator::OmegaPrime(i));
    let wpi = |i| rep.get(Generator::OmegaPrimeInv(i));
    let mut out = Vec::new();

    for i in 1..n {
        out.push(Check::new(
            format!("R1 w{i} w{i}^-1 = 1"),
            w(i).compose(wi(i)) == id && wi(i).compose(w(i)) == id,
        ));
        out.push(Check::new(
            format!("R1 w'{i} w'{i}^-1 = 1"),
            wp(i).compose(wpi(i)) == id && wpi(i).compose(wp(i)) == id,
        ));
        for j in 1..n {
            let commute = w(i).commutator(w(j)).is_zero()
                && wp(i).commutator(wp(j)).is_zero()
                && w(i).commutator(wp(j)).is_zero();
            out.push(Check::new(format!("R1 w{i}, w'{j} commute"), commute));
        }
    }

    // <ε_a, α_j> for the simple root α_j = ε_j - ε_{j+1}
    let pairing = |a: usize, j: usize| -> i64 {
        (a == j) as i64 - (a == j + 1) as i64
    };
    for i in 1..n {
        for j in 1..n {
            let (a, b) = (pairing(i, j), pairing(i + 1, j));
            let ce = pow_i64(&r, a) * pow_i64(&s, b);
            let ok_e = w(i).compose(e(j)).compose(wi(i)) == e(j).scale(&ce);
            let ok_f = w(i).compose(f(j)).compose(wi(i)) == f(j).scale(&ce.recip());
            out.push(Check::new(format!("R2 w{i} e{j}, f{j}"), ok_e && ok_f));
            let cp = pow_i64(&s, a) * pow_i64(&r, b);
            let ok_e = wp(i).compose(e(j)).compose(wpi(i)) == e(j).scale(&cp);
            let ok_f = wp(i).compose(f(j)).compose(wpi(i)) == f(j).scale(&cp.recip());
            out.push(Check::new(format!("R3 w'{i} e{j}, f{j}"), ok_e && ok_f));
        }
    }

    let rs_inv = (&r - &s).recip();
    for i in 1..n {
        for j in 1..n {
            let lhs = e(i).commutator(f(j));
            let rhs = if i == j {
                w(i).sub(wp(i)).scale(&rs_inv)
            } else {
                LinOp::zero(dim, dim)
            };
            out.push(Check::new(format!("R4 [e{i}, f{j}]"), lhs == rhs));
            if i.abs_diff(j) > 1 {
                let ok = e(i).commutator(e(j)).is_zero() && f(i).commutator(f(j)).is_zero();
                out.push(Check::new(format!("R5 e{i}, e{j} and f{i}, f{j} commute"), ok));
            }
        }
    }

    let serre = |a: &LinOp, b: &LinOp, c1: &Rational, c2: &Rational, a_first: bool| {
        // a_first: a² b - c1 a b a + c2 b a²; otherwise a b² - c1 b a b + c2 b² a
        let (x, y) = if a_first {
            (
                a.compose(a).compose(b).sub(&a.compose(b).compose(a).scale(c1)),
                b.compose(a).compose(a).scale(c2),
            )
        } else {
            (
                a.compose(b).compose(b).sub(&b.compose(a).compose(b).scale(c1)),
                b.compose(b).compose(a).scale(c2),
            )
        };
        x.add(&y).is_zero()
    };
    let (sum, prod) = (&r + &s, &r * &s);
    let (sum_inv, prod_inv) = (r.recip() + s.recip(), (&r * &s).recip());
    for i in 1..n.saturating_sub(1) {
        out.push(Check::new(
            format!("R6 e{i}^2 e{} relation", i + 1),
            serre(e(i), e(i + 1), &sum, &prod, true),
        ));
        out.push(Check::new(
            format!("R6 e{i} e{}^2 relation", i + 1),
            serre(e(i), e(i + 1), &sum, &prod, false),
        ));
        out.push(Check::new(
            format!("R7 f{i}^2 f{} relation", i + 1),
            serre(f(i), f(i + 1), &sum_inv, &prod_inv, true),
        ));
        out.push(Check::new(
            format!("R7 f{i} f{}^2 relation", i + 1),
            serre(f(i), f(i + 1), &sum_inv, &prod_inv, false),
        ));
    }
    out
}

/// `E_ab ⊗ E_cd` contributes `v_a ⊗ v_c` from `v_b ⊗ v_d`; this collects
/// `(a, c, b, d, coefficient)` terms into an operator on `V ⊗ V`.
fn two_site(n: usize, terms: impl IntoIterator<Item = (usize, usize, usize, usize, Rational)>) -> LinOp {
    let space = TensorSpace::new(n, 2);
    LinOp::from_entries(
        n * n,
        n * n,
        terms
            .into_iter()
            .map(|(a, c, b, d, x)| (space.index(&[a, c]), space.index(&[b, d]), x)),
    )
}

/// The R-matrix
///
/// ```text
/// Ř = Σ_i E_ii⊗E_ii + r Σ_{i<j} E_ji⊗E_ij + s^{-1} Σ_{i<j} E_ij⊗E_ji
///   + (1 - r/s) Σ_{i<j} E_jj⊗E_ii
/// ```
pub fn rcheck(n: usize, params: &Params) -> LinOp {
    let (r, s_inv, d) = (params.r(), params.s().recip(), params.quad_linear());
    let mut terms = Vec::new();
    for i in 1..=n {
        terms.push((i, i, i, i, Rational::one()));
        for j in i + 1..=n {
            terms.push((j, i, i, j, r.clone()));
            terms.push((i, j, j, i, s_inv.clone()));
            terms.push((j, i, j, i, d.clone()));
        }
    }
    two_site(n, terms)
}

/// The spectral R-matrix
///
/// ```text
/// Ř(z) = (1 - z r/s) Σ_i E_ii⊗E_ii + (1 - z)(r Σ_{i>j} + s^{-1} Σ_{i<j}) E_ij⊗E_ji
///      + z (1 - r/s) Σ_{i<j} E_ii⊗E_jj + (1 - r/s) Σ_{i>j} E_ii⊗E_jj
/// ```
pub fn rcheck_z(n: usize, params: &Params, z: &Rational) -> LinOp {
    let one = Rational::one();
    let (r, s_inv, d) = (params.r(), params.s().recip(), params.quad_linear());
    let mut terms = Vec::new();
    for i in 1..=n {
        terms.push((i, i, i, i, &one - z * params.q_inv()));
        for j in 1..=n {
            if i == j {
                continue;
            }
            let c = if i > j { r.clone() } else { s_inv.clone() };
            terms.push((i, j, j, i, (&one - z) * c));
            let diag = if i < j { z * &d } else { d.clone() };
            terms.push((i, j, i, j, diag));
        }
    }
    two_site(n, terms)
}

/// The normalized R-matrix `Ř(x, y) = s y Ř(x/y) / (y - x)`.
pub fn rcheck_xy(n: usize, params: &Params, x: &Rational, y: &Rational) -> Result<LinOp> {
    if x == y {
        return Err(Error::SingularPoint(format!("x = y = {x}")));
    }
    if y.is_zero() {
        return Err(Error::SingularPoint("y = 0".into()));
    }
    let c = params.s() * y / (y - x);
    Ok(rcheck_z(n, params, &(x / y)).scale(&c))
}

/// The one-parameter matrix
///
/// ```text
/// Ř_q(z) = (1 - z q²) Σ_i E_ii⊗E_ii + (1 - z) q Σ_{i≠j} E_ij⊗E_ji
///        + (1 - q²)(Σ_{i>j} + z Σ_{i<j}) E_ii⊗E_jj
/// ```
pub fn jimbo_rcheck(n: usize, q: &Rational, z: &Rational) -> LinOp {
    let one = Rational::one();
    let q2 = q * q;
    let mut terms = Vec::new();
    for i in 1..=n {
        terms.push((i, i, i, i, &one - z * &q2));
        for j in 1..=n {
            if i == j {
                continue;
            }
            terms.push((i, j, j, i, (&one - z) * q));
            let d = &one - &q2;
            terms.push((i, j, i, j, if i > j { d } else { z * d }));
        }
    }
    two_site(n, terms)
}

/// `1^{⊗(i-1)} ⊗ op ⊗ 1^{⊗(m-i-1)}` for an operator `op` on `V ⊗ V`.
pub fn embed_at(op: &LinOp, n: usize, i: usize, m: usize) -> LinOp {
    assert!(1 <= i && i < m, "position {i} out of range for degree {m}");
    assert_eq!(op.rows(), n * n);
    let id = LinOp::identity(n);
    tensor_power(&id, i - 1)
        .kron(op)
        .kron(&tensor_power(&id, m - i - 1))
}

/// Spanning set `{v_i⊗v_i} ∪ {v_i⊗v_j + s v_j⊗v_i : i < j}`.
pub fn sym2_basis(n: usize, params: &Params) -> Vec<SparseVec> {
    let sp = TensorSpace::new(n, 2);
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(SparseVec::from([(sp.index(&[i, i]), Rational::one())]));
        for j in i + 1..=n {
            out.push(SparseVec::from([
                (sp.index(&[i, j]), Rational::one()),
                (sp.index(&[j, i]), params.s().clone()),
            ]));
        }
    }
    out
}

/// Spanning set `{v_i⊗v_j - r v_j⊗v_i : i < j}`.
pub fn wedge2_basis(n: usize, params: &Params) -> Vec<SparseVec> {
    let sp = TensorSpace::new(n, 2);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(SparseVec::from([
                (sp.index(&[i, j]), Rational::one()),
                (sp.index(&[j, i]), -params.r().clone()),
            ]));
        }
    }
    out
}

/// `dim V^{⊗k} / Σ_i V^{⊗i} ⊗ S² ⊗ V^{⊗(k-i-2)}`.
pub fn fundamental_module_dim(n: usize, k: usize, params: &Params) -> usize {
    assert!(1 <= k && k <= n);
    let total = n.pow(k as u32);
    if k == 1 {
        return total;
    }
    let sym: Vec<LinOp> = sym2_basis(n, params)
        .into_iter()
        .map(|v| LinOp::from_columns(n * n, vec![v]))
        .collect();
    let mut spanning = Vec::new();
    for i in 0..=k - 2 {
        let left = tensor_power(&LinOp::identity(n), i);
        let right = tensor_power(&LinOp::identity(n), k - i - 2);
        for v in &sym {
            let embedded = left.kron(v).kron(&right);
            spanning.extend(embedded.columns().iter().cloned());
        }
    }
    total - rank(&spanning)
}

/// Whether every generator maps the span of `basis` into itself.
pub fn is_invariant(basis: &[SparseVec], rep: &Representation) -> bool {
    let e = echelon_of(basis);
    rep.generators()
        .all(|(_, op)| basis.iter().all(|v| e.contains(&op.apply(v))))
}

/// Which special point of `Ř(x, y)` has `S²` as its image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetricLabel {
    /// `S² = Im Ř(1, s/r)` and `Λ² = Im Ř(1, r/s)`.
    ImageAtSOverR,
    /// `S² = Im Ř(1, r/s)` and `Λ² = Im Ř(1, s/r)`.
    ImageAtROverS,
}

/// Result of comparing the special values of `Ř(x, y)` with `S²` and `Λ²`.
#[derive(Debug, Clone)]
pub struct SpecialPointReport {
    pub label: Option<SymmetricLabel>,
    pub checks: Vec<Check>,
}

/// Compares the images and kernels of `Ř(1, s/r)` and `Ř(1, r/s)` with the
/// spans of [`sym2_basis`] and [`wedge2_basis`], and checks both spans are
/// submodules of `V ⊗ V`.
pub fn special_points(n: usize, params: &Params) -> SpecialPointReport {
    let one = Rational::one();
    let a = rcheck_xy(n, params, &one, &params.q()).expect("s/r ≠ 1");
    let b = rcheck_xy(n, params, &one, &params.q_inv()).expect("r/s ≠ 1");
    let (im_a, im_b) = (a.columns().to_vec(), b.columns().to_vec());
    let (ker_a, ker_b) = (kernel_basis(&a), kernel_basis(&b));
    let sym = sym2_basis(n, params);
    let wedge = wedge2_basis(n, params);
    let label = if same_span(&im_a, &sym) && same_span(&im_b, &wedge) {
        Some(SymmetricLabel::ImageAtSOverR)
    } else if same_span(&im_a, &wedge) && same_span(&im_b, &sym) {
        Some(SymmetricLabel::ImageAtROverS)
    } else {
        None
    };
    let rep = coproduct_rep(n, 2, params);
    let checks = vec![
        Check::new(format!("n={n} images are {{S2, L2}}"), label.is_some()),
        Check::new(format!("n={n} image at s/r = kernel at r/s"), same_span(&im_a, &ker_b)),
        Check::new(format!("n={n} image at r/s = kernel at s/r"), same_span(&im_b, &ker_a)),
        Check::new(format!("n={n} S2 is a submodule"), is_invariant(&sym, &rep)),
        Check::new(format!("n={n} L2 is a submodule"), is_invariant(&wedge, &rep)),
        Check::new(
            format!("n={n} dim S2 + dim L2 = n^2"),
            rank(&sym) + rank(&wedge) == n * n,
        ),
    ];
    SpecialPointReport { label, checks }
}

/// Braid, far-commutation and quadratic relations of the `Ř_i` on `V^{⊗m}`.
pub fn braid_suite(n: usize, m: usize, params: &Params) -> Vec<Check> {
    let rc = rcheck(n, params);
    let ri: Vec<LinOp> = (1..m).map(|i| embed_at(&rc, n, i, m)).collect();
    let id = LinOp::identity(TensorSpace::new(n, m).dim());
    let mut out = Vec::new();
    for i in 1..m {
        let a = &ri[i - 1];
        let quad = a
            .compose(a)
            .sub(&a.scale(&params.quad_linear()))
            .sub(&id.scale(&params.q_inv()));
        out.push(Check::new(format!("n={n} m={m} R{i}^2 quadratic"), quad.is_zero()));
        if i + 1 < m {
            let b = &ri[i];
            let ok = a.compose(b).compose(a) == b.compose(a).compose(b);
            out.push(Check::new(format!("n={n} m={m} R{i} R{} braid", i + 1), ok));
        }
        for j in i + 2..m {
            let ok = a.commutator(&ri[j - 1]).is_zero();
            out.push(Check::new(format!("n={n} m={m} R{i} R{j} commute"), ok));
        }
    }
    out
}

/// `Ř_i` commutes with every generator acting on `V^{⊗m}`.
pub fn commutation_suite(n: usize, m: usize, params: &Params) -> Vec<Check> {
    let rc = rcheck(n, params);
    let rep = coproduct_rep(n, m, params);
    let mut out = Vec::new();
    for i in 1..m {
        let ri = embed_at(&rc, n, i, m);
        for (g, op) in rep.generators() {
            out.push(Check::new(
                format!("n={n} m={m} R{i} commutes with {g}"),
                ri.commutator(op).is_zero(),
            ));
        }
    }
    out
}

/// A rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`, excluding zero.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let q: i64 = rng.gen_range(1..=9);
        if p != 0 {
            return rat(p, q);
        }
    }
}

/// `k` pairwise distinct nonzero small rationals.
fn distinct_points(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let x = small_rational(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Seeded spectral points: `count` pairs `(z, w)` and `count` triples
/// `(x, y, z)` of pairwise distinct nonzero rationals.
pub fn spectral_points(seed: u64, count: usize) -> (Vec<[Rational; 2]>, Vec<[Rational; 3]>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = (0..count)
        .map(|_| {
            let p = distinct_points(&mut rng, 2);
            [p[0].clone(), p[1].clone()]
        })
        .collect();
    let triples = (0..count)
        .map(|_| {
            let p = distinct_points(&mut rng, 3);
            [p[0].clone(), p[1].clone(), p[2].clone()]
        })
        .collect();
    (pairs, triples)
}

/// `Ř_1(z)Ř_2(zw)Ř_1(w) = Ř_2(w)Ř_1(zw)Ř_2(z)` on `V^{⊗3}`.
pub fn spectral_ybe(n: usize, params: &Params, z: &Rational, w: &Rational) -> bool {
    let at = |i: usize, x: &Rational| embed_at(&rcheck_z(n, params, x), n, i, 3);
    let zw = z * w;
    let lhs = at(1, z).compose(&at(2, &zw)).compose(&at(1, w));
    let rhs = at(2, w).compose(&at(1, &zw)).compose(&at(2, z));
    lhs == rhs
}

/// `Ř_1(x,y)Ř_2(x,z)Ř_1(y,z) = Ř_2(y,z)Ř_1(x,z)Ř_2(x,y)` on `V^{⊗3}`.
pub fn two_parameter_ybe(
    n: usize,
    params: &Params,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<bool> {
    let at = |i: usize, a: &Rational, b: &Rational| -> Result<LinOp> {
        Ok(embed_at(&rcheck_xy(n, params, a, b)?, n, i, 3))
    };
    let lhs = at(1, x, y)?.compose(&at(2, x, z)?).compose(&at(1, y, z)?);
    let rhs = at(2, y, z)?.compose(&at(1, x, z)?).compose(&at(2, x, y)?);
    Ok(lhs == rhs)
}

/// Both Yang–Baxter equations at seeded random points.
pub fn ybe_suite(n: usize, params: &Params, seed: u64, count: usize) -> Vec<Check> {
    let (pairs, triples) = spectral_points(seed, count);
    let mut out = Vec::new();
    for [z, w] in &pairs {
        out.push(Check::new(
            format!("n={n} YBE R(z) at z={z}, w={w}"),
            spectral_ybe(n, params, z, w),
        ));
    }
    for [x, y, z] in &triples {
        let ok = two_parameter_ybe(n, params, x, y, z).unwrap_or(false);
        out.push(Check::new(format!("n={n} YBE R(x,y) at x={x}, y={y}, z={z}"), ok));
    }
    out
}
