//! The Hecke algebra `H_m(r,s)`.
//!
//! Generated by `T_1, …, T_{m-1}` subject to the braid relations and
//! `(T_i - 1)(T_i + r/s) = 0`. Elements are stored in the basis `T_σ`,
//! `σ ∈ S_m`, and products are computed by right multiplication along reduced
//! words using
//!
//! ```text
//! T_σ T_i = T_{σ s_i}                              if ℓ(σ s_i) > ℓ(σ)
//! T_σ T_i = (1 - r/s) T_σ + (r/s) T_{σ s_i}        otherwise
//! ```
//!
//! The coefficient ring is a type parameter: [`Rational`] for numeric
//! idempotents and [`FactoredFraction`] for the rational functions of the
//! fusion procedure.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exactring::{
    format_rational, parse_rational, pow_i64, FactoredFraction, Params, Rational,
};
use crate::tableaux::{longest_word, Permutation, StandardTableau};

/// Coefficient ring of a [`HeckeElement`].
pub trait Coeff: Clone + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    fn neg(&self) -> Self;
    /// Semantic equality (cross-multiplied for fractions).
    fn equals(&self, other: &Self) -> bool;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn neg(&self) -> Self {
        -self
    }
    fn equals(&self, other: &Self) -> bool {
        self == other
    }
}

impl Coeff for FactoredFraction {
    fn zero() -> Self {
        FactoredFraction::zero()
    }
    fn from_rational(q: &Rational) -> Self {
        FactoredFraction::constant(q.clone())
    }
    fn is_zero(&self) -> bool {
        FactoredFraction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        FactoredFraction::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FactoredFraction::mul(self, other)
    }
    fn scale(&self, q: &Rational) -> Self {
        FactoredFraction::scale(self, q)
    }
    fn neg(&self) -> Self {
        FactoredFraction::neg(self)
    }
    fn equals(&self, other: &Self) -> bool {
        FactoredFraction::equals(self, other)
    }
}

/// A finite combination `Σ c_σ T_σ` in `H_m`. Zero coefficients are never
/// stored.
#[derive(Debug, Clone)]
pub struct HeckeElement<C> {
    m: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(m: usize) -> Self {
        HeckeElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        HeckeElement::basis(Permutation::identity(m), C::from_rational(&Rational::one()))
    }

    /// `c · T_σ`.
    pub fn basis(sigma: Permutation, c: C) -> Self {
        let mut e = HeckeElement::zero(sigma.arity());
        e.add_term(sigma, c);
        e
    }

    pub fn scalar(m: usize, q: &Rational) -> Self {
        HeckeElement::one(m).scale(q)
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, sigma: &Permutation) -> Option<&C> {
        self.terms.get(sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, sigma: Permutation, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(sigma) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if Zero::is_zero(q) {
            return HeckeElement::zero(self.m);
        }
        self.map(|c| c.scale(q))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &C) -> Self {
        let mut out = HeckeElement::zero(self.m);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x.mul(c));
        }
        out
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        HeckeElement {
            m: self.m,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), f(c))).collect(),
        }
    }

    /// Applies a fallible map to every coefficient, dropping zeros.
    pub fn try_map<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<HeckeElement<D>> {
        let mut out = HeckeElement::zero(self.m);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn equals(&self, other: &Self) -> bool {
        if self.m != other.m {
            return false;
        }
        let keys_match = self.terms.len() == other.terms.len()
            && self.terms.keys().zip(other.terms.keys()).all(|(a, b)| a == b);
        keys_match
            && self
                .terms
                .values()
                .zip(other.terms.values())
                .all(|(a, b)| a.equals(b))
    }

    /// The same element in `H_m'` for `m' ≥ m`.
    pub fn embed(&self, m: usize) -> Self {
        HeckeElement {
            m,
            terms: self.terms.iter().map(|(p, c)| (p.embed(m), c.clone())).collect(),
        }
    }
}

impl HeckeElement<Rational> {
    /// JSON object mapping one-line permutations to coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| (p.to_string(), serde_json::Value::String(format_rational(c))))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(m: usize, value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut out = HeckeElement::zero(m);
        for (k, v) in obj {
            let p: Permutation = k.parse()?;
            if p.arity() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: p.arity(),
                });
            }
            let c = v
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of {k} must be a string")))?;
            out.add_term(p, parse_rational(c)?);
        }
        Ok(out)
    }
}

impl<C: Coeff> PartialEq for HeckeElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Coeff> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("({c})·T[{p}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplication context for `H_m(r,s)`.
#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    m: usize,
    params: Params,
    /// Permutations in order of increasing length; each entry after the
    /// identity records `(parent, i)` with `σ = parent · s_i` and
    /// `ℓ(σ) = ℓ(parent) + 1`.
    perms: Vec<(Permutation, Option<(usize, usize)>)>,
    index: HashMap<Permutation, usize>,
    /// `step[j][i - 1] = (index of σ_j s_i, whether ℓ goes up)`.
    step: Vec<Vec<(usize, bool)>>,
    lengths: Vec<usize>,
    quad_linear: Rational,
    q_inv: Rational,
}

impl HeckeAlgebra {
    pub fn new(m: usize, params: Params) -> Self {
        assert!(m >= 1, "H_m needs m >= 1");
        let mut perms = vec![(Permutation::identity(m), None)];
        let mut index = HashMap::new();
        index.insert(Permutation::identity(m), 0);
        let mut frontier = 0;
        while frontier < perms.len() {
            let sigma = perms[frontier].0.clone();
            for i in 1..m {
                if sigma.ascends_at(i) {
                    let next = sigma.times_generator(i);
                    if !index.contains_key(&next) {
                        index.insert(next.clone(), perms.len());
                        perms.push((next, Some((frontier, i))));
                    }
                }
            }
            frontier += 1;
        }
        let step = perms
            .iter()
            .map(|(p, _)| {
                (1..m)
                    .map(|i| (index[&p.times_generator(i)], p.ascends_at(i)))
                    .collect()
            })
            .collect();
        let mut lengths = vec![0; perms.len()];
        for j in 1..perms.len() {
            let (parent, _) = perms[j].1.expect("non-identity has a parent");
            lengths[j] = lengths[parent] + 1;
        }
        HeckeAlgebra {
            step,
            lengths,
            m,
            quad_linear: params.quad_linear(),
            q_inv: params.q_inv(),
            params,
            perms,
            index,
        }
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// All of `S_m`, by increasing length.
    pub fn permutations(&self) -> impl Iterator<Item = &Permutation> {
        self.perms.iter().map(|(p, _)| p)
    }

    /// For each permutation after the identity, `(σ, parent, i)` with
    /// `σ = parent · s_i`, in order of increasing length.
    pub fn build_order(&self) -> impl Iterator<Item = (&Permutation, &Permutation, usize)> {
        self.perms
            .iter()
            .filter_map(|(p, parent)| parent.map(|(j, i)| (p, &self.perms[j].0, i)))
    }

    pub fn one<C: Coeff>(&self) -> HeckeElement<C> {
        HeckeElement::one(self.m)
    }

    /// The generator `T_i`.
    pub fn gen<C: Coeff>(&self, i: usize) -> HeckeElement<C> {
        assert!(1 <= i && i < self.m, "generator index {i} out of range");
        HeckeElement::basis(
            Permutation::from_word(self.m, &[i]),
            C::from_rational(&Rational::one()),
        )
    }

    /// `a · T_i`.
    pub fn mul_gen<C: Coeff>(&self, a: &HeckeElement<C>, i: usize) -> HeckeElement<C> {
        let mut out = HeckeElement::zero(self.m);
        for (sigma, c) in &a.terms {
            let next = sigma.times_generator(i);
            if sigma.ascends_at(i) {
                out.add_term(next, c.clone());
            } else {
                out.add_term(sigma.clone(), c.scale(&self.quad_linear));
                out.add_term(next, c.scale(&self.q_inv));
            }
        }
        out
    }

    /// `a · (x T_i + y)` for ring elements `x, y`.
    pub fn mul_affine_gen<C: Coeff>(
        &self,
        a: &HeckeElement<C>,
        i: usize,
        x: &C,
        y: &C,
    ) -> HeckeElement<C> {
        self.mul_gen(a, i).scale_by(x).add(&a.scale_by(y))
    }

    /// `a · T_{i_1} ⋯ T_{i_k}`.
    pub fn mul_word<C: Coeff>(&self, a: &HeckeElement<C>, word: &[usize]) -> HeckeElement<C> {
        word.iter().fold(a.clone(), |acc, &i| self.mul_gen(&acc, i))
    }

    /// Product in the `T_σ` basis.
    ///
    /// `a · T_τ` is built for every `τ` needed by `b`, extending the product
    /// for the parent of `τ` by one generator.
    pub fn mul<C: Coeff>(&self, a: &HeckeElement<C>, b: &HeckeElement<C>) -> HeckeElement<C> {
        assert_eq!(a.m, self.m, "left factor has wrong arity");
        assert_eq!(b.m, self.m, "right factor has wrong arity");
        if a.is_zero() || b.is_zero() {
            return HeckeElement::zero(self.m);
        }
        let mut needed = vec![false; self.perms.len()];
        for sigma in b.terms.keys() {
            let mut j = self.index[sigma];
            while !needed[j] {
                needed[j] = true;
                match self.perms[j].1 {
                    Some((parent, _)) => j = parent,
                    None => break,
                }
            }
        }
        let mut partial: Vec<Option<HeckeElement<C>>> = vec![None; self.perms.len()];
        partial[0] = Some(a.clone());
        for (j, (_, parent)) in self.perms.iter().enumerate().skip(1) {
            if needed[j] {
                let (p, i) = parent.expect("non-identity has a parent");
                let prev = partial[p].as_ref().expect("parent computed first");
                partial[j] = Some(self.mul_gen(prev, i));
            }
        }
        let mut out = HeckeElement::zero(self.m);
        for (sigma, c) in &b.terms {
            let at = partial[self.index[sigma]].as_ref().expect("computed above");
            for (p, x) in &at.terms {
                out.add_term(p.clone(), x.mul(c));
            }
        }
        out
    }

    /// Product of rational elements by dense fraction-free integer arithmetic.
    ///
    /// With `r/s = a/d` in lowest terms, `d T_i` has integer structure
    /// constants, so `a · T_τ` is `d^{-ℓ(τ)}` times an integer vector once the
    /// denominators of `a` are cleared. Agrees with [`HeckeAlgebra::mul`].
    pub fn mul_exact(
        &self,
        a: &HeckeElement<Rational>,
        b: &HeckeElement<Rational>,
    ) -> HeckeElement<Rational> {
        assert_eq!(a.m, self.m, "left factor has wrong arity");
        assert_eq!(b.m, self.m, "right factor has wrong arity");
        if a.is_zero() || b.is_zero() {
            return HeckeElement::zero(self.m);
        }
        let size = self.perms.len();
        let num = self.q_inv.numer().clone();
        let den = self.q_inv.denom().clone();
        let stay = &den - &num;

        let a_den = a
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut base = vec![BigInt::zero(); size];
        for (sigma, c) in &a.terms {
            base[self.index[sigma]] = c.numer() * (&a_den / c.denom());
        }

        let mut weights = vec![None; size];
        let mut needed = vec![false; size];
        for (sigma, c) in &b.terms {
            let mut j = self.index[sigma];
            weights[j] = Some(c / Rational::from_integer(pow_big(&den, self.lengths[j])));
            while !needed[j] {
                needed[j] = true;
                match self.perms[j].1 {
                    Some((parent, _)) => j = parent,
                    None => break,
                }
            }
        }
        let b_den = weights
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, w: &Rational| acc.lcm(w.denom()));

        let mut partial: Vec<Option<Vec<BigInt>>> = vec![None; size];
        partial[0] = Some(base);
        let mut total = vec![BigInt::zero(); size];
        for j in 0..size {
            if !needed[j] {
                continue;
            }
            if j > 0 {
                let (p, i) = self.perms[j].1.expect("non-identity has a parent");
                let prev = partial[p].as_ref().expect("parent computed first");
                let mut next = vec![BigInt::zero(); size];
                for (k, c) in prev.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (to, up) = self.step[k][i - 1];
                    if up {
                        next[to] += c * &den;
                    } else {
                        next[k] += c * &stay;
                        next[to] += c * &num;
                    }
                }
                partial[j] = Some(next);
            }
            if let Some(w) = &weights[j] {
                let factor = w.numer() * (&b_den / w.denom());
                let at = partial[j].as_ref().expect("computed above");
                for (k, c) in at.iter().enumerate() {
                    if !c.is_zero() {
                        total[k] += c * &factor;
                    }
                }
            }
        }
        let scale = a_den * b_den;
        let mut out = HeckeElement::zero(self.m);
        for (k, c) in total.into_iter().enumerate() {
            if !c.is_zero() {
                out.terms
                    .insert(self.perms[k].0.clone(), Rational::new(c, scale.clone()));
            }
        }
        out
    }

    /// `T_{i_1} ⋯ T_{i_k}` for any word, reduced or not.
    pub fn t_word<C: Coeff>(&self, word: &[usize]) -> HeckeElement<C> {
        self.mul_word(&self.one(), word)
    }

    /// `T_σ`.
    pub fn t_perm<C: Coeff>(&self, sigma: &Permutation) -> HeckeElement<C> {
        assert_eq!(sigma.arity(), self.m);
        HeckeElement::basis(sigma.clone(), C::from_rational(&Rational::one()))
    }

    /// `T_i^{-1} = (s/r) T_i + (1 - s/r)`.
    pub fn gen_inverse<C: Coeff>(&self, i: usize) -> HeckeElement<C> {
        let q = self.params.q();
        self.gen::<C>(i)
            .scale(&q)
            .add(&HeckeElement::scalar(self.m, &(Rational::one() - &q)))
    }

    /// `a · T_i^{-1}`.
    pub fn mul_gen_inverse<C: Coeff>(&self, a: &HeckeElement<C>, i: usize) -> HeckeElement<C> {
        let q = self.params.q();
        self.mul_gen(a, i)
            .scale(&q)
            .add(&a.scale(&(Rational::one() - &q)))
    }

    /// `T_{w_k}` from the word `s_1 (s_2 s_1) ⋯ (s_{k-1} ⋯ s_1)`.
    pub fn t_longest<C: Coeff>(&self, k: usize) -> HeckeElement<C> {
        assert!(1 <= k && k <= self.m);
        self.t_word(&longest_word(k))
    }

    /// `T_{w_k}^{-1}`, the reversed word of generator inverses.
    pub fn t_longest_inverse<C: Coeff>(&self, k: usize) -> HeckeElement<C> {
        self.mul_longest_inverse(&self.one(), k)
    }

    /// `a · T_{w_k}^{-1}`.
    pub fn mul_longest_inverse<C: Coeff>(&self, a: &HeckeElement<C>, k: usize) -> HeckeElement<C> {
        assert!(1 <= k && k <= self.m);
        longest_word(k)
            .iter()
            .rev()
            .fold(a.clone(), |acc, &i| self.mul_gen_inverse(&acc, i))
    }

    /// The Jucys–Murphy elements `y_1, …, y_m`, with `y_1 = 1` and
    /// `y_{k+1} = (s/r) T_k y_k T_k`.
    pub fn jm_elements(&self) -> Vec<HeckeElement<Rational>> {
        let q = self.params.q();
        let mut ys = vec![self.one::<Rational>()];
        for k in 1..self.m {
            let left = self.mul(&self.gen(k), &ys[k - 1]);
            ys.push(self.mul_gen(&left, k).scale(&q));
        }
        ys
    }

    /// The Jucys–Murphy element `y_k`.
    pub fn jm(&self, k: usize) -> HeckeElement<Rational> {
        assert!(1 <= k && k <= self.m);
        self.jm_elements().swap_remove(k - 1)
    }

    /// The primitive idempotent `E_T` by the Jucys–Murphy recursion
    ///
    /// ```text
    /// E_T = E_U · ∏_ρ (y_k - ρ) / (σ - ρ)
    /// ```
    ///
    /// where `U` is `T` restricted to `1..k-1`, `σ` is the content of the cell
    /// holding `k` and `ρ` runs over the contents of the other addable cells of
    /// the shape of `U`.
    pub fn jm_idempotent(&self, tableau: &StandardTableau) -> Result<HeckeElement<Rational>> {
        if tableau.size() != self.m {
            return Err(Error::ArityMismatch {
                expected: self.m,
                found: tableau.size(),
            });
        }
        let ys = self.jm_elements();
        let mut chain = vec![tableau.clone()];
        while let Some((u, _)) = chain.last().unwrap().remove_largest() {
            chain.push(u);
        }
        chain.reverse();
        // chain[k] has entries 1..=k
        let mut e = self.one::<Rational>();
        for k in 2..=self.m {
            let mu = chain[k - 1].shape();
            let alpha = chain[k].cell_of(k).expect("k is in its own restriction");
            let sigma = self.params.content(alpha.content());
            let mut denom = Rational::one();
            for cell in mu.addable_cells().into_iter().filter(|c| *c != alpha) {
                let rho = self.params.content(cell.content());
                e = self.mul_exact(&e, &ys[k - 1].sub(&HeckeElement::scalar(self.m, &rho)));
                denom *= &sigma - &rho;
            }
            e = e.scale(&denom.recip());
        }
        Ok(e)
    }
}

fn pow_big(x: &BigInt, k: usize) -> BigInt {
    num_traits::pow(x.clone(), k)
}

/// The defining relations and the identities for longest elements and
/// Jucys–Murphy elements, each as an exact element identity.
pub fn relation_suite(alg: &HeckeAlgebra) -> Vec<Check> {
    let m = alg.arity();
    let p = alg.params().clone();
    let mut out = Vec::new();
    let t = |i: usize| alg.gen::<Rational>(i);
    let one = alg.one::<Rational>();
    for i in 1..m {
        // (T_i - 1)(T_i + r/s) = 0
        let lhs = alg.mul(&t(i).sub(&one), &t(i).add(&one.scale(&p.q_inv())));
        out.push(Check::new(format!("H3 quadratic T{i}"), lhs.is_zero()));
        let inv = alg.gen_inverse::<Rational>(i);
        out.push(Check::new(
            format!("T{i} inverse"),
            alg.mul(&t(i), &inv) == one && alg.mul(&inv, &t(i)) == one,
        ));
        if i + 1 < m {
            let lhs = alg.t_word::<Rational>(&[i, i + 1, i]);
            let rhs = alg.t_word::<Rational>(&[i + 1, i, i + 1]);
            out.push(Check::new(format!("H1 braid T{i}T{}T{i}", i + 1), lhs == rhs));
        }
        for j in i + 2..m {
            let lhs = alg.mul(&t(i), &t(j));
            let rhs = alg.mul(&t(j), &t(i));
            out.push(Check::new(format!("H2 T{i}T{j} = T{j}T{i}"), lhs == rhs));
        }
    }
    let ys = alg.jm_elements();
    for k in 1..=m {
        let w = alg.t_longest::<Rational>(k);
        let winv = alg.t_longest_inverse::<Rational>(k);
        out.push(Check::new(
            format!("T_w{k} inverse"),
            alg.mul(&w, &winv) == one,
        ));
        for j in 1..k {
            let lhs = alg.mul(&w, &t(j));
            let rhs = alg.mul(&t(k - j), &w);
            out.push(Check::new(format!("T_w{k} T{j} = T{} T_w{k}", k - j), lhs == rhs));
        }
        // T_{w_k}^2 = (r/s)^{k(k-1)/2} y_1 ⋯ y_k with y_{k+1} = (s/r) T_k y_k T_k
        let exp = k * (k - 1) / 2;
        let rhs = jm_product(alg, &ys[..k]).scale(&pow_i64(&p.q_inv(), exp as i64));
        out.push(Check::new(
            format!("T_w{k}^2 = (r/s)^{exp} y_1..y_{k}"),
            alg.mul(&w, &w) == rhs,
        ));
    }
    for a in 0..m {
        for b in a + 1..m {
            let ok = alg.mul(&ys[a], &ys[b]) == alg.mul(&ys[b], &ys[a]);
            out.push(Check::new(format!("y{} y{} commute", a + 1, b + 1), ok));
        }
        for l in 1..m {
            let k = a + 1;
            if l != k && l + 1 != k {
                let ok = alg.mul(&ys[a], &t(l)) == alg.mul(&t(l), &ys[a]);
                out.push(Check::new(format!("y{k} T{l} = T{l} y{k}"), ok));
            }
        }
    }
    out
}

/// `y_1 y_2 ⋯ y_k`.
pub fn jm_product(alg: &HeckeAlgebra, ys: &[HeckeElement<Rational>]) -> HeckeElement<Rational> {
    ys.iter().fold(alg.one(), |acc, y| alg.mul(&acc, y))
}

/// Idempotency, pairwise orthogonality and completeness of a family of
/// idempotents indexed by tableaux.
pub fn family_checks(
    alg: &HeckeAlgebra,
    family: &[(StandardTableau, HeckeElement<Rational>)],
) -> Vec<Check> {
    let n = family.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let results: Vec<Check> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let prod = alg.mul_exact(&family[a].1, &family[b].1);
            if a == b {
                Check::new(format!("E[{}]^2 = E[{}]", family[a].0, family[a].0), prod == family[a].1)
            } else {
                Check::new(
                    format!("E[{}] E[{}] = 0", family[a].0, family[b].0),
                    prod.is_zero(),
                )
            }
        })
        .collect();
    let total = family
        .iter()
        .fold(HeckeElement::zero(alg.arity()), |acc, (_, e)| acc.add(e));
    let mut out = results;
    out.push(Check::new("sum of idempotents = 1", total == alg.one()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;
    use crate::tableaux::{longest_element, partitions};

    fn alg(m: usize) -> HeckeAlgebra {
        HeckeAlgebra::new(m, Params::default())
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(alg(4).permutations().count(), 24);
        let lengths: Vec<usize> = alg(3).permutations().map(Permutation::length).collect();
        assert!(lengths.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn exact_product_matches_generic_product() {
        for p in [Params::default(), Params::new(rat(-3, 1), rat(7, 2)).unwrap()] {
            let h = HeckeAlgebra::new(4, p);
            let ys = h.jm_elements();
            let a = ys[3].add(&h.gen::<Rational>(2).scale(&rat(5, 7)));
            let b = ys[2].sub(&h.t_word::<Rational>(&[1, 3, 2]).scale(&rat(-2, 9)));
            assert_eq!(h.mul_exact(&a, &b), h.mul(&a, &b));
            assert_eq!(h.mul_exact(&b, &a), h.mul(&b, &a));
            assert!(h.mul_exact(&a, &HeckeElement::zero(4)).is_zero());
        }
    }

    #[test]
    fn quadratic_relation_on_generator() {
        // T_1 T_1 = (1 - r/s) T_1 + r/s at r=2, s=3
        let h = alg(2);
        let sq = h.mul(&h.gen::<Rational>(1), &h.gen(1));
        let expected = h
            .gen::<Rational>(1)
            .scale(&rat(1, 3))
            .add(&HeckeElement::scalar(2, &rat(2, 3)));
        assert_eq!(sq, expected);
    }

    #[test]
    fn length_increasing_product() {
        let h = alg(3);
        let a = h.t_word::<Rational>(&[1, 2]);
        assert_eq!(h.mul_gen(&a, 1), h.t_perm(&perm("321")));
    }

    #[test]
    fn length_decreasing_product() {
        // s1 s2 s1 · s2 = s2 s1, so
        // T_{s1 s2 s1} T_2 = (1 - r/s) T_{s1 s2 s1} + (r/s) T_{s2 s1}
        let h = alg(3);
        let w = h.t_word::<Rational>(&[1, 2, 1]);
        let got = h.mul_gen(&w, 2);
        let s2s1 = Permutation::from_word(3, &[2, 1]);
        assert_eq!(s2s1.to_string(), "312");
        let expected = w
            .scale(&rat(1, 3))
            .add(&h.t_perm::<Rational>(&s2s1).scale(&rat(2, 3)));
        assert_eq!(got, expected);
    }

    #[test]
    fn t_word_independent_of_reduced_word() {
        let h = alg(3);
        assert_eq!(h.t_word::<Rational>(&[]), h.one());
        assert_eq!(h.t_word::<Rational>(&[1, 2, 1]), h.t_word::<Rational>(&[2, 1, 2]));
        assert_eq!(
            h.t_longest::<Rational>(3),
            h.t_perm(&longest_element(3))
        );
        let expected = h.mul(&h.mul(&h.gen::<Rational>(1), &h.gen(2)), &h.gen(1));
        assert_eq!(h.t_longest::<Rational>(3), expected);
    }

    #[test]
    fn generator_inverse() {
        let h = alg(2);
        let inv = h.gen_inverse::<Rational>(1);
        // (s/r) T_1 + (1 - s/r) = 3/2 T_1 - 1/2
        let expected = h
            .gen::<Rational>(1)
            .scale(&rat(3, 2))
            .add(&HeckeElement::scalar(2, &rat(-1, 2)));
        assert_eq!(inv, expected);
        assert_eq!(h.mul(&inv, &h.gen(1)), h.one());

        // r = q, s = 1/q with q = 2: q^{-2} T_1 + (1 - q^{-2})
        let hq = HeckeAlgebra::new(2, Params::new(rat(2, 1), rat(1, 2)).unwrap());
        let expected = hq
            .gen::<Rational>(1)
            .scale(&rat(1, 4))
            .add(&HeckeElement::scalar(2, &rat(3, 4)));
        assert_eq!(hq.gen_inverse::<Rational>(1), expected);
    }

    #[test]
    fn longest_elements() {
        let h = alg(3);
        assert_eq!(h.t_longest::<Rational>(1), h.one());
        assert_eq!(h.t_longest::<Rational>(2), h.gen(1));
        let w = h.t_longest::<Rational>(3);
        let ys = h.jm_elements();
        let prod = jm_product(&h, &ys);
        // exponent 3 = C(3,2); the exponent k-1 = 2 does not give an identity
        assert_eq!(h.mul(&w, &w), prod.scale(&rat(8, 27)));
        assert_ne!(h.mul(&w, &w), prod.scale(&rat(4, 9)));
        assert_eq!(h.mul(&w, &h.t_longest_inverse(3)), h.one());
    }

    #[test]
    fn jucys_murphy() {
        let h = alg(4);
        assert_eq!(h.jm(1), h.one());
        // y_2 = (s/r - 1) T_1 + 1
        let expected = h
            .gen::<Rational>(1)
            .scale(&rat(1, 2))
            .add(&h.one());
        assert_eq!(h.jm(2), expected);
        let y2 = h.jm(2);
        assert_eq!(h.mul(&y2, &h.gen(3)), h.mul(&h.gen(3), &y2));
    }

    #[test]
    fn inductive_idempotents_small() {
        let h = alg(2);
        // (s T_1 + r)/(r + s) = (3 T_1 + 2)/5
        let e = h.jm_idempotent(&tab("1,2")).unwrap();
        let expected = h
            .gen::<Rational>(1)
            .scale(&rat(3, 5))
            .add(&HeckeElement::scalar(2, &rat(2, 5)));
        assert_eq!(e, expected);
        // s/(r+s) (1 - T_1)
        let e = h.jm_idempotent(&tab("1;2")).unwrap();
        let expected = h.one::<Rational>().sub(&h.gen(1)).scale(&rat(3, 5));
        assert_eq!(e, expected);

        let h1 = alg(1);
        assert_eq!(h1.jm_idempotent(&tab("1")).unwrap(), h1.one());
    }

    #[test]
    fn idempotent_acts_by_content() {
        let h = alg(3);
        let y3 = h.jm(3);
        for t in crate::tableaux::partitions(3)
            .iter()
            .flat_map(|l| l.standard_tableaux())
        {
            let e = h.jm_idempotent(&t).unwrap();
            let sigma = h.params().content(*t.content_exponents().last().unwrap());
            assert_eq!(h.mul(&e, &y3), e.scale(&sigma));
        }
    }

    #[test]
    fn relations_hold_m4() {
        let checks = relation_suite(&alg(4));
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn family_m3_complete_orthogonal() {
        let h = alg(3);
        let family: Vec<_> = partitions(3)
            .iter()
            .flat_map(|l| l.standard_tableaux())
            .map(|t| {
                let e = h.jm_idempotent(&t).unwrap();
                (t, e)
            })
            .collect();
        assert_eq!(family.len(), 4);
        assert!(family_checks(&h, &family).iter().all(|c| c.passed));
    }

    #[test]
    fn json_round_trip() {
        let h = alg(2);
        let e = h.jm_idempotent(&tab("1,2")).unwrap();
        let json = e.to_json();
        assert_eq!(json.to_string(), r#"{"12":"2/5","21":"3/5"}"#);
        assert_eq!(HeckeElement::from_json(2, &json).unwrap(), e);
        assert!(HeckeElement::from_json(3, &json).is_err());
    }
}
