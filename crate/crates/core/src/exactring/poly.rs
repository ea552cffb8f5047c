use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector over `u_1, u_2, …`; entry `k` is the exponent of
/// `u_{k+1}`. Trailing zeros are always trimmed, so equal monomials have equal
/// representations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `u_var^exp`, `var` 1-based.
    pub fn var_pow(var: usize, exp: u16) -> Self {
        let mut v = vec![0; var];
        v[var - 1] = exp;
        Monomial(v).trimmed()
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.0.get(var - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut v = long.clone();
        for (a, b) in v.iter_mut().zip(short) {
            *a += b;
        }
        Monomial(v)
    }

    fn with_exponent(&self, var: usize, exp: u16) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < var {
            v.resize(var, 0);
        }
        v[var - 1] = exp;
        Monomial(v).trimmed()
    }

    /// Largest variable index with a positive exponent, 0 for the constant.
    pub fn max_var(&self) -> usize {
        self.0.len()
    }

    /// Smallest variable index with a positive exponent.
    pub fn min_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0).map(|i| i + 1)
    }
}

/// Sparse polynomial with rational coefficients in `u_1, u_2, …`.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// `u_var`.
    pub fn var(var: usize) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var_pow(var, 1), Rational::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> MultiPoly {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multiplication by `u_var`.
    pub fn mul_var(&self, var: usize) -> MultiPoly {
        let x = Monomial::var_pow(var, 1);
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(&x), c.clone())).collect(),
        }
    }

    /// Largest variable index that occurs, 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    /// Smallest variable index that occurs.
    pub fn min_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::min_var).min()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Value at `u_k = values[k-1]`; variables beyond `values` must not occur.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `u_var := value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> MultiPoly {
        let mut powers: Vec<Rational> = vec![Rational::one()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out.add_term(m.with_exponent(var, 0), c * &powers[e]);
        }
        out
    }

    /// Splits into `Σ_k c_k · u_var^k`, keyed by `k`.
    fn coefficients_in(&self, var: usize) -> BTreeMap<u16, MultiPoly> {
        let mut out: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(var))
                .or_default()
                .add_term(m.with_exponent(var, 0), c.clone());
        }
        out
    }
}

/// Exact quotient of `p` by `u_var - root`.
///
/// Synthetic division with `p` viewed as a polynomial in `u_var` whose
/// coefficients are polynomials in the other variables. A nonzero remainder
/// is an error, never truncated.
pub fn divide_linear(p: &MultiPoly, var: usize, root: &Rational) -> Result<MultiPoly> {
    let (quotient, remainder) = synthetic_division(p, var, &MultiPoly::constant(root.clone()));
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder {
            var,
            root: root.clone(),
        });
    }
    Ok(quotient)
}

/// Quotient and remainder of `p` by `u_var - root`, where `root` must not
/// involve `u_var`.
pub(crate) fn synthetic_division(
    p: &MultiPoly,
    var: usize,
    root: &MultiPoly,
) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coefficients_in(var);
    let Some(&deg) = coeffs.keys().next_back() else {
        return (MultiPoly::zero(), MultiPoly::zero());
    };
    let mut quotient = MultiPoly::zero();
    // carry = q_{k-1} = c_k + root * q_k, running from the top degree down
    let mut carry = MultiPoly::zero();
    for k in (0..=deg).rev() {
        let mut next = carry.mul(root);
        if let Some(c) = coeffs.get(&k) {
            next.add_assign(c);
        }
        if k == 0 {
            return (quotient, next);
        }
        let x = Monomial::var_pow(var, k - 1);
        for (m, c) in &next.terms {
            quotient.add_term(m.mul(&x), c.clone());
        }
        carry = next;
    }
    unreachable!("loop returns at k = 0")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("u{}", i + 1)
                    } else {
                        format!("u{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn u(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    fn c(p: i64) -> MultiPoly {
        MultiPoly::constant(rat(p, 1))
    }

    #[test]
    fn divide_exact() {
        // u_2^2 - 1 = (u_2 - 1)(u_2 + 1)
        let p = u(2).mul(&u(2)).sub(&c(1));
        assert_eq!(divide_linear(&p, 2, &rat(1, 1)).unwrap(), u(2).add(&c(1)));

        let p = u(2).sub(&c(1)).mul(&u(2).add(&u(3)));
        assert_eq!(divide_linear(&p, 2, &rat(1, 1)).unwrap(), u(2).add(&u(3)));
    }

    #[test]
    fn divide_nonzero_remainder() {
        let p = u(2).mul(&u(2)).add(&c(1));
        assert_eq!(
            divide_linear(&p, 2, &rat(1, 1)),
            Err(Error::NonzeroRemainder {
                var: 2,
                root: rat(1, 1)
            })
        );
    }

    #[test]
    fn divide_polynomial_free_of_variable() {
        assert!(divide_linear(&u(1), 2, &rat(0, 1)).is_err());
        assert_eq!(divide_linear(&MultiPoly::zero(), 2, &rat(3, 1)).unwrap(), MultiPoly::zero());
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = u(1).mul(&u(2)).add(&c(3)); // u1 u2 + 3
        let q = p.substitute(1, &rat(2, 1));
        assert_eq!(q, u(2).scale(&rat(2, 1)).add(&c(3)));
        assert_eq!(p.evaluate(&[rat(2, 1), rat(5, 1)]), rat(13, 1));
        assert_eq!(q.max_var(), 2);
        assert_eq!(q.min_var(), Some(2));
    }

    #[test]
    fn display() {
        let p = u(1).mul(&u(1)).scale(&rat(3, 2)).sub(&u(2)).add(&c(-1));
        assert_eq!(p.to_string(), "3/2*u1^2 - u2 - 1");
    }
}
