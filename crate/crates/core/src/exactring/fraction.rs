use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{divide_linear, synthetic_division, MultiPoly};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// A monic linear denominator factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinearFactor {
    /// `u_hi - u_lo` with `lo < hi`.
    VarDiff { hi: usize, lo: usize },
    /// `u_var - root`.
    Shift { var: usize, root: Rational },
}

impl LinearFactor {
    /// `u_a - u_b`, returned as a sign and a canonical factor.
    /// `None` when `a == b`.
    pub fn var_diff(a: usize, b: usize) -> Option<(bool, LinearFactor)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some((false, LinearFactor::VarDiff { hi: a, lo: b })),
            std::cmp::Ordering::Less => Some((true, LinearFactor::VarDiff { hi: b, lo: a })),
        }
    }

    pub fn as_poly(&self) -> MultiPoly {
        match self {
            LinearFactor::VarDiff { hi, lo } => MultiPoly::var(*hi).sub(&MultiPoly::var(*lo)),
            LinearFactor::Shift { var, root } => {
                MultiPoly::var(*var).sub(&MultiPoly::constant(root.clone()))
            }
        }
    }

    fn times(&self, p: &MultiPoly) -> MultiPoly {
        match self {
            LinearFactor::VarDiff { hi, lo } => p.mul_var(*hi).sub(&p.mul_var(*lo)),
            LinearFactor::Shift { var, root } => p.mul_var(*var).sub(&p.scale(root)),
        }
    }

    fn evaluate(&self, values: &[Rational]) -> Rational {
        match self {
            LinearFactor::VarDiff { hi, lo } => &values[hi - 1] - &values[lo - 1],
            LinearFactor::Shift { var, root } => &values[var - 1] - root,
        }
    }

    /// Exact quotient `p / self`, if it exists.
    fn divide(&self, p: &MultiPoly) -> Option<MultiPoly> {
        let (q, rem) = match self {
            LinearFactor::VarDiff { hi, lo } => synthetic_division(p, *hi, &MultiPoly::var(*lo)),
            LinearFactor::Shift { var, root } => {
                synthetic_division(p, *var, &MultiPoly::constant(root.clone()))
            }
        };
        rem.is_zero().then_some(q)
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearFactor::VarDiff { hi, lo } => write!(f, "(u{hi} - u{lo})"),
            LinearFactor::Shift { var, root } => {
                if root < &Rational::zero() {
                    write!(f, "(u{var} + {})", format_rational(&-root))
                } else {
                    write!(f, "(u{var} - {})", format_rational(root))
                }
            }
        }
    }
}

/// `numerator / ∏ factors`, with the denominator kept as a multiset of linear
/// factors.
///
/// Combining two fractions takes the multiset maximum of their denominators, so
/// no polynomial gcd is ever needed. Numerators are not reduced against the
/// denominator unless [`FactoredFraction::normalized`] is called; equality is
/// decided by cross-multiplication and never depends on it.
#[derive(Debug, Clone, Default)]
pub struct FactoredFraction {
    num: MultiPoly,
    den: BTreeMap<LinearFactor, u32>,
}

impl FactoredFraction {
    pub fn zero() -> Self {
        FactoredFraction::default()
    }

    pub fn one() -> Self {
        FactoredFraction::from_poly(MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        FactoredFraction::from_poly(MultiPoly::constant(c))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        FactoredFraction {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn new(num: MultiPoly, factors: impl IntoIterator<Item = LinearFactor>) -> Self {
        let mut den = BTreeMap::new();
        if !num.is_zero() {
            for f in factors {
                *den.entry(f).or_insert(0) += 1;
            }
        }
        FactoredFraction { num, den }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<LinearFactor, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is empty.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The value of a fraction with empty denominator and constant numerator.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn lcm_den(&self, other: &FactoredFraction) -> BTreeMap<LinearFactor, u32> {
        let mut l = self.den.clone();
        for (f, &k) in &other.den {
            let e = l.entry(f.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        l
    }

    /// Numerator rewritten over the larger denominator `l`.
    fn lift(&self, l: &BTreeMap<LinearFactor, u32>) -> MultiPoly {
        let mut num = self.num.clone();
        for (f, &k) in l {
            let have = self.den.get(f).copied().unwrap_or(0);
            for _ in have..k {
                num = f.times(&num);
            }
        }
        num
    }

    pub fn add(&self, other: &FactoredFraction) -> FactoredFraction {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return FactoredFraction::new_with_den(self.num.add(&other.num), self.den.clone());
        }
        let l = self.lcm_den(other);
        let num = self.lift(&l).add(&other.lift(&l));
        FactoredFraction::new_with_den(num, l)
    }

    pub fn sub(&self, other: &FactoredFraction) -> FactoredFraction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FactoredFraction {
        FactoredFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &FactoredFraction) -> FactoredFraction {
        if self.is_zero() || other.is_zero() {
            return FactoredFraction::zero();
        }
        let mut den = self.den.clone();
        for (f, &k) in &other.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        FactoredFraction::new_with_den(self.num.mul(&other.num), den)
    }

    pub fn scale(&self, q: &Rational) -> FactoredFraction {
        FactoredFraction::new_with_den(self.num.scale(q), self.den.clone())
    }

    fn new_with_den(num: MultiPoly, den: BTreeMap<LinearFactor, u32>) -> FactoredFraction {
        if num.is_zero() {
            FactoredFraction::zero()
        } else {
            FactoredFraction { num, den }
        }
    }

    /// Equality of rational functions, by cross-multiplication.
    pub fn equals(&self, other: &FactoredFraction) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let l = self.lcm_den(other);
        self.lift(&l) == other.lift(&l)
    }

    /// Value at `u_k = values[k-1]`, or `None` at a pole of the stored form.
    pub fn evaluate(&self, values: &[Rational]) -> Option<Rational> {
        let mut den = Rational::one();
        for (f, &k) in &self.den {
            let v = f.evaluate(values);
            if v.is_zero() {
                return None;
            }
            for _ in 0..k {
                den *= &v;
            }
        }
        Some(self.num.evaluate(values) / den)
    }

    /// Cancels every denominator factor that exactly divides the numerator.
    pub fn normalized(&self) -> FactoredFraction {
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (f, &k) in &self.den {
            let mut left = k;
            while left > 0 {
                match f.divide(&num) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(f.clone(), left);
            }
        }
        FactoredFraction::new_with_den(num, den)
    }

    /// Smallest variable index that still occurs.
    pub fn min_var(&self) -> Option<usize> {
        let from_den = self.den.keys().map(|f| match f {
            LinearFactor::VarDiff { lo, .. } => *lo,
            LinearFactor::Shift { var, .. } => *var,
        });
        self.num.min_var().into_iter().chain(from_den).min()
    }

    /// Substitutes `u_var := value`, cancelling poles at `value` first.
    ///
    /// `var` must be the smallest variable still present. Each denominator
    /// factor `(u_var - value)` is removed by one exact division of the
    /// numerator; if that division leaves a remainder, the function is not
    /// regular at this point and [`Error::NonzeroRemainder`] is returned.
    pub fn substitute_consecutive(&self, var: usize, value: &Rational) -> Result<FactoredFraction> {
        if let Some(lowest) = self.min_var() {
            if lowest < var {
                return Err(Error::OutOfOrderSubstitution { var });
            }
        }
        if self.is_zero() {
            return Ok(FactoredFraction::zero());
        }
        let mut num = self.num.clone();
        let mut den: BTreeMap<LinearFactor, u32> = BTreeMap::new();
        let mut divisor = Rational::one();
        for (f, &k) in &self.den {
            match f {
                LinearFactor::Shift { var: v, root } if *v == var => {
                    if root == value {
                        for _ in 0..k {
                            num = divide_linear(&num, var, value)?;
                        }
                    } else {
                        let d = value - root;
                        for _ in 0..k {
                            divisor *= &d;
                        }
                    }
                }
                LinearFactor::VarDiff { hi, lo } if *lo == var => {
                    let g = LinearFactor::Shift {
                        var: *hi,
                        root: value.clone(),
                    };
                    *den.entry(g).or_insert(0) += k;
                }
                _ => {
                    *den.entry(f.clone()).or_insert(0) += k;
                }
            }
        }
        let num = num.substitute(var, value).scale(&divisor.recip());
        Ok(FactoredFraction::new_with_den(num, den))
    }
}

impl PartialEq for FactoredFraction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for FactoredFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (factor, &k) in &self.den {
            write!(f, "{factor}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn u(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    fn c(q: Rational) -> MultiPoly {
        MultiPoly::constant(q)
    }

    fn d(hi: usize, lo: usize) -> LinearFactor {
        LinearFactor::VarDiff { hi, lo }
    }

    fn sh(var: usize, root: Rational) -> LinearFactor {
        LinearFactor::Shift { var, root }
    }

    #[test]
    fn add_over_common_denominator() {
        // u1/(u2-u1) + 1 = u2/(u2-u1)
        let a = FactoredFraction::new(u(1), [d(2, 1)]);
        let sum = a.add(&FactoredFraction::one());
        assert_eq!(sum, FactoredFraction::new(u(2), [d(2, 1)]));
        assert_eq!(sum.numerator(), &u(2));

        let x = FactoredFraction::new(c(rat(5, 3)), [d(2, 1)]);
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn add_distinct_denominators() {
        // 1/(u2-1) + 1/(u2-2) = (2u2-3)/((u2-1)(u2-2))
        let a = FactoredFraction::new(MultiPoly::one(), [sh(2, rat(1, 1))]);
        let b = FactoredFraction::new(MultiPoly::one(), [sh(2, rat(2, 1))]);
        let sum = a.add(&b);
        let expected = FactoredFraction::new(
            u(2).scale(&rat(2, 1)).sub(&c(rat(3, 1))),
            [sh(2, rat(1, 1)), sh(2, rat(2, 1))],
        );
        assert_eq!(sum.numerator(), expected.numerator());
        assert_eq!(sum.denominator(), expected.denominator());
    }

    #[test]
    fn multiplication() {
        let x = FactoredFraction::new(u(3), [d(3, 2)]);
        assert_eq!(x.mul(&FactoredFraction::one()), x);

        let a = FactoredFraction::new(u(2).sub(&c(rat(1, 1))), [d(3, 1)]);
        let b = FactoredFraction::new(u(3).sub(&u(1)), [sh(2, rat(1, 1))]);
        let prod = a.mul(&b);
        assert!(!prod.is_polynomial());
        assert_eq!(prod, FactoredFraction::one());
        assert_eq!(prod.normalized().as_constant(), Some(rat(1, 1)));

        let a = FactoredFraction::new(u(1), [d(2, 1)]);
        let b = FactoredFraction::new(u(2), [d(3, 2)]);
        let prod = a.mul(&b);
        assert_eq!(prod.numerator(), &u(1).mul(&u(2)));
        assert_eq!(prod.denominator().len(), 2);
    }

    #[test]
    fn substitution_cancels_pole() {
        // (u2-1)(u2+u3)/(u2-1) at u2 = 1 -> 1 + u3
        let num = u(2).sub(&c(rat(1, 1))).mul(&u(2).add(&u(3)));
        let f = FactoredFraction::new(num, [sh(2, rat(1, 1))]);
        let g = f.substitute_consecutive(2, &rat(1, 1)).unwrap();
        assert!(g.is_polynomial());
        assert_eq!(g.numerator(), &u(3).add(&c(rat(1, 1))));
    }

    #[test]
    fn substitution_regular_points() {
        // u1/(u2-u1) with u1 = 1, then u2 = 3 -> 1/2
        let f = FactoredFraction::new(u(1), [d(2, 1)]);
        let f = f.substitute_consecutive(1, &rat(1, 1)).unwrap();
        let f = f.substitute_consecutive(2, &rat(3, 1)).unwrap();
        assert_eq!(f.as_constant(), Some(rat(1, 2)));

        // (u2-2)/(u2-1) at u2 = 2 -> 0
        let f = FactoredFraction::new(u(2).sub(&c(rat(2, 1))), [sh(2, rat(1, 1))]);
        let g = f.substitute_consecutive(2, &rat(2, 1)).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn substitution_rejects_singular_and_out_of_order() {
        let f = FactoredFraction::new(u(2), [sh(2, rat(1, 1))]);
        assert!(matches!(
            f.substitute_consecutive(2, &rat(1, 1)),
            Err(Error::NonzeroRemainder { var: 2, .. })
        ));
        let f = FactoredFraction::new(u(1), [d(2, 1)]);
        assert_eq!(
            f.substitute_consecutive(2, &rat(1, 1)).unwrap_err(),
            Error::OutOfOrderSubstitution { var: 2 }
        );
    }

    #[test]
    fn normalization_cancels_var_differences() {
        let num = u(3).sub(&u(1)).mul(&u(2));
        let f = FactoredFraction::new(num, [d(3, 1), d(3, 2)]);
        let g = f.normalized();
        assert_eq!(g.denominator().len(), 1);
        assert_eq!(f, g);
    }

    #[test]
    fn var_diff_orientation() {
        assert_eq!(LinearFactor::var_diff(3, 1), Some((false, d(3, 1))));
        assert_eq!(LinearFactor::var_diff(1, 3), Some((true, d(3, 1))));
        assert_eq!(LinearFactor::var_diff(2, 2), None);
    }
}
