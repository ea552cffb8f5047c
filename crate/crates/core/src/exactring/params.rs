use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, pow_i64, rat, Rational};
use crate::error::{Error, Result};

/// The parameter pair `(r, s)`.
///
/// Construction enforces `r, s ≠ 0` and `r ≠ ±s`. A rational ratio other than
/// `±1` is never a root of unity, so every Hecke algebra built from a valid
/// pair is semisimple and all content differences used below are invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    r: Rational,
    s: Rational,
}

impl Params {
    pub fn new(r: Rational, s: Rational) -> Result<Self> {
        if r.is_zero() || s.is_zero() {
            return Err(Error::ZeroParameter);
        }
        if r == s || r == -s.clone() {
            return Err(Error::DegenerateParameters);
        }
        Ok(Params { r, s })
    }

    pub fn from_ints(r: i64, s: i64) -> Result<Self> {
        Params::new(rat(r, 1), rat(s, 1))
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// `s/r`, the base of all contents.
    pub fn q(&self) -> Rational {
        &self.s / &self.r
    }

    /// `r/s`.
    pub fn q_inv(&self) -> Rational {
        &self.r / &self.s
    }

    /// The `(r,s)`-content `(s/r)^c` of a cell with diagonal exponent `c`.
    pub fn content(&self, c: i64) -> Rational {
        pow_i64(&self.q(), c)
    }

    /// `1 - r/s`, the linear coefficient of the quadratic relation.
    pub fn quad_linear(&self) -> Rational {
        Rational::one() - self.q_inv()
    }
}

impl Default for Params {
    /// `r = 2, s = 3`.
    fn default() -> Self {
        Params::from_ints(2, 3).expect("2 and 3 are admissible")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} s={}", format_rational(&self.r), format_rational(&self.s))
    }
}
