use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`, with an optional leading `-` (ASCII or U+2212).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let digits = |x: &str| -> Result<BigInt> {
        if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    let value = match body.split_once('/') {
        Some((p, q)) => {
            let q = digits(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Rational::new(digits(p)?, q)
        }
        None => Rational::from_integer(digits(body)?),
    };
    Ok(if neg { -value } else { value })
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub fn pow_i64(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("−7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational(" 1/2 ").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn format_forms() {
        assert_eq!(format_rational(&rat(-3, 5)), "-3/5");
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }

    #[test]
    fn powers() {
        assert_eq!(pow_i64(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow_i64(&rat(2, 3), 0), rat(1, 1));
        assert_eq!(pow_i64(&rat(-2, 1), 3), rat(-8, 1));
    }
}
