//! The fusion procedure.
//!
//! The Baxterized generators are
//!
//! ```text
//! T_i(x, y) = s T_i + (s - r) x / (y - x)
//! ```
//!
//! and the Hecke-valued rational function is
//!
//! ```text
//! Ψ(u_1, …, u_m) = ∏_{k=1}^{m-1} [T_k(u_1, u_{k+1}) T_{k-1}(u_2, u_{k+1}) ⋯ T_1(u_k, u_{k+1})] · T_{w_m}^{-1}
//! ```
//!
//! For a standard tableau `T` of shape `λ` with contents `c_1, …, c_m`, the
//! primitive idempotent is `f(λ) Ψ` evaluated consecutively at
//! `u_k = (s/r)^{c_k}`, `k = 1, …, m`.

use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::{pow_i64, FactoredFraction, LinearFactor, MultiPoly, Params, Rational};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::tableaux::{partitions, Partition, Permutation, StandardTableau};

/// An argument of a Baxterized generator: a spectral variable `u_k` or a number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spectral {
    Var(usize),
    Value(Rational),
}

/// `(s - r) x / (y - x)` as a fraction with a monic linear denominator.
fn baxter_scalar(params: &Params, x: &Spectral, y: &Spectral) -> Result<FactoredFraction> {
    let sr = params.s() - params.r();
    match (x, y) {
        (Spectral::Value(a), Spectral::Value(b)) => {
            if a == b {
                return Err(Error::SingularPoint(format!("x = y = {a}")));
            }
            Ok(FactoredFraction::constant(sr * a / (b - a)))
        }
        (Spectral::Var(a), Spectral::Var(b)) => {
            let (negated, f) = LinearFactor::var_diff(*b, *a)
                .ok_or_else(|| Error::SingularPoint(format!("x = y = u{a}")))?;
            let num = MultiPoly::var(*a).scale(&if negated { -sr } else { sr });
            Ok(FactoredFraction::new(num, [f]))
        }
        (Spectral::Var(a), Spectral::Value(c)) => {
            let f = LinearFactor::Shift {
                var: *a,
                root: c.clone(),
            };
            Ok(FactoredFraction::new(MultiPoly::var(*a).scale(&-sr), [f]))
        }
        (Spectral::Value(c), Spectral::Var(b)) => {
            let f = LinearFactor::Shift {
                var: *b,
                root: c.clone(),
            };
            Ok(FactoredFraction::new(MultiPoly::constant(sr * c), [f]))
        }
    }
}

/// The Baxterized generator `T_i(x, y)` in `H_m`.
pub fn baxterized(
    alg: &HeckeAlgebra,
    i: usize,
    x: &Spectral,
    y: &Spectral,
) -> Result<HeckeElement<FactoredFraction>> {
    let c = baxter_scalar(alg.params(), x, y)?;
    let s = FactoredFraction::constant(alg.params().s().clone());
    Ok(alg.mul_affine_gen(&alg.one(), i, &s, &c))
}

/// `Ψ(u_1, …, u_m)` as a Hecke element with fraction coefficients.
pub fn psi(alg: &HeckeAlgebra) -> HeckeElement<FactoredFraction> {
    let m = alg.arity();
    let s = FactoredFraction::constant(alg.params().s().clone());
    let mut e = alg.one::<FactoredFraction>();
    for k in 1..m {
        for j in 1..=k {
            let c = baxter_scalar(alg.params(), &Spectral::Var(j), &Spectral::Var(k + 1))
                .expect("distinct variables");
            e = alg.mul_affine_gen(&e, k + 1 - j, &s, &c);
        }
    }
    alg.mul_longest_inverse(&e, m)
}

/// The normalizing constant
///
/// ```text
/// f(λ) = (s/r)^{b(λ')} s^{-m(m-1)/2} (1 - s/r)^m ∏_α (1 - (s/r)^{h_α})^{-1}
/// ```
///
/// where `b(μ) = Σ (i - 1) μ_i` and `h_α` runs over the hook lengths of `λ`.
pub fn f_const(params: &Params, lambda: &Partition) -> Rational {
    let q = params.q();
    let m = lambda.weight() as i64;
    let mut f = pow_i64(&q, lambda.conjugate().b_stat() as i64)
        * pow_i64(params.s(), -(m * (m - 1) / 2))
        * pow_i64(&(Rational::one() - &q), m);
    for h in lambda.hooks().values() {
        f /= Rational::one() - pow_i64(&q, *h as i64);
    }
    f
}

/// Substitutes `u_k := values[k-1]` for `k = 1, 2, …` in order, cancelling
/// poles on the way.
pub fn evaluate_consecutive(
    element: &HeckeElement<FactoredFraction>,
    values: &[Rational],
) -> Result<HeckeElement<Rational>> {
    let terms: Vec<(&Permutation, &FactoredFraction)> = element.terms().collect();
    let evaluated: Result<Vec<(Permutation, Rational)>> = terms
        .par_iter()
        .map(|(sigma, c)| {
            let mut c = (*c).clone();
            for (k, v) in values.iter().enumerate() {
                c = c.substitute_consecutive(k + 1, v)?;
            }
            let value = c
                .as_constant()
                .ok_or_else(|| Error::SingularPoint(format!("coefficient {c} not constant")))?;
            Ok(((*sigma).clone(), value))
        })
        .collect();
    let mut out = HeckeElement::zero(element.arity());
    for (sigma, value) in evaluated? {
        out.add_term(sigma, value);
    }
    Ok(out)
}

/// `Ψ` for a fixed arity and parameter pair, built once and evaluated per
/// tableau.
pub struct Fusion {
    alg: HeckeAlgebra,
    psi: HeckeElement<FactoredFraction>,
}

impl Fusion {
    pub fn new(m: usize, params: Params) -> Self {
        let alg = HeckeAlgebra::new(m, params);
        let psi = psi(&alg);
        Fusion { alg, psi }
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.alg
    }

    pub fn psi(&self) -> &HeckeElement<FactoredFraction> {
        &self.psi
    }

    /// `Ψ` evaluated consecutively at the contents of `tableau`, without the
    /// normalizing constant.
    pub fn evaluate_at(&self, tableau: &StandardTableau) -> Result<HeckeElement<Rational>> {
        if tableau.size() != self.alg.arity() {
            return Err(Error::ArityMismatch {
                expected: self.alg.arity(),
                found: tableau.size(),
            });
        }
        let params = self.alg.params();
        let values: Vec<Rational> = tableau
            .content_exponents()
            .into_iter()
            .map(|c| params.content(c))
            .collect();
        evaluate_consecutive(&self.psi, &values)
    }

    /// The fused idempotent `E_T^λ = f(λ) Ψ(σ_1, …, σ_m)`.
    pub fn idempotent(
        &self,
        lambda: &Partition,
        tableau: &StandardTableau,
    ) -> Result<HeckeElement<Rational>> {
        tableau.check_shape(lambda)?;
        let e = self.evaluate_at(tableau)?;
        Ok(e.scale(&f_const(self.alg.params(), lambda)))
    }
}

/// The fused idempotent for a single tableau.
pub fn fused_idempotent(
    params: &Params,
    lambda: &Partition,
    tableau: &StandardTableau,
) -> Result<HeckeElement<Rational>> {
    tableau.check_shape(lambda)?;
    Fusion::new(lambda.weight(), params.clone()).idempotent(lambda, tableau)
}

/// How primitive idempotents are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Consecutive evaluation of `f(λ) Ψ`.
    #[default]
    Fusion,
    /// The Jucys–Murphy recursion.
    Jm,
    /// Both, compared exactly; the fused element is returned.
    Both,
}

/// Computes idempotents for a fixed arity by the chosen method.
pub struct IdempotentSource {
    method: Method,
    alg: HeckeAlgebra,
    fusion: Option<Fusion>,
}

impl IdempotentSource {
    pub fn new(m: usize, params: Params, method: Method) -> Self {
        let fusion = match method {
            Method::Jm => None,
            Method::Fusion | Method::Both => Some(Fusion::new(m, params.clone())),
        };
        IdempotentSource {
            method,
            alg: HeckeAlgebra::new(m, params),
            fusion,
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.alg
    }

    /// The idempotent for `(λ, T)`, and with [`Method::Both`] whether the two
    /// methods agree.
    pub fn idempotent(
        &self,
        lambda: &Partition,
        tableau: &StandardTableau,
    ) -> Result<(HeckeElement<Rational>, Option<bool>)> {
        tableau.check_shape(lambda)?;
        match (self.method, &self.fusion) {
            (Method::Jm, _) => Ok((self.alg.jm_idempotent(tableau)?, None)),
            (Method::Fusion, Some(f)) => Ok((f.idempotent(lambda, tableau)?, None)),
            (Method::Both, Some(f)) => {
                let fused = f.idempotent(lambda, tableau)?;
                let equal = fused == self.alg.jm_idempotent(tableau)?;
                Ok((fused, Some(equal)))
            }
            _ => unreachable!("fusion context exists for fusion-based methods"),
        }
    }
}

/// One comparison between the fused and the inductive idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionComparison {
    pub lambda: String,
    pub tableau: String,
    pub equal: bool,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Compares fused and inductive idempotents for every standard tableau of
/// the given shapes. Results come back in shape order, then tableau order.
pub fn compare_shapes(fusion: &Fusion, shapes: &[Partition]) -> Vec<FusionComparison> {
    let jobs: Vec<(Partition, StandardTableau)> = shapes
        .iter()
        .flat_map(|l| l.standard_tableaux().into_iter().map(move |t| (l.clone(), t)))
        .collect();
    jobs.par_iter()
        .map(|(lambda, t)| {
            let start = Instant::now();
            let outcome = fusion
                .idempotent(lambda, t)
                .and_then(|e| Ok(e == fusion.algebra().jm_idempotent(t)?));
            let millis = start.elapsed().as_millis() as u64;
            let (equal, error) = match outcome {
                Ok(eq) => (eq, None),
                Err(e) => (false, Some(e.to_string())),
            };
            FusionComparison {
                lambda: lambda.to_string(),
                tableau: t.to_string(),
                equal,
                millis,
                error,
            }
        })
        .collect()
}

/// Compares fused and inductive idempotents for every standard tableau with
/// `m` boxes.
pub fn verify_fusion_equals_jm(m: usize, params: &Params) -> Vec<FusionComparison> {
    let fusion = Fusion::new(m, params.clone());
    compare_shapes(&fusion, &partitions(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn p() -> Params {
        Params::default()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn val(q: Rational) -> Spectral {
        Spectral::Value(q)
    }

    fn to_rational(e: &HeckeElement<FactoredFraction>) -> HeckeElement<Rational> {
        e.try_map(|c| c.as_constant().ok_or(Error::SingularPoint(c.to_string())))
            .unwrap()
    }

    #[test]
    fn baxterized_at_special_points() {
        let alg = HeckeAlgebra::new(2, p());
        let one = val(rat(1, 1));
        // (1, s/r) gives s T_1 + r
        let e = to_rational(&baxterized(&alg, 1, &one, &val(p().q())).unwrap());
        let expected = alg.gen::<Rational>(1).scale(&rat(3, 1)).add(&HeckeElement::scalar(2, &rat(2, 1)));
        assert_eq!(e, expected);
        // (1, r/s) gives s T_1 - s
        let e = to_rational(&baxterized(&alg, 1, &one, &val(p().q_inv())).unwrap());
        let expected = alg.gen::<Rational>(1).scale(&rat(3, 1)).sub(&HeckeElement::scalar(2, &rat(3, 1)));
        assert_eq!(e, expected);
    }

    #[test]
    fn baxterized_singular() {
        let alg = HeckeAlgebra::new(2, p());
        assert!(matches!(
            baxterized(&alg, 1, &val(rat(2, 1)), &val(rat(2, 1))),
            Err(Error::SingularPoint(_))
        ));
        assert!(baxterized(&alg, 1, &Spectral::Var(1), &Spectral::Var(1)).is_err());
    }

    #[test]
    fn baxterized_braid_relation() {
        for m in 3..=4 {
            let alg = HeckeAlgebra::new(m, p());
            let (x, y, z) = (Spectral::Var(1), Spectral::Var(2), Spectral::Var(3));
            for i in 1..m - 1 {
                let b = |k: usize, a: &Spectral, c: &Spectral| baxterized(&alg, k, a, c).unwrap();
                let lhs = alg.mul(&alg.mul(&b(i, &x, &y), &b(i + 1, &x, &z)), &b(i, &y, &z));
                let rhs = alg.mul(&alg.mul(&b(i + 1, &y, &z), &b(i, &x, &z)), &b(i + 1, &x, &y));
                assert!(lhs == rhs, "m={m} i={i}");
            }
        }
    }

    #[test]
    fn baxterized_braid_relation_mixed_arguments() {
        let alg = HeckeAlgebra::new(3, p());
        let (x, y, z) = (val(rat(1, 1)), Spectral::Var(2), val(rat(5, 7)));
        let b = |k: usize, a: &Spectral, c: &Spectral| baxterized(&alg, k, a, c).unwrap();
        let lhs = alg.mul(&alg.mul(&b(1, &x, &y), &b(2, &x, &z)), &b(1, &y, &z));
        let rhs = alg.mul(&alg.mul(&b(2, &y, &z), &b(1, &x, &z)), &b(2, &x, &y));
        assert!(lhs == rhs);
    }

    #[test]
    fn psi_small() {
        let alg = HeckeAlgebra::new(1, p());
        assert!(psi(&alg) == alg.one());

        // m = 2: s + (s - r) u_1 / (u_2 - u_1) T_1^{-1}
        let alg = HeckeAlgebra::new(2, p());
        let c = baxter_scalar(alg.params(), &Spectral::Var(1), &Spectral::Var(2)).unwrap();
        let expected = HeckeElement::scalar(2, &rat(3, 1))
            .add(&alg.gen_inverse::<FactoredFraction>(1).scale_by(&c));
        assert!(psi(&alg) == expected);

        let at = evaluate_consecutive(&psi(&alg), &[rat(1, 1), p().q()]).unwrap();
        let expected = alg.gen::<Rational>(1).scale(&rat(3, 1)).add(&HeckeElement::scalar(2, &rat(2, 1)));
        assert_eq!(at, expected);
    }

    #[test]
    fn normalizing_constants() {
        let (r, s) = (rat(2, 1), rat(3, 1));
        assert_eq!(f_const(&p(), &part("2")), (&r + &s).recip());
        assert_eq!(f_const(&p(), &part("1,1")), &r / (&s * (&r + &s)));
        let expected = &r * &r * &r / ((&s + &r) * (&s * &s + &r * &s + &r * &r) * &s * &s * &s);
        assert_eq!(f_const(&p(), &part("1,1,1")), expected);
    }

    #[test]
    fn row_idempotent_m2() {
        let alg = HeckeAlgebra::new(2, p());
        let e = fused_idempotent(&p(), &part("2"), &tab("1,2")).unwrap();
        // (s T_1 + r) / (r + s)
        let expected = alg.gen::<Rational>(1).scale(&rat(3, 5)).add(&HeckeElement::scalar(2, &rat(2, 5)));
        assert_eq!(e, expected);
    }

    #[test]
    fn column_idempotent_m3() {
        let alg = HeckeAlgebra::new(3, p());
        let e = fused_idempotent(&p(), &part("1,1,1"), &tab("1;2;3")).unwrap();
        let (r, s) = (rat(2, 1), rat(3, 1));
        let c = &s * &s * &s / ((&s + &r) * (&s * &s + &r * &s + &r * &r));
        let t = |w: &[usize]| alg.t_word::<Rational>(w);
        let alt = t(&[])
            .sub(&t(&[1]))
            .sub(&t(&[2]))
            .add(&t(&[1, 2]))
            .add(&t(&[2, 1]))
            .sub(&t(&[1, 2, 1]));
        assert_eq!(e, alt.scale(&c));
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(matches!(
            fused_idempotent(&p(), &part("2"), &tab("1;2")),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn fused_equals_inductive_up_to_four() {
        for (m, count) in [(1, 1), (2, 2), (3, 4), (4, 10)] {
            let report = verify_fusion_equals_jm(m, &p());
            assert_eq!(report.len(), count);
            assert!(report.iter().all(|c| c.equal), "{report:?}");
        }
    }

    #[test]
    fn other_parameters() {
        let params = Params::new(rat(-3, 1), rat(7, 2)).unwrap();
        assert!(verify_fusion_equals_jm(3, &params).iter().all(|c| c.equal));
    }

    #[test]
    fn idempotent_source_methods() {
        let (l, t) = (part("2,1"), tab("1,3;2"));
        let jm = IdempotentSource::new(3, p(), Method::Jm).idempotent(&l, &t).unwrap();
        let fu = IdempotentSource::new(3, p(), Method::Fusion).idempotent(&l, &t).unwrap();
        let both = IdempotentSource::new(3, p(), Method::Both).idempotent(&l, &t).unwrap();
        assert_eq!(jm.0, fu.0);
        assert_eq!((jm.1, fu.1), (None, None));
        assert_eq!(both, (fu.0, Some(true)));
    }

    #[test]
    fn report_json() {
        let report = verify_fusion_equals_jm(2, &p());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json[0]["lambda"], "2");
        assert_eq!(json[0]["tableau"], "1,2");
        assert_eq!(json[0]["equal"], true);
        assert!(json[0].get("error").is_none());
        let back: Vec<FusionComparison> = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }
}
