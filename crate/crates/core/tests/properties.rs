use num_traits::Zero;
use proptest::prelude::*;
use uqrs::exactring::{divide_linear, rat, FactoredFraction, LinearFactor, Monomial, MultiPoly};
use uqrs::fusion::fused_idempotent;
use uqrs::hecke::{HeckeAlgebra, HeckeElement};
use uqrs::linalg::{kernel_basis, op_rank, LinOp};
use uqrs::qalgebra::{spectral_ybe, two_parameter_ybe};
use uqrs::tableaux::{partitions, Permutation};
use uqrs::{Params, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn params() -> impl Strategy<Value = Params> {
    (nonzero_rational(), nonzero_rational())
        .prop_filter_map("gate", |(r, s)| Params::new(r, s).ok())
}

/// Polynomial in `u_1, u_2, u_3` of degree at most 2 in each variable.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), small_rational()), 0..6).prop_map(
        |terms| {
            MultiPoly::from_terms(
                terms
                    .into_iter()
                    .map(|((a, b, c), q)| (Monomial::from_exponents(vec![a, b, c]), q)),
            )
        },
    )
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 3)
}

fn hecke_element(alg: &HeckeAlgebra, coeffs: &[Rational]) -> HeckeElement<Rational> {
    let mut e = HeckeElement::zero(alg.arity());
    for (p, c) in alg.permutations().zip(coeffs) {
        e.add_term(p.clone(), c.clone());
    }
    e
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), len)
}

/// Rank by dense Gaussian elimination over the rationals.
fn dense_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_by_linear_factor(p in poly(), var in 1usize..=3, root in small_rational()) {
        let factor = MultiPoly::var(var).sub(&MultiPoly::constant(root.clone()));
        let product = p.mul(&factor);
        prop_assert_eq!(divide_linear(&product, var, &root).unwrap(), p.clone());
        let shifted = p.add(&MultiPoly::one());
        if !shifted.substitute(var, &root).is_zero() {
            prop_assert!(divide_linear(&shifted, var, &root).is_err());
        }
    }

    #[test]
    fn fraction_arithmetic_matches_evaluation(
        a in poly(),
        b in poly(),
        c in small_rational(),
        x in point(),
    ) {
        let f = FactoredFraction::new(
            a,
            [
                LinearFactor::VarDiff { hi: 2, lo: 1 },
                LinearFactor::Shift { var: 3, root: c },
            ],
        );
        let g = FactoredFraction::new(b, [LinearFactor::VarDiff { hi: 3, lo: 1 }]);
        if let (Some(fv), Some(gv)) = (f.evaluate(&x), g.evaluate(&x)) {
            prop_assert_eq!(f.add(&g).evaluate(&x), Some(&fv + &gv));
            prop_assert_eq!(f.mul(&g).evaluate(&x), Some(&fv * &gv));
            prop_assert_eq!(f.sub(&g).evaluate(&x), Some(&fv - &gv));
        }
        prop_assert!(f.add(&g).equals(&g.add(&f)));
        prop_assert!(f.sub(&f).equals(&FactoredFraction::zero()));
    }

    #[test]
    fn consecutive_substitution_matches_evaluation(
        a in poly(),
        c in small_rational(),
        x in point(),
    ) {
        let f = FactoredFraction::new(
            a,
            [
                LinearFactor::VarDiff { hi: 3, lo: 2 },
                LinearFactor::Shift { var: 1, root: c },
            ],
        );
        if let Some(expected) = f.evaluate(&x) {
            let mut g = f.clone();
            for (k, v) in x.iter().enumerate() {
                g = g.substitute_consecutive(k + 1, v).unwrap();
            }
            prop_assert_eq!(g.as_constant(), Some(expected));
        }
    }

    #[test]
    fn hecke_products(p in params(), a in coeffs(6), b in coeffs(6), c in coeffs(6)) {
        let alg = HeckeAlgebra::new(3, p.clone());
        let (a, b, c) = (hecke_element(&alg, &a), hecke_element(&alg, &b), hecke_element(&alg, &c));
        let ab = alg.mul(&a, &b);
        prop_assert_eq!(alg.mul(&ab, &c), alg.mul(&a, &alg.mul(&b, &c)));
        prop_assert_eq!(alg.mul_exact(&a, &b), ab);
        prop_assert_eq!(alg.mul_exact(&c, &a), alg.mul(&c, &a));

        // (T_i - 1)(T_i + r/s) = 0
        for i in 1..3 {
            let t = alg.gen::<Rational>(i);
            let left = t.sub(&alg.one());
            let right = t.add(&HeckeElement::scalar(3, &p.q_inv()));
            prop_assert!(alg.mul(&left, &right).is_zero());
        }
    }

    #[test]
    fn reduced_words_rebuild_permutations(v in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_one_line(v).unwrap();
        let word = p.reduced_word();
        prop_assert_eq!(word.len(), p.length());
        prop_assert_eq!(Permutation::from_word(6, &word), p);
    }

    #[test]
    fn rank_matches_dense_elimination(
        entries in prop::collection::vec(-2i64..=2, 20),
        rows in 1usize..=5,
    ) {
        let cols = 20 / rows;
        let dense: Vec<Vec<Rational>> = (0..rows)
            .map(|i| (0..cols).map(|j| rat(entries[i * cols + j], 1)).collect())
            .collect();
        let triplets = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, dense[i][j].clone()));
        let op = LinOp::from_entries(rows, cols, triplets);
        let rank = op_rank(&op);
        prop_assert_eq!(rank, dense_rank(dense));
        let kernel = kernel_basis(&op);
        prop_assert_eq!(kernel.len(), cols - rank);
        for v in &kernel {
            prop_assert!(op.apply(v).is_empty());
        }
    }

    #[test]
    fn fused_idempotents_match_jucys_murphy(p in params()) {
        let alg = HeckeAlgebra::new(3, p.clone());
        for lambda in partitions(3) {
            for t in lambda.standard_tableaux() {
                let fused = fused_idempotent(&p, &lambda, &t).unwrap();
                prop_assert_eq!(fused, alg.jm_idempotent(&t).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn braid_relations_with_spectral_parameters(
        p in params(),
        z in nonzero_rational(),
        w in nonzero_rational(),
        xyz in prop::collection::vec(nonzero_rational(), 3),
    ) {
        prop_assert!(spectral_ybe(2, &p, &z, &w));
        let (x, y, z) = (&xyz[0], &xyz[1], &xyz[2]);
        if x != y && y != z && x != z {
            prop_assert!(two_parameter_ybe(2, &p, x, y, z).unwrap());
        }
    }
}

#[test]
fn partition_identities() {
    for m in 1..=7usize {
        let factorial: u128 = (1..=m as u128).product();
        let parts = partitions(m);
        assert_eq!(parts.iter().map(|l| l.num_standard().pow(2)).sum::<u128>(), factorial);
        for l in &parts {
            assert_eq!(&l.conjugate().conjugate(), l);
            assert_eq!(l.conjugate().num_standard(), l.num_standard());
        }
        for n in 1..=4usize {
            let total: u128 = parts
                .iter()
                .map(|l| l.num_standard() * l.hook_content_dim(n))
                .sum();
            assert_eq!(total, (n as u128).pow(m as u32));
        }
    }
}
