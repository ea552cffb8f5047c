//! Hecke idempotents acting on `V^{⊗m}`: images, weight multiplicities,
//! highest-weight vectors and the Schur–Weyl audit.
//!
//! `H_m(r,s)` acts on `V^{⊗m}` by `T_i ↦ Ř_i`. The image of a primitive
//! idempotent `E_T^λ` is the irreducible module of highest weight `λ` when
//! `λ` has at most `n` rows, and zero otherwise.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{all_passed, Check};
use crate::error::Result;
use crate::exactring::{format_rational, Params, Rational};
use crate::fusion::{IdempotentSource, Method};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::linalg::{image_basis, rank, relations, span_basis, LinOp, SparseVec};
use crate::qalgebra::{
    coproduct_rep, embed_at, rcheck, weight_eigenvalues, Generator, GlWeight, Representation,
    TensorSpace,
};
use crate::tableaux::{compositions, kostka, partitions, Partition, Permutation, StandardTableau};

/// `ρ(T_σ)` for every `σ ∈ S_m`, on `V^{⊗m}`.
pub struct HeckeRep {
    space: TensorSpace,
    ops: HashMap<Permutation, LinOp>,
}

impl HeckeRep {
    pub fn new(alg: &HeckeAlgebra, n: usize) -> Self {
        let m = alg.arity();
        let space = TensorSpace::new(n, m);
        let rc = rcheck(n, alg.params());
        let gens: Vec<LinOp> = (1..m).map(|i| embed_at(&rc, n, i, m)).collect();
        let mut ops = HashMap::new();
        ops.insert(Permutation::identity(m), LinOp::identity(space.dim()));
        for (sigma, parent, i) in alg.build_order() {
            let op = ops[parent].compose(&gens[i - 1]);
            ops.insert(sigma.clone(), op);
        }
        HeckeRep { space, ops }
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn basis_op(&self, sigma: &Permutation) -> &LinOp {
        &self.ops[sigma]
    }

    /// `ρ(h) = Σ_σ h_σ ρ(T_σ)`.
    pub fn action(&self, h: &HeckeElement<Rational>) -> LinOp {
        let d = self.space.dim();
        h.terms()
            .fold(LinOp::zero(d, d), |acc, (sigma, c)| acc.add_scaled(&self.ops[sigma], c))
    }

    /// Dimension of the span of all `ρ(T_σ)`.
    pub fn span_dim(&self) -> usize {
        let flat: Vec<SparseVec> = self.ops.values().map(LinOp::flatten).collect();
        rank(&flat)
    }
}

/// `ρ(h)` on `V^{⊗m}`.
pub fn hecke_action(h: &HeckeElement<Rational>, n: usize, params: &Params) -> LinOp {
    HeckeRep::new(&HeckeAlgebra::new(h.arity(), params.clone()), n).action(h)
}

/// The span of `basis` split into weight spaces by letter content.
pub fn weight_components(
    basis: &[SparseVec],
    space: &TensorSpace,
) -> BTreeMap<GlWeight, Vec<SparseVec>> {
    let mut parts: BTreeMap<GlWeight, Vec<SparseVec>> = BTreeMap::new();
    for v in basis {
        let mut split: BTreeMap<GlWeight, SparseVec> = BTreeMap::new();
        for (&i, x) in v {
            split.entry(space.content(i)).or_default().insert(i, x.clone());
        }
        for (mu, piece) in split {
            parts.entry(mu).or_default().push(piece);
        }
    }
    parts
        .into_iter()
        .map(|(mu, vs)| (mu, span_basis(&vs)))
        .filter(|(_, vs)| !vs.is_empty())
        .collect()
}

/// Dimension of each weight space of the span of `basis`.
pub fn weight_multiplicities(basis: &[SparseVec], space: &TensorSpace) -> BTreeMap<GlWeight, usize> {
    weight_components(basis, space)
        .into_iter()
        .map(|(mu, vs)| (mu, vs.len()))
        .collect()
}

/// A vector killed by every `e_i`, with its letter-content weight and the
/// eigenvalues of `(ω_i, ω_i')` measured on it (`None` if it is not an
/// eigenvector).
#[derive(Debug, Clone, PartialEq)]
pub struct HighestWeightVector {
    pub vector: SparseVec,
    pub weight: GlWeight,
    pub eigenvalues: Vec<Option<(Rational, Rational)>>,
}

/// `c` with `op v = c v`, if `v` is a nonzero eigenvector.
fn eigenvalue(op: &LinOp, v: &SparseVec) -> Option<Rational> {
    let (&i, x) = v.iter().next()?;
    let w = op.apply(v);
    let c = w.get(&i).cloned().unwrap_or_else(Rational::zero) / x;
    let scaled: SparseVec = v
        .iter()
        .map(|(&k, y)| (k, y * &c))
        .filter(|(_, y)| !y.is_zero())
        .collect();
    (scaled == w).then_some(c)
}

/// A basis of the vectors in the span of `basis` killed by every `e_i`,
/// chosen inside weight spaces.
pub fn highest_weight_vectors(basis: &[SparseVec], rep: &Representation) -> Vec<HighestWeightVector> {
    let space = rep.space();
    let n = space.n;
    let d = space.dim();
    let mut out = Vec::new();
    for (mu, block) in weight_components(basis, &space) {
        let images: Vec<SparseVec> = block
            .iter()
            .map(|b| {
                let mut stacked = SparseVec::new();
                for i in 1..n {
                    for (k, x) in rep.get(Generator::E(i)).apply(b) {
                        stacked.insert((i - 1) * d + k, x);
                    }
                }
                stacked
            })
            .collect();
        for c in relations(&images, (n - 1) * d) {
            let mut v = SparseVec::new();
            for (cj, b) in c.iter().zip(&block) {
                crate::linalg::add_scaled(&mut v, b, cj);
            }
            let eigenvalues = (1..n)
                .map(|i| {
                    let a = eigenvalue(rep.get(Generator::Omega(i)), &v)?;
                    let b = eigenvalue(rep.get(Generator::OmegaPrime(i)), &v)?;
                    Some((a, b))
                })
                .collect();
            out.push(HighestWeightVector {
                vector: v,
                weight: mu.clone(),
                eigenvalues,
            });
        }
    }
    out
}

/// Whether `op` commutes with every generator in `rep`.
pub fn commutes_with_u_action(op: &LinOp, rep: &Representation) -> bool {
    rep.generators().all(|(_, g)| op.commutator(g).is_zero())
}

/// The image of one idempotent on `V^{⊗m}` and the checks that certify it
/// as the irreducible module of highest weight `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub lambda: String,
    pub tableau: String,
    pub n: usize,
    pub rank: usize,
    pub predicted_dim: u128,
    pub weight_multiplicities: BTreeMap<String, usize>,
    pub highest_weight: Option<GlWeight>,
    pub hw_eigenvalues: Vec<(String, String)>,
    pub highest_weight_vectors: Vec<BTreeMap<String, String>>,
    pub checks: Vec<Check>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Builds the report for the image of `e = E_T^λ`, given its action `op`.
pub fn module_report(
    lambda: &Partition,
    tableau: &StandardTableau,
    op: &LinOp,
    rep: &Representation,
    params: &Params,
) -> ModuleReport {
    let space = rep.space();
    let (n, m) = (space.n, space.m);
    let basis = image_basis(op);
    let predicted = lambda.hook_content_dim(n);
    let mults = weight_multiplicities(&basis, &space);
    let kostka_ok = compositions(m, n).into_iter().all(|mu| {
        let got = mults.get(&GlWeight(mu.clone())).copied().unwrap_or(0);
        got as u128 == kostka(lambda, &mu)
    });
    let hw = highest_weight_vectors(&basis, rep);
    let expected_weight = GlWeight::padded(lambda.parts(), n);
    let hw_unique = if basis.is_empty() { hw.is_empty() } else { hw.len() == 1 };
    let expected_eigs: Option<Vec<(Rational, Rational)>> =
        expected_weight.as_ref().map(|w| weight_eigenvalues(w, params));
    let (weight_ok, eig_ok) = match (hw.first(), &expected_weight, &expected_eigs) {
        (None, _, _) => (basis.is_empty(), basis.is_empty()),
        (Some(h), Some(w), Some(eigs)) => {
            let measured: Option<Vec<(Rational, Rational)>> = h.eigenvalues.iter().cloned().collect();
            (&h.weight == w, measured.as_ref() == Some(eigs))
        }
        _ => (false, false),
    };
    let hw_eigenvalues = match (hw.first(), hw.len()) {
        (Some(h), 1) => h
            .eigenvalues
            .iter()
            .flatten()
            .map(|(a, b)| (format_rational(a), format_rational(b)))
            .collect(),
        _ => Vec::new(),
    };
    let checks = vec![
        Check::new("rank = hook-content dimension", basis.len() as u128 == predicted),
        Check::new("weight multiplicities = Kostka numbers", kostka_ok),
        Check::new("unique highest-weight line", hw_unique),
        Check::new("highest weight = lambda", weight_ok),
        Check::new("highest-weight eigenvalues match weight formula", eig_ok),
        Check::new("idempotent on V^m", op.compose(op) == *op),
        Check::new("commutes with U action", commutes_with_u_action(op, rep)),
    ];
    ModuleReport {
        lambda: lambda.to_string(),
        tableau: tableau.to_string(),
        n,
        rank: basis.len(),
        predicted_dim: predicted,
        weight_multiplicities: mults.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        highest_weight: if hw.len() == 1 { Some(hw[0].weight.clone()) } else { None },
        hw_eigenvalues,
        highest_weight_vectors: hw.iter().map(|h| space.vector_json(&h.vector)).collect(),
        checks,
    }
}

/// The module `E_T^λ (V^{⊗m})` with the idempotent computed by `method`.
pub fn module_of(
    lambda: &Partition,
    tableau: &StandardTableau,
    n: usize,
    params: &Params,
    method: Method,
) -> Result<ModuleReport> {
    tableau.check_shape(lambda)?;
    let source = IdempotentSource::new(lambda.weight(), params.clone(), method);
    let (e, agree) = source.idempotent(lambda, tableau)?;
    let hrep = HeckeRep::new(source.algebra(), n);
    let urep = coproduct_rep(n, lambda.weight(), params);
    let mut report = module_report(lambda, tableau, &hrep.action(&e), &urep, params);
    if let Some(ok) = agree {
        report.checks.push(Check::new("fusion = Jucys-Murphy", ok));
    }
    Ok(report)
}

/// Result of the Schur–Weyl audit on `V^{⊗m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: usize,
    pub m: usize,
    /// `n^m = Σ f^λ dim V(λ)`, written out term by term.
    pub dimension_count: String,
    pub commutant_dim: usize,
    pub modules: Vec<ModuleReport>,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks) && self.modules.iter().all(ModuleReport::passed)
    }
}

/// Checks the decomposition of `V^{⊗m}` by the idempotents `E_T^λ`:
/// dimensions, completeness, orthogonality, ranks, module structure and
/// the dimension of the image of `H_m(r,s)`.
pub fn schur_weyl_audit(n: usize, m: usize, params: &Params, method: Method) -> Result<AuditReport> {
    let source = IdempotentSource::new(m, params.clone(), method);
    let hrep = HeckeRep::new(source.algebra(), n);
    let urep = coproduct_rep(n, m, params);
    let shapes = partitions(m);
    let jobs: Vec<(Partition, StandardTableau)> = shapes
        .iter()
        .flat_map(|l| l.standard_tableaux().into_iter().map(move |t| (l.clone(), t)))
        .collect();
    let computed: Vec<(LinOp, ModuleReport)> = jobs
        .par_iter()
        .map(|(lambda, t)| -> Result<(LinOp, ModuleReport)> {
            let (e, agree) = source.idempotent(lambda, t)?;
            let op = hrep.action(&e);
            let mut report = module_report(lambda, t, &op, &urep, params);
            if let Some(ok) = agree {
                report.checks.push(Check::new("fusion = Jucys-Murphy", ok));
            }
            Ok((op, report))
        })
        .collect::<Result<_>>()?;

    let dim = hrep.space().dim();
    let mut checks = Vec::new();

    let mut terms = Vec::new();
    let mut total: u128 = 0;
    for lambda in &shapes {
        let (f, d) = (lambda.num_standard(), lambda.hook_content_dim(n));
        total += f * d;
        terms.push(if f == 1 { d.to_string() } else { format!("{f}·{d}") });
    }
    let dimension_count = format!("{} = {}", dim, terms.join(" + "));
    checks.push(Check::new(
        "n^m = sum of f^lambda * hook-content dimension",
        total == dim as u128,
    ));

    let ranks: usize = computed.iter().map(|(_, r)| r.rank).sum();
    checks.push(Check::new("sum of ranks = n^m", ranks == dim));

    let sum = computed
        .iter()
        .fold(LinOp::zero(dim, dim), |acc, (op, _)| acc.add(op));
    checks.push(Check::new("sum of rho(E) = Id", sum == LinOp::identity(dim)));

    let k = computed.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
    let orthogonal = pairs.par_iter().all(|&(a, b)| {
        let prod = computed[a].0.compose(&computed[b].0);
        if a == b {
            prod == computed[a].0
        } else {
            prod.is_zero()
        }
    });
    checks.push(Check::new("rho(E) rho(E') = delta rho(E)", orthogonal));

    let commutant_dim = hrep.span_dim();
    let expected: u128 = shapes
        .iter()
        .filter(|l| l.len() <= n)
        .map(|l| l.num_standard() * l.num_standard())
        .sum();
    checks.push(Check::new(
        "dim rho(H_m) = sum of (f^lambda)^2",
        commutant_dim as u128 == expected,
    ));
    if n >= m {
        let factorial: usize = (1..=m).product();
        checks.push(Check::new("dim rho(H_m) = m!", commutant_dim == factorial));
    }

    Ok(AuditReport {
        n,
        m,
        dimension_count,
        commutant_dim,
        modules: computed.into_iter().map(|(_, r)| r).collect(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;
    use crate::linalg::same_span;
    use crate::qalgebra::{sym2_basis, wedge2_basis};

    fn p() -> Params {
        Params::default()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn idem(lambda: &str, t: &str) -> HeckeElement<Rational> {
        let l = part(lambda);
        IdempotentSource::new(l.weight(), p(), Method::Jm)
            .idempotent(&l, &tab(t))
            .unwrap()
            .0
    }

    #[test]
    fn action_of_generators() {
        let alg = HeckeAlgebra::new(2, p());
        assert_eq!(hecke_action(&alg.one(), 2, &p()), LinOp::identity(4));
        let t1 = hecke_action(&alg.gen(1), 2, &p());
        assert_eq!(t1, rcheck(2, &p()));
        let lhs = t1.compose(&t1);
        let rhs = t1.scale(&p().quad_linear()).add(&LinOp::identity(4).scale(&p().q_inv()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_and_wedge_images() {
        let sym = image_basis(&hecke_action(&idem("2", "1,2"), 2, &p()));
        assert_eq!(sym.len(), 3);
        assert!(same_span(&sym, &sym2_basis(2, &p())));
        let wedge = image_basis(&hecke_action(&idem("1,1", "1;2"), 2, &p()));
        assert!(same_span(&wedge, &wedge2_basis(2, &p())));
        let space = TensorSpace::new(2, 2);
        let mults = weight_multiplicities(&wedge, &space);
        assert_eq!(mults, BTreeMap::from([(GlWeight(vec![1, 1]), 1)]));
    }

    #[test]
    fn full_space_weights_and_highest_weights() {
        let space = TensorSpace::new(2, 2);
        let basis = image_basis(&LinOp::identity(4));
        let mults = weight_multiplicities(&basis, &space);
        assert_eq!(
            mults,
            BTreeMap::from([
                (GlWeight(vec![2, 0]), 1),
                (GlWeight(vec![1, 1]), 2),
                (GlWeight(vec![0, 2]), 1)
            ])
        );
        let hw = highest_weight_vectors(&basis, &coproduct_rep(2, 2, &p()));
        assert_eq!(hw.len(), 2);
    }

    #[test]
    fn highest_weight_of_wedge() {
        let rep = coproduct_rep(2, 2, &p());
        let basis = image_basis(&hecke_action(&idem("1,1", "1;2"), 2, &p()));
        let hw = highest_weight_vectors(&basis, &rep);
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].weight, GlWeight(vec![1, 1]));
        assert_eq!(hw[0].eigenvalues, vec![Some((rat(6, 1), rat(6, 1)))]);
        let v = &hw[0].vector;
        let space = rep.space();
        let ratio = &v[&space.index(&[2, 1])] / &v[&space.index(&[1, 2])];
        assert_eq!(ratio, rat(-2, 1));
    }

    #[test]
    fn module_examples() {
        let r = module_of(&part("2"), &tab("1,2"), 2, &p(), Method::Fusion).unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.highest_weight, Some(GlWeight(vec![2, 0])));
        assert_eq!(r.hw_eigenvalues, vec![("4".to_string(), "9".to_string())]);

        let r = module_of(&part("1,1,1"), &tab("1;2;3"), 2, &p(), Method::Jm).unwrap();
        assert_eq!(r.rank, 0);
        assert!(r.passed());
        assert_eq!(r.highest_weight, None);

        let r = module_of(&part("2,1"), &tab("1,2;3"), 3, &p(), Method::Both).unwrap();
        assert_eq!(r.rank, 8);
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.highest_weight, Some(GlWeight(vec![2, 1, 0])));
        // (r²s, rs²) and (r, s)
        assert_eq!(r.hw_eigenvalues[0], ("12".to_string(), "18".to_string()));
        assert_eq!(r.hw_eigenvalues[1], ("2".to_string(), "3".to_string()));
        assert_eq!(r.weight_multiplicities["(1,1,1)"], 2);
        assert_eq!(r.weight_multiplicities["(2,1,0)"], 1);
    }

    #[test]
    fn tableaux_of_one_shape_give_isomorphic_weights() {
        let a = module_of(&part("2,1"), &tab("1,2;3"), 3, &p(), Method::Jm).unwrap();
        let b = module_of(&part("2,1"), &tab("1,3;2"), 3, &p(), Method::Jm).unwrap();
        assert_eq!(a.weight_multiplicities, b.weight_multiplicities);
    }

    #[test]
    fn non_equivariant_map_detected() {
        let rep = coproduct_rep(2, 2, &p());
        let op = crate::qalgebra::matrix_unit(2, 1, 2).kron(&LinOp::identity(2));
        assert!(!commutes_with_u_action(&op, &rep));
        assert!(commutes_with_u_action(&rcheck(2, &p()), &rep));
    }

    #[test]
    fn audits() {
        let a = schur_weyl_audit(2, 2, &p(), Method::Jm).unwrap();
        assert!(a.passed(), "{:?}", a.checks);
        assert_eq!(a.dimension_count, "4 = 3 + 1");
        assert_eq!(a.commutant_dim, 2);

        let a = schur_weyl_audit(2, 3, &p(), Method::Fusion).unwrap();
        assert!(a.passed());
        assert_eq!(a.dimension_count, "8 = 4 + 2·2 + 0");

        let a = schur_weyl_audit(3, 3, &p(), Method::Both).unwrap();
        assert!(a.passed());
        assert_eq!(a.dimension_count, "27 = 10 + 2·8 + 1");
        assert_eq!(a.commutant_dim, 6);
    }

    #[test]
    fn report_round_trip() {
        let r = module_of(&part("2,1"), &tab("1,3;2"), 3, &p(), Method::Jm).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: ModuleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
