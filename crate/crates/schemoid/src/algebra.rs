//! Finite-dimensional algebras over exact scalars: category algebras,
//! Bose-Mesner algebras, the linearized quotient category, Stanley-Reisner
//! comparisons, centers and Hochschild cohomology.

use crate::constructors::{
    simplicial_map_morphism, simplicial_schemoid, PowersetSchemoid, SimplicialComplex,
};
use crate::fincat::FinCat;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::schemoid::{Schemoid, TamenessReport};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    Unit(usize),
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map does not preserve the unit")]
    UnitNotPreserved,
    #[error("schemoid is not tame")]
    NotTame(TamenessReport),
    #[error("dimension guard exceeded: {0}")]
    Guard(String),
}

/// A finite-dimensional associative unital algebra, presented by a sparse
/// structure tensor on a chosen basis: e_i · e_j = Σ_k c^k_{ij} e_k.
#[derive(Debug, Clone)]
pub struct FDAlgebra {
    pub field: Field,
    pub dim: usize,
    pub labels: Vec<String>,
    /// (i, j) → list of (k, c^k_{ij}); absent key means e_i·e_j = 0.
    pub tensor: HashMap<(usize, usize), Vec<(usize, Scalar)>>,
    pub unit: Vec<Scalar>,
    /// Optional grading of the basis (e.g. by block-key size), used by the
    /// isomorphism heuristics.
    pub grades: Option<Vec<usize>>,
}

impl FDAlgebra {
    pub fn new(
        field: Field,
        labels: Vec<String>,
        tensor: HashMap<(usize, usize), Vec<(usize, Scalar)>>,
        unit: Vec<Scalar>,
    ) -> Result<FDAlgebra, AlgebraError> {
        let a = FDAlgebra { field, dim: labels.len(), labels, tensor, unit, grades: None };
        a.check()?;
        Ok(a)
    }

    fn check(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let left = self.mul(&self.mul_basis(i, j), &basis_vec(self.field, self.dim, k));
                    let right = self.mul(&basis_vec(self.field, self.dim, i), &self.mul_basis(j, k));
                    if left != right {
                        return Err(AlgebraError::Associativity(i, j, k));
                    }
                }
            }
        }
        for i in 0..self.dim {
            let e = basis_vec(self.field, self.dim, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::Unit(i));
            }
        }
        Ok(())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        if let Some(terms) = self.tensor.get(&(i, j)) {
            for (k, c) in terms {
                out[*k] = out[*k].add(c);
            }
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                if let Some(terms) = self.tensor.get(&(i, j)) {
                    let c = ai.mul(bj);
                    for (k, ck) in terms {
                        out[*k] = out[*k].add(&c.mul(ck));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Scalar], n: usize) -> Vec<Scalar> {
        let mut out = self.unit.clone();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// Matrix of left multiplication by the element a.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &basis_vec(self.field, self.dim, j));
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of right multiplication by the element a.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&basis_vec(self.field, self.dim, j), a);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (i + 1..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i))
        })
    }

    /// k[x]/(x^n), basis 1, x, …, x^{n−1}.
    pub fn truncated_polynomial(field: Field, n: usize) -> FDAlgebra {
        assert!(n >= 1);
        let mut tensor = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    tensor.insert((i, j), vec![(i + j, field.one())]);
                }
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        let labels = (0..n).map(|i| format!("x^{i}")).collect();
        let mut a = FDAlgebra::new(field, labels, tensor, unit).expect("truncated polynomial ring");
        a.grades = Some((0..n).collect());
        a
    }

    /// The product field k × ⋯ × k (n factors).
    pub fn product_field(field: Field, n: usize) -> FDAlgebra {
        let tensor = (0..n).map(|i| ((i, i), vec![(i, field.one())])).collect();
        let unit = vec![field.one(); n];
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        FDAlgebra::new(field, labels, tensor, unit).expect("product of fields")
    }
}

pub fn basis_vec(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// The category algebra R𝒞: basis = morphisms, gf = composite when defined
/// else 0, unit = Σ identities.
pub fn category_algebra(cat: &FinCat, field: Field) -> FDAlgebra {
    let n = cat.n_morphisms();
    let mut tensor = HashMap::new();
    for (&(g, f), &gf) in &cat.compose {
        tensor.insert((g, f), vec![(gf, field.one())]);
    }
    let mut unit = vec![field.zero(); n];
    for &e in &cat.identity {
        unit[e] = field.one();
    }
    let labels = (0..n).map(|m| format!("m{m}")).collect();
    FDAlgebra::new(field, labels, tensor, unit).expect("category algebra invariants")
}

/// The group algebra k[G] for a multiplication table with unit 0.
pub fn group_algebra(table: &[Vec<usize>], field: Field) -> FDAlgebra {
    category_algebra(&crate::fincat::one_object_group(table), field)
}

/// The Bose-Mesner algebra R(𝒞, S): basis = blocks σ (standing for Σ_{s∈σ}s),
/// e_σ·e_τ = Σ_μ p^μ_{στ} e_μ. Cross-checked against the expansion of the
/// block sums inside the category algebra.
pub fn bose_mesner(s: &Schemoid, field: Field) -> FDAlgebra {
    let constants = s.structure_constants();
    let nb = s.n_blocks();
    let mut tensor: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
    for (&(sigma, tau, mu), &p) in &constants.table {
        tensor
            .entry((sigma, tau))
            .or_default()
            .push((mu, field.from_int(p as i64)));
    }
    // independent route: expand (Σσ)(Στ) in the category algebra
    let ca = category_algebra(&s.cat, field);
    for sigma in 0..nb {
        for tau in 0..nb {
            let sum_of = |b: usize| {
                let mut v = vec![field.zero(); ca.dim];
                for &m in &s.blocks[b] {
                    v[m] = field.one();
                }
                v
            };
            let expanded = ca.mul(&sum_of(sigma), &sum_of(tau));
            let mut from_tensor = vec![field.zero(); ca.dim];
            if let Some(terms) = tensor.get(&(sigma, tau)) {
                for (mu, c) in terms {
                    for &m in &s.blocks[*mu] {
                        from_tensor[m] = from_tensor[m].add(c);
                    }
                }
            }
            assert_eq!(expanded, from_tensor, "Bose-Mesner defining relation ({sigma}, {tau})");
        }
    }
    let mut unit = vec![field.zero(); nb];
    for class in s.identity_classes() {
        let b = s.block_of[s.cat.identity[class[0]]];
        unit[b] = field.one();
    }
    let labels = (0..nb).map(|b| format!("b{b}")).collect();
    FDAlgebra::new(field, labels, tensor, unit).expect("Bose-Mesner invariants")
}

/// Bose-Mesner algebra of a powerset-difference schemoid, graded by the size
/// of the block key.
pub fn bose_mesner_graded(ps: &PowersetSchemoid, field: Field) -> FDAlgebra {
    let mut a = bose_mesner(&ps.schemoid, field);
    a.grades = Some(ps.block_keys.iter().map(|k| k.len()).collect());
    a
}

/// The total algebra of the linear quotient category R-[𝒞]: basis = blocks,
/// e_τ·e_σ = p^{μ(τ,σ)}_{τσ}·e_μ when τ∘σ is composable in [𝒞] and 0
/// otherwise, unit = Σ identity-class blocks.
pub fn quotient_linear_algebra(s: &Schemoid, field: Field) -> Result<FDAlgebra, AlgebraError> {
    let report = s.tameness_report();
    let Some(mu_table) = report.mu_table.clone().filter(|_| report.tame) else {
        return Err(AlgebraError::NotTame(report));
    };
    let constants = s.structure_constants();
    let nb = s.n_blocks();
    let mut tensor: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
    for (&(tau, sigma), &mu) in &mu_table {
        let p = constants.get(tau, sigma, mu);
        tensor.insert((tau, sigma), vec![(mu, field.from_int(p as i64))]);
    }
    let mut unit = vec![field.zero(); nb];
    for class in s.identity_classes() {
        unit[s.block_of[s.cat.identity[class[0]]]] = field.one();
    }
    let labels = (0..nb).map(|b| format!("b{b}")).collect();
    FDAlgebra::new(field, labels, tensor, unit)
}

/// A linear map between algebras, column j = image of basis element j.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn validate(&self, source: &FDAlgebra, target: &FDAlgebra) -> Result<(), AlgebraError> {
        if self.matrix.apply(&source.unit) != target.unit {
            return Err(AlgebraError::UnitNotPreserved);
        }
        for i in 0..source.dim {
            for j in 0..source.dim {
                let lhs = self.matrix.apply(&source.mul_basis(i, j));
                let rhs = target.mul(&self.matrix.col(i), &self.matrix.col(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows == self.matrix.cols && self.matrix.rank() == self.matrix.rows
    }

    pub fn then(&self, second: &AlgebraMap) -> AlgebraMap {
        AlgebraMap { matrix: second.matrix.mul(&self.matrix) }
    }
}

/// The Stanley-Reisner quotient R[K]/(x_i²) with monomial basis
/// {x_σ : σ ∈ K ∪ {∅}}, ordered like the blocks of the simplicial schemoid,
/// together with the isomorphism α_K : x_σ ↦ σ̃ into the Bose-Mesner algebra.
pub fn stanley_reisner_mod_squares(
    k: &SimplicialComplex,
    field: Field,
) -> (FDAlgebra, AlgebraMap, FDAlgebra, PowersetSchemoid) {
    let ps = simplicial_schemoid(k);
    let keys = &ps.block_keys;
    let n = keys.len();
    let mut tensor: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
    for (i, a) in keys.iter().enumerate() {
        for (j, b) in keys.iter().enumerate() {
            if a.is_disjoint(b) {
                let union: BTreeSet<usize> = a.union(b).copied().collect();
                if let Some(u) = keys.iter().position(|c| *c == union) {
                    tensor.insert((i, j), vec![(u, field.one())]);
                }
            }
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[keys.iter().position(|c| c.is_empty()).expect("∅ key")] = field.one();
    let labels = keys
        .iter()
        .map(|c| {
            if c.is_empty() {
                "1".to_string()
            } else {
                c.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("")
            }
        })
        .collect();
    let mut sr = FDAlgebra::new(field, labels, tensor, unit).expect("Stanley-Reisner quotient");
    sr.grades = Some(keys.iter().map(|c| c.len()).collect());
    let bm = bose_mesner_graded(&ps, field);
    // blocks of the simplicial schemoid are keyed and ordered exactly like
    // the squarefree monomials, so α_K is the identity matrix — still
    // verified as an algebra isomorphism.
    let alpha = AlgebraMap { matrix: Matrix::identity(field, n) };
    alpha.validate(&sr, &bm).expect("α_K is an algebra map");
    assert!(alpha.is_bijective());
    (sr, alpha, bm, ps)
}

/// For a non-degenerate simplicial map φ : K → L, the pullbacks
/// φ* : R[L]/(y²) → R[K]/(x²) (y_j ↦ Σ_{φ(i)=j} x_i, extended
/// multiplicatively) and P(φ)* : R(P(L)) → R(P(K)) (τ̃ ↦ Σ_{φ(σ)=τ} σ̃),
/// plus the verdict on whether α_K ∘ φ* = P(φ)* ∘ α_L.
pub struct SrPullbacks {
    pub sr_k: FDAlgebra,
    pub sr_l: FDAlgebra,
    pub bm_k: FDAlgebra,
    pub bm_l: FDAlgebra,
    pub alpha_k: AlgebraMap,
    pub alpha_l: AlgebraMap,
    pub phi_star: AlgebraMap,
    pub p_phi_star: AlgebraMap,
    pub commutes: bool,
}

pub fn sr_pullbacks(
    f: &[usize],
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    field: Field,
) -> Result<SrPullbacks, crate::constructors::ConstructError> {
    simplicial_map_morphism(f, k, l)?;
    let (sr_k, alpha_k, bm_k, ps_k) = stanley_reisner_mod_squares(k, field);
    let (sr_l, alpha_l, bm_l, ps_l) = stanley_reisner_mod_squares(l, field);
    // φ* on generators, extended multiplicatively over each monomial
    let mut phi = Matrix::zero(field, sr_k.dim, sr_l.dim);
    for (j, tau) in ps_l.block_keys.iter().enumerate() {
        let mut acc = sr_k.unit.clone();
        for &y in tau {
            let mut gen_image = vec![field.zero(); sr_k.dim];
            for (i, key) in ps_k.block_keys.iter().enumerate() {
                if key.len() == 1 && f[*key.iter().next().unwrap()] == y {
                    gen_image[i] = field.one();
                }
            }
            acc = sr_k.mul(&acc, &gen_image);
        }
        for (i, v) in acc.into_iter().enumerate() {
            phi.set(i, j, v);
        }
    }
    let phi_star = AlgebraMap { matrix: phi };
    phi_star.validate(&sr_l, &sr_k).expect("φ* multiplicative for non-degenerate φ");
    // P(φ)* : τ̃ ↦ Σ_{σ : φ(σ) = τ} σ̃
    let mut pphi = Matrix::zero(field, bm_k.dim, bm_l.dim);
    for (i, sigma) in ps_k.block_keys.iter().enumerate() {
        let image: BTreeSet<usize> = sigma.iter().map(|&v| f[v]).collect();
        if let Some(j) = ps_l.block_keys.iter().position(|t| *t == image) {
            pphi.set(i, j, field.one());
        }
    }
    let p_phi_star = AlgebraMap { matrix: pphi };
    p_phi_star.validate(&bm_l, &bm_k).expect("P(φ)* multiplicative for non-degenerate φ");
    let commutes =
        alpha_l.then(&p_phi_star).matrix == phi_star.then(&alpha_k).matrix;
    Ok(SrPullbacks {
        sr_k,
        sr_l,
        bm_k,
        bm_l,
        alpha_k,
        alpha_l,
        phi_star,
        p_phi_star,
        commutes,
    })
}

/// The center of A: solves z·e_j = e_j·z for all j.
pub fn center(a: &FDAlgebra) -> (usize, Vec<Vec<Scalar>>) {
    if a.dim == 0 {
        return (0, vec![]);
    }
    let mut stacked = Vec::new();
    for j in 0..a.dim {
        let e = basis_vec(a.field, a.dim, j);
        stacked.push(a.left_mult(&e).sub(&a.right_mult(&e)));
    }
    let m = Matrix::vstack(a.field, &stacked);
    let basis = m.kernel_basis();
    (basis.len(), basis)
}

const HOCHSCHILD_DIM_GUARD: usize = 12;
const HOCHSCHILD_SIZE_GUARD: usize = 400_000;

/// Dimensions of HH⁰..HH^{n_max}, computed from the Hochschild cochain
/// complex C^k = Hom(A^{⊗k}, A) with the standard differential.
pub fn hochschild_cohomology(a: &FDAlgebra, n_max: usize) -> Result<Vec<usize>, AlgebraError> {
    if a.dim > HOCHSCHILD_DIM_GUARD {
        return Err(AlgebraError::Guard(format!(
            "Hochschild guard: dim {} > {HOCHSCHILD_DIM_GUARD}",
            a.dim
        )));
    }
    if a.dim.pow(n_max as u32 + 2) > HOCHSCHILD_SIZE_GUARD {
        return Err(AlgebraError::Guard(format!(
            "Hochschild guard: dim {}^{} cochain space too large",
            a.dim,
            n_max + 2
        )));
    }
    let differential = |k: usize| hochschild_differential(a, k);
    let mut dims = Vec::with_capacity(n_max + 1);
    let mut prev_rank = 0usize;
    let mut delta = differential(0);
    for k in 0..=n_max {
        let kernel_dim = delta.cols - delta.rank();
        dims.push(kernel_dim - prev_rank);
        prev_rank = delta.rank();
        if k < n_max {
            delta = differential(k + 1);
        }
    }
    // HH⁰ must equal the center dimension
    assert_eq!(dims[0], center(a).0, "HH⁰ vs center cross-check");
    Ok(dims)
}

/// δ^k : C^k → C^{k+1} of the Hochschild cochain complex, where C^k has
/// basis E_{r, t} (the map sending the basis tuple t to e_r, other tuples
/// to 0) and columns are indexed t·dim + r.
fn hochschild_differential(a: &FDAlgebra, k: usize) -> Matrix {
    let d = a.dim;
    {
        let dom = d.pow(k as u32) * d;
        let cod = d.pow(k as u32 + 1) * d;
        let mut m = Matrix::zero(a.field, cod, dom);
        // iterate over domain basis cochains
        for t in 0..d.pow(k as u32) {
            let tuple: Vec<usize> = (0..k).map(|i| t / d.pow((k - 1 - i) as u32) % d).collect();
            for r in 0..d {
                let col = t * d + r;
                // evaluate δE on every (k+1)-tuple
                for s in 0..d.pow(k as u32 + 1) {
                    let args: Vec<usize> =
                        (0..k + 1).map(|i| s / d.pow((k - i) as u32) % d).collect();
                    let mut value = vec![a.field.zero(); d];
                    // a_0 · f(a_1, …, a_k)
                    if args[1..] == tuple[..] {
                        let v = a.mul(
                            &basis_vec(a.field, d, args[0]),
                            &basis_vec(a.field, d, r),
                        );
                        value = add_vec(&value, &v);
                    }
                    // alternating interior terms f(a_0, …, a_i a_{i+1}, …, a_k)
                    for i in 0..k {
                        let product = a.mul_basis(args[i], args[i + 1]);
                        for (p, c) in product.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let mut merged = Vec::with_capacity(k);
                            merged.extend_from_slice(&args[..i]);
                            merged.push(p);
                            merged.extend_from_slice(&args[i + 2..]);
                            if merged == tuple {
                                let sign = if i % 2 == 0 { c.neg() } else { c.clone() };
                                value[r] = value[r].add(&sign);
                            }
                        }
                    }
                    // ± f(a_0, …, a_{k-1}) · a_k
                    if args[..k] == tuple[..] {
                        let v = a.mul(&basis_vec(a.field, d, r), &basis_vec(a.field, d, args[k]));
                        let signed: Vec<Scalar> =
                            if k % 2 == 0 { v.iter().map(|x| x.neg()).collect() } else { v };
                        // sign (−1)^{k+1}: negative when k is even
                        value = add_vec(&value, &signed);
                    }
                    for (rr, c) in value.into_iter().enumerate() {
                        if !c.is_zero() {
                            let row = s * d + rr;
                            let prev = m.get(row, col).clone();
                            m.set(row, col, prev.add(&c));
                        }
                    }
                }
            }
        }
        m
    }
}

fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

#[derive(Debug)]
pub enum IsoVerdict {
    Witness(AlgebraMap),
    /// Distinguished by the named invariant.
    NotIsomorphic(String),
    /// Invariant battery silent and no search applicable.
    NotDistinguished,
}

/// Invariant battery plus small searches for an algebra isomorphism.
pub fn algebra_iso_bruteforce(a: &FDAlgebra, b: &FDAlgebra) -> IsoVerdict {
    if a.dim != b.dim {
        return IsoVerdict::NotIsomorphic(format!("dimensions {} vs {}", a.dim, b.dim));
    }
    if a.is_commutative() != b.is_commutative() {
        return IsoVerdict::NotIsomorphic("commutativity".into());
    }
    if center(a).0 != center(b).0 {
        return IsoVerdict::NotIsomorphic(format!("center dims {} vs {}", center(a).0, center(b).0));
    }
    if let (Some(na), Some(nb)) = (count_idempotents(a), count_idempotents(b)) {
        if na != nb {
            return IsoVerdict::NotIsomorphic(format!("idempotent counts {na} vs {nb}"));
        }
    }
    if nilpotent_pair_product_rank(a) != nilpotent_pair_product_rank(b) {
        return IsoVerdict::NotIsomorphic(format!(
            "rank of products of nilpotent basis elements: {} vs {}",
            nilpotent_pair_product_rank(a),
            nilpotent_pair_product_rank(b)
        ));
    }
    // identity attempt (same presentation)
    let id = AlgebraMap { matrix: Matrix::identity(a.field, a.dim) };
    if id.validate(a, b).is_ok() {
        return IsoVerdict::Witness(id);
    }
    IsoVerdict::NotDistinguished
}

/// Number of solutions of x² = x, enumerable only over a small finite field.
fn count_idempotents(a: &FDAlgebra) -> Option<u64> {
    let q = a.field.order()?;
    if (q as f64).powi(a.dim as i32) > (1 << 20) as f64 {
        return None;
    }
    let elements = a.field.elements();
    let mut count = 0;
    let mut v = vec![a.field.zero(); a.dim];
    fn rec(a: &FDAlgebra, elements: &[Scalar], v: &mut Vec<Scalar>, i: usize, count: &mut u64) {
        if i == a.dim {
            if a.mul(v, v) == *v {
                *count += 1;
            }
            return;
        }
        for e in elements {
            v[i] = e.clone();
            rec(a, elements, v, i + 1, count);
        }
    }
    rec(a, &elements, &mut v, 0, &mut count);
    Some(count)
}

/// Dimension of the span of products e_i·e_j over nilpotent basis elements.
fn nilpotent_pair_product_rank(a: &FDAlgebra) -> usize {
    let nilpotent: Vec<usize> = (0..a.dim)
        .filter(|&i| a.pow(&basis_vec(a.field, a.dim, i), a.dim + 1).iter().all(Scalar::is_zero))
        .collect();
    let mut rows = Vec::new();
    for &i in &nilpotent {
        for &j in &nilpotent {
            rows.push(a.mul_basis(i, j));
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(a.field, rows).rank()
}
