use crate::algebra::{quotient_linear_algebra, AlgebraError, FDAlgebra};
use crate::matrix::{coordinates_in_basis, Matrix};
use crate::repcat::kan::{kan_right, KanError};
use crate::repcat::rep::FunctorRep;
use crate::scalar::{Field, Scalar};
use crate::schemoid::{Schemoid, SchemoidMorphism};
use thiserror::Error;

/// A finite-dimensional left module over an `FDAlgebra`: `action[j]` is the
/// matrix of the j-th algebra basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("expected one action matrix of size {dim}x{dim} per algebra basis element")]
    Shape { dim: usize },
    #[error("the unit does not act as the identity")]
    Unit,
    #[error("associativity fails for basis pair ({i}, {j})")]
    Associativity { i: usize, j: usize },
    #[error("the Mitchell module correspondence needs structure constants ≤ 1, found p = {p} at (σ, τ, μ) = ({sigma}, {tau}, {mu})")]
    ConstantsTooLarge { sigma: usize, tau: usize, mu: usize, p: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl AlgModule {
    pub fn validate(&self, a: &FDAlgebra) -> Result<(), ModuleError> {
        if self.action.len() != a.dim
            || self.action.iter().any(|m| m.rows != self.dim || m.cols != self.dim)
        {
            return Err(ModuleError::Shape { dim: self.dim });
        }
        let mut unit_action = Matrix::zero(a.field, self.dim, self.dim);
        for (j, c) in a.unit.iter().enumerate() {
            unit_action = unit_action.add(&self.action[j].scale(c));
        }
        if !unit_action.is_identity() {
            return Err(ModuleError::Unit);
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let mut prod_action = Matrix::zero(a.field, self.dim, self.dim);
                for (k, c) in a.mul_basis(i, j).iter().enumerate() {
                    prod_action = prod_action.add(&self.action[k].scale(c));
                }
                if prod_action != self.action[i].mul(&self.action[j]) {
                    return Err(ModuleError::Associativity { i, j });
                }
            }
        }
        Ok(())
    }

    /// Apply an algebra element (coordinate vector) to a module vector.
    pub fn act(&self, a: &FDAlgebra, elem: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![a.field.zero(); self.dim];
        for (j, c) in elem.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, w) in self.action[j].apply(v).iter().enumerate() {
                out[i] = out[i].add(&w.mul(c));
            }
        }
        out
    }
}

/// A free resolution ⋯ → A^{r_1} → A^{r_0} → M → 0 with minimal generator
/// counts at each stage. `diffs[i]` is the matrix of A^{r_{i+1}} → A^{r_i}`
/// and `augmentation` the matrix of A^{r_0} → M, both on the standard basis
/// (e_j ⊗ g_t ↦ column t·dim(A) + j).
#[derive(Debug, Clone)]
pub struct Resolution {
    pub ranks: Vec<usize>,
    pub augmentation: Matrix,
    pub diffs: Vec<Matrix>,
    /// Generator vectors of the i-th syzygy inside A^{r_{i-1}} (and of M
    /// itself at index 0), i.e. the images of the free generators.
    pub generators: Vec<Vec<Vec<Scalar>>>,
}

/// The action of the j-th algebra basis element on the free module A^r.
fn free_action(a: &FDAlgebra, r: usize, j: usize) -> Matrix {
    let l = a.left_mult(&crate::algebra::basis_vec(a.field, a.dim, j));
    let mut m = Matrix::zero(a.field, r * a.dim, r * a.dim);
    for t in 0..r {
        for row in 0..a.dim {
            for col in 0..a.dim {
                m.set(t * a.dim + row, t * a.dim + col, l.get(row, col).clone());
            }
        }
    }
    m
}

/// Greedily pick module generators from `candidates`: scan in order, keep a
/// vector whenever it is outside the module span of those kept so far.
fn module_generators(
    field: Field,
    act: &[Matrix],
    ambient: usize,
    candidates: &[Vec<Scalar>],
) -> Vec<Vec<Scalar>> {
    let mut span_rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rank = 0usize;
    let mut gens = Vec::new();
    let in_span = |rows: &mut Vec<Vec<Scalar>>, rank: &mut usize, v: &[Scalar]| -> bool {
        rows.push(v.to_vec());
        let r = Matrix::from_rows(field, rows.clone()).rank();
        if r > *rank {
            *rank = r;
            false
        } else {
            rows.pop();
            true
        }
    };
    for v in candidates {
        if in_span(&mut span_rows, &mut rank, v) {
            continue;
        }
        gens.push(v.clone());
        // close the span under the algebra action
        let mut queue = vec![v.clone()];
        while let Some(w) = queue.pop() {
            for m in act {
                let u = m.apply(&w);
                if u.iter().all(Scalar::is_zero) {
                    continue;
                }
                if !in_span(&mut span_rows, &mut rank, &u) {
                    queue.push(u);
                }
            }
        }
        if rank == ambient {
            break;
        }
    }
    gens
}

/// A free resolution of `m` with `n_steps` differentials beyond the
/// augmentation (enough for Ext up to degree `n_steps - 1`).
pub fn projective_resolution(a: &FDAlgebra, m: &AlgModule, n_steps: usize) -> Resolution {
    let field = a.field;
    // stage 0: minimal generators of M
    let candidates: Vec<Vec<Scalar>> =
        (0..m.dim).map(|i| crate::algebra::basis_vec(field, m.dim, i)).collect();
    let gens0 = module_generators(field, &m.action, m.dim, &candidates);
    let r0 = gens0.len();
    let mut aug = Matrix::zero(field, m.dim, r0 * a.dim);
    for (t, g) in gens0.iter().enumerate() {
        for j in 0..a.dim {
            for (i, v) in m.action[j].apply(g).iter().enumerate() {
                aug.set(i, t * a.dim + j, v.clone());
            }
        }
    }

    let mut ranks = vec![r0];
    let mut diffs = Vec::new();
    let mut generators = vec![gens0];
    let mut boundary = aug.clone();
    let mut prev_rank = r0;
    for _ in 0..n_steps {
        let kernel = boundary.kernel_basis();
        let free_acts: Vec<Matrix> =
            (0..a.dim).map(|j| free_action(a, prev_rank, j)).collect();
        let gens = module_generators(field, &free_acts, prev_rank * a.dim, &kernel);
        let r = gens.len();
        let mut d = Matrix::zero(field, prev_rank * a.dim, r * a.dim);
        for (t, g) in gens.iter().enumerate() {
            for (j, fa) in free_acts.iter().enumerate() {
                for (i, v) in fa.apply(g).iter().enumerate() {
                    d.set(i, t * a.dim + j, v.clone());
                }
            }
        }
        debug_assert!(boundary.mul(&d).is_zero());
        debug_assert_eq!(boundary.kernel_basis().len(), d.rank());
        ranks.push(r);
        generators.push(gens);
        diffs.push(d.clone());
        boundary = d;
        prev_rank = r;
        if r == 0 {
            // M has finite projective dimension; the resolution stays zero.
            while ranks.len() < n_steps + 1 {
                ranks.push(0);
                generators.push(vec![]);
                diffs.push(Matrix::zero(field, 0, 0));
            }
            break;
        }
    }
    Resolution { ranks, augmentation: aug, diffs, generators }
}

/// dim_k Ext^i_A(M, N) for i = 0..=n_max.
pub fn ext_dims(a: &FDAlgebra, m: &AlgModule, n: &AlgModule, n_max: usize) -> Vec<usize> {
    let field = a.field;
    let res = projective_resolution(a, m, n_max + 1);
    // Hom_A(A^{r_i}, N) ≅ N^{r_i}; the cochain map N^{r_i} → N^{r_{i+1}}
    // sends φ to φ ∘ d_{i+1}, with block (u, t) = Σ_j (gen_u)_{t·dim+j}·ρ_N(e_j).
    let delta: Vec<Matrix> = (0..=n_max)
        .map(|i| {
            let r_from = res.ranks[i];
            let r_to = res.ranks[i + 1];
            let mut dm = Matrix::zero(field, r_to * n.dim, r_from * n.dim);
            for (u, g) in res.generators[i + 1].iter().enumerate() {
                for t in 0..r_from {
                    let mut block = Matrix::zero(field, n.dim, n.dim);
                    for j in 0..a.dim {
                        block = block.add(&n.action[j].scale(&g[t * a.dim + j]));
                    }
                    for row in 0..n.dim {
                        for col in 0..n.dim {
                            dm.set(u * n.dim + row, t * n.dim + col, block.get(row, col).clone());
                        }
                    }
                }
            }
            dm
        })
        .collect();
    (0..=n_max)
        .map(|i| {
            let cycles = delta[i].cols - delta[i].rank();
            let boundaries = if i == 0 { 0 } else { delta[i - 1].rank() };
            cycles - boundaries
        })
        .collect()
}

/// θ of the Mitchell correspondence: a functor representation M becomes the
/// module ⊕_{[x]} M([x]) over the total algebra of the linear quotient
/// category, with block σ acting from the [source]-summand to the
/// [target]-summand. Requires a tame schemoid with all structure constants
/// ≤ 1 (the regime where the correspondence is an equivalence).
pub fn mitchell(
    s: &Schemoid,
    field: Field,
    m: &FunctorRep,
) -> Result<(FDAlgebra, AlgModule), ModuleError> {
    let constants = s.structure_constants();
    for (&(sigma, tau, mu), &p) in &constants.table {
        if p > 1 {
            return Err(ModuleError::ConstantsTooLarge { sigma, tau, mu, p });
        }
    }
    let a = quotient_linear_algebra(s, field)?;
    let qc = s.quotient_category().expect("tame by quotient_linear_algebra");
    let classes = s.identity_classes();
    let class_dims: Vec<usize> = classes.iter().map(|c| m.dims[c[0]]).collect();
    let offsets: Vec<usize> = class_dims
        .iter()
        .scan(0usize, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let dim: usize = class_dims.iter().sum();
    let action: Vec<Matrix> = (0..s.n_blocks())
        .map(|b| {
            let (src, tgt) = qc.cat.morphisms[b];
            let block = &m.block_mats[b];
            let mut act = Matrix::zero(field, dim, dim);
            for r in 0..block.rows {
                for c in 0..block.cols {
                    act.set(offsets[tgt] + r, offsets[src] + c, block.get(r, c).clone());
                }
            }
            act
        })
        .collect();
    let module = AlgModule { dim, action };
    module.validate(&a)?;
    Ok((a, module))
}

/// A basis of the column space of `m`: the columns at the pivot positions of
/// its row echelon form (so projections onto standard-basis summands give
/// back standard basis vectors).
fn column_space_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut reduced = m.clone();
    let pivots = reduced.row_reduce();
    pivots.into_iter().map(|c| m.col(c)).collect()
}

/// η of the Mitchell correspondence: recover a functor representation from a
/// module over the quotient-category total algebra. On the class [x] it takes
/// the image of the idempotent [id_x], and blocks act by restriction.
pub fn mitchell_eta(s: &Schemoid, a: &FDAlgebra, module: &AlgModule) -> FunctorRep {
    let field = a.field;
    let qc = s.quotient_category().expect("Mitchell correspondence needs a tame schemoid");
    let classes = s.identity_classes();
    let class_basis: Vec<Vec<Vec<Scalar>>> = (0..classes.len())
        .map(|c| column_space_basis(&module.action[qc.cat.identity[c]]))
        .collect();
    let dims: Vec<usize> =
        (0..s.cat.n_objects).map(|x| class_basis[qc.class_of_object[x]].len()).collect();
    let block_mats: Vec<Matrix> = (0..s.n_blocks())
        .map(|b| {
            let (src, tgt) = qc.cat.morphisms[b];
            let src_basis = &class_basis[src];
            let tgt_basis = &class_basis[tgt];
            let mut mat = Matrix::zero(field, tgt_basis.len(), src_basis.len());
            for (j, v) in src_basis.iter().enumerate() {
                let image = module.action[b].apply(v);
                let coords = coordinates_in_basis(field, tgt_basis, &image)
                    .expect("block image lands in the target idempotent summand");
                for (i, c) in coords.iter().enumerate() {
                    mat.set(i, j, c.clone());
                }
            }
            mat
        })
        .collect();
    let rep = FunctorRep { field, dims, block_mats };
    debug_assert_eq!(rep.validate(s), Ok(()));
    rep
}

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Kan(#[from] KanError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Schemoid cohomology of M along u: 𝒞 → 𝒟 with tame target:
/// Ext^i over the quotient-category algebra of 𝒟 from θ(k̲) to θ(Ran_u M),
/// for i = 0..=n_max.
pub fn schemoid_cohomology(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
    m: &FunctorRep,
    n_max: usize,
) -> Result<Vec<usize>, CohomologyError> {
    let ran = kan_right(u, source, target, m)?;
    let (a, theta_ran) = mitchell(target, m.field, &ran)?;
    let (_, theta_const) = mitchell(target, m.field, &FunctorRep::constant(target, m.field, 1))?;
    Ok(ext_dims(&a, &theta_const, &theta_ran, n_max))
}
