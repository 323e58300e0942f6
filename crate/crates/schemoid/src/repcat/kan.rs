use crate::matrix::{coordinates_in_basis, Matrix, QuotientSpace};
use crate::repcat::rep::{lc_hom, restrict, FunctorRep, RepError};
use crate::scalar::Scalar;
use crate::schemoid::{Schemoid, SchemoidMorphism, TamenessReport};
use crate::BlockId;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KanError {
    #[error("Kan extensions need a tame target schemoid")]
    NotTame(TamenessReport),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Index data shared by both Kan extensions: the quotient category [𝒟] and,
/// for each source object c, the class w(c) = [u(c)] and for each source
/// morphism φ the block [u(φ)] (a morphism of [𝒟]).
struct KanContext {
    qc: crate::schemoid::QuotientCategory,
    w: Vec<usize>,
    w_mor: Vec<BlockId>,
}

fn context(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
) -> Result<KanContext, KanError> {
    let qc = target.quotient_category().map_err(KanError::NotTame)?;
    let w = (0..source.cat.n_objects)
        .map(|c| qc.class_of_object[u.obj_map[c]])
        .collect();
    let w_mor = (0..source.cat.n_morphisms())
        .map(|f| target.block_of[u.mor_map[f]])
        .collect();
    Ok(KanContext { qc, w, w_mor })
}

/// Blocks σ with endpoints [x] → [y] in the quotient category.
fn qhom(qc: &crate::schemoid::QuotientCategory, x: usize, y: usize) -> Vec<BlockId> {
    (0..qc.cat.n_morphisms())
        .filter(|&b| qc.cat.morphisms[b] == (x, y))
        .collect()
}

/// Right Kan extension Ran_u M of M ∈ 𝒯^{(𝒞,S)} along u: (𝒞,S) → (𝒟,S′)
/// with (𝒟,S′) tame. Computed through the quotient category as the end
/// Ran M([d]) = ∫_c M(c)^{[𝒟]([d], [u(c)])} taken inside 𝒯^{(𝒞,S)}: the
/// subspace of ⊕_{c, ψ: [d]→[u(c)]} M(c) cut out by
/// M(φ)·x_{c,ψ} = x_{c′, [u(φ)]∘ψ} for every φ: c → c′ together with the
/// local-constancy constraint x_{c,ψ} = x_{c′,ψ} whenever id_c ∼ id_{c′},
/// with [𝒟] acting by precomposition. Unwinding the Yoneda description
/// Ran M([d]) = Hom_{𝒯^{(𝒞,S)}}(u*Ψ(k[[𝒟]([d], -)]), M) gives exactly this
/// system; without the local-constancy rows the construction is only
/// adjoint to u* followed by the inclusion into 𝒯^𝒞 (the two differ, e.g.
/// for the sign representation of S̃(Z/2) along the identity).
pub fn kan_right(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
    m: &FunctorRep,
) -> Result<FunctorRep, KanError> {
    let ctx = context(u, source, target)?;
    let qc = &ctx.qc;
    let field = m.field;
    let n_classes = qc.cat.n_objects;

    // index set per class: (c, ψ: class → w(c)), with offsets into the ambient sum
    struct ClassData {
        index: Vec<(usize, BlockId)>,
        offsets: Vec<usize>,
        ambient: usize,
        basis: Vec<Vec<Scalar>>,
    }
    let mut data: Vec<ClassData> = Vec::with_capacity(n_classes);
    for x in 0..n_classes {
        let mut index = Vec::new();
        for c in 0..source.cat.n_objects {
            for psi in qhom(qc, x, ctx.w[c]) {
                index.push((c, psi));
            }
        }
        let offsets: Vec<usize> = index
            .iter()
            .scan(0usize, |acc, &(c, _)| {
                let o = *acc;
                *acc += m.dims[c];
                Some(o)
            })
            .collect();
        let ambient = index.iter().map(|&(c, _)| m.dims[c]).sum();
        let slot = |c: usize, psi: BlockId| -> usize {
            index.iter().position(|&e| e == (c, psi)).expect("end index")
        };
        // one block of rows per (φ: c → c′, ψ: x → w(c))
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for phi in 0..source.cat.n_morphisms() {
            let (c, c2) = (source.cat.source(phi), source.cat.target(phi));
            for psi in qhom(qc, x, ctx.w[c]) {
                let composed = qc.cat.compose[&(ctx.w_mor[phi], psi)];
                let s_from = slot(c, psi);
                let s_to = slot(c2, composed);
                let mphi = m.mat(source, phi);
                for r in 0..m.dims[c2] {
                    let mut row = vec![field.zero(); ambient];
                    for t in 0..m.dims[c] {
                        let idx = offsets[s_from] + t;
                        row[idx] = row[idx].add(mphi.get(r, t));
                    }
                    let idx = offsets[s_to] + r;
                    row[idx] = row[idx].sub(&field.one());
                    rows.push(row);
                }
            }
        }
        // local constancy: slots (c, ψ) and (c′, ψ) agree when id_c ∼ id_{c′}
        for class in source.identity_classes() {
            for pair in class.windows(2) {
                let (c, c2) = (pair[0], pair[1]);
                for psi in qhom(qc, x, ctx.w[c]) {
                    let s_a = slot(c, psi);
                    let s_b = slot(c2, psi);
                    for t in 0..m.dims[c] {
                        let mut row = vec![field.zero(); ambient];
                        row[offsets[s_a] + t] = field.one();
                        row[offsets[s_b] + t] = field.from_int(-1);
                        rows.push(row);
                    }
                }
            }
        }
        let system = if rows.is_empty() {
            Matrix::zero(field, 0, ambient)
        } else {
            Matrix::from_rows(field, rows)
        };
        let basis = system.kernel_basis();
        data.push(ClassData { index, offsets, ambient, basis });
    }

    // a block σ: [x] → [y] of 𝒟 acts by precomposition: (σ·v)_{c,ψ} = v_{c,ψ∘σ}
    let block_mats: Vec<Matrix> = (0..target.n_blocks())
        .map(|sigma| {
            let (x, y) = qc.cat.morphisms[sigma];
            let (src, tgt) = (&data[x], &data[y]);
            let mut mat = Matrix::zero(field, tgt.basis.len(), src.basis.len());
            for (j, v) in src.basis.iter().enumerate() {
                let mut image = vec![field.zero(); tgt.ambient];
                for (s, &(c, psi)) in tgt.index.iter().enumerate() {
                    let pre = qc.cat.compose[&(psi, sigma)];
                    let from = src
                        .index
                        .iter()
                        .position(|&e| e == (c, pre))
                        .expect("precomposite indexed");
                    for t in 0..m.dims[c] {
                        image[tgt.offsets[s] + t] = v[src.offsets[from] + t].clone();
                    }
                }
                let coords = coordinates_in_basis(field, &tgt.basis, &image)
                    .expect("end is closed under the action");
                for (i, cv) in coords.iter().enumerate() {
                    mat.set(i, j, cv.clone());
                }
            }
            mat
        })
        .collect();

    let classes = target.identity_classes();
    let mut dims = vec![0usize; target.cat.n_objects];
    for (x, class) in classes.iter().enumerate() {
        for &obj in class {
            dims[obj] = data[x].basis.len();
        }
    }
    let rep = FunctorRep { field, dims, block_mats };
    rep.validate(target)?;
    Ok(rep)
}

/// Left Kan extension Lan_u M, computed through the quotient category as the
/// coend Lan M([d]) = (⊕_{c, ψ: [u(c)]→[d]} M(c)) / (relations
/// [c, ψ∘[u(φ)]]·m − [c′, ψ]·M(φ)m for φ: c → c′), taken inside 𝒯^{(𝒞,S)}:
/// the summands (c, ψ) and (c′, ψ) are additionally identified whenever
/// id_c ∼ id_{c′} (dual to the local-constancy rows of `kan_right`), with
/// [𝒟] acting by postcomposition.
pub fn kan_left(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
    m: &FunctorRep,
) -> Result<FunctorRep, KanError> {
    let ctx = context(u, source, target)?;
    let qc = &ctx.qc;
    let field = m.field;
    let n_classes = qc.cat.n_objects;

    struct ClassData {
        index: Vec<(usize, BlockId)>,
        offsets: Vec<usize>,
        ambient: usize,
        space: QuotientSpace,
    }
    let mut data: Vec<ClassData> = Vec::with_capacity(n_classes);
    for x in 0..n_classes {
        let mut index = Vec::new();
        for c in 0..source.cat.n_objects {
            for psi in qhom(qc, ctx.w[c], x) {
                index.push((c, psi));
            }
        }
        let offsets: Vec<usize> = index
            .iter()
            .scan(0usize, |acc, &(c, _)| {
                let o = *acc;
                *acc += m.dims[c];
                Some(o)
            })
            .collect();
        let ambient = index.iter().map(|&(c, _)| m.dims[c]).sum();
        let slot = |c: usize, psi: BlockId| -> usize {
            index.iter().position(|&e| e == (c, psi)).expect("coend index")
        };
        // one relation per (φ: c → c′, ψ: w(c′) → x, basis vector of M(c))
        let mut relation_cols: Vec<Vec<Scalar>> = Vec::new();
        for phi in 0..source.cat.n_morphisms() {
            let (c, c2) = (source.cat.source(phi), source.cat.target(phi));
            for psi in qhom(qc, ctx.w[c2], x) {
                let composed = qc.cat.compose[&(psi, ctx.w_mor[phi])];
                let s_from = slot(c, composed);
                let s_to = slot(c2, psi);
                let mphi = m.mat(source, phi);
                for e in 0..m.dims[c] {
                    let mut col = vec![field.zero(); ambient];
                    col[offsets[s_from] + e] = col[offsets[s_from] + e].add(&field.one());
                    for r in 0..m.dims[c2] {
                        let idx = offsets[s_to] + r;
                        col[idx] = col[idx].sub(mphi.get(r, e));
                    }
                    relation_cols.push(col);
                }
            }
        }
        for class in source.identity_classes() {
            for pair in class.windows(2) {
                let (c, c2) = (pair[0], pair[1]);
                for psi in qhom(qc, ctx.w[c], x) {
                    let s_a = slot(c, psi);
                    let s_b = slot(c2, psi);
                    for e in 0..m.dims[c] {
                        let mut col = vec![field.zero(); ambient];
                        col[offsets[s_a] + e] = field.one();
                        col[offsets[s_b] + e] = field.from_int(-1);
                        relation_cols.push(col);
                    }
                }
            }
        }
        let mut relations = Matrix::zero(field, ambient, relation_cols.len());
        for (j, col) in relation_cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                relations.set(i, j, v.clone());
            }
        }
        let space = QuotientSpace::new(field, ambient, &relations);
        data.push(ClassData { index, offsets, ambient, space });
    }

    // a block σ: [x] → [y] acts by postcomposition: [c, ψ]·m ↦ [c, σ∘ψ]·m
    let block_mats: Vec<Matrix> = (0..target.n_blocks())
        .map(|sigma| {
            let (x, y) = qc.cat.morphisms[sigma];
            let (src, tgt) = (&data[x], &data[y]);
            let mut mat = Matrix::zero(field, tgt.space.dim(), src.space.dim());
            for j in 0..src.space.dim() {
                let v = src.space.lift(j);
                let mut image = vec![field.zero(); tgt.ambient];
                for (s, &(c, psi)) in src.index.iter().enumerate() {
                    let post = qc.cat.compose[&(sigma, psi)];
                    let to = tgt
                        .index
                        .iter()
                        .position(|&e| e == (c, post))
                        .expect("postcomposite indexed");
                    for t in 0..m.dims[c] {
                        image[tgt.offsets[to] + t] =
                            image[tgt.offsets[to] + t].add(&v[src.offsets[s] + t]);
                    }
                }
                for (i, cv) in tgt.space.reduce(&image).iter().enumerate() {
                    mat.set(i, j, cv.clone());
                }
            }
            mat
        })
        .collect();

    let classes = target.identity_classes();
    let mut dims = vec![0usize; target.cat.n_objects];
    for (x, class) in classes.iter().enumerate() {
        for &obj in class {
            dims[obj] = data[x].space.dim();
        }
    }
    let rep = FunctorRep { field, dims, block_mats };
    rep.validate(target)?;
    Ok(rep)
}

/// Both adjunction dimension identities for u: (𝒞,S) → (𝒟,S′) with tame
/// target, F ∈ 𝒯^{(𝒟,S′)} and M ∈ 𝒯^{(𝒞,S)}:
///   dim Hom(u*F, M) = dim Hom(F, Ran_u M)   and
///   dim Hom(Lan_u M, F) = dim Hom(M, u*F).
/// Returns the two (left, right) dimension pairs.
pub fn adjunction_check(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
    f: &FunctorRep,
    m: &FunctorRep,
) -> Result<((usize, usize), (usize, usize)), KanError> {
    let pulled = restrict(u, source, target, f)?;
    let ran = kan_right(u, source, target, m)?;
    let lan = kan_left(u, source, target, m)?;
    let right = (
        lc_hom(source, &pulled, m).dim(),
        lc_hom(target, f, &ran).dim(),
    );
    let left = (
        lc_hom(target, &lan, f).dim(),
        lc_hom(source, m, &pulled).dim(),
    );
    Ok((right, left))
}
