use crate::matrix::{coordinates_in_basis, Matrix, QuotientSpace};
use crate::repcat::rep::{lc_hom, FunctorRep, HomSpace, RepError};
use crate::scalar::Scalar;
use crate::schemoid::Schemoid;

/// The opposite schemoid: same morphism ids and blocks, arrows reversed.
pub fn opposite_schemoid(s: &Schemoid) -> Schemoid {
    Schemoid::from_block_of(s.cat.opposite(), s.block_of.clone())
        .expect("partition axioms are self-dual")
}

/// Tensor and hom induced by a bimodule U ∈ 𝒯^{(𝒞₁^op × 𝒞₂)}, together with
/// the adjunction dimension check
/// dim Hom_{𝒞₂}(F ⊗_{𝒞₁} U, G) = dim Hom_{𝒞₁}(F, hom_U(G)).
#[derive(Debug)]
pub struct BimoduleFunctors {
    pub tensor: FunctorRep,
    pub hom: FunctorRep,
    pub adjunction_dims: (usize, usize),
}

fn flatten_hom(h: &HomSpace, i: usize) -> Vec<Scalar> {
    let mut v = Vec::new();
    for mat in &h.basis[i] {
        for r in 0..mat.rows {
            for c in 0..mat.cols {
                v.push(mat.get(r, c).clone());
            }
        }
    }
    v
}

/// F ⊗_{𝒞₁} U on 𝒞₂ (coend over the identity classes of 𝒞₁), hom_U(G) on 𝒞₁
/// (locally constant transformations U(c, -) ⇒ G), and the adjunction check.
/// `product` must be the product schemoid of `opposite_schemoid(c1)` and `c2`
/// and `u` a representation of it.
pub fn bimodule_functors(
    u: &FunctorRep,
    product: &Schemoid,
    c1: &Schemoid,
    c2: &Schemoid,
    f: &FunctorRep,
    g: &FunctorRep,
) -> Result<BimoduleFunctors, RepError> {
    let field = u.field;
    let n2_obj = c2.cat.n_objects;
    let m2 = c2.cat.n_morphisms();
    let pobj = |c: usize, a: usize| c * n2_obj + a;
    let pmor = |f1: usize, g2: usize| f1 * m2 + g2;
    u.validate(product)?;
    f.validate(c1)?;
    g.validate(c2)?;

    let classes1 = c1.identity_classes();
    let class_of1 = c1.class_of_objects();
    let rep1: Vec<usize> = classes1.iter().map(|class| class[0]).collect();

    // ---- tensor: (F ⊗ U)(a) = (⊕_{[d]} F([d]) ⊗ U([d], a)) / coend relations,
    // the coend running over the identity classes of 𝒞₁ (the coend in
    // 𝒯^{(𝒞₁,S₁)}; summing over the objects instead is only right when every
    // class is a singleton and breaks the tensor-hom adjunction otherwise)
    struct TensorData {
        offsets: Vec<usize>,
        ambient: usize,
        space: QuotientSpace,
    }
    let tensor_data: Vec<TensorData> = (0..n2_obj)
        .map(|a| {
            let sizes: Vec<usize> =
                rep1.iter().map(|&c| f.dims[c] * u.dims[pobj(c, a)]).collect();
            let offsets: Vec<usize> = sizes
                .iter()
                .scan(0usize, |acc, s| {
                    let o = *acc;
                    *acc += s;
                    Some(o)
                })
                .collect();
            let ambient: usize = sizes.iter().sum();
            // x ⊗ y in the summand of c sits at offset[c] + x·dim U(c,a) + y
            let mut relation_cols: Vec<Vec<Scalar>> = Vec::new();
            for phi in 0..c1.cat.n_morphisms() {
                let (c, c2_) = (c1.cat.source(phi), c1.cat.target(phi));
                // in 𝒞₁^op the same index runs c2_ → c, so (φ, id_a) is a
                // morphism (c2_, a) → (c, a) of the product
                let u_phi = u.mat(product, pmor(phi, c2.cat.identity[a]));
                let f_phi = f.mat(c1, phi);
                let du_src = u.dims[pobj(c2_, a)];
                let du_tgt = u.dims[pobj(c, a)];
                for x in 0..f.dims[c] {
                    for y in 0..du_src {
                        let mut col = vec![field.zero(); ambient];
                        // F(φ)x ⊗ y in the summand of [c2_]
                        for r in 0..f.dims[c2_] {
                            let idx = offsets[class_of1[c2_]] + r * du_src + y;
                            col[idx] = col[idx].add(f_phi.get(r, x));
                        }
                        // minus x ⊗ U(φ, id_a)y in the summand of [c]
                        for r in 0..du_tgt {
                            let idx = offsets[class_of1[c]] + x * du_tgt + r;
                            col[idx] = col[idx].sub(u_phi.get(r, y));
                        }
                        relation_cols.push(col);
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
            TensorData { offsets, ambient, space }
        })
        .collect();

    // g₂: a → b acts on the summand of [c] by id ⊗ U(id_c, g₂)
    let tensor_mats: Vec<Matrix> = (0..c2.n_blocks())
        .map(|beta| {
            let g2 = c2.blocks[beta][0];
            let (a, b) = (c2.cat.source(g2), c2.cat.target(g2));
            let (src, tgt) = (&tensor_data[a], &tensor_data[b]);
            let mut mat = Matrix::zero(field, tgt.space.dim(), src.space.dim());
            for j in 0..src.space.dim() {
                let v = src.space.lift(j);
                let mut image = vec![field.zero(); tgt.ambient];
                for (k, &c) in rep1.iter().enumerate() {
                    let u_g = u.mat(product, pmor(c1.cat.identity[c], g2));
                    let (da, db) = (u.dims[pobj(c, a)], u.dims[pobj(c, b)]);
                    for x in 0..f.dims[c] {
                        for r in 0..db {
                            let mut acc = field.zero();
                            for y in 0..da {
                                acc = acc.add(
                                    &u_g.get(r, y).mul(&v[src.offsets[k] + x * da + y]),
                                );
                            }
                            let idx = tgt.offsets[k] + x * db + r;
                            image[idx] = image[idx].add(&acc);
                        }
                    }
                }
                for (i, cv) in tgt.space.reduce(&image).iter().enumerate() {
                    mat.set(i, j, cv.clone());
                }
            }
            mat
        })
        .collect();
    let tensor = FunctorRep {
        field,
        dims: (0..n2_obj).map(|a| tensor_data[a].space.dim()).collect(),
        block_mats: tensor_mats,
    };
    tensor.validate(c2)?;

    // ---- hom: hom_U(G)(c) = lc-hom space of U(c, -) ⇒ G over 𝒞₂
    let slice = |c: usize| -> FunctorRep {
        FunctorRep {
            field,
            dims: (0..n2_obj).map(|a| u.dims[pobj(c, a)]).collect(),
            block_mats: (0..c2.n_blocks())
                .map(|beta| u.mat(product, pmor(c1.cat.identity[c], c2.blocks[beta][0])).clone())
                .collect(),
        }
    };
    let hom_spaces: Vec<HomSpace> =
        classes1.iter().map(|class| lc_hom(c2, &slice(class[0]), g)).collect();
    let hom_mats: Vec<Matrix> = (0..c1.n_blocks())
        .map(|beta| {
            let phi = c1.blocks[beta][0];
            let (c, c2_) = (c1.cat.source(phi), c1.cat.target(phi));
            let (src, tgt) = (&hom_spaces[class_of1[c]], &hom_spaces[class_of1[c2_]]);
            let tgt_flat: Vec<Vec<Scalar>> =
                (0..tgt.dim()).map(|i| flatten_hom(tgt, i)).collect();
            let mut mat = Matrix::zero(field, tgt.dim(), src.dim());
            for j in 0..src.dim() {
                // precompose each component with U(φ, id_a): U(c2_, a) → U(c, a)
                let image = HomSpace {
                    groups: tgt.groups.clone(),
                    basis: vec![tgt
                        .groups
                        .iter()
                        .map(|grp| {
                            let a = grp[0];
                            src.component(j, a)
                                .mul(u.mat(product, pmor(phi, c2.cat.identity[a])))
                        })
                        .collect()],
                };
                let flat = flatten_hom(&image, 0);
                let coords = coordinates_in_basis(field, &tgt_flat, &flat)
                    .expect("precomposition stays a locally constant transformation");
                for (i, cv) in coords.iter().enumerate() {
                    mat.set(i, j, cv.clone());
                }
            }
            mat
        })
        .collect();
    let hom = FunctorRep {
        field,
        dims: (0..c1.cat.n_objects).map(|c| hom_spaces[class_of1[c]].dim()).collect(),
        block_mats: hom_mats,
    };
    hom.validate(c1)?;

    let adjunction_dims = (lc_hom(c2, &tensor, g).dim(), lc_hom(c1, f, &hom).dim());
    Ok(BimoduleFunctors { tensor, hom, adjunction_dims })
}
