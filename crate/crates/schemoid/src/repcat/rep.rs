use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::schemoid::{Schemoid, SchemoidMorphism};
use crate::{BlockId, MorId, ObjId};
use thiserror::Error;

/// An object of 𝒯^{(𝒞,S)}: a functor 𝒞 → Vect_k whose value on a morphism
/// depends only on its block. `block_mats[b]` is the matrix of every
/// morphism in block `b` (columns = source dimension, rows = target).
#[derive(Debug, Clone, PartialEq)]
pub struct FunctorRep {
    pub field: Field,
    pub dims: Vec<usize>,
    pub block_mats: Vec<Matrix>,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RepError {
    #[error("expected {expected} object dimensions and {expected_blocks} block matrices")]
    WrongLength { expected: usize, expected_blocks: usize },
    #[error("morphism {mor} in block {block} needs a {rows}x{cols} matrix, found {found_rows}x{found_cols}")]
    Shape { block: BlockId, mor: MorId, rows: usize, cols: usize, found_rows: usize, found_cols: usize },
    #[error("matrix field does not match the representation field on block {block}")]
    FieldMismatch { block: BlockId },
    #[error("the identity of object {object} does not act as the identity matrix")]
    IdentityNotIdentity { object: ObjId },
    #[error("functoriality fails on the composite pair (g, f) = ({g}, {f})")]
    Composition { g: MorId, f: MorId },
    #[error("enumeration guard: {0}")]
    Guard(String),
}

impl FunctorRep {
    pub fn mat(&self, s: &Schemoid, f: MorId) -> &Matrix {
        &self.block_mats[s.block_of[f]]
    }

    /// The constant functor k̲^d: dimension d everywhere, every morphism the
    /// identity.
    pub fn constant(s: &Schemoid, field: Field, d: usize) -> FunctorRep {
        FunctorRep {
            field,
            dims: vec![d; s.cat.n_objects],
            block_mats: vec![Matrix::identity(field, d); s.n_blocks()],
        }
    }

    /// The zero representation.
    pub fn zero(s: &Schemoid, field: Field) -> FunctorRep {
        FunctorRep {
            field,
            dims: vec![0; s.cat.n_objects],
            block_mats: vec![Matrix::zero(field, 0, 0); s.n_blocks()],
        }
    }

    pub fn validate(&self, s: &Schemoid) -> Result<(), RepError> {
        if self.dims.len() != s.cat.n_objects || self.block_mats.len() != s.n_blocks() {
            return Err(RepError::WrongLength {
                expected: s.cat.n_objects,
                expected_blocks: s.n_blocks(),
            });
        }
        for (b, members) in s.blocks.iter().enumerate() {
            let m = &self.block_mats[b];
            if m.field != self.field {
                return Err(RepError::FieldMismatch { block: b });
            }
            for &f in members {
                let rows = self.dims[s.cat.target(f)];
                let cols = self.dims[s.cat.source(f)];
                if m.rows != rows || m.cols != cols {
                    return Err(RepError::Shape {
                        block: b,
                        mor: f,
                        rows,
                        cols,
                        found_rows: m.rows,
                        found_cols: m.cols,
                    });
                }
            }
        }
        for x in 0..s.cat.n_objects {
            if !self.mat(s, s.cat.identity[x]).is_identity() {
                return Err(RepError::IdentityNotIdentity { object: x });
            }
        }
        for (&(g, f), &gf) in &s.cat.compose {
            if self.mat(s, g).mul(self.mat(s, f)) != *self.mat(s, gf) {
                return Err(RepError::Composition { g, f });
            }
        }
        Ok(())
    }
}

/// A basis of a space of natural transformations M ⇒ N whose components are
/// constant on groups of objects. `basis[i][g]` is the component of the i-th
/// basis transformation on every object in `groups[g]`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub groups: Vec<Vec<ObjId>>,
    pub basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The component of basis transformation `i` at object `x`.
    pub fn component(&self, i: usize, x: ObjId) -> &Matrix {
        let g = self
            .groups
            .iter()
            .position(|grp| grp.contains(&x))
            .expect("object covered by some group");
        &self.basis[i][g]
    }
}

fn hom_with_groups(
    s: &Schemoid,
    m: &FunctorRep,
    n: &FunctorRep,
    groups: Vec<Vec<ObjId>>,
) -> HomSpace {
    let field = m.field;
    // unknown X_g is an n.dim x m.dim matrix for each group; all objects in a
    // group must share dimensions for the system to have solutions at all.
    for grp in &groups {
        for &x in grp {
            if m.dims[x] != m.dims[grp[0]] || n.dims[x] != n.dims[grp[0]] {
                return HomSpace { groups, basis: vec![] };
            }
        }
    }
    let group_of = {
        let mut v = vec![0usize; s.cat.n_objects];
        for (g, grp) in groups.iter().enumerate() {
            for &x in grp {
                v[x] = g;
            }
        }
        v
    };
    let sizes: Vec<(usize, usize)> =
        groups.iter().map(|grp| (n.dims[grp[0]], m.dims[grp[0]])).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0usize, |acc, (r, c)| {
            let o = *acc;
            *acc += r * c;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().map(|(r, c)| r * c).sum();

    // naturality: N(f)·X_{g(src)} = X_{g(tgt)}·M(f) for every morphism f.
    let mut rows: Vec<Vec<crate::scalar::Scalar>> = Vec::new();
    for f in 0..s.cat.n_morphisms() {
        let (x, y) = (s.cat.source(f), s.cat.target(f));
        let (gx, gy) = (group_of[x], group_of[y]);
        let nf = n.mat(s, f);
        let mf = m.mat(s, f);
        // entry (r, c): Σ_t N(f)[r,t]·X_{gx}[t,c] − Σ_t X_{gy}[r,t]·M(f)[t,c]
        for r in 0..n.dims[y] {
            for c in 0..m.dims[x] {
                let mut row = vec![field.zero(); total];
                for t in 0..n.dims[x] {
                    let idx = offsets[gx] + t * sizes[gx].1 + c;
                    row[idx] = row[idx].add(nf.get(r, t));
                }
                for t in 0..m.dims[y] {
                    let idx = offsets[gy] + r * sizes[gy].1 + t;
                    row[idx] = row[idx].sub(mf.get(t, c));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(field, 0, total)
    } else {
        Matrix::from_rows(field, rows)
    };
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            groups
                .iter()
                .enumerate()
                .map(|(g, _)| {
                    let (r, c) = sizes[g];
                    let mut mat = Matrix::zero(field, r, c);
                    for i in 0..r {
                        for j in 0..c {
                            mat.set(i, j, v[offsets[g] + i * c + j].clone());
                        }
                    }
                    mat
                })
                .collect()
        })
        .collect();
    HomSpace { groups, basis }
}

/// 𝒯^{(𝒞,S)}(M, N): natural transformations whose components are constant on
/// identity classes.
pub fn lc_hom(s: &Schemoid, m: &FunctorRep, n: &FunctorRep) -> HomSpace {
    hom_with_groups(s, m, n, s.identity_classes())
}

/// 𝒯^𝒞(M, N): all natural transformations, no local-constancy constraint.
pub fn nat_hom(s: &Schemoid, m: &FunctorRep, n: &FunctorRep) -> HomSpace {
    hom_with_groups(s, m, n, (0..s.cat.n_objects).map(|x| vec![x]).collect())
}

/// u*F = F ∘ u for a schemoid morphism u: source → target and F on the target.
pub fn restrict(
    u: &SchemoidMorphism,
    source: &Schemoid,
    target: &Schemoid,
    f: &FunctorRep,
) -> Result<FunctorRep, RepError> {
    let rep = FunctorRep {
        field: f.field,
        dims: (0..source.cat.n_objects).map(|x| f.dims[u.obj_map[x]]).collect(),
        block_mats: (0..source.n_blocks())
            .map(|b| f.block_mats[u.block_map[b]].clone())
            .collect(),
    };
    rep.validate(source)?;
    let _ = target;
    Ok(rep)
}

/// All representations over F_p with every object dimension ≤ `dim_bound`,
/// in a fixed order: dimension vectors (one dimension per identity class)
/// counted lexicographically, then the free block matrices in block order,
/// each running through its entries row-major over 0..p.
pub fn enumerate_functor_reps(
    s: &Schemoid,
    field: Field,
    dim_bound: usize,
) -> Result<Vec<FunctorRep>, RepError> {
    let p = match field {
        Field::Fp(p) if p <= 3 => p as usize,
        Field::Fp(p) => return Err(RepError::Guard(format!("p = {p} exceeds the bound 3"))),
        Field::Q => return Err(RepError::Guard("enumeration needs a finite field".into())),
    };
    let classes = s.identity_classes();
    let class_of = s.class_of_objects();
    let identity_blocks: Vec<BlockId> =
        classes.iter().map(|c| s.block_of[s.cat.identity[c[0]]]).collect();
    // block triples (bg, bf, bgf) arising from composition; functoriality only
    // depends on blocks, so one check per distinct triple.
    let mut triples: Vec<(BlockId, BlockId, BlockId)> = s
        .cat
        .compose
        .iter()
        .map(|(&(g, f), &gf)| (s.block_of[g], s.block_of[f], s.block_of[gf]))
        .collect();
    triples.sort_unstable();
    triples.dedup();

    let mut out: Vec<FunctorRep> = Vec::new();
    let mut dims_per_class = vec![0usize; classes.len()];
    let mut total_matrices = 0f64;
    loop {
        enumerate_for_dims(
            s,
            field,
            p,
            &class_of,
            &identity_blocks,
            &triples,
            &dims_per_class,
            &mut total_matrices,
            &mut out,
        )?;
        // next dimension vector in lexicographic order (last class fastest)
        let mut i = classes.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if dims_per_class[i] < dim_bound {
                dims_per_class[i] += 1;
                break;
            }
            dims_per_class[i] = 0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_for_dims(
    s: &Schemoid,
    field: Field,
    p: usize,
    class_of: &[usize],
    identity_blocks: &[BlockId],
    triples: &[(BlockId, BlockId, BlockId)],
    dims_per_class: &[usize],
    total_matrices: &mut f64,
    out: &mut Vec<FunctorRep>,
) -> Result<(), RepError> {
    let dims: Vec<usize> =
        (0..s.cat.n_objects).map(|x| dims_per_class[class_of[x]]).collect();
    // shape of each block matrix; all members of a block must agree.
    let mut shapes: Vec<(usize, usize)> = Vec::with_capacity(s.n_blocks());
    for members in &s.blocks {
        let shape = (dims[s.cat.target(members[0])], dims[s.cat.source(members[0])]);
        for &f in members {
            if (dims[s.cat.target(f)], dims[s.cat.source(f)]) != shape {
                return Ok(()); // no representation with these dimensions
            }
        }
        shapes.push(shape);
    }
    let free_blocks: Vec<BlockId> =
        (0..s.n_blocks()).filter(|b| !identity_blocks.contains(b)).collect();
    let mut assignments = 1f64;
    for &b in &free_blocks {
        let entries = shapes[b].0 * shapes[b].1;
        assignments *= (p as f64).powi(entries as i32);
    }
    *total_matrices += assignments;
    if *total_matrices > 1e6 {
        return Err(RepError::Guard(format!(
            "more than 1e6 candidate assignments at dimensions {dims_per_class:?}"
        )));
    }

    let mut mats: Vec<Option<Matrix>> = vec![None; s.n_blocks()];
    for (class, &b) in identity_blocks.iter().enumerate() {
        mats[b] = Some(Matrix::identity(field, dims_per_class[class]));
    }
    search(s, field, p, triples, &shapes, &free_blocks, 0, &mut mats, out);
    Ok(())
}

fn consistent(
    triples: &[(BlockId, BlockId, BlockId)],
    mats: &[Option<Matrix>],
) -> bool {
    for &(bg, bf, bgf) in triples {
        if let (Some(g), Some(f), Some(gf)) = (&mats[bg], &mats[bf], &mats[bgf]) {
            if g.mul(f) != *gf {
                return false;
            }
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn search(
    s: &Schemoid,
    field: Field,
    p: usize,
    triples: &[(BlockId, BlockId, BlockId)],
    shapes: &[(usize, usize)],
    free_blocks: &[BlockId],
    next: usize,
    mats: &mut Vec<Option<Matrix>>,
    out: &mut Vec<FunctorRep>,
) {
    if !consistent(triples, mats) {
        return;
    }
    if next == free_blocks.len() {
        let rep = FunctorRep {
            field,
            dims: (0..s.cat.n_objects)
                .map(|x| mats[s.block_of[s.cat.identity[x]]].as_ref().unwrap().rows)
                .collect(),
            block_mats: mats.iter().map(|m| m.clone().unwrap()).collect(),
        };
        debug_assert_eq!(rep.validate(s), Ok(()));
        out.push(rep);
        return;
    }
    let b = free_blocks[next];
    let (rows, cols) = shapes[b];
    let entries = rows * cols;
    // row-major lexicographic enumeration of the entry word over 0..p
    let mut word = vec![0usize; entries];
    loop {
        let mut m = Matrix::zero(field, rows, cols);
        for (i, &w) in word.iter().enumerate() {
            m.set(i / cols, i % cols, field.from_int(w as i64));
        }
        mats[b] = Some(m);
        search(s, field, p, triples, shapes, free_blocks, next + 1, mats, out);
        mats[b] = None;
        let mut i = entries;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if word[i] < p - 1 {
                word[i] += 1;
                for w in &mut word[i + 1..] {
                    *w = 0;
                }
                break;
            }
        }
    }
}
