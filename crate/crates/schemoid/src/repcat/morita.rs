use crate::matrix::Matrix;
use crate::repcat::rep::{enumerate_functor_reps, lc_hom, restrict, FunctorRep, HomSpace};
use crate::scalar::Field;
use crate::schemoid::{Schemoid, SchemoidMorphism};

/// Result of checking a Morita-style witness pair u: 𝒟 → 𝒞, v: 𝒞 → 𝒟.
/// Each clause is `Ok(())` or a failure message naming a witness.
#[derive(Debug)]
pub struct MoritaReport {
    /// v ∘ u is the identity of 𝒟 on the nose.
    pub clause_retract: Result<(), String>,
    /// u* ∘ v* is the identity on a family of enumerated representations of 𝒟.
    pub clause_roundtrip_reps: Result<(), String>,
    /// For enumerated M on 𝒞, the identity components form a natural
    /// isomorphism v*u*M ≅ M in 𝒯^{(𝒞,S)}.
    pub clause_counit_iso: Result<(), String>,
    /// u* and v* carry locally constant transformations to locally constant
    /// transformations on enumerated hom pairs.
    pub clause_preserves_lc: Result<(), String>,
    pub passed: bool,
}

fn pullback_hom(
    u: &SchemoidMorphism,
    source: &Schemoid,
    hom: &HomSpace,
) -> Vec<Vec<Matrix>> {
    // component of u*η at object x is the component of η at u(x), grouped by
    // the identity classes of the source.
    let classes = source.identity_classes();
    hom.basis
        .iter()
        .enumerate()
        .map(|(i, _)| {
            classes
                .iter()
                .map(|class| hom.component(i, u.obj_map[class[0]]).clone())
                .collect()
        })
        .collect()
}

/// Check whether a transformation given by per-class components is a valid
/// locally constant transformation M ⇒ N (constant components per class plus
/// naturality).
fn is_lc_transformation(
    s: &Schemoid,
    m: &FunctorRep,
    n: &FunctorRep,
    components: &[Matrix],
) -> Result<(), String> {
    let classes = s.identity_classes();
    let class_of = s.class_of_objects();
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            if components[c].rows != n.dims[x] || components[c].cols != m.dims[x] {
                return Err(format!("component shape mismatch at object {x}"));
            }
        }
    }
    for f in 0..s.cat.n_morphisms() {
        let (x, y) = (s.cat.source(f), s.cat.target(f));
        let lhs = n.mat(s, f).mul(&components[class_of[x]]);
        let rhs = components[class_of[y]].mul(m.mat(s, f));
        if lhs != rhs {
            return Err(format!("naturality fails at morphism {f}"));
        }
    }
    Ok(())
}

/// Check the four clauses witnessing that u: 𝒟 → 𝒞 and v: 𝒞 → 𝒟 exhibit an
/// equivalence of representation categories. Enumeration runs over F_p
/// representations with object dimensions ≤ `dim_bound`.
pub fn morita_witness_check(
    u: &SchemoidMorphism,
    v: &SchemoidMorphism,
    d: &Schemoid,
    c: &Schemoid,
    field: Field,
    dim_bound: usize,
) -> MoritaReport {
    // clause 1: v ∘ u = id_𝒟
    let vu = u.then(v);
    let identity = SchemoidMorphism::identity(d);
    let clause_retract = if vu.obj_map != identity.obj_map {
        let x = (0..d.cat.n_objects).find(|&x| vu.obj_map[x] != x).unwrap();
        Err(format!("v(u({x})) = {} ≠ {x}", vu.obj_map[x]))
    } else if vu.mor_map != identity.mor_map {
        let f = (0..d.cat.n_morphisms()).find(|&f| vu.mor_map[f] != f).unwrap();
        Err(format!("v(u(morphism {f})) = {} ≠ {f}", vu.mor_map[f]))
    } else {
        Ok(())
    };

    let reps_d = enumerate_functor_reps(d, field, dim_bound);
    let reps_c = enumerate_functor_reps(c, field, dim_bound);

    // clause 2: u* ∘ v* = id on enumerated representations of 𝒟
    let clause_roundtrip_reps = match &reps_d {
        Err(e) => Err(format!("enumeration guard: {e}")),
        Ok(reps) => reps
            .iter()
            .enumerate()
            .try_for_each(|(i, n)| {
                let pulled = restrict(v, c, d, n)
                    .and_then(|vn| restrict(u, d, c, &vn))
                    .map_err(|e| format!("pullback of rep {i} invalid: {e}"))?;
                if &pulled != n {
                    return Err(format!("u*v* changes rep {i}"));
                }
                Ok(())
            }),
    };

    // clause 3: for enumerated M on 𝒞, identity components give v*u*M ≅ M
    let clause_counit_iso = match &reps_c {
        Err(e) => Err(format!("enumeration guard: {e}")),
        Ok(reps) => reps
            .iter()
            .enumerate()
            .try_for_each(|(i, m)| {
                let roundtrip = restrict(v, c, d, &restrict(u, d, c, m).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if roundtrip.dims != m.dims {
                    return Err(format!("v*u* changes dimensions of rep {i}"));
                }
                let components: Vec<Matrix> = c
                    .identity_classes()
                    .iter()
                    .map(|class| Matrix::identity(field, m.dims[class[0]]))
                    .collect();
                is_lc_transformation(c, &roundtrip, m, &components)
                    .map_err(|e| format!("identity components not natural for rep {i}: {e}"))
            }),
    };

    // clause 4: pullbacks of lc transformations stay lc, on enumerated pairs
    let clause_preserves_lc = (|| {
        let reps_d = reps_d.as_ref().map_err(|e| format!("enumeration guard: {e}"))?;
        let reps_c = reps_c.as_ref().map_err(|e| format!("enumeration guard: {e}"))?;
        let cap = 6usize;
        for (i, m) in reps_d.iter().take(cap).enumerate() {
            for (j, n) in reps_d.iter().take(cap).enumerate() {
                let hom = lc_hom(d, m, n);
                let vm = restrict(v, c, d, m).map_err(|e| e.to_string())?;
                let vn = restrict(v, c, d, n).map_err(|e| e.to_string())?;
                for comps in pullback_hom(v, c, &hom) {
                    is_lc_transformation(c, &vm, &vn, &comps).map_err(|e| {
                        format!("v* breaks a transformation between reps {i}, {j}: {e}")
                    })?;
                }
            }
        }
        for (i, m) in reps_c.iter().take(cap).enumerate() {
            for (j, n) in reps_c.iter().take(cap).enumerate() {
                let hom = lc_hom(c, m, n);
                let um = restrict(u, d, c, m).map_err(|e| e.to_string())?;
                let un = restrict(u, d, c, n).map_err(|e| e.to_string())?;
                for comps in pullback_hom(u, d, &hom) {
                    is_lc_transformation(d, &um, &un, &comps).map_err(|e| {
                        format!("u* breaks a transformation between reps {i}, {j}: {e}")
                    })?;
                }
            }
        }
        Ok(())
    })();

    let passed = clause_retract.is_ok()
        && clause_roundtrip_reps.is_ok()
        && clause_counit_iso.is_ok()
        && clause_preserves_lc.is_ok();
    MoritaReport {
        clause_retract,
        clause_roundtrip_reps,
        clause_counit_iso,
        clause_preserves_lc,
        passed,
    }
}
