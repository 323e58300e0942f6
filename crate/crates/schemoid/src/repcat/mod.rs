//! The functor category 𝒯^{(𝒞,S)}: functor representations constant on
//! blocks, locally constant natural transformations, Kan extensions into
//! tame targets, the Mitchell correspondence, Ext and schemoid cohomology,
//! Morita witnesses, and bimodule-induced tensor/hom functors.

pub mod bimodule;
pub mod kan;
pub mod modules;
pub mod morita;
pub mod rep;

pub use bimodule::{bimodule_functors, opposite_schemoid, BimoduleFunctors};
pub use kan::{adjunction_check, kan_left, kan_right, KanError};
pub use modules::{
    ext_dims, mitchell, mitchell_eta, projective_resolution, schemoid_cohomology, AlgModule,
    Resolution,
};
pub use morita::{morita_witness_check, MoritaReport};
pub use rep::{
    enumerate_functor_reps, lc_hom, nat_hom, restrict, FunctorRep, HomSpace, RepError,
};

#[cfg(test)]
mod tests {
    use super::modules::ModuleError;
    use super::*;
    use crate::algebra::{group_algebra, FDAlgebra};
    use crate::constructors::{
        discrete, groupoid_schemoid_of_cyclic, hamming, hamming_sgn_morphism,
        hamming_unit_morphism, height_morphism, simplicial_schemoid, terminal_schemoid,
        SimplicialComplex,
    };
    use crate::fincat::{cyclic_table, interval, one_object_group, FinCat};
    use crate::matrix::Matrix;
    use crate::scalar::Field;
    use crate::schemoid::{Schemoid, SchemoidMorphism};

    const F2: Field = Field::Fp(2);
    const F3: Field = Field::Fp(3);
    const Q: Field = Field::Q;

    fn hamming_schemoid(n: usize) -> Schemoid {
        hamming(n).unwrap().to_schemoid().unwrap()
    }

    /// The 1-dim representation of S̃(Z/2) where the non-identity block acts
    /// by −1.
    fn sign_rep(s: &Schemoid, field: Field) -> FunctorRep {
        let id_block = s.block_of[s.cat.identity[0]];
        let mut rep = FunctorRep::constant(s, field, 1);
        for b in 0..s.n_blocks() {
            if b != id_block {
                rep.block_mats[b] = Matrix::from_rows(field, vec![vec![field.from_int(-1)]]);
            }
        }
        rep
    }

    /// A two-object category with only identity morphisms.
    fn discrete_two() -> Schemoid {
        let cat = FinCat {
            n_objects: 2,
            morphisms: vec![(0, 0), (1, 1)],
            identity: vec![0, 1],
            compose: [((0, 0), 0), ((1, 1), 1)].into_iter().collect(),
        };
        discrete(cat).unwrap()
    }

    /// Z/2 as a one-object category with singleton blocks.
    fn z2_discrete() -> Schemoid {
        discrete(one_object_group(&cyclic_table(2))).unwrap()
    }

    fn one_dim(s: &Schemoid, field: Field, entries: &[i64]) -> FunctorRep {
        FunctorRep {
            field,
            dims: vec![1; s.cat.n_objects],
            block_mats: entries
                .iter()
                .map(|&e| Matrix::from_rows(field, vec![vec![field.from_int(e)]]))
                .collect(),
        }
    }

    #[test]
    fn constant_rep_valid() {
        let h = hamming_schemoid(2);
        assert_eq!(FunctorRep::constant(&h, F2, 3).validate(&h), Ok(()));
        let s = groupoid_schemoid_of_cyclic(2);
        assert_eq!(FunctorRep::constant(&s, Q, 2).validate(&s), Ok(()));
        assert_eq!(sign_rep(&s, Q).validate(&s), Ok(()));
    }

    #[test]
    fn hamming22_forces_t2_identity() {
        let h = hamming_schemoid(2);
        // blocks are the distance relations: T0 = identities, T1, T2
        let good = one_dim(&h, F2, &[1, 1, 1]);
        assert_eq!(good.validate(&h), Ok(()));
        let bad = one_dim(&h, F2, &[1, 1, 0]);
        assert!(matches!(bad.validate(&h), Err(RepError::Composition { .. })));
    }

    #[test]
    fn enumerate_hamming22_dim1() {
        let h = hamming_schemoid(2);
        let reps = enumerate_functor_reps(&h, F2, 1).unwrap();
        assert_eq!(reps.len(), 2); // the zero rep and T1, T2 ↦ (1)
        assert_eq!(reps[0].dims, vec![0; 4]);
        assert_eq!(reps[1], one_dim(&h, F2, &[1, 1, 1]));
    }

    #[test]
    fn enumerate_s2_reps_are_involutions() {
        let s = groupoid_schemoid_of_cyclic(2);
        let reps = enumerate_functor_reps(&s, F2, 2).unwrap();
        // dims 0 and 1 give one rep each; dims 2 gives the 4 involutions in GL₂(F₂)
        assert_eq!(reps.len(), 6);
        let id_block = s.block_of[s.cat.identity[0]];
        for rep in reps.iter().filter(|r| r.dims[0] == 2) {
            let a = &rep.block_mats[1 - id_block];
            assert!(a.mul(a).is_identity());
        }
        assert_eq!(reps.iter().filter(|r| r.dims[0] == 2).count(), 4);
    }

    #[test]
    fn enumerate_bound_zero() {
        let h = hamming_schemoid(2);
        let reps = enumerate_functor_reps(&h, F2, 0).unwrap();
        assert_eq!(reps, vec![FunctorRep::zero(&h, F2)]);
    }

    #[test]
    fn lc_hom_constant_single_class() {
        let h = hamming_schemoid(2);
        let c = FunctorRep::constant(&h, Q, 1);
        assert_eq!(lc_hom(&h, &c, &c).dim(), 1);
        // without the local-constancy constraint every component is free to
        // differ only up to naturality; here T1 connects everything
        assert_eq!(nat_hom(&h, &c, &c).dim(), 1);
    }

    #[test]
    fn lc_hom_discrete_is_nat_hom() {
        let s = discrete(interval()).unwrap();
        let m = one_dim(&s, Q, &[1, 1, 1]);
        let n = one_dim(&s, Q, &[1, 1, 0]);
        assert_eq!(lc_hom(&s, &m, &n).dim(), nat_hom(&s, &m, &n).dim());
        assert_eq!(lc_hom(&s, &n, &m).dim(), nat_hom(&s, &n, &m).dim());
    }

    #[test]
    fn lc_hom_on_pullbacks_can_be_smaller_than_nat_hom() {
        // The locally constant hom out of a pullback is a proper subspace of
        // the full natural-transformation space in general: the parity
        // transformation v*sign ⇒ k̲ on ι(H(2,2)) is natural but its
        // components differ on the single identity class. (This is the
        // counterexample behind the local-constancy rows in `kan_right`.)
        let (v, h, s2) = hamming_sgn_morphism(2).unwrap();
        let m = restrict(&v, &h, &s2, &sign_rep(&s2, Q)).unwrap();
        let n = FunctorRep::constant(&h, Q, 1);
        assert_eq!(lc_hom(&h, &m, &n).dim(), 0);
        assert_eq!(nat_hom(&h, &m, &n).dim(), 1);
        assert_eq!(lc_hom(&h, &m, &m).dim(), nat_hom(&h, &m, &m).dim());
    }

    #[test]
    fn restrict_sign_along_sgn() {
        let (v, h, s2) = hamming_sgn_morphism(2).unwrap();
        let pulled = restrict(&v, &h, &s2, &sign_rep(&s2, Q)).unwrap();
        // T1 flips the parity, T2 preserves it
        assert_eq!(pulled, one_dim(&h, Q, &[1, -1, 1]));
        // restriction along the identity is the identity
        let c = FunctorRep::constant(&h, Q, 2);
        assert_eq!(restrict(&SchemoidMorphism::identity(&h), &h, &h, &c).unwrap(), c);
    }

    #[test]
    fn mitchell_sign_rep() {
        let s = groupoid_schemoid_of_cyclic(2);
        let (a, module) = mitchell(&s, Q, &sign_rep(&s, Q)).unwrap();
        assert_eq!(module.dim, 1);
        let id_block = s.block_of[s.cat.identity[0]];
        let alpha = 1 - id_block;
        assert_eq!(module.action[alpha], Matrix::from_rows(Q, vec![vec![Q.from_int(-1)]]));
        assert_eq!(a.dim, 2);
    }

    #[test]
    fn mitchell_rejects_large_constants() {
        let h = hamming_schemoid(2);
        let c = FunctorRep::constant(&h, Q, 1);
        assert!(matches!(
            mitchell(&h, Q, &c),
            Err(ModuleError::ConstantsTooLarge { p: 2, .. })
        ));
    }

    #[test]
    fn mitchell_eta_round_trip() {
        // S̃(Z/4) with the 2-dimensional rotation representation
        let s = groupoid_schemoid_of_cyclic(4);
        let qc = s.quotient_category().unwrap();
        let e = qc.cat.identity[0];
        let gen = (0..s.n_blocks())
            .find(|&b| b != e && qc.cat.compose[&(b, b)] != e)
            .expect("Z/4 has an element of order 4");
        let rot = Matrix::from_rows(
            Q,
            vec![
                vec![Q.zero(), Q.from_int(-1)],
                vec![Q.one(), Q.zero()],
            ],
        );
        let mut block_mats = vec![Matrix::identity(Q, 2); s.n_blocks()];
        let mut b = e;
        let mut power = Matrix::identity(Q, 2);
        for _ in 0..3 {
            b = qc.cat.compose[&(gen, b)];
            power = rot.mul(&power);
            block_mats[b] = power.clone();
        }
        let m = FunctorRep { field: Q, dims: vec![2; s.cat.n_objects], block_mats };
        assert_eq!(m.validate(&s), Ok(()));
        let (a, module) = mitchell(&s, Q, &m).unwrap();
        assert_eq!(mitchell_eta(&s, &a, &module), m);
    }

    fn trivial_module(a: &FDAlgebra) -> AlgModule {
        // every group-like basis element acts by 1 — valid for group algebras
        AlgModule { dim: 1, action: vec![Matrix::identity(a.field, 1); a.dim] }
    }

    fn regular_module(a: &FDAlgebra) -> AlgModule {
        AlgModule {
            dim: a.dim,
            action: (0..a.dim)
                .map(|j| a.left_mult(&crate::algebra::basis_vec(a.field, a.dim, j)))
                .collect(),
        }
    }

    #[test]
    fn resolution_of_free_module_stops() {
        let a = group_algebra(&cyclic_table(2), F2);
        let m = regular_module(&a);
        m.validate(&a).unwrap();
        let res = projective_resolution(&a, &m, 3);
        assert_eq!(res.ranks, vec![1, 0, 0, 0]);
    }

    #[test]
    fn resolution_of_trivial_f2z2_is_periodic() {
        let a = group_algebra(&cyclic_table(2), F2);
        let m = trivial_module(&a);
        m.validate(&a).unwrap();
        let res = projective_resolution(&a, &m, 4);
        assert_eq!(res.ranks, vec![1; 5]);
    }

    #[test]
    fn ext_f2z2_trivial() {
        let a = group_algebra(&cyclic_table(2), F2);
        let m = trivial_module(&a);
        assert_eq!(ext_dims(&a, &m, &m, 5), vec![1; 6]);
    }

    #[test]
    fn ext_qz2_semisimple() {
        let a = group_algebra(&cyclic_table(2), Q);
        let m = trivial_module(&a);
        assert_eq!(ext_dims(&a, &m, &m, 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn ext_truncated_polynomial_periodic() {
        // k = ℚ[x]/(x³) / (x): Ext^i(k, k) is 1-dimensional in every degree
        let a = FDAlgebra::truncated_polynomial(Q, 2);
        let mut action = vec![Matrix::identity(Q, 1)];
        action.extend(std::iter::repeat(Matrix::zero(Q, 1, 1)).take(a.dim - 1));
        let m = AlgModule { dim: 1, action };
        m.validate(&a).unwrap();
        let res = projective_resolution(&a, &m, 4);
        assert_eq!(res.ranks, vec![1; 5]);
        assert_eq!(ext_dims(&a, &m, &m, 3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn kan_right_identity() {
        let s = groupoid_schemoid_of_cyclic(2);
        let m = sign_rep(&s, Q);
        let ran = kan_right(&SchemoidMorphism::identity(&s), &s, &s, &m).unwrap();
        assert_eq!(ran.dims, m.dims);
        assert_eq!(lc_hom(&s, &m, &ran).dim(), 1);
        let lan = kan_left(&SchemoidMorphism::identity(&s), &s, &s, &m).unwrap();
        assert_eq!(lan.dims, m.dims);
    }

    #[test]
    fn kan_discrete_to_terminal_is_sum() {
        let s = discrete_two();
        let t = terminal_schemoid();
        let u = SchemoidMorphism::from_object_map(vec![0, 0], &s, &t).unwrap();
        let m = FunctorRep {
            field: Q,
            dims: vec![1, 2],
            block_mats: vec![Matrix::identity(Q, 1), Matrix::identity(Q, 2)],
        };
        assert_eq!(m.validate(&s), Ok(()));
        let ran = kan_right(&u, &s, &t, &m).unwrap();
        assert_eq!(ran.dims, vec![3]);
        let lan = kan_left(&u, &s, &t, &m).unwrap();
        assert_eq!(lan.dims, vec![3]);
        let f = FunctorRep::constant(&t, Q, 2);
        let (right, left) = adjunction_check(&u, &s, &t, &f, &m).unwrap();
        assert_eq!(right.0, right.1);
        assert_eq!(left.0, left.1);
    }

    #[test]
    fn kan_z2_invariants_and_coinvariants() {
        let s = z2_discrete();
        let t = terminal_schemoid();
        let u = SchemoidMorphism::from_object_map(vec![0], &s, &t).unwrap();
        let id_block = s.block_of[s.cat.identity[0]];
        let mut sign = vec![0; 2];
        sign[id_block] = 1;
        sign[1 - id_block] = -1;
        let sgn = one_dim(&s, Q, &sign);
        assert_eq!(sgn.validate(&s), Ok(()));
        // over ℚ the sign representation has no invariants or coinvariants
        assert_eq!(kan_right(&u, &s, &t, &sgn).unwrap().dims, vec![0]);
        assert_eq!(kan_left(&u, &s, &t, &sgn).unwrap().dims, vec![0]);
        let triv = FunctorRep::constant(&s, Q, 1);
        assert_eq!(kan_right(&u, &s, &t, &triv).unwrap().dims, vec![1]);
        assert_eq!(kan_left(&u, &s, &t, &triv).unwrap().dims, vec![1]);
    }

    #[test]
    fn adjunction_hamming_over_f2() {
        let (v, h, s2) = hamming_sgn_morphism(2).unwrap();
        let m = one_dim(&h, F2, &[1, 1, 1]);
        for f in enumerate_functor_reps(&s2, F2, 2).unwrap() {
            let (right, left) = adjunction_check(&v, &h, &s2, &f, &m).unwrap();
            assert_eq!(right.0, right.1);
            assert_eq!(left.0, left.1);
        }
    }

    #[test]
    fn cohomology_of_z2_is_group_cohomology() {
        let s = groupoid_schemoid_of_cyclic(2);
        let id = SchemoidMorphism::identity(&s);
        let m2 = FunctorRep::constant(&s, F2, 1);
        assert_eq!(schemoid_cohomology(&id, &s, &s, &m2, 3).unwrap(), vec![1, 1, 1, 1]);
        let mq = FunctorRep::constant(&s, Q, 1);
        assert_eq!(schemoid_cohomology(&id, &s, &s, &mq, 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn cohomology_of_z3() {
        let s = groupoid_schemoid_of_cyclic(3);
        let id = SchemoidMorphism::identity(&s);
        let m3 = FunctorRep::constant(&s, F3, 1);
        assert_eq!(schemoid_cohomology(&id, &s, &s, &m3, 3).unwrap(), vec![1, 1, 1, 1]);
        let mq = FunctorRep::constant(&s, Q, 1);
        assert_eq!(schemoid_cohomology(&id, &s, &s, &mq, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn cohomology_of_poset_with_initial_object() {
        let s = discrete(interval()).unwrap();
        let id = SchemoidMorphism::identity(&s);
        let m = FunctorRep::constant(&s, Q, 1);
        assert_eq!(schemoid_cohomology(&id, &s, &s, &m, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn cohomology_needs_tame_target() {
        // the length truncation is not tame, so the height morphism admits
        // no right Kan extension along our route
        let k = SimplicialComplex::new(1, vec![vec![0]]).unwrap();
        let ps = simplicial_schemoid(&k);
        let (u, target) = height_morphism(&ps);
        let m = FunctorRep::constant(&ps.schemoid, Q, 1);
        assert!(matches!(
            schemoid_cohomology(&u, &ps.schemoid, &target, &m, 2),
            Err(modules::CohomologyError::Kan(KanError::NotTame(_)))
        ));
    }

    #[test]
    fn morita_hamming_2_passes() {
        let (u, s2, h) = hamming_unit_morphism(2).unwrap();
        let (v, _, _) = hamming_sgn_morphism(2).unwrap();
        let report = morita_witness_check(&u, &v, &s2, &h, F2, 2);
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn morita_hamming_3_passes() {
        let (u, s2, h) = hamming_unit_morphism(3).unwrap();
        let (v, _, _) = hamming_sgn_morphism(3).unwrap();
        let report = morita_witness_check(&u, &v, &s2, &h, F2, 1);
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn morita_perturbed_fails() {
        let (u, s2, h) = hamming_unit_morphism(2).unwrap();
        // flip the parity map: still a schemoid morphism, no longer a retraction
        let obj_map = (0..h.cat.n_objects)
            .map(|p| 1 - (p.count_ones() as usize % 2))
            .collect();
        let v = SchemoidMorphism::from_object_map(obj_map, &h, &s2).unwrap();
        let report = morita_witness_check(&u, &v, &s2, &h, F2, 1);
        assert!(!report.passed);
        assert!(report.clause_retract.is_err());
    }

    #[test]
    fn bimodule_regular_is_identity() {
        // U = the regular bimodule of the quotient group algebra Q[Z/2],
        // lifted to the product schemoid: U is 2-dimensional everywhere, the
        // class of (φ, ψ) acts by right multiplication by [φ] composed with
        // left multiplication by [ψ], so a product block acts by the swap
        // matrix iff exactly one factor is a non-identity class
        let c = groupoid_schemoid_of_cyclic(2);
        let op = opposite_schemoid(&c);
        let prod = op.product(&c);
        let id1 = c.block_of[c.cat.identity[0]];
        let nb = c.n_blocks();
        let swap = Matrix::from_rows(
            Q,
            vec![vec![Q.from_int(0), Q.from_int(1)], vec![Q.from_int(1), Q.from_int(0)]],
        );
        let mut mats = Vec::new();
        for b1 in 0..nb {
            for b2 in 0..nb {
                let flips = (b1 != id1) as usize + (b2 != id1) as usize;
                mats.push(if flips % 2 == 0 { Matrix::identity(Q, 2) } else { swap.clone() });
            }
        }
        let u = FunctorRep { field: Q, dims: vec![2; prod.cat.n_objects], block_mats: mats };
        assert_eq!(u.validate(&prod), Ok(()));
        let f = sign_rep(&c, Q);
        let g = FunctorRep::constant(&c, Q, 1);
        let out = bimodule_functors(&u, &prod, &c, &c, &f, &g).unwrap();
        // sign ⊗ Q[Z/2] ≅ sign
        assert_eq!(out.tensor.dims, f.dims);
        for b in 0..nb {
            if b != id1 {
                assert_eq!(*out.tensor.block_mats[b].get(0, 0), Q.from_int(-1));
            }
        }
        assert_eq!(out.adjunction_dims.0, out.adjunction_dims.1);
    }

    #[test]
    fn bimodule_terminal_left_factor_is_pointwise() {
        let c1 = terminal_schemoid();
        let c2 = groupoid_schemoid_of_cyclic(2);
        let prod = opposite_schemoid(&c1).product(&c2);
        // U(⋆, -) is a representation of 𝒞₂ with the product's indexing
        let w = sign_rep(&c2, Q);
        let u = FunctorRep { field: Q, dims: w.dims.clone(), block_mats: w.block_mats.clone() };
        assert_eq!(u.validate(&prod), Ok(()));
        let f = FunctorRep::constant(&c1, Q, 2);
        let g = FunctorRep::constant(&c2, Q, 1);
        let out = bimodule_functors(&u, &prod, &c1, &c2, &f, &g).unwrap();
        // F ⊗ U = F(⋆) ⊗ U(⋆, -)
        assert_eq!(out.tensor.dims, vec![2, 2]);
        assert_eq!(out.adjunction_dims.0, out.adjunction_dims.1);
    }

    #[test]
    fn bimodule_constant_gives_coinvariants() {
        let c1 = z2_discrete();
        let c2 = terminal_schemoid();
        let prod = opposite_schemoid(&c1).product(&c2);
        let u = FunctorRep::constant(&prod, Q, 1);
        let id_block = c1.block_of[c1.cat.identity[0]];
        let mut sign = vec![0; 2];
        sign[id_block] = 1;
        sign[1 - id_block] = -1;
        let f = one_dim(&c1, Q, &sign);
        let g = FunctorRep::constant(&c2, Q, 1);
        let out = bimodule_functors(&u, &prod, &c1, &c2, &f, &g).unwrap();
        assert_eq!(out.tensor.dims, vec![0]);
        assert_eq!(out.adjunction_dims.0, out.adjunction_dims.1);
        let triv = FunctorRep::constant(&c1, Q, 1);
        let out = bimodule_functors(&u, &prod, &c1, &c2, &triv, &g).unwrap();
        assert_eq!(out.tensor.dims, vec![1]);
    }
}
