//! Partitions of a finite category's morphisms, the schemoid axiom and its
//! structure constants, tameness, the quotient category, schemoid morphisms,
//! homotopies, and small-scale isomorphism search.
//!
//! Composition convention, used everywhere in this crate: the structure
//! constant `p^μ_{στ}` counts, for any fixed h ∈ μ, the pairs (s, t) ∈ σ × τ
//! with s∘t = h (s is applied second). The Hamming tables depend on this
//! orientation.

use crate::fincat::{self, FinCat, MorId, ObjId};
use std::collections::{BTreeMap, HashMap, HashSet};
use thiserror::Error;

pub type BlockId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schemoid {
    pub cat: FinCat,
    /// block_of[f] is the block of morphism f.
    pub block_of: Vec<BlockId>,
    /// blocks[b] lists the morphisms of block b, ascending.
    pub blocks: Vec<Vec<MorId>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemoidError {
    #[error("underlying category is invalid")]
    InvalidCategory,
    #[error("block assignment has length {got}, expected {expected}")]
    BlockTableLength { got: usize, expected: usize },
    #[error("block {0} is empty")]
    EmptyBlock(BlockId),
    #[error("block ids are not dense: missing {0}")]
    NonDenseBlocks(BlockId),
    #[error(
        "schemoid axiom fails at (σ={sigma}, τ={tau}, μ={mu}): \
         morphism {f} has {count_f} factorizations but {g} has {count_g}"
    )]
    Axiom {
        sigma: BlockId,
        tau: BlockId,
        mu: BlockId,
        f: MorId,
        g: MorId,
        count_f: u64,
        count_g: u64,
    },
}

/// Sparse table of structure constants p^μ_{στ}, keyed (σ, τ, μ). Entries
/// absent mean zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureConstants {
    pub table: BTreeMap<(BlockId, BlockId, BlockId), u64>,
}

impl StructureConstants {
    pub fn get(&self, sigma: BlockId, tau: BlockId, mu: BlockId) -> u64 {
        self.table.get(&(sigma, tau, mu)).copied().unwrap_or(0)
    }

    pub fn max_value(&self) -> u64 {
        self.table.values().copied().max().unwrap_or(0)
    }
}

/// Per-(σ, τ) pair-count buckets: counts[(σ,τ)][h] = #{(s,t) ∈ σ×τ : s∘t = h}.
fn factorization_counts(
    cat: &FinCat,
    block_of: &[BlockId],
) -> HashMap<(BlockId, BlockId), HashMap<MorId, u64>> {
    let mut counts: HashMap<(BlockId, BlockId), HashMap<MorId, u64>> = HashMap::new();
    for (&(g, f), &gf) in &cat.compose {
        *counts
            .entry((block_of[g], block_of[f]))
            .or_default()
            .entry(gf)
            .or_insert(0) += 1;
    }
    counts
}

impl Schemoid {
    /// Validate a partition (given as blocks) against the schemoid axiom.
    pub fn new(cat: FinCat, blocks: Vec<Vec<MorId>>) -> Result<Schemoid, SchemoidError> {
        let n = cat.n_morphisms();
        let mut block_of = vec![usize::MAX; n];
        for (b, members) in blocks.iter().enumerate() {
            if members.is_empty() {
                return Err(SchemoidError::EmptyBlock(b));
            }
            for &m in members {
                if m >= n || block_of[m] != usize::MAX {
                    return Err(SchemoidError::BlockTableLength { got: m, expected: n });
                }
                block_of[m] = b;
            }
        }
        if let Some(m) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(SchemoidError::BlockTableLength { got: m, expected: n });
        }
        Schemoid::from_block_of(cat, block_of)
    }

    /// Validate a partition given as a total map morphism → block id.
    /// Block ids must be dense (every id below the maximum occurs).
    pub fn from_block_of(cat: FinCat, block_of: Vec<BlockId>) -> Result<Schemoid, SchemoidError> {
        if !cat.is_valid() {
            return Err(SchemoidError::InvalidCategory);
        }
        if block_of.len() != cat.n_morphisms() {
            return Err(SchemoidError::BlockTableLength {
                got: block_of.len(),
                expected: cat.n_morphisms(),
            });
        }
        let n_blocks = block_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); n_blocks];
        for (m, &b) in block_of.iter().enumerate() {
            blocks[b].push(m);
        }
        if let Some(b) = blocks.iter().position(|v| v.is_empty()) {
            return Err(SchemoidError::NonDenseBlocks(b));
        }
        let s = Schemoid { cat, block_of, blocks };
        s.check_axiom()?;
        Ok(s)
    }

    /// The schemoid axiom: for every (σ, τ, μ), the factorization count
    /// h ↦ #{(s,t) ∈ σ×τ : s∘t = h} is constant on μ. Returns the first
    /// witness of a violation.
    fn check_axiom(&self) -> Result<(), SchemoidError> {
        let counts = factorization_counts(&self.cat, &self.block_of);
        let mut keys: Vec<_> = counts.keys().copied().collect();
        keys.sort_unstable();
        for (sigma, tau) in keys {
            let bucket = &counts[&(sigma, tau)];
            // group the touched composites by their block μ
            let mut touched: BTreeMap<BlockId, (MorId, u64)> = BTreeMap::new();
            for (&h, &c) in bucket {
                let mu = self.block_of[h];
                match touched.get(&mu) {
                    None => {
                        touched.insert(mu, (h, c));
                    }
                    Some(&(h0, c0)) => {
                        if c0 != c {
                            let (f, g, cf, cg) = if h0 < h { (h0, h, c0, c) } else { (h, h0, c, c0) };
                            return Err(SchemoidError::Axiom {
                                sigma,
                                tau,
                                mu,
                                f,
                                g,
                                count_f: cf,
                                count_g: cg,
                            });
                        }
                    }
                }
            }
            // members of touched blocks with zero count must not exist
            for (&mu, &(h0, c0)) in &touched {
                if c0 == 0 {
                    continue;
                }
                for &h in &self.blocks[mu] {
                    if !bucket.contains_key(&h) {
                        return Err(SchemoidError::Axiom {
                            sigma,
                            tau,
                            mu,
                            f: h0.min(h),
                            g: h0.max(h),
                            count_f: if h0 < h { c0 } else { 0 },
                            count_g: if h0 < h { 0 } else { c0 },
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The sparse structure-constant table.
    pub fn structure_constants(&self) -> StructureConstants {
        let counts = factorization_counts(&self.cat, &self.block_of);
        let mut table = BTreeMap::new();
        for ((sigma, tau), bucket) in counts {
            for (h, c) in bucket {
                table.insert((sigma, tau, self.block_of[h]), c);
            }
        }
        StructureConstants { table }
    }

    /// Objects grouped by the block of their identity (identity classes),
    /// ordered by smallest member object.
    pub fn identity_classes(&self) -> Vec<Vec<ObjId>> {
        let mut by_block: BTreeMap<BlockId, Vec<ObjId>> = BTreeMap::new();
        for x in 0..self.cat.n_objects {
            by_block.entry(self.block_of[self.cat.identity[x]]).or_default().push(x);
        }
        let mut classes: Vec<Vec<ObjId>> = by_block.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// class_of[x] = index of the identity class of object x, matching the
    /// order of `identity_classes`.
    pub fn class_of_objects(&self) -> Vec<usize> {
        let classes = self.identity_classes();
        let mut class_of = vec![0; self.cat.n_objects];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        class_of
    }

    pub fn is_identity_morphism(&self, f: MorId) -> bool {
        self.cat.identity[self.cat.source(f)] == f
    }

    /// T(i): every block meeting an identity consists only of identities.
    pub fn is_unital(&self) -> bool {
        let id_set: HashSet<MorId> = self.cat.identity.iter().copied().collect();
        self.blocks.iter().all(|members| {
            let hits = members.iter().filter(|m| id_set.contains(m)).count();
            hits == 0 || hits == members.len()
        })
    }

    /// T(ii): within each block, all sources lie in one identity class and
    /// all targets lie in one identity class.
    pub fn tii_holds(&self) -> bool {
        self.blocks.iter().all(|members| {
            let src_block = |&m: &MorId| self.block_of[self.cat.identity[self.cat.source(m)]];
            let tgt_block = |&m: &MorId| self.block_of[self.cat.identity[self.cat.target(m)]];
            members.windows(2).all(|w| {
                src_block(&w[0]) == src_block(&w[1]) && tgt_block(&w[0]) == tgt_block(&w[1])
            })
        })
    }

    /// Endpoints of blocks in the quotient diagram, as identity-class
    /// indices; requires T(ii).
    fn block_endpoints(&self) -> Option<Vec<(usize, usize)>> {
        if !self.tii_holds() {
            return None;
        }
        let class_of = self.class_of_objects();
        Some(
            self.blocks
                .iter()
                .map(|members| {
                    let m = members[0];
                    (class_of[self.cat.source(m)], class_of[self.cat.target(m)])
                })
                .collect(),
        )
    }

    pub fn tameness_report(&self) -> TamenessReport {
        let unital = self.is_unital();
        let tii_holds = self.tii_holds();
        let constants = self.structure_constants();
        let mut mu_table = BTreeMap::new();
        let mut tiii_failure = None;
        if let Some(endpoints) = self.block_endpoints() {
            'pairs: for tau in 0..self.n_blocks() {
                for sigma in 0..self.n_blocks() {
                    // composable [x] --σ--> [y] --τ--> [z] means s(τ) = t(σ)
                    if endpoints[tau].0 != endpoints[sigma].1 {
                        continue;
                    }
                    let composable = self.blocks[tau].iter().any(|&g| {
                        self.blocks[sigma]
                            .iter()
                            .any(|&f| self.cat.source(g) == self.cat.target(f))
                    });
                    if !composable {
                        tiii_failure = Some(TiiiFailure::NoComposableRepresentatives { tau, sigma });
                        break 'pairs;
                    }
                    let mus: Vec<BlockId> = (0..self.n_blocks())
                        .filter(|&mu| constants.get(tau, sigma, mu) >= 1)
                        .collect();
                    match mus.as_slice() {
                        [mu] => {
                            mu_table.insert((tau, sigma), *mu);
                        }
                        [] => {
                            // composable representatives exist so some μ must
                            // carry the composite; unreachable on a valid
                            // schemoid, kept as a guard.
                            tiii_failure =
                                Some(TiiiFailure::NoComposableRepresentatives { tau, sigma });
                            break 'pairs;
                        }
                        _ => {
                            tiii_failure = Some(TiiiFailure::NonUniqueProduct {
                                tau,
                                sigma,
                                mus: mus.clone(),
                            });
                            break 'pairs;
                        }
                    }
                }
            }
        } else {
            tiii_failure = Some(TiiiFailure::TiiFails);
        }
        let tiii_holds = tiii_failure.is_none();
        TamenessReport {
            unital,
            tii_holds,
            tiii_holds,
            mu_table: if tiii_holds { Some(mu_table) } else { None },
            tiii_failure,
            tame: unital && tiii_holds,
        }
    }

    pub fn is_tame(&self) -> bool {
        self.tameness_report().tame
    }

    /// The quotient category [C] of a tame schemoid: objects are identity
    /// classes, morphisms are blocks, composition τ∘σ = μ(τ, σ). The
    /// projection sends f to its block.
    pub fn quotient_category(&self) -> Result<QuotientCategory, TamenessReport> {
        let report = self.tameness_report();
        if !report.tame {
            return Err(report);
        }
        let classes = self.identity_classes();
        let class_of = self.class_of_objects();
        let endpoints = self.block_endpoints().expect("tame implies T(ii)");
        let identity = classes
            .iter()
            .map(|c| self.block_of[self.cat.identity[c[0]]])
            .collect();
        let mu_table = report.mu_table.as_ref().expect("tame implies μ table");
        let compose = mu_table.iter().map(|(&(tau, sigma), &mu)| ((tau, sigma), mu)).collect();
        let cat = FinCat {
            n_objects: classes.len(),
            morphisms: endpoints,
            identity,
            compose,
        };
        Ok(QuotientCategory {
            cat,
            class_of_object: class_of,
            projection: self.block_of.clone(),
        })
    }

    /// Blocks are pairs of blocks; block (b, b') of the product has index
    /// b·|blocks S'| + b'.
    pub fn product(&self, other: &Schemoid) -> Schemoid {
        let cat = self.cat.product(&other.cat);
        let nm = other.cat.n_morphisms();
        let nb = other.n_blocks();
        let block_of = (0..cat.n_morphisms())
            .map(|m| {
                let (f, g) = (m / nm, m % nm);
                self.block_of[f] * nb + other.block_of[g]
            })
            .collect();
        Schemoid::from_block_of(cat, block_of).expect("product of schemoids is a schemoid")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TiiiFailure {
    TiiFails,
    /// Blocks composable in the quotient diagram with no composable
    /// representative pair (f ∈ σ, g ∈ τ, s(g) = t(f)).
    NoComposableRepresentatives { tau: BlockId, sigma: BlockId },
    NonUniqueProduct { tau: BlockId, sigma: BlockId, mus: Vec<BlockId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamenessReport {
    pub unital: bool,
    pub tii_holds: bool,
    pub tiii_holds: bool,
    /// μ(τ, σ) for each composable block pair, when T(iii) holds.
    pub mu_table: Option<BTreeMap<(BlockId, BlockId), BlockId>>,
    pub tiii_failure: Option<TiiiFailure>,
    pub tame: bool,
}

/// The quotient category of a tame schemoid; morphism ids are block ids and
/// object ids index the identity classes (ordered by smallest member).
#[derive(Debug, Clone)]
pub struct QuotientCategory {
    pub cat: FinCat,
    pub class_of_object: Vec<usize>,
    /// projection[f] = block of f = the image morphism in [C].
    pub projection: Vec<BlockId>,
}

/// A functor between underlying categories that maps each block into a
/// single target block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemoidMorphism {
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
    /// block_map[σ] = the block of the target containing the image of σ.
    pub block_map: Vec<BlockId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("object/morphism map has wrong length or out-of-range entries")]
    Shape,
    #[error("morphism {f}: endpoints not preserved")]
    Endpoints { f: MorId },
    #[error("identity of object {x} not sent to an identity image")]
    Identity { x: ObjId },
    #[error("composition not preserved at (g={g}, f={f})")]
    Composition { g: MorId, f: MorId },
    #[error("block {block} maps into two target blocks, witnessed by morphisms {f} and {g}")]
    BlockSplit { block: BlockId, f: MorId, g: MorId },
}

impl SchemoidMorphism {
    /// Check functoriality of (obj_map, mor_map) and compute the induced
    /// block map.
    pub fn validate(
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
        source: &Schemoid,
        target: &Schemoid,
    ) -> Result<SchemoidMorphism, MorphismError> {
        let (sc, tc) = (&source.cat, &target.cat);
        if obj_map.len() != sc.n_objects
            || mor_map.len() != sc.n_morphisms()
            || obj_map.iter().any(|&x| x >= tc.n_objects)
            || mor_map.iter().any(|&f| f >= tc.n_morphisms())
        {
            return Err(MorphismError::Shape);
        }
        for f in 0..sc.n_morphisms() {
            if tc.source(mor_map[f]) != obj_map[sc.source(f)]
                || tc.target(mor_map[f]) != obj_map[sc.target(f)]
            {
                return Err(MorphismError::Endpoints { f });
            }
        }
        for x in 0..sc.n_objects {
            if mor_map[sc.identity[x]] != tc.identity[obj_map[x]] {
                return Err(MorphismError::Identity { x });
            }
        }
        for (&(g, f), &gf) in &sc.compose {
            let img = tc
                .compose
                .get(&(mor_map[g], mor_map[f]))
                .copied()
                .ok_or(MorphismError::Composition { g, f })?;
            if img != mor_map[gf] {
                return Err(MorphismError::Composition { g, f });
            }
        }
        let mut block_map = Vec::with_capacity(source.n_blocks());
        for members in &source.blocks {
            let tb = target.block_of[mor_map[members[0]]];
            for &m in members {
                if target.block_of[mor_map[m]] != tb {
                    return Err(MorphismError::BlockSplit {
                        block: source.block_of[members[0]],
                        f: members[0],
                        g: m,
                    });
                }
            }
            block_map.push(tb);
        }
        Ok(SchemoidMorphism { obj_map, mor_map, block_map })
    }

    pub fn identity(s: &Schemoid) -> SchemoidMorphism {
        SchemoidMorphism {
            obj_map: (0..s.cat.n_objects).collect(),
            mor_map: (0..s.cat.n_morphisms()).collect(),
            block_map: (0..s.n_blocks()).collect(),
        }
    }

    /// Compose v∘u where u: S → S' (self = u) and v: S' → S''.
    pub fn then(&self, v: &SchemoidMorphism) -> SchemoidMorphism {
        SchemoidMorphism {
            obj_map: self.obj_map.iter().map(|&x| v.obj_map[x]).collect(),
            mor_map: self.mor_map.iter().map(|&f| v.mor_map[f]).collect(),
            block_map: self.block_map.iter().map(|&b| v.block_map[b]).collect(),
        }
    }

    /// Build a morphism from an object map alone, when each relevant hom-set
    /// of the target is a singleton (association-scheme style targets).
    pub fn from_object_map(
        obj_map: Vec<ObjId>,
        source: &Schemoid,
        target: &Schemoid,
    ) -> Result<SchemoidMorphism, MorphismError> {
        if obj_map.len() != source.cat.n_objects {
            return Err(MorphismError::Shape);
        }
        let mut mor_map = Vec::with_capacity(source.cat.n_morphisms());
        for f in 0..source.cat.n_morphisms() {
            let hom = target
                .cat
                .hom(obj_map[source.cat.source(f)], obj_map[source.cat.target(f)]);
            match hom.as_slice() {
                [m] => mor_map.push(*m),
                _ => return Err(MorphismError::Endpoints { f }),
            }
        }
        SchemoidMorphism::validate(obj_map, mor_map, source, target)
    }

    /// The functor [u] between quotient categories of tame schemoids, as
    /// (object map, morphism map). Object map sends a class of S to the class
    /// of its image; morphism map is the block map.
    pub fn quotient_functor(
        &self,
        source: &Schemoid,
        target: &Schemoid,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let qs = source.quotient_category().ok()?;
        let qt = target.quotient_category().ok()?;
        let mut obj = vec![usize::MAX; qs.cat.n_objects];
        for x in 0..source.cat.n_objects {
            let img = qt.class_of_object[self.obj_map[x]];
            let cls = qs.class_of_object[x];
            if obj[cls] != usize::MAX && obj[cls] != img {
                return None;
            }
            obj[cls] = img;
        }
        Some((obj, self.block_map.clone()))
    }
}

/// The discrete schemoid on the interval category: the homotopy cylinder
/// factor I.
pub fn interval_schemoid() -> Schemoid {
    let cat = fincat::interval();
    let blocks = (0..cat.n_morphisms()).map(|m| vec![m]).collect();
    Schemoid::new(cat, blocks).expect("discrete schemoid on a valid category")
}

/// ε_i : S → S × I picking the end i ∈ {0, 1} of the cylinder.
pub fn cylinder_end(s: &Schemoid, end: usize) -> SchemoidMorphism {
    assert!(end < 2);
    let product = s.product(&interval_schemoid());
    let obj_map = (0..s.cat.n_objects).map(|a| a * 2 + end).collect();
    // morphism f ↦ (f, id_end); in I, id_0 = 0 and id_1 = 1
    let mor_map = (0..s.cat.n_morphisms()).map(|f| f * 3 + end).collect();
    SchemoidMorphism::validate(obj_map, mor_map, s, &product).expect("cylinder end is a morphism")
}

/// Restrict a homotopy H : S × I → S' to its two ends (F, G).
pub fn check_homotopy(
    h: &SchemoidMorphism,
    s: &Schemoid,
    target: &Schemoid,
) -> Result<(SchemoidMorphism, SchemoidMorphism), MorphismError> {
    let product = s.product(&interval_schemoid());
    // re-validate H against the cylinder
    let h = SchemoidMorphism::validate(h.obj_map.clone(), h.mor_map.clone(), &product, target)?;
    let e0 = cylinder_end(s, 0);
    let e1 = cylinder_end(s, 1);
    let f = e0.then(&h);
    let g = e1.then(&h);
    let f = SchemoidMorphism::validate(f.obj_map, f.mor_map, s, target)?;
    let g = SchemoidMorphism::validate(g.obj_map, g.mor_map, s, target)?;
    Ok((f, g))
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("isomorphism search refused: {objects} objects exceeds the bound {bound}")]
pub struct SizeGuardError {
    pub objects: usize,
    pub bound: usize,
}

/// Default object-count cutoff for the brute-force isomorphism search.
pub const DEFAULT_ISO_BOUND: usize = 8;

/// Exhaustive search for a schemoid isomorphism: bijections on objects and
/// morphisms, functorial both ways, carrying blocks onto blocks. Returns a
/// witness or `None` after exhausting the search space.
pub fn schemoid_isomorphic_bruteforce(
    a: &Schemoid,
    b: &Schemoid,
    bound: usize,
) -> Result<Option<SchemoidMorphism>, SizeGuardError> {
    if a.cat.n_objects > bound || b.cat.n_objects > bound {
        return Err(SizeGuardError {
            objects: a.cat.n_objects.max(b.cat.n_objects),
            bound,
        });
    }
    if a.cat.n_objects != b.cat.n_objects
        || a.cat.n_morphisms() != b.cat.n_morphisms()
        || a.n_blocks() != b.n_blocks()
    {
        return Ok(None);
    }
    let mut sizes_a: Vec<usize> = a.blocks.iter().map(|v| v.len()).collect();
    let mut sizes_b: Vec<usize> = b.blocks.iter().map(|v| v.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return Ok(None);
    }
    let mut obj_map = vec![usize::MAX; a.cat.n_objects];
    let mut used_obj = vec![false; b.cat.n_objects];
    Ok(search_objects(a, b, &mut obj_map, &mut used_obj, 0))
}

fn search_objects(
    a: &Schemoid,
    b: &Schemoid,
    obj_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    next: usize,
) -> Option<SchemoidMorphism> {
    if next == a.cat.n_objects {
        let mut mor_map = vec![usize::MAX; a.cat.n_morphisms()];
        let mut used_m = vec![false; b.cat.n_morphisms()];
        let mut block_map = vec![usize::MAX; a.n_blocks()];
        let mut block_used = vec![false; b.n_blocks()];
        return search_morphisms(a, b, obj_map, &mut mor_map, &mut used_m, &mut block_map, &mut block_used, 0);
    }
    for img in 0..b.cat.n_objects {
        if used[img] {
            continue;
        }
        // hom-set sizes with already-placed objects must match
        let ok = (0..next).all(|x| {
            a.cat.hom(x, next).len() == b.cat.hom(obj_map[x], img).len()
                && a.cat.hom(next, x).len() == b.cat.hom(img, obj_map[x]).len()
        }) && a.cat.hom(next, next).len() == b.cat.hom(img, img).len();
        if !ok {
            continue;
        }
        obj_map[next] = img;
        used[img] = true;
        if let Some(w) = search_objects(a, b, obj_map, used, next + 1) {
            return Some(w);
        }
        used[img] = false;
        obj_map[next] = usize::MAX;
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn search_morphisms(
    a: &Schemoid,
    b: &Schemoid,
    obj_map: &[usize],
    mor_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    block_map: &mut Vec<usize>,
    block_used: &mut Vec<bool>,
    next: usize,
) -> Option<SchemoidMorphism> {
    if next == a.cat.n_morphisms() {
        // full functoriality and block bijection are enforced incrementally;
        // one final validation keeps the invariant airtight.
        return SchemoidMorphism::validate(obj_map.to_vec(), mor_map.clone(), a, b).ok();
    }
    let (s, t) = a.cat.morphisms[next];
    let want = (obj_map[s], obj_map[t]);
    let ba = a.block_of[next];
    for img in b.cat.hom(want.0, want.1) {
        if used[img] {
            continue;
        }
        // identities to identities
        if a.is_identity_morphism(next) != b.is_identity_morphism(img) {
            continue;
        }
        // block consistency: partial block map stays single-valued and injective
        let bb = b.block_of[img];
        let fresh_block = block_map[ba] == usize::MAX;
        if fresh_block {
            if block_used[bb] || a.blocks[ba].len() != b.blocks[bb].len() {
                continue;
            }
        } else if block_map[ba] != bb {
            continue;
        }
        // composition closure against already assigned morphisms
        let compatible = (0..=next).all(|other| {
            let o_img = if other == next { img } else { mor_map[other] };
            if o_img == usize::MAX {
                return true;
            }
            let pairs = [(next, other), (other, next)];
            pairs.iter().all(|&(g, f)| {
                let (gi, fi) = (
                    if g == next { img } else { mor_map[g] },
                    if f == next { img } else { mor_map[f] },
                );
                match a.cat.compose.get(&(g, f)) {
                    Some(&gf) => match b.cat.compose.get(&(gi, fi)) {
                        Some(&gfi) => mor_map[gf] == usize::MAX || mor_map[gf] == gfi,
                        None => false,
                    },
                    None => !b.cat.compose.contains_key(&(gi, fi)),
                }
            })
        });
        if !compatible {
            continue;
        }
        mor_map[next] = img;
        used[img] = true;
        if fresh_block {
            block_map[ba] = bb;
            block_used[bb] = true;
        }
        if let Some(w) = search_morphisms(a, b, obj_map, mor_map, used, block_map, block_used, next + 1) {
            return Some(w);
        }
        if fresh_block {
            block_map[ba] = usize::MAX;
            block_used[bb] = false;
        }
        used[img] = false;
        mor_map[next] = usize::MAX;
    }
    None
}
