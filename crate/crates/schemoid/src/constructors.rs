//! Schemoid constructions: discrete, association-scheme, Hamming, group-case,
//! groupoid, truncated (N, len), powerset-difference, simplicial-complex and
//! open-set schemoids, together with the height, indicator, simplicial-map
//! and continuous-map morphisms.

use crate::fincat::{self, FinCat, MorId, ObjId};
use crate::schemoid::{Schemoid, SchemoidMorphism};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("subgroup is not closed: {a}·{b} = {product} is outside")]
    SubgroupNotClosed { a: usize, b: usize, product: usize },
    #[error("morphism {0} of the input category is not invertible")]
    NotInvertible(MorId),
    #[error("face {0:?} is missing a subset {1:?}: complex not downward closed")]
    NotDownwardClosed(Vec<usize>, Vec<usize>),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("topology axiom fails: {0}")]
    Topology(String),
    #[error("association scheme invalid: {0}")]
    InvalidScheme(String),
    #[error("map is not simplicial: image of face {0:?} is not a face")]
    NotSimplicial(Vec<usize>),
    #[error("degenerate non-constant component: f({i}) = f({j}) on the edge {{{i},{j}}}")]
    Degenerate { i: usize, j: usize },
    #[error("map is not continuous: preimage of open set {0:?} is not open")]
    NotContinuous(Vec<usize>),
    #[error("schemoid construction failed: {0}")]
    Schemoid(String),
}

/// The discrete schemoid: every morphism its own block.
pub fn discrete(cat: FinCat) -> Result<Schemoid, ConstructError> {
    let n = cat.n_morphisms();
    Schemoid::new(cat, (0..n).map(|m| vec![m]).collect())
        .map_err(|e| ConstructError::Schemoid(e.to_string()))
}

/// The terminal schemoid: discrete on the terminal category.
pub fn terminal_schemoid() -> Schemoid {
    discrete(fincat::terminal()).expect("terminal schemoid")
}

// ---------------------------------------------------------------------------
// association schemes

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    pub n_points: usize,
    /// relation_of[x·n + y] = relation id of the pair (x, y).
    pub relation_of: Vec<usize>,
    pub n_relations: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SchemeReport {
    /// Axiom failures, each with a human-readable witness.
    pub violations: Vec<String>,
    /// Intersection numbers p^g_{ef}, keyed (e, f, g), when the scheme is valid.
    pub intersection_numbers: BTreeMap<(usize, usize, usize), u64>,
}

impl SchemeReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl AssociationScheme {
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.relation_of[x * self.n_points + y]
    }

    /// Check the scheme axioms: the diagonal is a relation, relations are
    /// closed under transpose, and intersection numbers are constant.
    pub fn validate(&self) -> SchemeReport {
        let n = self.n_points;
        let mut report = SchemeReport::default();
        if self.relation_of.len() != n * n
            || self.relation_of.iter().any(|&r| r >= self.n_relations)
        {
            report.violations.push("relation table malformed".into());
            return report;
        }
        // diagonal
        let diag = self.relation(0, 0);
        for x in 0..n {
            if self.relation(x, x) != diag {
                report
                    .violations
                    .push(format!("diagonal pairs (0,0) and ({x},{x}) are in different relations"));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.relation(x, y) == diag {
                    report
                        .violations
                        .push(format!("off-diagonal pair ({x},{y}) lies in the diagonal relation"));
                }
            }
        }
        // transpose closure: the transpose of each relation is a relation
        for e in 0..self.n_relations {
            let mut transpose_of: Option<usize> = None;
            for x in 0..n {
                for y in 0..n {
                    if self.relation(x, y) == e {
                        let t = self.relation(y, x);
                        match transpose_of {
                            None => transpose_of = Some(t),
                            Some(t0) if t0 != t => report.violations.push(format!(
                                "relation {e} has transposes in both {t0} and {t} (witness ({y},{x}))"
                            )),
                            _ => {}
                        }
                    }
                }
            }
        }
        if !report.violations.is_empty() {
            return report;
        }
        // intersection numbers
        for e in 0..self.n_relations {
            for f in 0..self.n_relations {
                let mut per_g: HashMap<usize, (usize, usize, u64)> = HashMap::new();
                for x in 0..n {
                    for z in 0..n {
                        let g = self.relation(x, z);
                        let c = (0..n)
                            .filter(|&y| self.relation(x, y) == e && self.relation(y, z) == f)
                            .count() as u64;
                        match per_g.get(&g) {
                            None => {
                                per_g.insert(g, (x, z, c));
                            }
                            Some(&(x0, z0, c0)) => {
                                if c0 != c {
                                    report.violations.push(format!(
                                        "p^{g}_{{{e}{f}}} differs: ({x0},{z0}) gives {c0}, ({x},{z}) gives {c}"
                                    ));
                                }
                            }
                        }
                    }
                }
                for (g, (_, _, c)) in per_g {
                    if c > 0 {
                        report.intersection_numbers.insert((e, f, g), c);
                    }
                }
            }
        }
        report
    }

    /// The schemoid ι(X, S): objects = points, Hom(y, x) = {(x, y)}, blocks =
    /// relations. Morphism (x, y) has index x·n + y, source y and target x.
    pub fn to_schemoid(&self) -> Result<Schemoid, ConstructError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(ConstructError::InvalidScheme(report.violations.join("; ")));
        }
        let n = self.n_points;
        let mut morphisms = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                morphisms.push((y, x)); // (x, y) : y → x
            }
        }
        let identity = (0..n).map(|x| x * n + x).collect();
        let mut compose = HashMap::new();
        // (z, x) ∘ (x, y) = (z, y)
        for z in 0..n {
            for x in 0..n {
                for y in 0..n {
                    compose.insert((z * n + x, x * n + y), z * n + y);
                }
            }
        }
        let cat = FinCat { n_objects: n, morphisms, identity, compose };
        Schemoid::from_block_of(cat, self.relation_of.clone())
            .map_err(|e| ConstructError::Schemoid(e.to_string()))
    }
}

/// The binary Hamming scheme H(n, 2): points {0,1}^n, relation T_i = pairs at
/// Hamming distance i. Relation id equals the distance.
pub fn hamming(n: usize) -> Result<AssociationScheme, ConstructError> {
    if n == 0 || n > 10 {
        return Err(ConstructError::Guard(format!("hamming length {n} outside 1..=10")));
    }
    let points = 1usize << n;
    let mut relation_of = Vec::with_capacity(points * points);
    for x in 0..points {
        for y in 0..points {
            relation_of.push((x ^ y).count_ones() as usize);
        }
    }
    Ok(AssociationScheme { n_points: points, relation_of, n_relations: n + 1 })
}

/// The group-case association scheme on G/H: points are left cosets, relations
/// are the orbits of G acting diagonally on G/H × G/H. `table` is a group
/// multiplication table with unit 0; `subgroup` lists the member indices.
pub fn group_case(
    table: &[Vec<usize>],
    subgroup: &[usize],
) -> Result<AssociationScheme, ConstructError> {
    let n = table.len();
    let h: BTreeSet<usize> = subgroup.iter().copied().collect();
    if !h.contains(&0) {
        return Err(ConstructError::SubgroupNotClosed { a: 0, b: 0, product: 0 });
    }
    for &a in &h {
        for &b in &h {
            if a >= n || b >= n || !h.contains(&table[a][b]) {
                return Err(ConstructError::SubgroupNotClosed { a, b, product: table[a][b] });
            }
        }
    }
    // left cosets gH, keyed by their sorted member set
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let c: BTreeSet<usize> = h.iter().map(|&x| table[g][x]).collect();
        let id = cosets.len();
        for &m in &c {
            coset_of[m] = id;
        }
        cosets.push(c);
    }
    let k = cosets.len();
    // orbits of G on pairs of cosets
    let mut relation_of = vec![usize::MAX; k * k];
    let mut n_relations = 0;
    for x in 0..k {
        for y in 0..k {
            if relation_of[x * k + y] != usize::MAX {
                continue;
            }
            let rel = n_relations;
            n_relations += 1;
            // BFS over the G-action
            let mut stack = vec![(x, y)];
            while let Some((a, b)) = stack.pop() {
                if relation_of[a * k + b] != usize::MAX {
                    continue;
                }
                relation_of[a * k + b] = rel;
                let (ra, rb) = (*cosets[a].iter().next().unwrap(), *cosets[b].iter().next().unwrap());
                for g in 0..n {
                    stack.push((coset_of[table[g][ra]], coset_of[table[g][rb]]));
                }
            }
        }
    }
    Ok(AssociationScheme { n_points: k, relation_of, n_relations })
}

/// The schemoid S(G) of a group: the group-case scheme with trivial subgroup,
/// passed through ι.
pub fn group_schemoid(table: &[Vec<usize>]) -> Result<Schemoid, ConstructError> {
    group_case(table, &[0])?.to_schemoid()
}

// ---------------------------------------------------------------------------
// groupoid schemoid S̃(H)

/// The schemoid S̃(H) of a groupoid: objects are the morphisms of H, there is
/// one morphism (h, g) : g → h whenever t(h) = t(g), and the blocks are
/// 𝒢_f = {(k, l) : k⁻¹∘l = f}. Block id = the index of f in mor(H).
pub fn from_groupoid(h: &FinCat) -> Result<Schemoid, ConstructError> {
    if !h.is_valid() {
        return Err(ConstructError::Schemoid("input category invalid".into()));
    }
    let inv = h.inverses().map_err(ConstructError::NotInvertible)?;
    let n = h.n_morphisms();
    let mut pair_id: HashMap<(MorId, MorId), usize> = HashMap::new();
    let mut morphisms = Vec::new();
    for k in 0..n {
        for l in 0..n {
            if h.target(k) == h.target(l) {
                pair_id.insert((k, l), morphisms.len());
                morphisms.push((l, k)); // (k, l) : l → k
            }
        }
    }
    let identity = (0..n).map(|g| pair_id[&(g, g)]).collect();
    let mut compose = HashMap::new();
    for (&(k, g), &m1) in &pair_id {
        for (&(g2, f), &m2) in &pair_id {
            if g == g2 {
                compose.insert((m1, m2), pair_id[&(k, f)]);
            }
        }
    }
    let cat = FinCat { n_objects: n, morphisms, identity, compose };
    let mut block_of = vec![0; cat.n_morphisms()];
    for (&(k, l), &m) in &pair_id {
        // block key: k⁻¹ ∘ l in H
        block_of[m] = h.compose.get(&(inv[k], l)).copied().expect("t(k) = t(l) makes k⁻¹∘l defined");
    }
    Schemoid::from_block_of(cat, block_of).map_err(|e| ConstructError::Schemoid(e.to_string()))
}

/// S̃(Z/m) as a convenience.
pub fn groupoid_schemoid_of_cyclic(m: usize) -> Schemoid {
    from_groupoid(&fincat::one_object_group(&fincat::cyclic_table(m))).expect("group is a groupoid")
}

// ---------------------------------------------------------------------------
// truncated (N, len)

/// The truncation of (N, len) to objects 0..=n: one arrow i → j iff i ≤ j,
/// blocks by length j − i (block id = length).
pub fn truncated_len(n: usize) -> Schemoid {
    let mut morphisms = Vec::new();
    let mut id_of = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            id_of.insert((i, j), morphisms.len());
            morphisms.push((i, j));
        }
    }
    let identity = (0..=n).map(|i| id_of[&(i, i)]).collect();
    let mut compose = HashMap::new();
    for (&(j2, k), &g) in &id_of {
        for (&(i, j), &f) in &id_of {
            if j == j2 {
                compose.insert((g, f), id_of[&(i, k)]);
            }
        }
    }
    let cat = FinCat { n_objects: n + 1, morphisms, identity, compose };
    let block_of = cat.morphisms.iter().map(|&(i, j)| j - i).collect();
    Schemoid::from_block_of(cat, block_of).expect("(N≤n, len) is a schemoid")
}

// ---------------------------------------------------------------------------
// powerset-difference schemoids

/// A powerset-difference schemoid together with the sets naming its objects
/// and the difference sets naming its blocks.
#[derive(Debug, Clone)]
pub struct PowersetSchemoid {
    pub schemoid: Schemoid,
    /// object_sets[x] = the subset that object x stands for; ordered by
    /// (size, lexicographic).
    pub object_sets: Vec<BTreeSet<usize>>,
    /// block_keys[b] = the difference set of block b; same ordering.
    pub block_keys: Vec<BTreeSet<usize>>,
}

impl PowersetSchemoid {
    pub fn object_of(&self, set: &BTreeSet<usize>) -> Option<ObjId> {
        self.object_sets.iter().position(|s| s == set)
    }
}

fn set_order_key(s: &BTreeSet<usize>) -> (usize, Vec<usize>) {
    (s.len(), s.iter().copied().collect())
}

/// The schemoid of a family Θ of subsets: objects are the sets, morphisms the
/// inclusions, and the blocks are keyed by the difference V∖U.
pub fn powerset_difference(theta: &[BTreeSet<usize>]) -> PowersetSchemoid {
    let mut object_sets: Vec<BTreeSet<usize>> = theta.to_vec();
    object_sets.sort_by_key(set_order_key);
    object_sets.dedup();
    let n_obj = object_sets.len();
    let mut morphisms = Vec::new();
    let mut diffs = Vec::new();
    let mut id_of = HashMap::new();
    for u in 0..n_obj {
        for v in 0..n_obj {
            if object_sets[u].is_subset(&object_sets[v]) {
                id_of.insert((u, v), morphisms.len());
                morphisms.push((u, v));
                diffs.push(object_sets[v].difference(&object_sets[u]).copied().collect::<BTreeSet<_>>());
            }
        }
    }
    let identity = (0..n_obj).map(|u| id_of[&(u, u)]).collect();
    let mut compose = HashMap::new();
    for (&(w, v2), &g) in &id_of {
        for (&(u, w2), &f) in &id_of {
            if w == w2 {
                compose.insert((g, f), id_of[&(u, v2)]);
            }
        }
    }
    let cat = FinCat { n_objects: n_obj, morphisms, identity, compose };
    let mut block_keys: Vec<BTreeSet<usize>> = diffs.clone();
    block_keys.sort_by_key(set_order_key);
    block_keys.dedup();
    let block_of = diffs
        .iter()
        .map(|d| block_keys.iter().position(|k| k == d).unwrap())
        .collect();
    let schemoid =
        Schemoid::from_block_of(cat, block_of).expect("powerset-difference family is a schemoid");
    PowersetSchemoid { schemoid, object_sets, block_keys }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub n_vertices: usize,
    /// Non-empty faces, each a set of vertex indices < n_vertices.
    pub faces: BTreeSet<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn new(n_vertices: usize, faces: Vec<Vec<usize>>) -> Result<SimplicialComplex, ConstructError> {
        let faces: BTreeSet<BTreeSet<usize>> = faces
            .into_iter()
            .map(|f| f.into_iter().collect::<BTreeSet<usize>>())
            .filter(|f| !f.is_empty())
            .collect();
        for f in &faces {
            for &v in f {
                if v >= n_vertices {
                    return Err(ConstructError::VertexOutOfRange(v));
                }
            }
        }
        let k = SimplicialComplex { n_vertices, faces };
        k.check_downward_closed()?;
        Ok(k)
    }

    fn check_downward_closed(&self) -> Result<(), ConstructError> {
        for f in &self.faces {
            for &v in f {
                let mut sub = f.clone();
                sub.remove(&v);
                if !sub.is_empty() && !self.faces.contains(&sub) {
                    return Err(ConstructError::NotDownwardClosed(
                        f.iter().copied().collect(),
                        sub.iter().copied().collect(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Vertices that occur in some face.
    pub fn used_vertices(&self) -> BTreeSet<usize> {
        self.faces.iter().flatten().copied().collect()
    }

    /// Connected components of the 1-skeleton; isolated vertices are their
    /// own components.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let verts = self.used_vertices();
        let mut comp_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comps: Vec<BTreeSet<usize>> = Vec::new();
        for &v in &verts {
            if comp_of.contains_key(&v) {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![v];
            let mut comp = BTreeSet::new();
            while let Some(w) = stack.pop() {
                if !comp.insert(w) {
                    continue;
                }
                comp_of.insert(w, id);
                for f in &self.faces {
                    if f.len() == 2 && f.contains(&w) {
                        stack.extend(f.iter().copied().filter(|&u| u != w));
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }
}

/// The schemoid (P(K), S_K) of a simplicial complex: the face poset with ∅ as
/// initial object, blocks keyed by the face difference.
pub fn simplicial_schemoid(k: &SimplicialComplex) -> PowersetSchemoid {
    let mut theta: Vec<BTreeSet<usize>> = k.faces.iter().cloned().collect();
    theta.push(BTreeSet::new());
    powerset_difference(&theta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    pub n_points: usize,
    pub opens: Vec<BTreeSet<usize>>,
}

impl FiniteSpace {
    pub fn new(n_points: usize, opens: Vec<Vec<usize>>) -> Result<FiniteSpace, ConstructError> {
        let mut opens: Vec<BTreeSet<usize>> = opens
            .into_iter()
            .map(|o| o.into_iter().collect::<BTreeSet<usize>>())
            .collect();
        opens.sort_by_key(set_order_key);
        opens.dedup();
        for o in &opens {
            for &p in o {
                if p >= n_points {
                    return Err(ConstructError::VertexOutOfRange(p));
                }
            }
        }
        let space = FiniteSpace { n_points, opens };
        space.check_axioms()?;
        Ok(space)
    }

    fn check_axioms(&self) -> Result<(), ConstructError> {
        let whole: BTreeSet<usize> = (0..self.n_points).collect();
        if !self.opens.iter().any(|o| o.is_empty()) {
            return Err(ConstructError::Topology("∅ is not open".into()));
        }
        if !self.opens.contains(&whole) {
            return Err(ConstructError::Topology("the whole space is not open".into()));
        }
        for a in &self.opens {
            for b in &self.opens {
                let union: BTreeSet<usize> = a.union(b).copied().collect();
                let inter: BTreeSet<usize> = a.intersection(b).copied().collect();
                if !self.opens.contains(&union) {
                    return Err(ConstructError::Topology(format!("union {union:?} not open")));
                }
                if !self.opens.contains(&inter) {
                    return Err(ConstructError::Topology(format!("intersection {inter:?} not open")));
                }
            }
        }
        Ok(())
    }
}

/// The schemoid (Open_X, S_X) of a finite space.
pub fn open_set_schemoid(x: &FiniteSpace) -> PowersetSchemoid {
    powerset_difference(&x.opens)
}

// ---------------------------------------------------------------------------
// morphism constructors

/// The height morphism u(U) = |U| into the truncation of (N, len).
/// Returns the morphism together with its target.
pub fn height_morphism(source: &PowersetSchemoid) -> (SchemoidMorphism, Schemoid) {
    let max = source.object_sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let target = truncated_len(max);
    let obj_map = source.object_sets.iter().map(|s| s.len()).collect();
    let u = SchemoidMorphism::from_object_map(obj_map, &source.schemoid, &target)
        .expect("height map is a schemoid morphism");
    (u, target)
}

/// The indicator morphism v(σ) = the 0/1 vector of σ, into the n-fold product
/// of the length-1 truncation of (N, len). Returns (v, target).
pub fn indicator_morphism(k: &SimplicialComplex) -> (SchemoidMorphism, PowersetSchemoid, Schemoid) {
    let n = k.n_vertices;
    assert!(n >= 1, "indicator morphism needs at least one vertex");
    let source = simplicial_schemoid(k);
    let unit = truncated_len(1);
    let mut target = unit.clone();
    for _ in 1..n {
        target = target.product(&unit);
    }
    // object of the left-associated product for the bit vector of σ:
    // coordinates in vertex order, most significant first.
    let obj_map = source
        .object_sets
        .iter()
        .map(|s| s.iter().fold(0usize, |acc, &i| acc | (1 << (n - 1 - i))))
        .map(|bits| {
            // the iterated product indexes objects as ((b_0·2 + b_1)·2 + ...)
            (0..n).fold(0usize, |acc, j| acc * 2 + ((bits >> (n - 1 - j)) & 1))
        })
        .collect();
    let v = SchemoidMorphism::from_object_map(obj_map, &source.schemoid, &target)
        .expect("indicator map is a schemoid morphism");
    (v, source, target)
}

/// The induced morphism P(f) for a vertex map f : K → L. Accepted iff f is
/// non-degenerate: f(i) ≠ f(j) for every edge {i, j} of K. A map collapsing
/// an edge — even a constant one — splits the block {i}̃ of P(K): the
/// inclusions ∅ → {i} and {j} → {i, j} land in the blocks {f(i)}̃ and ∅̃ of
/// P(L) respectively, so no block assignment exists.
pub fn simplicial_map_morphism(
    f: &[usize],
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<(SchemoidMorphism, PowersetSchemoid, PowersetSchemoid), ConstructError> {
    assert_eq!(f.len(), k.n_vertices);
    for &img in f {
        if img >= l.n_vertices {
            return Err(ConstructError::VertexOutOfRange(img));
        }
    }
    // simplicial: images of faces are faces
    for face in &k.faces {
        let img: BTreeSet<usize> = face.iter().map(|&v| f[v]).collect();
        if !l.faces.contains(&img) {
            return Err(ConstructError::NotSimplicial(face.iter().copied().collect()));
        }
    }
    // non-degenerate on every edge
    for face in &k.faces {
        if face.len() == 2 {
            let mut it = face.iter();
            let (i, j) = (*it.next().unwrap(), *it.next().unwrap());
            if f[i] == f[j] {
                return Err(ConstructError::Degenerate { i, j });
            }
        }
    }
    let source = simplicial_schemoid(k);
    let target = simplicial_schemoid(l);
    let obj_map = source
        .object_sets
        .iter()
        .map(|s| {
            let img: BTreeSet<usize> = s.iter().map(|&v| f[v]).collect();
            target.object_of(&img).expect("image of a face is a face")
        })
        .collect();
    let m = SchemoidMorphism::from_object_map(obj_map, &source.schemoid, &target.schemoid)
        .expect("P(f) is a schemoid morphism");
    Ok((m, source, target))
}

/// The contravariant morphism f* : (Open_Y, S_Y) → (Open_X, S_X) of a
/// continuous map f : X → Y, U ↦ f⁻¹(U).
pub fn continuous_map_morphism(
    f: &[usize],
    x: &FiniteSpace,
    y: &FiniteSpace,
) -> Result<(SchemoidMorphism, PowersetSchemoid, PowersetSchemoid), ConstructError> {
    assert_eq!(f.len(), x.n_points);
    for &img in f {
        if img >= y.n_points {
            return Err(ConstructError::VertexOutOfRange(img));
        }
    }
    let source = open_set_schemoid(y);
    let target = open_set_schemoid(x);
    let mut obj_map = Vec::with_capacity(source.object_sets.len());
    for u in &source.object_sets {
        let pre: BTreeSet<usize> = (0..x.n_points).filter(|&p| u.contains(&f[p])).collect();
        match target.object_of(&pre) {
            Some(o) => obj_map.push(o),
            None => return Err(ConstructError::NotContinuous(u.iter().copied().collect())),
        }
    }
    let m = SchemoidMorphism::from_object_map(obj_map, &source.schemoid, &target.schemoid)
        .expect("preimage functor is a schemoid morphism");
    Ok((m, source, target))
}

// ---------------------------------------------------------------------------
// the Hamming Morita witness pair

/// u : S̃(Z/2) → ι(H(n,2)), sending the two objects to the words 0…0 and 0…01.
pub fn hamming_unit_morphism(n: usize) -> Result<(SchemoidMorphism, Schemoid, Schemoid), ConstructError> {
    let source = groupoid_schemoid_of_cyclic(2);
    let target = hamming(n)?.to_schemoid()?;
    // objects of S̃(Z/2) are the morphisms of Z/2: 0 = e, 1 = α
    let u = SchemoidMorphism::from_object_map(vec![0, 1], &source, &target)
        .map_err(|e| ConstructError::Schemoid(e.to_string()))?;
    Ok((u, source, target))
}

/// v : ι(H(n,2)) → S̃(Z/2), collapsing along sgn(i_1, …, i_n) = i_1 + ⋯ + i_n.
pub fn hamming_sgn_morphism(n: usize) -> Result<(SchemoidMorphism, Schemoid, Schemoid), ConstructError> {
    let source = hamming(n)?.to_schemoid()?;
    let target = groupoid_schemoid_of_cyclic(2);
    let obj_map = (0..1usize << n).map(|p| (p.count_ones() % 2) as usize).collect();
    let v = SchemoidMorphism::from_object_map(obj_map, &source, &target)
        .map_err(|e| ConstructError::Schemoid(e.to_string()))?;
    Ok((v, source, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemoid::TiiiFailure;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn discrete_counts() {
        assert_eq!(discrete(fincat::terminal()).unwrap().n_blocks(), 1);
        assert_eq!(discrete(fincat::interval()).unwrap().n_blocks(), 3);
        // U(ι(H(2,2))): complete-graph category on 4 objects, 16 morphisms
        let h22 = hamming(2).unwrap().to_schemoid().unwrap();
        assert_eq!(discrete(h22.cat.clone()).unwrap().n_blocks(), 16);
    }

    #[test]
    fn hamming_scheme_validates() {
        let h = hamming(2).unwrap();
        let report = h.validate();
        assert!(report.is_valid());
        assert_eq!(report.intersection_numbers.get(&(1, 1, 0)), Some(&2));
        // hamming(1) is the scheme of Z/2
        let h1 = hamming(1).unwrap();
        assert_eq!(h1.n_points, 2);
        assert_eq!(h1.n_relations, 2);
        // hamming(3): p^{T1}_{T1 T2} = 2
        let h3 = hamming(3).unwrap();
        assert_eq!(h3.validate().intersection_numbers.get(&(1, 2, 1)), Some(&2));
        assert!(hamming(11).is_err());
        assert!(hamming(0).is_err());
    }

    #[test]
    fn invalid_schemes_are_rejected() {
        // relation set "missing the diagonal": merge diagonal with off-diagonal
        let bad = AssociationScheme {
            n_points: 2,
            relation_of: vec![0, 0, 0, 0],
            n_relations: 1,
        };
        assert!(!bad.validate().is_valid());
        // |X| = 3, 2 classes, not a scheme: diagonal plus two asymmetric cells
        let bad3 = AssociationScheme {
            n_points: 3,
            relation_of: vec![0, 1, 1, 1, 0, 1, 1, 1, 0],
            n_relations: 2,
        };
        // this one is the complete graph scheme and IS valid; perturb it
        assert!(bad3.validate().is_valid());
        let bad4 = AssociationScheme {
            n_points: 3,
            relation_of: vec![0, 1, 2, 2, 0, 1, 1, 2, 0],
            n_relations: 3,
        };
        // cyclic tournament: transpose of 1 is 2 — closed; intersection
        // numbers are constant (this is the Z/3 thin scheme), so valid.
        assert!(bad4.validate().is_valid());
        let bad5 = AssociationScheme {
            n_points: 3,
            relation_of: vec![0, 1, 1, 2, 0, 1, 1, 2, 0],
            n_relations: 3,
        };
        assert!(!bad5.validate().is_valid());
    }

    #[test]
    fn scheme_schemoid_blocks() {
        let s = hamming(2).unwrap().to_schemoid().unwrap();
        let sizes: Vec<usize> = s.blocks.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![4, 8, 4]);
        let sc = s.structure_constants();
        assert_eq!(sc.get(1, 1, 0), 2);
        // between antipodal words both midpoints work: 01 and 10 each lie at
        // distance 1 from 00 and from 11
        assert_eq!(sc.get(1, 1, 2), 2);
        assert_eq!(sc.get(1, 2, 1), 1);
        assert_eq!(sc.get(1, 2, 0), 0);
    }

    #[test]
    fn trivial_scheme_gives_terminal() {
        let triv = AssociationScheme { n_points: 1, relation_of: vec![0], n_relations: 1 };
        let s = triv.to_schemoid().unwrap();
        assert_eq!(s.cat.n_morphisms(), 1);
        assert_eq!(s.n_blocks(), 1);
    }

    #[test]
    fn group_case_examples() {
        let z2 = group_case(&fincat::cyclic_table(2), &[0]).unwrap();
        assert_eq!((z2.n_points, z2.n_relations), (2, 2));
        let s3 = group_case(&fincat::s3_table(), &[0]).unwrap();
        assert_eq!((s3.n_points, s3.n_relations), (6, 6));
        // a 2-element subgroup of S_3: {id, (01)} = indices {0, 2}
        let s3h = group_case(&fincat::s3_table(), &[0, 2]).unwrap();
        assert_eq!((s3h.n_points, s3h.n_relations), (3, 2));
        assert!(s3h.validate().is_valid());
        // Z/3 acting on itself: 3 blocks of size 3 in the schemoid
        let z3 = group_case(&fincat::cyclic_table(3), &[0]).unwrap().to_schemoid().unwrap();
        assert!(z3.blocks.iter().all(|b| b.len() == 3));
        assert_eq!(z3.n_blocks(), 3);
        // not a subgroup
        assert!(group_case(&fincat::s3_table(), &[0, 3]).is_err());
    }

    #[test]
    fn groupoid_schemoid_z2() {
        let s = groupoid_schemoid_of_cyclic(2);
        assert_eq!(s.cat.n_objects, 2);
        assert_eq!(s.cat.n_morphisms(), 4);
        assert_eq!(s.n_blocks(), 2);
        // block 0 = 𝒢_e = identities; block 1 = {α, α⁻¹}
        assert_eq!(s.blocks[0], vec![s.cat.identity[0], s.cat.identity[1]]);
        let report = s.tameness_report();
        assert!(report.tame);
        assert!(s.structure_constants().max_value() <= 1);
    }

    #[test]
    fn groupoid_schemoid_z4_and_terminal() {
        let s = groupoid_schemoid_of_cyclic(4);
        assert_eq!(s.cat.n_objects, 4);
        assert_eq!(s.cat.n_morphisms(), 16);
        assert_eq!(s.n_blocks(), 4);
        let t = from_groupoid(&fincat::terminal()).unwrap();
        assert_eq!(t.cat.n_morphisms(), 1);
        assert!(from_groupoid(&fincat::interval()).is_err());
    }

    #[test]
    fn truncated_len_examples() {
        let t0 = truncated_len(0);
        assert_eq!(t0.cat.n_morphisms(), 1);
        let t2 = truncated_len(2);
        assert_eq!(t2.cat.n_morphisms(), 6);
        let sizes: Vec<usize> = t2.blocks.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
        assert!(t2.structure_constants().max_value() <= 1);
        // the untruncated (N, len) is tame, but cutting it off breaks T(iii)
        // existence at the top: no composable representatives for (len 1, len 2)
        let report = t2.tameness_report();
        assert!(report.unital);
        assert!(!report.tame);
        assert!(matches!(
            report.tiii_failure,
            Some(TiiiFailure::NoComposableRepresentatives { .. })
        ));
    }

    #[test]
    fn powerset_difference_on_tiny_families() {
        // Θ = 2^{{1}} (vertices 0-based: 2^{{0}})
        let ps = powerset_difference(&[set(&[]), set(&[0])]);
        assert_eq!(ps.schemoid.cat.n_morphisms(), 3);
        assert_eq!(ps.schemoid.n_blocks(), 2);
        // Θ = 2^{{0,1}}: p^{σ̃}_{μ̃τ̃} = 1 iff σ = τ ⊔ μ
        let ps2 = powerset_difference(&[set(&[]), set(&[0]), set(&[1]), set(&[0, 1])]);
        let sc = ps2.schemoid.structure_constants();
        for (mu, km) in ps2.block_keys.iter().enumerate() {
            for (tau, kt) in ps2.block_keys.iter().enumerate() {
                for (sigma, ks) in ps2.block_keys.iter().enumerate() {
                    let disjoint_union = km.is_disjoint(kt)
                        && km.union(kt).copied().collect::<BTreeSet<_>>() == *ks;
                    let expect = u64::from(disjoint_union);
                    assert_eq!(sc.get(mu, tau, sigma), expect, "blocks {mu} {tau} {sigma}");
                }
            }
        }
        // Θ with no middle set
        let ps3 = powerset_difference(&[set(&[]), set(&[0, 1])]);
        assert_eq!(ps3.schemoid.cat.n_morphisms(), 3);
        assert_eq!(ps3.block_keys.len(), 2);
        let sc3 = ps3.schemoid.structure_constants();
        // the {0,1} block only factors through identities
        assert_eq!(sc3.get(1, 0, 1), 1);
        assert_eq!(sc3.get(1, 1, 1), 0);
    }

    #[test]
    fn simplicial_schemoid_examples() {
        let one_vertex = SimplicialComplex::new(1, vec![vec![0]]).unwrap();
        let p = simplicial_schemoid(&one_vertex);
        assert_eq!(p.schemoid.cat.n_morphisms(), 3);
        assert_eq!(p.schemoid.n_blocks(), 2);

        let two_points = SimplicialComplex::new(2, vec![vec![0], vec![1]]).unwrap();
        let p2 = simplicial_schemoid(&two_points);
        let report = p2.schemoid.tameness_report();
        assert!(!report.tame);
        assert!(matches!(
            report.tiii_failure,
            Some(TiiiFailure::NoComposableRepresentatives { .. })
        ));

        let edge = SimplicialComplex::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        let pe = simplicial_schemoid(&edge);
        assert_eq!(pe.object_sets.len(), 4);
        assert_eq!(pe.schemoid.n_blocks(), 4);

        assert!(SimplicialComplex::new(2, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn finite_spaces() {
        let point = FiniteSpace::new(1, vec![vec![], vec![0]]).unwrap();
        let s = open_set_schemoid(&point);
        assert_eq!(s.schemoid.cat.n_morphisms(), 3);

        let sierpinski = FiniteSpace::new(2, vec![vec![], vec![0], vec![0, 1]]).unwrap();
        let ss = open_set_schemoid(&sierpinski);
        assert_eq!(ss.object_sets.len(), 3);
        assert_eq!(ss.schemoid.cat.n_morphisms(), 6);

        let indiscrete = FiniteSpace::new(2, vec![vec![], vec![0, 1]]).unwrap();
        let si = open_set_schemoid(&indiscrete);
        assert_eq!(si.schemoid.cat.n_morphisms(), 3);
        assert_eq!(si.block_keys.len(), 2);

        // not closed under union
        assert!(FiniteSpace::new(3, vec![vec![], vec![0], vec![1], vec![0, 1, 2]]).is_err());
        // missing ∅
        assert!(FiniteSpace::new(1, vec![vec![0]]).is_err());
    }

    #[test]
    fn height_morphism_examples() {
        let ps = powerset_difference(&[set(&[]), set(&[0]), set(&[1]), set(&[0, 1])]);
        let (u, target) = height_morphism(&ps);
        assert_eq!(target.cat.n_objects, 3);
        // {0} ⊂ {0,1} goes to the arrow 1 → 2
        let m = ps
            .schemoid
            .cat
            .hom(ps.object_of(&set(&[0])).unwrap(), ps.object_of(&set(&[0, 1])).unwrap())[0];
        let img = u.mor_map[m];
        assert_eq!(target.cat.morphisms[img], (1, 2));
        // identity blocks land in the length-0 block
        let empty_block = ps.schemoid.block_of[ps.schemoid.cat.identity[0]];
        assert_eq!(u.block_map[empty_block], 0);

        let one_vertex = SimplicialComplex::new(1, vec![vec![0]]).unwrap();
        let p = simplicial_schemoid(&one_vertex);
        let (u1, t1) = height_morphism(&p);
        let arrow = p.schemoid.cat.hom(0, 1)[0];
        assert_eq!(t1.cat.morphisms[u1.mor_map[arrow]], (0, 1));
    }

    #[test]
    fn indicator_morphism_examples() {
        let edge = SimplicialComplex::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        let (v, source, target) = indicator_morphism(&edge);
        // v(∅) is the all-zero object
        let empty_obj = source.object_of(&set(&[])).unwrap();
        assert_eq!(v.obj_map[empty_obj], 0);
        // v({0}) = e_0 and v({1}) = e_1 are distinct objects
        let o0 = v.obj_map[source.object_of(&set(&[0])).unwrap()];
        let o1 = v.obj_map[source.object_of(&set(&[1])).unwrap()];
        assert_ne!(o0, o1);
        assert_eq!(target.cat.n_objects, 4);
        // the singleton blocks map to distinct blocks of the product
        let key0 = source.block_keys.iter().position(|k| *k == set(&[0])).unwrap();
        let key1 = source.block_keys.iter().position(|k| *k == set(&[1])).unwrap();
        assert_ne!(v.block_map[key0], v.block_map[key1]);
    }

    #[test]
    fn simplicial_maps() {
        let vertex = SimplicialComplex::new(1, vec![vec![0]]).unwrap();
        let edge = SimplicialComplex::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        // inclusion of a vertex into an edge
        assert!(simplicial_map_morphism(&[0], &vertex, &edge).is_ok());
        // edge → vertex, constant: collapses the edge, so the block {0}̃ of
        // P(edge) would have to split between ∅̃ and {0}̃ of P(vertex)
        let err = simplicial_map_morphism(&[0, 0], &edge, &vertex).unwrap_err();
        assert_eq!(err, ConstructError::Degenerate { i: 0, j: 1 });
        // constant map between edgeless complexes: accepted
        let two = SimplicialComplex::new(2, vec![vec![0], vec![1]]).unwrap();
        assert!(simplicial_map_morphism(&[0, 0], &two, &vertex).is_ok());
        // a 2-path collapsing one edge but not the other: rejected with witness
        let path = SimplicialComplex::new(
            3,
            vec![vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2]],
        )
        .unwrap();
        let two = SimplicialComplex::new(2, vec![vec![0], vec![1], vec![0, 1]]).unwrap();
        let err = simplicial_map_morphism(&[0, 0, 1], &path, &two).unwrap_err();
        assert_eq!(err, ConstructError::Degenerate { i: 0, j: 1 });
    }

    #[test]
    fn continuous_maps() {
        let sierpinski = FiniteSpace::new(2, vec![vec![], vec![0], vec![0, 1]]).unwrap();
        // identity
        let (m, src, _tgt) = continuous_map_morphism(&[0, 1], &sierpinski, &sierpinski).unwrap();
        assert_eq!(m.obj_map, (0..src.object_sets.len()).collect::<Vec<_>>());
        // constant map to the open point 0 is continuous
        assert!(continuous_map_morphism(&[0, 0], &sierpinski, &sierpinski).is_ok());
        // constant map to the closed point 1 is not: preimage of {0} is ∅? no —
        // preimage of {0} under const 1 is ∅, which is open; preimage of {0,1}
        // is everything. That map IS continuous. A discontinuous example needs
        // the domain to miss an open set:
        let discrete2 = FiniteSpace::new(2, vec![vec![], vec![0], vec![1], vec![0, 1]]).unwrap();
        let indiscrete2 = FiniteSpace::new(2, vec![vec![], vec![0, 1]]).unwrap();
        // map from indiscrete to discrete splitting the points: preimage of {0}
        // is {0}, not open in the indiscrete topology
        let err = continuous_map_morphism(&[0, 1], &indiscrete2, &discrete2).unwrap_err();
        assert_eq!(err, ConstructError::NotContinuous(vec![0]));
    }

    #[test]
    fn hamming_witness_pair() {
        let (u, _, _) = hamming_unit_morphism(2).unwrap();
        let (v, _, _) = hamming_sgn_morphism(2).unwrap();
        // v∘u = identity on S̃(Z/2)
        let vu = u.then(&v);
        assert_eq!(vu.obj_map, vec![0, 1]);
        // v sends odd blocks into the {α, α⁻¹} block
        assert_eq!(v.block_map, vec![0, 1, 0]);
    }
}
