//! Finite categories as explicit tables: objects, morphisms with sources and
//! targets, identities, and a composition table defined exactly on the
//! composable pairs.

use std::collections::HashMap;
use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    pub n_objects: usize,
    /// (source, target) per morphism.
    pub morphisms: Vec<(ObjId, ObjId)>,
    /// identity[x] is the identity morphism of object x.
    pub identity: Vec<MorId>,
    /// compose[(g, f)] = g∘f, present exactly when source(g) = target(f).
    pub compose: HashMap<(MorId, MorId), MorId>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructuralError {
    #[error("object index {0} out of range")]
    ObjectOutOfRange(usize),
    #[error("morphism index {0} out of range")]
    MorphismOutOfRange(usize),
    #[error("identity table has length {got}, expected {expected}")]
    IdentityTableLength { got: usize, expected: usize },
}

/// A single violated category law, with the witnessing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawViolation {
    /// identity[x] does not have source = target = x.
    IdentityEndpoints { object: ObjId, morphism: MorId },
    /// compose(g, f) present for a non-composable pair.
    SpuriousComposite { g: MorId, f: MorId },
    /// compose(g, f) missing for a composable pair.
    MissingComposite { g: MorId, f: MorId },
    /// compose(g, f) has wrong endpoints.
    CompositeEndpoints { g: MorId, f: MorId, gf: MorId },
    /// id∘f ≠ f or g∘id ≠ g.
    IdentityLaw { morphism: MorId, composite: MorId },
    /// (h∘g)∘f ≠ h∘(g∘f).
    Associativity { h: MorId, g: MorId, f: MorId },
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<LawViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FinCat {
    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f].0
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f].1
    }

    pub fn is_composable(&self, g: MorId, f: MorId) -> bool {
        self.source(g) == self.target(f)
    }

    /// Table lookup for g∘f. Errors on a non-composable pair.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId, ComposabilityError> {
        self.compose
            .get(&(g, f))
            .copied()
            .ok_or(ComposabilityError { g, f })
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        (0..self.n_morphisms())
            .filter(|&f| self.source(f) == x && self.target(f) == y)
            .collect()
    }

    /// Index consistency of all tables; must pass before law checks make sense.
    pub fn check_structure(&self) -> Result<(), StructuralError> {
        if self.identity.len() != self.n_objects {
            return Err(StructuralError::IdentityTableLength {
                got: self.identity.len(),
                expected: self.n_objects,
            });
        }
        for &(s, t) in &self.morphisms {
            if s >= self.n_objects {
                return Err(StructuralError::ObjectOutOfRange(s));
            }
            if t >= self.n_objects {
                return Err(StructuralError::ObjectOutOfRange(t));
            }
        }
        for &m in &self.identity {
            if m >= self.n_morphisms() {
                return Err(StructuralError::MorphismOutOfRange(m));
            }
        }
        for (&(g, f), &gf) in &self.compose {
            for m in [g, f, gf] {
                if m >= self.n_morphisms() {
                    return Err(StructuralError::MorphismOutOfRange(m));
                }
            }
        }
        Ok(())
    }

    /// Exhaustive check of every category law; collects all violations.
    pub fn validate(&self) -> Result<ValidationReport, StructuralError> {
        self.check_structure()?;
        let mut report = ValidationReport::default();
        for x in 0..self.n_objects {
            let e = self.identity[x];
            if self.source(e) != x || self.target(e) != x {
                report
                    .violations
                    .push(LawViolation::IdentityEndpoints { object: x, morphism: e });
            }
        }
        // composability closure
        for (&(g, f), &gf) in &self.compose {
            if !self.is_composable(g, f) {
                report.violations.push(LawViolation::SpuriousComposite { g, f });
            } else if self.source(gf) != self.source(f) || self.target(gf) != self.target(g) {
                report
                    .violations
                    .push(LawViolation::CompositeEndpoints { g, f, gf });
            }
        }
        let n = self.n_morphisms();
        for g in 0..n {
            for f in 0..n {
                if self.is_composable(g, f) && !self.compose.contains_key(&(g, f)) {
                    report.violations.push(LawViolation::MissingComposite { g, f });
                }
            }
        }
        if !report.violations.is_empty() {
            // identity/associativity checks below assume a total table
            return Ok(report);
        }
        for f in 0..n {
            let idt = self.identity[self.target(f)];
            let ids = self.identity[self.source(f)];
            let left = self.compose[&(idt, f)];
            if left != f {
                report
                    .violations
                    .push(LawViolation::IdentityLaw { morphism: f, composite: left });
            }
            let right = self.compose[&(f, ids)];
            if right != f {
                report
                    .violations
                    .push(LawViolation::IdentityLaw { morphism: f, composite: right });
            }
        }
        for h in 0..n {
            for g in 0..n {
                if !self.is_composable(h, g) {
                    continue;
                }
                let hg = self.compose[&(h, g)];
                for f in 0..n {
                    if !self.is_composable(g, f) {
                        continue;
                    }
                    let gf = self.compose[&(g, f)];
                    if self.compose[&(hg, f)] != self.compose[&(h, gf)] {
                        report.violations.push(LawViolation::Associativity { h, g, f });
                    }
                }
            }
        }
        Ok(report)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().map(|r| r.is_valid()).unwrap_or(false)
    }

    /// Sources/targets swapped, compose_op(g, f) = compose(f, g).
    pub fn opposite(&self) -> FinCat {
        FinCat {
            n_objects: self.n_objects,
            morphisms: self.morphisms.iter().map(|&(s, t)| (t, s)).collect(),
            identity: self.identity.clone(),
            compose: self.compose.iter().map(|(&(g, f), &gf)| ((f, g), gf)).collect(),
        }
    }

    /// Product category. Object (x, y) has index x·|ob D| + y; morphism
    /// (f, g) has index f·|mor D| + g.
    pub fn product(&self, other: &FinCat) -> FinCat {
        let no = other.n_objects;
        let nm = other.n_morphisms();
        let obj = |x: ObjId, y: ObjId| x * no + y;
        let mormap = |f: MorId, g: MorId| f * nm + g;
        let mut morphisms = Vec::with_capacity(self.n_morphisms() * nm);
        for f in 0..self.n_morphisms() {
            for g in 0..nm {
                morphisms.push((
                    obj(self.source(f), other.source(g)),
                    obj(self.target(f), other.target(g)),
                ));
            }
        }
        let identity = (0..self.n_objects)
            .flat_map(|x| (0..other.n_objects).map(move |y| (x, y)))
            .map(|(x, y)| mormap(self.identity[x], other.identity[y]))
            .collect();
        let mut compose = HashMap::new();
        for (&(g1, f1), &c1) in &self.compose {
            for (&(g2, f2), &c2) in &other.compose {
                compose.insert((mormap(g1, g2), mormap(f1, f2)), mormap(c1, c2));
            }
        }
        FinCat {
            n_objects: self.n_objects * other.n_objects,
            morphisms,
            identity,
            compose,
        }
    }

    /// All morphisms invertible? Returns the inverse table, or the witness of
    /// a non-invertible morphism.
    pub fn inverses(&self) -> Result<Vec<MorId>, MorId> {
        let n = self.n_morphisms();
        let mut inv = Vec::with_capacity(n);
        'outer: for f in 0..n {
            let (s, t) = self.morphisms[f];
            for g in self.hom(t, s) {
                if self.compose.get(&(g, f)) == Some(&self.identity[s])
                    && self.compose.get(&(f, g)) == Some(&self.identity[t])
                {
                    inv.push(g);
                    continue 'outer;
                }
            }
            return Err(f);
        }
        Ok(inv)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("morphisms {g} and {f} are not composable")]
pub struct ComposabilityError {
    pub g: MorId,
    pub f: MorId,
}

/// The empty category.
pub fn empty() -> FinCat {
    FinCat {
        n_objects: 0,
        morphisms: vec![],
        identity: vec![],
        compose: HashMap::new(),
    }
}

/// The terminal category: one object, one (identity) morphism.
pub fn terminal() -> FinCat {
    FinCat {
        n_objects: 1,
        morphisms: vec![(0, 0)],
        identity: vec![0],
        compose: HashMap::from([((0, 0), 0)]),
    }
}

/// The interval category I: objects 0, 1 and a single arrow 0 → 1.
/// Morphisms: 0 = id_0, 1 = id_1, 2 = the arrow.
pub fn interval() -> FinCat {
    FinCat {
        n_objects: 2,
        morphisms: vec![(0, 0), (1, 1), (0, 1)],
        identity: vec![0, 1],
        compose: HashMap::from([
            ((0, 0), 0),
            ((1, 1), 1),
            ((2, 0), 2),
            ((1, 2), 2),
        ]),
    }
}

/// A finite group presented by its multiplication table, as a one-object
/// category. `table[a][b]` is the product a·b; morphism a is composed as
/// compose(a, b) = a·b. Index 0 must be the unit.
pub fn one_object_group(table: &[Vec<usize>]) -> FinCat {
    let n = table.len();
    assert!(n > 0 && table.iter().all(|row| row.len() == n));
    assert!(table[0].iter().enumerate().all(|(i, &v)| v == i), "index 0 must be the unit");
    let mut compose = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            compose.insert((a, b), table[a][b]);
        }
    }
    FinCat {
        n_objects: 1,
        morphisms: vec![(0, 0); n],
        identity: vec![0],
        compose,
    }
}

/// Multiplication table of Z/n with unit 0.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of the symmetric group S_3, unit at index 0.
/// Elements are the permutations of {0,1,2} in lexicographic one-line order.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    // (a·b)(i) = a(b(i))
                    let c = [a[b[0]], a[b[1]], a[b[2]]];
                    index(&c)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_and_interval_are_valid() {
        assert!(terminal().validate().unwrap().is_valid());
        assert!(interval().validate().unwrap().is_valid());
        assert!(empty().validate().unwrap().is_valid());
    }

    #[test]
    fn group_categories_are_valid() {
        for n in 1..=6 {
            assert!(one_object_group(&cyclic_table(n)).validate().unwrap().is_valid());
        }
        assert!(one_object_group(&s3_table()).validate().unwrap().is_valid());
    }

    #[test]
    fn broken_associativity_is_reported() {
        // one object, two morphisms {id, a}; set a∘a = id but break (aa)a vs a(aa)
        // by making the table non-associative: a∘a = a on one side.
        let mut compose = HashMap::new();
        compose.insert((0, 0), 0);
        compose.insert((0, 1), 1);
        compose.insert((1, 0), 1);
        compose.insert((1, 1), 0);
        let mut cat = FinCat {
            n_objects: 1,
            morphisms: vec![(0, 0), (0, 0)],
            identity: vec![0],
            compose,
        };
        assert!(cat.validate().unwrap().is_valid());
        // now mis-set (a∘a) to a: (aa)a = a∘a = a, a(aa) = a∘a = a ... instead
        // break it asymmetrically via a 3-element table.
        cat.compose.insert((1, 1), 1);
        // identity laws still fine; a∘a = a makes it associative again, so use
        // a 3-morphism example: Z/3 with one entry corrupted.
        let mut z3 = one_object_group(&cyclic_table(3));
        z3.compose.insert((1, 1), 0); // 1+1 = 0 instead of 2
        let report = z3.validate().unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, LawViolation::Associativity { .. })));
    }

    #[test]
    fn opposite_is_involutive() {
        let c = one_object_group(&s3_table());
        assert_eq!(c.opposite().opposite(), c);
        let i = interval();
        assert_eq!(i.opposite().morphisms[2], (1, 0));
        assert!(i.opposite().validate().unwrap().is_valid());
    }

    #[test]
    fn opposite_of_group_transposes_table() {
        let c = one_object_group(&cyclic_table(4));
        let op = c.opposite();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(op.compose[&(a, b)], c.compose[&(b, a)]);
            }
        }
    }

    #[test]
    fn product_counts() {
        let i = interval();
        let p = i.product(&i);
        assert_eq!(p.n_objects, 4);
        assert_eq!(p.n_morphisms(), 9);
        assert!(p.validate().unwrap().is_valid());

        let z2 = one_object_group(&cyclic_table(2));
        let q = z2.product(&i);
        assert_eq!(q.n_objects, 2);
        assert_eq!(q.n_morphisms(), 6);
        assert!(q.validate().unwrap().is_valid());

        let r = z2.product(&terminal());
        assert_eq!(r.n_objects, 1);
        assert_eq!(r.n_morphisms(), 2);
        assert_eq!(r.compose[&(1, 1)], 0);
    }

    #[test]
    fn compose_identities() {
        let i = interval();
        assert_eq!(i.compose(1, 2).unwrap(), 2);
        assert_eq!(i.compose(2, 0).unwrap(), 2);
        assert!(i.compose(2, 1).is_err());
        let z2 = one_object_group(&cyclic_table(2));
        assert_eq!(z2.compose(1, 1).unwrap(), 0);
    }

    #[test]
    fn inverses_of_groupoid() {
        let z4 = one_object_group(&cyclic_table(4));
        let inv = z4.inverses().unwrap();
        assert_eq!(inv, vec![0, 3, 2, 1]);
        assert_eq!(interval().inverses(), Err(2));
    }
}
