//! Finite categories with partitioned morphism sets (quasi-schemoids):
//! structure constants, tameness and quotients, standard constructions,
//! the attached algebras, linear representations, Kan extensions,
//! cohomology, and Morita-style equivalence witnesses.

pub mod algebra;
pub mod constructors;
pub mod fincat;
pub mod io;
pub mod matrix;
pub mod repcat;
pub mod scalar;
pub mod schemoid;

pub use fincat::{FinCat, MorId, ObjId};
pub use scalar::{Field, Scalar};
pub use schemoid::{BlockId, Schemoid, SchemoidMorphism, StructureConstants, TamenessReport};
