//! Versioned JSON file formats for categories, schemoids, morphisms and
//! functor representations, with deterministic serialization.

use crate::fincat::FinCat;
use crate::matrix::Matrix;
use crate::repcat::FunctorRep;
use crate::scalar::{parse_scalar, scalar_to_string, Field};
use crate::schemoid::{Schemoid, SchemoidMorphism};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

pub const FORMAT: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    File(#[from] std::io::Error),
    #[error("unsupported format version {0}, expected {FORMAT}")]
    Format(u32),
    #[error("unknown field {0:?}, expected Q or Fp")]
    UnknownField(String),
    #[error("unparsable scalar {0:?}")]
    BadScalar(String),
    #[error("block {0:?} is not an index")]
    BadBlockKey(String),
    #[error("matrix for block {0} is ragged")]
    RaggedMatrix(usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CategoryFile {
    pub format: u32,
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub identity: Vec<usize>,
    /// Triples [g, f, g∘f], sorted lexicographically.
    pub compose: Vec<[usize; 3]>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SchemoidFile {
    pub format: u32,
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub identity: Vec<usize>,
    pub compose: Vec<[usize; 3]>,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub format: u32,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub format: u32,
    pub field: String,
    pub dims: Vec<usize>,
    /// Matrices keyed by block index (as a decimal string), entries in the
    /// textual scalar form (`a` or `a/b`).
    pub block_mats: BTreeMap<String, Vec<Vec<String>>>,
}

fn check_format(format: u32) -> Result<(), IoError> {
    if format == FORMAT {
        Ok(())
    } else {
        Err(IoError::Format(format))
    }
}

pub fn category_to_file(cat: &FinCat) -> CategoryFile {
    let mut compose: Vec<[usize; 3]> =
        cat.compose.iter().map(|(&(g, f), &gf)| [g, f, gf]).collect();
    compose.sort_unstable();
    CategoryFile {
        format: FORMAT,
        objects: cat.n_objects,
        morphisms: cat
            .morphisms
            .iter()
            .map(|&(src, tgt)| MorphismEntry { src, tgt })
            .collect(),
        identity: cat.identity.clone(),
        compose,
    }
}

pub fn category_from_file(file: &CategoryFile) -> Result<FinCat, IoError> {
    check_format(file.format)?;
    let mut compose = HashMap::new();
    for &[g, f, gf] in &file.compose {
        compose.insert((g, f), gf);
    }
    let cat = FinCat {
        n_objects: file.objects,
        morphisms: file.morphisms.iter().map(|m| (m.src, m.tgt)).collect(),
        identity: file.identity.clone(),
        compose,
    };
    match cat.validate() {
        Ok(report) if report.is_valid() => Ok(cat),
        Ok(report) => Err(IoError::Invalid(format!("category laws fail: {:?}", report.violations))),
        Err(e) => Err(IoError::Invalid(e.to_string())),
    }
}

pub fn schemoid_to_file(s: &Schemoid) -> SchemoidFile {
    let cat = category_to_file(&s.cat);
    SchemoidFile {
        format: FORMAT,
        objects: cat.objects,
        morphisms: cat.morphisms,
        identity: cat.identity,
        compose: cat.compose,
        blocks: s.blocks.clone(),
    }
}

pub fn schemoid_from_file(file: &SchemoidFile) -> Result<Schemoid, IoError> {
    check_format(file.format)?;
    let cat = category_from_file(&CategoryFile {
        format: file.format,
        objects: file.objects,
        morphisms: file.morphisms.iter().map(|m| MorphismEntry { src: m.src, tgt: m.tgt }).collect(),
        identity: file.identity.clone(),
        compose: file.compose.clone(),
    })?;
    Schemoid::new(cat, file.blocks.clone()).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn morphism_to_file(u: &SchemoidMorphism) -> MorphismFile {
    MorphismFile { format: FORMAT, obj_map: u.obj_map.clone(), mor_map: u.mor_map.clone() }
}

pub fn morphism_from_file(
    file: &MorphismFile,
    source: &Schemoid,
    target: &Schemoid,
) -> Result<SchemoidMorphism, IoError> {
    check_format(file.format)?;
    SchemoidMorphism::validate(file.obj_map.clone(), file.mor_map.clone(), source, target)
        .map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn rep_to_file(rep: &FunctorRep) -> RepFile {
    let block_mats = rep
        .block_mats
        .iter()
        .enumerate()
        .map(|(b, mat)| {
            let rows = (0..mat.rows)
                .map(|r| (0..mat.cols).map(|c| scalar_to_string(mat.get(r, c))).collect())
                .collect();
            (b.to_string(), rows)
        })
        .collect();
    RepFile {
        format: FORMAT,
        field: rep.field.to_string(),
        dims: rep.dims.clone(),
        block_mats,
    }
}

pub fn rep_from_file(file: &RepFile) -> Result<FunctorRep, IoError> {
    check_format(file.format)?;
    let field = Field::parse(&file.field).ok_or_else(|| IoError::UnknownField(file.field.clone()))?;
    let mut keyed: BTreeMap<usize, Matrix> = BTreeMap::new();
    for (key, rows) in &file.block_mats {
        let b: usize = key.parse().map_err(|_| IoError::BadBlockKey(key.clone()))?;
        let n_cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(IoError::RaggedMatrix(b));
        }
        let mut mat = Matrix::zero(field, rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let v = parse_scalar(field, entry).ok_or_else(|| IoError::BadScalar(entry.clone()))?;
                mat.set(i, j, v);
            }
        }
        keyed.insert(b, mat);
    }
    let n_blocks = keyed.keys().next_back().map_or(0, |&b| b + 1);
    let mut block_mats = Vec::with_capacity(n_blocks);
    for b in 0..n_blocks {
        let mat = keyed
            .remove(&b)
            .ok_or_else(|| IoError::Invalid(format!("missing matrix for block {b}")))?;
        block_mats.push(mat);
    }
    Ok(FunctorRep { field, dims: file.dims.clone(), block_mats })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
