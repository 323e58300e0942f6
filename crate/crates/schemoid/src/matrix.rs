//! Dense exact matrices over [`Scalar`], with the rank/kernel/solve routines
//! the rest of the crate is built on. Sizes stay at desk scale, so Gaussian
//! elimination with exact arithmetic is all that is needed.

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            field,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.entries[i] = out.entries[i].add(&other.entries[i]);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(s);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        acc = acc.add(&self.get(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// A basis of the right kernel `{v : Mv = 0}`, in a deterministic order
    /// (one vector per free column, free columns ascending).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(ri, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Mx = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(ri, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.row_reduce();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Stack matrices vertically.
    pub fn vstack(field: Field, mats: &[Matrix]) -> Matrix {
        let cols = mats.first().map_or(0, |m| m.cols);
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut r0 = 0;
        for m in mats {
            assert_eq!(m.cols, cols);
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(r0 + i, j, m.get(i, j).clone());
                }
            }
            r0 += m.rows;
        }
        out
    }
}

/// A quotient of a coordinate space `F^n` by the column span of a relation
/// matrix, with canonical coset representatives on the non-pivot coordinates.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    field: Field,
    /// Reduced row-echelon basis of the relation subspace, with its pivots.
    rel_rref: Matrix,
    rel_pivots: Vec<usize>,
    /// Ambient coordinates that survive as quotient coordinates.
    pub free_coords: Vec<usize>,
}

impl QuotientSpace {
    /// Build `F^n / span(columns of rel)`.
    pub fn new(field: Field, ambient_dim: usize, relations: &Matrix) -> QuotientSpace {
        assert_eq!(relations.rows, ambient_dim);
        let mut rref = relations.transpose();
        let pivots = rref.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free_coords = (0..ambient_dim).filter(|c| !pivot_set.contains(c)).collect();
        QuotientSpace {
            ambient_dim,
            field,
            rel_rref: rref,
            rel_pivots: pivots,
            free_coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.free_coords.len()
    }

    /// Canonical representative of the coset of `v`, expressed in the free
    /// coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        // subtract relation rows to clear pivot coordinates
        for (ri, &pc) in self.rel_pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in 0..self.ambient_dim {
                    w[j] = w[j].sub(&f.mul(self.rel_rref.get(ri, j)));
                }
            }
        }
        self.free_coords.iter().map(|&c| w[c].clone()).collect()
    }

    /// The ambient vector of the `i`-th quotient basis element (a free
    /// coordinate unit vector).
    pub fn lift(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient_dim];
        v[self.free_coords[i]] = self.field.one();
        v
    }
}

/// Coordinates of `v` in the span of `basis` (columns), if it lies there.
pub fn coordinates_in_basis(field: Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = v.len();
    let mut m = Matrix::zero(field, n, basis.len());
    for (j, b) in basis.iter().enumerate() {
        assert_eq!(b.len(), n);
        for i in 0..n {
            m.set(i, j, b[i].clone());
        }
    }
    m.solve(v)
}
