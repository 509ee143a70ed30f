//! Matrices over `F_q[x]`: the reduced generator matrix of a quasi-twisted
//! code and its determinant.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::roots::Embedding;

/// A rectangular matrix of polynomials over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// A violated condition of the reduced (Hermite-type) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedFormViolation {
    /// Nonzero entry below the diagonal.
    NotUpperTriangular { row: usize, col: usize },
    /// `deg g_{i,j} >= deg g_{j,j}` for some `i < j`.
    NotDegreeReduced { row: usize, col: usize },
    /// Diagonal entry does not divide `x^m - lambda`.
    DiagonalNotDivisor { index: usize },
    /// Diagonal entry is `x^m - lambda` but its row has other nonzero entries.
    FullDiagonalRowNotIsolated { index: usize },
    /// Diagonal entry is zero or not monic.
    DiagonalNotMonic { index: usize },
}

impl PolyMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> PolyMatrix {
        PolyMatrix::diagonal(field, vec![Poly::one(field); n])
    }

    pub fn diagonal(field: &Field, diag: Vec<Poly>) -> PolyMatrix {
        let n = diag.len();
        let mut out = PolyMatrix::zeros(field, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            out.set(i, i, d);
        }
        out
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend(r);
        }
        Ok(PolyMatrix { field: field.clone(), rows: n, cols, entries })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn diagonal_entries(&self) -> Vec<&Poly> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// Entrywise evaluation at a point of an extension field.
    pub fn eval(&self, emb: &Embedding, x: FieldElement) -> Matrix {
        let ext = emb.ext();
        let mut out = Matrix::zeros(ext, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).eval_embedded(emb, x));
            }
        }
        out
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Product of the diagonal; only meaningful for triangular matrices.
    pub fn triangular_determinant(&self) -> Result<Poly> {
        self.require_square()?;
        if !self.is_upper_triangular() {
            return Err(Error::Shape("matrix is not upper triangular".into()));
        }
        Ok(self.diagonal_entries().into_iter().fold(Poly::one(&self.field), |acc, d| &acc * d))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let f = &self.field;
        if n == 0 {
            return Ok(Poly::one(f));
        }
        let mut a: Vec<Vec<Poly>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = Poly::one(f);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Poly::zero(f)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)?
                        .expect("Bareiss quotients are exact");
                }
                a[i][k] = Poly::zero(f);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -&det } else { det })
    }

    /// Checks the four conditions of the reduced form plus monic diagonal.
    ///
    /// The isolation condition is checked on the row: a diagonal entry equal
    /// to `x^m - lambda` forces the rest of its row to vanish. (Entries above
    /// it in the same column need not vanish; the module generated by
    /// `(1, x)` is a counterexample.)
    pub fn reduced_form_violations(&self, x_m_lambda: &Poly) -> Vec<ReducedFormViolation> {
        use ReducedFormViolation::*;
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if j < i && !e.is_zero() {
                    out.push(NotUpperTriangular { row: i, col: j });
                }
                if i < j && j < self.rows && !e.is_zero() {
                    let dj = self.get(j, j).degree();
                    if dj.is_none_or(|dj| e.degree().unwrap() >= dj) {
                        out.push(NotDegreeReduced { row: i, col: j });
                    }
                }
            }
        }
        for (k, d) in self.diagonal_entries().into_iter().enumerate() {
            if d.leading() != Some(self.field.one()) {
                out.push(DiagonalNotMonic { index: k });
                continue;
            }
            if !d.divides(x_m_lambda).unwrap_or(false) {
                out.push(DiagonalNotDivisor { index: k });
            }
            if d == x_m_lambda && (0..self.cols).any(|c| c != k && !self.get(k, c).is_zero()) {
                out.push(FullDiagonalRowNotIsolated { index: k });
            }
        }
        out
    }

    /// One row per line, entries space-separated, each entry a
    /// comma-separated ascending coefficient list.
    pub fn serialize(&self) -> String {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Poly::serialize).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn sub_scaled_row(target: &mut [Poly], pivot: &[Poly], factor: &Poly, modulus: &Poly) {
    for (t, p) in target.iter_mut().zip(pivot) {
        if p.is_zero() {
            continue;
        }
        let v = &*t - &(factor * p);
        *t = v.rem(modulus).expect("modulus is nonzero");
    }
}

/// Reduces a generating set of a quasi-twisted code to its unique reduced
/// upper-triangular generator matrix.
///
/// The rows `(x^m - lambda) e_j` are appended, the stacked matrix is
/// triangularised column by column with Euclidean row operations, and every
/// off-diagonal entry is finally reduced modulo the diagonal entry of its
/// column. The diagonal is made monic.
pub fn reduce_generating_set(
    field: &Field,
    generators: &[Vec<Poly>],
    ell: usize,
    m: usize,
    lambda: FieldElement,
) -> Result<PolyMatrix> {
    if ell == 0 {
        return Err(Error::Shape("index ell must be at least 1".into()));
    }
    let modulus = Poly::x_m_minus(field, m, lambda);
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(generators.len() + ell);
    for (i, g) in generators.iter().enumerate() {
        if g.len() != ell {
            return Err(Error::Shape(format!("generator {i} has {} entries, expected {ell}", g.len())));
        }
        rows.push(g.iter().map(|p| p.rem(&modulus)).collect::<Result<_>>()?);
    }
    for j in 0..ell {
        let mut r = vec![Poly::zero(field); ell];
        r[j] = modulus.clone();
        rows.push(r);
    }

    for j in 0..ell {
        loop {
            let pivot = (j..rows.len())
                .filter(|&i| !rows[i][j].is_zero())
                .min_by_key(|&i| (rows[i][j].degree(), i))
                .expect("column j always contains (x^m - lambda) e_j");
            rows.swap(j, pivot);
            let (head, tail) = rows.split_at_mut(j + 1);
            let prow = &head[j];
            let mut done = true;
            for r in tail.iter_mut() {
                if r[j].is_zero() {
                    continue;
                }
                let (q, _) = r[j].div_rem(&prow[j])?;
                sub_scaled_row(r, prow, &q, &modulus);
                if !r[j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        let lead = rows[j][j].leading().expect("pivot is nonzero");
        let inv = field.inv(lead);
        for e in rows[j].iter_mut() {
            *e = e.scale(inv);
        }
    }
    debug_assert!(rows[ell..].iter().all(|r| r.iter().all(Poly::is_zero)));
    rows.truncate(ell);

    for j in 0..ell {
        let (head, tail) = rows.split_at_mut(j);
        let prow = &tail[0];
        for r in head.iter_mut() {
            if r[j].is_zero() {
                continue;
            }
            let (q, _) = r[j].div_rem(&prow[j])?;
            for (t, p) in r.iter_mut().zip(prow.iter()) {
                *t = &*t - &(&q * p);
            }
        }
    }
    PolyMatrix::from_rows(field, ell, rows)
}
