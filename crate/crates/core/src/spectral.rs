//! Eigenvalues, eigenspaces, eigencodes and the spectral parity-check
//! matrix of a quasi-twisted code.

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::oracle::{min_distance, OracleConfig};
use crate::poly::root_multiplicity;
use crate::qt::QtCode;

/// One eigenvalue `beta = alpha xi^index` with its data.
#[derive(Clone, Debug)]
pub struct Eigenvalue {
    pub index: usize,
    pub value: FieldElement,
    /// Multiplicity of `beta` as a root of `det G(x)`.
    pub multiplicity: usize,
    /// Basis of the null space of `G(beta)`, one vector per row.
    pub eigenspace: Matrix,
}

/// All eigenvalues of a code, ordered by index.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub eigenvalues: Vec<Eigenvalue>,
}

impl SpectralData {
    /// Indices of the eigenvalue set.
    pub fn omega_bar(&self) -> Vec<usize> {
        self.eigenvalues.iter().map(|e| e.index).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Eigenvalue> {
        self.eigenvalues.iter().find(|e| e.index == index)
    }
}

/// `(index, multiplicity)` for every root of `det G(x)` in `Omega`.
pub fn eigenvalues(code: &QtCode) -> Result<Vec<(usize, usize)>> {
    let roots = code.roots()?;
    let det = code.determinant();
    let mut out = Vec::new();
    for k in 0..code.m() {
        let a = root_multiplicity(&det, roots.embedding(), roots.root(k))?;
        if a > 0 {
            out.push((k, a));
        }
    }
    Ok(out)
}

/// Eigenvalues together with their eigenspaces.
pub fn spectral_data(code: &QtCode) -> Result<SpectralData> {
    let roots = code.roots()?;
    let eigenvalues = eigenvalues(code)?
        .into_iter()
        .map(|(index, multiplicity)| {
            Ok(Eigenvalue {
                index,
                value: roots.root(index),
                multiplicity,
                eigenspace: eigenspace_at(code, index)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralData { eigenvalues })
}

/// Null space of `G(alpha xi^k)` over the splitting field.
pub fn eigenspace_at(code: &QtCode, k: usize) -> Result<Matrix> {
    if k >= code.m() {
        return Err(Error::NotARoot);
    }
    let roots = code.roots()?;
    Ok(code.gmatrix().eval(roots.embedding(), roots.root(k)).null_space())
}

/// Null space of `G(beta)`; `beta` must be a root of `x^m - lambda`.
pub fn eigenspace(code: &QtCode, beta: FieldElement) -> Result<Matrix> {
    let k = code.roots()?.index_of(beta).ok_or(Error::NotARoot)?;
    eigenspace_at(code, k)
}

/// Basis of the intersection of the eigenspaces of the eigenvalues in `p`.
pub fn common_eigenspace(code: &QtCode, p: &[usize]) -> Result<Matrix> {
    if p.is_empty() {
        return Err(Error::InvalidEigenvalueSet("P is empty".into()));
    }
    let omega_bar = eigenvalues(code)?;
    let roots = code.roots()?;
    let ell = code.ell();
    let mut stacked = Matrix::zeros(roots.ext(), 0, ell);
    for &k in p {
        if !omega_bar.iter().any(|&(i, _)| i == k) {
            return Err(Error::InvalidEigenvalueSet(format!("index {k} is not an eigenvalue")));
        }
        stacked = stacked.stack(&code.gmatrix().eval(roots.embedding(), roots.root(k)))?;
    }
    Ok(stacked.null_space())
}

/// The base-field code orthogonal to a space of vectors over an extension.
#[derive(Clone, Debug)]
pub struct Eigencode {
    /// Basis over GF(q), one codeword per row.
    pub basis: Matrix,
    pub distance: Distance,
}

/// `{ u in GF(q)^ell : sum_j v_j u_j = 0 for all rows v of basis }`.
///
/// Each constraint is expanded over GF(p) coordinates of the splitting
/// field and the GF(p)-solutions are regrouped into GF(q) vectors. An empty
/// basis gives the full space with distance 1; a zero eigencode has
/// distance infinity.
pub fn eigencode(code: &QtCode, basis: &Matrix, config: &OracleConfig) -> Result<Eigencode> {
    let roots = code.roots()?;
    let base = code.field();
    let ell = code.ell();
    if basis.cols() != ell {
        return Err(Error::Shape(format!("eigenspace basis has {} columns, expected {ell}", basis.cols())));
    }
    if basis.is_empty() {
        return Ok(Eigencode { basis: Matrix::identity(base, ell), distance: Distance::Finite(1) });
    }
    let ext = roots.ext();
    let emb = roots.embedding();
    let p = base.characteristic();
    let k = base.degree();
    let prime = Field::new(p, 1)?;
    // Powers of the base-field generator y, embedded.
    let ys: Vec<FieldElement> = (0..k).map(|i| emb.embed(base.from_index(p.pow(i as u32)))).collect();
    let mut constraints = Matrix::zeros(&prime, 0, ell * k);
    for r in 0..basis.rows() {
        let v = basis.row(r);
        let images: Vec<Vec<u64>> =
            (0..ell).flat_map(|j| ys.iter().map(move |&y| ext.coeffs(ext.mul(v[j], y)))).collect();
        for c in 0..ext.degree() {
            let row: Vec<FieldElement> = images.iter().map(|im| prime.from_int(im[c] as i64)).collect();
            constraints.push_row(&row)?;
        }
    }
    let solutions = constraints.null_space();
    let mut words = Matrix::zeros(base, 0, ell);
    for r in 0..solutions.rows() {
        let a = solutions.row(r);
        let u: Vec<FieldElement> = (0..ell)
            .map(|j| {
                let digits: Vec<i64> = (0..k).map(|i| prime.index(a[j * k + i]) as i64).collect();
                base.from_coeffs(&digits).expect("digits are reduced")
            })
            .collect();
        words.push_row(&u)?;
    }
    let words = words.row_basis();
    if words.is_empty() {
        return Ok(Eigencode { basis: words, distance: Distance::Infinite });
    }
    let d = min_distance(&words, config)?;
    Ok(Eigencode { basis: words, distance: Distance::Finite(d) })
}

/// The stacked parity-check matrix `H`.
#[derive(Clone, Debug)]
pub struct ParityCheck {
    /// Rows `(v, beta v, ..., beta^{m-1} v)` over the splitting field, in the
    /// coordinate order of the code.
    pub matrix: Matrix,
    /// Set for the full code, whose constraint set is empty.
    pub full_space: bool,
}

pub fn parity_check(code: &QtCode) -> Result<ParityCheck> {
    let roots = code.roots()?;
    let ext = roots.ext();
    let data = spectral_data(code)?;
    let (m, ell) = (code.m(), code.ell());
    let mut h = Matrix::zeros(ext, 0, m * ell);
    for e in &data.eigenvalues {
        for r in 0..e.eigenspace.rows() {
            let v = e.eigenspace.row(r);
            let mut row = Vec::with_capacity(m * ell);
            let mut power = ext.one();
            for _ in 0..m {
                row.extend(v.iter().map(|&x| ext.mul(power, x)));
                power = ext.mul(power, e.value);
            }
            h.push_row(&row)?;
        }
    }
    Ok(ParityCheck { matrix: h, full_space: data.is_empty() })
}
