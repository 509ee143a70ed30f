//! Quasi-twisted codes as `F_q[x]`-modules: the identification maps, the
//! constashift, membership and the expansion to a scalar generator matrix.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::ntheory::gcd;
use crate::poly::Poly;
use crate::polymat::{reduce_generating_set, PolyMatrix};
use crate::roots::RootSystem;

/// `phi`: a length-`m` vector to the polynomial with those coefficients.
pub fn phi(field: &Field, v: &[FieldElement]) -> Poly {
    Poly::new(field, v.to_vec())
}

/// Inverse of [`phi`]; the polynomial must have degree below `m`.
pub fn phi_inv(p: &Poly, m: usize) -> Result<Vec<FieldElement>> {
    if p.degree().is_some_and(|d| d >= m) {
        return Err(Error::Shape(format!("polynomial of degree {:?} does not fit length {m}", p.degree())));
    }
    Ok((0..m).map(|i| p.coeff(i)).collect())
}

/// A word of `F_q^{m ell}` viewed as an `m x ell` array, stored row-major so
/// that the flattened order is the coordinate order of the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    m: usize,
    ell: usize,
    entries: Vec<FieldElement>,
}

impl Codeword {
    pub fn new(m: usize, ell: usize, entries: Vec<FieldElement>) -> Result<Codeword> {
        if entries.len() != m * ell {
            return Err(Error::Shape(format!("{} entries for a {m}x{ell} array", entries.len())));
        }
        Ok(Codeword { m, ell, entries })
    }

    pub fn zero(m: usize, ell: usize) -> Codeword {
        Codeword { m, ell, entries: vec![FieldElement::ZERO; m * ell] }
    }

    pub fn get(&self, k: usize, j: usize) -> FieldElement {
        self.entries[k * self.ell + j]
    }

    pub fn as_slice(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    /// `Phi`: column `j` becomes `c_j(x) = sum_k c_{k,j} x^k`.
    pub fn to_polyvec(&self, field: &Field) -> Vec<Poly> {
        (0..self.ell)
            .map(|j| Poly::new(field, (0..self.m).map(|k| self.get(k, j)).collect()))
            .collect()
    }

    /// Inverse of [`Codeword::to_polyvec`].
    pub fn from_polyvec(m: usize, polys: &[Poly]) -> Result<Codeword> {
        let ell = polys.len();
        let cols = polys.iter().map(|p| phi_inv(p, m)).collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(m * ell);
        for k in 0..m {
            for col in &cols {
                entries.push(col[k]);
            }
        }
        Ok(Codeword { m, ell, entries })
    }

    /// Row lambda-constashift: row `k` moves to `k + 1` and the last row,
    /// multiplied by `lambda`, becomes row 0.
    pub fn constashift(&self, field: &Field, lambda: FieldElement) -> Codeword {
        let ell = self.ell;
        let n = self.entries.len();
        let mut entries = Vec::with_capacity(n);
        entries.extend(self.entries[n - ell..].iter().map(|&x| field.mul(lambda, x)));
        entries.extend_from_slice(&self.entries[..n - ell]);
        Codeword { m: self.m, ell, entries }
    }
}

/// A lambda-quasi-twisted code of index `ell` and co-index `m`, held as its
/// reduced generator matrix.
#[derive(Debug)]
pub struct QtCode {
    field: Field,
    lambda: FieldElement,
    m: usize,
    ell: usize,
    gmatrix: PolyMatrix,
    modulus: Poly,
    roots: OnceLock<std::result::Result<RootSystem, Error>>,
}

impl Clone for QtCode {
    fn clone(&self) -> Self {
        let roots = OnceLock::new();
        if let Some(r) = self.roots.get() {
            let _ = roots.set(r.clone());
        }
        QtCode {
            field: self.field.clone(),
            lambda: self.lambda,
            m: self.m,
            ell: self.ell,
            gmatrix: self.gmatrix.clone(),
            modulus: self.modulus.clone(),
            roots,
        }
    }
}

fn validate(field: &Field, lambda: FieldElement, m: usize, ell: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Shape("co-index m must be positive".into()));
    }
    if ell == 0 {
        return Err(Error::Shape("index ell must be positive".into()));
    }
    if gcd(m as u64, field.order()) != 1 {
        return Err(Error::NotCoprime { m, q: field.order() });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    Ok(())
}

impl QtCode {
    /// The code generated by the given polynomial vectors (each of length
    /// `ell`); no generators gives the zero code.
    pub fn from_generators(
        field: &Field,
        lambda: FieldElement,
        m: usize,
        ell: usize,
        generators: &[Vec<Poly>],
    ) -> Result<QtCode> {
        validate(field, lambda, m, ell)?;
        let gmatrix = reduce_generating_set(field, generators, ell, m, lambda)?;
        Ok(QtCode::assemble(field, lambda, m, ell, gmatrix))
    }

    /// Wraps an already reduced generator matrix, checking the reduced form.
    pub fn from_reduced(field: &Field, lambda: FieldElement, m: usize, gmatrix: PolyMatrix) -> Result<QtCode> {
        let ell = gmatrix.rows();
        validate(field, lambda, m, ell)?;
        if gmatrix.cols() != ell {
            return Err(Error::NotSquare { rows: ell, cols: gmatrix.cols() });
        }
        let modulus = Poly::x_m_minus(field, m, lambda);
        let violations = gmatrix.reduced_form_violations(&modulus);
        if !violations.is_empty() {
            return Err(Error::Shape(format!("matrix is not in reduced form: {violations:?}")));
        }
        Ok(QtCode::assemble(field, lambda, m, ell, gmatrix))
    }

    /// The lambda-constacyclic code generated by `g` (index 1).
    pub fn constacyclic(field: &Field, lambda: FieldElement, m: usize, g: &Poly) -> Result<QtCode> {
        QtCode::from_generators(field, lambda, m, 1, &[vec![g.clone()]])
    }

    pub fn zero_code(field: &Field, lambda: FieldElement, m: usize, ell: usize) -> Result<QtCode> {
        QtCode::from_generators(field, lambda, m, ell, &[])
    }

    pub fn full_code(field: &Field, lambda: FieldElement, m: usize, ell: usize) -> Result<QtCode> {
        validate(field, lambda, m, ell)?;
        Ok(QtCode::assemble(field, lambda, m, ell, PolyMatrix::identity(field, ell)))
    }

    fn assemble(field: &Field, lambda: FieldElement, m: usize, ell: usize, gmatrix: PolyMatrix) -> QtCode {
        QtCode {
            field: field.clone(),
            lambda,
            m,
            ell,
            gmatrix,
            modulus: Poly::x_m_minus(field, m, lambda),
            roots: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Block length `m * ell`.
    pub fn length(&self) -> usize {
        self.m * self.ell
    }

    /// The reduced generator matrix.
    pub fn gmatrix(&self) -> &PolyMatrix {
        &self.gmatrix
    }

    /// `x^m - lambda`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// The root system of `x^m - lambda`, built on first use.
    pub fn roots(&self) -> Result<&RootSystem> {
        self.roots
            .get_or_init(|| RootSystem::new(&self.field, self.m, self.lambda))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `m ell - sum_j deg g_{j,j}`.
    pub fn dimension(&self) -> usize {
        let used: usize = self.gmatrix.diagonal_entries().iter().map(|d| d.degree().unwrap_or(0)).sum();
        self.length() - used
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    pub fn is_full_code(&self) -> bool {
        self.dimension() == self.length()
    }

    /// `det G(x) = prod_j g_{j,j}(x)`.
    pub fn determinant(&self) -> Poly {
        self.gmatrix.triangular_determinant().expect("reduced matrix is square and triangular")
    }

    /// Generator matrix over GF(q) with rows `Phi^{-1}(x^t g_j)` for
    /// `0 <= t < m - deg g_{j,j}`.
    pub fn scalar_generator_matrix(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, 0, self.length());
        for j in 0..self.ell {
            let row = self.gmatrix.row(j);
            let d = self.gmatrix.get(j, j).degree().unwrap_or(0);
            for t in 0..self.m - d {
                let shifted: Vec<Poly> = row
                    .iter()
                    .map(|p| p.shift(t).rem(&self.modulus).expect("modulus is nonzero"))
                    .collect();
                let word = Codeword::from_polyvec(self.m, &shifted).expect("reduced entries fit");
                out.push_row(word.as_slice()).expect("row length is m * ell");
            }
        }
        out
    }

    /// Encodes a message of length `dimension()` against
    /// [`QtCode::scalar_generator_matrix`].
    pub fn encode(&self, message: &[FieldElement]) -> Result<Codeword> {
        let g = self.scalar_generator_matrix();
        if message.len() != g.rows() {
            return Err(Error::Shape(format!("message of length {} for dimension {}", message.len(), g.rows())));
        }
        let f = &self.field;
        let mut acc = vec![f.zero(); self.length()];
        for (r, &c) in message.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &x) in acc.iter_mut().zip(g.row(r)) {
                *a = f.add(*a, f.mul(c, x));
            }
        }
        Codeword::new(self.m, self.ell, acc)
    }

    /// Membership by reduction against the reduced generator matrix.
    pub fn contains(&self, word: &Codeword) -> Result<bool> {
        if word.m != self.m || word.ell != self.ell {
            return Err(Error::Shape(format!(
                "{}x{} word for a {}x{} code",
                word.m, word.ell, self.m, self.ell
            )));
        }
        let mut c = word.to_polyvec(&self.field);
        for j in 0..self.ell {
            let (q, r) = c[j].div_rem(self.gmatrix.get(j, j))?;
            if !r.is_zero() {
                return Ok(false);
            }
            if q.is_zero() {
                continue;
            }
            for (t, g) in c.iter_mut().zip(self.gmatrix.row(j)) {
                *t = (&*t - &(&q * g)).rem(&self.modulus)?;
            }
        }
        Ok(c.iter().all(Poly::is_zero))
    }

    /// Whether no proper divisor `ell'` of `ell` also makes the code
    /// invariant under the lambda-constashift by `ell'` positions.
    pub fn is_minimal_index(&self) -> bool {
        let g = self.scalar_generator_matrix();
        let n = self.length();
        let f = &self.field;
        (1..self.ell).filter(|d| self.ell.is_multiple_of(*d)).all(|shift| {
            !(0..g.rows()).all(|r| {
                let v = g.row(r);
                let mut w = Vec::with_capacity(n);
                w.extend(v[n - shift..].iter().map(|&x| f.mul(self.lambda, x)));
                w.extend_from_slice(&v[..n - shift]);
                let word = Codeword::new(self.m, self.ell, w).expect("shape preserved");
                self.contains(&word).expect("shape matches")
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::new(p, 1).unwrap()
    }

    #[test]
    fn phi_basics() {
        let f = gf(2);
        let mut v = vec![f.zero(); 5];
        v[0] = f.one();
        assert!(phi(&f, &v).is_one());
        v[0] = f.zero();
        v[1] = f.one();
        assert_eq!(phi(&f, &v), Poly::monomial(&f, f.one(), 1));
        assert_eq!(phi_inv(&phi(&f, &v), 5).unwrap(), v);
        assert!(phi_inv(&Poly::monomial(&f, f.one(), 5), 5).is_err());
    }

    #[test]
    fn constashift_cycles() {
        let f = gf(3);
        let lam = f.neg(f.one());
        let mut c = Codeword::zero(4, 1);
        c.entries[0] = f.one();
        let mut w = c.clone();
        for _ in 0..4 {
            w = w.constashift(&f, lam);
        }
        assert_eq!(w.as_slice()[0], lam);
        for _ in 0..4 {
            w = w.constashift(&f, lam);
        }
        assert_eq!(w, c);
        let plain = c.constashift(&f, f.one());
        assert_eq!(plain.as_slice()[1], f.one());
    }

    #[test]
    fn dimension_extremes() {
        let f = gf(3);
        let full = QtCode::full_code(&f, f.one(), 5, 2).unwrap();
        assert_eq!(full.dimension(), 10);
        assert_eq!(full.scalar_generator_matrix().rank(), 10);
        let zero = QtCode::zero_code(&f, f.one(), 5, 2).unwrap();
        assert_eq!(zero.dimension(), 0);
        assert!(zero.scalar_generator_matrix().is_empty());
        assert!(zero.contains(&Codeword::zero(5, 2)).unwrap());
        let mut e = Codeword::zero(5, 2);
        e.entries[3] = f.one();
        assert!(!zero.contains(&e).unwrap());
        assert!(full.contains(&e).unwrap());
    }

    #[test]
    fn hamming_code_dimension() {
        let f = gf(2);
        let g = Poly::parse(&f, "1,1,0,1").unwrap();
        let c = QtCode::constacyclic(&f, f.one(), 7, &g).unwrap();
        assert_eq!(c.dimension(), 4);
        assert!(c.is_minimal_index());
    }

    #[test]
    fn non_minimal_index_detected() {
        // Two copies of a cyclic code interleaved: invariant under a single
        // shift, so the declared index 2 is not minimal.
        let f = gf(2);
        let one = Poly::one(&f);
        let x = Poly::monomial(&f, f.one(), 1);
        let c = QtCode::from_generators(&f, f.one(), 3, 2, &[vec![one, x]]).unwrap();
        assert!(!c.is_minimal_index());
    }

    #[test]
    fn rejects_bad_parameters() {
        let f = gf(3);
        assert_eq!(QtCode::zero_code(&f, f.one(), 6, 1).unwrap_err(), Error::NotCoprime { m: 6, q: 3 });
        assert_eq!(QtCode::zero_code(&f, f.zero(), 5, 1).unwrap_err(), Error::ZeroLambda);
    }
}
