//! Subfield embeddings, splitting fields of `x^m - lambda` and the root set
//! `Omega = { alpha * xi^k }` together with its Frobenius action.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::ntheory::{gcd, pow_mod, prime_divisors};

/// A field homomorphism GF(q) -> GF(q^t).
///
/// The generator `y` of the base field (a root of the base modulus) is sent
/// to the first root of the base modulus found among the powers of the
/// extension generator lying in the subfield of order `q`.
#[derive(Clone, Debug)]
pub struct Embedding {
    base: Field,
    ext: Field,
    image: Vec<FieldElement>,
    preimage: HashMap<FieldElement, FieldElement>,
}

impl Embedding {
    pub fn new(base: &Field, ext: &Field) -> Result<Embedding> {
        if base.characteristic() != ext.characteristic() || !ext.degree().is_multiple_of(base.degree()) {
            return Err(Error::InvalidField(format!("{base:?} is not a subfield of {ext:?}")));
        }
        let modulus = base.modulus();
        let eval = |r: FieldElement| {
            modulus.iter().rev().fold(ext.zero(), |acc, &c| {
                ext.add(ext.mul(acc, r), ext.from_int(c as i64))
            })
        };
        let root = if base.degree() == 1 {
            ext.neg(ext.from_int(modulus[0] as i64))
        } else {
            let step = (ext.order() - 1) / (base.order() - 1);
            (1..base.order())
                .map(|j| ext.exp(j * step))
                .find(|&r| eval(r).is_zero())
                .ok_or_else(|| Error::InvalidField("base modulus has no root".into()))?
        };
        let mut image = Vec::with_capacity(base.order() as usize);
        let mut preimage = HashMap::with_capacity(base.order() as usize);
        for x in base.elements() {
            let y = base
                .coeffs(x)
                .iter()
                .rev()
                .fold(ext.zero(), |acc, &c| ext.add(ext.mul(acc, root), ext.from_int(c as i64)));
            image.push(y);
            preimage.insert(y, x);
        }
        Ok(Embedding { base: base.clone(), ext: ext.clone(), image, preimage })
    }

    /// The identity embedding of a field into itself.
    pub fn identity(field: &Field) -> Embedding {
        Embedding::new(field, field).expect("a field embeds into itself")
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn embed(&self, x: FieldElement) -> FieldElement {
        self.image[self.base.index(x) as usize]
    }

    /// Preimage of `y` if it lies in the embedded base field.
    pub fn descend(&self, y: FieldElement) -> Option<FieldElement> {
        self.preimage.get(&y).copied()
    }
}

/// Smallest `t >= 1` such that all roots of `x^m - lambda` lie in GF(q^t).
pub fn splitting_field_degree(base: &Field, m: usize, lambda: FieldElement) -> Result<usize> {
    let q = base.order();
    if m == 0 {
        return Err(Error::InvalidField("length m must be positive".into()));
    }
    if gcd(m as u64, q) != 1 {
        return Err(Error::NotCoprime { m, q });
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let n = m as u64 * base.element_order(lambda);
    let mut t = 1;
    while pow_mod(q % n, t as u64, n) != 1 % n {
        t += 1;
    }
    Ok(t)
}

/// The permutation `k -> j` with `(alpha xi^k)^q = alpha xi^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frobenius {
    image: Vec<usize>,
}

impl Frobenius {
    pub fn from_image(image: Vec<usize>) -> Frobenius {
        Frobenius { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.image[k]
    }

    /// Orbit of `k` in visiting order `k, qk, q^2 k, ...`.
    pub fn orbit(&self, k: usize) -> Vec<usize> {
        let mut out = vec![k];
        let mut j = self.image[k];
        while j != k {
            out.push(j);
            j = self.image[j];
        }
        out
    }

    /// All orbits, ordered by their smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for k in 0..self.image.len() {
            if !seen[k] {
                let orbit = self.orbit(k);
                for &j in &orbit {
                    seen[j] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_closed(&self, members: &[bool]) -> bool {
        (0..members.len()).all(|k| !members[k] || members[self.image[k]])
    }

    pub fn closure(&self, members: &[bool]) -> Vec<bool> {
        let mut out = members.to_vec();
        for (k, &member) in members.iter().enumerate() {
            if member {
                for j in self.orbit(k) {
                    out[j] = true;
                }
            }
        }
        out
    }
}

/// The roots of `x^m - lambda` in its splitting field.
#[derive(Clone, Debug)]
pub struct RootSystem {
    embedding: Embedding,
    m: usize,
    lambda: FieldElement,
    alpha: FieldElement,
    xi: FieldElement,
    omega: Vec<FieldElement>,
    index: HashMap<FieldElement, usize>,
    frobenius: Arc<Frobenius>,
}

impl RootSystem {
    /// `alpha` is the first power of the generator whose m-th power is the
    /// embedded `lambda`; `xi = g^((Q-1)/m)`.
    pub fn new(base: &Field, m: usize, lambda: FieldElement) -> Result<RootSystem> {
        let t = splitting_field_degree(base, m, lambda)?;
        let ext = Field::new(base.characteristic(), base.degree() * t)?;
        let embedding = Embedding::new(base, &ext)?;
        let big = ext.order() - 1;
        let lam = embedding.embed(lambda);
        let log = ext.log(lam).expect("lambda is nonzero");
        debug_assert_eq!(log % m as u64, 0);
        let alpha = ext.exp(log / m as u64);
        let xi = ext.exp(big / m as u64);
        let mut omega = Vec::with_capacity(m);
        let mut w = alpha;
        for _ in 0..m {
            omega.push(w);
            w = ext.mul(w, xi);
        }
        let index: HashMap<_, _> = omega.iter().enumerate().map(|(k, &w)| (w, k)).collect();
        if index.len() != m {
            return Err(Error::InvalidField("roots of x^m - lambda are not distinct".into()));
        }
        let q = base.order();
        let image = omega
            .iter()
            .map(|&w| index.get(&ext.pow(w, q)).copied().ok_or(Error::NotARoot))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem {
            embedding,
            m,
            lambda,
            alpha,
            xi,
            omega,
            index,
            frobenius: Arc::new(Frobenius { image }),
        })
    }

    pub fn base(&self) -> &Field {
        self.embedding.base()
    }

    /// The splitting field.
    pub fn ext(&self) -> &Field {
        self.embedding.ext()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn xi(&self) -> FieldElement {
        self.xi
    }

    pub fn omega(&self) -> &[FieldElement] {
        &self.omega
    }

    pub fn root(&self, k: usize) -> FieldElement {
        self.omega[k]
    }

    /// Index `k` with `alpha xi^k = w`.
    pub fn index_of(&self, w: FieldElement) -> Option<usize> {
        self.index.get(&w).copied()
    }

    pub fn frobenius(&self) -> &Arc<Frobenius> {
        &self.frobenius
    }

    pub fn frobenius_orbit(&self, k: usize) -> Vec<usize> {
        self.frobenius.orbit(k)
    }

    /// Whether `xi` has exact multiplicative order `m`.
    pub fn xi_is_primitive(&self) -> bool {
        let ext = self.ext();
        let m = self.m as u64;
        ext.pow(self.xi, m) == ext.one()
            && prime_divisors(m).iter().all(|&r| ext.pow(self.xi, m / r) != ext.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_one(f: &Field) -> FieldElement {
        f.neg(f.one())
    }

    #[test]
    fn splitting_degrees() {
        let f2 = Field::new(2, 1).unwrap();
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(splitting_field_degree(&f2, 23, f2.one()), Ok(11));
        assert_eq!(splitting_field_degree(&f3, 26, f3.one()), Ok(3));
        assert_eq!(splitting_field_degree(&f3, 28, minus_one(&f3)), Ok(6));
        assert_eq!(
            splitting_field_degree(&f3, 12, f3.one()),
            Err(Error::NotCoprime { m: 12, q: 3 })
        );
        assert_eq!(splitting_field_degree(&f3, 4, f3.zero()), Err(Error::ZeroLambda));
    }

    #[test]
    fn splitting_degree_brute_force() {
        let f3 = Field::new(3, 1).unwrap();
        for m in [1usize, 2, 4, 5, 7, 8, 10, 11, 13, 14, 20, 28] {
            let brute = (1..).find(|&s| (3u64.pow(s) - 1) % (2 * m as u64) == 0).unwrap();
            assert_eq!(splitting_field_degree(&f3, m, minus_one(&f3)).unwrap(), brute as usize);
        }
    }

    #[test]
    fn golay_roots() {
        let f2 = Field::new(2, 1).unwrap();
        let rs = RootSystem::new(&f2, 23, f2.one()).unwrap();
        assert_eq!(rs.ext().order(), 2048);
        assert_eq!(rs.alpha(), rs.ext().one());
        assert!(rs.xi_is_primitive());
        assert_eq!(rs.frobenius_orbit(1), vec![1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12]);
        assert_eq!(rs.frobenius_orbit(0), vec![0]);
    }

    #[test]
    fn negacyclic_roots() {
        let f3 = Field::new(3, 1).unwrap();
        let rs = RootSystem::new(&f3, 20, minus_one(&f3)).unwrap();
        let ext = rs.ext();
        let lam = rs.embedding().embed(minus_one(&f3));
        for &w in rs.omega() {
            assert_eq!(ext.pow(w, 20), lam);
        }
        assert_eq!(rs.frobenius_orbit(12), vec![12, 17]);
        let orbits = rs.frobenius().orbits();
        let total: usize = orbits.iter().map(Vec::len).sum();
        assert_eq!(total, 20);
    }

    #[test]
    fn embedding_of_extension_base() {
        let base = Field::new(2, 2).unwrap();
        let ext = Field::new(2, 6).unwrap();
        let e = Embedding::new(&base, &ext).unwrap();
        for a in base.elements() {
            for b in base.elements() {
                assert_eq!(e.embed(base.mul(a, b)), ext.mul(e.embed(a), e.embed(b)));
                assert_eq!(e.embed(base.add(a, b)), ext.add(e.embed(a), e.embed(b)));
            }
            assert_eq!(e.descend(e.embed(a)), Some(a));
        }
        assert!(Embedding::new(&Field::new(2, 4).unwrap(), &ext).is_err());
    }

    #[test]
    fn embedding_is_additive_over_gf5() {
        let base = Field::new(5, 1).unwrap();
        let ext = Field::new(5, 2).unwrap();
        let e = Embedding::new(&base, &ext).unwrap();
        for a in base.elements() {
            assert_eq!(e.embed(a), ext.from_int(base.index(a) as i64));
        }
    }
}
