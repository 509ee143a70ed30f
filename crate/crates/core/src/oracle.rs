//! Exhaustive minimum-distance computation and constacyclic codes from
//! defining sets.

use crate::bounds::DefiningSet;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::qt::QtCode;
use crate::roots::RootSystem;

/// Default enumeration budget in codewords.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

/// Environment variable overriding the enumeration budget.
pub const BUDGET_ENV: &str = "QTSPEC_ORACLE_BUDGET";

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest accepted `q^dim`.
    pub budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: DEFAULT_BUDGET }
    }
}

impl OracleConfig {
    pub fn new(budget: u128) -> OracleConfig {
        OracleConfig { budget }
    }

    /// The default budget, overridden by `QTSPEC_ORACLE_BUDGET` when it
    /// holds a positive integer.
    pub fn from_env() -> OracleConfig {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
            .filter(|&b| b > 0)
            .unwrap_or(DEFAULT_BUDGET);
        OracleConfig { budget }
    }

    /// Work units `q^dim`, saturating.
    pub fn cost(q: u64, dim: usize) -> u128 {
        let mut c: u128 = 1;
        for _ in 0..dim {
            c = c.saturating_mul(q as u128);
        }
        c
    }
}

/// Minimum nonzero weight of the row space of `generator`.
///
/// Enumerates whichever of the code and its dual is smaller. For the dual
/// the weight distribution is tallied and transformed back through the
/// MacWilliams identities, so the work is `q^min(k, n - k)`.
pub fn min_distance(generator: &Matrix, config: &OracleConfig) -> Result<usize> {
    let f = generator.field();
    let basis = generator.row_basis();
    let (k, n) = (basis.rows(), basis.cols());
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let small = k.min(n - k);
    let needed = OracleConfig::cost(f.order(), small);
    if needed > config.budget {
        return Err(Error::BudgetExceeded { needed, budget: config.budget });
    }
    if k <= n - k || OracleConfig::cost(f.order(), k) >= MODULUS as u128 {
        let mut best = usize::MAX;
        enumerate_weights(&basis, |w| {
            best = best.min(w);
            best > 1
        });
        return Ok(best);
    }
    let dual = basis.null_space();
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    enumerate_weights(&dual, |w| {
        counts[w] += 1;
        true
    });
    Ok(macwilliams_min_weight(&counts, f.order()))
}

/// Visits the weight of every nonzero codeword until `visit` returns false.
///
/// An odometer over the GF(p)-expansion of the message space: every step
/// adds a single generator to the running codeword.
fn enumerate_weights(basis: &Matrix, mut visit: impl FnMut(usize) -> bool) {
    let f = basis.field();
    let p = f.characteristic();
    let s = f.degree();
    let n = basis.cols();
    // GF(p)-generators y^i * row, as sparse lists of (position, value).
    let mut gens: Vec<Vec<(usize, FieldElement)>> = Vec::with_capacity(basis.rows() * s);
    for r in 0..basis.rows() {
        for i in 0..s {
            let y = f.from_index(p.pow(i as u32));
            gens.push(
                basis
                    .row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, &x)| (c, f.mul(y, x)))
                    .collect(),
            );
        }
    }
    let mut word = vec![f.zero(); n];
    let mut weight = 0usize;
    let mut digits = vec![0u64; gens.len()];
    loop {
        let mut d = 0;
        loop {
            if d == digits.len() {
                return;
            }
            for &(c, x) in &gens[d] {
                let before = !word[c].is_zero();
                word[c] = f.add(word[c], x);
                let after = !word[c].is_zero();
                weight = weight + after as usize - before as usize;
            }
            digits[d] += 1;
            if digits[d] < p {
                break;
            }
            digits[d] = 0;
            d += 1;
        }
        if !visit(weight) {
            return;
        }
    }
}

const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Smallest `w >= 1` with `A_w > 0`, where `A` is the weight distribution
/// of the dual of the code with distribution `dual_counts`.
///
/// `|C^perp| A_w = sum_i B_i K_w(i)` is evaluated modulo the prime
/// `2^61 - 1`; since `0 <= A_w < q^k` stays below the modulus, a zero
/// residue means `A_w = 0` exactly.
fn macwilliams_min_weight(dual_counts: &[u64], q: u64) -> usize {
    let n = dual_counts.len() - 1;
    let mut binom = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % MODULUS;
        }
    }
    let qm1: Vec<u64> = (0..=n).map(|e| pow_mod((q - 1) % MODULUS, e as u64)).collect();
    for w in 1..=n {
        let mut total = 0u64;
        for (i, &b) in dual_counts.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let mut kw = 0u64;
            for j in 0..=w.min(i) {
                if w - j > n - i {
                    continue;
                }
                let term = mul_mod(mul_mod(binom[i][j], binom[n - i][w - j]), qm1[w - j]);
                kw = if j % 2 == 0 { (kw + term) % MODULUS } else { (kw + MODULUS - term) % MODULUS };
            }
            total = (total + mul_mod(b % MODULUS, kw)) % MODULUS;
        }
        if total != 0 {
            return w;
        }
    }
    unreachable!("a nonzero code has a nonzero codeword")
}

/// Minimum distance of a quasi-twisted code.
pub fn qt_min_distance(code: &QtCode, config: &OracleConfig) -> Result<usize> {
    min_distance(&code.scalar_generator_matrix(), config)
}

/// `g(x) = prod_{k in L} (x - alpha xi^k)`, descended to GF(q).
pub fn constacyclic_generator(roots: &RootSystem, l: &DefiningSet) -> Result<Poly> {
    if l.m() != roots.m() {
        return Err(Error::InvalidDefiningSet(format!("set over Z_{} for m = {}", l.m(), roots.m())));
    }
    if !l.is_closed(roots.frobenius()) {
        return Err(Error::NotClosed);
    }
    let ext = roots.ext();
    let g = l
        .indices()
        .into_iter()
        .fold(Poly::one(ext), |acc, k| &acc * &Poly::linear(ext, roots.root(k)));
    g.descend(roots.embedding()).map_err(|_| Error::DescentFailure)
}

/// The constacyclic code with defining set `L`, as an index-1 QT code.
pub fn constacyclic_code(roots: &RootSystem, l: &DefiningSet) -> Result<QtCode> {
    let g = constacyclic_generator(roots, l)?;
    QtCode::constacyclic(roots.base(), roots.lambda(), roots.m(), &g)
}
