//! Shared random corpus and property checks for the integration suites.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qtspec_core::bounds::{
    closed_subsets, spectral_bound, spectral_roos, spectral_shift, DefiningSet, DpSource, SpectralOptions,
    StridePolicy,
};
use qtspec_core::oracle::{constacyclic_generator, qt_min_distance, OracleConfig};
use qtspec_core::spectral::{eigencode, parity_check, spectral_data};
use qtspec_core::{Codeword, Distance, Error, Field, Matrix, Poly, QtCode, RootSystem};

pub const CORPUS_SEED: u64 = 0x5eed_c0de;
pub const CORPUS_SIZE: usize = 240;
/// Enumeration limit used to decide oracle feasibility.
pub const FEASIBLE: u128 = 1 << 16;

pub fn random_poly(field: &Field, rng: &mut StdRng, len: usize) -> Poly {
    let q = field.order();
    Poly::new(field, (0..len).map(|_| field.from_index(rng.gen_range(0..q))).collect())
}

fn coprime_lengths(q: u64) -> Vec<usize> {
    (2..=15).filter(|&m| qtspec_core::ntheory::gcd(m as u64, q) == 1).collect()
}

/// A random code: `q` in {2, 3}, `m <= 15` coprime to `q`, `ell <= 3`,
/// `lambda = ±1`. Generators are either random polynomial vectors or
/// multiples of a random constacyclic generator, which forces eigenvalues.
pub fn random_code(rng: &mut StdRng) -> QtCode {
    let q = if rng.gen_bool(0.5) { 2 } else { 3 };
    let field = Field::new(q, 1).unwrap();
    let lengths = coprime_lengths(q);
    let m = lengths[rng.gen_range(0..lengths.len())];
    let ell = rng.gen_range(1..=3);
    let lambda = if q == 3 && rng.gen_bool(0.5) { field.from_int(-1) } else { field.one() };
    let r = rng.gen_range(1..=ell);
    let structured = rng.gen_range(0..3) > 0;
    let g = if structured {
        let roots = RootSystem::new(&field, m, lambda).unwrap();
        let mut mask = vec![false; m];
        for orbit in roots.frobenius().orbits() {
            if rng.gen_bool(0.5) {
                for k in orbit {
                    mask[k] = true;
                }
            }
        }
        constacyclic_generator(&roots, &DefiningSet::from_mask(mask)).unwrap()
    } else {
        Poly::one(&field)
    };
    let gens: Vec<Vec<Poly>> = (0..r)
        .map(|_| (0..ell).map(|_| &random_poly(&field, rng, m) * &g).collect())
        .collect();
    QtCode::from_generators(&field, lambda, m, ell, &gens).unwrap()
}

pub fn corpus() -> Vec<QtCode> {
    let mut rng = StdRng::seed_from_u64(CORPUS_SEED);
    (0..CORPUS_SIZE).map(|_| random_code(&mut rng)).collect()
}

pub fn describe(code: &QtCode) -> String {
    format!(
        "q={} m={} ell={} lambda={} G={:?}",
        code.field().order(),
        code.m(),
        code.ell(),
        code.field().format(code.lambda()),
        code.gmatrix().serialize()
    )
}

pub fn oracle_feasible(code: &QtCode) -> bool {
    let k = code.dimension();
    k > 0 && OracleConfig::cost(code.field().order(), k.min(code.length() - k)) <= FEASIBLE
}

/// Algebraic multiplicity equals eigenspace dimension.
pub fn check_lemma1(codes: &[QtCode]) -> Vec<String> {
    let mut failures = Vec::new();
    for code in codes {
        let data = spectral_data(code).unwrap();
        let total: usize = data.eigenvalues.iter().map(|e| e.multiplicity).sum();
        let degs: usize = code.gmatrix().diagonal_entries().iter().map(|g| g.degree().unwrap_or(0)).sum();
        if total != degs {
            failures.push(format!("{}: multiplicities sum to {total}, diagonal degrees to {degs}", describe(code)));
        }
        for e in &data.eigenvalues {
            if e.multiplicity != e.eigenspace.rows() {
                failures.push(format!(
                    "{}: eigenvalue {} has multiplicity {} but eigenspace dimension {}",
                    describe(code),
                    e.index,
                    e.multiplicity,
                    e.eigenspace.rows()
                ));
            }
        }
    }
    failures
}

/// `rank(H) = m ell - dim C` and `H c^T = 0` for random codewords.
pub fn check_parity(codes: &[QtCode], words_per_code: usize) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(CORPUS_SEED ^ 0xabcd);
    let mut failures = Vec::new();
    for code in codes {
        let h = parity_check(code).unwrap();
        let n = code.length();
        let rank = if h.full_space { 0 } else { h.matrix.rank() };
        if rank != n - code.dimension() {
            failures.push(format!("{}: rank H = {rank}, expected {}", describe(code), n - code.dimension()));
        }
        if h.full_space != code.is_full_code() {
            failures.push(format!("{}: full-space flag mismatch", describe(code)));
        }
        let emb = code.roots().unwrap().embedding().clone();
        let f = code.field();
        for _ in 0..words_per_code {
            let msg: Vec<_> = (0..code.dimension()).map(|_| f.from_index(rng.gen_range(0..f.order()))).collect();
            let word = code.encode(&msg).unwrap();
            let lifted: Vec<_> = word.as_slice().iter().map(|&x| emb.embed(x)).collect();
            if h.matrix.mul_vec(&lifted).unwrap().iter().any(|x| !x.is_zero()) {
                failures.push(format!("{}: H c^T != 0 for {:?}", describe(code), word.as_slice()));
                break;
            }
        }
    }
    failures
}

/// Tallies from [`check_soundness`].
#[derive(Debug, Default)]
pub struct SoundnessStats {
    pub codes: usize,
    pub bounds: usize,
    /// Bounds above the trivial value 1.
    pub nontrivial: usize,
    /// Bounds equal to the exact distance.
    pub tight: usize,
}

/// Every bound is at most the exact distance.
pub fn check_soundness(codes: &[QtCode]) -> (Vec<String>, SoundnessStats) {
    let mut failures = Vec::new();
    let mut stats = SoundnessStats::default();
    let base = SpectralOptions { oracle: OracleConfig::new(FEASIBLE), ..Default::default() };
    let coprime = SpectralOptions { stride_policy: StridePolicy::Coprime, ..base };
    for code in codes.iter().filter(|c| oracle_feasible(c) && !c.is_full_code()) {
        stats.codes += 1;
        let d = Distance::Finite(qt_min_distance(code, &base.oracle).unwrap());
        let mut results = Vec::new();
        results.push(("spectral_roos", spectral_roos(code, &base)));
        results.push(("spectral_shift", spectral_shift(code, &base)));
        let frob = code.roots().unwrap().frobenius().clone();
        let omega_bar = DefiningSet::new(code.m(), &spectral_data(code).unwrap().omega_bar()).unwrap();
        for p in closed_subsets(&omega_bar, &frob, 1 << 10).unwrap().into_iter().filter(|p| !p.is_full()) {
            let p = p.indices();
            results.push(("bch unit", spectral_bound(code, Some(&p), DpSource::Bch, &base)));
            results.push(("bch coprime", spectral_bound(code, Some(&p), DpSource::Bch, &coprime)));
            for source in [DpSource::Ht, DpSource::Roos, DpSource::Shift, DpSource::Oracle] {
                results.push(("spectral", spectral_bound(code, Some(&p), source, &base)));
            }
        }
        for (name, r) in results {
            match r {
                Ok(w) if w.value <= d => {
                    stats.bounds += 1;
                    stats.nontrivial += usize::from(w.value > Distance::Finite(1));
                    stats.tight += usize::from(w.value == d);
                }
                Ok(w) => failures.push(format!("{}: {name} gives {} > d = {d}: {w:?}", describe(code), w.value)),
                Err(Error::InvalidEigenvalueSet(_)) => {}
                Err(e) => failures.push(format!("{}: {name} failed: {e}", describe(code))),
            }
        }
    }
    (failures, stats)
}

/// Zero code iff every root is an eigenvalue of multiplicity `ell` iff
/// `H` has full rank `m ell`; full code iff there are no eigenvalues.
pub fn check_degenerate(codes: &[QtCode]) -> Vec<String> {
    let mut failures = Vec::new();
    let mut all: Vec<QtCode> = codes.to_vec();
    for (q, m, ell) in [(2, 7, 1), (2, 5, 3), (3, 4, 2), (3, 7, 3)] {
        let f = Field::new(q, 1).unwrap();
        let lambda = if q == 3 { f.from_int(-1) } else { f.one() };
        all.push(QtCode::zero_code(&f, lambda, m, ell).unwrap());
        all.push(QtCode::full_code(&f, lambda, m, ell).unwrap());
    }
    for code in &all {
        let data = spectral_data(code).unwrap();
        let ell = code.ell();
        let n = code.length();
        let spectral_zero = data.omega_bar().len() == code.m()
            && data.eigenvalues.iter().all(|e| e.multiplicity == ell && e.eigenspace.rows() == ell);
        let h = parity_check(code).unwrap();
        let mut reduced = h.matrix.clone();
        reduced.rref();
        let h_identity = !h.full_space && reduced == Matrix::identity(reduced.field(), n);
        if code.is_zero_code() != spectral_zero || code.is_zero_code() != h_identity {
            failures.push(format!(
                "{}: zero={} spectral={spectral_zero} H=I:{h_identity}",
                describe(code),
                code.is_zero_code()
            ));
        }
        if code.is_full_code() != data.is_empty() {
            failures.push(format!("{}: full={} but eigenvalue set empty={}", describe(code), code.is_full_code(), data.is_empty()));
        }
        let ext = code.roots().unwrap().ext().clone();
        let ec = eigencode(code, &Matrix::zeros(&ext, 0, ell), &OracleConfig::default()).unwrap();
        if ec.distance != Distance::Finite(1) || ec.basis.rank() != ell {
            failures.push(format!("{}: eigencode of the empty basis is not the full space", describe(code)));
        }
    }
    for d in 1..50 {
        if Distance::Finite(d).min(Distance::Infinite) != Distance::Finite(d) {
            failures.push(format!("min({d}, inf) != {d}"));
        }
    }
    failures
}

/// Reduced-form conditions and `dim = m ell - sum deg g_jj = rank G`.
pub fn check_reduction(codes: &[QtCode]) -> Vec<String> {
    let mut failures = Vec::new();
    for code in codes {
        let violations = code.gmatrix().reduced_form_violations(code.modulus());
        if !violations.is_empty() {
            failures.push(format!("{}: {violations:?}", describe(code)));
        }
        let degs: usize = code.gmatrix().diagonal_entries().iter().map(|g| g.degree().unwrap_or(0)).sum();
        let formula = code.length() - degs;
        let rank = code.scalar_generator_matrix().rank();
        if formula != code.dimension() || rank != formula {
            failures.push(format!("{}: formula {formula}, dimension {}, rank {rank}", describe(code), code.dimension()));
        }
    }
    failures
}

pub fn random_codeword(code: &QtCode, rng: &mut StdRng) -> Codeword {
    let f = code.field();
    let msg: Vec<_> = (0..code.dimension()).map(|_| f.from_index(rng.gen_range(0..f.order()))).collect();
    code.encode(&msg).unwrap()
}
