//! Spectral bounds: `d(C) >= min(d_P, d(C_P))` for eigenvalue sets `P`,
//! with `d_P` from any defining-set bound and `C_P` the eigencode of the
//! common eigenspace of `P`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{
    bch_bound, bits_to_indices, closed_subsets, ht_bound, roos::product_set, roos::roos_search, roos_bound,
    shift_bound, BoundWitness, DefiningSet, HtOptions, Method, Payload, RoosCaps, ShiftCaps, StridePolicy,
};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::oracle::{constacyclic_code, qt_min_distance, OracleConfig};
use crate::qt::QtCode;
use crate::roots::Frobenius;
use crate::spectral::{eigencode, eigenvalues};

/// Where `d_P` comes from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DpSource {
    Bch,
    Ht,
    #[default]
    Roos,
    Shift,
    /// Exact distance of the constacyclic code, by enumeration.
    Oracle,
}

impl std::str::FromStr for DpSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<DpSource> {
        match s {
            "bch" => Ok(DpSource::Bch),
            "ht" => Ok(DpSource::Ht),
            "roos" => Ok(DpSource::Roos),
            "shift" => Ok(DpSource::Shift),
            "oracle" => Ok(DpSource::Oracle),
            _ => Err(Error::InvalidEigenvalueSet(format!("unknown d_P source {s:?}"))),
        }
    }
}

/// Configuration shared by the spectral bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct SpectralOptions {
    pub stride_policy: StridePolicy,
    pub ht: HtOptions,
    pub roos: RoosCaps,
    pub shift: ShiftCaps,
    pub oracle: OracleConfig,
}

/// Evaluated `G(beta)` for every eigenvalue and memoized eigencode
/// distances keyed by the eigenvalue subset.
struct EigenContext<'a> {
    code: &'a QtCode,
    config: OracleConfig,
    omega_bar: DefiningSet,
    evaluated: HashMap<usize, Matrix>,
    memo: HashMap<Vec<usize>, Distance>,
}

impl<'a> EigenContext<'a> {
    fn new(code: &'a QtCode, config: OracleConfig) -> Result<EigenContext<'a>> {
        let indices: Vec<usize> = eigenvalues(code)?.into_iter().map(|(k, _)| k).collect();
        let omega_bar = DefiningSet::new(code.m(), &indices)?;
        if omega_bar.is_empty() {
            return Err(Error::InvalidEigenvalueSet("the full code has no eigenvalues".into()));
        }
        if code.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let roots = code.roots()?;
        let evaluated = indices
            .iter()
            .map(|&k| (k, code.gmatrix().eval(roots.embedding(), roots.root(k))))
            .collect();
        Ok(EigenContext { code, config, omega_bar, evaluated, memo: HashMap::new() })
    }

    fn eigencode_distance(&mut self, p: &[usize]) -> Result<Distance> {
        if let Some(&d) = self.memo.get(p) {
            return Ok(d);
        }
        let ext = self.code.roots()?.ext();
        let mut stacked = Matrix::zeros(ext, 0, self.code.ell());
        for k in p {
            let g = self
                .evaluated
                .get(k)
                .ok_or_else(|| Error::InvalidEigenvalueSet(format!("index {k} is not an eigenvalue")))?;
            stacked = stacked.stack(g)?;
        }
        let d = eigencode(self.code, &stacked.null_space(), &self.config)?.distance;
        self.memo.insert(p.to_vec(), d);
        Ok(d)
    }
}

/// `min(d_P, d(C_P))` with `P` replaced by its Frobenius closure.
///
/// `P` defaults to the whole eigenvalue set; when that is all of Omega the
/// best maximal proper q-closed subset is used instead.
pub fn spectral_bound(
    code: &QtCode,
    p: Option<&[usize]>,
    source: DpSource,
    options: &SpectralOptions,
) -> Result<BoundWitness> {
    let mut ctx = EigenContext::new(code, options.oracle)?;
    let frob = code.roots()?.frobenius().clone();
    let candidates = match p {
        Some(p) => vec![DefiningSet::new(code.m(), p)?],
        None => search_regions(&ctx.omega_bar, &frob),
    };
    let mut best: Option<BoundWitness> = None;
    for p_set in candidates {
        let w = bound_for(code, &mut ctx, &frob, &p_set, source, options)?;
        if best.as_ref().is_none_or(|b| w.value > b.value) {
            best = Some(w);
        }
    }
    best.ok_or_else(|| Error::InvalidEigenvalueSet("no proper q-closed set of eigenvalues".into()))
}

fn bound_for(
    code: &QtCode,
    ctx: &mut EigenContext<'_>,
    frob: &Frobenius,
    p_set: &DefiningSet,
    source: DpSource,
    options: &SpectralOptions,
) -> Result<BoundWitness> {
    if p_set.is_empty() {
        return Err(Error::InvalidEigenvalueSet("P is empty".into()));
    }
    if !p_set.is_subset(&ctx.omega_bar) {
        return Err(Error::InvalidEigenvalueSet("P contains non-eigenvalues".into()));
    }
    let closure = p_set.closure(frob);
    if closure.is_full() {
        return Err(Error::InvalidEigenvalueSet("the closure of P is all of Omega".into()));
    }
    let (d_p, d_p_witness) = d_p_of(code, &closure, source, options)?;
    let eigencode_distance = ctx.eigencode_distance(&closure.indices())?;
    Ok(BoundWitness {
        method: Method::Spectral,
        value: d_p.min(eigencode_distance),
        payload: Payload::Spectral {
            p: p_set.indices(),
            closure: closure.indices(),
            source,
            d_p,
            d_p_witness: d_p_witness.map(Box::new),
            eigencode_distance,
        },
    })
}

fn d_p_of(
    code: &QtCode,
    closure: &DefiningSet,
    source: DpSource,
    options: &SpectralOptions,
) -> Result<(Distance, Option<BoundWitness>)> {
    let roots = code.roots()?;
    let w = match source {
        DpSource::Bch => bch_bound(closure, options.stride_policy)?,
        DpSource::Ht => ht_bound(closure, options.ht)?,
        DpSource::Roos => roos_bound(closure, options.roos)?,
        DpSource::Shift => shift_bound(closure, roots.frobenius(), options.shift)?,
        DpSource::Oracle => {
            let c = constacyclic_code(roots, closure)?;
            return Ok((Distance::Finite(qt_min_distance(&c, &options.oracle)?), None));
        }
    };
    Ok((w.value, Some(w)))
}

/// Roos search restricted to `MN ⊆ Omega-bar`, scoring each certificate by
/// `min(|M| + d_N - 1, d(C_MN))`.
pub fn spectral_roos(code: &QtCode, options: &SpectralOptions) -> Result<BoundWitness> {
    let mut ctx = EigenContext::new(code, options.oracle)?;
    let frob = code.roots()?.frobenius().clone();
    let mut best: Option<BoundWitness> = None;
    for region in search_regions(&ctx.omega_bar, &frob) {
        let found = roos_search(&region, options.roos, |mn, value| {
            Ok(Distance::Finite(value).min(ctx.eigencode_distance(&bits_to_indices(mn))?))
        })?;
        if let Some(w) = found {
            if best.as_ref().is_none_or(|b| w.value > b.value) {
                best = Some(w);
            }
        }
    }
    let mut w = best.ok_or_else(|| Error::InvalidEigenvalueSet("no Roos certificate".into()))?;
    if let Payload::Roos { n, m_set, eigencode_distance, .. } = &mut w.payload {
        *eigencode_distance = Some(ctx.eigencode_distance(&product_set(code.m(), m_set, n))?);
    }
    w.method = Method::Spectral;
    Ok(w)
}

/// Omega-bar itself, or its maximal proper q-closed subsets when every
/// root is an eigenvalue.
fn search_regions(omega_bar: &DefiningSet, frob: &Frobenius) -> Vec<DefiningSet> {
    if !omega_bar.is_full() {
        return vec![omega_bar.clone()];
    }
    frob.orbits()
        .into_iter()
        .map(|orbit| {
            let mut mask = omega_bar.mask().to_vec();
            for k in orbit {
                mask[k] = false;
            }
            DefiningSet::from_mask(mask)
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// Maximum over nonempty proper q-closed `T ⊆ Omega-bar` of
/// `min(shift bound of T, d(C_T))`.
pub fn spectral_shift(code: &QtCode, options: &SpectralOptions) -> Result<BoundWitness> {
    let mut ctx = EigenContext::new(code, options.oracle)?;
    let frob = code.roots()?.frobenius().clone();
    let mut best: Option<BoundWitness> = None;
    for t in closed_subsets(&ctx.omega_bar, &frob, options.shift.max_supersets)?.into_iter().filter(|t| !t.is_full()) {
        let ec = ctx.eigencode_distance(&t.indices())?;
        let ceiling = ec.min(Distance::Finite(t.len() + 1));
        if best.as_ref().is_some_and(|b| ceiling <= b.value) {
            continue;
        }
        let mut w = shift_bound(&t, &frob, options.shift)?;
        let value = w.value.min(ec);
        if best.as_ref().is_none_or(|b| value > b.value) {
            if let Payload::Shift { eigen_set, eigencode_distance, .. } = &mut w.payload {
                *eigen_set = Some(t.indices());
                *eigencode_distance = Some(ec);
            }
            w.method = Method::Spectral;
            w.value = value;
            best = Some(w);
        }
    }
    best.ok_or_else(|| Error::InvalidEigenvalueSet("no eigenvalue subsets".into()))
}

/// Re-derives a spectral witness (including the spectral Roos and shift
/// variants) against `code`.
pub fn replay_spectral(code: &QtCode, witness: &BoundWitness, options: &SpectralOptions) -> Result<Distance> {
    let mut ctx = EigenContext::new(code, options.oracle)?;
    let roots = code.roots()?;
    let frob = roots.frobenius();
    let m = code.m();
    let fail = |msg: String| Err(Error::InvalidEigenvalueSet(format!("witness replay: {msg}")));
    let value = match &witness.payload {
        Payload::Spectral { p, closure, source, d_p, d_p_witness, eigencode_distance } => {
            let p_set = DefiningSet::new(m, p)?;
            if p_set.is_empty() || !p_set.is_subset(&ctx.omega_bar) {
                return fail("P is not a nonempty set of eigenvalues".into());
            }
            let cl = p_set.closure(frob);
            if cl.indices() != *closure {
                return fail("closure of P does not match".into());
            }
            let replayed = match (source, d_p_witness) {
                (DpSource::Oracle, _) => d_p_of(code, &cl, DpSource::Oracle, options)?.0,
                (_, Some(w)) => w.replay(&cl, Some(frob))?,
                (_, None) => return fail("missing d_P witness".into()),
            };
            if replayed != *d_p {
                return fail(format!("d_P replays to {replayed}, witness claims {d_p}"));
            }
            let ec = ctx.eigencode_distance(closure)?;
            if ec != *eigencode_distance {
                return fail(format!("eigencode distance {ec}, witness claims {eigencode_distance}"));
            }
            (*d_p).min(ec)
        }
        Payload::Roos { n, m_set, eigencode_distance: Some(claimed), .. } => {
            let mn = product_set(m, m_set, n);
            let region = DefiningSet::new(m, &mn)?.closure(frob);
            if region.is_full() || !region.is_subset(&ctx.omega_bar) {
                return fail("MN must lie in a proper q-closed set of eigenvalues".into());
            }
            let ec = ctx.eigencode_distance(&mn)?;
            if ec != *claimed {
                return fail(format!("eigencode distance {ec}, witness claims {claimed}"));
            }
            let plain = BoundWitness { method: Method::Roos, value: witness.value, payload: witness.payload.clone() };
            plain.replay(&region, None)?
        }
        Payload::Shift { eigen_set: Some(t), eigencode_distance: Some(claimed), .. } => {
            let t_set = DefiningSet::new(m, t)?;
            if t_set.is_empty() || t_set.is_full() || !t_set.is_subset(&ctx.omega_bar) || !t_set.is_closed(frob) {
                return fail("T is not a nonempty proper q-closed set of eigenvalues".into());
            }
            let ec = ctx.eigencode_distance(t)?;
            if ec != *claimed {
                return fail(format!("eigencode distance {ec}, witness claims {claimed}"));
            }
            witness.replay(&t_set, Some(frob))?
        }
        _ => return fail("not a spectral witness".into()),
    };
    if value != witness.value {
        return fail(format!("payload gives {value}, witness claims {}", witness.value));
    }
    Ok(value)
}
