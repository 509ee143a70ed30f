//! Roos bound: `d >= |M| + d_N - 1` when `MN ⊆ L` and `M` sits inside a
//! consecutive set `M'` with `|M'| <= |M| + d_N - 2`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{
    bits_to_indices, full_mask, ht::ht_indices, rotate, BoundWitness, ConsecutiveSet, DefiningSet, Method,
    NCertificate, Payload,
};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::ntheory::{coprime_residues, gcd};

/// Lower bound used for the code with defining set `N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NSource {
    /// `N` consecutive with `d_N = |N| + 1`.
    #[default]
    Bch,
    /// `N` of Hartmann-Tzeng shape with `d_N = delta + s` (includes `Bch`).
    Ht,
}

/// Search limits for [`roos_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoosCaps {
    /// Largest `|M'|` considered.
    pub max_m_prime: usize,
    pub n_source: NSource,
}

impl Default for RoosCaps {
    fn default() -> Self {
        RoosCaps { max_m_prime: 20, n_source: NSource::Bch }
    }
}

/// Strides up to sign: `n` and `m - n` describe the same progressions.
fn half_strides(m: usize) -> Vec<usize> {
    coprime_residues(m).into_iter().filter(|&n| 2 * n <= m || n == 1).collect()
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |acc, &k| acc | 1 << k)
}

/// Candidate sets `N` anchored at 0, each with a translate inside `l`,
/// ordered by size, distinct masks only (best `d_N` kept).
fn n_candidates(l: u64, m: usize, source: NSource) -> Vec<(u64, NCertificate)> {
    let fits = |mask: u64| (0..m).any(|v| rotate(mask, v, m) & !l == 0);
    let strides = half_strides(m);
    let mut out: Vec<(u64, NCertificate)> = Vec::new();
    let mut seen = HashSet::new();
    let size = l.count_ones() as usize;
    match source {
        NSource::Bch => {
            for a in 1..=size {
                for &n in &strides {
                    let set = ConsecutiveSet { e: 0, n, delta: a + 1 };
                    let mask = mask_of(&set.indices(m));
                    if fits(mask) && seen.insert(mask) {
                        out.push((mask, NCertificate::Consecutive { set }));
                    }
                }
            }
        }
        NSource::Ht => {
            let mut all: Vec<(u64, NCertificate)> = Vec::new();
            for &n1 in &strides {
                for delta in 2..=size + 1 {
                    for n2 in 1..m.max(2) {
                        if gcd(n2 as u64, m as u64) as usize >= delta {
                            continue;
                        }
                        for s in 0..m {
                            let mask = mask_of(&ht_indices(m, 0, n1, n2, delta, s));
                            if !fits(mask) {
                                break;
                            }
                            all.push((mask, NCertificate::HartmannTzeng { e: 0, n1, n2, delta, s }));
                        }
                    }
                }
            }
            // Keep the largest d_N per mask, first found on ties.
            let mut best: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
            for (i, (mask, cert)) in all.iter().enumerate() {
                let e = best.entry(*mask).or_insert(i);
                if all[*e].1.distance() < cert.distance() {
                    *e = i;
                }
            }
            let mut keep: Vec<usize> = best.into_values().collect();
            keep.sort_unstable();
            out = keep.into_iter().map(|i| all[i].clone()).collect();
            out.sort_by_key(|(mask, _)| mask.count_ones());
        }
    }
    out
}

/// Core search. `score` maps `(MN mask, Roos value)` to the candidate's
/// bound; it is only consulted when the Roos value beats the incumbent.
pub(crate) fn roos_search<F>(l: &DefiningSet, caps: RoosCaps, mut score: F) -> Result<Option<BoundWitness>>
where
    F: FnMut(u64, usize) -> Result<Distance>,
{
    l.require_proper()?;
    let m = l.m();
    let lb = l.bits()?;
    let strides = half_strides(m);
    let cap = caps.max_m_prime.min(m);
    let mut best: Option<(Distance, NCertificate, Vec<usize>, ConsecutiveSet)> = None;
    let beats = |value: usize, best: &Option<(Distance, NCertificate, Vec<usize>, ConsecutiveSet)>| {
        best.as_ref().is_none_or(|b| Distance::Finite(value) > b.0)
    };
    for (nmask, cert) in n_candidates(lb, m, caps.n_source) {
        let d_n = cert.distance();
        let translates: Vec<bool> = (0..m).map(|v| rotate(nmask, v, m) & !lb == 0).collect();
        let available = translates.iter().filter(|&&t| t).count();
        if !beats(available + d_n - 1, &best) {
            continue;
        }
        for &n in &strides {
            for e in 0..m {
                let mut count = 0;
                let mut mn = 0u64;
                let mut members = Vec::new();
                for b in 1..=cap {
                    let v = (e + (b - 1) * n) % m;
                    if translates[v] {
                        count += 1;
                        mn |= rotate(nmask, v, m);
                        members.push(v);
                    }
                    if b - count > d_n - 2 {
                        break;
                    }
                    if !translates[v] {
                        continue;
                    }
                    let value = count + d_n - 1;
                    if !beats(value, &best) {
                        continue;
                    }
                    let s = score(mn & full_mask(m), value)?;
                    if best.as_ref().is_none_or(|bst| s > bst.0) {
                        let mut m_set = members.clone();
                        m_set.sort_unstable();
                        best = Some((s, cert.clone(), m_set, ConsecutiveSet { e, n, delta: b + 1 }));
                    }
                }
            }
        }
    }
    Ok(best.map(|(value, n, m_set, m_prime)| BoundWitness {
        method: Method::Roos,
        value,
        payload: Payload::Roos { n, m_set, m_prime, eigencode_distance: None },
    }))
}

/// The best Roos certificate inside `l`.
pub fn roos_bound(l: &DefiningSet, caps: RoosCaps) -> Result<BoundWitness> {
    roos_search(l, caps, |_, v| Ok(Distance::Finite(v)))?
        .ok_or_else(|| Error::InvalidDefiningSet("no Roos certificate".into()))
}

/// Checks a Roos certificate against `l` and returns `|M| + d_N - 1`.
pub(crate) fn replay(
    l: &DefiningSet,
    n: &NCertificate,
    m_set: &[usize],
    m_prime: &ConsecutiveSet,
) -> std::result::Result<usize, String> {
    let m = l.m();
    if !n.is_valid(m) {
        return Err("N certificate violates its stride conditions".into());
    }
    if !m_prime.is_valid(m) {
        return Err("M' is not a consecutive set".into());
    }
    let m_prime_set = m_prime.indices(m);
    let distinct: HashSet<usize> = m_prime_set.iter().copied().collect();
    if distinct.len() != m_prime_set.len() {
        return Err("M' has repeated elements".into());
    }
    let mm: HashSet<usize> = m_set.iter().copied().collect();
    if mm.is_empty() || mm.len() != m_set.len() || !mm.is_subset(&distinct) {
        return Err("M must be a nonempty subset of M'".into());
    }
    let d_n = n.distance();
    if m_prime_set.len() > mm.len() + d_n - 2 {
        return Err(format!("|M'| = {} exceeds |M| + d_N - 2 = {}", m_prime_set.len(), mm.len() + d_n - 2));
    }
    let n_idx = n.indices(m);
    for &u in &mm {
        for &w in &n_idx {
            if !l.contains(u + w) {
                return Err(format!("MN element {} is outside the defining set", (u + w) % m));
            }
        }
    }
    Ok(mm.len() + d_n - 1)
}

/// The product set `MN` as sorted indices.
pub(crate) fn product_set(m: usize, m_set: &[usize], n: &NCertificate) -> Vec<usize> {
    let nmask = mask_of(&n.indices(m));
    bits_to_indices(m_set.iter().fold(0, |acc, &v| acc | rotate(nmask, v, m)))
}
