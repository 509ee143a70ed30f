//! Defining-set lower bounds on the minimum distance of constacyclic codes
//! and their spectral lifts to quasi-twisted codes.
//!
//! Roots are addressed by their index `k` in `Omega = { alpha xi^k }`, so
//! multiplying a root set by `xi^j` adds `j` to every index and the product
//! set `MN` (normalized by `1/alpha`) is the sumset of indices.

mod bch;
mod ht;
mod roos;
mod shift;
mod spectral;

use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::ntheory::gcd;
use crate::roots::Frobenius;

pub use bch::{bch_bound, StridePolicy};
pub use ht::{ht_bound, HtOptions};
pub use roos::{roos_bound, NSource, RoosCaps};
pub use shift::{is_independent, max_independent, shift_bound, ShiftCaps, ShiftStep};
pub use spectral::{
    replay_spectral, spectral_bound, spectral_roos, spectral_shift, DpSource, SpectralOptions,
};

/// A subset `L` of `Z_m`, the indices of roots in `Omega`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    members: Vec<bool>,
}

impl DefiningSet {
    pub fn new(m: usize, indices: &[usize]) -> Result<DefiningSet> {
        let mut members = vec![false; m];
        for &k in indices {
            if k >= m {
                return Err(Error::InvalidDefiningSet(format!("index {k} out of range for m = {m}")));
            }
            members[k] = true;
        }
        Ok(DefiningSet { members })
    }

    pub fn from_mask(members: Vec<bool>) -> DefiningSet {
        DefiningSet { members }
    }

    pub fn empty(m: usize) -> DefiningSet {
        DefiningSet { members: vec![false; m] }
    }

    pub fn full(m: usize) -> DefiningSet {
        DefiningSet { members: vec![true; m] }
    }

    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members[k % self.members.len()]
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.m()).filter(|&k| self.members[k]).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&b| b)
    }

    pub fn is_subset(&self, other: &DefiningSet) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    pub fn is_closed(&self, frob: &Frobenius) -> bool {
        frob.is_closed(&self.members)
    }

    pub fn closure(&self, frob: &Frobenius) -> DefiningSet {
        DefiningSet { members: frob.closure(&self.members) }
    }

    /// Bit `k` set iff `k` is a member; requires `m <= 64`.
    pub fn bits(&self) -> Result<u64> {
        if self.m() > 64 {
            return Err(Error::SearchLimit(format!("m = {} exceeds the 64-bit set representation", self.m())));
        }
        Ok(self.members.iter().enumerate().filter(|(_, &b)| b).fold(0, |acc, (k, _)| acc | 1 << k))
    }

    pub fn from_bits(m: usize, bits: u64) -> DefiningSet {
        DefiningSet { members: (0..m).map(|k| bits >> k & 1 == 1).collect() }
    }

    /// Errors unless the set is a proper nonempty subset of `Z_m`.
    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::InvalidDefiningSet("defining set is empty".into()))
        } else if self.is_full() {
            Err(Error::InvalidDefiningSet("defining set is all of Omega".into()))
        } else {
            Ok(())
        }
    }
}

/// The progression `{ e + z n mod m : 0 <= z <= delta - 2 }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConsecutiveSet {
    pub e: usize,
    pub n: usize,
    pub delta: usize,
}

impl ConsecutiveSet {
    pub fn len(&self) -> usize {
        self.delta - 1
    }

    pub fn is_empty(&self) -> bool {
        self.delta <= 1
    }

    pub fn indices(&self, m: usize) -> Vec<usize> {
        (0..self.len()).map(|z| (self.e + z * self.n) % m).collect()
    }

    /// Stride coprime to `m`, `delta >= 2` and `delta - 1 <= m`.
    pub fn is_valid(&self, m: usize) -> bool {
        self.delta >= 2 && self.len() <= m && gcd(self.n as u64, m as u64) == 1
    }
}

/// Method tag of a [`BoundWitness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bch,
    Ht,
    Roos,
    Shift,
    Spectral,
}

/// The distance bound on the code with defining set `N` used inside a Roos
/// certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum NCertificate {
    /// `N` consecutive, `d_N = |N| + 1`.
    Consecutive { set: ConsecutiveSet },
    /// `N` of Hartmann-Tzeng shape, `d_N = delta + s`.
    HartmannTzeng { e: usize, n1: usize, n2: usize, delta: usize, s: usize },
}

impl NCertificate {
    pub fn indices(&self, m: usize) -> Vec<usize> {
        match *self {
            NCertificate::Consecutive { set } => set.indices(m),
            NCertificate::HartmannTzeng { e, n1, n2, delta, s } => ht::ht_indices(m, e, n1, n2, delta, s),
        }
    }

    pub fn distance(&self) -> usize {
        match *self {
            NCertificate::Consecutive { set } => set.delta,
            NCertificate::HartmannTzeng { delta, s, .. } => delta + s,
        }
    }

    pub fn is_valid(&self, m: usize) -> bool {
        match *self {
            NCertificate::Consecutive { set } => set.is_valid(m),
            NCertificate::HartmannTzeng { n1, n2, delta, .. } => {
                delta >= 2
                    && gcd(n1 as u64, m as u64) == 1
                    && (gcd(n2 as u64, m as u64) as usize) < delta
            }
        }
    }
}

/// Evidence for a bound value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Payload {
    Consecutive {
        set: ConsecutiveSet,
    },
    HartmannTzeng {
        e: usize,
        n1: usize,
        n2: usize,
        delta: usize,
        s: usize,
    },
    Roos {
        n: NCertificate,
        m_set: Vec<usize>,
        m_prime: ConsecutiveSet,
        /// Eigencode distance of `MN` for the spectral variant.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eigencode_distance: Option<Distance>,
    },
    Shift {
        /// The q-closed zero set `S` the independent set is built against.
        superset: Vec<usize>,
        independent: Vec<usize>,
        trace: Vec<ShiftStep>,
        /// The defining set `T` for the spectral variant.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eigen_set: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eigencode_distance: Option<Distance>,
    },
    Spectral {
        p: Vec<usize>,
        closure: Vec<usize>,
        source: DpSource,
        d_p: Distance,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d_p_witness: Option<Box<BoundWitness>>,
        eigencode_distance: Distance,
    },
}

/// A bound value together with the data needed to re-derive it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundWitness {
    pub method: Method,
    pub value: Distance,
    pub payload: Payload,
}

impl BoundWitness {
    /// Re-derives the value of a defining-set bound from its payload,
    /// checking every side condition against `l`.
    ///
    /// Spectral witnesses need the code and are replayed by
    /// [`replay_spectral`]. `frob` is required for shift witnesses.
    pub fn replay(&self, l: &DefiningSet, frob: Option<&Frobenius>) -> Result<Distance> {
        let m = l.m();
        let err = |msg: &str| Error::InvalidDefiningSet(format!("witness replay: {msg}"));
        let value = match &self.payload {
            Payload::Consecutive { set } => {
                if !set.is_valid(m) || !set.indices(m).iter().all(|&k| l.contains(k)) {
                    return Err(err("consecutive set not contained in the defining set"));
                }
                Distance::Finite(set.delta)
            }
            &Payload::HartmannTzeng { e, n1, n2, delta, s } => {
                let cert = NCertificate::HartmannTzeng { e, n1, n2, delta, s };
                if !cert.is_valid(m) || !cert.indices(m).iter().all(|&k| l.contains(k)) {
                    return Err(err("Hartmann-Tzeng set invalid or not contained in the defining set"));
                }
                Distance::Finite(delta + s)
            }
            Payload::Roos { n, m_set, m_prime, eigencode_distance } => {
                let value = roos::replay(l, n, m_set, m_prime).map_err(|e| err(&e))?;
                let v = Distance::Finite(value);
                match eigencode_distance {
                    Some(d) => v.min(*d),
                    None => v,
                }
            }
            Payload::Shift { superset, independent, trace, eigencode_distance, .. } => {
                let s = DefiningSet::new(m, superset)?;
                if !l.is_subset(&s) || s.is_full() {
                    return Err(err("zero set must contain the defining set and differ from Omega"));
                }
                if let Some(frob) = frob {
                    if !s.is_closed(frob) {
                        return Err(err("zero set is not closed under the Frobenius map"));
                    }
                }
                let built = shift::replay_trace(&s, trace).map_err(|e| err(&e))?;
                let mut want = independent.clone();
                want.sort_unstable();
                if built != want {
                    return Err(err("trace does not produce the reported independent set"));
                }
                let v = Distance::Finite(built.len());
                match eigencode_distance {
                    Some(d) => v.min(*d),
                    None => v,
                }
            }
            Payload::Spectral { .. } => return Err(err("spectral witnesses are replayed against the code")),
        };
        if value != self.value {
            return Err(err(&format!("payload gives {value}, witness claims {}", self.value)));
        }
        Ok(value)
    }
}

/// Rotation of an `m`-bit set by `j` positions (multiplication by `xi^j`).
#[inline]
pub(crate) fn rotate(x: u64, j: usize, m: usize) -> u64 {
    let mask = full_mask(m);
    let j = j % m;
    if j == 0 {
        x
    } else {
        ((x << j) | (x >> (m - j))) & mask
    }
}

#[inline]
pub(crate) fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub(crate) fn bits_to_indices(x: u64) -> Vec<usize> {
    (0..64).filter(|&k| x >> k & 1 == 1).collect()
}

/// Every union of orbits `S` with `l ⊆ S ⊊ Omega`, in increasing order of
/// the bitmask of added orbits.
pub(crate) fn closed_supersets(l: &DefiningSet, frob: &Frobenius, limit: usize) -> Result<Vec<DefiningSet>> {
    if !l.is_closed(frob) {
        return Err(Error::NotClosed);
    }
    let outside: Vec<Vec<usize>> = frob.orbits().into_iter().filter(|o| !l.contains(o[0])).collect();
    if outside.len() >= usize::BITS as usize - 1 || (1usize << outside.len()) > limit {
        return Err(Error::SearchLimit(format!("{} orbits outside the defining set", outside.len())));
    }
    let total = 1usize << outside.len();
    let mut out = Vec::with_capacity(total.saturating_sub(1));
    for pick in 0..total - 1 {
        let mut s = l.clone();
        for (i, orbit) in outside.iter().enumerate() {
            if pick >> i & 1 == 1 {
                for &k in orbit {
                    s.members[k] = true;
                }
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Every nonempty union of orbits contained in `l`.
pub fn closed_subsets(l: &DefiningSet, frob: &Frobenius, limit: usize) -> Result<Vec<DefiningSet>> {
    if !l.is_closed(frob) {
        return Err(Error::NotClosed);
    }
    let inside: Vec<Vec<usize>> = frob.orbits().into_iter().filter(|o| l.contains(o[0])).collect();
    if inside.len() >= usize::BITS as usize - 1 || (1usize << inside.len()) > limit {
        return Err(Error::SearchLimit(format!("{} orbits inside the eigenvalue set", inside.len())));
    }
    Ok((1..1usize << inside.len())
        .map(|pick| {
            let mut t = DefiningSet::empty(l.m());
            for (i, orbit) in inside.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    for &k in orbit {
                        t.members[k] = true;
                    }
                }
            }
            t
        })
        .collect())
}
