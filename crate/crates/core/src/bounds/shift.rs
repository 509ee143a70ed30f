//! Shift bound: weights of polynomials are bounded below by the size of
//! sets that are independent with respect to their zero set.
//!
//! Independent sets with respect to `S` are generated by: the empty set;
//! `A ∪ {b}` for independent `A ⊆ S` and `b ∉ S`; and rotations `A + j`.
//! Since rotation preserves independence, the search runs over rotation
//! classes, level by level in the set size.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{bits_to_indices, closed_supersets, full_mask, rotate, BoundWitness, DefiningSet, Method, Payload};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::roots::Frobenius;

/// One rule application in the construction of an independent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "op", content = "arg")]
pub enum ShiftStep {
    /// Add `b ∉ S` to a set contained in `S`.
    Extend(usize),
    /// Add `j` to every index.
    Rotate(usize),
}

/// Limits for the independent-set search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCaps {
    /// Largest number of rotation classes kept on one level.
    pub max_states: usize,
    /// Largest number of q-closed supersets examined.
    pub max_supersets: usize,
}

impl Default for ShiftCaps {
    fn default() -> Self {
        ShiftCaps { max_states: 4_000_000, max_supersets: 1 << 16 }
    }
}

/// Least rotation of `x` and the rotation amount reaching it.
fn canonical(x: u64, m: usize) -> (u64, usize) {
    let mut best = (x, 0);
    for j in 1..m {
        let y = rotate(x, j, m);
        if y < best.0 {
            best = (y, j);
        }
    }
    best
}

/// `(parent class, rotation of the parent, added element, final rotation)`.
type Edge = (u64, usize, usize, usize);

struct Search {
    m: usize,
    s: u64,
    levels: Vec<HashMap<u64, Edge>>,
}

impl Search {
    fn new(s: &DefiningSet) -> Result<Search> {
        let mut root = HashMap::new();
        root.insert(0u64, (0, 0, 0, 0));
        Ok(Search { m: s.m(), s: s.bits()?, levels: vec![root] })
    }

    /// Builds the next level; `keep` filters candidate classes.
    fn step(&mut self, caps: &ShiftCaps, keep: impl Fn(u64) -> bool) -> Result<bool> {
        let m = self.m;
        let outside: Vec<usize> = (0..m).filter(|&b| self.s >> b & 1 == 0).collect();
        let mut next: HashMap<u64, Edge> = HashMap::new();
        let current = self.levels.last().expect("root level");
        let mut classes: Vec<u64> = current.keys().copied().collect();
        classes.sort_unstable();
        for x in classes {
            for j in 0..m {
                let y = rotate(x, j, m);
                if y & !self.s != 0 {
                    continue;
                }
                if x == 0 && j > 0 {
                    break;
                }
                for &b in &outside {
                    let (z, c) = canonical(y | 1 << b, m);
                    if keep(z) && !next.contains_key(&z) {
                        next.insert(z, (x, j, b, c));
                        if next.len() > caps.max_states {
                            return Err(Error::SearchLimit(format!(
                                "more than {} independent-set classes of size {}",
                                caps.max_states,
                                self.levels.len()
                            )));
                        }
                    }
                }
            }
        }
        let grew = !next.is_empty();
        if grew {
            self.levels.push(next);
        }
        Ok(grew)
    }

    fn trace(&self, mut z: u64) -> Vec<ShiftStep> {
        let mut steps = Vec::new();
        for level in (1..self.levels.len()).rev() {
            let (x, j, b, c) = self.levels[level][&z];
            if c != 0 {
                steps.push(ShiftStep::Rotate(c));
            }
            steps.push(ShiftStep::Extend(b));
            if j != 0 {
                steps.push(ShiftStep::Rotate(j));
            }
            z = x;
        }
        steps.reverse();
        steps
    }
}

/// Largest independent set with respect to `s`, stopping early once size
/// `cap` is reached. Returns the set and its construction.
pub fn max_independent(s: &DefiningSet, cap: Option<usize>, caps: ShiftCaps) -> Result<(Vec<usize>, Vec<ShiftStep>)> {
    let mut search = Search::new(s)?;
    while cap.is_none_or(|c| search.levels.len() <= c) && search.step(&caps, |_| true)? {}
    let top = search.levels.len() - 1;
    let z = *search.levels[top].keys().min().expect("levels are nonempty");
    Ok((bits_to_indices(z), search.trace(z)))
}

/// Whether `a` is independent with respect to `s`; on success returns a
/// construction ending in exactly `a`.
pub fn is_independent(s: &DefiningSet, a: &[usize], caps: ShiftCaps) -> Result<Option<Vec<ShiftStep>>> {
    let m = s.m();
    let target = a.iter().fold(0u64, |acc, &k| acc | 1 << (k % m));
    let size = target.count_ones() as usize;
    let within = |z: u64| (0..m).any(|j| rotate(z, j, m) & !target == 0);
    let mut search = Search::new(s)?;
    while search.levels.len() <= size {
        if !search.step(&caps, within)? {
            return Ok(None);
        }
    }
    let (canon, c) = canonical(target, m);
    if !search.levels[size].contains_key(&canon) {
        return Ok(None);
    }
    let mut steps = search.trace(canon);
    let back = (m - c) % m;
    if back != 0 {
        steps.push(ShiftStep::Rotate(back));
    }
    Ok(Some(steps))
}

/// Replays a construction against `s`, returning the resulting sorted set.
pub(crate) fn replay_trace(s: &DefiningSet, trace: &[ShiftStep]) -> std::result::Result<Vec<usize>, String> {
    let m = s.m();
    let sb = s.bits().map_err(|e| e.to_string())?;
    let mut cur = 0u64;
    for step in trace {
        match *step {
            ShiftStep::Extend(b) => {
                if b >= m || sb >> b & 1 == 1 {
                    return Err(format!("extension by {b}, which lies in S"));
                }
                if cur & !sb != 0 {
                    return Err("extension of a set not contained in S".into());
                }
                cur |= 1 << b;
            }
            ShiftStep::Rotate(j) => cur = rotate(cur, j, m),
        }
    }
    Ok(bits_to_indices(cur & full_mask(m)))
}

/// Minimum over q-closed `S` with `L ⊆ S ⊊ Omega` of the largest
/// independent set with respect to `S`.
pub fn shift_bound(l: &DefiningSet, frob: &Frobenius, caps: ShiftCaps) -> Result<BoundWitness> {
    l.require_proper()?;
    l.bits()?;
    let supersets = closed_supersets(l, frob, caps.max_supersets)?;
    // The distance never exceeds the Singleton bound |L| + 1.
    let mut cap = l.len() + 1;
    let mut best: Option<(DefiningSet, Vec<usize>, Vec<ShiftStep>)> = None;
    for s in supersets {
        let (a, trace) = max_independent(&s, Some(cap), caps)?;
        if best.is_none() || a.len() < cap {
            cap = a.len();
            best = Some((s, a, trace));
        }
    }
    let (s, independent, trace) = best.expect("L itself is a candidate");
    Ok(BoundWitness {
        method: Method::Shift,
        value: Distance::Finite(independent.len()),
        payload: Payload::Shift { superset: s.indices(), independent, trace, eigen_set: None, eigencode_distance: None },
    })
}
