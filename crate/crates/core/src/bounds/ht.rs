//! Hartmann-Tzeng bound: `s + 1` shifted copies of a consecutive run.

use super::{BoundWitness, DefiningSet, Method, Payload};
use crate::distance::Distance;
use crate::error::Result;
use crate::ntheory::{coprime_residues, gcd};

/// Options for [`ht_bound`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HtOptions {
    /// Allow any inner stride `n1` coprime to `m` instead of `n1 = 1`.
    pub general_n1: bool,
}

/// `{ e + z n1 + y n2 : 0 <= z <= delta - 2, 0 <= y <= s }`.
pub(crate) fn ht_indices(m: usize, e: usize, n1: usize, n2: usize, delta: usize, s: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity((delta - 1) * (s + 1));
    for y in 0..=s {
        for z in 0..delta.saturating_sub(1) {
            out.push((e + z * n1 + y * n2) % m);
        }
    }
    out
}

/// Forward run lengths: `runs[k]` is the number of consecutive members
/// `k, k + n1, k + 2 n1, ...` of `l`.
fn run_lengths(l: &DefiningSet, n1: usize) -> Vec<usize> {
    let m = l.m();
    let mut runs = vec![0; m];
    // Start from a non-member so every run is measured from its end.
    let start = (0..m).find(|&k| !l.contains(k)).expect("defining set is not full");
    let mut k = start;
    for _ in 0..m {
        k = (k + m - n1 % m) % m;
        runs[k] = if l.contains(k) { runs[(k + n1) % m] + 1 } else { 0 };
    }
    runs
}

/// Maximizes `delta + s` subject to `D ⊆ L` and `gcd(m, n2) < delta`.
pub fn ht_bound(l: &DefiningSet, options: HtOptions) -> Result<BoundWitness> {
    l.require_proper()?;
    let m = l.m();
    let inner: Vec<usize> = if options.general_n1 { coprime_residues(m) } else { vec![1 % m.max(2)] };
    let mut best: Option<(usize, usize, usize, usize, usize)> = None;
    let mut best_value = 0;
    for &n1 in &inner {
        let runs = run_lengths(l, n1);
        for n2 in 1..m.max(2) {
            let g = gcd(n2 as u64, m as u64) as usize;
            for e in 0..m {
                let mut min_run = usize::MAX;
                for s in 0..m {
                    min_run = min_run.min(runs[(e + s * n2) % m]);
                    let delta = min_run + 1;
                    if delta < 2 {
                        break;
                    }
                    if g < delta && delta + s > best_value {
                        best_value = delta + s;
                        best = Some((e, n1, n2, delta, s));
                    }
                }
            }
        }
    }
    let (e, n1, n2, delta, s) = best.expect("a proper nonempty set has a run");
    Ok(BoundWitness {
        method: Method::Ht,
        value: Distance::Finite(delta + s),
        payload: Payload::HartmannTzeng { e, n1, n2, delta, s },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bch_bound, StridePolicy};

    #[test]
    fn run_lengths_wrap() {
        let l = DefiningSet::new(6, &[4, 5, 0, 2]).unwrap();
        assert_eq!(run_lengths(&l, 1), vec![1, 0, 1, 0, 3, 2]);
    }

    #[test]
    fn single_run_matches_bch() {
        let l = DefiningSet::new(17, &[3, 4, 5, 6]).unwrap();
        let w = ht_bound(&l, HtOptions::default()).unwrap();
        assert_eq!(w.value, bch_bound(&l, StridePolicy::Unit).unwrap().value);
        assert_eq!(w.replay(&l, None).unwrap(), w.value);
    }

    #[test]
    fn shifted_runs_add() {
        // {1,2} and {5,6} in Z_15: delta = 3, n2 = 4, s = 1.
        let l = DefiningSet::new(15, &[1, 2, 5, 6]).unwrap();
        let w = ht_bound(&l, HtOptions::default()).unwrap();
        assert_eq!(w.value, Distance::Finite(4));
        w.replay(&l, None).unwrap();
    }
}
