//! BCH-type bound: the longest consecutive run inside the defining set.

use serde::{Deserialize, Serialize};

use super::{BoundWitness, ConsecutiveSet, DefiningSet, Method, Payload};
use crate::distance::Distance;
use crate::error::Result;
use crate::ntheory::coprime_residues;

/// Which strides a consecutive set may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StridePolicy {
    /// Stride 1 only.
    #[default]
    Unit,
    /// Any stride coprime to `m`.
    Coprime,
}

/// Longest circular run `e, e+n, e+2n, ...` inside `l`; returns `(e, len)`
/// with the smallest `e` among the longest runs. `l` must not be full.
pub(crate) fn longest_run(l: &DefiningSet, n: usize) -> (usize, usize) {
    let m = l.m();
    let mut best = (0, 0);
    for e in 0..m {
        // Only runs that cannot be extended backwards.
        if l.contains(e) && !l.contains(e + m - n % m) {
            let mut len = 0;
            while len < m && l.contains(e + len * n) {
                len += 1;
            }
            if len > best.1 || (len == best.1 && e < best.0) {
                best = (e, len);
            }
        }
    }
    best
}

/// `delta = |E| + 1` for the largest consecutive set `E ⊆ L`.
pub fn bch_bound(l: &DefiningSet, policy: StridePolicy) -> Result<BoundWitness> {
    l.require_proper()?;
    let m = l.m();
    let strides = match policy {
        StridePolicy::Unit => vec![1 % m.max(2)],
        StridePolicy::Coprime => coprime_residues(m),
    };
    let mut best: Option<ConsecutiveSet> = None;
    for n in strides {
        let (e, len) = longest_run(l, n);
        if best.is_none_or(|b| len + 1 > b.delta) {
            best = Some(ConsecutiveSet { e, n, delta: len + 1 });
        }
    }
    let set = best.expect("at least one stride");
    Ok(BoundWitness { method: Method::Bch, value: Distance::Finite(set.delta), payload: Payload::Consecutive { set } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_wrap_around() {
        let l = DefiningSet::new(10, &[8, 9, 0, 1, 4]).unwrap();
        assert_eq!(longest_run(&l, 1), (8, 4));
        let w = bch_bound(&l, StridePolicy::Unit).unwrap();
        assert_eq!(w.value, Distance::Finite(5));
        assert_eq!(w.replay(&l, None).unwrap(), Distance::Finite(5));
    }

    #[test]
    fn coprime_strides_can_exceed_unit() {
        let l = DefiningSet::new(13, &[0, 2, 4, 5, 6, 10, 12]).unwrap();
        assert_eq!(bch_bound(&l, StridePolicy::Unit).unwrap().value, Distance::Finite(4));
        let w = bch_bound(&l, StridePolicy::Coprime).unwrap();
        assert_eq!(w.value, Distance::Finite(5));
        w.replay(&l, None).unwrap();
    }

    #[test]
    fn degenerate_sets_rejected() {
        assert!(bch_bound(&DefiningSet::empty(7), StridePolicy::Unit).is_err());
        assert!(bch_bound(&DefiningSet::full(7), StridePolicy::Unit).is_err());
        let one = DefiningSet::new(1, &[]).unwrap();
        assert!(bch_bound(&one, StridePolicy::Coprime).is_err());
    }
}
