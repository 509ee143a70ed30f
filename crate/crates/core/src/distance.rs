//! Minimum distances with an explicit infinity for the zero code.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A minimum distance: a positive integer, or infinity for `{0}`.
///
/// Ordered so that every finite value is below `Infinite`, making
/// `min(d, Infinite) = d` exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }
}

impl From<usize> for Distance {
    fn from(d: usize) -> Self {
        Distance::Finite(d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_neutral_for_min() {
        for d in [1usize, 7, usize::MAX] {
            assert_eq!(Distance::Finite(d).min(Distance::Infinite), Distance::Finite(d));
            assert!(Distance::Finite(d) < Distance::Infinite);
        }
        assert_eq!(Distance::Infinite.min(Distance::Infinite), Distance::Infinite);
    }

    #[test]
    fn serde_round_trip() {
        for d in [Distance::Finite(3), Distance::Infinite] {
            let s = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Distance>(&s).unwrap(), d);
        }
        assert_eq!(serde_json::to_string(&Distance::Infinite).unwrap(), r#"{"kind":"infinite"}"#);
    }
}
