use std::fmt;

use serde::{Serialize, Serializer};

pub const DEFAULT_CUTOFF: usize = 6;

/// Reads `RELHOM_CUTOFF`, falling back to [`DEFAULT_CUTOFF`] when unset or unparsable.
pub fn cutoff_from_env() -> usize {
    std::env::var("RELHOM_CUTOFF")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CUTOFF)
}

/// A homological dimension known exactly up to a cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Finite(usize),
    AboveCutoff,
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::AboveCutoff => None,
        }
    }
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::AboveCutoff => f.write_str("above_cutoff"),
        }
    }
}

/// A nonnegative integer or the string `"above_cutoff"`.
impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(n) => s.serialize_u64(*n as u64),
            Dim::AboveCutoff => s.serialize_str("above_cutoff"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_as_integer_or_sentinel() {
        assert_eq!(serde_json::to_string(&Dim::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Dim::AboveCutoff).unwrap(), "\"above_cutoff\"");
    }

    #[test]
    fn finite_orders_below_sentinel() {
        assert!(Dim::Finite(100) < Dim::AboveCutoff);
        assert_eq!(Dim::Finite(2).max(Dim::Finite(0)), Dim::Finite(2));
    }
}
