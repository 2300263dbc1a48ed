//! Exact ratios of set cardinalities.
//!
//! Expansion values are quotients of two small set sizes. Carrying them as
//! raw integer pairs keeps ordering comparisons and tie-breaks exact; they
//! are converted to floating point only at serialization boundaries.

use std::cmp::Ordering;
use std::fmt;

/// A non-negative rational stored as an unreduced numerator/denominator pair.
///
/// The denominator must be nonzero for comparisons to be meaningful.
/// Equality and ordering compare the represented values (`1/2 == 2/4`),
/// not the raw pairs.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    pub numer: usize,
    pub denom: usize,
}

impl Ratio {
    pub fn new(numer: usize, denom: usize) -> Self {
        Ratio { numer, denom }
    }

    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    pub fn is_one(self) -> bool {
        self.numer == self.denom
    }

    pub fn is_zero(self) -> bool {
        self.numer == 0
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        (self.numer as u128) * (other.denom as u128) == (other.numer as u128) * (self.denom as u128)
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.numer as u128) * (other.denom as u128);
        let rhs = (other.numer as u128) * (self.denom as u128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_cross_multiplied() {
        assert!(Ratio::new(1, 3) < Ratio::new(1, 2));
        assert!(Ratio::new(9, 1) > Ratio::new(2, 1));
        assert_eq!(Ratio::new(1, 2), Ratio::new(2, 4));
        assert!(Ratio::new(0, 5) < Ratio::new(1, 100));
    }

    #[test]
    fn conversion_and_flags() {
        assert_eq!(Ratio::new(3, 4).to_f64(), 0.75);
        assert!(Ratio::new(7, 7).is_one());
        assert!(Ratio::new(0, 9).is_zero());
        assert!(!Ratio::new(6, 7).is_one());
    }
}
