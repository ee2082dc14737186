use std::fmt;

use super::Signature;

/// A unit basis blade `e_{i1 i2 ... ik}` with ascending indices.
///
/// Bit `i` of the mask set means `e_{i+1}` is a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisBlade(pub usize);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    /// Blade from one-based vector indices, e.g. `[1, 2]` for `e12`.
    ///
    /// Returns the canonical blade and the sign picked up by sorting the
    /// factors; repeated indices are rejected (`None`) since their product
    /// depends on the metric.
    pub fn from_indices(indices: &[usize]) -> Option<(BasisBlade, f64)> {
        let mut mask = 0usize;
        let mut sign = 1.0;
        for &i in indices {
            if i == 0 || i > Signature::MAX_DIM {
                return None;
            }
            let bit = 1usize << (i - 1);
            if mask & bit != 0 {
                return None;
            }
            // Moving e_i left past every already placed larger index.
            if (mask & !(bit - 1) & !bit).count_ones() % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        Some((BasisBlade(mask), sign))
    }

    pub fn mask(self) -> usize {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// One-based indices of the factors, ascending.
    pub fn indices(self) -> Vec<usize> {
        (0..usize::BITS as usize)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    /// Sign of `self * other` relative to the canonical blade `self ^ other`.
    pub fn product_sign(self, other: BasisBlade, sig: Signature) -> f64 {
        let mut a = self.0 >> 1;
        let mut swaps = 0;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        let sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
        sign * sig.metric_sign(self.0 & other.0)
    }

    /// Sign picked up under reversion: `(-1)^(k(k-1)/2)`.
    pub fn reverse_sign(self) -> f64 {
        match self.grade() % 4 {
            0 | 1 => 1.0,
            _ => -1.0,
        }
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}
