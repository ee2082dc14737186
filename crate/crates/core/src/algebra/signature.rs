use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Metric signature: `p` basis vectors square to +1, the next `q` to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Euclidean 3D space, the Pauli algebra.
    pub const CL30: Signature = Signature { p: 3, q: 0 };
    /// Minkowski space with `e4^2 = -1`.
    pub const CL31: Signature = Signature { p: 3, q: 1 };

    pub const MAX_DIM: usize = 8;

    pub fn new(p: u8, q: u8) -> Result<Self> {
        let n = p as usize + q as usize;
        if n == 0 || n > Self::MAX_DIM {
            return Err(Error::BadSignature { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn dim(self) -> usize {
        self.p() + self.q()
    }

    /// Number of basis blades, `2^(p+q)`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Square of the basis vector with zero-based index `bit`.
    pub fn square(self, bit: usize) -> f64 {
        if bit < self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Product of the metric squares of every vector in `mask`.
    pub(crate) fn metric_sign(self, mask: usize) -> f64 {
        // Only the top q bits square to -1.
        let negative = (mask >> self.p()).count_ones();
        if negative.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl TryFrom<[u8; 2]> for Signature {
    type Error = Error;

    fn try_from([p, q]: [u8; 2]) -> Result<Self> {
        Signature::new(p, q)
    }
}

impl From<Signature> for [u8; 2] {
    fn from(sig: Signature) -> Self {
        [sig.p, sig.q]
    }
}
