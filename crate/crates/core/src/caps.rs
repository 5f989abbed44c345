//! Size limits for exhaustive computations.
//!
//! Exceeding a cap is always an explicit [`Error::CapExceeded`](crate::Error::CapExceeded),
//! never a silent truncation.

/// Default cap on the number of ring elements visited by an exhaustive check.
pub const DEFAULT_MAX_ENUM: u64 = 1 << 20;
/// Default cap on the number of codewords enumerated for distance computations.
pub const DEFAULT_MAX_CODEWORDS: u64 = 1 << 24;
/// Default cap on the ambient F_q-dimension `s·n` of a quotient ring.
pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_enum: u64,
    pub max_codewords: u64,
    pub max_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_enum: DEFAULT_MAX_ENUM,
            max_codewords: DEFAULT_MAX_CODEWORDS,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl Caps {
    /// Caps with every enumeration limit set to `max_enum`.
    pub fn with_max_enum(mut self, max_enum: u64) -> Self {
        self.max_enum = max_enum;
        self.max_codewords = max_enum;
        self
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }
}

/// `base^exp` if it fits in a `u64`.
pub fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
