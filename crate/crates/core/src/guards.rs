use serde::{Deserialize, Serialize};

/// Name of the environment variable that raises every enumeration guard.
pub const GUARD_ENV: &str = "QWEYL_MAX_GUARD";

/// Size limits for the exponential enumerations and the rewriting engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Maximum word length accepted by the rewriting engine.
    pub word_len: usize,
    /// Largest `n` for which `S_n` is enumerated.
    pub inversion_n: usize,
    /// Largest `a` for the subset and chain sums over `[1, a]`.
    pub subset_a: usize,
    /// Largest total degree `sum(a_i + b_i)` for the brute-force map count.
    pub mk_total: usize,
    /// Largest tensor rank `n` for symmetric-power products.
    pub sym_n: usize,
    /// Largest number of factors `m` for symmetric-power products.
    pub sym_m: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            word_len: 64,
            inversion_n: 9,
            subset_a: 20,
            mk_total: 14,
            sym_n: 4,
            sym_m: 4,
        }
    }
}

impl Guards {
    /// Raises every limit to at least `ceiling`; limits already above it are kept.
    pub fn raised_to(self, ceiling: usize) -> Self {
        Guards {
            word_len: self.word_len.max(ceiling),
            inversion_n: self.inversion_n.max(ceiling),
            subset_a: self.subset_a.max(ceiling),
            mk_total: self.mk_total.max(ceiling),
            sym_n: self.sym_n.max(ceiling),
            sym_m: self.sym_m.max(ceiling),
        }
    }

    /// Default guards, raised by `QWEYL_MAX_GUARD` when it holds a positive integer.
    pub fn from_env() -> Self {
        let base = Guards::default();
        match std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(ceiling) if ceiling > 0 => base.raised_to(ceiling),
            _ => base,
        }
    }
}
