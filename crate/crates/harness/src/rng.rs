//! Pinned xorshift64* generator and the integer-matrix draw built on it.

use revpaste::{QMatrix, Rational};
use thiserror::Error;

const MULTIPLIER: u64 = 2_685_821_657_736_338_717;
const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
/// Used when a derived substream state would be zero.
const FALLBACK_STATE: u64 = 0x853C_49E6_748F_EA9B;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RngError {
    #[error("xorshift64* state must be nonzero")]
    ZeroState,
    #[error("invalid draw: {0}")]
    InvalidDimension(String),
}

/// Nonzero xorshift64* state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngState(u64);

impl RngState {
    pub fn new(seed: u64) -> Result<Self, RngError> {
        if seed == 0 {
            return Err(RngError::ZeroState);
        }
        Ok(RngState(seed))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Advances in place and returns the output.
    pub fn next_u64(&mut self) -> u64 {
        let (s, out) = rng_next(*self);
        *self = s;
        out
    }

    /// Independent state for property `index` of a suite seeded with `seed`.
    pub fn substream(seed: u64, index: usize) -> Self {
        let mixed = splitmix64(seed.wrapping_add((index as u64 + 1).wrapping_mul(GOLDEN)));
        RngState(if mixed == 0 { FALLBACK_STATE } else { mixed })
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One xorshift64* step: `x ^= x>>12; x ^= x<<25; x ^= x>>27`, output
/// `x·2685821657736338717 mod 2⁶⁴`.
pub fn rng_next(s: RngState) -> (RngState, u64) {
    let mut x = s.0;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    (RngState(x), x.wrapping_mul(MULTIPLIER))
}

/// Integer in `[-bound, bound]` from one output: `out mod (2·bound+1) − bound`.
pub fn reduce(out: u64, bound: u64) -> i64 {
    (out % (2 * bound + 1)) as i64 - bound as i64
}

/// `n×m` matrix of integers in `[-bound, bound]`, one output per entry,
/// consumed row-major.
pub fn random_matrix(s: RngState, n: usize, m: usize, bound: u64) -> Result<(RngState, QMatrix), RngError> {
    if n == 0 || m == 0 {
        return Err(RngError::InvalidDimension(format!("{n}x{m} matrix")));
    }
    if bound == 0 {
        return Err(RngError::InvalidDimension("entry bound must be at least 1".into()));
    }
    let mut state = s;
    let data = (0..n * m)
        .map(|_| Rational::from_integer(reduce(state.next_u64(), bound).into()))
        .collect();
    let a = QMatrix::new(n, m, data).map_err(|e| RngError::InvalidDimension(e.to_string()))?;
    Ok((state, a))
}
