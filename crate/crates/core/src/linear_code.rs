//! Binary linear codes with exact metrics computed by full enumeration.
//!
//! Everything theorem-shaped elsewhere in the crate is checked against this
//! module, so nothing here is approximate: minimum distance and weight
//! distribution come from walking all `2^k` codewords in Gray-code order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

/// Default cap on the dimension the enumerator will accept.
pub const DEFAULT_MAX_DIMENSION: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    generator: BitMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeMetrics {
    pub n: usize,
    pub k: usize,
    pub min_distance: usize,
    pub weight_distribution: Vec<u64>,
    pub hull_dimension: usize,
    pub self_dual: bool,
    pub doubly_even: bool,
}

impl BinaryCode {
    /// Wraps a generator matrix, rejecting dependent rows and `k = 0`.
    pub fn new(generator: BitMatrix) -> Result<Self> {
        let k = generator.rows();
        if k == 0 || generator.cols() < k {
            return Err(Error::precondition(
                "BinaryCode::new",
                format!("need 1 <= k <= n, got k={k}, n={}", generator.cols()),
            ));
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        Ok(BinaryCode { generator })
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// `[A^T | I_{n-k}]` for a generator of the form `[I_k | A]`.
    pub fn parity_check_standard(&self) -> Result<BitMatrix> {
        let (k, n) = (self.dimension(), self.length());
        if self.generator.columns(0, k) != BitMatrix::identity(k) {
            return Err(Error::NotStandardForm);
        }
        let a = self.generator.columns(k, n);
        Ok(a.transpose().hconcat(&BitMatrix::identity(n - k)))
    }

    /// `C = C^perp`: `n = 2k` and all rows pairwise orthogonal.
    pub fn is_self_dual(&self) -> bool {
        self.length() == 2 * self.dimension() && self.generator.gram().is_zero()
    }

    /// `dim(C ∩ C^perp) = k - rank(G G^T)`.
    pub fn hull_dimension(&self) -> usize {
        self.dimension() - self.generator.gram().rank()
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        Enumerator::default().weight_distribution(self)
    }

    pub fn min_distance(&self) -> Result<usize> {
        Enumerator::default().min_distance(self)
    }

    pub fn metrics(&self) -> Result<CodeMetrics> {
        Enumerator::default().metrics(self)
    }

    /// Self-dual with `d` equal to [`extremal_bound`].
    pub fn is_extremal(&self) -> Result<bool> {
        Enumerator::default().is_extremal(self)
    }
}

/// Upper bound on `d` for a binary self-dual code of length `n`.
pub fn extremal_bound(n: usize) -> Result<usize> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::precondition(
            "extremal_bound",
            format!("length must be even and positive, got {n}"),
        ));
    }
    let base = 4 * (n / 24);
    Ok(if n % 24 == 22 { base + 6 } else { base + 4 })
}

/// Exhaustive codeword enumeration with an explicit dimension budget.
///
/// The message space is split into `2^split_bits` shards by fixing the top
/// message bits; each shard is walked in Gray-code order and the per-shard
/// histograms are summed, so the result does not depend on scheduling.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    pub max_dimension: usize,
    pub split_bits: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_dimension: DEFAULT_MAX_DIMENSION,
            split_bits: 4,
        }
    }
}

impl Enumerator {
    pub fn with_max_dimension(max_dimension: usize) -> Self {
        Enumerator {
            max_dimension,
            ..Self::default()
        }
    }

    pub fn weight_distribution(&self, code: &BinaryCode) -> Result<Vec<u64>> {
        let k = code.dimension();
        if k > self.max_dimension {
            return Err(Error::EnumerationTooLarge {
                k,
                limit: self.max_dimension,
            });
        }
        let g = code.generator();
        let split = self.split_bits.min(k.saturating_sub(6));
        let low = k - split;
        let hist = (0..1u64 << split)
            .into_par_iter()
            .map(|hi| shard_histogram(g, low, hi))
            .reduce(
                || vec![0u64; g.cols() + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        Ok(hist)
    }

    pub fn min_distance(&self, code: &BinaryCode) -> Result<usize> {
        let dist = self.weight_distribution(code)?;
        Ok(min_from_distribution(&dist))
    }

    pub fn metrics(&self, code: &BinaryCode) -> Result<CodeMetrics> {
        let weight_distribution = self.weight_distribution(code)?;
        let doubly_even = weight_distribution
            .iter()
            .enumerate()
            .all(|(w, &c)| c == 0 || w % 4 == 0);
        Ok(CodeMetrics {
            n: code.length(),
            k: code.dimension(),
            min_distance: min_from_distribution(&weight_distribution),
            weight_distribution,
            hull_dimension: code.hull_dimension(),
            self_dual: code.is_self_dual(),
            doubly_even,
        })
    }

    pub fn is_extremal(&self, code: &BinaryCode) -> Result<bool> {
        if !code.is_self_dual() {
            return Err(Error::precondition(
                "is_extremal",
                "extremality is defined for self-dual codes only",
            ));
        }
        Ok(self.min_distance(code)? == extremal_bound(code.length())?)
    }
}

fn min_from_distribution(dist: &[u64]) -> usize {
    dist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c != 0)
        .map(|(w, _)| w)
        .expect("a code of dimension >= 1 has a nonzero codeword")
}

/// Weight histogram of the codewords whose messages have top bits `hi` and
/// arbitrary low `low` bits.
fn shard_histogram(g: &BitMatrix, low: usize, hi: u64) -> Vec<u64> {
    let stride = g.stride();
    let mut hist = vec![0u64; g.cols() + 1];
    let mut word = vec![0u64; stride];
    let mut bits = hi;
    while bits != 0 {
        let r = low + bits.trailing_zeros() as usize;
        for (w, x) in word.iter_mut().zip(g.row(r)) {
            *w ^= x;
        }
        bits &= bits - 1;
    }
    if stride == 1 {
        let rows: Vec<u64> = (0..low).map(|r| g.row(r)[0]).collect();
        let mut cw = word[0];
        hist[cw.count_ones() as usize] += 1;
        for step in 1..1u64 << low {
            cw ^= rows[step.trailing_zeros() as usize];
            hist[cw.count_ones() as usize] += 1;
        }
    } else {
        let weight = |w: &[u64]| w.iter().map(|x| x.count_ones() as usize).sum::<usize>();
        hist[weight(&word)] += 1;
        for step in 1..1u64 << low {
            let r = step.trailing_zeros() as usize;
            for (w, x) in word.iter_mut().zip(g.row(r)) {
                *w ^= x;
            }
            hist[weight(&word)] += 1;
        }
    }
    hist
}
