//! Exhaustive enumeration of `𝔅ₙ` together with a perfect ranking.
//!
//! Diagrams are listed by the recursive rule "match the smallest unmatched
//! slot with each larger unmatched slot, in increasing order". The choice made
//! at step `t` is a digit in `0..2n-1-2t`, and the mixed-radix number formed
//! by these digits (step 0 most significant) is the diagram's rank, so
//! `enumerate_all(n).nth(r) == Some(BrauerDiagram::unrank(n, r))`.

use core::ops::Range;

use super::{check_rank, BrauerDiagram};
use crate::combinatorics::double_factorial_odd;
use crate::{Error, Result, MAX_RANK};

/// Largest rank [`enumerate_all`] accepts without an explicit limit.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// Iterator over a contiguous range of ranks of `𝔅ₙ`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    ranks: Range<u64>,
}

impl Enumeration {
    /// Enumerates the diagrams whose ranks fall in `ranks`. Used to split
    /// the stream into chunks for concurrent consumers.
    pub fn with_ranks(n: usize, ranks: Range<u64>) -> Result<Self> {
        check_rank(n)?;
        let total = double_factorial_odd(n);
        let ranks = ranks.start.min(total)..ranks.end.min(total);
        Ok(Enumeration { n, ranks })
    }
}

impl Iterator for Enumeration {
    type Item = BrauerDiagram;

    fn next(&mut self) -> Option<BrauerDiagram> {
        let r = self.ranks.next()?;
        Some(BrauerDiagram::unrank_unchecked(self.n, r))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.ranks.size_hint()
    }

    fn nth(&mut self, k: usize) -> Option<BrauerDiagram> {
        let r = self.ranks.nth(k)?;
        Some(BrauerDiagram::unrank_unchecked(self.n, r))
    }
}

impl ExactSizeIterator for Enumeration {}

impl DoubleEndedIterator for Enumeration {
    fn next_back(&mut self) -> Option<BrauerDiagram> {
        let r = self.ranks.next_back()?;
        Some(BrauerDiagram::unrank_unchecked(self.n, r))
    }
}

/// All `(2n-1)!!` diagrams of rank `n`, each exactly once.
pub fn enumerate_all(n: usize) -> Result<Enumeration> {
    enumerate_all_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_all_with_limit(n: usize, limit: usize) -> Result<Enumeration> {
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Enumeration::with_ranks(n, 0..u64::MAX)
}

impl BrauerDiagram {
    /// Position of this diagram in the enumeration order of its rank.
    pub fn rank_index(&self) -> u64 {
        let n = self.rank();
        let mut free: u32 = if 2 * n == 32 {
            u32::MAX
        } else {
            (1u32 << (2 * n)) - 1
        };
        let mut index = 0u64;
        for t in 0..n {
            let s = free.trailing_zeros() as usize;
            let p = self.partner[s] as usize;
            free &= !(1 << s);
            let digit = (free & ((1u32 << p) - 1)).count_ones() as u64;
            free &= !(1 << p);
            index = index * (2 * (n - t) as u64 - 1) + digit;
        }
        index
    }

    /// Inverse of [`rank_index`](Self::rank_index).
    pub fn unrank(n: usize, index: u64) -> Result<Self> {
        check_rank(n)?;
        if index >= double_factorial_odd(n) {
            return Err(Error::Parse(alloc::format!(
                "rank {index} out of range for n = {n}"
            )));
        }
        Ok(Self::unrank_unchecked(n, index))
    }

    pub(crate) fn unrank_unchecked(n: usize, mut index: u64) -> Self {
        let mut digits = [0u8; MAX_RANK];
        for t in (0..n).rev() {
            let radix = 2 * (n - t) as u64 - 1;
            digits[t] = (index % radix) as u8;
            index /= radix;
        }
        let mut partner = [0u8; 2 * MAX_RANK];
        let mut free: u32 = if 2 * n == 32 {
            u32::MAX
        } else {
            (1u32 << (2 * n)) - 1
        };
        for &digit in &digits[..n] {
            let s = free.trailing_zeros();
            free &= !(1 << s);
            let mut rest = free;
            for _ in 0..digit {
                rest &= rest - 1;
            }
            let p = rest.trailing_zeros();
            free &= !(1 << p);
            partner[s as usize] = p as u8;
            partner[p as usize] = s as u8;
        }
        BrauerDiagram::from_raw(n, partner)
    }
}
