//! Colexicographic enumeration of subsets of the cells, addressable by rank.
//!
//! A subset is a bitmap with cell `i` at bit `i`. Colex order on subsets is
//! then plain integer order on bitmaps, both for the whole power set and for
//! the `k`-element layer, so a rank range is a contiguous slice of either.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::space::{Ambient, PointSet};

/// Enumeration works on single-word bitmaps.
pub const MAX_ENUM_CELLS: u64 = 63;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SizeFilter {
    All,
    Exactly(u32),
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn family_size(cells: u64, filter: SizeFilter) -> u64 {
    match filter {
        SizeFilter::All => 1u64 << cells,
        SizeFilter::Exactly(k) => binomial(cells, k as u64),
    }
}

/// The `rank`-th `k`-subset of `0..cells` in colex order (combinatorial
/// number system).
pub fn unrank_combination(cells: u64, k: u32, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut top = cells;
    for i in (1..=k as u64).rev() {
        // largest c < top with C(c, i) <= rank
        let mut c = i - 1;
        while c + 1 < top && binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        mask |= 1 << c;
        top = c;
    }
    mask
}

pub fn rank_combination(mask: u64) -> u64 {
    let mut rank = 0;
    let mut rest = mask;
    let mut i = 1;
    while rest != 0 {
        let c = rest.trailing_zeros() as u64;
        rank += binomial(c, i);
        rest &= rest - 1;
        i += 1;
    }
    rank
}

/// Next bitmap with the same popcount (Gosper).
#[inline]
pub fn next_combination(mask: u64) -> u64 {
    let low = mask & mask.wrapping_neg();
    let ripple = mask + low;
    ripple | (((ripple ^ mask) / low) >> 2)
}

/// Bitmaps of a rank range, in order.
#[derive(Clone, Debug)]
pub struct SubsetMasks {
    filter: SizeFilter,
    current: u64,
    remaining: u64,
}

impl SubsetMasks {
    pub fn new(cells: u64, filter: SizeFilter, ranks: Range<u64>) -> Result<Self> {
        if cells > MAX_ENUM_CELLS {
            return Err(Error::AmbientTooLarge {
                p: 0,
                d: 0,
                reason: "subset enumeration is limited to 63 cells",
            });
        }
        let total = family_size(cells, filter);
        if ranks.start > ranks.end || ranks.end > total {
            return Err(Error::RankOutOfRange { start: ranks.start, end: ranks.end, total });
        }
        let remaining = ranks.end - ranks.start;
        let current = match filter {
            SizeFilter::All => ranks.start,
            SizeFilter::Exactly(k) if remaining > 0 => unrank_combination(cells, k, ranks.start),
            SizeFilter::Exactly(_) => 0,
        };
        Ok(SubsetMasks { filter, current, remaining })
    }
}

impl Iterator for SubsetMasks {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.current;
        self.remaining -= 1;
        if self.remaining > 0 {
            self.current = match self.filter {
                SizeFilter::All => out + 1,
                SizeFilter::Exactly(_) => next_combination(out),
            };
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// Subsets of `ambient` for the given filter and rank range, as point sets.
pub fn enumerate_subsets(
    ambient: Ambient,
    filter: SizeFilter,
    ranks: Range<u64>,
) -> Result<impl Iterator<Item = PointSet>> {
    let masks = SubsetMasks::new(ambient.cells(), filter, ranks)?;
    Ok(masks.map(move |m| PointSet::from_mask(ambient, m).expect("mask within ambient")))
}
