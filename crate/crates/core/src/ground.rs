//! Subsets of a ground set as machine-word bit masks.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on ground-set sizes; one machine word.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set `0..n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset {
    bits: u64,
    n: u32,
}

impl GroundSubset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        GroundSubset { bits: 0, n: n as u32 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        GroundSubset { bits, n: n as u32 }
    }

    /// Builds a subset from a raw mask, rejecting bits at index >= n.
    pub fn from_bits(bits: u64, n: usize) -> Result<Self> {
        assert!(n <= MAX_GROUND, "ground set too large");
        let full = Self::full(n).bits;
        if bits & !full != 0 {
            let index = (63 - (bits & !full).leading_zeros()) as usize;
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(GroundSubset { bits, n: n as u32 })
    }

    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut s = Self::empty(n);
        for &i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            s.bits |= 1u64 << i;
        }
        Ok(s)
    }

    pub fn singleton(i: usize, n: usize) -> Result<Self> {
        Self::from_indices(&[i], n)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n as usize && self.bits >> i & 1 == 1
    }

    pub fn insert(&self, i: usize) -> Self {
        debug_assert!(i < self.n as usize);
        GroundSubset { bits: self.bits | 1 << i, n: self.n }
    }

    pub fn remove(&self, i: usize) -> Self {
        GroundSubset { bits: self.bits & !(1 << i), n: self.n }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        GroundSubset { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        GroundSubset { bits: self.bits & other.bits, n: self.n }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        GroundSubset { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(&self) -> Self {
        GroundSubset { bits: Self::full(self.n as usize).bits & !self.bits, n: self.n }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of the ground set, in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = GroundSubset> {
        assert!(n < 32, "subset sweep too large");
        (0u64..1 << n).map(move |bits| GroundSubset { bits, n: n as u32 })
    }

    /// All subsets of `self`, in mask order.
    pub fn subsets_of(&self) -> impl Iterator<Item = GroundSubset> + '_ {
        let mask = self.bits;
        let n = self.n;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let bits = cur?;
            cur = if bits == mask { None } else { Some((bits.wrapping_sub(mask)) & mask) };
            Some(GroundSubset { bits, n })
        })
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.card()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_basics() {
        let s = GroundSubset::from_indices(&[0, 2, 5], 6).unwrap();
        assert_eq!(s.card(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.indices(), vec![0, 2, 5]);
        assert_eq!(s.complement().indices(), vec![1, 3, 4]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(GroundSubset::from_indices(&[4], 4).is_err());
        assert!(GroundSubset::from_bits(0b10000, 4).is_err());
    }

    #[test]
    fn subsets_of_enumerates_power_set() {
        let s = GroundSubset::from_indices(&[1, 3, 4], 6).unwrap();
        let subs: Vec<_> = s.subsets_of().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(&s)));
    }
}
