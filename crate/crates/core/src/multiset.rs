//! Integer multisets stored as a sorted value -> multiplicity map.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A multiset of integers. Zero multiplicities are never stored, so two
/// multisets are equal exactly when their maps are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntegerMultiset {
    counts: BTreeMap<i64, u64>,
}

impl IntegerMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(value, multiplicity)` pairs; repeated values accumulate.
    pub fn from_counts<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (v, c) in pairs {
            m.insert_n(v, c);
        }
        m
    }

    pub fn insert(&mut self, value: i64) {
        self.insert_n(value, 1);
    }

    pub fn insert_n(&mut self, value: i64, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    /// Removes one copy of `value`; returns false if it was absent.
    pub fn remove_one(&mut self, value: i64) -> bool {
        match self.counts.get_mut(&value) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&value);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, value: i64) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// Total number of elements, counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn distinct_len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    /// `(value, multiplicity)` in ascending value order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.counts.keys().copied()
    }

    /// Multiplicities in ascending value order (present values only).
    pub fn multiplicities(&self) -> Vec<u64> {
        self.counts.values().copied().collect()
    }

    /// Multiplicities of every integer from `min` to `max`, with zeros for gaps.
    pub fn dense_multiplicities(&self) -> Vec<u64> {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|v| self.count(v)).collect(),
            _ => Vec::new(),
        }
    }

    /// Multiset sum: multiplicities add.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend_counts(other);
        out
    }

    pub fn extend_counts(&mut self, other: &Self) {
        for (v, c) in other.iter() {
            self.insert_n(v, c);
        }
    }

    /// Every value shifted by `delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        Self { counts: self.counts.iter().map(|(&v, &c)| (v + delta, c)).collect() }
    }

    /// Every value negated.
    pub fn negated(&self) -> Self {
        Self { counts: self.counts.iter().map(|(&v, &c)| (-v, c)).collect() }
    }

    /// True if every value of `self` appears in `other` at least as often.
    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.iter().all(|(v, c)| other.count(v) >= c)
    }

    /// `self - other` when `other` is a sub-multiset.
    pub fn difference(&self, other: &Self) -> Option<Self> {
        if !other.is_submultiset_of(self) {
            return None;
        }
        let mut out = self.clone();
        for (v, c) in other.iter() {
            let left = out.count(v) - c;
            if left == 0 {
                out.counts.remove(&v);
            } else {
                out.counts.insert(v, left);
            }
        }
        Some(out)
    }
}

impl FromIterator<i64> for IntegerMultiset {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        let mut m = Self::new();
        for v in iter {
            m.insert(v);
        }
        m
    }
}

impl<'a> IntoIterator for &'a IntegerMultiset {
    type Item = (&'a i64, &'a u64);
    type IntoIter = btree_map::Iter<'a, i64, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.counts.iter()
    }
}

/// Exponent notation, ascending: `{-2, -1^2, 0^5, 1^5, 2^2, 3}`.
impl fmt::Display for IntegerMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if c == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{c}")?;
            }
        }
        f.write_str("}")
    }
}

impl FromStr for IntegerMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse { token: s.into(), reason: "expected {...}" })?;
        let mut m = Self::new();
        for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (v, c) = match item.split_once('^') {
                Some((v, c)) => (v, c),
                None => (item, "1"),
            };
            let bad = || Error::Parse { token: item.into(), reason: "expected value or value^count" };
            let v = v.trim().parse::<i64>().map_err(|_| bad())?;
            let c = c.trim().parse::<u64>().map_err(|_| bad())?;
            if c == 0 {
                return Err(bad());
            }
            m.insert_n(v, c);
        }
        Ok(m)
    }
}

/// True iff both multisets have identical value -> multiplicity maps.
pub fn multiset_equal(x: &IntegerMultiset, y: &IntegerMultiset) -> bool {
    x == y
}
