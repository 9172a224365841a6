//! Compositions of `n` and seaweed specifications.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An ordered list of positive parts. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    n: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse { token: "".into(), reason: "empty composition" });
        }
        if let Some(p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::Parse { token: p.to_string(), reason: "parts must be positive" });
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts, n: self.n }
    }

    /// Inclusive 1-based `(start, end)` vertex range of every block.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().scan(0usize, |acc, &p| {
            let start = *acc + 1;
            *acc += p;
            Some((start, *acc))
        })
    }

    /// Block number (0-based) of each vertex; index 0 is unused.
    pub(crate) fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n + 1);
        out.push(usize::MAX);
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(core::iter::repeat_n(b, p));
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_composition(s)
    }
}

/// Parses pipe-separated positive integers such as `1|2|3`.
pub fn parse_composition(text: &str) -> Result<Composition> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse { token: "".into(), reason: "empty composition" });
    }
    let parts = text
        .split('|')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(0) => Err(Error::Parse { token: tok.into(), reason: "parts must be positive" }),
                Ok(p) => Ok(p),
                Err(_) if tok.starts_with('-') => {
                    Err(Error::Parse { token: tok.into(), reason: "parts must be positive" })
                }
                Err(_) => Err(Error::Parse { token: tok.into(), reason: "not a decimal integer" }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

/// The pair of compositions defining `p^A(top | bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeaweedSpec {
    top: Composition,
    bottom: Composition,
}

impl SeaweedSpec {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self> {
        if top.n() != bottom.n() {
            return Err(Error::SumMismatch { top: top.n(), bottom: bottom.n() });
        }
        Ok(Self { top, bottom })
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(top: &[usize], bottom: &[usize]) -> Result<Self> {
        Self::new(Composition::new(top.to_vec())?, Composition::new(bottom.to_vec())?)
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    /// `b / a`: the vertically reflected seaweed.
    pub fn swapped(&self) -> Self {
        Self { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// `rev(a) / rev(b)`: the horizontally reflected seaweed.
    pub fn reversed(&self) -> Self {
        Self { top: self.top.reversed(), bottom: self.bottom.reversed() }
    }
}

impl fmt::Display for SeaweedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

impl FromStr for SeaweedSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_seaweed(s)
    }
}

/// Parses `<top> / <bottom>`, e.g. `2|4 / 1|2|3`.
pub fn parse_seaweed(text: &str) -> Result<SeaweedSpec> {
    let mut sides = text.trim().split('/');
    let (Some(top), Some(bottom), None) = (sides.next(), sides.next(), sides.next()) else {
        return Err(Error::Parse {
            token: text.trim().into(),
            reason: "expected exactly one '/' separating top and bottom",
        });
    };
    SeaweedSpec::new(parse_composition(top)?, parse_composition(bottom)?)
}

/// All `2^(n-1)` compositions of `n`, ordered by the bitmask of cut
/// positions (bit `i` set means a cut after vertex `i + 1`).
pub fn compositions_of(n: usize) -> Result<Compositions> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    assert!(n <= 64, "compositions_of supports n <= 64");
    Ok(Compositions { n, mask: 0, end: 1u128 << (n - 1) })
}

/// Iterator returned by [`compositions_of`].
#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    mask: u128,
    end: u128,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.mask >= self.end {
            return None;
        }
        let mask = self.mask;
        self.mask += 1;
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 0..self.n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(i + 1 - last);
                last = i + 1;
            }
        }
        parts.push(self.n - last);
        Some(Composition { parts, n: self.n })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}
