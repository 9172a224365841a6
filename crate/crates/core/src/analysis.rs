//! Shape predicates on spectra and checkers for the reflection and block lemmas.
//!
//! Unimodality and log-concavity look at the dense multiplicity sequence
//! from the smallest to the largest value, so a gap in the support counts as
//! a zero and fails both. The empty multiset (the spectrum of `1 / 1`)
//! satisfies every predicate vacuously.

use num_integer::Integer;

use crate::composition::SeaweedSpec;
use crate::multiset::IntegerMultiset;
use crate::spectrum::{extended_spectrum_matrix, spectrum, spectrum_matrix};
use crate::{Error, Result};

/// `(unbroken, centered)`: the distinct values form an interval `[lo, hi]`,
/// and `lo + hi == 1`. Centered is only reported for unbroken spectra.
pub fn is_unbroken_centered_half(s: &IntegerMultiset) -> Result<(bool, bool)> {
    let (lo, hi) = s.min().zip(s.max()).ok_or(Error::EmptyMultiset)?;
    let unbroken = (hi - lo + 1) as usize == s.distinct_len();
    Ok((unbroken, unbroken && lo + hi == 1))
}

fn unimodal_seq(a: &[u64]) -> bool {
    let peak = a.windows(2).take_while(|w| w[0] <= w[1]).count();
    a[peak..].windows(2).all(|w| w[0] >= w[1])
}

fn log_concave_seq(a: &[u64]) -> bool {
    a.windows(3).all(|w| u128::from(w[1]) * u128::from(w[1]) >= u128::from(w[0]) * u128::from(w[2]))
}

pub fn is_unimodal(s: &IntegerMultiset) -> bool {
    unimodal_seq(&s.dense_multiplicities())
}

pub fn is_log_concave(s: &IntegerMultiset) -> bool {
    let a = s.dense_multiplicities();
    log_concave_seq(&a) && !a.contains(&0)
}

/// `m(e) == m(1 - e)` for every value `e`.
pub fn is_symmetric_about_half(s: &IntegerMultiset) -> bool {
    s.iter().all(|(v, c)| s.count(1 - v) == c)
}

/// Shape summary of one Frobenius seaweed's spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub spec: SeaweedSpec,
    pub spectrum: IntegerMultiset,
    pub unbroken: bool,
    pub centered_half: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    pub symmetric_about_half: bool,
}

impl SpectrumReport {
    pub fn of_spectrum(spec: SeaweedSpec, spectrum: IntegerMultiset) -> Self {
        let (unbroken, centered_half) = is_unbroken_centered_half(&spectrum).unwrap_or((true, true));
        Self {
            unbroken,
            centered_half,
            unimodal: is_unimodal(&spectrum),
            log_concave: is_log_concave(&spectrum),
            symmetric_about_half: is_symmetric_about_half(&spectrum),
            spec,
            spectrum,
        }
    }

    pub fn new(spec: &SeaweedSpec) -> Result<Self> {
        Ok(Self::of_spectrum(spec.clone(), spectrum(spec)?))
    }
}

/// `Σ(a/b) = Σ(b/a)^t` and `Σ̂(a/b) = Σ̂(b/a)^t`.
pub fn verify_swap_lemma(spec: &SeaweedSpec) -> Result<bool> {
    let other = spec.swapped();
    Ok(spectrum_matrix(spec)? == spectrum_matrix(&other)?.transpose()
        && extended_spectrum_matrix(spec)? == extended_spectrum_matrix(&other)?.transpose())
}

/// `Σ(a/b)` and `Σ̂(a/b)` are the antidiagonal transposes of those of `rev(a)/rev(b)`.
pub fn verify_reverse_lemma(spec: &SeaweedSpec) -> Result<bool> {
    let other = spec.reversed();
    Ok(spectrum_matrix(spec)? == spectrum_matrix(&other)?.antidiagonal_transpose()
        && extended_spectrum_matrix(spec)? == extended_spectrum_matrix(&other)?.antidiagonal_transpose())
}

/// Results of the three block identities for `g1 = mk1+k2|k1 / (m+1)k1+k2`.
/// The bottom-right and top-right identities are only claimed for `k1 > k2`
/// and are `None` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLemmaOutcome {
    pub top_left: bool,
    pub bottom_right: Option<bool>,
    pub top_right: Option<bool>,
}

impl BlockLemmaOutcome {
    pub fn all_hold(&self) -> bool {
        self.top_left && self.bottom_right != Some(false) && self.top_right != Some(false)
    }
}

fn maximal(a: usize, b: usize) -> SeaweedSpec {
    SeaweedSpec::from_parts(&[a, b], &[a + b]).expect("balanced")
}

pub fn verify_block_lemmas(k1: usize, k2: usize, m: usize) -> Result<BlockLemmaOutcome> {
    if k1 == 0 || k2 == 0 || m == 0 {
        return Err(Error::Domain { family: "block lemmas", constraint: "k1, k2, m >= 1" });
    }
    if k1.gcd(&k2) != 1 {
        return Err(Error::NotCoprime { k1, k2 });
    }
    let h = m * k1 + k2;
    let n = h + k1;
    let g1 = spectrum_matrix(&maximal(h, k1))?;
    let g2 = maximal(h - k1, k1);

    let top_left = g1.block_values(1..=h, 1..=h) == extended_spectrum_matrix(&g2)?.values();
    if k1 <= k2 {
        return Ok(BlockLemmaOutcome { top_left, bottom_right: None, top_right: None });
    }

    let small = extended_spectrum_matrix(&maximal(k1 - k2, k2))?.values();
    let bottom_right = g1.block_values(h + 1..=n, h + 1..=n) == small;

    let corner = g1.block_values(1..=h, h + 1..=n);
    let expected = if m == 1 {
        spectrum_matrix(&maximal(k1, k2))?.block_values(1..=k1, 1..=k1 + k2)
    } else {
        spectrum_matrix(&g2)?.block_values(1..=h, h - k1 + 1..=h)
    };
    let top_right = corner == expected.shifted(1);

    Ok(BlockLemmaOutcome { top_left, bottom_right: Some(bottom_right), top_right: Some(top_right) })
}
