//! Closed-form spectra of the parametrised Frobenius families, and the
//! spectrum transforms for appending runs of 2's and 4's.
//!
//! `k` and `r` are the family parameters; `m` is `(k + 1) / 2` for the
//! odd-`k` families.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::composition::SeaweedSpec;
use crate::multiset::IntegerMultiset;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `k|1 / k+1`
    K1,
    /// `k|2 / k+2`, k odd
    K2,
    /// `k+1|k / 2k+1`
    K1K,
    /// `k+2|k / 2k+2`, k odd
    K2K,
    /// `2k|1 / 1|2k`
    TwoK1_12K,
    /// `2k|1|1 / 2k+2`
    TwoK11,
    /// `k|2^r / k+1|2^(r-1)|1`
    K2R,
    /// `k|2^r|1 / k+1|2^r`
    K2RPlus1,
    /// `2^r|1 / 2r+1`
    TwosR1,
    /// `k|4^r / k+2|4^(r-1)|2`, k odd
    K4R,
    /// `k|4^r|2 / k+2|4^r`, k odd
    K4RPlus2,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::K1,
        FamilyId::K2,
        FamilyId::K1K,
        FamilyId::K2K,
        FamilyId::TwoK1_12K,
        FamilyId::TwoK11,
        FamilyId::K2R,
        FamilyId::K2RPlus1,
        FamilyId::TwosR1,
        FamilyId::K4R,
        FamilyId::K4RPlus2,
    ];

    /// Stable lowercase identifier used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::K1 => "k1",
            FamilyId::K2 => "k2",
            FamilyId::K1K => "k1k",
            FamilyId::K2K => "k2k",
            FamilyId::TwoK1_12K => "2k1-12k",
            FamilyId::TwoK11 => "2k11",
            FamilyId::K2R => "k-2r",
            FamilyId::K2RPlus1 => "k-2r+1",
            FamilyId::TwosR1 => "2s-r1",
            FamilyId::K4R => "k-4r",
            FamilyId::K4RPlus2 => "k-4r+2",
        }
    }

    pub fn requires_odd_k(self) -> bool {
        matches!(self, FamilyId::K2 | FamilyId::K2K | FamilyId::K4R | FamilyId::K4RPlus2)
    }

    /// True if the family's shape depends on `k`.
    pub fn uses_k(self) -> bool {
        self != FamilyId::TwosR1
    }

    /// True if the family's shape depends on `r`.
    pub fn uses_r(self) -> bool {
        matches!(
            self,
            FamilyId::K2R | FamilyId::K2RPlus1 | FamilyId::TwosR1 | FamilyId::K4R | FamilyId::K4RPlus2
        )
    }

    pub fn has_extended_formula(self) -> bool {
        matches!(self, FamilyId::K1 | FamilyId::K2)
    }

    fn check(self, k: usize, r: usize) -> Result<()> {
        let name = self.name();
        if k == 0 {
            return Err(Error::Domain { family: name, constraint: "k >= 1" });
        }
        if r == 0 {
            return Err(Error::Domain { family: name, constraint: "r >= 1" });
        }
        if self.requires_odd_k() && k.is_multiple_of(2) {
            return Err(Error::Domain { family: name, constraint: "k must be odd" });
        }
        Ok(())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse { token: s.into(), reason: "unknown family" })
    }
}

fn repeat(part: usize, times: usize) -> impl Iterator<Item = usize> {
    core::iter::repeat_n(part, times)
}

fn build(top: impl IntoIterator<Item = usize>, bottom: impl IntoIterator<Item = usize>) -> SeaweedSpec {
    let top: Vec<usize> = top.into_iter().collect();
    let bottom: Vec<usize> = bottom.into_iter().collect();
    SeaweedSpec::from_parts(&top, &bottom).expect("family shapes are balanced")
}

/// The seaweed `family(k, r)`. Families that ignore `r` still require `r >= 1`.
pub fn family_spec(f: FamilyId, k: usize, r: usize) -> Result<SeaweedSpec> {
    f.check(k, r)?;
    Ok(match f {
        FamilyId::K1 => build([k, 1], [k + 1]),
        FamilyId::K2 => build([k, 2], [k + 2]),
        FamilyId::K1K => build([k + 1, k], [2 * k + 1]),
        FamilyId::K2K => build([k + 2, k], [2 * k + 2]),
        FamilyId::TwoK1_12K => build([2 * k, 1], [1, 2 * k]),
        FamilyId::TwoK11 => build([2 * k, 1, 1], [2 * k + 2]),
        FamilyId::K2R => build(
            [k].into_iter().chain(repeat(2, r)),
            [k + 1].into_iter().chain(repeat(2, r - 1)).chain([1]),
        ),
        FamilyId::K2RPlus1 => build(
            [k].into_iter().chain(repeat(2, r)).chain([1]),
            [k + 1].into_iter().chain(repeat(2, r)),
        ),
        FamilyId::TwosR1 => build(repeat(2, r).chain([1]), [2 * r + 1]),
        FamilyId::K4R => build(
            [k].into_iter().chain(repeat(4, r)),
            [k + 2].into_iter().chain(repeat(4, r - 1)).chain([2]),
        ),
        FamilyId::K4RPlus2 => build(
            [k].into_iter().chain(repeat(4, r)).chain([2]),
            [k + 2].into_iter().chain(repeat(4, r)),
        ),
    })
}

fn ms(pairs: &[(i64, u64)]) -> IntegerMultiset {
    IntegerMultiset::from_counts(pairs.iter().copied())
}

/// `{0^k, 1^k} ∪ ⋃_{i=1}^{k-1} {(-k+i)^i, (k-i+1)^i}`
fn k1_spectrum(k: i64) -> IntegerMultiset {
    let mut s = IntegerMultiset::new();
    for i in 1..=k {
        s.insert_n(-k + i, i as u64);
        s.insert_n(k - i + 1, i as u64);
    }
    s
}

fn k1_extended(k: i64) -> IntegerMultiset {
    let mut s = ms(&[(0, k as u64)]);
    for i in 0..k {
        s.insert_n(-k + i, (i + 1) as u64);
        s.insert_n(k - i, (i + 1) as u64);
    }
    s
}

fn k2_spectrum(k: i64) -> IntegerMultiset {
    let m = (k + 1) / 2;
    match k {
        1 => k1_spectrum(2),
        3 => ms(&[(-2, 1), (-1, 3), (0, 5), (1, 5), (2, 3), (3, 1)]),
        _ => {
            let c = (2 * k - 1) as u64;
            let mut s = ms(&[(-m, 1), (-m + 1, 3), (0, c), (1, c), (m, 3), (m + 1, 1)]);
            for i in 2..m {
                let c = (4 * i - 2) as u64;
                s.insert_n(-m + i, c);
                s.insert_n(m - i + 1, c);
            }
            s
        }
    }
}

fn k2_extended(k: i64) -> IntegerMultiset {
    let m = (k + 1) / 2;
    match k {
        1 => k1_extended(2),
        3 => ms(&[(-3, 1), (-2, 3), (-1, 5), (0, 6), (1, 5), (2, 3), (3, 1)]),
        _ => {
            let c = (2 * k - 1) as u64;
            let mut s = ms(&[(-m - 1, 1), (-m, 3), (-1, c), (0, c + 1), (1, c), (m, 3), (m + 1, 1)]);
            for i in 1..m - 1 {
                let c = (4 * i + 2) as u64;
                s.insert_n(-m + i, c);
                s.insert_n(m - i, c);
            }
            s
        }
    }
}

fn k1k_spectrum(k: i64) -> IntegerMultiset {
    if k == 1 {
        return ms(&[(-1, 1), (0, 2), (1, 2), (2, 1)]);
    }
    let c = (3 * k - 1) as u64;
    let mut s = ms(&[(-k, 1), (0, c), (1, c), (k + 1, 1)]);
    for i in 1..k {
        s.insert_n(-k + i, (3 * i) as u64);
        s.insert_n(k - i + 1, (3 * i) as u64);
    }
    s
}

/// Symmetric table `{(1-v)^c, v^c}` for the listed non-negative-side entries.
fn mirrored(upper: &[(i64, u64)]) -> IntegerMultiset {
    let mut s = IntegerMultiset::new();
    for &(v, c) in upper {
        s.insert_n(v, c);
        s.insert_n(1 - v, c);
    }
    s
}

fn k2k_spectrum(k: i64) -> IntegerMultiset {
    let m = (k + 1) / 2;
    match k {
        1 => mirrored(&[(1, 3), (2, 2), (3, 1)]),
        3 => mirrored(&[(1, 11), (2, 8), (3, 4), (4, 1)]),
        5 => mirrored(&[(1, 22), (2, 17), (3, 10), (4, 4), (5, 1)]),
        7 => mirrored(&[(1, 34), (2, 28), (3, 19), (4, 10), (5, 4), (6, 1)]),
        _ => {
            let mut s = mirrored(&[
                (1, (6 * k - 8) as u64),
                (2, (6 * k - 14) as u64),
                (m - 1, 19),
                (m, 10),
                (m + 1, 4),
                (m + 2, 1),
            ]);
            for i in 1..=m - 4 {
                let c = (12 * i + 18) as u64;
                s.insert_n(-m + i + 2, c);
                s.insert_n(m - i - 1, c);
            }
            s
        }
    }
}

fn two_k1_12k_spectrum(k: i64) -> IntegerMultiset {
    let mut s = IntegerMultiset::new();
    for i in 1..=k {
        s.insert_n(-k + i, (4 * i - 2) as u64);
        s.insert_n(k - i + 1, (4 * i - 2) as u64);
    }
    s
}

fn two_k11_spectrum(k: i64) -> IntegerMultiset {
    let mut s = ms(&[(-k, 1), (k + 1, 1)]);
    for i in 1..=k {
        s.insert_n(-k + i, (4 * i) as u64);
        s.insert_n(k - i + 1, (4 * i) as u64);
    }
    s
}

/// `(a_r, b_r)` with `a_1 = 2`, `b_1 = 1`.
fn twos_r1_counts(r: usize) -> (u64, u64) {
    let (mut a, mut b) = (2u64, 1u64);
    for r in 2..=r as u64 {
        b += r.div_ceil(2);
        a += r + (r - 1).div_ceil(2) + 1;
    }
    (a, b)
}

fn k4r_spectrum(k: i64, r: i64, plus_two: bool) -> IntegerMultiset {
    let m = (k + 1) / 2;
    let e = i64::from(plus_two);
    match k {
        1 => mirrored(&[(1, (6 * r - 1 + 3 * e) as u64), (2, (2 * r + e) as u64)]),
        3 => mirrored(&[(1, (6 * r + 2 + 3 * e) as u64), (2, (2 * r + 2 + e) as u64), (3, 1)]),
        _ => {
            let mut s = mirrored(&[
                (1, (2 * (k + 3 * r) - 4 + 3 * e) as u64),
                (2, (2 * (k + r) - 5 + e) as u64),
                (m, 3),
                (m + 1, 1),
            ]);
            for i in 2..=m - 2 {
                let c = (4 * i - 2) as u64;
                s.insert_n(-m + i, c);
                s.insert_n(m - i + 1, c);
            }
            s
        }
    }
}

/// Spectrum of `family_spec(f, k, r)` by the family's closed form.
pub fn family_spectrum(f: FamilyId, k: usize, r: usize) -> Result<IntegerMultiset> {
    f.check(k, r)?;
    let (ki, ri) = (k as i64, r as i64);
    Ok(match f {
        FamilyId::K1 => k1_spectrum(ki),
        FamilyId::K2 => k2_spectrum(ki),
        FamilyId::K1K => k1k_spectrum(ki),
        FamilyId::K2K => k2k_spectrum(ki),
        FamilyId::TwoK1_12K => two_k1_12k_spectrum(ki),
        FamilyId::TwoK11 => two_k11_spectrum(ki),
        FamilyId::K2R => extend_with_2s(&k1_spectrum(ki), r, TwosVariant::RTwos),
        FamilyId::K2RPlus1 => extend_with_2s(&k1_spectrum(ki), r, TwosVariant::RTwosPlusOne),
        FamilyId::TwosR1 => {
            let (a, b) = twos_r1_counts(r);
            ms(&[(-1, b), (0, a), (1, a), (2, b)])
        }
        FamilyId::K4R => k4r_spectrum(ki, ri, false),
        FamilyId::K4RPlus2 => k4r_spectrum(ki, ri, true),
    })
}

/// Extended spectrum by closed form; only `K1` and `K2` have one.
pub fn family_extended_spectrum(f: FamilyId, k: usize) -> Result<IntegerMultiset> {
    f.check(k, 1)?;
    match f {
        FamilyId::K1 => Ok(k1_extended(k as i64)),
        FamilyId::K2 => Ok(k2_extended(k as i64)),
        _ => Err(Error::Unsupported { family: f.name(), what: "extended spectrum" }),
    }
}

/// Which tail the 2's are appended with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwosVariant {
    /// `a|2^r / b|2^(r-1)|1`
    RTwos,
    /// `a|2^r|1 / b|2^r`
    RTwosPlusOne,
}

/// Which tail the 4's are appended with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoursVariant {
    /// `a|4^r / b|4^(r-1)|2`
    RFours,
    /// `a|4^r|2 / b|4^r`
    RFoursPlusTwo,
}

/// Spectrum after replacing a trailing top `1` by `r` 2's.
pub fn extend_with_2s(s: &IntegerMultiset, r: usize, variant: TwosVariant) -> IntegerMultiset {
    let c = match variant {
        TwosVariant::RTwos => 2 * r as u64 - 1,
        TwosVariant::RTwosPlusOne => 2 * r as u64,
    };
    s.union(&ms(&[(0, c), (1, c)]))
}

/// Spectrum after replacing a trailing top `2` by `r` 4's.
pub fn extend_with_4s(s: &IntegerMultiset, r: usize, variant: FoursVariant) -> IntegerMultiset {
    let c = match variant {
        FoursVariant::RFours => 2 * r as u64 - 1,
        FoursVariant::RFoursPlusTwo => 2 * r as u64,
    };
    s.union(&ms(&[(-1, c), (0, 3 * c), (1, 3 * c), (2, c)]))
}

/// The spec obtained from a base `a|1 / b` by the 2's transform.
pub fn extended_base_with_2s(base: &SeaweedSpec, r: usize, variant: TwosVariant) -> Option<SeaweedSpec> {
    extend_tail(base, 1, 2, r, variant == TwosVariant::RTwosPlusOne)
}

/// The spec obtained from a base `a|2 / b` by the 4's transform.
pub fn extended_base_with_4s(base: &SeaweedSpec, r: usize, variant: FoursVariant) -> Option<SeaweedSpec> {
    extend_tail(base, 2, 4, r, variant == FoursVariant::RFoursPlusTwo)
}

/// `a|t / b` becomes `a|(2t)^r / b|(2t)^(r-1)|t`, or with `plus` set,
/// `a|(2t)^r|t / b|(2t)^r`. `None` if the top does not end in `t` or `r == 0`.
pub fn extend_tail(base: &SeaweedSpec, t: usize, block: usize, r: usize, plus: bool) -> Option<SeaweedSpec> {
    let (&last, head) = base.top().parts().split_last()?;
    if last != t || r == 0 {
        return None;
    }
    let mut top = head.to_vec();
    let mut bottom = base.bottom().parts().to_vec();
    top.extend(repeat(block, r));
    if plus {
        top.push(t);
        bottom.extend(repeat(block, r));
    } else {
        bottom.extend(repeat(block, r - 1));
        bottom.push(t);
    }
    SeaweedSpec::from_parts(&top, &bottom).ok()
}

/// Every `(f, k, r)` with `k <= k_max`, `r <= r_max` in the family's domain.
/// Families that ignore a parameter only get it at 1.
pub fn family_grid(f: FamilyId, k_max: usize, r_max: usize) -> Vec<(usize, usize)> {
    let ks: Vec<usize> = if f.uses_k() {
        (1..=k_max).filter(|k| !f.requires_odd_k() || k % 2 == 1).collect()
    } else {
        vec![1]
    };
    let rs: Vec<usize> = if f.uses_r() { (1..=r_max).collect() } else { vec![1] };
    ks.iter().flat_map(|&k| rs.iter().map(move |&r| (k, r))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::parse_seaweed;
    use crate::meander::is_frobenius;
    use crate::spectrum::{extended_spectrum, shape_mask, spectrum};
    use alloc::string::ToString;

    fn sw(s: &str) -> SeaweedSpec {
        parse_seaweed(s).unwrap()
    }

    #[test]
    fn builds_family_specs() {
        let text = |f, k, r| family_spec(f, k, r).unwrap().to_string();
        assert_eq!(text(FamilyId::K2, 5, 1), "5|2 / 7");
        assert_eq!(text(FamilyId::TwosR1, 1, 3), "2|2|2|1 / 7");
        assert_eq!(text(FamilyId::K4R, 1, 1), "1|4 / 3|2");
        assert_eq!(text(FamilyId::K2R, 3, 2), "3|2|2 / 4|2|1");
        assert_eq!(text(FamilyId::K4RPlus2, 5, 2), "5|4|4|2 / 7|4|4");
        assert_eq!(text(FamilyId::TwoK1_12K, 2, 1), "4|1 / 1|4");
        assert_eq!(text(FamilyId::TwoK11, 1, 1), "2|1|1 / 4");
        assert_eq!(text(FamilyId::K2RPlus1, 1, 1), "1|2|1 / 2|2");
    }

    #[test]
    fn rejects_out_of_domain() {
        assert_eq!(
            family_spec(FamilyId::K2, 4, 1),
            Err(Error::Domain { family: "k2", constraint: "k must be odd" })
        );
        assert!(family_spectrum(FamilyId::K4R, 2, 1).is_err());
        assert!(family_spec(FamilyId::K1, 0, 1).is_err());
        assert!(family_spec(FamilyId::K2R, 1, 0).is_err());
        assert!(family_extended_spectrum(FamilyId::K1K, 2).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert!("k3".parse::<FamilyId>().is_err());
    }

    #[test]
    fn stated_spectra() {
        assert_eq!(
            family_spectrum(FamilyId::K2, 3, 1).unwrap(),
            ms(&[(-2, 1), (-1, 3), (0, 5), (1, 5), (2, 3), (3, 1)])
        );
        assert_eq!(
            family_spectrum(FamilyId::K2K, 7, 1).unwrap(),
            ms(&[
                (-5, 1),
                (-4, 4),
                (-3, 10),
                (-2, 19),
                (-1, 28),
                (0, 34),
                (1, 34),
                (2, 28),
                (3, 19),
                (4, 10),
                (5, 4),
                (6, 1)
            ])
        );
        assert_eq!(family_spectrum(FamilyId::TwosR1, 1, 1).unwrap(), ms(&[(-1, 1), (0, 2), (1, 2), (2, 1)]));
        assert_eq!(family_extended_spectrum(FamilyId::K1, 1).unwrap(), ms(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(
            family_extended_spectrum(FamilyId::K2, 3).unwrap(),
            ms(&[(-3, 1), (-2, 3), (-1, 5), (0, 6), (1, 5), (2, 3), (3, 1)])
        );
    }

    #[test]
    fn k2k_general_case_matches_stated_k9() {
        assert_eq!(
            family_spectrum(FamilyId::K2K, 9, 1).unwrap(),
            mirrored(&[(1, 46), (2, 40), (3, 30), (4, 19), (5, 10), (6, 4), (7, 1)])
        );
    }

    #[test]
    fn k1_extended_by_summation() {
        // Direct evaluation of {0^k} ∪ ⋃_{i=0}^{k-1} {(-k+i)^{i+1}, (k-i)^{i+1}} at k = 3.
        let expected = ms(&[(0, 3), (-3, 1), (3, 1), (-2, 2), (2, 2), (-1, 3), (1, 3)]);
        assert_eq!(family_extended_spectrum(FamilyId::K1, 3).unwrap(), expected);
        assert_eq!(extended_spectrum(&sw("3|1 / 4")).unwrap(), expected);
    }

    #[test]
    fn transforms() {
        let s = spectrum(&sw("3|1 / 4")).unwrap();
        assert_eq!(
            extend_with_2s(&s, 2, TwosVariant::RTwos),
            ms(&[(-2, 1), (-1, 2), (0, 6), (1, 6), (2, 2), (3, 1)])
        );
        assert_eq!(extend_with_2s(&IntegerMultiset::new(), 1, TwosVariant::RTwos), ms(&[(0, 1), (1, 1)]));
        assert_eq!(
            extend_with_2s(&ms(&[(0, 2), (1, 2)]), 1, TwosVariant::RTwosPlusOne),
            ms(&[(0, 4), (1, 4)])
        );
        let s = spectrum(&sw("5|2 / 7")).unwrap();
        assert_eq!(
            extend_with_4s(&s, 2, FoursVariant::RFoursPlusTwo),
            ms(&[(-3, 1), (-2, 3), (-1, 10), (0, 21), (1, 21), (2, 10), (3, 3), (4, 1)])
        );
        assert_eq!(
            extend_with_4s(&IntegerMultiset::new(), 1, FoursVariant::RFours),
            ms(&[(-1, 1), (0, 3), (1, 3), (2, 1)])
        );
        let base = spectrum(&sw("1|2 / 3")).unwrap();
        assert_eq!(
            extend_with_4s(&base, 1, FoursVariant::RFours),
            spectrum(&sw("1|4 / 3|2")).unwrap()
        );
    }

    #[test]
    fn tail_extension_shapes() {
        let base = sw("3|1 / 4");
        assert_eq!(extended_base_with_2s(&base, 2, TwosVariant::RTwos).unwrap(), sw("3|2|2 / 4|2|1"));
        assert_eq!(extended_base_with_2s(&base, 1, TwosVariant::RTwosPlusOne).unwrap(), sw("3|2|1 / 4|2"));
        assert_eq!(extended_base_with_4s(&sw("5|2 / 7"), 2, FoursVariant::RFoursPlusTwo).unwrap(), sw("5|4|4|2 / 7|4|4"));
        assert!(extended_base_with_2s(&sw("5|2 / 7"), 1, TwosVariant::RTwos).is_none());
        assert_eq!(extended_base_with_2s(&sw("1 / 1"), 1, TwosVariant::RTwos).unwrap(), sw("2 / 1|1"));
        assert!(extended_base_with_4s(&sw("3|1 / 4"), 1, FoursVariant::RFours).is_none());
    }

    #[test]
    fn formulas_match_engine_up_to_sixty() {
        for f in FamilyId::ALL {
            for (k, r) in family_grid(f, 60, 30) {
                let spec = family_spec(f, k, r).unwrap();
                if spec.n() > 60 {
                    continue;
                }
                assert!(is_frobenius(&spec), "{f} k={k} r={r}");
                let formula = family_spectrum(f, k, r).unwrap();
                assert_eq!(formula, spectrum(&spec).unwrap(), "{f} k={k} r={r} ({spec})");
                assert_eq!(formula.total() as usize, shape_mask(&spec).count() - 1);
                if f.has_extended_formula() {
                    assert_eq!(family_extended_spectrum(f, k).unwrap(), extended_spectrum(&spec).unwrap(), "{f} k={k}");
                }
            }
        }
    }
}
