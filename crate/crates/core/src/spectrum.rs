//! Oriented meanders, path weights, spectrum matrices and principal elements.
//!
//! Top edges point right to left and bottom edges left to right. On a
//! Frobenius seaweed the meander is one path, so the weight of the path from
//! `i` to `j` (forward edges minus backward edges) is a potential difference
//! `phi(i) - phi(j)`. One walk fixes `phi`, normalised so `phi(n) = 0`; every
//! matrix entry is then a subtraction.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::RangeInclusive;

use num_rational::Ratio;

use crate::composition::SeaweedSpec;
use crate::meander::{build_meander, components, Meander};
use crate::multiset::IntegerMultiset;
use crate::{Error, Result};

/// A meander with its edge orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedMeander {
    base: Meander,
    directed: Vec<(usize, usize)>,
}

impl OrientedMeander {
    pub fn base(&self) -> &Meander {
        &self.base
    }

    /// Directed edges `(from, to)`, sorted.
    pub fn directed_edges(&self) -> &[(usize, usize)] {
        &self.directed
    }

    /// True if the edge between `u` and `v` is directed `u -> v`.
    fn points(&self, u: usize, v: usize) -> bool {
        if self.base.top_partner(u) == Some(v) {
            u > v
        } else {
            u < v
        }
    }
}

pub fn orient(m: &Meander) -> OrientedMeander {
    let mut directed: Vec<_> = m
        .top_edges()
        .into_iter()
        .map(|(p, q)| (q, p))
        .chain(m.bottom_edges())
        .collect();
    directed.sort_unstable();
    OrientedMeander { base: m.clone(), directed }
}

/// `phi(v) = w(P_{v,n})`, indexed `1..=n` (slot 0 unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPotential {
    phi: Vec<i64>,
}

impl VertexPotential {
    pub fn n(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn get(&self, v: usize) -> i64 {
        self.phi[v]
    }

    /// Weight of the path from `i` to `j`.
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.phi[i] - self.phi[j]
    }

    /// `[phi(1), ..., phi(n)]`.
    pub fn as_slice(&self) -> &[i64] {
        &self.phi[1..]
    }
}

pub fn vertex_potentials(om: &OrientedMeander) -> Result<VertexPotential> {
    let m = om.base();
    let summary = components(m);
    if !summary.is_single_path() {
        return Err(Error::NotFrobenius { index: summary.index_sl() });
    }
    let order = &summary.components[0].1;
    let n = m.n();
    let mut phi = vec![0i64; n + 1];
    for w in order.windows(2) {
        let (u, v) = (w[0], w[1]);
        phi[v] = if om.points(u, v) { phi[u] - 1 } else { phi[u] + 1 };
    }
    let offset = phi[n];
    for p in &mut phi[1..] {
        *p -= offset;
    }
    Ok(VertexPotential { phi })
}

fn potentials_of(spec: &SeaweedSpec) -> Result<VertexPotential> {
    vertex_potentials(&orient(&build_meander(spec)))
}

/// The admissible `(row, col)` cells of a seaweed: those `e_{i,j}` that
/// preserve both flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMask {
    top_block: Vec<usize>,
    bottom_block: Vec<usize>,
}

impl ShapeMask {
    pub fn n(&self) -> usize {
        self.top_block.len() - 1
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.top_block[i] <= self.top_block[j] && self.bottom_block[i] >= self.bottom_block[j]
    }

    /// Number of admissible cells, diagonal included.
    pub fn count(&self) -> usize {
        let n = self.n();
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&(i, j)| self.contains(i, j)).count()
    }
}

pub fn shape_mask(spec: &SeaweedSpec) -> ShapeMask {
    ShapeMask { top_block: spec.top().block_of(), bottom_block: spec.bottom().block_of() }
}

/// An `n x n` integer matrix with entries only on some cells. Rows and
/// columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialIntegerMatrix {
    n: usize,
    cells: Vec<Option<i64>>,
}

impl PartialIntegerMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Option<i64>) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                cells.push(f(i, j));
            }
        }
        Self { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_defined(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    pub fn defined_count(&self) -> usize {
        self.cells.iter().flatten().count()
    }

    /// Multiset of all defined entries.
    pub fn values(&self) -> IntegerMultiset {
        self.cells.iter().flatten().copied().collect()
    }

    /// Multiset of the defined entries in the given block.
    pub fn block_values(&self, rows: RangeInclusive<usize>, cols: RangeInclusive<usize>) -> IntegerMultiset {
        rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
            .filter_map(|(i, j)| self.get(i, j))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Transpose across the antidiagonal: `(i, j) -> (n+1-j, n+1-i)`.
    pub fn antidiagonal_transpose(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.get(n + 1 - j, n + 1 - i))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Option<i64>]> {
        self.cells.chunks(self.n.max(1)).take(self.n)
    }

    /// Text grid: one row per line, entries separated by single spaces,
    /// undefined cells shown as `·`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                match cell {
                    Some(v) => {
                        let _ = write!(out, "{v}");
                    }
                    None => out.push('·'),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `Σ(g)`: path weights on the seaweed's shape.
pub fn spectrum_matrix(spec: &SeaweedSpec) -> Result<PartialIntegerMatrix> {
    let phi = potentials_of(spec)?;
    let mask = shape_mask(spec);
    Ok(PartialIntegerMatrix::from_fn(spec.n(), |i, j| {
        mask.contains(i, j).then(|| phi.weight(i, j))
    }))
}

/// `Σ̂(g)`: path weights between every pair of vertices.
pub fn extended_spectrum_matrix(spec: &SeaweedSpec) -> Result<PartialIntegerMatrix> {
    let phi = potentials_of(spec)?;
    Ok(PartialIntegerMatrix::from_fn(spec.n(), |i, j| Some(phi.weight(i, j))))
}

fn drop_one_zero(mut values: IntegerMultiset) -> IntegerMultiset {
    values.remove_one(0);
    values
}

/// Spectrum of a Frobenius seaweed: the entries of `Σ(g)` with one 0 removed.
pub fn spectrum(spec: &SeaweedSpec) -> Result<IntegerMultiset> {
    Ok(drop_one_zero(spectrum_matrix(spec)?.values()))
}

/// Extended spectrum: the entries of `Σ̂(g)` with one 0 removed.
pub fn extended_spectrum(spec: &SeaweedSpec) -> Result<IntegerMultiset> {
    Ok(drop_one_zero(extended_spectrum_matrix(spec)?.values()))
}

/// The diagonal principal element, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalElement {
    pub diag: Vec<Ratio<i64>>,
}

impl PrincipalElement {
    /// Entry for vertex `i` (1-based).
    pub fn entry(&self, i: usize) -> Ratio<i64> {
        self.diag[i - 1]
    }

    pub fn trace(&self) -> Ratio<i64> {
        self.diag.iter().copied().fold(Ratio::from_integer(0), |a, b| a + b)
    }

    /// Eigenvalue of `ad F̂` on `e_{i,j}`.
    pub fn eigenvalue(&self, i: usize, j: usize) -> Ratio<i64> {
        self.entry(i) - self.entry(j)
    }
}

/// `F̂ = Σ (w(P_{i,n}) - mean) e_{i,i}`.
pub fn principal_element(spec: &SeaweedSpec) -> Result<PrincipalElement> {
    let phi = potentials_of(spec)?;
    let n = spec.n() as i64;
    let sum: i64 = phi.as_slice().iter().sum();
    let diag = phi.as_slice().iter().map(|&p| Ratio::new(p * n - sum, n)).collect();
    Ok(PrincipalElement { diag })
}

/// Support of the Frobenius functional `F = Σ e*_{i,j}`: the directed meander edges.
pub fn frobenius_form_support(spec: &SeaweedSpec) -> Result<Vec<(usize, usize)>> {
    let om = orient(&build_meander(spec));
    vertex_potentials(&om)?;
    Ok(om.directed.clone())
}
