//! Meander construction, path/cycle decomposition and index formulas.
//!
//! Vertices are numbered `1..=n`. Each block `[s, e]` of the top composition
//! contributes the nested top edges `{s, e}, {s+1, e-1}, ...`; the bottom
//! composition does the same below the line. Every vertex therefore has at
//! most one top partner and one bottom partner, so each connected component
//! is a simple path (possibly a single vertex) or a simple cycle.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::composition::{Composition, SeaweedSpec};

/// The meander graph of a seaweed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    spec: SeaweedSpec,
    top: Vec<Option<usize>>,
    bottom: Vec<Option<usize>>,
}

impl Meander {
    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn spec(&self) -> &SeaweedSpec {
        &self.spec
    }

    pub fn top_partner(&self, v: usize) -> Option<usize> {
        self.top[v]
    }

    pub fn bottom_partner(&self, v: usize) -> Option<usize> {
        self.bottom[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        usize::from(self.top[v].is_some()) + usize::from(self.bottom[v].is_some())
    }

    /// Top edges as `(p, q)` with `p < q`, sorted.
    pub fn top_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.top)
    }

    /// Bottom edges as `(p, q)` with `p < q`, sorted.
    pub fn bottom_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.bottom)
    }

    pub fn edge_count(&self) -> usize {
        self.top_edges().len() + self.bottom_edges().len()
    }
}

fn edges_of(partner: &[Option<usize>]) -> Vec<(usize, usize)> {
    partner
        .iter()
        .enumerate()
        .filter_map(|(p, q)| q.filter(|&q| p < q).map(|q| (p, q)))
        .collect()
}

fn nested_arcs(c: &Composition, n: usize) -> Vec<Option<usize>> {
    let mut partner = vec![None; n + 1];
    for (s, e) in c.blocks() {
        let (mut p, mut q) = (s, e);
        while p < q {
            partner[p] = Some(q);
            partner[q] = Some(p);
            p += 1;
            q -= 1;
        }
    }
    partner
}

pub fn build_meander(spec: &SeaweedSpec) -> Meander {
    let n = spec.n();
    Meander {
        top: nested_arcs(spec.top(), n),
        bottom: nested_arcs(spec.bottom(), n),
        spec: spec.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// Path/cycle decomposition. Each component lists its vertices in walk
/// order: paths start at their lower-numbered endpoint, cycles at their
/// lowest vertex and leave it along its top edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub paths: usize,
    pub cycles: usize,
    pub components: Vec<(ComponentKind, Vec<usize>)>,
}

impl ComponentSummary {
    /// `2C + P`: the index of the `gl(n)` seaweed.
    pub fn index_gl(&self) -> usize {
        2 * self.cycles + self.paths
    }

    /// `2C + P - 1`: the index of the type-A seaweed.
    pub fn index_sl(&self) -> usize {
        self.index_gl() - 1
    }

    pub fn is_single_path(&self) -> bool {
        self.paths == 1 && self.cycles == 0
    }
}

/// Walks from `start`, leaving along its top edge when it has one, then alternating sides.
fn walk(m: &Meander, start: usize, visited: &mut [bool]) -> Vec<usize> {
    let mut order = vec![start];
    visited[start] = true;
    let mut cur = start;
    let mut use_top = m.top[start].is_some();
    loop {
        let next = if use_top { m.top[cur] } else { m.bottom[cur] };
        match next {
            Some(v) if !visited[v] => {
                visited[v] = true;
                order.push(v);
                cur = v;
                use_top = !use_top;
            }
            _ => break,
        }
    }
    order
}

pub fn components(m: &Meander) -> ComponentSummary {
    let n = m.n();
    let mut visited = vec![false; n + 1];
    let mut found = Vec::new();
    for v in 1..=n {
        if !visited[v] && m.degree(v) <= 1 {
            found.push((ComponentKind::Path, walk(m, v, &mut visited)));
        }
    }
    for v in 1..=n {
        if !visited[v] {
            found.push((ComponentKind::Cycle, walk(m, v, &mut visited)));
        }
    }
    let paths = found.iter().filter(|(k, _)| *k == ComponentKind::Path).count();
    ComponentSummary { paths, cycles: found.len() - paths, components: found }
}

/// Index of the `gl(n)` seaweed, `2C + P`.
pub fn index_gl(spec: &SeaweedSpec) -> usize {
    components(&build_meander(spec)).index_gl()
}

/// Index of the type-A seaweed, `2C + P - 1`.
pub fn index_sl(spec: &SeaweedSpec) -> usize {
    components(&build_meander(spec)).index_sl()
}

pub fn is_frobenius(spec: &SeaweedSpec) -> bool {
    components(&build_meander(spec)).is_single_path()
}

/// Index of `p^A a|b / a+b` by the gcd formula.
pub fn index_gcd_maximal_parabolic(a: usize, b: usize) -> usize {
    a.gcd(&b) - 1
}

/// Index of `p^A a|b|c / a+b+c` (and of the four-part `a|b / c|d` shape)
/// by the gcd formula `gcd(a+b, b+c) - 1`.
pub fn index_gcd_three_part(a: usize, b: usize, c: usize) -> usize {
    (a + b).gcd(&(b + c)) - 1
}
