//! Meander index against closed gcd forms and an independent
//! union-find component count.

use seaweed_core::{
    compositions_of, index_gcd_maximal_parabolic, index_gcd_three_part, index_sl, SeaweedSpec,
};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    parent[x] = root;
    root
}

/// Index from scratch: build the edge list, count components with
/// union-find, and call a component a cycle when it has as many edges
/// as vertices.
fn index_oracle(top: &[usize], bottom: &[usize]) -> usize {
    let n: usize = top.iter().sum();
    let mut edges = Vec::new();
    for parts in [top, bottom] {
        let mut start = 0;
        for &a in parts {
            let (mut p, mut q) = (start, start + a - 1);
            while p < q {
                edges.push((p, q));
                p += 1;
                q -= 1;
            }
            start += a;
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &(p, q) in &edges {
        let (a, b) = (find(&mut parent, p), find(&mut parent, q));
        parent[a] = b;
    }
    let mut vertices = vec![0usize; n];
    let mut edge_count = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        vertices[r] += 1;
    }
    for &(p, _) in &edges {
        let r = find(&mut parent, p);
        edge_count[r] += 1;
    }
    let (mut paths, mut cycles) = (0, 0);
    for v in 0..n {
        if vertices[v] > 0 {
            if edge_count[v] == vertices[v] { cycles += 1 } else { paths += 1 }
        }
    }
    2 * cycles + paths - 1
}

#[test]
fn maximal_parabolic_gcd() {
    for a in 1..=80 {
        for b in 1..=80 {
            let g = SeaweedSpec::from_parts(&[a, b], &[a + b]).unwrap();
            assert_eq!(index_sl(&g), gcd(a, b) - 1, "{g}");
            assert_eq!(index_gcd_maximal_parabolic(a, b), gcd(a, b) - 1);
        }
    }
}

#[test]
fn three_part_and_two_by_two_gcd() {
    for a in 1..=30 {
        for b in 1..=30 {
            for c in 1..=30 {
                let expected = gcd(a + b, b + c) - 1;
                let three = SeaweedSpec::from_parts(&[a, b, c], &[a + b + c]).unwrap();
                assert_eq!(index_sl(&three), expected, "{three}");
                if a + b > c {
                    let square = SeaweedSpec::from_parts(&[a, b], &[c, a + b - c]).unwrap();
                    assert_eq!(index_sl(&square), expected, "{square}");
                }
                assert_eq!(index_gcd_three_part(a, b, c), expected);
            }
        }
    }
}

#[test]
fn every_pair_matches_union_find() {
    for n in 1..=9 {
        let comps: Vec<_> = compositions_of(n).unwrap().collect();
        for a in &comps {
            for b in &comps {
                let g = SeaweedSpec::new(a.clone(), b.clone()).unwrap();
                assert_eq!(index_sl(&g), index_oracle(a.parts(), b.parts()), "{g}");
            }
        }
    }
}
