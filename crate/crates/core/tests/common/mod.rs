#![allow(dead_code)]

use std::collections::BTreeSet;

use hecke_core::commutative::Poset;
use hecke_core::{CoxeterDiagram, EdgeWeight, Field, SimpleGraph, VertexSet};

/// Adjacency as bitmasks, one per vertex.
pub type Adj = Vec<u32>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_bits(adj: &Adj, perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut bits = 0u64;
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[perm[u]] >> perm[v] & 1 == 1 {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

fn canonical(adj: &Adj, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| edge_bits(adj, p)).max().expect("nonempty")
}

/// One representative per isomorphism class of graphs on exactly n vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Adj> {
    let mut level: Vec<Adj> = vec![Vec::new()];
    for m in 1..=n {
        let perms = permutations(m);
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0..1u32 << (m - 1) {
                let mut h = g.clone();
                for (v, row) in h.iter_mut().enumerate() {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                h.push(nbrs);
                if seen.insert(canonical(&h, &perms)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn to_graph(adj: &Adj) -> SimpleGraph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
    SimpleGraph::from_edges(n, &edges)
}

pub fn is_bipartite(adj: &Adj) -> bool {
    let n = adj.len();
    let mut colour = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in (0..n).filter(|&v| adj[u] >> v & 1 == 1) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!colour[u].unwrap());
                        stack.push(v);
                    }
                    Some(c) if c == colour[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Simply-laced diagram on a graph with the given parameters.
pub fn diagram(adj: &Adj, params: &[i64]) -> CoxeterDiagram {
    let field = Field::Rational;
    let mut d = CoxeterDiagram::new(field);
    for (v, &q) in params.iter().enumerate() {
        d.add_vertex(&format!("s{}", v + 1), field.from_i64(q)).unwrap();
    }
    for u in 0..adj.len() {
        for v in u + 1..adj.len() {
            if adj[u] >> v & 1 == 1 {
                d.add_edge(u, v, EdgeWeight::Finite(3)).unwrap();
            }
        }
    }
    d
}

/// Independent sets by filtering all subsets.
pub fn brute_independent_count(g: &SimpleGraph) -> u128 {
    VertexSet::full(g.len()).subsets().filter(|&s| g.edges().all(|(u, v)| !(s.contains(u) && s.contains(v)))).count()
        as u128
}

/// D_n with n vertices: a path 1..n−2 with two leaves on vertex n−2.
pub fn d_graph(n: usize) -> SimpleGraph {
    if n == 2 {
        return SimpleGraph::empty(2);
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
    edges.push((n - 3, n - 1));
    SimpleGraph::from_edges(n, &edges)
}

/// Affine D̃ with k vertices: a path of k−2 vertices with extra leaves on
/// its second and second-to-last vertices.
pub fn affine_d_graph(k: usize) -> SimpleGraph {
    let m = k - 2;
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    edges.push((1, m));
    edges.push((m - 2, m + 1));
    SimpleGraph::from_edges(k, &edges)
}

/// Rank-two posets on n elements up to isomorphism. Each upper element has a
/// nonempty set of lower covers; lower elements may be isolated.
pub fn rank_two_posets(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    for upper in 0..=n {
        let lower = n - upper;
        if upper > 0 && lower == 0 {
            continue;
        }
        let perms = permutations(lower);
        let mut seen = BTreeSet::new();
        let subsets: Vec<u32> = (1..1u32 << lower).collect();
        // multisets of `upper` nonempty subsets of the lower elements
        let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
        while let Some(chosen) = stack.pop() {
            if chosen.len() == upper {
                let key = perms
                    .iter()
                    .map(|p| {
                        let mut rows: Vec<u32> = chosen
                            .iter()
                            .map(|&s| (0..lower).filter(|&i| s >> i & 1 == 1).fold(0, |acc, i| acc | 1 << p[i]))
                            .collect();
                        rows.sort_unstable();
                        rows
                    })
                    .min()
                    .expect("nonempty");
                if seen.insert(key) {
                    let mut poset = Poset::new();
                    for i in 0..upper {
                        poset.add_element(&format!("x{}", i + 1)).unwrap();
                    }
                    for j in 0..lower {
                        poset.add_element(&format!("y{}", j + 1)).unwrap();
                    }
                    for (i, &s) in chosen.iter().enumerate() {
                        for j in (0..lower).filter(|&j| s >> j & 1 == 1) {
                            poset.add_cover(i, upper + j).unwrap();
                        }
                    }
                    out.push(poset);
                }
                continue;
            }
            let start = chosen.last().copied().unwrap_or(1);
            for &s in subsets.iter().filter(|&&s| s >= start) {
                let mut c = chosen.clone();
                c.push(s);
                stack.push(c);
            }
        }
    }
    out
}

/// F_k by the defining recurrence.
pub fn fib(k: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
