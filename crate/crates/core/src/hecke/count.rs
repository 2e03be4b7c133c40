use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::block_partition;
use crate::commutative::count_independent_sets;
use crate::coxeter::{factorial, group_order, Cardinal};
use crate::diagram::{CoxeterDiagram, SimpleGraph, VertexSet};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Largest boundary (zero-block vertices adjacent to other blocks) handled by
/// the subset transform in [`count_wq`].
const MAX_BOUNDARY: usize = 20;

/// Default largest n for [`min_dimension_scan_type_a`].
pub const DEFAULT_SCAN_BOUND: usize = 9;

fn order_of(d: &CoxeterDiagram, set: VertexSet) -> Result<BigUint> {
    match group_order(&d.induced_subdiagram(set)?) {
        Cardinal::Finite(n) => Ok(n),
        Cardinal::Infinite => Err(Error::NotFinite(d.format_set(set))),
    }
}

/// |W(q)| without enumerating it.
///
/// Only zero-parameter blocks dominate, and only nonzero blocks are
/// dominated. For each zero block the elements are counted by the set of
/// boundary generators in their support (inclusion–exclusion over parabolic
/// orders), which fixes the blocks they dominate; the undominated nonzero
/// blocks then contribute their full group orders.
pub fn count_wq(d: &CoxeterDiagram) -> Result<BigUint> {
    let p = block_partition(d)?;
    let mut orders = Vec::with_capacity(p.len());
    for b in &p.blocks {
        orders.push(order_of(d, *b)?);
    }
    let mut dist: HashMap<u64, BigUint> = HashMap::from([(0, BigUint::one())]);
    for (i, block) in p.blocks.iter().enumerate() {
        if !p.is_zero_block(i) {
            continue;
        }
        let boundary: Vec<usize> = block.iter().filter(|&s| p.dominated_by_vertex[s] != 0).collect();
        if boundary.len() > MAX_BOUNDARY {
            return Err(Error::OutOfRange {
                what: "zero-block boundary size".into(),
                value: boundary.len(),
                max: MAX_BOUNDARY,
            });
        }
        let k = boundary.len();
        let full = 1usize << k;
        let subset = |mask: usize| -> VertexSet {
            (0..k).filter(|b| mask >> b & 1 == 1).map(|b| boundary[b]).collect()
        };
        // g(U) = #elements whose boundary support lies inside U
        let mut f: Vec<BigInt> = (0..full)
            .map(|u| {
                let avoid = subset((full - 1) & !u);
                order_of(d, *block - avoid).map(BigInt::from)
            })
            .collect::<Result<_>>()?;
        // Möbius inversion over the subset lattice
        for bit in 0..k {
            for mask in 0..full {
                if mask >> bit & 1 == 1 {
                    let lower = f[mask ^ 1 << bit].clone();
                    f[mask] -= lower;
                }
            }
        }
        let mut local: HashMap<u64, BigUint> = HashMap::new();
        for (mask, count) in f.into_iter().enumerate() {
            let count = count.to_biguint().expect("exact counts are nonnegative");
            if count.is_zero() {
                continue;
            }
            let dom = p.dominated_by_support(subset(mask));
            *local.entry(dom).or_default() += count;
        }
        let mut next: HashMap<u64, BigUint> = HashMap::new();
        for (m1, c1) in &dist {
            for (m2, c2) in &local {
                *next.entry(m1 | m2).or_default() += c1 * c2;
            }
        }
        dist = next;
    }
    let mut total = BigUint::zero();
    for (mask, count) in dist {
        let mut term = count;
        for (j, order) in orders.iter().enumerate() {
            if !p.is_zero_block(j) && mask >> j & 1 == 0 {
                term *= order;
            }
        }
        total += term;
    }
    Ok(total)
}

/// |W_{A_L ∖ removed}| for a path of length `len`, `removed` ⊆ positions.
fn path_avoiding(len: usize, removed: &[usize]) -> BigUint {
    let mut total = BigUint::one();
    let mut run = 0;
    for i in 0..len {
        if removed.contains(&i) {
            total *= factorial(run + 1);
            run = 0;
        } else {
            run += 1;
        }
    }
    total * factorial(run + 1)
}

/// |W(q)| for a path whose parameters follow `pattern` (0 = zero parameter,
/// anything else = the common nonzero parameter), by dynamic programming over
/// maximal runs.
pub fn count_wq_type_a(pattern: &[u8]) -> BigUint {
    let mut runs: Vec<(bool, usize)> = Vec::new();
    for &c in pattern {
        let zero = c == 0;
        match runs.last_mut() {
            Some((z, len)) if *z == zero => *len += 1,
            _ => runs.push((zero, 1)),
        }
    }
    // dp[flag]: weight so far, with the pending nonzero run (if any) already
    // dominated from the left when flag is set
    let mut dp = [BigUint::one(), BigUint::zero()];
    let mut pending: Option<usize> = None;
    for (idx, &(zero, len)) in runs.iter().enumerate() {
        if !zero {
            pending = Some(len);
            continue;
        }
        let has_left = pending.is_some();
        let has_right = idx + 1 < runs.len();
        let mut boundary: Vec<usize> = Vec::new();
        if has_left {
            boundary.push(0);
        }
        if has_right && !boundary.contains(&(len - 1)) {
            boundary.push(len - 1);
        }
        let k = boundary.len();
        let mut f: Vec<BigInt> = (0..1usize << k)
            .map(|u| {
                let removed: Vec<usize> = (0..k).filter(|b| u >> b & 1 == 0).map(|b| boundary[b]).collect();
                BigInt::from(path_avoiding(len, &removed))
            })
            .collect();
        for bit in 0..k {
            for mask in 0..1usize << k {
                if mask >> bit & 1 == 1 {
                    let lower = f[mask ^ 1 << bit].clone();
                    f[mask] -= lower;
                }
            }
        }
        let mut next = [BigUint::zero(), BigUint::zero()];
        for (mask, count) in f.into_iter().enumerate() {
            let count = count.to_biguint().expect("nonnegative");
            let used = |pos: usize| boundary.iter().position(|&b| b == pos).is_some_and(|b| mask >> b & 1 == 1);
            let dom_left = has_left && used(0);
            let dom_right = has_right && used(len - 1);
            for (flag, weight) in dp.iter().enumerate() {
                if weight.is_zero() {
                    continue;
                }
                let mut w = weight * &count;
                if let Some(p) = pending {
                    if flag == 0 && !dom_left {
                        w *= factorial(p + 1);
                    }
                }
                next[usize::from(dom_right)] += w;
            }
        }
        dp = next;
        pending = None;
    }
    match pending {
        Some(p) => &dp[0] * factorial(p + 1) + &dp[1],
        None => &dp[0] + &dp[1],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDimScan {
    pub n: usize,
    pub minimum: BigUint,
    /// Patterns attaining the minimum, as strings of 0/1, sorted.
    pub argmin: Vec<String>,
}

/// Minimum of |W(q)| over all 2^n zero/nonzero patterns on the path A_n.
pub fn min_dimension_scan_type_a(n: usize, bound: usize) -> Result<MinDimScan> {
    if n > bound {
        return Err(Error::OutOfRange { what: "n".into(), value: n, max: bound });
    }
    let mut minimum: Option<BigUint> = None;
    let mut argmin = Vec::new();
    for mask in 0..1u64 << n {
        let pattern: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
        let dim = count_wq_type_a(&pattern);
        let text: String = pattern.iter().map(|&b| char::from(b'0' + b)).collect();
        match &minimum {
            Some(m) if dim > *m => {}
            Some(m) if dim == *m => argmin.push(text),
            _ => {
                minimum = Some(dim);
                argmin = vec![text];
            }
        }
    }
    argmin.sort();
    Ok(MinDimScan { n, minimum: minimum.expect("at least one pattern"), argmin })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub vertices: usize,
    pub bipartite: bool,
    pub independent_sets: BigUint,
    pub patterns_checked: usize,
    /// Patterns skipped because some block has infinite type.
    pub skipped: Vec<String>,
    pub minimum: Option<BigUint>,
    pub argmin: Vec<String>,
    /// Set when the minimum differs from the independent-set count.
    pub counterexample: bool,
}

/// Scans every zero/nonzero pattern on a simply-laced diagram and compares
/// the minimum dimension with the number of independent sets.
pub fn conjecture_scan(d: &CoxeterDiagram) -> Result<ConjectureReport> {
    if !d.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    const MAX_SCAN: usize = 16;
    let n = d.len();
    if n > MAX_SCAN {
        return Err(Error::OutOfRange { what: "vertex count".into(), value: n, max: MAX_SCAN });
    }
    let graph = SimpleGraph::from_diagram(d);
    let independent_sets = BigUint::from(count_independent_sets(&graph)?);
    let mut report = ConjectureReport {
        vertices: n,
        bipartite: is_bipartite(&graph),
        independent_sets,
        patterns_checked: 0,
        skipped: Vec::new(),
        minimum: None,
        argmin: Vec::new(),
        counterexample: false,
    };
    let field = Field::Rational;
    for mask in 0..1u64 << n {
        let text: String = (0..n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
        let mut pd = CoxeterDiagram::new(field);
        for v in 0..n {
            pd.add_vertex(d.name(v), field.from_i64((mask >> v & 1) as i64))?;
        }
        for (u, v, w) in d.edges() {
            pd.add_edge(u, v, w)?;
        }
        let dim = match count_wq(&pd) {
            Ok(x) => x,
            Err(Error::NotFinite(_)) => {
                report.skipped.push(text);
                continue;
            }
            Err(e) => return Err(e),
        };
        report.patterns_checked += 1;
        match &report.minimum {
            Some(m) if dim > *m => {}
            Some(m) if dim == *m => report.argmin.push(text),
            _ => {
                report.minimum = Some(dim);
                report.argmin = vec![text];
            }
        }
    }
    report.argmin.sort();
    report.counterexample = report.minimum.as_ref().is_some_and(|m| *m != report.independent_sets);
    Ok(report)
}

fn is_bipartite(g: &SimpleGraph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.len()];
    for start in 0..g.len() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let c = colour[u].expect("coloured");
            for v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!c);
                        stack.push(v);
                    }
                    Some(x) if x == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}
