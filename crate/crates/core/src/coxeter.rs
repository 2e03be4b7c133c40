//! Coxeter group machinery: classification of connected diagrams and
//! element enumeration for simply-laced finite types.
//!
//! Elements are identified by the orbit point w(ρ) written in fundamental
//! weight coordinates. For simply-laced Cartan matrices this is an integer
//! vector, and coordinate i is negative exactly when s_i is a left descent
//! of w, which gives both the length order and the lex-least reduced word.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::diagram::{CoxeterDiagram, EdgeWeight, VertexSet};
use crate::error::{Error, Result};

/// Default limit on the number of group elements enumerated.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    /// Types B and C share a diagram.
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    NotFinite,
}

/// A group order, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cardinal {
    Finite(BigUint),
    Infinite,
}

impl Cardinal {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Cardinal::Finite(n) => Some(n),
            Cardinal::Infinite => None,
        }
    }
}

impl std::ops::Mul for Cardinal {
    type Output = Cardinal;
    fn mul(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a * b),
            _ => Cardinal::Infinite,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
    pub order: Cardinal,
}

impl TypeLabel {
    fn finite(family: Family, rank: usize) -> Self {
        let order = match family {
            Family::A => factorial(rank + 1),
            Family::B => (BigUint::one() << rank) * factorial(rank),
            Family::D => (BigUint::one() << (rank - 1)) * factorial(rank),
            Family::E6 => BigUint::from(51_840u32),
            Family::E7 => BigUint::from(2_903_040u32),
            Family::E8 => BigUint::from(696_729_600u32),
            Family::F4 => BigUint::from(1152u32),
            Family::H3 => BigUint::from(120u32),
            Family::H4 => BigUint::from(14_400u32),
            Family::I2(m) => BigUint::from(2 * m),
            Family::NotFinite => unreachable!(),
        };
        TypeLabel { family, rank, order: Cardinal::Finite(order) }
    }

    fn not_finite(rank: usize) -> Self {
        TypeLabel { family: Family::NotFinite, rank, order: Cardinal::Infinite }
    }

    pub fn is_finite(&self) -> bool {
        self.family != Family::NotFinite
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2(m) => write!(f, "I2({m})"),
            Family::NotFinite => write!(f, "infinite(rank {})", self.rank),
            other => write!(f, "{other:?}"),
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Classifies a connected diagram against the finite-type list. Parameters
/// are ignored.
pub fn classify_component(d: &CoxeterDiagram) -> TypeLabel {
    assert!(d.is_connected(), "classify_component needs a connected diagram");
    let n = d.len();
    let edges: Vec<(usize, usize, EdgeWeight)> = d.edges().collect();
    if n <= 1 {
        return TypeLabel::finite(Family::A, n);
    }
    if edges.iter().any(|e| e.2 == EdgeWeight::Infinite) || edges.len() != n - 1 {
        return TypeLabel::not_finite(n);
    }
    if n == 2 {
        let m = edges[0].2.finite().expect("finite");
        return if m == 3 {
            TypeLabel::finite(Family::A, 2)
        } else {
            TypeLabel::finite(Family::I2(m), 2)
        };
    }
    let degree: Vec<usize> = (0..n).map(|v| d.neighbors(v).len()).collect();
    let heavy: Vec<&(usize, usize, EdgeWeight)> =
        edges.iter().filter(|e| e.2 != EdgeWeight::Finite(3)).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();

    if heavy.is_empty() {
        if branch.is_empty() {
            return TypeLabel::finite(Family::A, n);
        }
        if branch.len() > 1 || degree[branch[0]] > 3 {
            return TypeLabel::not_finite(n);
        }
        let centre = branch[0];
        let mut arms: Vec<usize> = d
            .neighbors(centre)
            .iter()
            .map(|start| arm_length(d, centre, start))
            .collect();
        arms.sort_unstable();
        return match arms[..] {
            [1, 1, _] => TypeLabel::finite(Family::D, n),
            [1, 2, 2] => TypeLabel::finite(Family::E6, n),
            [1, 2, 3] => TypeLabel::finite(Family::E7, n),
            [1, 2, 4] => TypeLabel::finite(Family::E8, n),
            _ => TypeLabel::not_finite(n),
        };
    }
    if heavy.len() > 1 || !branch.is_empty() {
        return TypeLabel::not_finite(n);
    }
    let (u, v, w) = *heavy[0];
    let at_end = degree[u] == 1 || degree[v] == 1;
    match (w, at_end, n) {
        (EdgeWeight::Finite(4), true, _) => TypeLabel::finite(Family::B, n),
        (EdgeWeight::Finite(4), false, 4) => TypeLabel::finite(Family::F4, 4),
        (EdgeWeight::Finite(5), true, 3) => TypeLabel::finite(Family::H3, 3),
        (EdgeWeight::Finite(5), true, 4) => TypeLabel::finite(Family::H4, 4),
        _ => TypeLabel::not_finite(n),
    }
}

fn arm_length(d: &CoxeterDiagram, from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = d.neighbors(cur).without(prev);
        match next.min() {
            Some(nx) if next.len() == 1 => {
                prev = cur;
                cur = nx;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Type labels of every connected component, in component order.
pub fn classify(d: &CoxeterDiagram) -> Vec<TypeLabel> {
    d.connected_components()
        .into_iter()
        .map(|c| classify_component(&d.induced_subdiagram(c).expect("subset of vertices")))
        .collect()
}

/// |W| for an arbitrary diagram, via classification.
pub fn group_order(d: &CoxeterDiagram) -> Cardinal {
    classify(d)
        .into_iter()
        .fold(Cardinal::Finite(BigUint::one()), |acc, t| acc * t.order)
}

/// |W_{S∖B}|: the number of elements whose support avoids `avoid`.
pub fn elements_avoiding(d: &CoxeterDiagram, avoid: VertexSet) -> Result<BigUint> {
    let sub = d.induced_subdiagram(d.vertices() - avoid)?;
    match group_order(&sub) {
        Cardinal::Finite(n) => Ok(n),
        Cardinal::Infinite => Err(Error::NotFinite(d.format_set(d.vertices() - avoid))),
    }
}

/// An element together with its canonical data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    /// Lexicographically least reduced word, as local vertex indices.
    pub word: Vec<usize>,
    pub length: usize,
    pub support: VertexSet,
    /// Column j is the image of the simple root α_j in root coordinates.
    pub matrix: Vec<Vec<i64>>,
}

/// All elements of a finite simply-laced Coxeter group, sorted by length and
/// then by canonical word. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteCoxeterGroup {
    rank: usize,
    words: Vec<Box<[u8]>>,
    supports: Vec<VertexSet>,
    left_mul: Vec<u32>,
    neighbors: Vec<VertexSet>,
}

impl FiniteCoxeterGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, id: u32) -> &[u8] {
        &self.words[id as usize]
    }

    pub fn length(&self, id: u32) -> usize {
        self.words[id as usize].len()
    }

    pub fn support(&self, id: u32) -> VertexSet {
        self.supports[id as usize]
    }

    /// Id of s·w.
    pub fn left_mul(&self, s: usize, id: u32) -> u32 {
        self.left_mul[id as usize * self.rank + s]
    }

    /// Evaluates a word (not necessarily reduced).
    pub fn evaluate(&self, word: &[usize]) -> u32 {
        word.iter().rev().fold(0, |id, &s| self.left_mul(s, id))
    }

    pub fn element(&self, id: u32) -> GroupElement {
        let word: Vec<usize> = self.word(id).iter().map(|&s| s as usize).collect();
        GroupElement {
            length: word.len(),
            support: self.support(id),
            matrix: root_matrix(self.rank, &self.neighbors, &word),
            word,
        }
    }
}

/// Applies a word to the simple roots under the geometric representation.
pub fn root_matrix(rank: usize, neighbors: &[VertexSet], word: &[usize]) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> =
        (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
    for &s in word.iter().rev() {
        // s acts on root coordinates: only row s changes.
        let mut new_row: Vec<i64> = rows[s].iter().map(|x| -x).collect();
        for k in neighbors[s] {
            for (acc, x) in new_row.iter_mut().zip(&rows[k]) {
                *acc += x;
            }
        }
        rows[s] = new_row;
    }
    rows
}

/// Enumerates a finite simply-laced Coxeter group (any number of
/// components). Fails with `CapExceeded` when |W| > `cap`.
pub fn enumerate_group(d: &CoxeterDiagram, cap: usize) -> Result<FiniteCoxeterGroup> {
    if !d.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let order = match group_order(d) {
        Cardinal::Finite(n) => n,
        Cardinal::Infinite => {
            let bad = classify(d).iter().position(|t| !t.is_finite()).expect("some component");
            return Err(Error::NotFinite(d.format_set(d.connected_components()[bad])));
        }
    };
    if order > BigUint::from(cap) {
        return Err(Error::CapExceeded { required: order.to_string(), cap });
    }
    let n = d.len();
    let size: usize = order.try_into().expect("below cap");
    let neighbors: Vec<VertexSet> = (0..n).map(|v| d.neighbors(v)).collect();

    // s_i(λ) = λ − λ_i·α_i with α_i = row i of the Cartan matrix.
    let reflect = |lambda: &[i16], s: usize| -> Vec<i16> {
        let mut out = lambda.to_vec();
        let c = lambda[s];
        out[s] -= 2 * c;
        for k in neighbors[s] {
            out[k] += c;
        }
        out
    };

    let mut points: Vec<Vec<i16>> = vec![vec![1; n]];
    let mut index: HashMap<Vec<i16>, u32> = HashMap::with_capacity(size);
    index.insert(points[0].clone(), 0);
    let mut words: Vec<Box<[u8]>> = vec![Box::new([])];
    let mut supports = vec![VertexSet::EMPTY];
    let mut layer_start = 0;
    while layer_start < points.len() {
        let layer_end = points.len();
        for id in layer_start..layer_end {
            for s in 0..n {
                if points[id][s] <= 0 {
                    continue;
                }
                let next = reflect(&points[id], s);
                if index.contains_key(&next) {
                    continue;
                }
                // lex-least word: smallest left descent, then the canonical
                // word of the shorter element
                let first = next.iter().position(|&x| x < 0).expect("nontrivial");
                let tail = index[&reflect(&next, first)] as usize;
                let mut word = Vec::with_capacity(words[tail].len() + 1);
                word.push(first as u8);
                word.extend_from_slice(&words[tail]);
                let new_id = points.len() as u32;
                index.insert(next.clone(), new_id);
                supports.push(supports[tail].with(first));
                words.push(word.into_boxed_slice());
                points.push(next);
            }
        }
        // keep each length layer sorted by canonical word
        let mut order: Vec<usize> = (layer_end..points.len()).collect();
        order.sort_by(|&a, &b| words[a].cmp(&words[b]));
        permute_tail(&mut words, layer_end, &order);
        permute_tail(&mut points, layer_end, &order);
        permute_tail(&mut supports, layer_end, &order);
        for (i, p) in points.iter().enumerate().skip(layer_end) {
            index.insert(p.clone(), i as u32);
        }
        layer_start = layer_end;
    }
    debug_assert_eq!(points.len(), size);

    let mut left_mul = vec![0u32; size * n];
    for (id, p) in points.iter().enumerate() {
        for s in 0..n {
            left_mul[id * n + s] = index[&reflect(p, s)];
        }
    }
    Ok(FiniteCoxeterGroup { rank: n, words, supports, left_mul, neighbors })
}

fn permute_tail<T: Default>(v: &mut Vec<T>, start: usize, order: &[usize]) {
    let tail: Vec<T> = order.iter().map(|&i| std::mem::take(&mut v[i])).collect();
    v.truncate(start);
    v.extend(tail);
}
