//! The Hecke algebra H(Z) of a rank-two poset Z against the Möbius algebra of
//! its lattice of order ideals.

use std::collections::BTreeMap;

use crate::coxeter::DEFAULT_CAP;
use crate::diagram::{CoxeterDiagram, EdgeWeight, SimpleGraph, VertexSet};
use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, SimplyLacedHecke};
use crate::scalar::{Field, Scalar};

use super::independent_sets;

/// Largest poset accepted by the check.
pub const MAX_POSET: usize = 16;

/// A finite poset given by its cover relations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// (upper, lower) pairs.
    covers: Vec<(usize, usize)>,
    below: Vec<VertexSet>,
}

impl Poset {
    pub fn new() -> Self {
        Poset::default()
    }

    pub fn add_element(&mut self, name: &str) -> Result<usize> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateVertex(name.into()));
        }
        if self.names.len() == MAX_POSET {
            return Err(Error::TooManyVertices { count: self.names.len() + 1, limit: MAX_POSET });
        }
        self.names.push(name.into());
        self.below.push(VertexSet::EMPTY);
        Ok(self.names.len() - 1)
    }

    pub fn add_cover(&mut self, upper: usize, lower: usize) -> Result<()> {
        if upper == lower {
            return Err(Error::SelfLoop(self.names[upper].clone()));
        }
        if self.below[upper].contains(lower) || self.below[lower].contains(upper) {
            return Err(Error::Syntax {
                line: 0,
                message: format!("repeated relation between `{}` and `{}`", self.names[upper], self.names[lower]),
            });
        }
        self.covers.push((upper, lower));
        self.below[upper].insert(lower);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    /// Elements lying above some other element.
    pub fn upper(&self) -> VertexSet {
        self.covers.iter().map(|&(u, _)| u).collect()
    }

    /// Rank two: no element is both above and below another.
    pub fn is_rank_two(&self) -> bool {
        let lower: VertexSet = self.covers.iter().map(|&(_, l)| l).collect();
        self.upper().is_disjoint(lower)
    }

    /// Order ideal generated by `set`.
    pub fn ideal(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, v| acc | self.below[v])
    }

    /// All order ideals, by brute force over subsets.
    pub fn ideals(&self) -> Vec<VertexSet> {
        VertexSet::full(self.len()).subsets().filter(|&s| self.ideal(s) == s).collect()
    }

    /// The comparability graph, which for rank two is the Hasse diagram.
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new();
        for n in &self.names {
            g.add_vertex(n).expect("distinct names");
        }
        for &(u, l) in &self.covers {
            g.add_edge(u, l).expect("distinct covers");
        }
        g
    }

    /// Format: `poset` header, then `element <name>` and `cover <upper> <lower>`.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut p = Poset::new();
        let mut header = false;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            for stmt in raw.split('#').next().unwrap_or("").split(';') {
                let words: Vec<&str> = stmt.split_whitespace().collect();
                let syntax = |m: &str| Error::Syntax { line, message: m.into() };
                match words.as_slice() {
                    [] => {}
                    ["poset"] if !header => header = true,
                    _ if !header => return Err(syntax("expected `poset` header")),
                    ["element", name] => {
                        p.add_element(name)?;
                    }
                    ["cover", u, l] => {
                        let (u, l) = (p.index_of(u)?, p.index_of(l)?);
                        p.add_cover(u, l).map_err(|e| match e {
                            Error::Syntax { message, .. } => Error::Syntax { line, message },
                            e => e,
                        })?;
                    }
                    _ => return Err(syntax(&format!("cannot parse `{}`", stmt.trim()))),
                }
            }
        }
        if !header {
            return Err(Error::Syntax { line: 1, message: "expected `poset` header".into() });
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("poset\n");
        for n in &self.names {
            out.push_str(&format!("element {n}\n"));
        }
        for &(u, l) in &self.covers {
            out.push_str(&format!("cover {} {}\n", self.names[u], self.names[l]));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusReport {
    pub elements: usize,
    pub independent_sets: usize,
    pub ideals: usize,
    pub pairs_checked: usize,
    pub failure: Option<String>,
}

impl MoebiusReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn rank(vectors: &[HeckeElement]) -> usize {
    let mut rows: Vec<BTreeMap<usize, Scalar>> = vectors.iter().map(|v| v.coeffs.clone()).collect();
    let mut r = 0;
    while let Some(pos) = rows.iter().position(|row| !row.is_empty()) {
        let pivot_row = rows.swap_remove(pos);
        let (&col, pv) = pivot_row.iter().next().expect("nonempty");
        let inv = pv.inv().expect("nonzero pivot");
        for row in rows.iter_mut() {
            if let Some(c) = row.get(&col).cloned() {
                let f = &c * &inv;
                for (&k, v) in &pivot_row {
                    let e = row.entry(k).or_insert_with(|| v.field().zero());
                    *e = &*e - &(&f * v);
                }
                row.retain(|_, x| !x.is_zero());
            }
        }
        r += 1;
    }
    r
}

/// Builds H(Z) with q = 0 on the upper elements and q = 1 on the lower ones,
/// substitutes T′_y = (T_y + 1)/2, and checks that I ↦ J(I) turns products
/// T′(I₁)T′(I₂) into unions of order ideals.
pub fn moebius_check(z: &Poset, field: Field) -> Result<MoebiusReport> {
    if field.characteristic() == 2 {
        return Err(Error::Characteristic2);
    }
    if !z.is_rank_two() {
        return Err(Error::NotRankTwo("some element lies both above and below others".into()));
    }
    let upper = z.upper();
    let mut d = CoxeterDiagram::new(field);
    for v in 0..z.len() {
        d.add_vertex(z.name(v), if upper.contains(v) { field.zero() } else { field.one() })?;
    }
    for &(u, l) in &z.covers {
        d.add_edge(u, l, EdgeWeight::Finite(3))?;
    }
    let h = SimplyLacedHecke::new(&d, DEFAULT_CAP)?;
    let sets = independent_sets(&z.graph())?;
    let ideals = z.ideals();
    let mut report = MoebiusReport {
        elements: z.len(),
        independent_sets: sets.len(),
        ideals: ideals.len(),
        pairs_checked: 0,
        failure: None,
    };
    let half = field.from_i64(2).inv().expect("characteristic is not 2");
    let generator = |v: usize| -> HeckeElement {
        let t = h.element_of_word(&[v]);
        if upper.contains(v) {
            t
        } else {
            let mut s = t;
            s.add_scaled(&h.one(), &field.one());
            s.scaled(&half)
        }
    };
    let gens: Vec<HeckeElement> = (0..z.len()).map(generator).collect();
    let t_of = |i: VertexSet| i.iter().fold(h.one(), |acc, v| h.multiply(&acc, &gens[v]));
    let elements: BTreeMap<VertexSet, HeckeElement> = sets.iter().map(|&i| (i, t_of(i))).collect();

    for (v, g) in gens.iter().enumerate() {
        if h.multiply(g, g) != *g {
            report.failure = Some(format!("T'_{} is not idempotent", z.name(v)));
            return Ok(report);
        }
    }
    if sets.len() != ideals.len() || h.dim() != sets.len() {
        report.failure = Some(format!(
            "dimension {} vs {} independent sets vs {} ideals",
            h.dim(),
            sets.len(),
            ideals.len()
        ));
        return Ok(report);
    }
    let vectors: Vec<HeckeElement> = elements.values().cloned().collect();
    if rank(&vectors) != sets.len() {
        report.failure = Some("the elements T'(I) are linearly dependent".into());
        return Ok(report);
    }
    let mut seen = std::collections::BTreeSet::new();
    for &i in &sets {
        if !seen.insert(z.ideal(i)) {
            report.failure = Some(format!("two antichains generate the ideal of {}", d.format_set(i)));
            return Ok(report);
        }
    }
    for &a in &sets {
        for &b in &sets {
            report.pairs_checked += 1;
            let union = a | b;
            let meet = union - union.iter().fold(VertexSet::EMPTY, |acc, v| acc | z.below[v]);
            if z.ideal(a) | z.ideal(b) != z.ideal(meet) {
                report.failure = Some(format!("J({}) ∪ J({}) is not J(I₁∘I₂)", d.format_set(a), d.format_set(b)));
                return Ok(report);
            }
            if h.multiply(&elements[&a], &elements[&b]) != elements[&meet] {
                report.failure =
                    Some(format!("T'({})·T'({}) differs from T'(I₁∘I₂)", d.format_set(a), d.format_set(b)));
                return Ok(report);
            }
        }
    }
    Ok(report)
}
