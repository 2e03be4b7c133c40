//! Hecke algebras of simply-laced diagrams with independent parameters,
//! realised on the basis indexed by W(q), plus the dimension dispatcher and
//! the type-A counting tools.

mod count;
mod dimension;
mod module;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::collapse::collapse_violation;
use crate::coxeter::{classify_component, enumerate_group, FiniteCoxeterGroup};
use crate::diagram::{CoxeterDiagram, VertexSet};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub use count::{
    conjecture_scan, count_wq, count_wq_type_a, min_dimension_scan_type_a, ConjectureReport,
    MinDimScan, DEFAULT_SCAN_BOUND,
};
pub use dimension::{dimension, Dimension};
pub use module::{verify_relations, DihedralZeroModule, HeckeModule, RelationReport};

/// The blocks S_1, …, S_k: components of the diagram after deleting every edge
/// whose endpoints carry different parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    pub blocks: Vec<VertexSet>,
    pub block_params: Vec<Scalar>,
    pub block_of: Vec<usize>,
    /// For each vertex s, the blocks j ≠ block(s) that s dominates: q_s = 0 and
    /// s has a weight-3 edge into S_j. Bit j of the mask.
    pub dominated_by_vertex: Vec<u64>,
}

impl BlockPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks dominated by an element of block `i` with the given support.
    pub fn dominated_by_support(&self, support: VertexSet) -> u64 {
        support.iter().fold(0, |acc, s| acc | self.dominated_by_vertex[s])
    }

    /// Whether an element with `support` dominates block `j`.
    pub fn dominates(&self, support: VertexSet, j: usize) -> bool {
        self.dominated_by_support(support) >> j & 1 == 1
    }

    pub fn is_zero_block(&self, i: usize) -> bool {
        self.block_params[i].is_zero()
    }
}

/// Partitions a collapse-free simply-laced diagram into blocks.
pub fn block_partition(d: &CoxeterDiagram) -> Result<BlockPartition> {
    if !d.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    if let Some((u, v)) = collapse_violation(d) {
        return Err(Error::NotCollapseFree(d.name(u).into(), d.name(v).into()));
    }
    let blocks = d.components_where(d.vertices(), |u, v, _| d.param(u) == d.param(v));
    if blocks.len() > 64 {
        return Err(Error::TooManyVertices { count: blocks.len(), limit: 64 });
    }
    let mut block_of = vec![0; d.len()];
    for (i, b) in blocks.iter().enumerate() {
        for v in *b {
            block_of[v] = i;
        }
    }
    let dominated_by_vertex = (0..d.len())
        .map(|s| {
            if !d.param(s).is_zero() {
                return 0;
            }
            d.neighbors(s)
                .iter()
                .filter(|&t| block_of[t] != block_of[s])
                .fold(0u64, |acc, t| acc | 1 << block_of[t])
        })
        .collect();
    Ok(BlockPartition {
        block_params: blocks.iter().map(|b| d.param(VertexSet::min(*b).expect("nonempty")).clone()).collect(),
        blocks,
        block_of,
        dominated_by_vertex,
    })
}

/// A tuple (w_1, …, w_k) of element ids, one per block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WqIndex(pub Vec<u32>);

/// A sparse combination of W(q) basis elements, keyed by basis position.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    pub coeffs: BTreeMap<usize, Scalar>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn basis(index: usize, field: Field) -> Self {
        let mut e = HeckeElement::zero();
        e.coeffs.insert(index, field.one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&index) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.coeffs.remove(&index);
                }
            }
            None => {
                self.coeffs.insert(index, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElement, c: &Scalar) {
        for (&i, v) in &other.coeffs {
            self.add_term(i, &(c * v));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> HeckeElement {
        let mut out = HeckeElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&i, v) in &other.coeffs {
            out.add_term(i, &-v);
        }
        out
    }
}

/// The algebra H(q) of a collapse-free simply-laced diagram with finite
/// blocks, acting on its regular module with basis W(q).
#[derive(Debug, Clone)]
pub struct SimplyLacedHecke {
    diagram: CoxeterDiagram,
    partition: BlockPartition,
    groups: Vec<FiniteCoxeterGroup>,
    /// Global vertex indices of each block, in local index order.
    members: Vec<Vec<usize>>,
    local: Vec<usize>,
    /// Per block and element id: mask of blocks it dominates.
    element_dom: Vec<Vec<u64>>,
    basis: Vec<WqIndex>,
    /// Per basis element: mask of blocks dominated by some coordinate.
    dominated: Vec<u64>,
    index: HashMap<WqIndex, usize>,
}

impl SimplyLacedHecke {
    /// Builds the basis. Fails on non-simply-laced, non-collapse-free, or
    /// infinite-block input, and when |W(q)| or some |W_i| exceeds `cap`.
    pub fn new(d: &CoxeterDiagram, cap: usize) -> Result<Self> {
        let partition = block_partition(d)?;
        let mut groups = Vec::new();
        let mut members = Vec::new();
        let mut local = vec![0; d.len()];
        for b in &partition.blocks {
            let sub = d.induced_subdiagram(*b)?;
            if !classify_component(&sub).is_finite() {
                return Err(Error::NotFinite(d.format_set(*b)));
            }
            groups.push(enumerate_group(&sub, cap)?);
            let m: Vec<usize> = b.iter().collect();
            for (l, &g) in m.iter().enumerate() {
                local[g] = l;
            }
            members.push(m);
        }
        let total = count_wq(d)?;
        if total > num_bigint::BigUint::from(cap) {
            return Err(Error::CapExceeded { required: total.to_string(), cap });
        }
        let element_dom: Vec<Vec<u64>> = groups
            .iter()
            .zip(&members)
            .map(|(g, m)| {
                (0..g.len() as u32)
                    .map(|id| {
                        let global: VertexSet = g.support(id).iter().map(|l| m[l]).collect();
                        partition.dominated_by_support(global)
                    })
                    .collect()
            })
            .collect();

        let mut alg = SimplyLacedHecke {
            diagram: d.clone(),
            partition,
            groups,
            members,
            local,
            element_dom,
            basis: Vec::new(),
            dominated: Vec::new(),
            index: HashMap::new(),
        };
        let mut current = Vec::with_capacity(alg.groups.len());
        alg.enumerate(&mut current, 0);
        alg.index = alg.basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(alg)
    }

    fn enumerate(&mut self, current: &mut Vec<u32>, dominated: u64) {
        let j = current.len();
        if j == self.groups.len() {
            self.basis.push(WqIndex(current.clone()));
            self.dominated.push(dominated);
            return;
        }
        // blocks earlier than j holding a nontrivial element must not be dominated
        let occupied: u64 = current
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .fold(0, |acc, (i, _)| acc | 1 << i);
        let choices = if dominated >> j & 1 == 1 { 1 } else { self.groups[j].len() as u32 };
        for id in 0..choices {
            let dom = self.element_dom[j][id as usize];
            if dom & occupied != 0 {
                continue;
            }
            current.push(id);
            self.enumerate(current, dominated | dom);
            current.pop();
        }
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    pub fn field(&self) -> Field {
        self.diagram.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WqIndex] {
        &self.basis
    }

    pub fn index_of(&self, w: &WqIndex) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn group(&self, block: usize) -> &FiniteCoxeterGroup {
        &self.groups[block]
    }

    /// Canonical word of coordinate `block` of a tuple, as global vertices.
    pub fn block_word(&self, block: usize, id: u32) -> Vec<usize> {
        self.groups[block].word(id).iter().map(|&l| self.members[block][l as usize]).collect()
    }

    /// The word w_1 w_2 ⋯ w_k of a basis element, as global vertices.
    pub fn full_word(&self, index: usize) -> Vec<usize> {
        let w = &self.basis[index];
        (0..w.0.len()).flat_map(|b| self.block_word(b, w.0[b])).collect()
    }

    /// Renders a basis element as `(w_1, …, w_k)` with `1` for identities.
    pub fn format_index(&self, index: usize) -> String {
        let w = &self.basis[index];
        let parts: Vec<String> = (0..w.0.len())
            .map(|b| {
                let word = self.block_word(b, w.0[b]);
                if word.is_empty() {
                    "1".to_string()
                } else {
                    word.iter().map(|&s| self.diagram.name(s)).collect::<Vec<_>>().join("·")
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }

    pub fn format_element(&self, x: &HeckeElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = x
            .coeffs
            .iter()
            .map(|(&i, c)| {
                if c.is_one() {
                    self.format_index(i)
                } else {
                    format!("{c}*{}", self.format_index(i))
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// T_s applied to a single basis element.
    pub fn act_on_basis(&self, s: usize, index: usize) -> Vec<(usize, Scalar)> {
        let field = self.field();
        let i = self.partition.block_of[s];
        if self.dominated[index] >> i & 1 == 1 {
            return vec![(index, field.one())];
        }
        let w = &self.basis[index];
        let g = &self.groups[i];
        let u = g.left_mul(self.local[s], w.0[i]);
        let q = &self.partition.block_params[i];
        let mut next = w.clone();
        next.0[i] = u;
        if g.length(u) < g.length(w.0[i]) {
            let target = self.index[&next];
            let stay = &field.one() - q;
            let mut out = Vec::with_capacity(2);
            if !stay.is_zero() {
                out.push((index, stay));
            }
            if !q.is_zero() {
                out.push((target, q.clone()));
            }
            out
        } else {
            let dom = self.partition.dominated_by_vertex[s];
            for (j, slot) in next.0.iter_mut().enumerate() {
                if dom >> j & 1 == 1 {
                    *slot = 0;
                }
            }
            vec![(self.index[&next], field.one())]
        }
    }

    /// T_s · x, extended linearly.
    pub fn generator_action(&self, s: usize, x: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&i, c) in &x.coeffs {
            for (j, v) in self.act_on_basis(s, i) {
                out.add_term(j, &(c * &v));
            }
        }
        out
    }

    /// T_{s_1} ⋯ T_{s_r} · x for the word s_1 ⋯ s_r.
    pub fn apply_word(&self, word: &[usize], x: &HeckeElement) -> HeckeElement {
        word.iter().rev().fold(x.clone(), |acc, &s| self.generator_action(s, &acc))
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(0, self.field())
    }

    /// T_w for a word (reduced or not).
    pub fn element_of_word(&self, word: &[usize]) -> HeckeElement {
        self.apply_word(word, &self.one())
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&i, c) in &a.coeffs {
            let prod = self.apply_word(&self.full_word(i), b);
            out.add_scaled(&prod, c);
        }
        out
    }
}

impl HeckeModule for SimplyLacedHecke {
    fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn act_basis(&self, s: usize, b: usize) -> Vec<(usize, Scalar)> {
        self.act_on_basis(s, b)
    }
}

impl fmt::Display for WqIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
