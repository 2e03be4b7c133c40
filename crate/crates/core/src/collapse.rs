//! Collapse analysis: which generators are forced to act as the identity,
//! and the collapse-free, admissibility and commutativity predicates.

use crate::diagram::{CoxeterDiagram, EdgeWeight, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseReport {
    /// Generators r with T_r = 1.
    pub collapsed: VertexSet,
    /// The diagram induced on the remaining generators.
    pub reduced: CoxeterDiagram,
    /// `reduced` vertex i is vertex `kept[i]` of the input.
    pub kept: Vec<usize>,
}

impl CollapseReport {
    pub fn forced_identity(&self) -> Vec<usize> {
        self.collapsed.iter().collect()
    }
}

/// Components of nonzero-parameter vertices joined by odd-weight edges.
fn odd_nonzero_components(d: &CoxeterDiagram) -> Vec<VertexSet> {
    let nonzero = d.vertices() - d.zero_params();
    d.components_where(nonzero, |_, _, w| w.is_odd())
}

pub fn collapsed_subset(d: &CoxeterDiagram) -> CollapseReport {
    let mut collapsed = VertexSet::EMPTY;
    for comp in odd_nonzero_components(d) {
        let first = d.param(comp.min().expect("nonempty"));
        if comp.iter().any(|v| d.param(v) != first) {
            collapsed = collapsed | comp;
        }
    }
    let keep = d.vertices() - collapsed;
    CollapseReport {
        collapsed,
        reduced: d.induced_subdiagram(keep).expect("subset of vertices"),
        kept: keep.iter().collect(),
    }
}

/// First odd edge whose endpoints carry distinct nonzero parameters.
pub fn collapse_violation(d: &CoxeterDiagram) -> Option<(usize, usize)> {
    d.edges()
        .find(|&(u, v, w)| {
            let (p, q) = (d.param(u), d.param(v));
            w.is_odd() && p != q && !p.is_zero() && !q.is_zero()
        })
        .map(|(u, v, _)| (u, v))
}

pub fn is_collapse_free(d: &CoxeterDiagram) -> bool {
    collapse_violation(d).is_none()
}

/// Every odd edge leaving `r` has a zero-parameter endpoint.
pub fn is_admissible(d: &CoxeterDiagram, r: VertexSet) -> Result<bool> {
    if let Some(bad) = (r - d.vertices()).min() {
        return Err(Error::UnknownVertex(format!("#{bad}")));
    }
    Ok(d.edges().all(|(u, v, w)| {
        r.contains(u) == r.contains(v) || !w.is_odd() || d.param(u).is_zero() || d.param(v).is_zero()
    }))
}

/// Commutativity criterion for a collapse-free diagram: every edge has weight
/// 3 and exactly one zero endpoint.
pub fn is_commutative(d: &CoxeterDiagram) -> Result<bool> {
    if let Some((u, v)) = collapse_violation(d) {
        return Err(Error::NotCollapseFree(d.name(u).into(), d.name(v).into()));
    }
    Ok(d.edges().all(|(u, v, w)| {
        w == EdgeWeight::Finite(3) && (d.param(u).is_zero() != d.param(v).is_zero())
    }))
}

/// Explains the first edge that breaks commutativity, if any.
pub fn commutativity_obstruction(d: &CoxeterDiagram) -> Option<String> {
    d.edges().find_map(|(u, v, w)| {
        let (a, b) = (d.name(u), d.name(v));
        if w != EdgeWeight::Finite(3) {
            Some(format!("edge `{a}`-`{b}` has weight {w}"))
        } else if d.param(u).is_zero() == d.param(v).is_zero() {
            Some(format!("edge `{a}`-`{b}` does not have exactly one zero parameter"))
        } else {
            None
        }
    })
}
