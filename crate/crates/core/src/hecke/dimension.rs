use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{block_partition, count_wq};
use crate::collapse::collapsed_subset;
use crate::coxeter::{classify_component, group_order, Cardinal};
use crate::diagram::CoxeterDiagram;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dimension {
    Finite(BigUint),
    /// Some component is infinite-dimensional.
    Infinite { component: String },
    /// Some component falls outside every known basis construction.
    Unknown { component: String },
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite { .. } => write!(f, "inf"),
            Dimension::Unknown { .. } => write!(f, "unknown"),
        }
    }
}

/// Dimension of H(q) for one connected collapse-free component.
fn component_dimension(c: &CoxeterDiagram) -> Result<Option<Cardinal>> {
    let lusztig = c.edges().all(|(u, v, w)| !w.is_odd() || c.param(u) == c.param(v));
    if lusztig {
        return Ok(Some(group_order(c)));
    }
    if c.is_simply_laced() {
        let p = block_partition(c)?;
        for b in &p.blocks {
            let sub = c.induced_subdiagram(*b)?;
            if !classify_component(&sub).is_finite() {
                return Ok(Some(Cardinal::Infinite));
            }
        }
        return Ok(Some(Cardinal::Finite(count_wq(c)?)));
    }
    let edges: Vec<_> = c.edges().collect();
    if let (2, [(u, v, w)]) = (c.len(), edges.as_slice()) {
        if let Some(m) = w.finite().filter(|m| m % 2 == 1) {
            if c.param(*u).is_zero() != c.param(*v).is_zero() {
                return Ok(Some(Cardinal::Finite(BigUint::from(2 * m - 3))));
            }
        }
    }
    Ok(None)
}

/// Dimension of H(q): collapse, then multiply over connected components.
pub fn dimension(d: &CoxeterDiagram) -> Result<Dimension> {
    let reduced = collapsed_subset(d).reduced;
    let mut total = BigUint::one();
    let mut unknown = None;
    for comp in reduced.connected_components() {
        let c = reduced.induced_subdiagram(comp)?;
        match component_dimension(&c)? {
            Some(Cardinal::Finite(n)) => total *= n,
            Some(Cardinal::Infinite) => {
                return Ok(Dimension::Infinite { component: reduced.format_set(comp) });
            }
            None => {
                unknown.get_or_insert_with(|| reduced.format_set(comp));
            }
        }
    }
    Ok(match unknown {
        Some(component) => Dimension::Unknown { component },
        None => Dimension::Finite(total),
    })
}
