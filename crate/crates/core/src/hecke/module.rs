use std::collections::BTreeMap;

use crate::diagram::{CoxeterDiagram, EdgeWeight};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

type Vector = BTreeMap<usize, Scalar>;

/// A finite-dimensional module on which each generator T_s acts by a sparse
/// matrix, given column by column.
pub trait HeckeModule {
    fn diagram(&self) -> &CoxeterDiagram;
    fn dim(&self) -> usize;
    /// Image of basis vector `b` under T_s.
    fn act_basis(&self, s: usize, b: usize) -> Vec<(usize, Scalar)>;
}

fn act<M: HeckeModule + ?Sized>(m: &M, s: usize, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (&b, c) in v {
        for (t, x) in m.act_basis(s, b) {
            let term = c * &x;
            let e = out.entry(t).or_insert_with(|| term.field().zero());
            *e = &*e + &term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn combine(a: &Vector, b: &Vector, cb: &Scalar) -> Vector {
    let mut out = a.clone();
    for (&k, v) in b {
        let term = cb * v;
        let e = out.entry(k).or_insert_with(|| term.field().zero());
        *e = &*e + &term;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Outcome of checking the defining relations on a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub dim: usize,
    pub vectors_checked: usize,
    pub relations_checked: usize,
    /// Description of the first failing relation.
    pub failure: Option<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks (T_s − 1)(T_s + q_s) = 0 and every braid relation on basis vectors.
/// At most `sample_cap` vectors are tested, evenly spaced through the basis.
pub fn verify_relations<M: HeckeModule + ?Sized>(m: &M, sample_cap: usize) -> RelationReport {
    let d = m.diagram();
    let n = d.len();
    let dim = m.dim();
    let step = dim.div_ceil(sample_cap.max(1)).max(1);
    let samples: Vec<usize> = (0..dim).step_by(step).collect();
    let mut relations = 0;
    let field = d.field();
    let minus_one = -field.one();
    for &b in &samples {
        let e: Vector = [(b, field.one())].into_iter().collect();
        for s in 0..n {
            relations += 1;
            let q = d.param(s);
            // T_s² + (q−1)T_s − q = 0
            let ts = act(m, s, &e);
            let tts = act(m, s, &ts);
            let lhs = combine(&combine(&tts, &ts, &(q - &field.one())), &e, &-q);
            if !lhs.is_empty() {
                return RelationReport {
                    dim,
                    vectors_checked: samples.len(),
                    relations_checked: relations,
                    failure: Some(format!("quadratic relation for `{}` fails on basis vector {b}", d.name(s))),
                };
            }
            for t in s + 1..n {
                let mst = match d.weight(s, t) {
                    None => 2,
                    Some(EdgeWeight::Finite(m)) => m,
                    Some(EdgeWeight::Infinite) => continue,
                };
                relations += 1;
                let braid = |first: usize, second: usize| {
                    (0..mst).fold(e.clone(), |v, k| act(m, if (mst - 1 - k) % 2 == 0 { first } else { second }, &v))
                };
                if !combine(&braid(s, t), &braid(t, s), &minus_one).is_empty() {
                    return RelationReport {
                        dim,
                        vectors_checked: samples.len(),
                        relations_checked: relations,
                        failure: Some(format!(
                            "braid relation between `{}` and `{}` fails on basis vector {b}",
                            d.name(s),
                            d.name(t)
                        )),
                    };
                }
            }
        }
    }
    RelationReport { dim, vectors_checked: samples.len(), relations_checked: relations, failure: None }
}

/// The (2m−3)-dimensional module of a single odd edge of weight m whose
/// endpoints carry parameters 0 and q ≠ 0.
///
/// Basis order: 1, then (sts⋯)_k for k = 1..m−2, then (tst⋯)_k for
/// k = 1..m−2, where s is the zero-parameter vertex.
#[derive(Debug, Clone)]
pub struct DihedralZeroModule {
    diagram: CoxeterDiagram,
    m: usize,
    s: usize,
    q: Scalar,
}

impl DihedralZeroModule {
    pub fn new(d: &CoxeterDiagram) -> Result<Self> {
        let edges: Vec<_> = d.edges().collect();
        let (m, zero) = match (d.len(), edges.as_slice()) {
            (2, [(_, _, EdgeWeight::Finite(m))]) if m % 2 == 1 => {
                let zeros: Vec<usize> = (0..2).filter(|&v| d.param(v).is_zero()).collect();
                if zeros.len() != 1 {
                    return Err(Error::InvalidParameter {
                        value: format!("({}, {})", d.param(0), d.param(1)),
                        reason: "exactly one endpoint parameter must be 0".into(),
                    });
                }
                (*m as usize, zeros[0])
            }
            _ => {
                return Err(Error::InvalidParameter {
                    value: d.format_set(d.vertices()),
                    reason: "need two vertices joined by one odd-weight edge".into(),
                })
            }
        };
        Ok(DihedralZeroModule { diagram: d.clone(), m, s: zero, q: d.param(1 - zero).clone() })
    }

    /// Builds the module directly for the pair s (q = 0), t (q given).
    pub fn with_params(m: u32, q: Scalar) -> Result<Self> {
        let field = q.field();
        let mut d = CoxeterDiagram::new(field);
        d.add_vertex("s", field.zero())?;
        d.add_vertex("t", q)?;
        d.add_edge(0, 1, EdgeWeight::Finite(m))?;
        DihedralZeroModule::new(&d)
    }

    fn a(&self, k: usize) -> usize {
        if k == 0 { 0 } else { k }
    }

    fn b(&self, k: usize) -> usize {
        if k == 0 { 0 } else { self.m - 2 + k }
    }

    /// Decodes a basis index into (starts with s, length).
    pub fn label(&self, i: usize) -> (bool, usize) {
        if i == 0 {
            (true, 0)
        } else if i <= self.m - 2 {
            (true, i)
        } else {
            (false, i - (self.m - 2))
        }
    }

    pub fn field(&self) -> Field {
        self.diagram.field()
    }
}

impl HeckeModule for DihedralZeroModule {
    fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    fn dim(&self) -> usize {
        2 * self.m - 3
    }

    fn act_basis(&self, g: usize, i: usize) -> Vec<(usize, Scalar)> {
        let one = self.field().one();
        let top = self.m - 2;
        let (starts_s, k) = self.label(i);
        let acting_s = g == self.s;
        // the identity counts as both (sts⋯)_0 and (tst⋯)_0
        let same = k > 0 && starts_s == acting_s;
        if !same {
            let target = if k == top { self.a(top) } else if acting_s { self.a(k + 1) } else { self.b(k + 1) };
            return vec![(target, one)];
        }
        if acting_s {
            vec![(i, one)]
        } else {
            let mut out = Vec::new();
            let stay = &one - &self.q;
            if !stay.is_zero() {
                out.push((i, stay));
            }
            out.push((self.a(k - 1), self.q.clone()));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_dimensions_and_relations() {
        for m in [3u32, 5, 7, 9] {
            for q in [1, 2, -1] {
                let module = DihedralZeroModule::with_params(m, Field::Rational.from_i64(q)).unwrap();
                assert_eq!(module.dim(), 2 * m as usize - 3);
                let rep = verify_relations(&module, usize::MAX);
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn dihedral_is_cyclic_on_one() {
        // every basis vector is reached from 1 by alternating words
        let module = DihedralZeroModule::with_params(7, Field::Rational.one()).unwrap();
        let mut reached = vec![false; module.dim()];
        reached[0] = true;
        for start in [0usize, 1] {
            let mut v = 0;
            for k in 0..6 {
                let g = (start + k) % 2;
                let img = module.act_basis(g, v);
                assert_eq!(img.len(), 1);
                v = img[0].0;
                reached[v] = true;
            }
        }
        assert!(reached.iter().all(|&r| r));
    }

    #[test]
    fn wrong_dihedral_input() {
        assert!(DihedralZeroModule::with_params(4, Field::Rational.one()).is_err());
        assert!(DihedralZeroModule::with_params(5, Field::Rational.zero()).is_err());
    }

    #[test]
    fn detects_broken_relations() {
        // a module where T_t does not satisfy its quadratic relation
        struct Broken(CoxeterDiagram);
        impl HeckeModule for Broken {
            fn diagram(&self) -> &CoxeterDiagram {
                &self.0
            }
            fn dim(&self) -> usize {
                1
            }
            fn act_basis(&self, _: usize, b: usize) -> Vec<(usize, Scalar)> {
                vec![(b, Field::Rational.from_i64(5))]
            }
        }
        let d = CoxeterDiagram::path(Field::Rational, &[1]);
        assert!(!verify_relations(&Broken(d), 10).passed());
    }
}
