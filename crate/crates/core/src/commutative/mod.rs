//! The commutative algebra H(G,R): the polynomial ring on the vertices of a
//! graph G modulo x_r² (r ∈ R), x_v² − x_v (v ∉ R) and x_u x_v (uv an edge).

mod moebius;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::collapse::{commutativity_obstruction, is_commutative};
use crate::diagram::{CoxeterDiagram, SimpleGraph, VertexSet};
use crate::error::{Error, Result};

pub use moebius::{moebius_check, MoebiusReport, Poset};

/// Largest graph for which independent sets are listed.
pub const MAX_LISTED_VERTICES: usize = 30;
/// Largest number of independent sets materialised in one list.
pub const MAX_LISTED_SETS: usize = 1 << 22;

/// Independent subsets of `within`, sorted by size then lexicographically.
pub fn independent_subsets(g: &SimpleGraph, within: VertexSet) -> Result<Vec<VertexSet>> {
    if g.len() > MAX_LISTED_VERTICES {
        return Err(Error::TooManyVertices { count: g.len(), limit: MAX_LISTED_VERTICES });
    }
    let total = count_within(g, within, &mut HashMap::new());
    if total > MAX_LISTED_SETS as u128 {
        return Err(Error::CapExceeded { required: total.to_string(), cap: MAX_LISTED_SETS });
    }
    let mut out = Vec::with_capacity(total as usize);
    collect(g, within, VertexSet::EMPTY, &mut out);
    out.sort();
    Ok(out)
}

fn collect(g: &SimpleGraph, within: VertexSet, chosen: VertexSet, out: &mut Vec<VertexSet>) {
    match within.min() {
        None => out.push(chosen),
        Some(v) => {
            collect(g, within.without(v), chosen, out);
            collect(g, within - g.neighbors(v).with(v), chosen.with(v), out);
        }
    }
}

pub fn independent_sets(g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    independent_subsets(g, g.vertices())
}

fn count_within(g: &SimpleGraph, within: VertexSet, memo: &mut HashMap<u64, u128>) -> u128 {
    if within.len() <= 1 {
        return 1 << within.len();
    }
    if let Some(&c) = memo.get(&within.bits()) {
        return c;
    }
    // branch on the vertex of largest degree inside `within`
    let v = within.iter().max_by_key(|&v| (g.neighbors(v) & within).len()).expect("nonempty");
    let nbrs = g.neighbors(v) & within;
    let c = if nbrs.is_empty() {
        2 * count_within(g, within.without(v), memo)
    } else {
        count_within(g, within.without(v), memo) + count_within(g, within - nbrs.with(v), memo)
    };
    memo.insert(within.bits(), c);
    c
}

/// |𝓘(G)|, without listing the sets.
pub fn count_independent_sets(g: &SimpleGraph) -> Result<u128> {
    Ok(count_within(g, g.vertices(), &mut HashMap::new()))
}

/// Number of independent subsets of `within`.
pub fn count_independent_subsets(g: &SimpleGraph, within: VertexSet) -> u128 {
    count_within(g, within, &mut HashMap::new())
}

/// A sparse integer combination of monomials X_I with I independent. Every
/// structure constant of H(G,R) is an integer, so these coefficients reduce
/// to any field.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommElement {
    pub coeffs: BTreeMap<VertexSet, i64>,
}

impl CommElement {
    pub fn zero() -> Self {
        CommElement::default()
    }

    pub fn one() -> Self {
        CommElement::monomial(VertexSet::EMPTY)
    }

    pub fn monomial(i: VertexSet) -> Self {
        let mut e = CommElement::zero();
        e.coeffs.insert(i, 1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: VertexSet, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &CommElement) -> CommElement {
        let mut out = self.clone();
        for (&i, &c) in &other.coeffs {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &CommElement) -> CommElement {
        let mut out = self.clone();
        for (&i, &c) in &other.coeffs {
            out.add_term(i, -c);
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.coeffs.keys().copied()
    }
}

/// H(G,R) for a graph G and a nilpotent vertex set R.
#[derive(Debug, Clone)]
pub struct HGRAlgebra {
    graph: SimpleGraph,
    nil: VertexSet,
    /// N(v) for every vertex.
    neighbors: Vec<VertexSet>,
}

impl HGRAlgebra {
    pub fn new(graph: SimpleGraph, nil: VertexSet) -> Result<Self> {
        if graph.len() > MAX_LISTED_VERTICES {
            return Err(Error::TooManyVertices { count: graph.len(), limit: MAX_LISTED_VERTICES });
        }
        if let Some(bad) = (nil - graph.vertices()).min() {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        let neighbors = (0..graph.len()).map(|v| graph.neighbors(v)).collect();
        Ok(HGRAlgebra { graph, nil, neighbors })
    }

    /// The algebra isomorphic to H(q) for a collapse-free commutative diagram:
    /// R collects the vertices with q = −1 in the diagram's field.
    pub fn from_hecke(d: &CoxeterDiagram) -> Result<Self> {
        if !is_commutative(d)? {
            return Err(Error::NotCommutative(commutativity_obstruction(d).unwrap_or_default()));
        }
        let minus_one = -d.field().one();
        let nil = (0..d.len()).filter(|&v| *d.param(v) == minus_one).collect();
        HGRAlgebra::new(SimpleGraph::from_diagram(d), nil)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn nilpotent_set(&self) -> VertexSet {
        self.nil
    }

    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.neighbors[v])
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors[v].is_disjoint(set))
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        self.graph.format_set(set)
    }

    /// "1 - X{a} + X{a,b}" style rendering.
    pub fn format_element(&self, x: &CommElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (&i, &c)) in x.coeffs.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = if i.is_empty() { "1".to_string() } else { format!("X{}", self.format_set(i)) };
            match c.abs() {
                1 => out.push_str(&mono),
                a if i.is_empty() => out.push_str(&a.to_string()),
                a => out.push_str(&format!("{a}*{mono}")),
            }
        }
        out
    }

    pub fn dim(&self) -> Result<u128> {
        count_independent_sets(&self.graph)
    }

    /// Basis {X_I : I ∈ 𝓘(G)}.
    pub fn basis(&self) -> Result<Vec<VertexSet>> {
        independent_sets(&self.graph)
    }

    fn check_independent(&self, set: VertexSet) -> Result<()> {
        if let Some(bad) = (set - self.graph.vertices()).min() {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        if !self.is_independent(set) {
            return Err(Error::NotIndependent(self.format_set(set)));
        }
        Ok(())
    }

    fn product_label(&self, i: VertexSet, j: VertexSet) -> Option<VertexSet> {
        let u = i | j;
        if !(i & j & self.nil).is_empty() || !self.is_independent(u) {
            None
        } else {
            Some(u)
        }
    }

    pub fn multiply_monomials(&self, i: VertexSet, j: VertexSet) -> CommElement {
        match self.product_label(i, j) {
            Some(u) => CommElement::monomial(u),
            None => CommElement::zero(),
        }
    }

    pub fn multiply(&self, a: &CommElement, b: &CommElement) -> CommElement {
        let mut out = CommElement::zero();
        for (&i, &x) in &a.coeffs {
            for (&j, &y) in &b.coeffs {
                if let Some(u) = self.product_label(i, j) {
                    out.add_term(u, x * y);
                }
            }
        }
        out
    }

    /// x_v acting on the basis vector X_I of the regular module.
    pub fn defining_module_action(&self, v: usize, i: VertexSet) -> CommElement {
        self.multiply_monomials(VertexSet::singleton(v), i)
    }

    /// X_I · Π_{u ∈ U} (1 − x_u), expanded over the independent subsets of U
    /// that avoid I and its neighbours.
    fn times_complement(&self, i: VertexSet, u: VertexSet) -> CommElement {
        let free = u - i - self.neighborhood(i);
        let mut out = CommElement::zero();
        let mut stack = vec![(free, VertexSet::EMPTY)];
        while let Some((rest, t)) = stack.pop() {
            match rest.min() {
                None => out.add_term(i | t, if t.len() % 2 == 0 { 1 } else { -1 }),
                Some(v) => {
                    stack.push((rest.without(v), t));
                    stack.push((rest - self.neighbors[v].with(v), t.with(v)));
                }
            }
        }
        out
    }

    fn simple_part(&self) -> VertexSet {
        self.graph.vertices() - self.nil
    }

    /// Labels 𝓘(G−R) of the simple modules.
    pub fn simple_labels(&self) -> Result<Vec<VertexSet>> {
        independent_subsets(&self.graph, self.simple_part())
    }

    fn check_simple_label(&self, i: VertexSet) -> Result<()> {
        self.check_independent(i)?;
        if !i.is_disjoint(self.nil) {
            return Err(Error::NotIndependent(format!("{} meets R", self.format_set(i))));
        }
        Ok(())
    }

    /// E_I = X_I · X⁻_{G−R−I}.
    pub fn idempotent(&self, i: VertexSet) -> Result<CommElement> {
        self.check_simple_label(i)?;
        Ok(self.times_complement(i, self.simple_part() - i))
    }

    /// The complete set of primitive orthogonal idempotents.
    pub fn idempotents(&self) -> Result<Vec<(VertexSet, CommElement)>> {
        self.simple_labels()?.into_iter().map(|i| Ok((i, self.idempotent(i)?))).collect()
    }

    /// Basis {X_{I+J} · X⁻_{G−R−I} : J ∈ 𝓘(R − N(I))} of P_I.
    pub fn projective_basis(&self, i: VertexSet) -> Result<Vec<CommElement>> {
        let e = self.idempotent(i)?;
        Ok(self
            .projective_labels(i)?
            .into_iter()
            .map(|j| self.multiply(&CommElement::monomial(j), &e))
            .collect())
    }

    /// 𝓘(R − N(I)), the J indexing the basis of P_I.
    pub fn projective_labels(&self, i: VertexSet) -> Result<Vec<VertexSet>> {
        self.check_simple_label(i)?;
        independent_subsets(&self.graph, self.nil - self.neighborhood(i))
    }

    /// Diagonal of the Cartan matrix, indexed by 𝓘(G−R).
    pub fn cartan_matrix(&self) -> Result<Vec<(VertexSet, u128)>> {
        Ok(self
            .simple_labels()?
            .into_iter()
            .map(|i| (i, count_independent_subsets(&self.graph, self.nil - self.neighborhood(i))))
            .collect())
    }

    /// Basis {X_I : I ∩ R ≠ ∅} of the radical.
    pub fn radical_basis(&self) -> Result<Vec<VertexSet>> {
        Ok(self.basis()?.into_iter().filter(|i| !i.is_disjoint(self.nil)).collect())
    }

    /// Labels J of the simple summands C_I ≅ span X_{I+J}X⁻ in the socle of P_I:
    /// the maximal members of 𝓘(R − N(I)).
    pub fn socle_labels(&self, i: VertexSet) -> Result<Vec<VertexSet>> {
        let labels = self.projective_labels(i)?;
        let room = self.nil - self.neighborhood(i);
        Ok(labels
            .into_iter()
            .filter(|&j| (room - j).iter().all(|v| !self.is_independent(j.with(v))))
            .collect())
    }

    pub fn is_semisimple(&self) -> bool {
        self.nil.is_empty()
    }

    /// x_v acts on the simple module C_I by 1 if v ∈ I and 0 otherwise.
    pub fn simple_action(&self, i: VertexSet, v: usize) -> i64 {
        i.contains(v) as i64
    }

    /// Restriction of C_I to H(G′,R′) where G′ is induced on `sub`.
    pub fn restrict_simple(&self, i: VertexSet, sub: VertexSet) -> Result<VertexSet> {
        self.check_independent(i)?;
        Ok(i & sub)
    }

    /// Simple summands of the induction of C_{I′} from the subgraph on `sub`;
    /// only available in the semisimple case.
    pub fn induce_simple_semisimple(&self, sub: VertexSet, i: VertexSet) -> Result<Vec<VertexSet>> {
        if !self.is_semisimple() {
            return Err(Error::NilpotentsPresent(self.format_set(self.nil)));
        }
        self.induce(sub, i)
    }

    /// Projective summands P_K of the induction of P_J from the subgraph on `sub`.
    pub fn induce_projective(&self, sub: VertexSet, j: VertexSet) -> Result<Vec<VertexSet>> {
        self.induce(sub, j)
    }

    fn induce(&self, sub: VertexSet, j: VertexSet) -> Result<Vec<VertexSet>> {
        if let Some(bad) = (sub - self.graph.vertices()).min() {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        if !j.is_subset(sub) {
            return Err(Error::NotIndependent(format!("{} is not inside the subgraph", self.format_set(j))));
        }
        self.check_simple_label(j)?;
        // K = J ∪ T with T independent in the rest, avoiding R and N(J)
        let rest = self.simple_part() - sub - self.neighborhood(j);
        let mut out: Vec<VertexSet> = independent_subsets(&self.graph, rest)?.into_iter().map(|t| j | t).collect();
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for CommElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(i, c)| format!("{c}*X{i:?}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::{fibonacci, lucas};
    use crate::scalar::Field;
    use proptest::prelude::*;

    fn alg(g: SimpleGraph, nil: &[usize]) -> HGRAlgebra {
        HGRAlgebra::new(g, nil.iter().copied().collect()).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independent_set_counts() {
        for n in 0..=20 {
            assert_eq!(count_independent_sets(&SimpleGraph::path(n)).unwrap(), fibonacci(n as u32 + 2));
            assert_eq!(independent_sets(&SimpleGraph::path(n.min(14))).unwrap().len() as u128, fibonacci(n.min(14) as u32 + 2));
        }
        for n in 3..=15 {
            assert_eq!(count_independent_sets(&SimpleGraph::cycle(n)).unwrap(), lucas(n as u32));
        }
        assert_eq!(independent_sets(&SimpleGraph::empty(3)).unwrap().len(), 8);
        assert!(matches!(independent_sets(&SimpleGraph::empty(31)), Err(Error::TooManyVertices { .. })));
        assert!(matches!(independent_sets(&SimpleGraph::empty(30)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn independent_sets_are_sorted_by_size_then_lex() {
        let sets = independent_sets(&SimpleGraph::path(3)).unwrap();
        assert_eq!(sets, vec![set(&[]), set(&[0]), set(&[1]), set(&[2]), set(&[0, 2])]);
    }

    #[test]
    fn from_hecke_nilpotent_sets() {
        let d = CoxeterDiagram::path(Field::Rational, &[0, 1, 0, 1]);
        assert!(HGRAlgebra::from_hecke(&d).unwrap().nilpotent_set().is_empty());
        let d = CoxeterDiagram::path(Field::prime(2).unwrap(), &[0, 1, 0, 1]);
        assert_eq!(HGRAlgebra::from_hecke(&d).unwrap().nilpotent_set(), set(&[1, 3]));
        let d = CoxeterDiagram::path(Field::Rational, &[0, -1, 0]);
        assert_eq!(HGRAlgebra::from_hecke(&d).unwrap().nilpotent_set(), set(&[1]));
        let d = CoxeterDiagram::path(Field::Rational, &[0, 1, 1]);
        assert!(matches!(HGRAlgebra::from_hecke(&d), Err(Error::NotCommutative(_))));
    }

    #[test]
    fn monomial_products() {
        let a = alg(SimpleGraph::path(2), &[]);
        assert_eq!(a.multiply_monomials(VertexSet::EMPTY, set(&[1])), CommElement::monomial(set(&[1])));
        assert!(a.multiply_monomials(set(&[0]), set(&[1])).is_zero());
        assert_eq!(a.multiply_monomials(set(&[0]), set(&[0])), CommElement::monomial(set(&[0])));
        let r = alg(SimpleGraph::empty(1), &[0]);
        assert!(r.multiply_monomials(set(&[0]), set(&[0])).is_zero());
    }

    #[test]
    fn module_action() {
        let a = alg(SimpleGraph::path(3), &[1]);
        assert_eq!(a.defining_module_action(2, set(&[0])), CommElement::monomial(set(&[0, 2])));
        assert!(a.defining_module_action(1, set(&[0])).is_zero());
        assert!(a.defining_module_action(1, set(&[1])).is_zero());
        assert_eq!(a.defining_module_action(0, set(&[0])), CommElement::monomial(set(&[0])));
    }

    #[test]
    fn idempotents_of_an_edge() {
        let a = alg(SimpleGraph::path(2), &[]);
        let e = a.idempotents().unwrap();
        let mut e0 = CommElement::one();
        e0.add_term(set(&[0]), -1);
        e0.add_term(set(&[1]), -1);
        assert_eq!(e[0], (VertexSet::EMPTY, e0));
        assert_eq!(e[1], (set(&[0]), CommElement::monomial(set(&[0]))));
        assert_eq!(e[2], (set(&[1]), CommElement::monomial(set(&[1]))));
        assert_eq!(a.format_element(&e[0].1), "1 - X{1} - X{2}");
        let single = alg(SimpleGraph::empty(1), &[0]);
        assert_eq!(single.idempotents().unwrap(), vec![(VertexSet::EMPTY, CommElement::one())]);
    }

    #[test]
    fn projective_bases() {
        let a = alg(SimpleGraph::path(3), &[1]);
        assert_eq!(a.projective_basis(VertexSet::EMPTY).unwrap().len(), 2);
        assert_eq!(a.projective_basis(set(&[0])).unwrap().len(), 1);
        assert!(a.projective_basis(set(&[1])).is_err());
        let s = alg(SimpleGraph::path(3), &[]);
        assert_eq!(s.projective_basis(set(&[0])).unwrap(), vec![s.idempotent(set(&[0])).unwrap()]);
    }

    #[test]
    fn cartan_radical_socle() {
        let a = alg(SimpleGraph::path(3), &[1]);
        let c: Vec<u128> = a.cartan_matrix().unwrap().into_iter().map(|(_, x)| x).collect();
        assert_eq!(c, vec![2, 1, 1, 1]);
        assert_eq!(a.radical_basis().unwrap(), vec![set(&[1])]);
        assert_eq!(a.socle_labels(VertexSet::EMPTY).unwrap(), vec![set(&[1])]);
        let b = alg(SimpleGraph::path(5), &[1, 3]);
        assert_eq!(b.cartan_matrix().unwrap().iter().map(|x| x.1).sum::<u128>(), 13);
        assert_eq!(b.socle_labels(VertexSet::EMPTY).unwrap(), vec![set(&[1, 3])]);
        let s = alg(SimpleGraph::path(4), &[]);
        assert!(s.cartan_matrix().unwrap().iter().all(|x| x.1 == 1));
        assert!(s.radical_basis().unwrap().is_empty());
        assert_eq!(s.socle_labels(set(&[0])).unwrap(), vec![VertexSet::EMPTY]);
        assert!(s.is_semisimple() && !a.is_semisimple());
        assert!(alg(SimpleGraph::empty(2), &[]).is_semisimple());
    }

    #[test]
    fn restriction_and_induction() {
        let p4 = alg(SimpleGraph::path(4), &[]);
        assert_eq!(p4.restrict_simple(set(&[0, 2]), set(&[0, 1])).unwrap(), set(&[0]));
        assert_eq!(p4.restrict_simple(set(&[0, 2]), VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        let p2 = alg(SimpleGraph::path(2), &[]);
        assert_eq!(p2.induce_simple_semisimple(set(&[0]), VertexSet::EMPTY).unwrap(), vec![set(&[]), set(&[1])]);
        assert_eq!(p2.induce_simple_semisimple(set(&[0, 1]), set(&[1])).unwrap(), vec![set(&[1])]);
        let p3 = alg(SimpleGraph::path(3), &[]);
        assert_eq!(p3.induce_simple_semisimple(set(&[0, 2]), set(&[0])).unwrap(), vec![set(&[0])]);
        let r = alg(SimpleGraph::path(3), &[1]);
        assert!(matches!(r.induce_simple_semisimple(set(&[0]), VertexSet::EMPTY), Err(Error::NilpotentsPresent(_))));
        assert_eq!(r.induce_projective(set(&[0]), VertexSet::EMPTY).unwrap(), vec![set(&[]), set(&[2])]);
        assert_eq!(r.induce_projective(set(&[0]), set(&[0])).unwrap(), vec![set(&[0]), set(&[0, 2])]);
        assert_eq!(r.induce_projective(set(&[0, 1, 2]), set(&[0])).unwrap(), vec![set(&[0])]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = (SimpleGraph, VertexSet)> {
        (1..=max_n).prop_flat_map(|n| {
            (proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), any::<u64>()).prop_map(move |(bits, r)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                (SimpleGraph::from_edges(n, &edges), VertexSet::from_bits(r) & VertexSet::full(n))
            })
        })
    }

    proptest! {
        #[test]
        fn idempotents_are_complete_and_orthogonal((g, r) in arb_graph(7)) {
            let a = HGRAlgebra::new(g, r).unwrap();
            let es = a.idempotents().unwrap();
            let mut sum = CommElement::zero();
            for (k, (_, e)) in es.iter().enumerate() {
                sum = sum.add(e);
                prop_assert_eq!(&a.multiply(e, e), e);
                for (_, f) in &es[k + 1..] {
                    prop_assert!(a.multiply(e, f).is_zero());
                }
            }
            prop_assert_eq!(sum, CommElement::one());
        }

        #[test]
        fn decomposition_is_exhaustive((g, r) in arb_graph(9)) {
            let a = HGRAlgebra::new(g, r).unwrap();
            let total: usize = a.simple_labels().unwrap().iter().map(|&i| a.projective_basis(i).unwrap().len()).sum();
            prop_assert_eq!(total as u128, a.dim().unwrap());
            let cartan: u128 = a.cartan_matrix().unwrap().iter().map(|x| x.1).sum();
            prop_assert_eq!(cartan, a.dim().unwrap());
            prop_assert_eq!(a.radical_basis().unwrap().len() + a.simple_labels().unwrap().len(), a.basis().unwrap().len());
        }

        #[test]
        fn radical_squares_to_zero((g, r) in arb_graph(7)) {
            let a = HGRAlgebra::new(g, r).unwrap();
            for x in a.radical_basis().unwrap() {
                prop_assert!(a.multiply_monomials(x, x).is_zero());
            }
        }

        #[test]
        fn product_is_commutative_and_associative((g, r) in arb_graph(6)) {
            let a = HGRAlgebra::new(g, r).unwrap();
            let basis = a.basis().unwrap();
            for &i in &basis {
                for &j in &basis {
                    prop_assert_eq!(a.multiply_monomials(i, j), a.multiply_monomials(j, i));
                    for &k in &basis {
                        let left = a.multiply(&a.multiply_monomials(i, j), &CommElement::monomial(k));
                        let right = a.multiply(&CommElement::monomial(i), &a.multiply_monomials(j, k));
                        prop_assert_eq!(left, right);
                    }
                }
            }
        }

        #[test]
        fn restrict_then_induce((g, _) in arb_graph(7), sub in any::<u64>()) {
            let a = HGRAlgebra::new(g, VertexSet::EMPTY).unwrap();
            let sub = VertexSet::from_bits(sub) & a.graph().vertices();
            for i in a.basis().unwrap() {
                let j = a.restrict_simple(i, sub).unwrap();
                prop_assert!(a.induce_simple_semisimple(sub, j).unwrap().contains(&i));
            }
        }

        #[test]
        fn projectives_are_cyclic_modules((g, r) in arb_graph(6)) {
            // P_I is spanned by monomials times E_I and each x_v maps it into itself
            let a = HGRAlgebra::new(g, r).unwrap();
            for i in a.simple_labels().unwrap() {
                let e = a.idempotent(i).unwrap();
                for p in a.projective_basis(i).unwrap() {
                    prop_assert_eq!(a.multiply(&p, &e), p);
                }
            }
        }
    }
}
