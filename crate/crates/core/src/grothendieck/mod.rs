//! Compositions, the module 𝕮omp, and the Grothendieck group G₀(H•) of the
//! tower of semisimple commutative algebras H_n = H(P_{n−1}, ∅).

mod bratteli;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::commutative::HGRAlgebra;
use crate::diagram::{SimpleGraph, VertexSet};
use crate::error::{Error, Result};

pub use bratteli::{bratteli, Bratteli};

/// A finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter {
                value: format!("{parts:?}"),
                reason: "composition parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// D(α): the partial sums α₁, α₁+α₂, … short of n.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut sum = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            sum += p;
            out.push(sum);
        }
        out
    }

    /// The composition of n whose descent set is `descents` ⊆ [n−1].
    pub fn from_descents(n: u32, descents: &[u32]) -> Result<Self> {
        if n == 0 {
            return if descents.is_empty() {
                Ok(Composition::empty())
            } else {
                Err(Error::OutOfRange { what: "descent".into(), value: descents[0] as usize, max: 0 })
            };
        }
        let mut sorted = descents.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::OutOfRange { what: "descent".into(), value: bad as usize, max: n as usize - 1 });
        }
        let mut prev = 0;
        let mut parts = Vec::new();
        for d in sorted.into_iter().chain([n]) {
            parts.push(d - prev);
            prev = d;
        }
        Ok(Composition(parts))
    }

    /// Every internal part exceeds 1.
    pub fn is_proper(&self) -> bool {
        self.0.len() < 3 || self.0[1..self.0.len() - 1].iter().all(|&p| p > 1)
    }

    /// α^c, with D(α^c) = [n−1] ∖ D(α).
    pub fn complement(&self) -> Result<Self> {
        let n = self.size();
        if n == 0 {
            return Err(Error::EmptyComposition);
        }
        let d = self.descent_set();
        let rest: Vec<u32> = (1..n).filter(|i| !d.contains(i)).collect();
        Composition::from_descents(n, &rest)
    }

    /// (α_{≤i}, α_{>i}): cut the ribbon of α after its first i cells.
    pub fn split(&self, i: u32) -> Result<(Composition, Composition)> {
        let n = self.size();
        if i > n {
            return Err(Error::OutOfRange { what: "split point".into(), value: i as usize, max: n as usize });
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut sum = 0;
        for &p in &self.0 {
            if sum + p <= i {
                left.push(p);
            } else if sum >= i {
                right.push(p);
            } else {
                left.push(i - sum);
                right.push(sum + p - i);
            }
            sum += p;
        }
        Ok((Composition(left), Composition(right)))
    }

    /// αβ.
    pub fn concat(&self, other: &Composition) -> Composition {
        Composition([self.0.as_slice(), other.0.as_slice()].concat())
    }

    /// α▷β: merge the last part of α with the first part of β. An empty side
    /// yields the other side.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        match (self.0.split_last(), other.0.split_first()) {
            (Some((&a, init)), Some((&b, tail))) => {
                Composition([init, &[a + b], tail].concat())
            }
            _ => self.concat(other),
        }
    }

    /// All compositions of n, in lexicographic order of their parts.
    pub fn all_of_size(n: u32) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = (0..1u64 << (n - 1))
            .map(|mask| {
                let d: Vec<u32> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Composition::from_descents(n, &d).expect("valid descents")
            })
            .collect();
        out.sort();
        out
    }

    /// The proper compositions of n.
    pub fn proper_of_size(n: u32) -> Vec<Composition> {
        Composition::all_of_size(n).into_iter().filter(Composition::is_proper).collect()
    }

    /// Accepts "213", "2,1,3", "(2,1,3)", and "" / "()" / "∅" / "e" for the empty composition.
    pub fn parse(text: &str) -> Result<Composition> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" || t == "e" {
            return Ok(Composition::empty());
        }
        let bad = || Error::InvalidParameter { value: text.into(), reason: "not a composition".into() };
        let parts: Vec<u32> = if t.contains(',') {
            t.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Composition::new(parts)
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.size(), &self.0).cmp(&(other.size(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "∅")
        } else if self.0.iter().all(|&p| p < 10) {
            self.0.iter().try_for_each(|p| write!(f, "{p}"))
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// An integer combination of compositions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompSum(pub BTreeMap<Composition, i64>);

/// An integer combination of tensors α ⊗ β.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSum(pub BTreeMap<(Composition, Composition), i64>);

impl CompSum {
    pub fn zero() -> Self {
        CompSum::default()
    }

    pub fn single(a: Composition) -> Self {
        CompSum::signed(a, 1)
    }

    pub fn signed(a: Composition, c: i64) -> Self {
        let mut s = CompSum::zero();
        s.add_term(a, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, a: Composition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(a.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&a);
        }
    }

    pub fn add_sum(&mut self, other: &CompSum, c: i64) {
        for (a, &x) in &other.0 {
            self.add_term(a.clone(), c * x);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.0.iter().map(|(a, &c)| (a, c))
    }
}

impl TensorSum {
    pub fn zero() -> Self {
        TensorSum::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, a: Composition, b: Composition, c: i64) {
        if c == 0 {
            return;
        }
        let key = (a, b);
        let e = self.0.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Composition, i64)> {
        self.0.iter().map(|((a, b), &c)| (a, b, c))
    }
}

fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, i64)> + 'a,
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if c.abs() != 1 {
            write!(f, "{}*", c.abs())?;
        }
        write!(f, "{label}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CompSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms().map(|(a, c)| (a.to_string(), c)))
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms().map(|(a, b, c)| (format!("{a}⊗{b}"), c)))
    }
}

/// α ⊗̂ β = αβ + α▷β in 𝕮omp, with ∅ as unit.
pub fn comp_product(a: &Composition, b: &Composition) -> CompSum {
    if a.is_empty() || b.is_empty() {
        return CompSum::single(a.concat(b));
    }
    let mut s = CompSum::single(a.concat(b));
    s.add_term(a.near_concat(b), 1);
    s
}

/// Δ(α) = Σ_{0≤i≤n} α_{≤i} ⊗ α_{>i}.
pub fn comp_coproduct(a: &Composition) -> TensorSum {
    let mut t = TensorSum::zero();
    for i in 0..=a.size() {
        let (l, r) = a.split(i).expect("within size");
        t.add_term(l, r, 1);
    }
    t
}

fn require_proper(a: &Composition) -> Result<()> {
    if a.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperComposition(a.to_string()))
    }
}

/// C_α ⊗̂ C_β in G₀(H•).
pub fn g0_product(a: &Composition, b: &Composition) -> Result<CompSum> {
    require_proper(a)?;
    require_proper(b)?;
    Ok(sigma(&comp_product(a, b)))
}

/// Δ(C_α) in G₀(H•).
pub fn g0_coproduct(a: &Composition) -> Result<TensorSum> {
    require_proper(a)?;
    Ok(comp_coproduct(a))
}

/// Bilinear extension of a product to sums.
pub fn extend_product(
    x: &CompSum,
    y: &CompSum,
    product: impl Fn(&Composition, &Composition) -> CompSum,
) -> CompSum {
    let mut out = CompSum::zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            out.add_sum(&product(a, b), c * d);
        }
    }
    out
}

/// σ: P_α(0) ↦ C_α when α is proper, 0 otherwise.
pub fn sigma(x: &CompSum) -> CompSum {
    let mut out = CompSum::zero();
    for (a, c) in x.terms().filter(|(a, _)| a.is_proper()) {
        out.add_term(a.clone(), c);
    }
    out
}

/// ι: C_α ↦ C_α(0).
pub fn iota(x: &CompSum) -> Result<CompSum> {
    for (a, _) in x.terms() {
        require_proper(a)?;
    }
    Ok(x.clone())
}

/// ⟨x, y⟩ with the compositions as an orthonormal basis.
pub fn pairing(x: &CompSum, y: &CompSum) -> i64 {
    x.terms().map(|(a, c)| c * y.0.get(a).copied().unwrap_or(0)).sum()
}

pub fn tensor_pairing(x: &TensorSum, y: &TensorSum) -> i64 {
    x.0.iter().map(|(k, c)| c * y.0.get(k).copied().unwrap_or(0)).sum()
}

/// S(α) = (−1)^n α^c, returned as (sign, α^c).
pub fn antipode_comp(a: &Composition) -> (i64, Composition) {
    if a.is_empty() {
        return (1, Composition::empty());
    }
    let sign = if a.size() % 2 == 0 { 1 } else { -1 };
    (sign, a.complement().expect("nonempty"))
}

/// σ∘S∘ι applied to C_α.
pub fn antipode_g0(a: &Composition) -> Result<CompSum> {
    require_proper(a)?;
    let (sign, c) = antipode_comp(a);
    Ok(sigma(&CompSum::signed(c, sign)))
}

fn antipode_sum(x: &CompSum, s: impl Fn(&Composition) -> CompSum) -> CompSum {
    let mut out = CompSum::zero();
    for (a, c) in x.terms() {
        out.add_sum(&s(a), c);
    }
    out
}

/// Both convolution sums Σ S(α_{≤i})·α_{>i} and Σ α_{≤i}·S(α_{>i}).
pub fn antipode_convolutions(
    a: &Composition,
    antipode: impl Fn(&Composition) -> CompSum,
    product: impl Fn(&Composition, &Composition) -> CompSum,
) -> (CompSum, CompSum) {
    let (mut left, mut right) = (CompSum::zero(), CompSum::zero());
    for (l, r, c) in comp_coproduct(a).terms() {
        let sl = antipode_sum(&CompSum::single(l.clone()), &antipode);
        let sr = antipode_sum(&CompSum::single(r.clone()), &antipode);
        left.add_sum(&extend_product(&sl, &CompSum::single(r.clone()), &product), c);
        right.add_sum(&extend_product(&CompSum::single(l.clone()), &sr, &product), c);
    }
    (left, right)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeReport {
    pub n_max: u32,
    pub compositions_checked: usize,
    /// Compositions where some convolution differs from u∘ε.
    pub failures: Vec<String>,
}

impl AntipodeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn unit_counit(a: &Composition) -> CompSum {
    if a.is_empty() {
        CompSum::single(Composition::empty())
    } else {
        CompSum::zero()
    }
}

/// Checks S ⋆ id = u∘ε = id ⋆ S on every composition of size ≤ n_max.
pub fn verify_antipode(n_max: u32) -> AntipodeReport {
    let s = |a: &Composition| {
        let (sign, c) = antipode_comp(a);
        CompSum::signed(c, sign)
    };
    let mut report = AntipodeReport { n_max, compositions_checked: 0, failures: Vec::new() };
    for n in 0..=n_max {
        for a in Composition::all_of_size(n) {
            report.compositions_checked += 1;
            let (left, right) = antipode_convolutions(&a, s, comp_product);
            let expected = unit_counit(&a);
            if left != expected || right != expected {
                report.failures.push(a.to_string());
            }
        }
    }
    report
}

/// Checks the G₀ antipode σ∘S∘ι against the G₀ product on proper compositions.
pub fn verify_antipode_g0(n_max: u32) -> AntipodeReport {
    let s = |a: &Composition| antipode_g0(a).expect("proper");
    let p = |a: &Composition, b: &Composition| g0_product(a, b).expect("proper");
    let mut report = AntipodeReport { n_max, compositions_checked: 0, failures: Vec::new() };
    for n in 0..=n_max {
        for a in Composition::proper_of_size(n) {
            report.compositions_checked += 1;
            let (left, right) = antipode_convolutions(&a, s, p);
            let expected = unit_counit(&a);
            if left != expected || right != expected {
                report.failures.push(a.to_string());
            }
        }
    }
    report
}

/// Δ(C_α ⊗̂ C_β) against Δ(C_α) ⊗̂ Δ(C_β) computed factor by factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraWitness {
    pub alpha: Composition,
    pub beta: Composition,
    pub coproduct_of_product: TensorSum,
    pub product_of_coproducts: TensorSum,
}

impl BialgebraWitness {
    pub fn differs(&self) -> bool {
        self.coproduct_of_product != self.product_of_coproducts
    }
}

pub fn bialgebra_check(a: &Composition, b: &Composition) -> Result<BialgebraWitness> {
    let mut lhs = TensorSum::zero();
    for (p, c) in g0_product(a, b)?.terms() {
        for (l, r, d) in g0_coproduct(p)?.terms() {
            lhs.add_term(l.clone(), r.clone(), c * d);
        }
    }
    let mut rhs = TensorSum::zero();
    for (a1, a2, c) in g0_coproduct(a)?.terms() {
        for (b1, b2, d) in g0_coproduct(b)?.terms() {
            for (x, e) in g0_product(a1, b1)?.terms() {
                for (y, f) in g0_product(a2, b2)?.terms() {
                    rhs.add_term(x.clone(), y.clone(), c * d * e * f);
                }
            }
        }
    }
    Ok(BialgebraWitness { alpha: a.clone(), beta: b.clone(), coproduct_of_product: lhs, product_of_coproducts: rhs })
}

/// The pair (11, 1) showing G₀(H•) is not a bialgebra.
pub fn non_bialgebra_witness() -> BialgebraWitness {
    bialgebra_check(&Composition(vec![1, 1]), &Composition(vec![1])).expect("proper inputs")
}

/// Largest path accepted by [`fib_decomposition`].
pub const MAX_FIB_N: usize = 25;

/// F_{n+2} = Σ_{I ∈ 𝓘(P_n − R)} |𝓘(R − N(I))|, one summand per I. Vertices
/// of P_n are 0-based here.
pub fn fib_decomposition(n: usize, r: VertexSet) -> Result<Vec<(VertexSet, u128)>> {
    if n > MAX_FIB_N {
        return Err(Error::OutOfRange { what: "path length".into(), value: n, max: MAX_FIB_N });
    }
    HGRAlgebra::new(SimpleGraph::path(n), r)?.cartan_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::fibonacci;

    fn c(s: &str) -> Composition {
        Composition::parse(s).unwrap()
    }

    fn sum(items: &[(&str, i64)]) -> CompSum {
        let mut s = CompSum::zero();
        for &(a, k) in items {
            s.add_term(c(a), k);
        }
        s
    }

    #[test]
    fn descents_and_bijection() {
        assert_eq!(c("213").descent_set(), vec![2, 3]);
        assert!(c("5").descent_set().is_empty());
        for n in 0..=10 {
            for a in Composition::all_of_size(n) {
                assert_eq!(Composition::from_descents(n, &a.descent_set()).unwrap(), a);
            }
            assert_eq!(Composition::all_of_size(n).len(), if n == 0 { 1 } else { 1 << (n - 1) });
        }
        assert!(Composition::from_descents(3, &[3]).is_err());
    }

    #[test]
    fn proper_compositions() {
        assert!(c("1221").is_proper());
        assert!(c("11").is_proper());
        assert!(!c("213").is_proper());
        for n in 1..=12 {
            assert_eq!(Composition::proper_of_size(n).len() as u128, fibonacci(n + 1));
        }
    }

    #[test]
    fn complements() {
        assert_eq!(c("2").complement().unwrap(), c("11"));
        assert_eq!(c("1111").complement().unwrap(), c("4"));
        assert_eq!(Composition::empty().complement(), Err(Error::EmptyComposition));
        for n in 1..=10 {
            for a in Composition::all_of_size(n) {
                assert_eq!(a.complement().unwrap().complement().unwrap(), a);
            }
        }
    }

    #[test]
    fn splits() {
        assert_eq!(c("121").split(2).unwrap(), (c("11"), c("11")));
        assert_eq!(c("121").split(0).unwrap(), (Composition::empty(), c("121")));
        assert_eq!(c("121").split(4).unwrap(), (c("121"), Composition::empty()));
        assert_eq!(c("122").split(3).unwrap(), (c("12"), c("2")));
        assert!(c("121").split(5).is_err());
    }

    #[test]
    fn comp_products_and_coproducts() {
        assert_eq!(comp_product(&c("213"), &c("223")), sum(&[("213223", 1), ("21523", 1)]));
        assert_eq!(comp_product(&Composition::empty(), &c("23")), sum(&[("23", 1)]));
        assert_eq!(comp_product(&c("1"), &c("1")), sum(&[("11", 1), ("2", 1)]));
        let d = comp_coproduct(&c("121"));
        assert_eq!(d.to_string(), "∅⊗121 + 1⊗21 + 11⊗11 + 12⊗1 + 121⊗∅");
        assert_eq!(comp_coproduct(&Composition::empty()).to_string(), "∅⊗∅");
    }

    #[test]
    fn g0_products_and_coproducts() {
        assert_eq!(g0_product(&c("132"), &c("41")).unwrap(), sum(&[("13241", 1), ("1361", 1)]));
        assert_eq!(g0_product(&c("121"), &c("32")).unwrap(), sum(&[("1242", 1)]));
        assert_eq!(g0_product(&Composition::empty(), &c("22")).unwrap(), sum(&[("22", 1)]));
        assert!(matches!(g0_product(&c("213"), &c("1")), Err(Error::ImproperComposition(_))));
        let d = g0_coproduct(&c("122")).unwrap();
        assert_eq!(d.to_string(), "∅⊗122 + 1⊗22 + 11⊗12 + 12⊗2 + 121⊗1 + 122⊗∅");
        assert_eq!(g0_coproduct(&c("1")).unwrap().to_string(), "∅⊗1 + 1⊗∅");
        for n in 0..=10 {
            for a in Composition::proper_of_size(n) {
                assert!(g0_coproduct(&a).unwrap().terms().all(|(l, r, _)| l.is_proper() && r.is_proper()));
                assert_eq!(comp_coproduct(&a).len() as u32, n + 1);
            }
        }
    }

    #[test]
    fn sigma_iota() {
        assert!(sigma(&sum(&[("213", 1)])).is_zero());
        assert_eq!(sigma(&sum(&[("121", 1)])), sum(&[("121", 1)]));
        assert!(iota(&sum(&[("213", 1)])).is_err());
        for n in 0..=10 {
            for a in Composition::proper_of_size(n) {
                let x = CompSum::single(a);
                assert_eq!(sigma(&iota(&x).unwrap()), x);
            }
        }
    }

    #[test]
    fn duality() {
        for m in 0..=4 {
            for n in 0..=(7 - m) {
                for a in Composition::all_of_size(m) {
                    for b in Composition::all_of_size(n) {
                        let prod = comp_product(&a, &b);
                        let mut t = TensorSum::zero();
                        t.add_term(a.clone(), b.clone(), 1);
                        for g in Composition::all_of_size(m + n) {
                            assert_eq!(
                                pairing(&prod, &CompSum::single(g.clone())),
                                tensor_pairing(&t, &comp_coproduct(&g))
                            );
                        }
                    }
                }
            }
        }
        for m in 0..=7 {
            for a in Composition::all_of_size(m) {
                for b in Composition::proper_of_size(m) {
                    let (p, q) = (CompSum::single(a.clone()), CompSum::single(b.clone()));
                    assert_eq!(pairing(&sigma(&p), &q), pairing(&p, &iota(&q).unwrap()));
                }
            }
        }
    }

    #[test]
    fn g0_duality() {
        for m in 0..=4 {
            for n in 0..=(7 - m) {
                for a in Composition::proper_of_size(m) {
                    for b in Composition::proper_of_size(n) {
                        let prod = g0_product(&a, &b).unwrap();
                        let mut t = TensorSum::zero();
                        t.add_term(a.clone(), b.clone(), 1);
                        for g in Composition::proper_of_size(m + n) {
                            assert_eq!(
                                pairing(&prod, &CompSum::single(g.clone())),
                                tensor_pairing(&t, &g0_coproduct(&g).unwrap())
                            );
                        }
                        assert!(prod.terms().all(|(x, _)| x.is_proper()));
                    }
                }
            }
        }
    }

    #[test]
    fn antipodes() {
        assert_eq!(antipode_comp(&c("2")), (1, c("11")));
        assert_eq!(antipode_comp(&c("1")), (-1, c("1")));
        assert_eq!(antipode_comp(&c("3")), (-1, c("111")));
        assert_eq!(antipode_comp(&Composition::empty()), (1, Composition::empty()));
        assert_eq!(antipode_g0(&c("22")).unwrap(), sum(&[("121", 1)]));
        assert!(antipode_g0(&c("3")).unwrap().is_zero());
        assert!(!antipode_g0(&c("1221")).unwrap().is_zero());
        assert!(antipode_g0(&c("213")).is_err());
    }

    fn in_families(a: &Composition) -> bool {
        let p = a.parts();
        let inner = |s: &[u32]| s.iter().all(|&x| x == 2);
        match p {
            [] => true,
            [1] => true,
            [1, rest @ .., 1] => inner(rest),
            [1, rest @ ..] => inner(rest),
            [rest @ .., 1] => inner(rest),
            _ => inner(p),
        }
    }

    #[test]
    fn antipode_support_is_four_families() {
        for n in 0..=10 {
            for a in Composition::proper_of_size(n) {
                let nonzero = !antipode_g0(&a).unwrap().is_zero();
                assert_eq!(nonzero, in_families(&a), "{a}");
            }
        }
    }

    #[test]
    fn antipode_convolution() {
        let rep = verify_antipode(8);
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.compositions_checked, 256);
        let s = |a: &Composition| {
            let (sign, c) = antipode_comp(a);
            CompSum::signed(c, sign)
        };
        let (left, _) = antipode_convolutions(&c("1"), s, comp_product);
        assert!(left.is_zero());
        let (left, right) = antipode_convolutions(&Composition::empty(), s, comp_product);
        assert_eq!((left.clone(), right), (CompSum::single(Composition::empty()), left));
        assert!(verify_antipode_g0(8).passed());
    }

    #[test]
    fn not_a_bialgebra() {
        let w = non_bialgebra_witness();
        assert!(w.differs());
        assert_eq!(w.coproduct_of_product.to_string(), "∅⊗12 + 1⊗2 + 11⊗1 + 12⊗∅");
    }

    #[test]
    fn fibonacci_decompositions() {
        let even: VertexSet = [1, 3, 5].into_iter().collect();
        let mut terms: Vec<u128> = fib_decomposition(6, even).unwrap().into_iter().map(|x| x.1).collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(terms, vec![8, 4, 2, 2, 2, 1, 1, 1]);
        // n = 5 both ways: over subsets of the odd vertices, then of the even ones
        for (r, expected) in [(vec![1, 3], vec![4, 2, 2, 1, 1, 1, 1, 1]), (vec![0, 2, 4], vec![8, 2, 2, 1])] {
            let mut terms: Vec<u128> =
                fib_decomposition(5, r.into_iter().collect()).unwrap().into_iter().map(|x| x.1).collect();
            terms.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(terms, expected);
        }
        for n in 1..=12usize {
            let t = fib_decomposition(n, VertexSet::EMPTY).unwrap();
            assert!(t.iter().all(|x| x.1 == 1));
            assert_eq!(t.len() as u128, fibonacci(n as u32 + 2));
            for m in 1..n {
                let t = fib_decomposition(n, VertexSet::full(m)).unwrap();
                let total: u128 = t.iter().map(|x| x.1).sum();
                let (n, m) = (n as u32, m as u32);
                assert_eq!(total, fibonacci(m + 2) * fibonacci(n - m + 1) + fibonacci(m + 1) * fibonacci(n - m));
                assert_eq!(total, fibonacci(n + 2));
            }
        }
        assert!(fib_decomposition(26, VertexSet::EMPTY).is_err());
    }
}
