//! Parameter-labelled Coxeter diagrams and the plain graphs used by the
//! commutative algebras.

mod graph;
mod vertex_set;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use graph::SimpleGraph;
pub use vertex_set::{VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Weight of a stored edge. Absent edges mean m = 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeWeight {
    Finite(u32),
    Infinite,
}

impl EdgeWeight {
    pub fn is_odd(self) -> bool {
        matches!(self, EdgeWeight::Finite(m) if m % 2 == 1)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            EdgeWeight::Finite(m) => Some(m),
            EdgeWeight::Infinite => None,
        }
    }
}

impl std::fmt::Display for EdgeWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeWeight::Finite(m) => write!(f, "{m}"),
            EdgeWeight::Infinite => write!(f, "inf"),
        }
    }
}

/// A Coxeter diagram whose vertices carry field parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    field: Field,
    names: Vec<String>,
    params: Vec<Scalar>,
    edges: BTreeMap<(usize, usize), EdgeWeight>,
    adjacency: Vec<VertexSet>,
}

impl CoxeterDiagram {
    pub fn new(field: Field) -> Self {
        CoxeterDiagram {
            field,
            names: Vec::new(),
            params: Vec::new(),
            edges: BTreeMap::new(),
            adjacency: Vec::new(),
        }
    }

    /// A path `v1 – v2 – …` with the given parameters and all weights 3.
    pub fn path(field: Field, params: &[i64]) -> Self {
        let mut d = CoxeterDiagram::new(field);
        for (i, &q) in params.iter().enumerate() {
            d.add_vertex(&format!("s{}", i + 1), field.from_i64(q)).expect("fresh name");
            if i > 0 {
                d.add_edge(i - 1, i, EdgeWeight::Finite(3)).expect("valid edge");
            }
        }
        d
    }

    pub fn add_vertex(&mut self, name: &str, param: Scalar) -> Result<usize> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        if self.names.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices { count: MAX_VERTICES + 1, limit: MAX_VERTICES });
        }
        if param.field() != self.field {
            return Err(Error::FieldMismatch(format!(
                "parameter of `{name}` lives in {}, diagram uses {}",
                param.field(),
                self.field
            )));
        }
        self.names.push(name.to_string());
        self.params.push(param);
        self.adjacency.push(VertexSet::EMPTY);
        Ok(self.names.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: EdgeWeight) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        if let EdgeWeight::Finite(m) = weight {
            if m < 3 {
                return Err(Error::InvalidWeight {
                    u: self.names[u].clone(),
                    v: self.names[v].clone(),
                    weight: m.to_string(),
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key, weight).is_some() {
            return Err(Error::Syntax {
                line: 0,
                message: format!("edge `{}`-`{}` given twice", self.names[u], self.names[v]),
            });
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Resolves a list of names to a vertex set.
    pub fn set_of(&self, names: &[&str]) -> Result<VertexSet> {
        names.iter().map(|n| self.index_of(n)).collect::<Result<Vec<_>>>().map(VertexSet::from_iter)
    }

    pub fn param(&self, i: usize) -> &Scalar {
        &self.params[i]
    }

    pub fn params(&self) -> &[Scalar] {
        &self.params
    }

    /// Weight of the pair, `None` when the vertices commute (m = 2).
    pub fn weight(&self, u: usize, v: usize) -> Option<EdgeWeight> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeWeight)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn zero_params(&self) -> VertexSet {
        (0..self.len()).filter(|&i| self.params[i].is_zero()).collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.values().all(|&w| w == EdgeWeight::Finite(3))
    }

    /// Diagram on `subset`, keeping the original relative vertex order.
    pub fn induced_subdiagram(&self, subset: VertexSet) -> Result<CoxeterDiagram> {
        if let Some(bad) = (subset - self.vertices()).min() {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        let mut d = CoxeterDiagram::new(self.field);
        let mut map = vec![usize::MAX; self.len()];
        for i in subset {
            map[i] = d.add_vertex(&self.names[i], self.params[i].clone())?;
        }
        for (u, v, w) in self.edges() {
            if subset.contains(u) && subset.contains(v) {
                d.add_edge(map[u], map[v], w)?;
            }
        }
        Ok(d)
    }

    /// Components of the graph restricted to `within`, keeping only the edges
    /// accepted by `keep`. Ordered by least vertex index.
    pub fn components_where(
        &self,
        within: VertexSet,
        keep: impl Fn(usize, usize, EdgeWeight) -> bool,
    ) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in within {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.adjacency[u] & within {
                    if !comp.contains(v) && keep(u, v, self.weight(u, v).expect("adjacent")) {
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_where(self.vertices(), |_, _, _| true)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Renders a vertex set as `{a,b,c}`.
    pub fn format_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses the line-oriented diagram format. `;` also separates statements.
    pub fn parse(text: &str) -> Result<CoxeterDiagram> {
        let mut diagram: Option<CoxeterDiagram> = None;
        let mut vertex_count = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            for stmt in content.split(';') {
                let tokens: Vec<&str> = stmt.split_whitespace().collect();
                if tokens.is_empty() {
                    continue;
                }
                let syntax = |message: String| Error::Syntax { line, message };
                match tokens[0] {
                    "field" => {
                        if diagram.is_some() {
                            return Err(syntax("`field` must precede all other statements".into()));
                        }
                        let field = match tokens[1..] {
                            ["rational"] => Field::Rational,
                            ["fp", p] => {
                                let p: u64 = p.parse().map_err(|_| syntax(format!("bad modulus `{p}`")))?;
                                Field::prime(p)?
                            }
                            _ => return Err(syntax("expected `field rational` or `field fp <p>`".into())),
                        };
                        diagram = Some(CoxeterDiagram::new(field));
                    }
                    "vertex" => {
                        let d = diagram.get_or_insert_with(|| CoxeterDiagram::new(Field::Rational));
                        let [_, name, q] = tokens[..] else {
                            return Err(syntax("expected `vertex <name> q=<value>`".into()));
                        };
                        let value = q
                            .strip_prefix("q=")
                            .ok_or_else(|| syntax(format!("expected `q=<value>`, found `{q}`")))?;
                        vertex_count += 1;
                        if vertex_count > MAX_VERTICES {
                            return Err(Error::TooManyVertices { count: vertex_count, limit: MAX_VERTICES });
                        }
                        let param = d.field.parse(value)?;
                        d.add_vertex(name, param)?;
                    }
                    "edge" => {
                        let d = diagram.get_or_insert_with(|| CoxeterDiagram::new(Field::Rational));
                        let [_, u, v, m] = tokens[..] else {
                            return Err(syntax("expected `edge <u> <v> <m|inf>`".into()));
                        };
                        let (ui, vi) = (d.index_of(u)?, d.index_of(v)?);
                        let weight = if m == "inf" {
                            EdgeWeight::Infinite
                        } else {
                            let m: u32 = m.parse().map_err(|_| Error::InvalidWeight {
                                u: u.into(),
                                v: v.into(),
                                weight: m.into(),
                            })?;
                            EdgeWeight::Finite(m)
                        };
                        d.add_edge(ui, vi, weight).map_err(|e| match e {
                            Error::Syntax { message, .. } => Error::Syntax { line, message },
                            other => other,
                        })?;
                    }
                    other => return Err(syntax(format!("unknown statement `{other}`"))),
                }
            }
        }
        Ok(diagram.unwrap_or_else(|| CoxeterDiagram::new(Field::Rational)))
    }

    /// Serializes to the format accepted by [`CoxeterDiagram::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.field {
            Field::Rational => out.push_str("field rational\n"),
            Field::Prime(p) => writeln!(out, "field fp {p}").unwrap(),
        }
        for (name, q) in self.names.iter().zip(&self.params) {
            writeln!(out, "vertex {name} q={q}").unwrap();
        }
        for (u, v, w) in self.edges() {
            writeln!(out, "edge {} {} {}", self.names[u], self.names[v], w).unwrap();
        }
        out
    }
}
