use std::fmt::Write as _;

use super::{CoxeterDiagram, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An undirected simple graph on named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    adjacency: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new() -> Self {
        SimpleGraph { names: Vec::new(), adjacency: Vec::new() }
    }

    /// Graph on vertices `1..=n` with no edges.
    pub fn empty(n: usize) -> Self {
        let mut g = SimpleGraph::new();
        for i in 1..=n {
            g.add_vertex(&i.to_string()).expect("fresh name");
        }
        g
    }

    /// The path `1 – 2 – … – n`.
    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i).expect("valid edge");
        }
        g
    }

    /// The cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid edge");
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v).expect("valid edge");
        }
        g
    }

    /// Underlying graph of a Coxeter diagram (weights forgotten).
    pub fn from_diagram(d: &CoxeterDiagram) -> Self {
        let mut g = SimpleGraph::new();
        for name in d.names() {
            g.add_vertex(name).expect("diagram names are distinct");
        }
        for (u, v, _) in d.edges() {
            g.add_edge(u, v).expect("diagram edges are simple");
        }
        g
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        if self.names.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices { count: MAX_VERTICES + 1, limit: MAX_VERTICES });
        }
        self.names.push(name.to_string());
        self.adjacency.push(VertexSet::EMPTY);
        Ok(self.names.len() - 1)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        if self.adjacency[u].contains(v) {
            return Err(Error::Syntax {
                line: 0,
                message: format!("edge `{}`-`{}` given twice", self.names[u], self.names[v]),
            });
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
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

    pub fn set_of(&self, names: &[&str]) -> Result<VertexSet> {
        names.iter().map(|n| self.index_of(n)).collect::<Result<Vec<_>>>().map(VertexSet::from_iter)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// N(U): vertices adjacent to some member of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adjacency[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |u| {
            self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    /// Graph induced on `set`, keeping relative vertex order.
    pub fn induced(&self, set: VertexSet) -> SimpleGraph {
        let mut g = SimpleGraph::new();
        let mut map = vec![usize::MAX; self.len()];
        for v in set {
            map[v] = g.add_vertex(&self.names[v]).expect("distinct");
        }
        for (u, v) in self.edges() {
            if set.contains(u) && set.contains(v) {
                g.add_edge(map[u], map[v]).expect("simple");
            }
        }
        g
    }

    pub fn format_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.names[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses the graph format: a `graph` header line, then `vertex <name> [nil]`
    /// and `edge <u> <v>` lines. Returns the graph and the set of `nil` vertices.
    pub fn parse(text: &str) -> Result<(SimpleGraph, VertexSet)> {
        let mut g = SimpleGraph::new();
        let mut nil = VertexSet::EMPTY;
        let mut header = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            for stmt in content.split(';') {
                let tokens: Vec<&str> = stmt.split_whitespace().collect();
                if tokens.is_empty() {
                    continue;
                }
                let syntax = |message: String| Error::Syntax { line, message };
                if !header {
                    if tokens != ["graph"] {
                        return Err(syntax("expected `graph` header".into()));
                    }
                    header = true;
                    continue;
                }
                match tokens[..] {
                    ["vertex", name] => {
                        g.add_vertex(name)?;
                    }
                    ["vertex", name, "nil"] => {
                        let v = g.add_vertex(name)?;
                        nil.insert(v);
                    }
                    ["edge", u, v] => {
                        let (u, v) = (g.index_of(u)?, g.index_of(v)?);
                        g.add_edge(u, v).map_err(|e| match e {
                            Error::Syntax { message, .. } => Error::Syntax { line, message },
                            other => other,
                        })?;
                    }
                    _ => return Err(syntax(format!("cannot parse `{}`", tokens.join(" ")))),
                }
            }
        }
        if !header {
            return Err(Error::Syntax { line: 1, message: "expected `graph` header".into() });
        }
        Ok((g, nil))
    }

    pub fn to_text(&self, nil: VertexSet) -> String {
        let mut out = String::from("graph\n");
        for (i, name) in self.names.iter().enumerate() {
            if nil.contains(i) {
                writeln!(out, "vertex {name} nil").unwrap();
            } else {
                writeln!(out, "vertex {name}").unwrap();
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "edge {} {}", self.names[u], self.names[v]).unwrap();
        }
        out
    }
}

impl Default for SimpleGraph {
    fn default() -> Self {
        SimpleGraph::new()
    }
}
