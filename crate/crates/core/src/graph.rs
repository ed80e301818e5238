//! Edge-set graphs over string vertex labels.
//!
//! A [`Graph`] is nothing more than a finite set of undirected edges; its
//! vertex set is implied by the edge endpoints, so a `Graph` can never hold an
//! isolated vertex. Union and difference are plain set operations.
//! [`LabeledGraph`] carries an explicit vertex set and is what vertex deletion
//! produces, so that stranded vertices survive as singleton components.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Prefix reserved for vertices generated by [`fresh_vertices`].
pub const FRESH_PREFIX: &str = "_";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: expected two vertex tokens, found {found:?}")]
    MalformedLine { line: usize, found: String },
    #[error("line {line}: loop edge on vertex {vertex}")]
    LoopEdge { line: usize, vertex: String },
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("vertex {0} is not a vertex of the graph")]
    ForeignVertex(String),
    #[error("degenerate construction: {0}")]
    DegenerateShape(String),
}

/// A vertex name: a non-empty token without whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(text: impl Into<String>) -> Result<Self, GraphError> {
        let text = text.into();
        if text.is_empty() || text.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidLabel(text));
        }
        Ok(VertexLabel(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_fresh(&self) -> bool {
        self.0.starts_with(FRESH_PREFIX)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VertexLabel::new(s)
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexLabel,
    hi: VertexLabel,
}

impl Edge {
    pub fn new(u: VertexLabel, v: VertexLabel) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(GraphError::LoopEdge {
                line: 0,
                vertex: u.0,
            }),
        }
    }

    /// Builds an edge from two label strings.
    pub fn between(u: &str, v: &str) -> Result<Self, GraphError> {
        Edge::new(VertexLabel::new(u)?, VertexLabel::new(v)?)
    }

    pub fn endpoints(&self) -> (&VertexLabel, &VertexLabel) {
        (&self.lo, &self.hi)
    }

    pub fn touches(&self, v: &VertexLabel) -> bool {
        &self.lo == v || &self.hi == v
    }

    pub fn other(&self, v: &VertexLabel) -> Option<&VertexLabel> {
        if &self.lo == v {
            Some(&self.hi)
        } else if &self.hi == v {
            Some(&self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lo, self.hi)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(serializer)
    }
}

/// A finite set of edges. The vertex set is implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Graph {
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from `(u, v)` label pairs.
    pub fn from_pairs<'a, I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        pairs
            .into_iter()
            .map(|(u, v)| Edge::between(u, v))
            .collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn vertices(&self) -> BTreeSet<VertexLabel> {
        self.edges
            .iter()
            .flat_map(|e| [e.lo.clone(), e.hi.clone()])
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn degree(&self, v: &VertexLabel) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexLabel, usize> {
        let mut out = BTreeMap::new();
        for e in &self.edges {
            *out.entry(e.lo.clone()).or_insert(0) += 1;
            *out.entry(e.hi.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn neighbors(&self, v: &VertexLabel) -> BTreeSet<VertexLabel> {
        self.edges.iter().filter_map(|e| e.other(v).cloned()).collect()
    }

    pub fn union(&self, other: &Graph) -> Graph {
        Graph {
            edges: self.edges.union(&other.edges).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &Graph) -> Graph {
        Graph {
            edges: self.edges.difference(&other.edges).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &Graph) -> Graph {
        Graph {
            edges: self.edges.intersection(&other.edges).cloned().collect(),
        }
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut edges = self.edges.clone();
        edges.insert(e);
        Graph { edges }
    }

    pub fn without_edge(&self, e: &Edge) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph { edges }
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    /// Explicit-vertex view of this graph.
    pub fn labeled(&self) -> LabeledGraph {
        LabeledGraph {
            vertices: self.vertices(),
            edges: self.edges.clone(),
        }
    }

    /// Canonical text form: one edge per line, sorted, no trailing newline.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl FromIterator<Edge> for Graph {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Graph {
            edges: iter.into_iter().collect(),
        }
    }
}

impl Extend<Edge> for Graph {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.edges.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Parses the line-oriented edge list format.
///
/// Blank lines and lines starting with `#` are skipped. Every other line must
/// hold exactly two whitespace-separated tokens naming distinct vertices.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(GraphError::MalformedLine {
                line: idx + 1,
                found: line.to_string(),
            });
        };
        if u == v {
            return Err(GraphError::LoopEdge {
                line: idx + 1,
                vertex: u.to_string(),
            });
        }
        g.insert(Edge::between(u, v)?);
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    g.serialize()
}

pub fn graph_union(g: &Graph, h: &Graph) -> Graph {
    g.union(h)
}

/// A graph with an explicit vertex set; isolated vertices are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: BTreeSet<VertexLabel>,
    edges: BTreeSet<Edge>,
}

impl LabeledGraph {
    pub fn new(
        vertices: BTreeSet<VertexLabel>,
        edges: BTreeSet<Edge>,
    ) -> Result<Self, GraphError> {
        for e in &edges {
            for v in [&e.lo, &e.hi] {
                if !vertices.contains(v) {
                    return Err(GraphError::ForeignVertex(v.to_string()));
                }
            }
        }
        Ok(LabeledGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexLabel> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Removes the given vertices and every edge touching them.
    pub fn delete_vertices(&self, c: &BTreeSet<VertexLabel>) -> LabeledGraph {
        LabeledGraph {
            vertices: self.vertices.difference(c).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| !c.contains(&e.lo) && !c.contains(&e.hi))
                .cloned()
                .collect(),
        }
    }

    pub fn components(&self) -> ComponentFamily {
        let mut adj: BTreeMap<&VertexLabel, Vec<&VertexLabel>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.lo).expect("endpoint").push(&e.hi);
            adj.get_mut(&e.hi).expect("endpoint").push(&e.lo);
        }
        let mut seen: BTreeSet<&VertexLabel> = BTreeSet::new();
        let mut parts = BTreeSet::new();
        for start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut part = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                part.insert(v.clone());
                for &w in &adj[v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            parts.insert(part);
        }
        ComponentFamily { parts }
    }
}

/// The vertex sets of the connected components of some graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentFamily {
    parts: BTreeSet<BTreeSet<VertexLabel>>,
}

impl ComponentFamily {
    pub fn parts(&self) -> &BTreeSet<BTreeSet<VertexLabel>> {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part holding `v`, if any.
    pub fn part_of(&self, v: &VertexLabel) -> Option<&BTreeSet<VertexLabel>> {
        self.parts.iter().find(|p| p.contains(v))
    }
}

impl FromIterator<BTreeSet<VertexLabel>> for ComponentFamily {
    fn from_iter<I: IntoIterator<Item = BTreeSet<VertexLabel>>>(iter: I) -> Self {
        ComponentFamily {
            parts: iter.into_iter().collect(),
        }
    }
}

/// Components of `g - c`, with stranded vertices as singleton parts.
pub fn components_after_deletion(
    g: &Graph,
    c: &BTreeSet<VertexLabel>,
) -> Result<ComponentFamily, GraphError> {
    let vertices = g.vertices();
    if let Some(v) = c.iter().find(|v| !vertices.contains(*v)) {
        return Err(GraphError::ForeignVertex(v.to_string()));
    }
    Ok(g.labeled().delete_vertices(c).components())
}

/// `count` distinct labels `_0`, `_1`, ... skipping anything in `avoid`.
pub fn fresh_vertices(count: usize, avoid: &BTreeSet<VertexLabel>) -> Vec<VertexLabel> {
    (0..)
        .map(|i| VertexLabel(format!("{FRESH_PREFIX}{i}")))
        .filter(|v| !avoid.contains(v))
        .take(count)
        .collect()
}

pub fn build_complete(vertices: &BTreeSet<VertexLabel>) -> Result<Graph, GraphError> {
    if vertices.len() < 2 {
        return Err(GraphError::DegenerateShape(
            "a complete graph needs at least two vertices".into(),
        ));
    }
    let vs: Vec<&VertexLabel> = vertices.iter().collect();
    let mut g = Graph::new();
    for (i, u) in vs.iter().enumerate() {
        for v in &vs[i + 1..] {
            g.insert(Edge::new((*u).clone(), (*v).clone())?);
        }
    }
    Ok(g)
}

/// Joins every pair of vertices lying in different blocks.
pub fn build_complete_multipartite(blocks: &[BTreeSet<VertexLabel>]) -> Result<Graph, GraphError> {
    if blocks.len() < 2 || blocks.iter().any(BTreeSet::is_empty) {
        return Err(GraphError::DegenerateShape(
            "a complete multipartite graph needs at least two nonempty blocks".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    for v in blocks.iter().flatten() {
        if !seen.insert(v) {
            return Err(GraphError::DegenerateShape(format!(
                "vertex {v} appears in two blocks"
            )));
        }
    }
    let mut g = Graph::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for u in a {
                for v in b {
                    g.insert(Edge::new(u.clone(), v.clone())?);
                }
            }
        }
    }
    Ok(g)
}

/// Path through the given vertices in order.
pub fn build_path(vertices: &[&str]) -> Result<Graph, GraphError> {
    vertices
        .windows(2)
        .map(|w| Edge::between(w[0], w[1]))
        .collect()
}

/// Cycle through the given vertices in order; needs at least three.
pub fn build_cycle(vertices: &[&str]) -> Result<Graph, GraphError> {
    if vertices.len() < 3 {
        return Err(GraphError::DegenerateShape(
            "a cycle needs at least three vertices".into(),
        ));
    }
    let mut g = build_path(vertices)?;
    g.insert(Edge::between(vertices[vertices.len() - 1], vertices[0])?);
    Ok(g)
}

/// Convenience for label sets in tests and builders.
pub fn label_set<'a, I: IntoIterator<Item = &'a str>>(
    labels: I,
) -> Result<BTreeSet<VertexLabel>, GraphError> {
    labels.into_iter().map(VertexLabel::new).collect()
}
