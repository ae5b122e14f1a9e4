//! The transition digraph whose Euler tours are overlap cycles.
//!
//! Given a duplicate-free set of equal-length words and an overlap `s`, the
//! digraph has one vertex per observed `s`-prefix or `s`-suffix and one edge
//! per word, running from the word's `s`-prefix to its `s`-suffix. A word
//! may follow another in an `s`-overlap cycle exactly when the first word's
//! suffix vertex is the second word's prefix vertex, so cyclic orderings of
//! the whole set correspond one-to-one with Euler tours.
//!
//! A directed multigraph has an Euler tour if and only if every vertex has
//! equal in- and out-degree and all edges lie in one weakly connected
//! component. [`TransitionDigraph::euler_tour`] checks both conditions
//! before walking and reports a witness vertex or component pair on failure.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Infeasibility, ParameterError};
use crate::word::Word;

/// One edge of the transition digraph: a word together with its endpoint
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// The word's `s`-prefix.
    pub tail: Word,
    /// The word's `s`-suffix.
    pub head: Word,
    /// The word itself.
    pub label: Word,
}

/// Transition digraph over a fixed object set and overlap; see the module
/// docs. Immutable once built, so tours and component queries can run
/// side by side.
#[derive(Clone, Debug)]
pub struct TransitionDigraph {
    overlap: usize,
    word_len: usize,
    /// Sorted ascending; index is the vertex id.
    vertices: Vec<Word>,
    /// Sorted by label; index is the edge id.
    edges: Vec<(usize, usize, Word)>,
    /// Out-edges per vertex, each list ascending by label.
    out_edges: Vec<Vec<usize>>,
    in_degree: Vec<usize>,
}

/// Builds the transition digraph for `objects` with overlap `s`.
///
/// The objects must be nonempty, share one length `n` with `1 <= s <= n-1`,
/// and contain no duplicates; order does not matter (edges sort by label
/// internally).
pub fn build_digraph(objects: &[Word], s: usize) -> Result<TransitionDigraph, ParameterError> {
    let first = objects.first().ok_or(ParameterError::EmptyObjectSet)?;
    let n = first.len();
    if let Some(bad) = objects.iter().find(|w| w.len() != n) {
        return Err(ParameterError::MixedWordLengths {
            expected: n,
            found: bad.len(),
        });
    }
    if s == 0 || s >= n {
        return Err(ParameterError::OverlapOutOfRange { s, n });
    }

    let mut labels: Vec<&Word> = objects.iter().collect();
    labels.sort();
    if let Some(pair) = labels.windows(2).find(|p| p[0] == p[1]) {
        return Err(ParameterError::DuplicateObject {
            word: pair[0].to_string(),
        });
    }

    let mut vertex_set = BTreeSet::new();
    for label in &labels {
        vertex_set.insert(label.prefix(s));
        vertex_set.insert(label.suffix(s));
    }
    let vertices: Vec<Word> = vertex_set.into_iter().collect();
    let ids: BTreeMap<&Word, usize> = vertices.iter().zip(0..).collect();

    let mut edges = Vec::with_capacity(labels.len());
    let mut out_edges = vec![Vec::new(); vertices.len()];
    let mut in_degree = vec![0usize; vertices.len()];
    for label in labels {
        let tail = ids[&label.prefix(s)];
        let head = ids[&label.suffix(s)];
        out_edges[tail].push(edges.len());
        in_degree[head] += 1;
        edges.push((tail, head, label.clone()));
    }

    Ok(TransitionDigraph {
        overlap: s,
        word_len: n,
        vertices,
        edges,
        out_edges,
        in_degree,
    })
}

impl TransitionDigraph {
    /// The overlap `s`; vertices are words of this length.
    pub fn overlap(&self) -> usize {
        self.overlap
    }

    /// The common object length `n`; edge labels are words of this length.
    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The vertices in increasing order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// The edges in increasing label order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|&(tail, head, ref label)| Edge {
            tail: self.vertices[tail].clone(),
            head: self.vertices[head].clone(),
            label: label.clone(),
        })
    }

    /// Number of edges leaving `vertex`, or None if it is not a vertex.
    pub fn out_degree(&self, vertex: &Word) -> Option<usize> {
        self.vertex_id(vertex).map(|v| self.out_edges[v].len())
    }

    /// Number of edges entering `vertex`, or None if it is not a vertex.
    pub fn in_degree(&self, vertex: &Word) -> Option<usize> {
        self.vertex_id(vertex).map(|v| self.in_degree[v])
    }

    fn vertex_id(&self, vertex: &Word) -> Option<usize> {
        self.vertices.binary_search(vertex).ok()
    }

    /// True when every vertex has equal in- and out-degree.
    pub fn is_balanced(&self) -> bool {
        self.balance_witness().is_none()
    }

    /// The least vertex whose degrees differ, with (out, in), if any.
    pub fn balance_witness(&self) -> Option<(Word, usize, usize)> {
        (0..self.vertices.len())
            .find(|&v| self.out_edges[v].len() != self.in_degree[v])
            .map(|v| (self.vertices[v].clone(), self.out_edges[v].len(), self.in_degree[v]))
    }

    /// The weakly connected components as sorted vertex lists, ordered by
    /// their least vertex. Every vertex is an edge endpoint, so no
    /// component is edgeless.
    pub fn weak_components(&self) -> Vec<Vec<Word>> {
        let mut dsu = DisjointSets::new(self.vertices.len());
        for &(tail, head, _) in &self.edges {
            dsu.unite(tail, head);
        }
        let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
        for v in 0..self.vertices.len() {
            groups
                .entry(dsu.find(v))
                .or_default()
                .push(self.vertices[v].clone());
        }
        // Vertex ids ascend in word order, so each group is already sorted
        // and the map keyed by least member yields deterministic output.
        let mut components: Vec<Vec<Word>> = groups.into_values().collect();
        components.sort_by(|a, b| a[0].cmp(&b[0]));
        components
    }

    /// A closed walk using every edge exactly once, or a witness that none
    /// exists.
    ///
    /// Deterministic by construction: the tour starts at the least vertex
    /// and always extends along the unused out-edge with the least label.
    pub fn euler_tour(&self) -> Result<EulerTour, Infeasibility> {
        if let Some((vertex, out_degree, in_degree)) = self.balance_witness() {
            return Err(Infeasibility::Unbalanced {
                vertex,
                out_degree,
                in_degree,
            });
        }
        let components = self.weak_components();
        if components.len() > 1 {
            return Err(Infeasibility::Disconnected {
                components: components.len(),
                first: components[0][0].clone(),
                second: components[1][0].clone(),
            });
        }

        // Hierholzer with an explicit stack. Cursors never revisit an edge,
        // and balance guarantees every entry into a vertex can leave again,
        // so the walk closes; connectivity guarantees it covers all edges.
        let mut cursor = vec![0usize; self.vertices.len()];
        let mut vertex_stack = vec![0usize];
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut circuit: Vec<usize> = Vec::with_capacity(self.edges.len());
        while let Some(&v) = vertex_stack.last() {
            if cursor[v] < self.out_edges[v].len() {
                let e = self.out_edges[v][cursor[v]];
                cursor[v] += 1;
                vertex_stack.push(self.edges[e].1);
                edge_stack.push(e);
            } else {
                vertex_stack.pop();
                if let Some(e) = edge_stack.pop() {
                    circuit.push(e);
                }
            }
        }
        circuit.reverse();
        debug_assert_eq!(circuit.len(), self.edges.len());

        let steps: Vec<Edge> = circuit
            .into_iter()
            .map(|e| {
                let (tail, head, ref label) = self.edges[e];
                Edge {
                    tail: self.vertices[tail].clone(),
                    head: self.vertices[head].clone(),
                    label: label.clone(),
                }
            })
            .collect();
        Ok(EulerTour { steps })
    }
}

/// A closed edge sequence covering a transition digraph: consecutive steps
/// chain head to tail, wrapping at the end.
#[derive(Clone, Debug)]
pub struct EulerTour {
    steps: Vec<Edge>,
}

impl EulerTour {
    /// The edges in tour order.
    pub fn steps(&self) -> &[Edge] {
        &self.steps
    }

    /// The edge labels (the objects) in tour order.
    pub fn labels(&self) -> impl Iterator<Item = &Word> {
        self.steps.iter().map(|e| &e.label)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Union-find with path compression and union by size.
struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
