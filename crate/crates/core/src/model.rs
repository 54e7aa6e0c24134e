//! Canonical hypergraph model: vertices `1..=n` plus a set of distinct
//! non-empty edges of arbitrary cardinality.
//!
//! Hypergraphs are immutable after construction and always held in canonical
//! form: vertices inside an edge sorted ascending, the edge list sorted
//! lexicographically, no duplicate edges. Every downstream enumeration
//! (entry streams, solvers, reports) inherits determinism from this.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

/// Vertices are 1-based integers, matching the usual notation for small
/// worked examples and the on-disk formats.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("vertex {vertex} out of range 1..={n} (edge {index})")]
    VertexOutOfRange {
        index: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("vertex {vertex} repeated within edge {index}")]
    RepeatedVertex { index: usize, vertex: Vertex },
    #[error("duplicate edge (canonical index {index})")]
    DuplicateEdge { index: usize },
    #[error("hypergraph has no edges")]
    NoEdges,
}

/// A non-empty set of vertices, stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    vertices: Vec<Vertex>,
}

impl Edge {
    /// Builds an edge from an arbitrary vertex list; sorts and rejects
    /// repeats. `index` is only used to label errors.
    fn from_raw(index: usize, mut vertices: Vec<Vertex>, n: usize) -> Result<Self, ModelError> {
        if vertices.is_empty() {
            return Err(ModelError::EmptyEdge { index });
        }
        for &v in &vertices {
            if v == 0 || v > n {
                return Err(ModelError::VertexOutOfRange {
                    index,
                    vertex: v,
                    n,
                });
            }
        }
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(ModelError::RepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge cardinality `s`.
    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// A general hypergraph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Validates and canonicalizes. Edge order and vertex order within an
    /// edge are irrelevant on input; duplicate edges (as sets) are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = Vertex>,
    {
        if n == 0 {
            return Err(ModelError::NoVertices);
        }
        let mut canon: Vec<Edge> = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| Edge::from_raw(i, e.into_iter().collect(), n))
            .collect::<Result<_, _>>()?;
        canon.sort();
        for (i, w) in canon.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(ModelError::DuplicateEdge { index: i + 1 });
            }
        }
        Ok(Self { n, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Maximum cardinality over edges, `m.c.e`.
    pub fn mce(&self) -> Result<usize, ModelError> {
        self.edges
            .iter()
            .map(Edge::cardinality)
            .max()
            .ok_or(ModelError::NoEdges)
    }

    /// Per-vertex edge membership counts.
    pub fn degrees(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e.vertices() {
                degrees[v - 1] += 1;
            }
        }
        DegreeProfile::new(degrees)
    }

    /// Edges containing `v`, as indices into `edges()`.
    pub fn incident_edges(&self, v: Vertex) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Connected components under "share an edge" adjacency.
    ///
    /// Each component carries the parent vertex ids (sorted) and the
    /// re-indexed sub-hypergraph on `1..=len`; `vertices[i-1]` is the parent
    /// id of local vertex `i`. Isolated vertices form edgeless singleton
    /// components.
    pub fn components(&self) -> Vec<Component> {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0usize;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut stack = vec![start];
            label[start] = id;
            while let Some(v) = stack.pop() {
                for e in &self.edges {
                    if !e.contains(v + 1) {
                        continue;
                    }
                    for &w in e.vertices() {
                        if label[w - 1] == usize::MAX {
                            label[w - 1] = id;
                            stack.push(w - 1);
                        }
                    }
                }
            }
        }

        let mut comps = Vec::with_capacity(count);
        for id in 0..count {
            let vertices: Vec<Vertex> = (1..=self.n).filter(|&v| label[v - 1] == id).collect();
            let mut local = vec![0usize; self.n + 1];
            for (i, &v) in vertices.iter().enumerate() {
                local[v] = i + 1;
            }
            let edges: Vec<Vec<Vertex>> = self
                .edges
                .iter()
                .filter(|e| label[e.vertices()[0] - 1] == id)
                .map(|e| e.vertices().iter().map(|&v| local[v]).collect())
                .collect();
            let hypergraph = Hypergraph::new(vertices.len(), edges)
                .expect("component of a canonical hypergraph is canonical");
            comps.push(Component {
                vertices,
                hypergraph,
            });
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// One connected component with its parent-id map.
#[derive(Debug, Clone)]
pub struct Component {
    /// Parent vertex ids, ascending; position `i` holds local vertex `i+1`.
    pub vertices: Vec<Vertex>,
    pub hypergraph: Hypergraph,
}

/// Degree sequence with the derived regularity facts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
    delta_max: usize,
    regular: Option<usize>,
}

impl DegreeProfile {
    fn new(degrees: Vec<usize>) -> Self {
        let delta_max = degrees.iter().copied().max().unwrap_or(0);
        let regular = match degrees.first() {
            Some(&k) if degrees.iter().all(|&d| d == k) => Some(k),
            _ => None,
        };
        Self {
            degrees,
            delta_max,
            regular,
        }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v - 1]
    }

    /// Maximum degree.
    pub fn delta_max(&self) -> usize {
        self.delta_max
    }

    pub fn is_regular(&self) -> bool {
        self.regular.is_some()
    }

    /// The common degree `k` when every vertex has it.
    pub fn regular_k(&self) -> Option<usize> {
        self.regular
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }
}
