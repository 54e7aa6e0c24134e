//! Hypergraph combinators with predictable spectral behavior: Cartesian
//! products (eigenvalue additivity), spanning subhypergraphs, the partition
//! of the edge set by cardinality, and small regular families used as
//! fixtures.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::eigen::{h_residual, EigenPair, PairKind};
use crate::model::{Hypergraph, ModelError, Vertex};
use crate::tensor::{TensorError, TensorKind, TensorOperator};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error("maximum edge cardinalities differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("product assembly needs H-kind pairs")]
    PairKindNotH,
    #[error("edge selection is empty")]
    EmptyKeep,
    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndexOutOfRange { index: usize, count: usize },
    #[error("infeasible family spec: {reason}")]
    InfeasibleSpec { reason: &'static str },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Row-major bijection between factor vertex pairs and product vertices:
/// `(a, b) ↔ (a-1)·n2 + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexMap {
    pub n1: usize,
    pub n2: usize,
}

impl ProductIndexMap {
    pub fn product_id(&self, a: Vertex, b: Vertex) -> Vertex {
        (a - 1) * self.n2 + b
    }

    pub fn factors(&self, id: Vertex) -> (Vertex, Vertex) {
        ((id - 1) / self.n2 + 1, (id - 1) % self.n2 + 1)
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Cartesian product: vertices `V(G) × V(H)`; edges `{v} × e` for every
/// vertex of `G` and edge of `H`, and `e × {v}` for every edge of `G` and
/// vertex of `H`. The two families are merged as sets (they can collide
/// when both factors carry singleton edges).
pub fn cartesian_product(g: &Hypergraph, h: &Hypergraph) -> (Hypergraph, ProductIndexMap) {
    let map = ProductIndexMap {
        n1: g.vertex_count(),
        n2: h.vertex_count(),
    };
    let mut edges: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    for a in 1..=map.n1 {
        for e in h.edges() {
            let edge: Vec<Vertex> = e.vertices().iter().map(|&b| map.product_id(a, b)).collect();
            edges.insert(edge);
        }
    }
    for e in g.edges() {
        for b in 1..=map.n2 {
            let edge: Vec<Vertex> = e.vertices().iter().map(|&a| map.product_id(a, b)).collect();
            edges.insert(edge);
        }
    }
    let product = Hypergraph::new(map.len(), edges).expect("product edges are canonical");
    (product, map)
}

/// Assembles `(λ + μ, w)` with `w(a,b) = u(a) v(b)` from H-pairs of the two
/// factor adjacency operators (taken at order `m.c.e`, which the factors
/// must share) and certifies it on the product adjacency operator.
pub fn product_eigenpair(
    g: &Hypergraph,
    h: &Hypergraph,
    pair_g: &EigenPair,
    pair_h: &EigenPair,
) -> Result<(EigenPair, Hypergraph, ProductIndexMap), ConstructError> {
    if pair_g.kind != PairKind::H || pair_h.kind != PairKind::H {
        return Err(ConstructError::PairKindNotH);
    }
    let m_g = g.mce()?;
    let m_h = h.mce()?;
    if m_g != m_h {
        return Err(ConstructError::OrderMismatch {
            left: m_g,
            right: m_h,
        });
    }
    let (product, map) = cartesian_product(g, h);
    let lambda = pair_g.lambda + pair_h.lambda;

    let mut w = vec![0.0f64; map.len()];
    for a in 1..=map.n1 {
        for b in 1..=map.n2 {
            w[map.product_id(a, b) - 1] = pair_g.x[a - 1] * pair_h.x[b - 1];
        }
    }
    let scale = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale > 0.0 {
        for v in &mut w {
            *v /= scale;
        }
    }

    let op = TensorOperator::new(&product, TensorKind::Adjacency, m_g.max(2))?;
    let residual = h_residual(&op, lambda, &w);
    let pair = EigenPair {
        lambda,
        x: w,
        kind: PairKind::H,
        residual,
        iterations: 0,
        seed: pair_g.seed,
    };
    Ok((pair, product, map))
}

/// A spanning subhypergraph: same vertex set, a subset of the edges.
#[derive(Debug, Clone)]
pub struct SpanningSub {
    pub hypergraph: Hypergraph,
    /// Whether the maximum edge cardinality survived the edge selection;
    /// spectral comparisons against the parent are meaningful only when it
    /// did.
    pub mce_preserved: bool,
}

pub fn spanning_sub(g: &Hypergraph, keep: &[usize]) -> Result<SpanningSub, ConstructError> {
    if keep.is_empty() {
        return Err(ConstructError::EmptyKeep);
    }
    let count = g.edge_count();
    let mut selected: BTreeSet<usize> = BTreeSet::new();
    for &index in keep {
        if index >= count {
            return Err(ConstructError::EdgeIndexOutOfRange { index, count });
        }
        selected.insert(index);
    }
    let edges: Vec<Vec<Vertex>> = selected
        .iter()
        .map(|&i| g.edges()[i].vertices().to_vec())
        .collect();
    let hypergraph = Hypergraph::new(g.vertex_count(), edges)?;
    let mce_preserved = hypergraph.mce().ok() == g.mce().ok();
    Ok(SpanningSub {
        hypergraph,
        mce_preserved,
    })
}

/// Splits the edge set by cardinality: `(i, G_i)` for each nonempty class,
/// ascending in `i`, every part on the full vertex set.
pub fn cardinality_partition(g: &Hypergraph) -> Vec<(usize, Hypergraph)> {
    let mut out = Vec::new();
    let Ok(mce) = g.mce() else { return out };
    for i in 1..=mce {
        let edges: Vec<Vec<Vertex>> = g
            .edges()
            .iter()
            .filter(|e| e.cardinality() == i)
            .map(|e| e.vertices().to_vec())
            .collect();
        if edges.is_empty() {
            continue;
        }
        let part = Hypergraph::new(g.vertex_count(), edges).expect("subset of canonical edges");
        out.push((i, part));
    }
    out
}

/// Reproducible regular fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularFamily {
    /// All 2-subsets of `{1..n}` plus the full edge `{1..n}`; `n`-regular
    /// with m.c.e `n`.
    CompleteGraphPlusFullEdge,
    /// The `n` cyclic windows `{i, i+1, …, i+s-1}` modulo `n`; `s`-regular
    /// and `s`-uniform.
    Cyclic(usize),
}

pub fn regular_family(n: usize, family: RegularFamily) -> Result<Hypergraph, ConstructError> {
    match family {
        RegularFamily::CompleteGraphPlusFullEdge => {
            if n < 3 {
                return Err(ConstructError::InfeasibleSpec {
                    reason: "complete-plus-full needs n >= 3",
                });
            }
            let mut edges: Vec<Vec<Vertex>> = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    edges.push(vec![a, b]);
                }
            }
            edges.push((1..=n).collect());
            Ok(Hypergraph::new(n, edges)?)
        }
        RegularFamily::Cyclic(s) => {
            if s == 0 || s >= n {
                return Err(ConstructError::InfeasibleSpec {
                    reason: "cyclic windows need 1 <= s < n",
                });
            }
            let edges: Vec<Vec<Vertex>> = (0..n)
                .map(|start| (0..s).map(|k| (start + k) % n + 1).collect())
                .collect();
            Ok(Hypergraph::new(n, edges)?)
        }
    }
}
