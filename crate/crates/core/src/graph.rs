//! Half-edge model of 4-regular multigraphs.
//!
//! Every edge is a pair of half-edges `2e` and `2e + 1`, so `mate(h) = h ^ 1`.
//! Loops and parallel edges are ordinary edges in this model; a loop simply
//! has both of its half-edges incident on the same vertex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Index of a vertex in the sorted vertex-name order.
pub type VertexId = usize;
/// Dense half-edge index, assigned in input order.
pub type HalfEdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub id: HalfEdgeId,
    pub vertex: VertexId,
    pub mate: HalfEdgeId,
}

/// A multigraph in which every vertex has exactly four incident half-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourRegularGraph {
    names: Vec<String>,
    half_edges: Vec<HalfEdge>,
    incidence: Vec<[HalfEdgeId; 4]>,
}

impl FourRegularGraph {
    /// Builds a graph from edges given by endpoint names, in input order.
    ///
    /// Edge `i` gets half-edge `2i` at its first endpoint and `2i + 1` at its
    /// second. Vertex ids are positions in the sorted list of names.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut degree: BTreeMap<&str, usize> = BTreeMap::new();
        for (a, b) in edges {
            *degree.entry(a.as_ref()).or_default() += 1;
            *degree.entry(b.as_ref()).or_default() += 1;
        }
        for (name, &d) in &degree {
            if d != 4 {
                return Err(Error::Degree {
                    vertex: name.to_string(),
                    degree: d,
                });
            }
        }
        let names: Vec<String> = degree.keys().map(|s| s.to_string()).collect();
        let index: BTreeMap<&str, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();

        let mut half_edges = Vec::with_capacity(2 * edges.len());
        let mut slots: Vec<Vec<HalfEdgeId>> = vec![Vec::with_capacity(4); names.len()];
        for (e, (a, b)) in edges.iter().enumerate() {
            for (k, end) in [a.as_ref(), b.as_ref()].into_iter().enumerate() {
                let id = 2 * e + k;
                let vertex = index[end];
                half_edges.push(HalfEdge {
                    id,
                    vertex,
                    mate: id ^ 1,
                });
                slots[vertex].push(id);
            }
        }
        let incidence = slots
            .into_iter()
            .map(|s| [s[0], s[1], s[2], s[3]])
            .collect();
        Ok(Self {
            names,
            half_edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn half_edge(&self, h: HalfEdgeId) -> HalfEdge {
        self.half_edges[h]
    }

    #[inline]
    pub fn mate(&self, h: HalfEdgeId) -> HalfEdgeId {
        h ^ 1
    }

    #[inline]
    pub fn vertex_of(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[h].vertex
    }

    /// The four half-edges at `v`, ascending.
    pub fn incident(&self, v: VertexId) -> [HalfEdgeId; 4] {
        self.incidence[v]
    }

    /// Edge `e` as its two endpoint vertices.
    pub fn edge_endpoints(&self, e: usize) -> (VertexId, VertexId) {
        (self.vertex_of(2 * e), self.vertex_of(2 * e + 1))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for h in self.incidence[u] {
                    let w = self.vertex_of(h ^ 1);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Component index of every vertex, consistent with `connected_components`.
    pub fn component_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.vertex_count()];
        for (i, c) in self.connected_components().iter().enumerate() {
            for &v in c {
                map[v] = i;
            }
        }
        map
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// Edges as endpoint-name pairs, in edge order.
    pub fn edge_list(&self) -> Vec<(String, String)> {
        (0..self.edge_count())
            .map(|e| {
                let (a, b) = self.edge_endpoints(e);
                (self.names[a].clone(), self.names[b].clone())
            })
            .collect()
    }
}
