//! Touch-graphs and the projection of closed walks onto them.
//!
//! `Tch(P)` has a node for each circuit of `P` and an edge `e_v` for each
//! vertex `v`. The two ends of `e_v` are the two pairs of `P(v)`; the end
//! holding `h1` (relative to the signed Euler system) is the tail.

use crate::cycles::{Digraph, DirectedStep};
use crate::error::{Error, Result};
use crate::euler::SignedEulerSystem;
use crate::graph::{HalfEdgeId, VertexId};
use crate::partition::CircuitPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TouchEdge {
    pub vertex: VertexId,
    pub tail: usize,
    pub head: usize,
    /// The pair of `P(v)` containing `h1`.
    pub initial: [HalfEdgeId; 2],
    pub terminal: [HalfEdgeId; 2],
}

impl TouchEdge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TouchGraph {
    node_count: usize,
    edges: Vec<TouchEdge>,
    names: Vec<String>,
}

/// A step of a projected walk: `e_v` crossed from node `from` to node `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TouchStep {
    pub edge: VertexId,
    pub from: usize,
    pub to: usize,
    pub forward: bool,
}

impl TouchStep {
    pub fn directed(&self) -> DirectedStep {
        DirectedStep {
            edge: self.edge,
            forward: self.forward,
        }
    }
}

/// The directed touch-graph `D` of `p`, oriented by `c`.
pub fn touch_graph(p: &CircuitPartition, c: &SignedEulerSystem) -> Result<TouchGraph> {
    if **c.graph() != **p.graph() {
        return Err(Error::GraphMismatch);
    }
    let g = p.graph();
    let edges = g
        .vertices()
        .map(|v| {
            let h1 = c.quad(v)[0];
            let [a, b] = p.transition(v).pairs();
            let (initial, terminal) = if a.contains(&h1) { (a, b) } else { (b, a) };
            TouchEdge {
                vertex: v,
                tail: p.circuit_of(initial[0]),
                head: p.circuit_of(terminal[0]),
                initial,
                terminal,
            }
        })
        .collect();
    Ok(TouchGraph {
        node_count: p.len(),
        edges,
        names: g.names().to_vec(),
    })
}

impl TouchGraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TouchEdge] {
        &self.edges
    }

    pub fn edge(&self, v: VertexId) -> &TouchEdge {
        &self.edges[v]
    }

    pub fn node_labels(&self) -> Vec<String> {
        (1..=self.node_count).map(|i| format!("g{i}")).collect()
    }

    /// Edges are labelled by their vertex of `F`.
    pub fn digraph(&self) -> Digraph {
        Digraph::new(
            self.node_labels(),
            self.names.clone(),
            self.edges.iter().map(|e| (e.tail, e.head)).collect(),
        )
        .expect("touch-graph endpoints are circuit indices")
    }

    /// Lines `v tail head loop|edge`.
    pub fn to_edge_list(&self) -> String {
        let labels = self.node_labels();
        let mut out = String::new();
        for e in &self.edges {
            let kind = if e.is_loop() { "loop" } else { "edge" };
            out.push_str(&format!(
                "{}\t{}\t{}\t{kind}\n",
                self.names[e.vertex], labels[e.tail], labels[e.head]
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let labels = self.node_labels();
        serde_json::json!({
            "nodes": labels,
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "vertex": self.names[e.vertex],
                "tail": labels[e.tail],
                "head": labels[e.head],
                "initial": e.initial,
                "terminal": e.terminal,
                "loop": e.is_loop(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Projects a closed walk of `F`, given by the half-edges it leaves along,
/// onto the touch-graph.
///
/// At each vertex the walk arrives on `a` and leaves on `b`. If `{a, b}` is
/// a pair of `P` (or `a = b`) the index is dropped; otherwise the walk
/// crosses `e_v` from the end holding `a` to the end holding `b`. The result
/// is empty when every index is dropped.
pub fn project_walk(
    tg: &TouchGraph,
    p: &CircuitPartition,
    walk: &[HalfEdgeId],
) -> Result<Vec<TouchStep>> {
    let g = p.graph();
    let k = walk.len();
    let mut steps = Vec::new();
    for i in 0..k {
        if walk[i] >= g.half_edge_count() {
            return Err(Error::InvalidWalk(format!("no half-edge {}", walk[i])));
        }
        let a = g.mate(walk[i]);
        let b = walk[(i + 1) % k];
        if b >= g.half_edge_count() || g.vertex_of(b) != g.vertex_of(a) {
            return Err(Error::InvalidWalk(format!(
                "half-edge {b} does not continue from half-edge {a}"
            )));
        }
        if a == b || p.partner(a) == b {
            continue;
        }
        let e = tg.edge(g.vertex_of(a));
        steps.push(TouchStep {
            edge: e.vertex,
            from: p.circuit_of(a),
            to: p.circuit_of(b),
            forward: e.initial.contains(&a),
        });
    }
    Ok(steps)
}

/// A connected component of `F` matched with one of `Tch(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMatch {
    pub vertices: Vec<VertexId>,
    pub nodes: Vec<usize>,
}

/// Pairs each component of `F` with the component of `Tch(P)` whose edge set
/// is `{e_v : v in the component}`.
pub fn components_correspondence(
    tg: &TouchGraph,
    p: &CircuitPartition,
) -> Result<Vec<ComponentMatch>> {
    let g = p.graph();
    let d = tg.digraph();
    let node_components = d.components();
    let mut node_component = vec![0; tg.node_count()];
    for (i, comp) in node_components.iter().enumerate() {
        for &x in comp {
            node_component[x] = i;
        }
    }
    let f_components = g.connected_components();
    if f_components.len() != node_components.len() {
        return Err(Error::Internal(format!(
            "{} components in F but {} in the touch-graph",
            f_components.len(),
            node_components.len()
        )));
    }
    let mut used = vec![false; node_components.len()];
    let mut matches = Vec::new();
    for vertices in f_components {
        let target = node_component[tg.edge(vertices[0]).tail];
        let edges_in_target = g
            .vertices()
            .filter(|&v| node_component[tg.edge(v).tail] == target)
            .collect::<Vec<_>>();
        if used[target] || edges_in_target != vertices {
            return Err(Error::Internal(
                "component edge sets do not correspond".into(),
            ));
        }
        used[target] = true;
        matches.push(ComponentMatch {
            vertices,
            nodes: node_components[target].clone(),
        });
    }
    Ok(matches)
}
