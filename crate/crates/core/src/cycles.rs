//! Cycle and cocycle spaces of a directed multigraph.
//!
//! Vectors live in `Z^E`. A closed walk contributes `+1` to an edge each
//! time it crosses the edge in its own direction and `-1` against it. Loops
//! are signed the same way, by which end the walk leaves from.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::euler::SignedEulerSystem;
use crate::interlace::{
    modified_interlacement, reduced_interlacement, standard_form, standard_form_by_tracing,
};
use crate::linalg::{gf2_nullity, gf2_row_space_equal, rat_nullity, rat_rank, row_space_equal};
use crate::matrix::IntMatrix;
use crate::partition::CircuitPartition;
use crate::report::Report;
use crate::touch::touch_graph;

pub type EdgeVector = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    node_labels: Vec<String>,
    edge_labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

/// One step of a walk: an edge crossed with (`forward`) or against its
/// direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedStep {
    pub edge: usize,
    pub forward: bool,
}

impl Digraph {
    pub fn new(
        node_labels: Vec<String>,
        edge_labels: Vec<String>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if edge_labels.len() != edges.len() {
            return Err(Error::Dimension(format!(
                "{} edge labels for {} edges",
                edge_labels.len(),
                edges.len()
            )));
        }
        let n = node_labels.len();
        if let Some(&(t, h)) = edges.iter().find(|&&(t, h)| t >= n || h >= n) {
            return Err(Error::Dimension(format!("edge {t}->{h} outside {n} nodes")));
        }
        Ok(Self {
            node_labels,
            edge_labels,
            edges,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_labels(&self) -> &[String] {
        &self.node_labels
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    /// Node sets of the connected components, each sorted, ordered by least
    /// node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(t, h) in &self.edges {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if index[r] == usize::MAX {
                index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index[r]].push(x);
        }
        groups
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }
}

/// `z_D(W)`: the signed traversal count of a closed walk.
pub fn walk_tally(d: &Digraph, walk: &[DirectedStep]) -> Result<EdgeVector> {
    let mut z = vec![0i64; d.edge_count()];
    let ends = |s: &DirectedStep| -> Result<(usize, usize)> {
        let &(t, h) = d
            .edges
            .get(s.edge)
            .ok_or_else(|| Error::InvalidWalk(format!("no edge {}", s.edge)))?;
        Ok(if s.forward { (t, h) } else { (h, t) })
    };
    for (i, s) in walk.iter().enumerate() {
        let (_, to) = ends(s)?;
        let (from, _) = ends(&walk[(i + 1) % walk.len()])?;
        if to != from {
            return Err(Error::InvalidWalk(format!(
                "step {i} ends at node {to} but step {} starts at node {from}",
                (i + 1) % walk.len()
            )));
        }
        z[s.edge] += if s.forward { 1 } else { -1 };
    }
    Ok(z)
}

/// `u_D({v})`: `+1` on non-loop edges leaving `v`, `-1` on non-loop edges
/// entering it.
pub fn vertex_cocycle(d: &Digraph, v: usize) -> EdgeVector {
    d.edges
        .iter()
        .map(|&(t, h)| match (t == v, h == v) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        })
        .collect()
}

/// The `E x V` matrix whose columns are the vertex cocycles.
pub fn cocycle_matrix(d: &Digraph) -> IntMatrix {
    let cols: Vec<EdgeVector> = (0..d.node_count()).map(|v| vertex_cocycle(d, v)).collect();
    IntMatrix::from_fn(d.edge_labels.clone(), d.node_labels.clone(), |e, v| {
        cols[v][e].into()
    })
}

/// Fundamental cycles of a BFS spanning forest. Roots are the least node of
/// each component, edges are scanned in id order, and the basis lists one
/// vector per non-tree edge in edge order, oriented along that edge.
pub fn cycle_basis(d: &Digraph) -> Vec<EdgeVector> {
    let n = d.node_count();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(t, h)) in d.edges.iter().enumerate() {
        adjacency[t].push(e);
        if h != t {
            adjacency[h].push(e);
        }
    }
    // parent[x] = (tree edge, parent node)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut tree = vec![false; d.edge_count()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &e in &adjacency[x] {
                let (t, h) = d.edges[e];
                let y = if t == x { h } else { t };
                if !seen[y] {
                    seen[y] = true;
                    tree[e] = true;
                    parent[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
    }
    // Tally of the tree path from x up to its root.
    let to_root = |mut x: usize| {
        let mut z = vec![0i64; d.edge_count()];
        while let Some((e, p)) = parent[x] {
            z[e] += if d.edges[e].0 == x { 1 } else { -1 };
            x = p;
        }
        z
    };
    (0..d.edge_count())
        .filter(|&e| !tree[e])
        .map(|e| {
            let (t, h) = d.edges[e];
            let mut z = vec![0i64; d.edge_count()];
            z[e] = 1;
            if t != h {
                for (zi, (a, b)) in z.iter_mut().zip(to_root(h).into_iter().zip(to_root(t))) {
                    *zi += a - b;
                }
            }
            z
        })
        .collect()
}

/// The cycle basis as matrix rows `z1, z2, ...` over the edge labels.
pub fn cycle_matrix(d: &Digraph) -> IntMatrix {
    let basis = cycle_basis(d);
    let rows = (1..=basis.len()).map(|i| format!("z{i}")).collect();
    IntMatrix::from_fn(rows, d.edge_labels.clone(), |i, e| basis[i][e].into())
}

/// Checks that the cycle and cocycle spaces are orthogonal and have the
/// expected dimensions.
pub fn verify_duality(d: &Digraph) -> Report {
    let mut r = Report::new("duality");
    let z = cycle_matrix(d);
    let u = cocycle_matrix(d);
    let (ne, nv, c) = (d.edge_count(), d.node_count(), d.component_count());
    let product_zero = z.mul(&u).map(|m| m.is_zero()).unwrap_or(false);
    r.check("Z*U = 0", product_zero, "");
    let ru = rat_rank(&u);
    r.check(
        "rank U = |V| - c",
        ru == nv - c,
        format!("rank {ru}, expected {}", nv - c),
    );
    let rz = rat_rank(&z);
    let expected = ne + c - nv;
    r.check(
        "rank Z = |E| - |V| + c",
        rz == expected && z.nrows() == expected,
        format!("rank {rz} of {} rows, expected {expected}", z.nrows()),
    );
    r
}

/// Checks the main theorem for `(C, P)`: the rows of `M0(C, P)` span the
/// cycle space of the touch-graph over the rationals, reduce mod 2 to
/// `M(C, P)` whose rows span the cycle space over GF(2), and have nullity
/// `|P| - c(F)`; also `M0(C, P) U = 0` and both constructions of `M0` agree.
pub fn verify_main_theorem(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<Report> {
    let mut r = Report::new("main theorem");
    let m0 = standard_form(c, p)?;
    let tg = touch_graph(p, c)?;
    let d = tg.digraph();
    let z = cycle_matrix(&d);
    let u = cocycle_matrix(&d);
    let expected = p.len() - c.graph().component_count();
    r.check("row space over Q", row_space_equal(&m0, &z)?, "");
    let m = modified_interlacement(c, p)?;
    r.check("reduces to M(C,P)", m0.mod2() == m, "");
    r.check(
        "row space over GF(2)",
        gf2_row_space_equal(&m, &z.mod2())?,
        "",
    );
    let nq = rat_nullity(&m0);
    r.check(
        "nullity over Q",
        nq == expected,
        format!("{nq}, expected {expected}"),
    );
    let n2 = gf2_nullity(&reduced_interlacement(c, p)?);
    r.check(
        "nullity of I(C,P)",
        n2 == expected,
        format!("{n2}, expected {expected}"),
    );
    r.check("M0 U = 0", m0.mul(&u)?.is_zero(), "");
    r.check(
        "case table = tracing",
        standard_form_by_tracing(c, p)? == m0,
        "",
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::index_labels;

    fn triangle() -> Digraph {
        Digraph::new(
            index_labels(3),
            index_labels(3),
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap()
    }

    fn step(edge: usize, forward: bool) -> DirectedStep {
        DirectedStep { edge, forward }
    }

    #[test]
    fn triangle_tallies() {
        let d = triangle();
        let w = [step(0, true), step(1, true), step(2, true)];
        assert_eq!(walk_tally(&d, &w).unwrap(), vec![1, 1, 1]);
        assert_eq!(walk_tally(&d, &[]).unwrap(), vec![0, 0, 0]);
        let back = [step(0, true), step(0, false)];
        assert_eq!(walk_tally(&d, &back).unwrap(), vec![0, 0, 0]);
        assert!(walk_tally(&d, &[step(0, true), step(2, true)]).is_err());
        assert!(walk_tally(&d, &[step(7, true)]).is_err());
    }

    #[test]
    fn triangle_basis_and_cocycles() {
        let d = triangle();
        let basis = cycle_basis(&d);
        assert_eq!(basis.len(), 1);
        assert!(basis[0] == vec![1, 1, 1] || basis[0] == vec![-1, -1, -1]);
        assert_eq!(vertex_cocycle(&d, 0), vec![1, 0, -1]);
        assert!(verify_duality(&d).passed());
    }

    #[test]
    fn loops_and_forests() {
        let d = Digraph::new(index_labels(2), index_labels(2), vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(vertex_cocycle(&d, 0), vec![0, 0]);
        assert_eq!(cycle_basis(&d), vec![vec![1, 0], vec![0, 1]]);
        assert!(verify_duality(&d).passed());
        let path = Digraph::new(index_labels(3), index_labels(2), vec![(0, 1), (2, 1)]).unwrap();
        assert!(cycle_basis(&path).is_empty());
        assert!(verify_duality(&path).passed());
        let isolated = Digraph::new(index_labels(1), vec![], vec![]).unwrap();
        assert!(vertex_cocycle(&isolated, 0).is_empty());
    }

    #[test]
    fn parallel_edges_cycle() {
        let d = Digraph::new(
            index_labels(2),
            index_labels(3),
            vec![(0, 1), (0, 1), (1, 0)],
        )
        .unwrap();
        let basis = cycle_basis(&d);
        assert_eq!(basis, vec![vec![-1, 1, 0], vec![1, 0, 1]]);
        for z in &basis {
            for v in 0..2 {
                let u = vertex_cocycle(&d, v);
                assert_eq!(z.iter().zip(&u).map(|(a, b)| a * b).sum::<i64>(), 0);
            }
        }
        assert!(verify_duality(&d).passed());
    }
}
