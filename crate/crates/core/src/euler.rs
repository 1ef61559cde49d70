//! Signed Euler systems as cyclic double occurrence words tied to half-edges.
//!
//! A circuit is stored as a cyclic list of [`Passage`]s. Passage `i` enters its
//! vertex along `enter` and leaves along `leave`; the edge between passage `i`
//! and passage `i + 1` is `{leave_i, enter_{i+1}}`. Every vertex is passed
//! twice, once marked `+` and once marked `-`. At a vertex `v` this fixes the
//! four half-edges used by every matrix construction:
//!
//! ```text
//!   ... h1 v+ h2 ... h3 v- h4 ...
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{FourRegularGraph, HalfEdgeId, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedOccurrence {
    pub vertex: VertexId,
    pub sign: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub vertex: VertexId,
    pub sign: Sign,
    pub enter: HalfEdgeId,
    pub leave: HalfEdgeId,
}

impl Passage {
    pub fn occurrence(&self) -> SignedOccurrence {
        SignedOccurrence {
            vertex: self.vertex,
            sign: self.sign,
        }
    }
}

/// One circuit of an Euler system, rotated to canonical form.
#[derive(Clone, Debug)]
pub struct Circuit {
    pub name: String,
    pub passages: Vec<Passage>,
}

impl Circuit {
    pub fn word(&self) -> Vec<SignedOccurrence> {
        self.passages.iter().map(Passage::occurrence).collect()
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }
}

/// Where the two passages of a vertex sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexSlots {
    pub component: usize,
    pub plus: usize,
    pub minus: usize,
}

/// A word over vertex ids, with a sign where one was given.
pub type IndexedWord = Vec<(VertexId, Option<Sign>)>;

/// The lexicographically least rotation of a cyclic word.
pub fn canonical_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let best = least_rotation_offset(word);
    word[best..].iter().chain(&word[..best]).cloned().collect()
}

fn least_rotation_offset<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    let mut best = 0;
    for start in 1..n {
        let cand = (0..n).map(|k| &word[(start + k) % n]);
        let cur = (0..n).map(|k| &word[(best + k) % n]);
        if cand.lt(cur) {
            best = start;
        }
    }
    best
}

/// A signed Euler system of a 4-regular graph: one signed Euler circuit per
/// connected component.
#[derive(Clone, Debug)]
pub struct SignedEulerSystem {
    graph: Arc<FourRegularGraph>,
    components: Vec<Circuit>,
    slots: Vec<VertexSlots>,
}

impl PartialEq for SignedEulerSystem {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
            && self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.passages == b.passages)
    }
}

impl Eq for SignedEulerSystem {}

impl SignedEulerSystem {
    /// Assembles a system from explicit passages, validating every invariant.
    pub fn from_passages(
        graph: Arc<FourRegularGraph>,
        circuits: Vec<(String, Vec<Passage>)>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        let mut seen_edge = vec![false; graph.edge_count()];
        let mut signs: Vec<Vec<Sign>> = vec![Vec::new(); n];
        let comp_map = graph.component_map();
        let mut comp_used = vec![false; graph.component_count()];

        for (name, passages) in &circuits {
            if passages.is_empty() {
                return Err(Error::NotATrail(format!("component `{name}` is empty")));
            }
            let comp = comp_map[passages[0].vertex];
            if std::mem::replace(&mut comp_used[comp], true) {
                return Err(Error::NotATrail(format!(
                    "component `{name}` repeats a connected component"
                )));
            }
            let len = passages.len();
            for (i, p) in passages.iter().enumerate() {
                if graph.vertex_of(p.enter) != p.vertex || graph.vertex_of(p.leave) != p.vertex {
                    return Err(Error::NotATrail(format!(
                        "passage {i} of `{name}` uses a half-edge not at `{}`",
                        graph.name(p.vertex)
                    )));
                }
                if p.enter == p.leave {
                    return Err(Error::NotATrail(format!(
                        "passage {i} of `{name}` enters and leaves on one half-edge"
                    )));
                }
                let next = &passages[(i + 1) % len];
                if graph.mate(p.leave) != next.enter {
                    return Err(Error::NotATrail(format!(
                        "passages {i} and {} of `{name}` are not joined by an edge",
                        (i + 1) % len
                    )));
                }
                let e = p.leave / 2;
                if std::mem::replace(&mut seen_edge[e], true) {
                    return Err(Error::NotATrail(format!("edge {e} is used twice")));
                }
                if comp_map[p.vertex] != comp {
                    return Err(Error::NotATrail(format!(
                        "component `{name}` leaves its connected component"
                    )));
                }
                signs[p.vertex].push(p.sign);
            }
        }
        if let Some(e) = seen_edge.iter().position(|&s| !s) {
            return Err(Error::NotATrail(format!("edge {e} is never used")));
        }
        for (v, s) in signs.iter().enumerate() {
            if s.len() != 2 {
                return Err(Error::Occurrence {
                    vertex: graph.name(v).to_string(),
                    count: s.len(),
                });
            }
            if s[0] == s[1] {
                return Err(Error::NotATrail(format!(
                    "both passages of `{}` carry the same sign",
                    graph.name(v)
                )));
            }
        }
        Ok(Self::assemble(graph, circuits))
    }

    /// Canonicalizes rotations, orders components and indexes the slots.
    /// Callers guarantee validity.
    fn assemble(graph: Arc<FourRegularGraph>, circuits: Vec<(String, Vec<Passage>)>) -> Self {
        let mut components: Vec<Circuit> = circuits
            .into_iter()
            .map(|(name, passages)| {
                let word: Vec<SignedOccurrence> =
                    passages.iter().map(Passage::occurrence).collect();
                let off = least_rotation_offset(&word);
                let mut passages = passages;
                passages.rotate_left(off);
                Circuit { name, passages }
            })
            .collect();
        components.sort_by_key(|c| c.passages.iter().map(|p| p.vertex).min());
        let mut slots = vec![
            VertexSlots {
                component: 0,
                plus: 0,
                minus: 0
            };
            graph.vertex_count()
        ];
        for (ci, c) in components.iter().enumerate() {
            for (i, p) in c.passages.iter().enumerate() {
                let s = &mut slots[p.vertex];
                s.component = ci;
                match p.sign {
                    Sign::Plus => s.plus = i,
                    Sign::Minus => s.minus = i,
                }
            }
        }
        Self {
            graph,
            components,
            slots,
        }
    }

    /// Realizes signed or unsigned words as an Euler system of an existing
    /// graph. Each word is traced with least-half-edge choices and
    /// backtracking; unsigned occurrences get `+` on the first appearance.
    pub fn from_words(
        graph: Arc<FourRegularGraph>,
        words: &[(String, IndexedWord)],
    ) -> Result<Self> {
        let signs = resolve_signs(&graph, words)?;
        let mut used = vec![false; graph.edge_count()];
        let mut circuits = Vec::new();
        for (ci, (name, word)) in words.iter().enumerate() {
            let verts: Vec<VertexId> = word.iter().map(|(v, _)| *v).collect();
            let mut leaves = Vec::with_capacity(verts.len());
            if !realize_trail(&graph, &verts, &mut used, &mut leaves) {
                return Err(Error::NotATrail(format!(
                    "component `{name}` cannot be traced in the graph"
                )));
            }
            let len = verts.len();
            let passages = (0..len)
                .map(|i| Passage {
                    vertex: verts[i],
                    sign: signs[ci][i],
                    enter: graph.mate(leaves[(i + len - 1) % len]),
                    leave: leaves[i],
                })
                .collect();
            circuits.push((name.clone(), passages));
        }
        Self::from_passages(graph, circuits)
    }

    pub fn graph(&self) -> &Arc<FourRegularGraph> {
        &self.graph
    }

    pub fn components(&self) -> &[Circuit] {
        &self.components
    }

    pub fn slots(&self, v: VertexId) -> VertexSlots {
        self.slots[v]
    }

    pub fn passage(&self, v: VertexId, sign: Sign) -> Passage {
        let s = self.slots[v];
        let c = &self.components[s.component];
        match sign {
            Sign::Plus => c.passages[s.plus],
            Sign::Minus => c.passages[s.minus],
        }
    }

    /// `[h1, h2, h3, h4]` at `v`: the `+` passage is `h1 v h2`, the `-`
    /// passage is `h3 v h4`.
    pub fn quad(&self, v: VertexId) -> [HalfEdgeId; 4] {
        let p = self.passage(v, Sign::Plus);
        let m = self.passage(v, Sign::Minus);
        [p.enter, p.leave, m.enter, m.leave]
    }

    pub fn same_component(&self, v: VertexId, w: VertexId) -> bool {
        self.slots[v].component == self.slots[w].component
    }

    /// True when `v != w` alternate on their common circuit.
    pub fn interlaced(&self, v: VertexId, w: VertexId) -> bool {
        if v == w || !self.same_component(v, w) {
            return false;
        }
        let (a, b) = ordered(self.slots[v].plus, self.slots[v].minus);
        let inside = |p: usize| a < p && p < b;
        inside(self.slots[w].plus) != inside(self.slots[w].minus)
    }

    /// Signed words, one per component.
    pub fn words(&self) -> Vec<Vec<SignedOccurrence>> {
        self.components.iter().map(Circuit::word).collect()
    }

    /// Swaps the `+` and `-` marks of `v`.
    pub fn flip_sign(&self, v: VertexId) -> Self {
        let circuits = self
            .components
            .iter()
            .map(|c| {
                let passages = c
                    .passages
                    .iter()
                    .map(|p| {
                        let mut p = *p;
                        if p.vertex == v {
                            p.sign = p.sign.flipped();
                        }
                        p
                    })
                    .collect();
                (c.name.clone(), passages)
            })
            .collect();
        Self::assemble(self.graph.clone(), circuits)
    }

    /// Applies `flip_sign` at every vertex in `vertices`.
    pub fn flip_signs(&self, vertices: &[VertexId]) -> Self {
        vertices.iter().fold(self.clone(), |c, &v| c.flip_sign(v))
    }

    /// Sign-free identity of the system: each circuit as its half-edge
    /// passages, rotated to start at the least leaving half-edge. Orientation
    /// is kept.
    pub fn trace_key(&self) -> Vec<Vec<(HalfEdgeId, HalfEdgeId)>> {
        self.components
            .iter()
            .map(|c| {
                let mut t: Vec<(HalfEdgeId, HalfEdgeId)> =
                    c.passages.iter().map(|p| (p.enter, p.leave)).collect();
                let off = t
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, x)| x.1)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                t.rotate_left(off);
                t
            })
            .collect()
    }

    /// The edge directions induced by the circuits, as the sorted list of
    /// leaving half-edges.
    pub fn edge_directions(&self) -> Vec<HalfEdgeId> {
        let mut out: Vec<HalfEdgeId> = self
            .components
            .iter()
            .flat_map(|c| c.passages.iter().map(|p| p.leave))
            .collect();
        out.sort_unstable();
        out
    }

    /// Unsigned words rotated to their least form, one per component.
    pub fn unsigned_words(&self) -> Vec<String> {
        self.components
            .iter()
            .map(|c| {
                let word: Vec<&str> = c
                    .passages
                    .iter()
                    .map(|p| self.graph.name(p.vertex))
                    .collect();
                canonical_rotation(&word).join(" ")
            })
            .collect()
    }

    /// Serializes in the `dow <name>: tok ...` format with explicit signs.
    pub fn to_dow_text(&self) -> String {
        let mut out = String::new();
        for c in &self.components {
            out.push_str("dow ");
            out.push_str(&c.name);
            out.push(':');
            for p in &c.passages {
                out.push(' ');
                out.push_str(self.graph.name(p.vertex));
                out.push(p.sign.symbol());
            }
            out.push('\n');
        }
        out
    }

    /// Rebuilds a system from passages produced by a rewrite of this one.
    pub(crate) fn rebuild(&self, circuits: Vec<(String, Vec<Passage>)>) -> Result<Self> {
        Self::from_passages(self.graph.clone(), circuits)
    }
}

impl fmt::Display for SignedEulerSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                c.passages
                    .iter()
                    .map(|p| format!("{}{}", self.graph.name(p.vertex), p.sign.symbol()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Fills in missing signs: the first unsigned appearance gets `+` unless the
/// other appearance is already marked.
pub(crate) fn resolve_signs(
    graph: &FourRegularGraph,
    words: &[(String, IndexedWord)],
) -> Result<Vec<Vec<Sign>>> {
    let mut occ: BTreeMap<VertexId, Vec<(usize, usize, Option<Sign>)>> = BTreeMap::new();
    for (ci, (_, w)) in words.iter().enumerate() {
        for (i, &(v, s)) in w.iter().enumerate() {
            occ.entry(v).or_default().push((ci, i, s));
        }
    }
    for v in graph.vertices() {
        let count = occ.get(&v).map_or(0, Vec::len);
        if count != 2 {
            return Err(Error::Occurrence {
                vertex: graph.name(v).to_string(),
                count,
            });
        }
    }
    let mut out: Vec<Vec<Sign>> = words
        .iter()
        .map(|(_, w)| vec![Sign::Plus; w.len()])
        .collect();
    for (v, list) in occ {
        let (first, second) = (list[0], list[1]);
        let (s1, s2) = match (first.2, second.2) {
            (None, None) => (Sign::Plus, Sign::Minus),
            (Some(a), None) => (a, a.flipped()),
            (None, Some(b)) => (b.flipped(), b),
            (Some(a), Some(b)) if a != b => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: 0,
                    token: graph.name(v).to_string(),
                    message: "both occurrences carry the same sign".into(),
                })
            }
        };
        out[first.0][first.1] = s1;
        out[second.0][second.1] = s2;
    }
    Ok(out)
}

fn realize_trail(
    graph: &FourRegularGraph,
    verts: &[VertexId],
    used: &mut [bool],
    leaves: &mut Vec<HalfEdgeId>,
) -> bool {
    let len = verts.len();
    if len == 0 {
        return false;
    }
    fn step(
        graph: &FourRegularGraph,
        verts: &[VertexId],
        used: &mut [bool],
        leaves: &mut Vec<HalfEdgeId>,
    ) -> bool {
        let i = leaves.len();
        let len = verts.len();
        if i == len {
            return true;
        }
        let (from, to) = (verts[i], verts[(i + 1) % len]);
        for h in graph.incident(from) {
            let e = h / 2;
            if used[e] || graph.vertex_of(graph.mate(h)) != to {
                continue;
            }
            used[e] = true;
            leaves.push(h);
            if step(graph, verts, used, leaves) {
                return true;
            }
            leaves.pop();
            used[e] = false;
        }
        false
    }
    step(graph, verts, used, leaves)
}

/// Builds an Euler system with Hierholzer's algorithm, always extending along
/// the least unused half-edge. The first passage emitted at each vertex is
/// marked `+`.
pub fn euler_system(graph: Arc<FourRegularGraph>) -> SignedEulerSystem {
    let mut used = vec![false; graph.edge_count()];
    let mut circuits = Vec::new();
    for (ci, comp) in graph.connected_components().iter().enumerate() {
        let start = comp[0];
        let mut stack: Vec<HalfEdgeId> = Vec::new();
        let mut path: Vec<HalfEdgeId> = Vec::new();
        let mut cur = start;
        loop {
            let next = graph.incident(cur).into_iter().find(|&h| !used[h / 2]);
            if let Some(h) = next {
                used[h / 2] = true;
                stack.push(h);
                cur = graph.vertex_of(graph.mate(h));
            } else if let Some(h) = stack.pop() {
                path.push(h);
                cur = graph.vertex_of(h);
            } else {
                break;
            }
        }
        path.reverse();
        let len = path.len();
        let mut seen = HashSet::new();
        let passages = (0..len)
            .map(|i| {
                let leave = path[i];
                let vertex = graph.vertex_of(leave);
                let sign = if seen.insert(vertex) {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                Passage {
                    vertex,
                    sign,
                    enter: graph.mate(path[(i + len - 1) % len]),
                    leave,
                }
            })
            .collect();
        circuits.push((format!("c{}", ci + 1), passages));
    }
    SignedEulerSystem::from_passages(graph, circuits)
        .expect("Hierholzer output is a valid Euler system")
}
