//! Transitions, circuit partitions and circuit tracing.
//!
//! A partition is stored as explicit half-edge pairings. The phi/chi/psi
//! labels are always derived against some Euler system, never stored.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::euler::SignedEulerSystem;
use crate::graph::{FourRegularGraph, HalfEdgeId, VertexId};

/// A pairing of the four half-edges at one vertex into two single
/// transitions. Stored normalized: each pair ascending, pairs ordered by
/// their first element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pairs: [[HalfEdgeId; 2]; 2],
}

impl Transition {
    pub fn new(a: [HalfEdgeId; 2], b: [HalfEdgeId; 2]) -> Self {
        let sort = |p: [HalfEdgeId; 2]| if p[0] <= p[1] { p } else { [p[1], p[0]] };
        let (a, b) = (sort(a), sort(b));
        let pairs = if a[0] <= b[0] { [a, b] } else { [b, a] };
        Self { pairs }
    }

    pub fn pairs(&self) -> [[HalfEdgeId; 2]; 2] {
        self.pairs
    }

    /// The half-edge paired with `h`, if `h` belongs to this transition.
    pub fn partner(&self, h: HalfEdgeId) -> Option<HalfEdgeId> {
        self.pairs.iter().find_map(|p| {
            if p[0] == h {
                Some(p[1])
            } else if p[1] == h {
                Some(p[0])
            } else {
                None
            }
        })
    }

    /// True when `{a, b}` is one of the two single transitions.
    pub fn contains_pair(&self, a: HalfEdgeId, b: HalfEdgeId) -> bool {
        self.partner(a) == Some(b)
    }

    fn half_edges(&self) -> [HalfEdgeId; 4] {
        let mut hs = [
            self.pairs[0][0],
            self.pairs[0][1],
            self.pairs[1][0],
            self.pairs[1][1],
        ];
        hs.sort_unstable();
        hs
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.pairs;
        write!(f, "({} {})({} {})", a[0], a[1], b[0], b[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransitionLabel {
    Phi,
    Chi,
    Psi,
}

impl TransitionLabel {
    pub const ALL: [TransitionLabel; 3] = [Self::Phi, Self::Chi, Self::Psi];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Phi => "phi",
            Self::Chi => "chi",
            Self::Psi => "psi",
        }
    }
}

impl fmt::Display for TransitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TransitionLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "phi" => Ok(Self::Phi),
            "chi" => Ok(Self::Chi),
            "psi" => Ok(Self::Psi),
            other => Err(format!("unknown transition label `{other}`")),
        }
    }
}

/// The transition with label `label` at `v` relative to `c`.
///
/// With `... h1 v+ h2 ... h3 v- h4 ...`: phi follows the circuit, chi
/// reroutes `h1` to `h4` (orientation-consistent), psi reroutes `h1` to `h3`.
pub fn transition_from_label(
    c: &SignedEulerSystem,
    v: VertexId,
    label: TransitionLabel,
) -> Result<Transition> {
    if v >= c.graph().vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let [h1, h2, h3, h4] = c.quad(v);
    Ok(match label {
        TransitionLabel::Phi => Transition::new([h1, h2], [h3, h4]),
        TransitionLabel::Chi => Transition::new([h1, h4], [h2, h3]),
        TransitionLabel::Psi => Transition::new([h1, h3], [h2, h4]),
    })
}

/// Classifies a transition at `v` against `c`.
pub fn label_of(c: &SignedEulerSystem, v: VertexId, t: &Transition) -> Result<TransitionLabel> {
    let [h1, h2, h3, h4] = c.quad(v);
    let mut quad = [h1, h2, h3, h4];
    quad.sort_unstable();
    if t.half_edges() != quad {
        return Err(Error::Transition {
            vertex: c.graph().name(v).to_string(),
            message: "pairs are not the half-edges incident on the vertex".into(),
        });
    }
    Ok(match t.partner(h1) {
        Some(x) if x == h2 => TransitionLabel::Phi,
        Some(x) if x == h4 => TransitionLabel::Chi,
        _ => TransitionLabel::Psi,
    })
}

/// A circuit partition: one transition per vertex, with the traced circuits.
#[derive(Clone, Debug)]
pub struct CircuitPartition {
    graph: Arc<FourRegularGraph>,
    transitions: Vec<Transition>,
    partner: Vec<HalfEdgeId>,
    circuits: Vec<Vec<HalfEdgeId>>,
    circuit_of: Vec<usize>,
}

impl PartialEq for CircuitPartition {
    fn eq(&self, other: &Self) -> bool {
        self.transitions == other.transitions && *self.graph == *other.graph
    }
}

impl Eq for CircuitPartition {}

/// Traces the unique closed trails that respect every transition.
///
/// Circuits are ordered by their least half-edge, and each circuit is
/// listed as the half-edges it leaves along, starting by leaving on that
/// least half-edge.
pub fn trace_circuits(
    graph: Arc<FourRegularGraph>,
    transitions: Vec<Transition>,
) -> Result<CircuitPartition> {
    if transitions.len() != graph.vertex_count() {
        return Err(Error::Dimension(format!(
            "{} transitions for {} vertices",
            transitions.len(),
            graph.vertex_count()
        )));
    }
    let mut partner = vec![usize::MAX; graph.half_edge_count()];
    for (v, t) in transitions.iter().enumerate() {
        if t.half_edges() != graph.incident(v) {
            return Err(Error::Transition {
                vertex: graph.name(v).to_string(),
                message: "pairs are not the half-edges incident on the vertex".into(),
            });
        }
        for [a, b] in t.pairs() {
            partner[a] = b;
            partner[b] = a;
        }
    }
    let mut circuit_of = vec![usize::MAX; graph.half_edge_count()];
    let mut circuits = Vec::new();
    for start in 0..graph.half_edge_count() {
        if circuit_of[start] != usize::MAX {
            continue;
        }
        let id = circuits.len();
        let mut leaves = Vec::new();
        let mut h = start;
        loop {
            leaves.push(h);
            circuit_of[h] = id;
            let enter = graph.mate(h);
            circuit_of[enter] = id;
            h = partner[enter];
            if h == start {
                break;
            }
        }
        circuits.push(leaves);
    }
    Ok(CircuitPartition {
        graph,
        transitions,
        partner,
        circuits,
        circuit_of,
    })
}

impl CircuitPartition {
    /// The partition with label `labels[v]` at each vertex relative to `c`.
    pub fn from_labels(c: &SignedEulerSystem, labels: &[TransitionLabel]) -> Result<Self> {
        let n = c.graph().vertex_count();
        if labels.len() != n {
            return Err(Error::Dimension(format!(
                "{} labels for {n} vertices",
                labels.len()
            )));
        }
        let transitions = (0..n)
            .map(|v| transition_from_label(c, v, labels[v]))
            .collect::<Result<Vec<_>>>()?;
        trace_circuits(c.graph().clone(), transitions)
    }

    /// An Euler system viewed as a circuit partition.
    pub fn from_euler_system(c: &SignedEulerSystem) -> Self {
        let n = c.graph().vertex_count();
        Self::from_labels(c, &vec![TransitionLabel::Phi; n])
            .expect("phi everywhere is a valid partition")
    }

    pub fn graph(&self) -> &Arc<FourRegularGraph> {
        &self.graph
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn transition(&self, v: VertexId) -> &Transition {
        &self.transitions[v]
    }

    /// The half-edge paired with `h` by the transition at its vertex.
    pub fn partner(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.partner[h]
    }

    /// Circuits as lists of leaving half-edges.
    pub fn circuits(&self) -> &[Vec<HalfEdgeId>] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Index of the circuit containing half-edge `h`.
    pub fn circuit_of(&self, h: HalfEdgeId) -> usize {
        self.circuit_of[h]
    }

    /// Number of edges in each circuit.
    pub fn circuit_sizes(&self) -> Vec<usize> {
        self.circuits.iter().map(Vec::len).collect()
    }

    /// The vertices visited by circuit `i`, in traversal order (a vertex
    /// passed twice appears twice).
    pub fn circuit_vertices(&self, i: usize) -> Vec<VertexId> {
        self.circuits[i]
            .iter()
            .map(|&h| self.graph.vertex_of(h))
            .collect()
    }

    /// Labels of every vertex relative to `c`.
    pub fn labels(&self, c: &SignedEulerSystem) -> Result<Vec<TransitionLabel>> {
        label_transitions(c, self)
    }

    /// True when the partition has exactly one circuit per connected
    /// component, i.e. it is an Euler system.
    pub fn is_euler_system(&self) -> bool {
        self.len() == self.graph.component_count()
    }

    /// Raw transition lines `v : (h1 h2)(h3 h4)`.
    pub fn to_transition_text(&self) -> String {
        let mut out = String::new();
        for (v, t) in self.transitions.iter().enumerate() {
            out.push_str(&format!("{} : {}\n", self.graph.name(v), t));
        }
        out
    }
}

/// Labels every transition of `p` relative to `c`.
pub fn label_transitions(
    c: &SignedEulerSystem,
    p: &CircuitPartition,
) -> Result<Vec<TransitionLabel>> {
    if *c.graph() != *p.graph() {
        return Err(Error::GraphMismatch);
    }
    p.transitions
        .iter()
        .enumerate()
        .map(|(v, t)| label_of(c, v, t))
        .collect()
}

/// All `3^n` label vectors in lexicographic order, first vertex most
/// significant, with `Phi < Chi < Psi`.
#[derive(Clone, Debug)]
pub struct Labelings {
    alphabet: Vec<TransitionLabel>,
    digits: Vec<usize>,
    done: bool,
}

impl Labelings {
    pub fn all(n: usize) -> Self {
        Self {
            alphabet: TransitionLabel::ALL.to_vec(),
            digits: vec![0; n],
            done: false,
        }
    }

    /// The `2^n` phi/chi assignments (orientation-consistent partitions).
    pub fn oriented(n: usize) -> Self {
        Self {
            alphabet: vec![TransitionLabel::Phi, TransitionLabel::Chi],
            digits: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for Labelings {
    type Item = Vec<TransitionLabel>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&d| self.alphabet[d]).collect();
        let base = self.alphabet.len();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Every circuit partition of `c`'s graph, once each, in label order
/// relative to `c`.
pub fn enumerate_partitions(c: &SignedEulerSystem) -> impl Iterator<Item = CircuitPartition> + '_ {
    Labelings::all(c.graph().vertex_count())
        .map(move |labels| CircuitPartition::from_labels(c, &labels).expect("valid labels"))
}
