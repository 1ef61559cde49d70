//! Interlacement matrices of a signed Euler system relative to a circuit
//! partition.
//!
//! All `V x V` matrices are indexed by vertex name in sorted order. The
//! standard form `M0(C, P)` is built twice: once from the entry case table
//! and once by projecting each fundamental circuit onto the touch-graph and
//! tallying it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cycles::walk_tally;
use crate::error::Result;
use crate::euler::{Sign, SignedEulerSystem};
use crate::graph::{HalfEdgeId, VertexId};
use crate::matrix::{Gf2Matrix, IntMatrix};
use crate::partition::{label_transitions, CircuitPartition, TransitionLabel};
use crate::report::Report;
use crate::touch::{project_walk, touch_graph, TouchStep};

fn names(c: &SignedEulerSystem) -> Vec<String> {
    c.graph().names().to_vec()
}

fn slot(c: &SignedEulerSystem, v: VertexId, sign: Sign) -> usize {
    let s = c.slots(v);
    match sign {
        Sign::Plus => s.plus,
        Sign::Minus => s.minus,
    }
}

fn component_len(c: &SignedEulerSystem, v: VertexId) -> usize {
    c.components()[c.slots(v).component].len()
}

/// Whether the passage at `position` lies strictly inside `C1(C, v)`, the
/// stretch from `v-` to `v+`.
fn inside_c1(c: &SignedEulerSystem, v: VertexId, position: usize) -> bool {
    let s = c.slots(v);
    let n = component_len(c, v);
    let len = (s.plus + n - s.minus) % n;
    let d = (position + n - s.minus) % n;
    d >= 1 && d < len
}

/// `I(C)`: `vw = 1` when `v` and `w` are interlaced.
pub fn interlacement(c: &SignedEulerSystem) -> Gf2Matrix {
    Gf2Matrix::from_fn(names(c), names(c), |v, w| v != w && c.interlaced(v, w))
}

/// `I_R(C)`: `+1` for the cyclic order `v+ w- v- w+`, `-1` for
/// `v+ w+ v- w-`.
pub fn signed_interlacement(c: &SignedEulerSystem) -> IntMatrix {
    IntMatrix::from_fn(names(c), names(c), |v, w| {
        if v == w || !c.same_component(v, w) {
            return BigInt::zero();
        }
        let s = c.slots(v);
        let n = component_len(c, v);
        let between = |x: usize| {
            let d = (x + n - s.plus) % n;
            d > 0 && d < (s.minus + n - s.plus) % n
        };
        match (
            between(slot(c, w, Sign::Plus)),
            between(slot(c, w, Sign::Minus)),
        ) {
            (false, true) => BigInt::one(),
            (true, false) => -BigInt::one(),
            _ => BigInt::zero(),
        }
    })
}

/// `M(C, P)` over GF(2): at a phi vertex the diagonal becomes 1 and the rest
/// of its column 0; at a psi vertex the diagonal becomes 1.
pub fn modified_interlacement(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<Gf2Matrix> {
    let labels = label_transitions(c, p)?;
    let i = interlacement(c);
    Ok(Gf2Matrix::from_fn(names(c), names(c), |v, w| {
        match (labels[w], v == w) {
            (TransitionLabel::Phi, same) => same,
            (TransitionLabel::Psi, true) => true,
            _ => i.get(v, w),
        }
    }))
}

/// `I(C, P)`: `I(C)` without the phi rows and columns, with 1 on the
/// diagonal at psi vertices.
pub fn reduced_interlacement(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<Gf2Matrix> {
    let labels = label_transitions(c, p)?;
    let keep: Vec<usize> = (0..labels.len())
        .filter(|&v| labels[v] != TransitionLabel::Phi)
        .collect();
    let m = modified_interlacement(c, p)?;
    Ok(m.select(&keep, &keep))
}

/// `M0(C, P)` from the entry case table.
///
/// With `C1(v)` the stretch from `v-` to `v+`: the diagonal is 1 unless the
/// label is chi; off the diagonal a phi column is 0, a chi column is
/// `[w+ in C1(v)] - [w- in C1(v)]` and a psi column is
/// `[w+ in C1(v)] + [w- in C1(v)]`.
pub fn standard_form(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<IntMatrix> {
    let labels = label_transitions(c, p)?;
    Ok(IntMatrix::from_fn(names(c), names(c), |v, w| {
        if v == w {
            return BigInt::from(i64::from(labels[v] != TransitionLabel::Chi));
        }
        if !c.same_component(v, w) {
            return BigInt::zero();
        }
        let plus = i64::from(inside_c1(c, v, slot(c, w, Sign::Plus)));
        let minus = i64::from(inside_c1(c, v, slot(c, w, Sign::Minus)));
        BigInt::from(match labels[w] {
            TransitionLabel::Phi => 0,
            TransitionLabel::Chi => plus - minus,
            TransitionLabel::Psi => plus + minus,
        })
    }))
}

/// The two closed trails of `C` split at `v`, as lists of leaving
/// half-edges. `c1` leaves `v` along `h4` and returns along `h1`; `c2`
/// leaves along `h2` and returns along `h3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCircuitPair {
    pub vertex: VertexId,
    pub c1: Vec<HalfEdgeId>,
    pub c2: Vec<HalfEdgeId>,
}

pub fn fundamental_circuits(c: &SignedEulerSystem, v: VertexId) -> FundamentalCircuitPair {
    let s = c.slots(v);
    let passages = &c.components()[s.component].passages;
    let n = passages.len();
    let len = (s.plus + n - s.minus) % n;
    let run = |start: usize, k: usize| -> Vec<HalfEdgeId> {
        (0..k).map(|i| passages[(start + i) % n].leave).collect()
    };
    FundamentalCircuitPair {
        vertex: v,
        c1: run(s.minus, len),
        c2: run(s.plus, n - len),
    }
}

/// `M0(C, P)` with row `v` equal to the touch-graph tally of the projected
/// fundamental circuit `C1(C, v)`.
pub fn standard_form_by_tracing(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<IntMatrix> {
    let tg = touch_graph(p, c)?;
    let d = tg.digraph();
    let mut rows = Vec::with_capacity(c.graph().vertex_count());
    for v in c.graph().vertices() {
        let walk = fundamental_circuits(c, v).c1;
        let steps: Vec<_> = project_walk(&tg, p, &walk)?
            .iter()
            .map(TouchStep::directed)
            .collect();
        rows.push(walk_tally(&d, &steps)?);
    }
    Ok(IntMatrix::from_fn(names(c), names(c), |v, w| {
        rows[v][w].into()
    }))
}

/// The standard form predicted after swapping `v+` and `v-`: a chi column
/// at `v` is negated, and in row `v` chi entries are negated and psi
/// entries on `v`'s circuit swap `0` and `2`.
pub fn predicted_flip(
    c: &SignedEulerSystem,
    m: &IntMatrix,
    labels: &[TransitionLabel],
    v: VertexId,
) -> IntMatrix {
    let mut out = m.clone();
    if labels[v] == TransitionLabel::Chi {
        for x in 0..m.nrows() {
            out.set(x, v, -m.get(x, v));
        }
    }
    let two = BigInt::from(2);
    for w in (0..m.ncols()).filter(|&w| w != v) {
        let x = out.get(v, w).clone();
        match labels[w] {
            TransitionLabel::Chi => out.set(v, w, -x),
            TransitionLabel::Psi if !c.same_component(v, w) => {}
            TransitionLabel::Psi if x.is_zero() => out.set(v, w, two.clone()),
            TransitionLabel::Psi if x == two => out.set(v, w, BigInt::zero()),
            _ => {}
        }
    }
    out
}

/// Compares the standard form of `C` with `v`'s signs swapped against
/// [`predicted_flip`], and checks that nothing changes mod 2.
pub fn verify_flip_rule(
    c: &SignedEulerSystem,
    p: &CircuitPartition,
    v: VertexId,
) -> Result<Report> {
    let mut r = Report::new(format!("flip {}", c.graph().name(v)));
    let labels = label_transitions(c, p)?;
    let before = standard_form(c, p)?;
    let after = standard_form(&c.flip_sign(v), p)?;
    r.check(
        "three-change rule",
        after == predicted_flip(c, &before, &labels, v),
        "",
    );
    r.check("unchanged mod 2", after.mod2() == before.mod2(), "");
    Ok(r)
}

/// The standard form cut by label into the blocks
///
/// ```text
///        phi  chi  psi
///   phi   I   M1   M2
///   chi   0   M3   M4
///   psi   0   M5   M6
/// ```
#[derive(Clone, Debug)]
pub struct Blocks {
    pub phi: Vec<VertexId>,
    pub chi: Vec<VertexId>,
    pub psi: Vec<VertexId>,
    pub m1: IntMatrix,
    pub m2: IntMatrix,
    pub m3: IntMatrix,
    pub m4: IntMatrix,
    pub m5: IntMatrix,
    pub m6: IntMatrix,
    pub report: Report,
}

impl Blocks {
    /// `I_R(C, P)`, defined when no vertex is psi.
    pub fn oriented_interlacement(&self) -> Option<&IntMatrix> {
        self.psi.is_empty().then_some(&self.m3)
    }

    /// `J_R(C, P)`, defined when no vertex is psi.
    pub fn oriented_cross(&self) -> Option<&IntMatrix> {
        self.psi.is_empty().then_some(&self.m1)
    }
}

fn entries_in(m: &IntMatrix, allowed: &[i64]) -> bool {
    m.rows()
        .flatten()
        .all(|x| allowed.iter().any(|&a| *x == BigInt::from(a)))
}

pub fn submatrix_blocks(m: &IntMatrix, labels: &[TransitionLabel]) -> Blocks {
    let by = |l: TransitionLabel| -> Vec<usize> {
        (0..labels.len()).filter(|&v| labels[v] == l).collect()
    };
    let (phi, chi, psi) = (
        by(TransitionLabel::Phi),
        by(TransitionLabel::Chi),
        by(TransitionLabel::Psi),
    );
    let rest: Vec<usize> = chi.iter().chain(&psi).copied().collect();
    let mut r = Report::new("blocks");
    r.check("I is an identity", m.select(&phi, &phi).is_identity(), "");
    r.check("below I is zero", m.select(&rest, &phi).is_zero(), "");
    let m1 = m.select(&phi, &chi);
    let m2 = m.select(&phi, &psi);
    let m3 = m.select(&chi, &chi);
    let m4 = m.select(&chi, &psi);
    let m5 = m.select(&psi, &chi);
    let m6 = m.select(&psi, &psi);
    r.check("M1 in {-1,0,1}", entries_in(&m1, &[-1, 0, 1]), "");
    r.check("M2 in {0,1,2}", entries_in(&m2, &[0, 1, 2]), "");
    r.check("M3 in {-1,0,1}", entries_in(&m3, &[-1, 0, 1]), "");
    r.check("M3 skew-symmetric", m3.is_skew_symmetric(), "");
    r.check("M4 in {0,1,2}", entries_in(&m4, &[0, 1, 2]), "");
    r.check("M5 in {-1,0,1}", entries_in(&m5, &[-1, 0, 1]), "");
    let one = BigInt::one();
    let linked = (0..chi.len()).all(|i| {
        (0..psi.len()).all(|j| {
            let odd = *m4.get(i, j) == one;
            m5.get(j, i).is_zero() != odd
        })
    });
    r.check("M4/M5 symmetry", linked, "");
    let diagonal = (0..psi.len()).all(|i| *m6.get(i, i) == one);
    let off = (0..psi.len()).all(|i| {
        (0..psi.len())
            .all(|j| i == j || [0, 1, 2].iter().any(|&a| *m6.get(i, j) == BigInt::from(a)))
    });
    r.check("M6 diagonal 1", diagonal, "");
    r.check("M6 off-diagonal in {0,1,2}", off, "");
    r.check("M6 symmetric mod 2", m6.mod2().is_symmetric(), "");
    Blocks {
        phi,
        chi,
        psi,
        m1,
        m2,
        m3,
        m4,
        m5,
        m6,
        report: r,
    }
}
