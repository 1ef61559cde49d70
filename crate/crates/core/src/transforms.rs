//! Kappa-transforms, transpositions and the identities relating the
//! matrices before and after them.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cycles::cycle_matrix;
use crate::error::{Error, Result};
use crate::euler::{Passage, SignedEulerSystem};
use crate::graph::{HalfEdgeId, VertexId};
use crate::interlace::{modified_interlacement, signed_interlacement, standard_form};
use crate::linalg::{gf2_inverse, rat_det, rat_inverse, row_space_equal};
use crate::matrix::IntMatrix;
use crate::partition::{label_transitions, CircuitPartition, TransitionLabel};
use crate::report::Report;
use crate::touch::touch_graph;

/// Which fundamental circuit a kappa-transform reverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `C1(C, v)`, the stretch from `v-` to `v+`.
    First,
    /// `C2(C, v)`, the stretch from `v+` to `v-`.
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KappaMove {
    pub vertex: VertexId,
    pub side: Side,
}

/// Reverses the stretch strictly between passages `i` and `j` of a circuit.
/// The two passages at the ends keep their slots and signs.
fn reverse_between(passages: &[Passage], i: usize, j: usize) -> Vec<Passage> {
    let n = passages.len();
    let mut p = passages.to_vec();
    p.rotate_left(i);
    let k = (j + n - i) % n;
    let (first, second) = (p[0], p[k]);
    let mut out = p.clone();
    out[0] = Passage {
        leave: second.enter,
        ..first
    };
    out[k] = Passage {
        enter: first.leave,
        ..second
    };
    for t in 1..k {
        let q = p[k - t];
        out[t] = Passage {
            enter: q.leave,
            leave: q.enter,
            ..q
        };
    }
    out
}

fn rewrite(
    c: &SignedEulerSystem,
    component: usize,
    passages: Vec<Passage>,
) -> Result<SignedEulerSystem> {
    let circuits = c
        .components()
        .iter()
        .enumerate()
        .map(|(i, circ)| {
            let p = if i == component {
                passages.clone()
            } else {
                circ.passages.clone()
            };
            (circ.name.clone(), p)
        })
        .collect();
    c.rebuild(circuits)
}

/// `C * v` for one choice of fundamental circuit.
pub fn kappa(c: &SignedEulerSystem, m: KappaMove) -> SignedEulerSystem {
    let s = c.slots(m.vertex);
    let passages = &c.components()[s.component].passages;
    let reversed = match m.side {
        Side::First => reverse_between(passages, s.minus, s.plus),
        Side::Second => reverse_between(passages, s.plus, s.minus),
    };
    rewrite(c, s.component, reversed).expect("a kappa-transform is an Euler system")
}

/// Both results of `C * v`: reversing `C1(C, v)`, then reversing `C2(C, v)`.
pub fn kappa_transform(
    c: &SignedEulerSystem,
    v: VertexId,
) -> (SignedEulerSystem, SignedEulerSystem) {
    (
        kappa(
            c,
            KappaMove {
                vertex: v,
                side: Side::First,
            },
        ),
        kappa(
            c,
            KappaMove {
                vertex: v,
                side: Side::Second,
            },
        ),
    )
}

/// `C * (vw)`: the circuit `v T1 w T2 v T3 w T4` becomes `v T3 w T2 v T1 w T4`.
///
/// Each new passage takes the sign of the passage whose entering half-edge
/// it keeps, so `v+ T1 w+ T2 v- T3 w- T4` becomes `v+ T3 w- T2 v- T1 w+ T4`.
pub fn transposition(c: &SignedEulerSystem, v: VertexId, w: VertexId) -> Result<SignedEulerSystem> {
    if v == w || !c.interlaced(v, w) {
        let g = c.graph();
        return Err(Error::NotInterlaced(
            g.name(v).to_string(),
            g.name(w).to_string(),
        ));
    }
    let s = c.slots(v);
    let mut p = c.components()[s.component].passages.clone();
    let n = p.len();
    p.rotate_left(s.plus);
    let at = |x: VertexId, from: usize| (from..n).find(|&i| p[i].vertex == x).expect("interlaced");
    let w1 = at(w, 1);
    let v2 = at(v, w1);
    let w2 = at(w, v2);
    let (pv1, pw1, pv2, pw2) = (p[0], p[w1], p[v2], p[w2]);
    let mut out = Vec::with_capacity(n);
    out.push(Passage {
        leave: pv2.leave,
        ..pv1
    });
    out.extend_from_slice(&p[v2 + 1..w2]);
    out.push(Passage {
        leave: pw1.leave,
        ..pw2
    });
    out.extend_from_slice(&p[w1 + 1..v2]);
    out.push(Passage {
        leave: pv1.leave,
        ..pv2
    });
    out.extend_from_slice(&p[1..w1]);
    out.push(Passage {
        leave: pw2.leave,
        ..pw1
    });
    out.extend_from_slice(&p[w2 + 1..]);
    rewrite(c, s.component, out)
}

/// True when `P` uses no psi transition relative to `C`.
pub fn orientation_consistent(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<bool> {
    Ok(label_transitions(c, p)?
        .iter()
        .all(|&l| l != TransitionLabel::Psi))
}

/// Labels relative to `C * v` as predicted from those relative to `C`.
pub fn predicted_kappa_labels(
    c: &SignedEulerSystem,
    v: VertexId,
    labels: &[TransitionLabel],
) -> Vec<TransitionLabel> {
    use TransitionLabel::*;
    labels
        .iter()
        .enumerate()
        .map(|(w, &l)| match l {
            Phi if w == v => Psi,
            Psi if w == v => Phi,
            Chi if w != v && c.interlaced(v, w) => Psi,
            Psi if w != v && c.interlaced(v, w) => Chi,
            other => other,
        })
        .collect()
}

/// Labels relative to `C * (vw)` as predicted from those relative to `C`.
pub fn predicted_transposition_labels(
    v: VertexId,
    w: VertexId,
    labels: &[TransitionLabel],
) -> Vec<TransitionLabel> {
    use TransitionLabel::*;
    labels
        .iter()
        .enumerate()
        .map(|(x, &l)| match l {
            Phi if x == v || x == w => Chi,
            Chi if x == v || x == w => Phi,
            other => other,
        })
        .collect()
}

/// Over GF(2): `M(C', P) = M(C', C) M(C, P)` and `M(C, C') = M(C', C)^-1`.
pub fn verify_gf2_naturality(
    c: &SignedEulerSystem,
    c_prime: &SignedEulerSystem,
    p: &CircuitPartition,
) -> Result<Report> {
    let mut r = Report::new("gf2 naturality");
    let as_c = CircuitPartition::from_euler_system(c);
    let as_c_prime = CircuitPartition::from_euler_system(c_prime);
    let m_pc = modified_interlacement(c_prime, &as_c)?;
    let m_cp = modified_interlacement(c, &as_c_prime)?;
    let lhs = modified_interlacement(c_prime, p)?;
    let rhs = m_pc.mul(&modified_interlacement(c, p)?)?;
    r.check("M(C',P) = M(C',C) M(C,P)", lhs == rhs, "");
    let inverse_ok = gf2_inverse(&m_pc).map(|inv| inv == m_cp).unwrap_or(false);
    r.check("M(C,C') = M(C',C)^-1", inverse_ok, "");
    Ok(r)
}

/// Checks the kappa-transform identities at `v` for both choices of `C * v`.
pub fn verify_kappa_naturality(
    c: &SignedEulerSystem,
    v: VertexId,
    p: &CircuitPartition,
) -> Result<Report> {
    let g = c.graph();
    let mut r = Report::new(format!("kappa at {}", g.name(v)));
    let labels = label_transitions(c, p)?;
    let m = modified_interlacement(c, p)?;
    let mut expected = m.clone();
    for w in g.vertices().filter(|&w| w != v && c.interlaced(v, w)) {
        expected.add_row(v, w);
    }
    let (first, second) = kappa_transform(c, v);
    for (side, ck) in [("C1", first), ("C2", second)] {
        r.check(
            format!("{side}: labels"),
            label_transitions(&ck, p)? == predicted_kappa_labels(c, v, &labels),
            "",
        );
        r.check(
            format!("{side}: row additions"),
            modified_interlacement(&ck, p)? == expected,
            "",
        );
        let mut nat = verify_gf2_naturality(c, &ck, p)?;
        nat.subject = side.to_string();
        r.absorb(nat);
    }
    Ok(r)
}

/// Over the rationals: `det M0(C, C')` is odd, `det * M0(C, C')^-1` is an
/// integer matrix reducing to `M(C', C)`, and `M0(C', C) M0(C, P)` has the
/// row space of the cycle space and reduces to `M(C', P)`.
pub fn verify_real_naturality(
    c: &SignedEulerSystem,
    c_prime: &SignedEulerSystem,
    p: &CircuitPartition,
) -> Result<Report> {
    let mut r = Report::new("real naturality");
    let as_c = CircuitPartition::from_euler_system(c);
    let as_c_prime = CircuitPartition::from_euler_system(c_prime);
    let m = standard_form(c, &as_c_prime)?;
    let det = rat_det(&m)?;
    let odd = det.is_integer() && det.to_integer().is_odd();
    r.check("det M0(C,C') odd", odd, format!("det {det}"));
    let adjugate = rat_inverse(&m)?.scale(&det).to_integer();
    let target = modified_interlacement(c_prime, &as_c)?;
    let reduces = adjugate.as_ref().is_some_and(|a| a.mod2() == target);
    r.check("det * M0(C,C')^-1 integral", adjugate.is_some(), "");
    r.check("det * M0(C,C')^-1 reduces to M(C',C)", reduces, "");
    let product = standard_form(c_prime, &as_c)?.mul(&standard_form(c, p)?)?;
    let z = cycle_matrix(&touch_graph(p, c)?.digraph());
    r.check(
        "M0(C',C) M0(C,P) spans the cycle space",
        row_space_equal(&product, &z)?,
        "",
    );
    r.check(
        "M0(C',C) M0(C,P) reduces to M(C',P)",
        product.mod2() == modified_interlacement(c_prime, p)?,
        "",
    );
    Ok(r)
}

/// Re-signs `C` so that its circuit through `v` reads
/// `v+ T1 w+ T2 v- T3 w- T4`.
pub fn transposition_signing(c: &SignedEulerSystem, v: VertexId, w: VertexId) -> SignedEulerSystem {
    let s = c.slots(v);
    let n = c.components()[s.component].len();
    let ws = c.slots(w);
    let offset = |x: usize| (x + n - s.plus) % n;
    if offset(ws.plus) < offset(ws.minus) {
        c.clone()
    } else {
        c.flip_sign(w)
    }
}

/// Checks the row identities between `M0(C, P)` and `M0(C * (vw), P)` for an
/// orientation-consistent `P`, with `C` signed as `v+ T1 w+ T2 v- T3 w- T4`.
pub fn verify_transposition_rows(
    c: &SignedEulerSystem,
    v: VertexId,
    w: VertexId,
    p: &CircuitPartition,
) -> Result<Report> {
    let g = c.graph();
    if v == w || !c.interlaced(v, w) {
        return Err(Error::NotInterlaced(
            g.name(v).to_string(),
            g.name(w).to_string(),
        ));
    }
    if !orientation_consistent(c, p)? {
        return Err(Error::Precondition(
            "the partition uses a psi transition".into(),
        ));
    }
    let cs = transposition_signing(c, v, w);
    let t = transposition(&cs, v, w)?;
    let m = standard_form(&cs, p)?;
    let mt = standard_form(&t, p)?;
    let ir = signed_interlacement(&cs);
    let mut r = Report::new(format!("transposition ({}{})", g.name(v), g.name(w)));
    r.check("row v = old row w", mt.row(v) == m.row(w), "");
    let neg: Vec<BigInt> = m.row(v).iter().map(|x| -x).collect();
    r.check("row w = -(old row v)", mt.row(w) == neg.as_slice(), "");
    let others = g.vertices().filter(|&x| x != v && x != w).all(|x| {
        let expected: Vec<BigInt> = (0..m.ncols())
            .map(|j| m.get(x, j) + ir.get(x, w) * m.get(v, j) - ir.get(x, v) * m.get(w, j))
            .collect();
        mt.row(x) == expected.as_slice()
    });
    r.check("other rows", others, "");
    r.check(
        "labels",
        label_transitions(&t, p)?
            == predicted_transposition_labels(v, w, &label_transitions(&cs, p)?),
        "",
    );
    r.check(
        "edge directions kept",
        t.edge_directions() == cs.edge_directions(),
        "",
    );
    Ok(r)
}

/// A route from one Euler system to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Path {
    Kappa(Vec<KappaMove>),
    Transpositions(Vec<(VertexId, VertexId)>),
}

type Key = Vec<Vec<(HalfEdgeId, HalfEdgeId)>>;

fn bfs<M: Clone>(
    start: &SignedEulerSystem,
    target: &Key,
    moves: impl Fn(&SignedEulerSystem) -> Vec<(M, SignedEulerSystem)>,
) -> Option<Vec<M>> {
    let mut parent: HashMap<Key, Option<(Key, M)>> = HashMap::new();
    let start_key = start.trace_key();
    parent.insert(start_key.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    let mut found = start_key == *target;
    while !found {
        let Some(x) = queue.pop_front() else { break };
        let xk = x.trace_key();
        for (m, y) in moves(&x) {
            let yk = y.trace_key();
            if parent.contains_key(&yk) {
                continue;
            }
            parent.insert(yk.clone(), Some((xk.clone(), m)));
            if yk == *target {
                found = true;
                break;
            }
            queue.push_back(y);
        }
    }
    if !found {
        return None;
    }
    let mut path = Vec::new();
    let mut k = target.clone();
    while let Some(Some((prev, m))) = parent.get(&k) {
        path.push(m.clone());
        k = prev.clone();
    }
    path.reverse();
    Some(path)
}

/// Finds a route from `c` to `c_prime`, ignoring signs. When both systems
/// induce the same edge directions the route uses transpositions only;
/// otherwise it uses kappa-transforms.
pub fn kappa_reachability(c: &SignedEulerSystem, c_prime: &SignedEulerSystem) -> Result<Path> {
    if **c.graph() != **c_prime.graph() {
        return Err(Error::GraphMismatch);
    }
    let target = c_prime.trace_key();
    let n = c.graph().vertex_count();
    if c.edge_directions() == c_prime.edge_directions() {
        let path = bfs(c, &target, |x| {
            let mut out = Vec::new();
            for v in 0..n {
                for w in v + 1..n {
                    if x.interlaced(v, w) {
                        out.push(((v, w), transposition(x, v, w).expect("interlaced")));
                    }
                }
            }
            out
        });
        return path.map(Path::Transpositions).ok_or_else(|| {
            Error::Internal(
                "no transposition route between systems with equal edge directions".into(),
            )
        });
    }
    bfs(c, &target, |x| kappa_moves(x, n))
        .map(Path::Kappa)
        .ok_or_else(|| Error::Internal("no kappa route between Euler systems".into()))
}

fn kappa_moves(x: &SignedEulerSystem, n: usize) -> Vec<(KappaMove, SignedEulerSystem)> {
    (0..n)
        .flat_map(|v| {
            [Side::First, Side::Second].map(|side| {
                let m = KappaMove { vertex: v, side };
                (m, kappa(x, m))
            })
        })
        .collect()
}

/// Replays a route from `c`.
pub fn apply_path(c: &SignedEulerSystem, path: &Path) -> Result<SignedEulerSystem> {
    match path {
        Path::Kappa(moves) => Ok(moves.iter().fold(c.clone(), |x, &m| kappa(&x, m))),
        Path::Transpositions(pairs) => pairs
            .iter()
            .try_fold(c.clone(), |x, &(v, w)| transposition(&x, v, w)),
    }
}

/// Every Euler system reachable from `c` by kappa-transforms, in BFS order,
/// distinct up to signs.
pub fn kappa_orbit(c: &SignedEulerSystem) -> Vec<SignedEulerSystem> {
    let n = c.graph().vertex_count();
    let mut seen = std::collections::HashSet::from([c.trace_key()]);
    let mut order = vec![c.clone()];
    let mut i = 0;
    while i < order.len() {
        let x = order[i].clone();
        for (_, y) in kappa_moves(&x, n) {
            if seen.insert(y.trace_key()) {
                order.push(y);
            }
        }
        i += 1;
    }
    order
}

/// Every Euler system reachable from `c` by transpositions, distinct up to
/// signs. These are the systems inducing the same edge directions as `c`.
pub fn transposition_orbit(c: &SignedEulerSystem) -> Vec<SignedEulerSystem> {
    let n = c.graph().vertex_count();
    let mut seen = std::collections::HashSet::from([c.trace_key()]);
    let mut order = vec![c.clone()];
    let mut i = 0;
    while i < order.len() {
        let x = order[i].clone();
        for v in 0..n {
            for w in v + 1..n {
                if x.interlaced(v, w) {
                    let y = transposition(&x, v, w).expect("interlaced");
                    if seen.insert(y.trace_key()) {
                        order.push(y);
                    }
                }
            }
        }
        i += 1;
    }
    order
}

/// `det M0(C, C')`, which is 1 when both systems induce the same edge
/// directions.
pub fn euler_pair_det(c: &SignedEulerSystem, c_prime: &SignedEulerSystem) -> Result<BigInt> {
    let m: IntMatrix = standard_form(c, &CircuitPartition::from_euler_system(c_prime))?;
    let d = rat_det(&m)?;
    if d.is_integer() {
        Ok(d.to_integer())
    } else {
        Err(Error::Internal("non-integral determinant".into()))
    }
}
