//! Brute-force oracles written against the raw graph, sharing no code with
//! the library's tracing or elimination.

use fourreg::{CircuitPartition, Gf2Matrix, IntMatrix, SignedEulerSystem};
use num_bigint::BigInt;

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Circuits of a set of transitions: each pair `{a, b}` makes the edges of
/// `a` and `b` consecutive, so circuits are the classes of edges.
pub fn circuit_count(edges: usize, pairs: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..edges).collect();
    for &(a, b) in pairs {
        let (x, y) = (find(&mut parent, a / 2), find(&mut parent, b / 2));
        parent[x] = y;
    }
    (0..edges).filter(|&e| find(&mut parent, e) == e).count()
}

pub fn partition_pairs(p: &CircuitPartition) -> Vec<(usize, usize)> {
    p.transitions()
        .iter()
        .flat_map(|t| t.pairs().map(|[a, b]| (a, b)))
        .collect()
}

/// Euler systems with the same edge directions as `c`: at each vertex pair
/// each entering half-edge with one of the two leaving ones.
pub fn euler_count_by_tracing(c: &SignedEulerSystem) -> u64 {
    let g = c.graph();
    let n = g.vertex_count();
    let components = g.component_count();
    let mut count = 0;
    for mask in 0u32..1 << n {
        let mut pairs = Vec::new();
        for v in 0..n {
            let [h1, h2, h3, h4] = c.quad(v);
            if mask >> v & 1 == 0 {
                pairs.extend([(h1, h2), (h3, h4)]);
            } else {
                pairs.extend([(h1, h4), (h3, h2)]);
            }
        }
        count += u64::from(circuit_count(g.edge_count(), &pairs) == components);
    }
    count
}

/// log2 of the kernel size, by trying every vector.
pub fn gf2_nullity_by_enumeration(m: &Gf2Matrix) -> usize {
    let (rows, cols) = (m.nrows(), m.ncols());
    let kernel = (0u32..1 << cols)
        .filter(|x| {
            (0..rows).all(|i| {
                (0..cols)
                    .filter(|&j| m.get(i, j) && x >> j & 1 == 1)
                    .count()
                    % 2
                    == 0
            })
        })
        .count();
    kernel.trailing_zeros() as usize
}

/// Leibniz expansion over all permutations (Heap's algorithm).
pub fn det_by_permutations(m: &IntMatrix) -> BigInt {
    let n = m.nrows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut sign = 1i64;
    let term = |perm: &[usize], sign: i64| -> BigInt {
        perm.iter()
            .enumerate()
            .fold(BigInt::from(sign), |acc, (i, &j)| acc * m.get(i, j))
    };
    let mut total = term(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            total += term(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

pub fn plus_identity(m: &IntMatrix) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.nrows() {
        out.set(i, i, m.get(i, i) + 1);
    }
    out
}
