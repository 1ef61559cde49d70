//! Counting the Euler systems that induce the edge directions of `C`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::SignedEulerSystem;
use crate::interlace::{
    reduced_interlacement, signed_interlacement, standard_form, submatrix_blocks,
};
use crate::linalg::{gf2_nullity, int_det, rat_det};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::partition::{label_transitions, CircuitPartition, Labelings, TransitionLabel};
use crate::report::Report;
use crate::transforms::orientation_consistent;

/// Default vertex cap for exhaustive sweeps.
pub const DEFAULT_VERTEX_CAP: usize = 10;

/// `det(I + I_R(C))`.
pub fn count_euler_det(c: &SignedEulerSystem) -> BigInt {
    let ir = signed_interlacement(c);
    let m = IntMatrix::from_fn(
        ir.row_labels().to_vec(),
        ir.col_labels().to_vec(),
        |i, j| {
            if i == j {
                ir.get(i, j) + BigInt::one()
            } else {
                ir.get(i, j).clone()
            }
        },
    );
    int_det(&m).expect("square")
}

/// `P_S`: phi at the vertices of `subset`, chi elsewhere.
pub fn oriented_partition(c: &SignedEulerSystem, subset: &[bool]) -> Result<CircuitPartition> {
    let labels: Vec<TransitionLabel> = subset
        .iter()
        .map(|&inside| {
            if inside {
                TransitionLabel::Phi
            } else {
                TransitionLabel::Chi
            }
        })
        .collect();
    CircuitPartition::from_labels(c, &labels)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::VertexCap { vertices: n, cap });
    }
    Ok(())
}

/// Counts the subsets `S` for which `P_S` is an Euler system, by tracing all
/// `2^n` of them.
pub fn count_euler_brute(c: &SignedEulerSystem, cap: usize) -> Result<u64> {
    let n = c.graph().vertex_count();
    check_cap(n, cap)?;
    let labelings: Vec<_> = Labelings::oriented(n).collect();
    Ok(labelings
        .par_iter()
        .filter(|labels| {
            CircuitPartition::from_labels(c, labels)
                .expect("valid labels")
                .is_euler_system()
        })
        .count() as u64)
}

/// The equivalences for an orientation-consistent `P`: `P` is an Euler
/// system, `det M0(C,P) = 1`, `det M0(C,P) != 0`, `det I_R(C,P) = 1` and
/// `det I_R(C,P) != 0` are all true or all false.
pub fn verify_detzero(c: &SignedEulerSystem, p: &CircuitPartition) -> Result<Report> {
    if !orientation_consistent(c, p)? {
        return Err(Error::Precondition(
            "the partition uses a psi transition".into(),
        ));
    }
    let m = standard_form(c, p)?;
    let labels = label_transitions(c, p)?;
    let blocks = submatrix_blocks(&m, &labels);
    let ir = blocks
        .oriented_interlacement()
        .expect("no psi labels")
        .clone();
    let det_m = int_det(&m)?;
    let det_i = int_det(&ir)?;
    let facts = [
        p.is_euler_system(),
        det_m.is_one(),
        !det_m.is_zero(),
        det_i.is_one(),
        !det_i.is_zero(),
    ];
    let mut r = Report::new("detzero");
    r.check(
        "equivalent conditions",
        facts.iter().all(|&f| f == facts[0]),
        format!(
            "|P| = {}, det M0 = {det_m}, det I_R(C,P) = {det_i}",
            p.len()
        ),
    );
    r.check("det M0 in {0, 1}", det_m.is_zero() || det_m.is_one(), "");
    r.check("I_R(C,P) skew-symmetric", ir.is_skew_symmetric(), "");
    r.check(
        "I_R(C,P) is a block of I_R(C)",
        {
            let chi = &blocks.chi;
            signed_interlacement(c).select(chi, chi) == ir
        },
        "",
    );
    r.absorb(blocks.report);
    Ok(r)
}

/// `det(X + I_R(C))` with `X` the diagonal matrix of `x`.
pub fn indicator_polynomial(c: &SignedEulerSystem, x: &[BigRational]) -> Result<BigRational> {
    let ir = signed_interlacement(c);
    if x.len() != ir.nrows() {
        return Err(Error::Dimension(format!(
            "{} values for {} vertices",
            x.len(),
            ir.nrows()
        )));
    }
    let m = RatMatrix::from_fn(
        ir.row_labels().to_vec(),
        ir.col_labels().to_vec(),
        |i, j| {
            let base = BigRational::from_integer(ir.get(i, j).clone());
            if i == j {
                base + &x[i]
            } else {
                base
            }
        },
    );
    rat_det(&m)
}

/// Checks the polynomial `det(X + I_R(C))` against the partitions `P_S`: its
/// coefficient of `prod_{i in S} x_i` is `det M0(C, P_S)`, its value at the
/// indicator of `S` counts the Euler systems `P_T` with `T` inside `S`, and
/// its value at all-ones is `det(I + I_R(C))`.
pub fn verify_indicator(c: &SignedEulerSystem, cap: usize) -> Result<Report> {
    let n = c.graph().vertex_count();
    check_cap(n, cap)?;
    let subsets: Vec<Vec<bool>> = (0u64..1 << n)
        .map(|mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect())
        .collect();
    let value = |s: &[bool]| {
        let x: Vec<BigRational> = s
            .iter()
            .map(|&b| {
                if b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        indicator_polynomial(c, &x)
    };
    let values = subsets
        .iter()
        .map(|s| value(s))
        .collect::<Result<Vec<_>>>()?;
    let euler = subsets
        .iter()
        .map(|s| Ok(oriented_partition(c, s)?.is_euler_system()))
        .collect::<Result<Vec<bool>>>()?;
    let mut r = Report::new("indicator polynomial");
    let mut coefficients_ok = true;
    let mut values_ok = true;
    for (mask, s) in subsets.iter().enumerate() {
        // Inclusion-exclusion over the subsets T of S recovers the
        // coefficient of the monomial of S.
        let mut coefficient = BigRational::zero();
        let mut count = 0u64;
        let mut t = mask;
        loop {
            let sign = (mask.count_ones() - t.count_ones()) % 2 == 0;
            if sign {
                coefficient += &values[t];
            } else {
                coefficient -= &values[t];
            }
            count += u64::from(euler[t]);
            if t == 0 {
                break;
            }
            t = (t - 1) & mask;
        }
        let det = int_det(&standard_form(c, &oriented_partition(c, s)?)?)?;
        coefficients_ok &= coefficient == BigRational::from_integer(det);
        values_ok &= values[mask] == BigRational::from_integer(count.into());
    }
    r.check("coefficient of S = det M0(C, P_S)", coefficients_ok, "");
    r.check("value at S counts Euler P_T with T in S", values_ok, "");
    let all_ones = values.last().expect("at least the empty subset").clone();
    r.check(
        "value at all-ones = det(I + I_R(C))",
        all_ones == BigRational::from_integer(count_euler_det(c)),
        format!("{all_ones}"),
    );
    Ok(r)
}

/// The number of partitions with each circuit count, over all `3^n`
/// partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub by_size: BTreeMap<usize, u64>,
    pub total: u64,
    /// Partitions for which `nullity I(C,P) != |P| - c(F)`.
    pub nullity_failures: u64,
}

impl Census {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("circuits\tpartitions\n");
        for (k, n) in &self.by_size {
            out.push_str(&format!("{k}\t{n}\n"));
        }
        out.push_str(&format!("total\t{}\n", self.total));
        out
    }
}

pub fn partition_census(c: &SignedEulerSystem, cap: usize) -> Result<Census> {
    let n = c.graph().vertex_count();
    check_cap(n, cap)?;
    let components = c.graph().component_count();
    let labelings: Vec<_> = Labelings::all(n).collect();
    let rows = labelings
        .par_iter()
        .map(|labels| -> Result<(usize, bool)> {
            let p = CircuitPartition::from_labels(c, labels)?;
            let nullity = gf2_nullity(&reduced_interlacement(c, &p)?);
            Ok((p.len(), nullity == p.len() - components))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut by_size = BTreeMap::new();
    let mut failures = 0;
    for (size, ok) in rows {
        *by_size.entry(size).or_insert(0) += 1;
        failures += u64::from(!ok);
    }
    Ok(Census {
        by_size,
        total: labelings.len() as u64,
        nullity_failures: failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    fn signed(text: &str) -> SignedEulerSystem {
        parse_graph(text).unwrap().euler_system()
    }

    #[test]
    fn single_vertex_counts_one() {
        let c = signed("dow c: v+ v-\n");
        assert_eq!(count_euler_det(&c), BigInt::one());
        assert_eq!(count_euler_brute(&c, 10).unwrap(), 1);
    }

    #[test]
    fn doubled_triangle_census() {
        let c = signed("dow c: a+ b- c+ a- b+ c-\n");
        let census = partition_census(&c, 10).unwrap();
        assert_eq!(census.total, 27);
        assert_eq!(census.by_size.values().sum::<u64>(), 27);
        assert_eq!(census.nullity_failures, 0);
        assert!(verify_indicator(&c, 10).unwrap().passed());
        assert_eq!(
            count_euler_det(&c),
            BigInt::from(count_euler_brute(&c, 10).unwrap())
        );
    }

    #[test]
    fn cap_is_enforced() {
        let c = signed("dow c: a+ b- c+ a- b+ c-\n");
        assert!(matches!(
            partition_census(&c, 2),
            Err(Error::VertexCap {
                vertices: 3,
                cap: 2
            })
        ));
    }
}
