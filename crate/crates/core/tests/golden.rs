mod common;

use common::worked::*;
use common::{int, partition, system, system_on, word_on};
use fourreg::cycles::cocycle_matrix;
use fourreg::interlace::{modified_interlacement, standard_form, standard_form_by_tracing};
use fourreg::linalg::{gf2_nullity, int_det, rat_inverse, rat_nullity};
use fourreg::matrix::index_labels;
use fourreg::partition::CircuitPartition;
use fourreg::touch::touch_graph;
use fourreg::{label_transitions, RatMatrix, TransitionLabel};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn doubled_triangle_all_psi() {
    let c = system("doubled_triangle.dow");
    let p = partition(&c, "doubled_triangle", "doubled_triangle_psi.tr");
    let m0 = standard_form(&c, &p).unwrap();
    assert_eq!(m0.to_i64(), int(&ALL_ONES).to_i64());
    let m = modified_interlacement(&c, &p).unwrap();
    assert_eq!(m.to_int().to_i64(), int(&ALL_ONES).to_i64());
    assert_eq!(gf2_nullity(&m), 2);
    assert_eq!(rat_nullity(&m0), 2);
    assert_eq!(p.circuit_sizes(), vec![2, 2, 2]);
    // e_a runs from the circuit through a and c to the one through a and b.
    let tg = touch_graph(&p, &c).unwrap();
    let g = c.graph();
    let circuit_names = |i: usize| {
        let mut v: Vec<&str> = p.circuit_vertices(i).iter().map(|&x| g.name(x)).collect();
        v.sort();
        v.join("")
    };
    let e: Vec<(String, String)> = tg
        .edges()
        .iter()
        .map(|e| (circuit_names(e.tail), circuit_names(e.head)))
        .collect();
    let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
    assert_eq!(
        e,
        vec![pair("ac", "ab"), pair("ab", "bc"), pair("bc", "ac")]
    );
}

#[test]
fn eight_vertex_example() {
    let c = system("eight.dow");
    let p = partition(&c, "eight", "eight.tr");
    let labels = label_transitions(&c, &p).unwrap();
    assert_eq!(labels[0], TransitionLabel::Phi);
    assert_eq!(
        labels
            .iter()
            .filter(|&&l| l == TransitionLabel::Psi)
            .count(),
        5
    );
    let mut sizes = p.circuit_sizes();
    sizes.sort();
    assert_eq!(sizes, vec![3, 3, 3, 7]);
    let m0 = standard_form(&c, &p).unwrap();
    assert_eq!(m0.to_i64(), int(&EIGHT).to_i64());
    assert_eq!(standard_form_by_tracing(&c, &p).unwrap(), m0);
    assert_eq!(m0.mod2(), modified_interlacement(&c, &p).unwrap());
    let product = m0
        .relabel(index_labels(8), index_labels(8))
        .unwrap()
        .mul(&int(&EIGHT_U))
        .unwrap();
    assert!(product.is_zero());
    // The computed cocycle matrix is the displayed one up to circuit order.
    let ours = cocycle_matrix(&touch_graph(&p, &c).unwrap().digraph()).to_i64();
    let columns = |m: &[Vec<i64>]| {
        let mut cols: Vec<Vec<i64>> = (0..4).map(|j| m.iter().map(|r| r[j]).collect()).collect();
        cols.sort();
        cols
    };
    assert_eq!(columns(&ours), columns(&int(&EIGHT_U).to_i64()));
}

#[test]
fn eight_vertex_rows_as_circuits() {
    let c = system("eight.dow");
    let p = partition(&c, "eight", "eight.tr");
    let m0 = standard_form_by_tracing(&c, &p).unwrap().to_i64();
    assert_eq!(m0[5], vec![0, 0, 0, 0, 1, 1, -1, 1]);
    assert_eq!(m0[4], vec![0, 1, 0, 0, 0, 1, 0, 0]);
}

fn rational(rows: &[&[i64]], denominator: i64) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::new(x.into(), denominator.into()))
                .collect()
        })
        .collect()
}

fn entries(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    m.rows().map(<[BigRational]>::to_vec).collect()
}

#[test]
fn k5_first_signing() {
    let c = system("k5.dow");
    let cp = CircuitPartition::from_euler_system(&word_on(&c, K5_PRIME_WORD));
    let m0 = standard_form(&c, &cp).unwrap();
    assert_eq!(m0.to_i64(), int(&K5_FIRST).to_i64());
    assert_eq!(
        entries(&rat_inverse(&m0).unwrap()),
        rational(&K5_FIRST_INVERSE, 1)
    );
    assert_eq!(int_det(&m0).unwrap(), BigInt::from(-1));
}

#[test]
fn k5_second_signing() {
    let c = system("k5_alt.dow");
    let cp = CircuitPartition::from_euler_system(&word_on(&c, K5_PRIME_WORD));
    let m0 = standard_form(&c, &cp).unwrap();
    assert_eq!(m0.to_i64(), int(&K5_SECOND).to_i64());
    assert_eq!(int_det(&m0).unwrap(), BigInt::from(3));
    assert_eq!(
        entries(&rat_inverse(&m0).unwrap()),
        rational(&K5_SECOND_INVERSE_TIMES_3, 3)
    );
}

#[test]
fn k5_mutual_inverses() {
    let cp = system("k5_prime.dow");
    let cpp = system_on(&cp, "k5_double_prime.dow");
    let a = standard_form(&cp, &CircuitPartition::from_euler_system(&cpp)).unwrap();
    let b = standard_form(&cpp, &CircuitPartition::from_euler_system(&cp)).unwrap();
    assert_eq!(a.to_i64(), int(&PRIME_DOUBLE_PRIME).to_i64());
    assert_eq!(b.to_i64(), int(&DOUBLE_PRIME_PRIME).to_i64());
    assert!(a.mul(&b).unwrap().is_identity());
    assert!(b.mul(&a).unwrap().is_identity());
}

#[test]
fn transposition_fixtures() {
    let c = system("k5_transposition.dow");
    let t = system_on(&c, "k5_transposed_cd.dow");
    let cp = CircuitPartition::from_euler_system(&word_on(&c, K5_PRIME_WORD));
    let m = standard_form(&c, &cp).unwrap();
    let mt = standard_form(&t, &cp).unwrap();
    assert_eq!(m.to_i64(), int(&BEFORE_TRANSPOSITION).to_i64());
    assert_eq!(mt.to_i64(), int(&AFTER_TRANSPOSITION).to_i64());
    assert_eq!(int_det(&m).unwrap(), BigInt::from(-3));
    assert_eq!(int_det(&mt).unwrap(), BigInt::from(-1));
}
