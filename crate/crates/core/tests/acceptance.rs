//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
//! failure. Registered with `harness = false`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::oracle::{
    circuit_count, euler_count_by_tracing, gf2_nullity_by_enumeration, partition_pairs,
};
use common::worked::*;
use common::{int, partition, sweep_systems, system, system_on, word_on};
use fourreg::counting::{count_euler_brute, count_euler_det, verify_detzero, verify_indicator};
use fourreg::cycles::verify_main_theorem;
use fourreg::interlace::{
    modified_interlacement, reduced_interlacement, standard_form, standard_form_by_tracing,
};
use fourreg::linalg::{gf2_nullity, int_det, rat_inverse, rat_nullity};
use fourreg::matrix::index_labels;
use fourreg::report::Report;
use fourreg::sweep::{sweep, Scope};
use fourreg::touch::{components_correspondence, touch_graph};
use fourreg::transforms::{
    euler_pair_det, kappa_orbit, transposition_orbit, verify_gf2_naturality,
    verify_kappa_naturality, verify_real_naturality, verify_transposition_rows,
};
use fourreg::{enumerate_partitions, CircuitPartition, SignedEulerSystem};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CAP: usize = 10;

/// Collects failures with a count of checks performed.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, r: &Report) {
        self.checks += r.checks.len();
        for f in r.failures() {
            self.failures
                .push(format!("{}: {} {}", r.subject, f.name, f.detail));
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn outcome(self) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{} checks", self.checks))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (
                false,
                format!(
                    "{} of {} failed; {}",
                    self.failures.len(),
                    self.checks,
                    shown.join("; ")
                ),
            )
        }
    }
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

fn inverse_entries(m: &fourreg::IntMatrix) -> Vec<Vec<BigRational>> {
    rat_inverse(m)
        .unwrap()
        .rows()
        .map(<[BigRational]>::to_vec)
        .collect()
}

fn golden_examples() -> (bool, String) {
    let mut t = Tally::default();

    let c = system("doubled_triangle.dow");
    let p = partition(&c, "doubled_triangle", "doubled_triangle_psi.tr");
    let m = modified_interlacement(&c, &p).unwrap();
    let m0 = standard_form(&c, &p).unwrap();
    t.check(m.to_int().to_i64() == int(&ALL_ONES).to_i64(), || {
        "M(C,P) all-ones".into()
    });
    t.check(m0.to_i64() == int(&ALL_ONES).to_i64(), || {
        "M0(C,P) all-ones".into()
    });
    t.check(gf2_nullity(&m) == 2, || "GF(2) nullity".into());
    t.check(rat_nullity(&m0) == 2, || "rational nullity".into());

    let c = system("eight.dow");
    let p = partition(&c, "eight", "eight.tr");
    let m0 = standard_form(&c, &p).unwrap();
    t.check(m0.to_i64() == int(&EIGHT).to_i64(), || "8x8 M0(C,P)".into());
    let product = m0
        .relabel(index_labels(8), index_labels(8))
        .unwrap()
        .mul(
            &int(&EIGHT_U)
                .relabel(index_labels(8), index_labels(4))
                .unwrap(),
        )
        .unwrap();
    t.check(product.is_zero(), || "M0 U = 0".into());

    let first = system("k5.dow");
    let m = standard_form(
        &first,
        &CircuitPartition::from_euler_system(&word_on(&first, K5_PRIME_WORD)),
    )
    .unwrap();
    t.check(m.to_i64() == int(&K5_FIRST).to_i64(), || {
        "first K5 matrix".into()
    });
    t.check(
        inverse_entries(&m) == rational(&K5_FIRST_INVERSE, 1),
        || "first K5 inverse".into(),
    );
    let second = system("k5_alt.dow");
    let m = standard_form(
        &second,
        &CircuitPartition::from_euler_system(&word_on(&second, K5_PRIME_WORD)),
    )
    .unwrap();
    t.check(m.to_i64() == int(&K5_SECOND).to_i64(), || {
        "second K5 matrix".into()
    });
    t.check(int_det(&m).unwrap() == BigInt::from(3), || {
        "second K5 det".into()
    });
    t.check(
        inverse_entries(&m) == rational(&K5_SECOND_INVERSE_TIMES_3, 3),
        || "second K5 inverse".into(),
    );

    let cp = system("k5_prime.dow");
    let cpp = system_on(&cp, "k5_double_prime.dow");
    let a = standard_form(&cp, &CircuitPartition::from_euler_system(&cpp)).unwrap();
    let b = standard_form(&cpp, &CircuitPartition::from_euler_system(&cp)).unwrap();
    t.check(a.to_i64() == int(&PRIME_DOUBLE_PRIME).to_i64(), || {
        "M0(C',C'')".into()
    });
    t.check(b.to_i64() == int(&DOUBLE_PRIME_PRIME).to_i64(), || {
        "M0(C'',C')".into()
    });
    t.check(a.mul(&b).unwrap().is_identity(), || {
        "mutual inverses".into()
    });
    t.outcome()
}

fn golden_transposition() -> (bool, String) {
    let mut t = Tally::default();
    let c = system("k5_transposition.dow");
    let moved = system_on(&c, "k5_transposed_cd.dow");
    let cp = CircuitPartition::from_euler_system(&word_on(&c, K5_PRIME_WORD));
    let m = standard_form(&c, &cp).unwrap();
    let mt = standard_form(&moved, &cp).unwrap();
    t.check(m.to_i64() == int(&BEFORE_TRANSPOSITION).to_i64(), || {
        "M0(C,C')".into()
    });
    t.check(mt.to_i64() == int(&AFTER_TRANSPOSITION).to_i64(), || {
        "M0(C*(cd),C')".into()
    });
    t.check(int_det(&m).unwrap() == BigInt::from(-3), || "det -3".into());
    t.check(int_det(&mt).unwrap() == BigInt::from(-1), || {
        "det -1".into()
    });
    t.outcome()
}

/// Runs `check` over every partition of every sweep graph.
fn over_sweep<F>(scope: Scope, check: F) -> (bool, String)
where
    F: Fn(&SignedEulerSystem, &CircuitPartition) -> Report + Sync,
{
    let mut t = Tally::default();
    for (name, c) in sweep_systems() {
        let s = sweep(&c, scope, CAP, |p| Ok(check(&c, p))).unwrap();
        t.checks += s.total;
        for subject in s.failed {
            t.failures.push(format!("{name} {subject}"));
        }
    }
    t.outcome()
}

fn nullity_sweep() -> (bool, String) {
    over_sweep(Scope::All, |c, p| {
        let expected = p.len() - c.graph().component_count();
        let mut r = Report::new("");
        let reduced = reduced_interlacement(c, p).unwrap();
        let n2 = gf2_nullity(&reduced);
        let circuits = circuit_count(c.graph().edge_count(), &partition_pairs(p));
        r.check(
            "oracle",
            circuits == p.len()
                && gf2_nullity_by_enumeration(&reduced) == circuits - c.graph().component_count(),
            "",
        );
        let nq = rat_nullity(&standard_form(c, p).unwrap());
        r.check("GF(2)", n2 == expected, "");
        r.check("Q", nq == expected, "");
        r
    })
}

fn main_theorem_sweep() -> (bool, String) {
    over_sweep(Scope::All, |c, p| verify_main_theorem(c, p).unwrap())
}

fn cross_oracle() -> (bool, String) {
    over_sweep(Scope::All, |c, p| {
        let mut r = Report::new("");
        r.check(
            "equal",
            standard_form(c, p).unwrap() == standard_form_by_tracing(c, p).unwrap(),
            "",
        );
        r
    })
}

fn naturality() -> (bool, String) {
    let mut t = Tally::default();
    for file in ["k5.dow", "doubled_triangle.dow"] {
        let c = system(file);
        let orbit = kappa_orbit(&c);
        let partitions: Vec<CircuitPartition> = enumerate_partitions(&c).collect();
        let part: Vec<Tally> = orbit
            .par_iter()
            .enumerate()
            .map(|(i, cp)| {
                let mut t = Tally::default();
                for p in &partitions {
                    t.report(&verify_gf2_naturality(&c, cp, p).unwrap());
                }
                // The rational and kappa identities rotate through the
                // partitions; the reference system gets all of them.
                let sample: Vec<&CircuitPartition> = if i == 0 {
                    partitions.iter().collect()
                } else {
                    vec![&partitions[i % partitions.len()]]
                };
                for p in sample {
                    t.report(&verify_real_naturality(&c, cp, p).unwrap());
                    for v in c.graph().vertices() {
                        t.report(&verify_kappa_naturality(cp, v, p).unwrap());
                    }
                }
                t
            })
            .collect();
        part.into_iter().for_each(|x| t.merge(x));
    }
    t.outcome()
}

fn oriented() -> (bool, String) {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, c) in sweep_systems() {
        let g = c.graph().clone();
        let n = g.vertex_count();
        let s = sweep(&c, Scope::Oriented, CAP, |p| {
            let mut r = verify_detzero(&c, p)?;
            for v in g.vertices() {
                for w in g.vertices().filter(|&w| w != v && c.interlaced(v, w)) {
                    r.absorb(verify_transposition_rows(&c, v, w, p)?);
                }
            }
            Ok(r)
        })
        .unwrap();
        t.checks += s.total;
        t.failures
            .extend(s.failed.into_iter().map(|x| format!("{name} {x}")));
        for other in transposition_orbit(&c) {
            for _ in 0..4 {
                let mut signs = |x: &SignedEulerSystem| {
                    let flips: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
                    x.flip_signs(&flips)
                };
                let (a, b) = (signs(&c), signs(&other));
                let det = euler_pair_det(&a, &b).unwrap();
                t.check(det == BigInt::from(1), || {
                    format!("{name}: det M0(C,C') = {det}")
                });
            }
        }
    }
    t.outcome()
}

fn counting() -> (bool, String) {
    let mut t = Tally::default();
    let mut counts = Vec::new();
    for (name, c) in sweep_systems() {
        let det = count_euler_det(&c);
        let brute = count_euler_brute(&c, CAP).unwrap();
        let traced = euler_count_by_tracing(&c);
        t.check(brute == traced, || {
            format!("{name}: enumeration {brute}, oracle {traced}")
        });
        t.check(det == BigInt::from(brute), || {
            format!("{name}: det {det}, brute {brute}")
        });
        let all: Vec<usize> = c.graph().vertices().collect();
        t.check(count_euler_det(&c.flip_signs(&all)) == det, || {
            format!("{name}: sign flip")
        });
        t.report(&verify_indicator(&c, CAP).unwrap());
        counts.push(format!("{name} {brute}"));
    }
    let (ok, detail) = t.outcome();
    (ok, format!("{detail}; counts {}", counts.join(", ")))
}

fn totals() -> (bool, String) {
    let mut t = Tally::default();
    for (name, c) in sweep_systems() {
        let n = c.graph().vertex_count();
        let partitions: Vec<CircuitPartition> = enumerate_partitions(&c).collect();
        t.check(partitions.len() == 3usize.pow(n as u32), || {
            format!("{name}: {} partitions", partitions.len())
        });
        let mut distinct: Vec<_> = partitions.iter().map(|p| p.to_transition_text()).collect();
        distinct.sort();
        distinct.dedup();
        t.check(distinct.len() == partitions.len(), || {
            format!("{name}: duplicates")
        });
        for p in &partitions {
            let tg = touch_graph(p, &c).unwrap();
            let ok = tg.digraph().component_count() == c.graph().component_count()
                && components_correspondence(&tg, p).is_ok();
            t.check(ok, || {
                format!("{name}: components of {}", p.to_transition_text())
            });
        }
    }
    t.outcome()
}

type Criterion = fn() -> (bool, String);

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("worked examples", golden_examples),
        ("transposition examples", golden_transposition),
        ("circuit-nullity sweep", nullity_sweep),
        ("cycle-space sweep", main_theorem_sweep),
        ("case table against tracing", cross_oracle),
        ("naturality", naturality),
        ("orientation-consistent partitions", oriented),
        ("Euler system counts", counting),
        ("partition totals and components", totals),
    ];
    let mut all = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let (ok, detail) = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        all &= ok;
        println!(
            "criterion {} {}: {title} ({detail})",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
