#![allow(dead_code)]

pub mod oracle;
pub mod worked;

use std::path::PathBuf;

use fourreg::{
    parse_euler_on, parse_graph, parse_transitions, CircuitPartition, IntMatrix, SignedEulerSystem,
};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn system(name: &str) -> SignedEulerSystem {
    parse_graph(&fixture(name)).unwrap().euler_system()
}

/// Realizes fixture `name` on `c`'s graph.
pub fn system_on(c: &SignedEulerSystem, name: &str) -> SignedEulerSystem {
    parse_euler_on(c.graph(), &fixture(name)).unwrap()
}

/// Realizes a signed or unsigned word on `c`'s graph.
pub fn word_on(c: &SignedEulerSystem, word: &str) -> SignedEulerSystem {
    parse_euler_on(c.graph(), &format!("dow C: {word}\n")).unwrap()
}

pub fn partition(c: &SignedEulerSystem, reference: &str, name: &str) -> CircuitPartition {
    parse_transitions(&fixture(name), c.graph(), Some((reference, c))).unwrap()
}

pub fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

/// The graphs of the sweeps with their reference Euler systems.
pub fn sweep_systems() -> Vec<(&'static str, SignedEulerSystem)> {
    [
        ("doubled triangle", "doubled_triangle.dow"),
        ("K5", "k5.dow"),
        ("eight", "eight.dow"),
        ("loop", "loop.dow"),
        ("two triangles", "two_triangles.dow"),
    ]
    .into_iter()
    .map(|(label, file)| (label, system(file)))
    .collect()
}
