//! Loading graphs, Euler systems and partitions from files.

use std::fmt;
use std::path::Path;

use fourreg::{
    parse_euler_on, parse_graph, parse_transitions, CircuitPartition, SignedEulerSystem, VertexId,
};

/// Why a command stopped: bad input (exit 2) or a failed check (exit 1).
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Check(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Check(m) => f.write_str(m),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

/// Prefixes library errors with the file they came from.
pub fn in_file<T>(path: &Path, r: fourreg::Result<T>) -> CliResult<T> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn input(e: fourreg::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The reference system: a DOW file as written, or for an edge list the
/// deterministic Euler system of the graph.
pub struct Reference {
    pub name: String,
    pub system: SignedEulerSystem,
}

pub fn load_system(path: &Path) -> CliResult<Reference> {
    let parsed = in_file(path, parse_graph(&read(path)?))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(Reference {
        name,
        system: parsed.euler_system(),
    })
}

/// A second Euler system on the reference graph.
pub fn load_system_on(reference: &Reference, path: &Path) -> CliResult<SignedEulerSystem> {
    in_file(path, parse_euler_on(reference.system.graph(), &read(path)?))
}

/// A partition from a transition file, or from a DOW file read as the
/// partition into its circuits.
pub fn load_partition(reference: &Reference, path: &Path) -> CliResult<CircuitPartition> {
    if path.extension().is_some_and(|e| e == "dow") {
        let c = load_system_on(reference, path)?;
        return Ok(CircuitPartition::from_euler_system(&c));
    }
    let text = read(path)?;
    in_file(
        path,
        parse_transitions(
            &text,
            reference.system.graph(),
            Some((&reference.name, &reference.system)),
        ),
    )
}

pub fn vertex(reference: &Reference, name: &str) -> CliResult<VertexId> {
    reference.system.graph().vertex_id(name).map_err(input)
}
