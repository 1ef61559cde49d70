mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fourreg::counting::{
    count_euler_brute, count_euler_det, partition_census, verify_detzero, DEFAULT_VERTEX_CAP,
};
use fourreg::cycles::{verify_duality, verify_main_theorem};
use fourreg::interlace::{
    modified_interlacement, reduced_interlacement, signed_interlacement, standard_form,
};
use fourreg::linalg::{gf2_nullity, rat_nullity};
use fourreg::report::Report;
use fourreg::sweep::{describe, labelings, Scope};
use fourreg::touch::touch_graph;
use fourreg::transforms::{
    kappa, kappa_reachability, transposition, verify_gf2_naturality, verify_kappa_naturality,
    verify_real_naturality, verify_transposition_rows, KappaMove, Path, Side,
};
use fourreg::{label_transitions, CircuitPartition, SignedEulerSystem, TransitionLabel, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use input::{
    in_file, input, load_partition, load_system, load_system_on, vertex, CliResult, Failure,
    Reference,
};

const WORKERS_VAR: &str = "FOURREG_WORKERS";

/// Circuit partitions, touch-graphs and interlacement matrices of 4-regular
/// multigraphs.
#[derive(Parser)]
#[command(name = "fourreg", version)]
struct Cli {
    /// Emit JSON records instead of TSV.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Graph file: `dow` lines (a signed Euler system) or `edge` lines.
    #[arg(long)]
    euler: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph file and print it back in canonical form.
    Parse(Source),
    /// Print the Euler system: the file's own, or one built for an edge list.
    Euler(Source),
    /// Trace the circuits of a partition.
    Trace {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Print the touch-graph of a partition as a labelled edge list.
    Touch {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Print an interlacement matrix.
    #[command(group(ArgGroup::new("kind").required(true).args(["gf2", "standard", "signed_interlacement"])))]
    Matrix {
        #[command(flatten)]
        source: Source,
        /// The modified interlacement matrix M(C,P) over GF(2).
        #[arg(long)]
        gf2: bool,
        /// The standard form M0(C,P) over the integers.
        #[arg(long)]
        standard: bool,
        /// The signed interlacement matrix of C.
        #[arg(long)]
        signed_interlacement: bool,
        #[arg(long, required_unless_present = "signed_interlacement")]
        partition: Option<PathBuf>,
        /// GF(2) rows as hexadecimal strings.
        #[arg(long, requires = "gf2")]
        hex: bool,
    },
    /// Check identities for one partition or a sweep of partitions.
    Verify(Verify),
    /// Count Euler systems with the same edge directions as C.
    Count {
        #[command(flatten)]
        source: Source,
        /// Also count by enumeration when there are at most this many vertices.
        #[arg(long, default_value_t = 0)]
        brute_max: usize,
    },
    /// Tabulate all partitions by number of circuits.
    Census {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Apply a kappa-transform or transposition, or find a route to another system.
    #[command(group(ArgGroup::new("move").required(true).args(["kappa", "transpose", "path"])))]
    Transform {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "V")]
        kappa: Option<String>,
        /// Fundamental circuit reversed by --kappa.
        #[arg(long, value_enum, default_value_t = SideArg::First, requires = "kappa")]
        side: SideArg,
        #[arg(long, num_args = 2, value_names = ["V", "W"])]
        transpose: Option<Vec<String>>,
        /// Target Euler system on the same graph.
        #[arg(long, value_name = "TARGET")]
        path: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    First,
    Second,
}

#[derive(Args)]
#[command(group(ArgGroup::new("check").required(true).args(["main", "duality", "nullity", "naturality", "transposition", "detzero"])))]
#[command(group(ArgGroup::new("scope").required(true).args(["partition", "all_partitions", "random"])))]
struct Verify {
    #[command(flatten)]
    source: Source,
    /// Row space, reduction mod 2, nullity, M0 U = 0 and the two constructions of M0.
    #[arg(long)]
    main: bool,
    /// Cycle and cocycle spaces of the touch-graph are orthogonal complements.
    #[arg(long)]
    duality: bool,
    /// nullity I(C,P) and nullity M0(C,P) equal |P| - c(F).
    #[arg(long)]
    nullity: bool,
    /// Kappa identities at every vertex, or with --other the identities for a second system.
    #[arg(long)]
    naturality: bool,
    /// Row identities under transpositions of interlaced pairs.
    #[arg(long)]
    transposition: bool,
    /// Determinant characterization of Euler systems.
    #[arg(long)]
    detzero: bool,
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Every partition (every psi-free one for --transposition and --detzero).
    #[arg(long)]
    all_partitions: bool,
    /// This many random partitions drawn with --seed.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    /// Second Euler system for --naturality.
    #[arg(long, requires = "naturality")]
    other: Option<PathBuf>,
    /// Restrict --transposition to one pair.
    #[arg(long, num_args = 2, value_names = ["V", "W"], requires = "transposition")]
    pair: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    max_vertices: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var(WORKERS_VAR).ok().and_then(|s| s.parse().ok()) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn json_text(v: serde_json::Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("json serializes")
    )
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Parse(s) => parse(cli, s),
        Command::Euler(s) => {
            let r = load_system(&s.euler)?;
            Ok(if cli.json {
                json_text(system_json(&r.system))
            } else {
                r.system.to_dow_text()
            })
        }
        Command::Trace { source, partition } => {
            let r = load_system(&source.euler)?;
            let p = load_partition(&r, partition)?;
            trace(cli, &r, &p)
        }
        Command::Touch { source, partition } => {
            let r = load_system(&source.euler)?;
            let p = load_partition(&r, partition)?;
            let tg = touch_graph(&p, &r.system).map_err(input)?;
            Ok(if cli.json {
                json_text(tg.to_json())
            } else {
                tg.to_edge_list()
            })
        }
        Command::Matrix {
            source,
            gf2,
            standard,
            partition,
            hex,
            ..
        } => {
            let r = load_system(&source.euler)?;
            let c = &r.system;
            if !gf2 && !standard {
                let m = signed_interlacement(c);
                return Ok(if cli.json {
                    json_text(m.to_json())
                } else {
                    m.to_tsv()
                });
            }
            let path = partition.as_ref().expect("clap requires a partition");
            let p = load_partition(&r, path)?;
            if *standard {
                let m = standard_form(c, &p).map_err(input)?;
                return Ok(if cli.json {
                    json_text(m.to_json())
                } else {
                    m.to_tsv()
                });
            }
            let m = modified_interlacement(c, &p).map_err(input)?;
            Ok(match (cli.json, hex) {
                (true, _) => json_text(m.to_json()),
                (false, true) => m.to_hex_rows().join("\n") + "\n",
                (false, false) => m.to_tsv(),
            })
        }
        Command::Verify(v) => verify(cli, v),
        Command::Count { source, brute_max } => count(cli, &source.euler, *brute_max),
        Command::Census {
            source,
            max_vertices,
        } => {
            let r = load_system(&source.euler)?;
            let census = partition_census(&r.system, *max_vertices).map_err(input)?;
            let out = if cli.json {
                json_text(json!({
                    "by_size": census.by_size.iter().map(|(k, n)| json!({"circuits": k, "partitions": n})).collect::<Vec<_>>(),
                    "total": census.total,
                    "nullity_failures": census.nullity_failures,
                }))
            } else {
                census.to_tsv()
            };
            if census.nullity_failures > 0 {
                eprintln!(
                    "{} partitions fail the nullity formula",
                    census.nullity_failures
                );
                return Err(Failure::Check(out));
            }
            Ok(out)
        }
        Command::Transform {
            source,
            kappa: at,
            side,
            transpose,
            path,
        } => {
            let r = load_system(&source.euler)?;
            let c = &r.system;
            if let Some(target) = path {
                let t = load_system_on(&r, target)?;
                return route(cli, c, &kappa_reachability(c, &t).map_err(input)?);
            }
            let result = if let Some(name) = at {
                let side = match side {
                    SideArg::First => Side::First,
                    SideArg::Second => Side::Second,
                };
                kappa(
                    c,
                    KappaMove {
                        vertex: vertex(&r, name)?,
                        side,
                    },
                )
            } else {
                let pair = transpose.as_ref().expect("clap requires a move");
                transposition(c, vertex(&r, &pair[0])?, vertex(&r, &pair[1])?).map_err(input)?
            };
            Ok(if cli.json {
                json_text(system_json(&result))
            } else {
                result.to_dow_text()
            })
        }
    }
}

fn system_json(c: &SignedEulerSystem) -> serde_json::Value {
    let g = c.graph();
    json!({
        "components": c.components().iter().map(|circ| json!({
            "name": circ.name,
            "word": circ.passages.iter()
                .map(|p| format!("{}{}", g.name(p.vertex), p.sign.symbol()))
                .collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn parse(cli: &Cli, s: &Source) -> CliResult<String> {
    let text = std::fs::read_to_string(&s.euler)
        .map_err(|e| Failure::Input(format!("{}: {e}", s.euler.display())))?;
    let parsed = in_file(&s.euler, fourreg::parse_graph(&text))?;
    let g = &parsed.graph;
    if cli.json {
        let mut v = json!({
            "vertices": g.names(),
            "edges": g.edge_list(),
        });
        if let Some(c) = &parsed.euler {
            v["components"] = system_json(c)["components"].clone();
        }
        return Ok(json_text(v));
    }
    Ok(match &parsed.euler {
        Some(c) => c.to_dow_text(),
        None => g
            .edge_list()
            .iter()
            .map(|(a, b)| format!("edge {a} {b}\n"))
            .collect(),
    })
}

fn trace(cli: &Cli, r: &Reference, p: &CircuitPartition) -> CliResult<String> {
    let c = &r.system;
    let g = c.graph();
    let labels = label_transitions(c, p).map_err(input)?;
    let circuits: Vec<Vec<&str>> = (0..p.len())
        .map(|i| p.circuit_vertices(i).iter().map(|&v| g.name(v)).collect())
        .collect();
    if cli.json {
        return Ok(json_text(json!({
            "circuits": circuits,
            "labels": g.vertices().map(|v| json!({
                "vertex": g.name(v),
                "label": labels[v].as_str(),
                "transition": p.transition(v).to_string(),
            })).collect::<Vec<_>>(),
            "euler_system": p.is_euler_system(),
        })));
    }
    let mut out = String::from("circuit\tedges\tvertices\n");
    for (i, vs) in circuits.iter().enumerate() {
        out.push_str(&format!("g{}\t{}\t{}\n", i + 1, vs.len(), vs.join(" ")));
    }
    out.push_str("vertex\tlabel\ttransition\n");
    for v in g.vertices() {
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            g.name(v),
            labels[v],
            p.transition(v)
        ));
    }
    Ok(out)
}

fn count(cli: &Cli, path: &std::path::Path, brute_max: usize) -> CliResult<String> {
    let r = load_system(path)?;
    let c = &r.system;
    let det = count_euler_det(c);
    let brute = if c.graph().vertex_count() <= brute_max {
        Some(count_euler_brute(c, brute_max).map_err(input)?)
    } else {
        None
    };
    let out = if cli.json {
        json_text(json!({
            "determinant": det.to_string(),
            "enumeration": brute,
        }))
    } else {
        match brute {
            Some(b) => format!("{det}\nenumeration\t{b}\n"),
            None => format!("{det}\n"),
        }
    };
    match brute {
        Some(b) if det != b.into() => {
            eprintln!("determinant {det} disagrees with enumeration {b}");
            Err(Failure::Check(out))
        }
        _ => Ok(out),
    }
}

fn route(cli: &Cli, c: &SignedEulerSystem, path: &Path) -> CliResult<String> {
    let g = c.graph();
    let moves: Vec<Vec<String>> = match path {
        Path::Kappa(ms) => ms
            .iter()
            .map(|m| {
                let side = match m.side {
                    Side::First => "first",
                    Side::Second => "second",
                };
                vec!["kappa".into(), g.name(m.vertex).into(), side.into()]
            })
            .collect(),
        Path::Transpositions(ps) => ps
            .iter()
            .map(|&(v, w)| vec!["transpose".into(), g.name(v).into(), g.name(w).into()])
            .collect(),
    };
    Ok(if cli.json {
        json_text(json!({ "moves": moves }))
    } else {
        moves.iter().map(|m| m.join("\t") + "\n").collect()
    })
}

type Check<'a> = dyn Fn(&CircuitPartition) -> fourreg::Result<Report> + Sync + 'a;

/// The check selected by the flags of `verify`.
fn verify_check<'a>(v: &Verify, r: &'a Reference) -> CliResult<Box<Check<'a>>> {
    let c = &r.system;
    if v.main {
        return Ok(Box::new(move |p| verify_main_theorem(c, p)));
    }
    if v.duality {
        return Ok(Box::new(move |p| {
            Ok(verify_duality(&touch_graph(p, c)?.digraph()))
        }));
    }
    if v.nullity {
        return Ok(Box::new(move |p| {
            let expected = p.len() - c.graph().component_count();
            let n2 = gf2_nullity(&reduced_interlacement(c, p)?);
            let nq = rat_nullity(&standard_form(c, p)?);
            let mut rep = Report::new("nullity");
            rep.check(
                "I(C,P) over GF(2)",
                n2 == expected,
                format!("{n2}, expected {expected}"),
            );
            rep.check(
                "M0(C,P) over Q",
                nq == expected,
                format!("{nq}, expected {expected}"),
            );
            Ok(rep)
        }));
    }
    if v.naturality {
        if let Some(path) = &v.other {
            let other = load_system_on(r, path)?;
            return Ok(Box::new(move |p| {
                let mut rep = verify_gf2_naturality(c, &other, p)?;
                rep.absorb(verify_real_naturality(c, &other, p)?);
                Ok(rep)
            }));
        }
        return Ok(Box::new(move |p| {
            let mut rep = Report::new("kappa");
            for x in c.graph().vertices() {
                rep.absorb(verify_kappa_naturality(c, x, p)?);
            }
            Ok(rep)
        }));
    }
    if v.transposition {
        let pairs: Vec<(VertexId, VertexId)> = match &v.pair {
            Some(names) => vec![(vertex(r, &names[0])?, vertex(r, &names[1])?)],
            None => {
                let n = c.graph().vertex_count();
                (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| c.interlaced(a, b))
                    .collect()
            }
        };
        return Ok(Box::new(move |p| {
            let mut rep = Report::new("transposition");
            for &(a, b) in &pairs {
                rep.absorb(verify_transposition_rows(c, a, b, p)?);
            }
            Ok(rep)
        }));
    }
    Ok(Box::new(move |p| verify_detzero(c, p)))
}

fn verify(cli: &Cli, v: &Verify) -> CliResult<String> {
    let r = load_system(&v.source.euler)?;
    let c = &r.system;
    let scope = if v.transposition || v.detzero {
        Scope::Oriented
    } else {
        Scope::All
    };
    let check = verify_check(v, &r)?;
    let partitions: Vec<(Vec<TransitionLabel>, CircuitPartition)> = if let Some(path) = &v.partition
    {
        let p = load_partition(&r, path)?;
        vec![(label_transitions(c, &p).map_err(input)?, p)]
    } else {
        let n = c.graph().vertex_count();
        let all = match v.random {
            Some(k) => random_labelings(n, scope, k, cli.seed),
            None => labelings(n, scope, v.max_vertices).map_err(input)?,
        };
        all.into_iter()
            .map(|labels| {
                let p = CircuitPartition::from_labels(c, &labels).map_err(input)?;
                Ok((labels, p))
            })
            .collect::<CliResult<_>>()?
    };
    let reports = partitions
        .par_iter()
        .map(|(labels, p)| {
            let mut rep = check(p)?;
            rep.subject = describe(labels);
            Ok(rep)
        })
        .collect::<fourreg::Result<Vec<Report>>>()
        .map_err(input)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let out = if cli.json {
        json_text(json!({
            "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            "passed": passed,
            "total": reports.len(),
        }))
    } else {
        let mut out = String::new();
        for rep in &reports {
            let status = if rep.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}\t{}\n", rep.subject));
            for f in rep.failures() {
                out.push_str(&format!("\tFAIL\t{}\t{}\n", f.name, f.detail));
            }
        }
        out.push_str(&format!("{passed}/{} pass\n", reports.len()));
        out
    };
    if passed == reports.len() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn random_labelings(n: usize, scope: Scope, k: usize, seed: u64) -> Vec<Vec<TransitionLabel>> {
    let choices: &[TransitionLabel] = match scope {
        Scope::All => &TransitionLabel::ALL,
        Scope::Oriented => &[TransitionLabel::Phi, TransitionLabel::Chi],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k)
        .map(|_| {
            (0..n)
                .map(|_| choices[rng.random_range(0..choices.len())])
                .collect()
        })
        .collect()
}
