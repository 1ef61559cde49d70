//! Line-oriented text formats.
//!
//! Graph files hold either `dow <name>: tok tok ...` lines, where a token is
//! `<vertex>+`, `<vertex>-` or a bare `<vertex>`, or `edge <v> <w>` lines.
//! Transition files hold `v = phi|chi|psi @ <system>` or
//! `v : (h1 h2)(h3 h4)` lines. `#` starts a comment in both.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::euler::{euler_system, resolve_signs, IndexedWord, Passage, Sign, SignedEulerSystem};
use crate::graph::FourRegularGraph;
use crate::partition::{trace_circuits, transition_from_label, CircuitPartition, Transition};

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Arc<FourRegularGraph>,
    /// Present when the input was a double occurrence word.
    pub euler: Option<SignedEulerSystem>,
}

impl ParsedGraph {
    /// The parsed Euler system, or the deterministic one built from the graph.
    pub fn euler_system(&self) -> SignedEulerSystem {
        self.euler
            .clone()
            .unwrap_or_else(|| euler_system(self.graph.clone()))
    }
}

type Word = Vec<(String, Option<Sign>)>;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_error(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

fn parse_token(line: usize, tok: &str) -> Result<(String, Option<Sign>)> {
    let (name, sign) = if let Some(n) = tok.strip_suffix('+') {
        (n, Some(Sign::Plus))
    } else if let Some(n) = tok.strip_suffix('-') {
        (n, Some(Sign::Minus))
    } else {
        (tok, None)
    };
    if name.is_empty() || name.contains([':', '+', '-', '=', '@', '(', ')']) {
        return Err(parse_error(line, tok, "malformed vertex token"));
    }
    Ok((name.to_string(), sign))
}

/// Parses a graph file. DOW input also yields its signed Euler system.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut words: Vec<(String, Word, usize)> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut first_edge_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(2, char::is_whitespace);
        let keyword = parts.next().unwrap_or("");
        let rest = parts.next().unwrap_or("").trim();
        match keyword {
            "dow" => {
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_error(line_no, rest, "expected `dow <name>: ...`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(parse_error(line_no, name, "malformed component name"));
                }
                let word = body
                    .split_whitespace()
                    .map(|t| parse_token(line_no, t))
                    .collect::<Result<Word>>()?;
                if word.is_empty() {
                    return Err(parse_error(line_no, name, "empty word"));
                }
                words.push((name.to_string(), word, line_no));
            }
            "edge" => {
                let ends: Vec<&str> = rest.split_whitespace().collect();
                match ends.as_slice() {
                    [a, b] => {
                        parse_token(line_no, a)?;
                        parse_token(line_no, b)?;
                        if edges.is_empty() {
                            first_edge_line = line_no;
                        }
                        edges.push((a.to_string(), b.to_string()));
                    }
                    [] | [_] => return Err(Error::DanglingHalfEdge { line: line_no }),
                    _ => {
                        return Err(parse_error(
                            line_no,
                            ends[2],
                            "an edge has exactly two endpoints",
                        ))
                    }
                }
            }
            other => return Err(parse_error(line_no, other, "unknown keyword")),
        }
    }
    match (words.is_empty(), edges.is_empty()) {
        (true, true) => Err(parse_error(0, "", "empty graph")),
        (false, false) => Err(parse_error(
            first_edge_line,
            "edge",
            "a file holds either `dow` lines or `edge` lines, not both",
        )),
        (true, false) => Ok(ParsedGraph {
            graph: Arc::new(FourRegularGraph::from_edges(&edges)?),
            euler: None,
        }),
        (false, true) => parse_dow(words),
    }
}

fn parse_dow(words: Vec<(String, Word, usize)>) -> Result<ParsedGraph> {
    // Occurrence counts with the line of the last occurrence.
    let mut count: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for (_, w, line) in &words {
        for (v, _) in w {
            let e = count.entry(v.as_str()).or_default();
            *e = (e.0 + 1, *line);
        }
    }
    if let Some((v, &(c, line))) = count.iter().find(|(_, &(c, _))| c != 2) {
        return Err(parse_error(
            line,
            v,
            format!("vertex occurs {c} times, expected 2"),
        ));
    }
    let mut edges = Vec::new();
    for (_, w, _) in &words {
        for i in 0..w.len() {
            edges.push((w[i].0.clone(), w[(i + 1) % w.len()].0.clone()));
        }
    }
    let graph = Arc::new(FourRegularGraph::from_edges(&edges)?);
    let indexed: Vec<(String, IndexedWord)> = words
        .iter()
        .map(|(name, w, _)| {
            let w = w
                .iter()
                .map(|(v, s)| (graph.vertex_id(v).expect("vertex was registered"), *s))
                .collect();
            (name.clone(), w)
        })
        .collect();
    let signs = resolve_signs(&graph, &indexed).map_err(|e| match e {
        Error::Parse { token, message, .. } => {
            let line = words
                .iter()
                .find(|(_, w, _)| w.iter().any(|(v, _)| *v == token))
                .map_or(0, |x| x.2);
            Error::Parse {
                line,
                token,
                message,
            }
        }
        other => other,
    })?;
    let mut circuits = Vec::new();
    let mut edge = 0;
    for (ci, (name, w)) in indexed.iter().enumerate() {
        let len = w.len();
        let first = edge;
        let passages = (0..len)
            .map(|i| {
                let prev = if i == 0 {
                    first + len - 1
                } else {
                    first + i - 1
                };
                Passage {
                    vertex: w[i].0,
                    sign: signs[ci][i],
                    enter: 2 * prev + 1,
                    leave: 2 * (first + i),
                }
            })
            .collect();
        edge += len;
        circuits.push((name.clone(), passages));
    }
    let euler = SignedEulerSystem::from_passages(graph.clone(), circuits)?;
    Ok(ParsedGraph {
        graph,
        euler: Some(euler),
    })
}

/// Reads `dow` lines and realizes them as an Euler system of an existing
/// graph, for example a second Euler circuit of the same graph.
pub fn parse_euler_on(graph: &Arc<FourRegularGraph>, text: &str) -> Result<SignedEulerSystem> {
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("dow")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_error(line_no, line, "expected a `dow` line"))?;
        let (name, body) = rest
            .split_once(':')
            .ok_or_else(|| parse_error(line_no, rest, "expected `dow <name>: ...`"))?;
        let word = body
            .split_whitespace()
            .map(|t| {
                let (v, s) = parse_token(line_no, t)?;
                let id = graph
                    .vertex_id(&v)
                    .map_err(|_| parse_error(line_no, t, "vertex not in graph"))?;
                Ok((id, s))
            })
            .collect::<Result<Vec<_>>>()?;
        words.push((name.trim().to_string(), word));
    }
    SignedEulerSystem::from_words(graph.clone(), &words)
}

/// Parses a transition file against `graph`. Labelled lines need a
/// reference system; when the line names one it must match `reference`'s
/// name. Every vertex must be assigned exactly once.
pub fn parse_transitions(
    text: &str,
    graph: &Arc<FourRegularGraph>,
    reference: Option<(&str, &SignedEulerSystem)>,
) -> Result<CircuitPartition> {
    let mut slots: Vec<Option<Transition>> = vec![None; graph.vertex_count()];
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (vertex, transition) = if let Some((v, rhs)) = line.split_once('=') {
            let v = v.trim();
            let id = graph
                .vertex_id(v)
                .map_err(|_| parse_error(line_no, v, "unknown vertex"))?;
            let (label, system) = match rhs.split_once('@') {
                Some((l, s)) => (l.trim(), Some(s.trim())),
                None => (rhs.trim(), None),
            };
            let label = label
                .parse()
                .map_err(|m: String| parse_error(line_no, label, m))?;
            let (ref_name, c) = reference.ok_or_else(|| {
                parse_error(
                    line_no,
                    line,
                    "labelled transition without a reference system",
                )
            })?;
            if let Some(s) = system {
                if s != ref_name {
                    return Err(parse_error(
                        line_no,
                        s,
                        format!("labels refer to `{s}` but the reference system is `{ref_name}`"),
                    ));
                }
            }
            (id, transition_from_label(c, id, label)?)
        } else if let Some((v, rhs)) = line.split_once(':') {
            let v = v.trim();
            let id = graph
                .vertex_id(v)
                .map_err(|_| parse_error(line_no, v, "unknown vertex"))?;
            (id, parse_pairs(line_no, rhs.trim())?)
        } else {
            return Err(parse_error(
                line_no,
                line,
                "expected `v = label` or `v : (h h)(h h)`",
            ));
        };
        if slots[vertex].replace(transition).is_some() {
            return Err(parse_error(
                line_no,
                graph.name(vertex),
                "vertex assigned twice",
            ));
        }
    }
    let transitions = slots
        .into_iter()
        .enumerate()
        .map(|(v, t)| {
            t.ok_or_else(|| Error::Transition {
                vertex: graph.name(v).to_string(),
                message: "no transition given".into(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    trace_circuits(graph.clone(), transitions)
}

fn parse_pairs(line: usize, s: &str) -> Result<Transition> {
    let cleaned: String = s
        .chars()
        .map(|ch| if ch == '(' || ch == ')' { ' ' } else { ch })
        .collect();
    let ids = cleaned
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_error(line, t, "expected a half-edge id"))
        })
        .collect::<Result<Vec<_>>>()?;
    if ids.len() != 4 || s.matches('(').count() != 2 {
        return Err(parse_error(line, s, "expected `(h1 h2)(h3 h4)`"));
    }
    Ok(Transition::new([ids[0], ids[1]], [ids[2], ids[3]]))
}
