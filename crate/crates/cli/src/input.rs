use std::io::Read;
use std::path::Path;

use chromatic_core::graph::{parse_graph, Graph, Labeling};
use chromatic_core::poset::{parse_poset, Poset};
use serde::Serialize;

use crate::InputError;

fn read_source(path: &Path) -> Result<String, InputError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| InputError(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn check_size(path: &Path, n: usize, max_n: usize, what: &str) -> Result<(), InputError> {
    if n > max_n {
        return Err(InputError(format!(
            "{}: {what} has {n} vertices, above the limit of {max_n}; rerun with --max-n {n} to allow it",
            path.display()
        )));
    }
    Ok(())
}

pub struct LoadedGraph {
    pub graph: Graph,
    pub labeling: Labeling,
}

/// Reads a graph and settles its labeling: `--labeling` wins over labels in
/// the file, which win over the identity.
pub fn load_graph(path: &Path, labeling: Option<&str>, max_n: usize) -> Result<LoadedGraph, InputError> {
    let text = read_source(path)?;
    let file = parse_graph(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    check_size(path, file.graph.n(), max_n, "graph")?;
    let n = file.graph.n();
    let labeling = match labeling {
        Some(given) => parse_labeling(given, n)?,
        None => file.labeling.unwrap_or_else(|| Labeling::identity(n)),
    };
    Ok(LoadedGraph {
        graph: file.graph,
        labeling,
    })
}

pub fn load_poset(path: &Path, max_n: usize) -> Result<Poset, InputError> {
    let text = read_source(path)?;
    let poset = parse_poset(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    check_size(path, poset.n(), max_n, "poset")?;
    Ok(poset)
}

pub fn parse_labeling(text: &str, n: usize) -> Result<Labeling, InputError> {
    if text.trim() == "identity" {
        return Ok(Labeling::identity(n));
    }
    let labels = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| InputError(format!("--labeling: {:?} is not a positive integer", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if labels.len() != n {
        return Err(InputError(format!(
            "--labeling gives {} labels but the graph has {n} vertices",
            labels.len()
        )));
    }
    Labeling::new(labels).map_err(|e| InputError(format!("--labeling: {e}")))
}

#[derive(Serialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PosetRecord {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl From<&Poset> for PosetRecord {
    fn from(p: &Poset) -> Self {
        PosetRecord {
            n: p.n(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

pub fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        format!("n={} edges=none", g.n())
    } else {
        format!("n={} edges={}", g.n(), edges.join(" "))
    }
}

pub fn describe_poset(p: &Poset) -> String {
    let covers: Vec<String> = p.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
    if covers.is_empty() {
        format!("n={} covers=none", p.n())
    } else {
        format!("n={} covers={}", p.n(), covers.join(" "))
    }
}

pub fn describe_labeling(l: &Labeling) -> String {
    l.labels().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
