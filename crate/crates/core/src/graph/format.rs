//! Graph input files.
//!
//! Two forms are accepted:
//!
//! - a JSON object `{"n": 4, "edges": [[1,2],[1,3]], "labels": [2,1,3,4]}`
//!   where `labels` is optional and gives the label of each vertex in order;
//! - a plain edge list, one `u v` pair per line. A line holding a single name
//!   declares an isolated vertex; `#` starts a comment.
//!
//! Edge-list vertex names are normalized to `1..=n`: numerically when every
//! name is a positive integer, otherwise in order of first appearance.

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;

use super::{Graph, Labeling};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, when the problem can be pinned to one line.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    pub(crate) fn general(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: Graph,
    /// Present only when the input specified one.
    pub labeling: Option<Labeling>,
    /// `names[v-1]` is the name vertex `v` had in the input.
    pub names: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    labels: Option<Vec<usize>>,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

fn describe(err: &Error) -> String {
    match err {
        Error::Loop(v) => format!("loop at vertex {v}"),
        Error::DuplicateEdge(u, v) => format!("duplicate edge {u} {v}"),
        other => other.to_string(),
    }
}

fn parse_json(text: &str) -> Result<GraphFile, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), format!("invalid graph JSON: {e}")))?;
    // Locate each edge in the source so diagnostics can name a line.
    let edge_lines = json_pair_lines(text, "edges");
    let mut prefix = Vec::with_capacity(raw.edges.len());
    for (i, &[u, v]) in raw.edges.iter().enumerate() {
        prefix.push((u, v));
        if let Err(e) = Graph::new(raw.n, prefix.iter().copied()) {
            let message = format!("edges[{i}] = [{u},{v}]: {}", describe(&e));
            return Err(match edge_lines.get(i) {
                Some(&line) => ParseError::at(line, message),
                None => ParseError::general(message),
            });
        }
    }
    let graph = Graph::new(raw.n, prefix).map_err(|e| ParseError::general(describe(&e)))?;
    let labeling = raw
        .labels
        .map(|labels| {
            if labels.len() != raw.n {
                return Err(ParseError::general(format!(
                    "labels has {} entries, expected {}",
                    labels.len(),
                    raw.n
                )));
            }
            Labeling::new(labels).map_err(|e| ParseError::general(e.to_string()))
        })
        .transpose()?;
    Ok(GraphFile {
        names: (1..=raw.n).map(|v| v.to_string()).collect(),
        graph,
        labeling,
    })
}

/// Line of each `[u, v]` pair inside the array under `key`, in order.
pub(crate) fn json_pair_lines(text: &str, key: &str) -> Vec<usize> {
    let Some(start) = text.find(&format!("\"{key}\"")) else {
        return Vec::new();
    };
    let mut line = text[..start].matches('\n').count() + 1;
    let mut depth = 0usize;
    let mut out = Vec::new();
    for ch in text[start..].chars() {
        match ch {
            '\n' => line += 1,
            '[' => {
                depth += 1;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                if depth <= 1 {
                    break;
                }
                depth -= 1;
            }
            _ => {}
        }
    }
    out
}

fn parse_edge_list(text: &str) -> Result<GraphFile, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut intern = |name: &str| -> usize {
        if let Some(&i) = index.get(name) {
            return i;
        }
        names.push(name.to_owned());
        index.insert(name.to_owned(), names.len() - 1);
        names.len() - 1
    };
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [single] => {
                intern(single);
            }
            [a, b] => {
                if a == b {
                    return Err(ParseError::at(line_no, format!("loop at vertex {a}")));
                }
                let (x, y) = (intern(a), intern(b));
                raw_edges.push((x, y, line_no));
            }
            _ => {
                return Err(ParseError::at(
                    line_no,
                    format!("expected \"u v\" or a single vertex name, got {content:?}"),
                ))
            }
        }
    }

    // first-appearance order, unless every name is a positive integer
    let numeric: Option<Vec<u64>> = names.iter().map(|s| s.parse::<u64>().ok().filter(|&x| x > 0)).collect();
    let mut order: Vec<usize> = (0..names.len()).collect();
    if let Some(values) = &numeric {
        order.sort_by_key(|&i| values[i]);
    }
    let mut vertex_of = vec![0; names.len()];
    for (v, &i) in order.iter().enumerate() {
        vertex_of[i] = v + 1;
    }

    let n = names.len();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::with_capacity(raw_edges.len());
    for &(x, y, line_no) in &raw_edges {
        let (u, v) = (vertex_of[x], vertex_of[y]);
        let key = (u.min(v), u.max(v));
        if let Some(first) = seen.insert(key, line_no) {
            return Err(ParseError::at(
                line_no,
                format!(
                    "duplicate edge {} {} (first given on line {first})",
                    names[x], names[y]
                ),
            ));
        }
        edges.push((u, v));
    }
    let graph = Graph::new(n, edges).map_err(|e| ParseError::general(describe(&e)))?;
    Ok(GraphFile {
        graph,
        labeling: None,
        names: order.into_iter().map(|i| names[i].clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_graph_with_labels() {
        let file = parse_graph(r#"{"n": 3, "edges": [[1, 2], [3, 2]], "labels": [2, 3, 1]}"#).unwrap();
        assert_eq!(file.graph, Graph::path(3));
        assert_eq!(file.labeling.unwrap().labels(), &[2, 3, 1]);
        let bare = parse_graph(r#"{"n": 1, "edges": []}"#).unwrap();
        assert_eq!(bare.graph.n(), 1);
        assert!(bare.labeling.is_none());
    }

    #[test]
    fn json_diagnostics_name_the_line() {
        let text = "{\n  \"n\": 3,\n  \"edges\": [\n    [1, 2],\n    [2, 2]\n  ]\n}";
        let err = parse_graph(text).unwrap_err();
        assert_eq!(err.line, Some(5));
        assert!(err.message.contains("loop"), "{err}");
        let text = "{\"n\": 3, \"edges\": [[1, 2],\n [2, 1]]}";
        let err = parse_graph(text).unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(err.message.contains("duplicate"), "{err}");
        assert!(parse_graph(r#"{"n": 2, "edges": [], "labels": [1, 1]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[1, 5]]}"#).is_err());
        let err = parse_graph("{\"n\": 2,\n \"edges\": [[1 2]]}").unwrap_err();
        assert_eq!(err.line, Some(2));
    }

    #[test]
    fn edge_list_normalization() {
        let file = parse_graph("# claw\n4 1\n4 2\n4 3\n").unwrap();
        assert_eq!(file.names, ["1", "2", "3", "4"]);
        assert_eq!(file.graph.edges(), &[(1, 4), (2, 4), (3, 4)]);

        let named = parse_graph("b a\nc b\nd\n").unwrap();
        assert_eq!(named.names, ["b", "a", "c", "d"]);
        assert_eq!(named.graph, Graph::new(4, [(1, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn edge_list_diagnostics() {
        let err = parse_graph("1 2\n2 3\n3 3\n").unwrap_err();
        assert_eq!(err.line, Some(3));
        let err = parse_graph("1 2\n\n2 1\n").unwrap_err();
        assert_eq!(err.line, Some(3));
        assert!(err.message.contains("line 1"), "{err}");
        let err = parse_graph("1 2 3\n").unwrap_err();
        assert_eq!(err.line, Some(1));
    }
}
