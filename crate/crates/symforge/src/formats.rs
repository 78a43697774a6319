//! Graph file formats: JSON, plain edge lists and a small DOT subset.
//!
//! All writers emit vertices and edges in canonical order (edges as `u < v`, sorted), so
//! identical graphs serialize to identical bytes.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use symforge_core::fixing::FixingGraph;
use symforge_core::{AutGroup, Graph, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Json,
    Edgelist,
    Dot,
}

impl GraphFormat {
    /// Picks a format from the file extension: `.json`, `.dot`/`.gv`, anything else is an
    /// edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("json") => GraphFormat::Json,
            Some("dot") | Some("gv") => GraphFormat::Dot,
            _ => GraphFormat::Edgelist,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error("invalid graph: {0}")]
    Graph(#[from] symforge_core::Error),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

/// The JSON graph document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Field order the labels are written over; required when `labels` is present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> GraphDoc {
        let labels = g.labels().map(|ls| ls.iter().map(|v| v.coeff_string()).collect::<Vec<_>>());
        GraphDoc {
            order: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            q: labels.as_ref().map(|_| label_field(g)),
            labels,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let mut g = Graph::from_edges(self.order, self.edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(labels) = &self.labels {
            let q = self.q.ok_or_else(|| FormatError::Json("labels need a field order q".into()))?;
            if labels.len() != self.order {
                return Err(FormatError::Json(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.order
                )));
            }
            let n = labels.first().map_or(0, |l| l.len());
            let space = Space::new(n, q)?;
            let parsed = labels
                .iter()
                .map(|l| space.parse_coeffs(l))
                .collect::<Result<Vec<_>, _>>()?;
            g.set_labels(parsed)?;
        }
        Ok(g)
    }
}

// Labelled graphs come from a whole space, so q is recovered from q^n = order + 1.
fn label_field(g: &Graph) -> u32 {
    let n = g.labels().and_then(|l| l.first()).map_or(1, |v| v.dim()) as u32;
    let total = g.order() as u64 + 1;
    (2..=36u32).find(|&q| (q as u64).checked_pow(n) == Some(total)).unwrap_or(0)
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => {
            let mut s = serde_json::to_string(&GraphDoc::from_graph(g)).expect("serializable");
            s.push('\n');
            s
        }
        GraphFormat::Edgelist => {
            let mut s = format!("# order {}\n", g.order());
            for (u, v) in g.edges() {
                let _ = writeln!(s, "{u} {v}");
            }
            s
        }
        GraphFormat::Dot => {
            let mut s = String::from("graph G {\n");
            if g.labels().is_some() {
                let _ = writeln!(s, "  q={};", label_field(g));
            }
            for v in 0..g.order() {
                match g.label(v) {
                    Some(l) => {
                        let _ = writeln!(s, "  {v} [label=\"{l}\", coeffs=\"{}\"];", l.coeff_string());
                    }
                    None => {
                        let _ = writeln!(s, "  {v};");
                    }
                }
            }
            for (u, v) in g.edges() {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            s
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::Json => {
            let doc: GraphDoc = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
            doc.to_graph()
        }
        GraphFormat::Edgelist => parse_edge_list(text),
        GraphFormat::Dot => parse_dot(text),
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize, FormatError> {
    token
        .parse::<usize>()
        .map_err(|_| at(line, format!("`{token}` is not a vertex id")))
}

/// One `u v` pair per line; `#` starts a comment. A `# order N` comment fixes the order,
/// which allows isolated vertices. Without it the ids used must be exactly `0..=max`.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut words = c.split_whitespace();
            if words.next() == Some("order") {
                let n = words.next().ok_or_else(|| at(line, "`# order` needs a number"))?;
                if declared.is_some() {
                    return Err(at(line, "order declared twice"));
                }
                declared = Some((parse_id(n, line)?, line));
            }
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u, v] => edges.push((parse_id(u, line)?, parse_id(v, line)?, line)),
            _ => return Err(at(line, format!("expected `u v`, found `{}`", body.trim()))),
        }
    }
    let order = match declared {
        Some((n, _)) => n,
        None => {
            let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
            used.sort_unstable();
            used.dedup();
            if let Some((pos, &id)) = used.iter().enumerate().find(|&(p, &id)| p != id) {
                let line = edges.iter().find(|e| e.0 == id || e.1 == id).map_or(0, |e| e.2);
                return Err(at(line, format!("vertex ids are not contiguous: {pos} is missing")));
            }
            used.len()
        }
    };
    let mut g = Graph::new(order);
    for (u, v, line) in edges {
        g.add_edge(u, v).map_err(|e| at(line, e.to_string()))?;
    }
    Ok(g)
}

fn parse_attrs(list: &str, line: usize) -> Result<Vec<(&str, &str)>, FormatError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| at(line, format!("attribute `{item}` needs a value")))?;
        out.push((k.trim(), v.trim().trim_matches('"')));
    }
    Ok(out)
}

/// The subset of DOT written by [`write_graph`]: one undirected `graph` block, vertex
/// statements `v;` or `v [attrs];`, edge statements `u -- v;` and an optional `q=<prime>;`.
/// Vertex labels are restored from `coeffs` attributes when every vertex has one; other
/// attributes are ignored.
pub fn parse_dot(text: &str) -> Result<Graph, FormatError> {
    let mut q: Option<(u32, usize)> = None;
    let mut coeffs: Vec<Option<String>> = Vec::new();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut opened = false;
    let mut closed = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let stmt = raw.split("//").next().unwrap_or("").trim();
        if stmt.is_empty() {
            continue;
        }
        if closed {
            return Err(at(line, "content after the closing brace"));
        }
        if !opened {
            let head = stmt.strip_suffix('{').map(str::trim);
            match head.map(|h| h.split_whitespace().collect::<Vec<_>>()) {
                Some(words) if words.first() == Some(&"graph") && words.len() <= 2 => opened = true,
                _ => return Err(at(line, "expected `graph <name> {`")),
            }
            continue;
        }
        if stmt == "}" {
            closed = true;
            continue;
        }
        let stmt = stmt
            .strip_suffix(';')
            .ok_or_else(|| at(line, "statement must end with `;`"))?;
        let (stmt, attrs) = match stmt.find('[') {
            Some(p) if stmt.ends_with(']') => (&stmt[..p], parse_attrs(&stmt[p + 1..stmt.len() - 1], line)?),
            Some(_) => return Err(at(line, "unterminated attribute list")),
            None => (stmt, Vec::new()),
        };
        let stmt = stmt.trim();
        if let Some((u, v)) = stmt.split_once("--") {
            edges.push((parse_id(u.trim(), line)?, parse_id(v.trim(), line)?, line));
        } else if let Some(value) = stmt.strip_prefix("q=") {
            let value = value.trim().parse().map_err(|_| at(line, format!("bad field order `{value}`")))?;
            q = Some((value, line));
        } else {
            vertices.push((parse_id(stmt, line)?, line));
            coeffs.push(attrs.iter().find(|a| a.0 == "coeffs").map(|a| a.1.to_string()));
        }
    }
    if !closed {
        return Err(at(text.lines().count(), "missing closing brace"));
    }
    let order = vertices.len();
    for (pos, &(v, line)) in vertices.iter().enumerate() {
        if v != pos {
            return Err(at(line, format!("vertex {v} declared out of order; expected {pos}")));
        }
    }
    let mut g = Graph::new(order);
    for (u, v, line) in edges {
        g.add_edge(u, v).map_err(|e| at(line, e.to_string()))?;
    }
    if let (Some((q, line)), Some(labels)) = (q, coeffs.into_iter().collect::<Option<Vec<_>>>()) {
        if order > 0 {
            let doc = GraphDoc { order, edges: Vec::new(), labels: Some(labels), q: Some(q) };
            let labelled = doc.to_graph().map_err(|e| at(line, e.to_string()))?;
            g.set_labels(labelled.labels().expect("labels parsed").to_vec())?;
        }
    }
    Ok(g)
}

/// `{order, elements}` with each element as its image array.
pub fn group_json(group: &AutGroup) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        order: usize,
        elements: Vec<&'a [u32]>,
    }
    let doc = Doc { order: group.order(), elements: group.elements().collect() };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

/// The fixing graph in DOT: vertices of S(G) as boxes on one side, same-orbit pairs as
/// ellipses on the other.
pub fn fixing_graph_dot(fg: &FixingGraph) -> String {
    let mut s = String::from("graph F {\n  rankdir=LR;\n  subgraph cluster_vertices {\n");
    for x in fg.left().iter() {
        let _ = writeln!(s, "    x{x} [label=\"{x}\", shape=box];");
    }
    s.push_str("  }\n  subgraph cluster_pairs {\n");
    for &(u, v) in fg.right().pairs() {
        let _ = writeln!(s, "    p{u}_{v} [label=\"{{{u},{v}}}\", shape=ellipse];");
    }
    s.push_str("  }\n");
    for (x, i) in fg.edges() {
        let (u, v) = fg.right().pairs()[i];
        let _ = writeln!(s, "  x{x} -- p{u}_{v};");
    }
    s.push_str("}\n");
    s
}

/// The fixing graph as JSON: `{vertices, pairs, edges: [[x, pair_index], …]}`.
pub fn fixing_graph_json(fg: &FixingGraph) -> String {
    #[derive(Serialize)]
    struct Doc {
        vertices: Vec<usize>,
        pairs: Vec<[usize; 2]>,
        edges: Vec<[usize; 2]>,
    }
    let doc = Doc {
        vertices: fg.left().to_vec(),
        pairs: fg.right().pairs().iter().map(|&(u, v)| [u, v]).collect(),
        edges: fg.edges().map(|(x, i)| [x, i]).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}
