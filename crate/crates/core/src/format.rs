//! Text formats: the edge-list document and DOT export.
//!
//! An edge-list document is a header line `n m` followed by `m` lines `u v`,
//! all 0-based. Lines starting with `#` and blank lines are ignored
//! anywhere. Several documents may follow one another in a single text; the
//! declared edge count tells where each one ends.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{graph_from_relation, relation_from_graph, Graph};
use crate::relation::Relation;
use crate::scc::CondensationDag;

/// A parsed document and the number of duplicate edge lines it contained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicates: usize,
}

struct ContentLines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> ContentLines<'a> {
    fn new(text: &'a str) -> Self {
        ContentLines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for ContentLines<'a> {
    /// 1-based line number and trimmed content.
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        self.inner.by_ref().find_map(|(i, line)| {
            let line = line.trim();
            (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
        })
    }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize)> {
    let malformed = || Error::Parse {
        line,
        message: format!("expected {what}, found `{text}`"),
    };
    let mut fields = text.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed());
    };
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

fn parse_document(lines: &mut ContentLines<'_>, header: (usize, &str)) -> Result<ParsedGraph> {
    let (header_line, header_text) = header;
    let (n, m) = parse_pair(header_line, header_text, "header `n m`")?;
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            message: "node count must be positive".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for found in 0..m {
        let Some((line, text)) = lines.next() else {
            return Err(Error::EdgeCount { declared: m, found });
        };
        let (u, v) = parse_pair(line, text, "edge `u v`")?;
        if let Some(endpoint) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(Error::Range {
                line,
                endpoint,
                nodes: n,
            });
        }
        edges.push((u, v));
    }
    let graph = Graph::new(n, edges).expect("endpoints checked above");
    let duplicates = m - graph.edge_count();
    Ok(ParsedGraph { graph, duplicates })
}

/// Parses exactly one edge-list document.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = ContentLines::new(text);
    let header = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let parsed = parse_document(&mut lines, header)?;
    let extra = lines.count();
    if extra > 0 {
        let declared = parsed.graph.edge_count() + parsed.duplicates;
        return Err(Error::EdgeCount {
            declared,
            found: declared + extra,
        });
    }
    Ok(parsed)
}

/// Parses a sequence of edge-list documents, one relation each, as written
/// in law-report witnesses.
pub fn parse_relation_blocks(text: &str) -> Result<Vec<Relation>> {
    let mut lines = ContentLines::new(text);
    let mut relations = Vec::new();
    while let Some(header) = lines.next() {
        let parsed = parse_document(&mut lines, header)?;
        relations.push(relation_from_graph(&parsed.graph)?);
    }
    Ok(relations)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_relation(r: &Relation) -> String {
    write_edge_list(&graph_from_relation(r))
}

/// Renders a condensation as a DOT digraph.
///
/// Nodes are named `scc<representative>` and labelled with their members,
/// or with `labels[class]` when given. Nodes and edges appear in class
/// order.
pub fn to_dot(dag: &CondensationDag, labels: Option<&[String]>) -> String {
    let partition = &dag.partition;
    let name = |class: usize| format!("scc{}", partition.classes()[class][0]);
    let mut out = String::from("digraph condensation {\n");
    for (idx, members) in partition.classes().iter().enumerate() {
        let label = match labels.and_then(|l| l.get(idx)) {
            Some(label) => label.replace('\\', "\\\\").replace('"', "\\\""),
            None => members
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
        };
        let _ = writeln!(out, "  {} [label=\"{}\"];", name(idx), label);
    }
    for &(from, to) in &dag.edges {
        let _ = writeln!(out, "  {} -> {};", name(from), name(to));
    }
    out.push_str("}\n");
    out
}
