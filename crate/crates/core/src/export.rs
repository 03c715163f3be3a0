//! Deterministic text exports: DOT, edge list and Matrix Market.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::CanonicalForm;
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::ring::Mat2;

/// Vertex labels that render against a field.
pub trait VertexLabel {
    fn render(&self, f: &FieldSpec) -> String;
}

impl VertexLabel for Mat2 {
    fn render(&self, f: &FieldSpec) -> String {
        self.display(f).to_string()
    }
}

impl VertexLabel for CanonicalForm {
    fn render(&self, f: &FieldSpec) -> String {
        self.label(f)
    }
}

impl VertexLabel for usize {
    fn render(&self, _: &FieldSpec) -> String {
        self.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Dot,
    EdgeList,
    MatrixMarket,
}

impl ExportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            Self::Dot => "dot",
            Self::EdgeList => "edges",
            Self::MatrixMarket => "mtx",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Dot => "dot",
            Self::EdgeList => "edgelist",
            Self::MatrixMarket => "matrixmarket",
        }
    }
}

impl FromStr for ExportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(Self::Dot),
            "edgelist" | "edges" => Ok(Self::EdgeList),
            "matrixmarket" | "mtx" => Ok(Self::MatrixMarket),
            other => Err(format!("unknown export format {other:?}")),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph; loops are written as `i -- i`.
pub fn to_dot<L: VertexLabel>(g: &Graph<L>, f: &FieldSpec, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", escape(name));
    for (i, l) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(&l.render(f)));
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  {i} -- {j};");
    }
    out.push_str("}\n");
    out
}

/// `# index label` header lines, then one `i j` line per edge (0-based, i <= j).
pub fn to_edge_list<L: VertexLabel>(g: &Graph<L>, f: &FieldSpec) -> String {
    let mut out = String::new();
    for (i, l) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "# {i} {}", l.render(f));
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// Symmetric coordinate pattern, 1-indexed, lower triangle with loops on
/// the diagonal.
pub fn to_matrix_market<L: VertexLabel>(g: &Graph<L>, f: &FieldSpec) -> String {
    let mut out = String::from("%%MatrixMarket matrix coordinate pattern symmetric\n");
    for (i, l) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "% {} {}", i + 1, l.render(f));
    }
    let n = g.order();
    let _ = writeln!(out, "{n} {n} {}", g.edge_count());
    for (i, j) in g.edges() {
        // edges() yields i <= j; the lower triangle wants row >= column
        let _ = writeln!(out, "{} {}", j + 1, i + 1);
    }
    out
}

pub fn export<L: VertexLabel>(g: &Graph<L>, f: &FieldSpec, format: ExportFormat, name: &str) -> String {
    match format {
        ExportFormat::Dot => to_dot(g, f, name),
        ExportFormat::EdgeList => to_edge_list(g, f),
        ExportFormat::MatrixMarket => to_matrix_market(g, f),
    }
}
