//! File formats and constructor expressions.

use std::fs;
use std::path::Path;

use quandle_core::{
    parse_diagram, LinkDiagram, LinkError, LinkingGraph, LinkingGraphError, Permutation, PermutationError, Quandle,
    QuandleError, QuandleMap,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("bad quandle expression {text:?}: {reason}")]
    Expression { text: String, reason: String },
    #[error(transparent)]
    Permutation(#[from] PermutationError),
    #[error("\"order\" is {order} but the table has {rows} rows")]
    OrderMismatch { order: usize, rows: usize },
    #[error("not a quandle: {0}")]
    Quandle(#[from] QuandleError),
    #[error("{path}: {source}")]
    Diagram { path: String, source: LinkError },
    #[error("bad linking graph: {0}")]
    LinkingGraph(#[from] LinkingGraphError),
    #[error("map {index} has {len} entries, expected {expected}")]
    MapLength { index: usize, len: usize, expected: usize },
}

/// `{"order": m, "table": [[...], ...]}` with `table[x][y] = x*y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl QuandleJson {
    pub fn from_quandle(q: &Quandle) -> Self {
        Self { order: q.order(), table: q.rows() }
    }

    pub fn to_quandle(&self) -> Result<Quandle, FormatError> {
        if self.table.len() != self.order {
            return Err(FormatError::OrderMismatch { order: self.order, rows: self.table.len() });
        }
        Ok(Quandle::from_table(&self.table)?)
    }
}

/// `{"m": m, "weights": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingGraphJson {
    pub m: usize,
    pub weights: Vec<Vec<i64>>,
}

impl LinkingGraphJson {
    pub fn from_graph(g: &LinkingGraph) -> Self {
        Self { m: g.vertex_count(), weights: g.weights().to_vec() }
    }

    pub fn to_graph(&self) -> Result<LinkingGraph, FormatError> {
        Ok(LinkingGraph::new(self.m, self.weights.clone())?)
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    serde_json::from_str(&read(path)?).map_err(|source| FormatError::Json { path: path.display().to_string(), source })
}

/// Parses `"P n (cycles)"`, `"T m"` or `"R m"`.
pub fn parse_expression(text: &str) -> Result<Quandle, FormatError> {
    let err = |reason: &str| FormatError::Expression { text: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim();
    let mut parts = trimmed.splitn(2, char::is_whitespace);
    let kind = parts.next().unwrap_or("");
    let rest = parts.next().unwrap_or("").trim();
    let (size, tail) = match rest.find(|c: char| !c.is_ascii_digit()) {
        Some(k) => (&rest[..k], rest[k..].trim()),
        None => (rest, ""),
    };
    let size: usize = size.parse().map_err(|_| err("expected a positive size after the family letter"))?;
    if size == 0 {
        return Err(err("size must be positive"));
    }
    match kind {
        "P" => Ok(Quandle::p_quandle(&Permutation::parse_cycles(tail, size)?)),
        "T" | "R" if !tail.is_empty() => Err(err("unexpected text after the size")),
        "T" => Ok(Quandle::trivial(size)),
        "R" => Ok(Quandle::dihedral(size)),
        _ => Err(err("family must be P, T or R")),
    }
}

/// Reads a quandle from a JSON file, or from a constructor expression when
/// `arg` does not name an existing file.
pub fn load_quandle(arg: &str) -> Result<Quandle, FormatError> {
    let path = Path::new(arg);
    if path.is_file() {
        read_json::<QuandleJson>(path)?.to_quandle()
    } else {
        parse_expression(arg)
    }
}

pub fn load_diagram(path: &Path) -> Result<LinkDiagram, FormatError> {
    parse_diagram(&read(path)?).map_err(|source| FormatError::Diagram { path: path.display().to_string(), source })
}

pub fn load_linking_graph(path: &Path) -> Result<LinkingGraph, FormatError> {
    read_json::<LinkingGraphJson>(path)?.to_graph()
}

/// A JSON array of image arrays, one per map of `{0..m-1}`.
pub fn load_maps(path: &Path, m: usize) -> Result<Vec<QuandleMap>, FormatError> {
    let images: Vec<Vec<usize>> = read_json(path)?;
    images
        .into_iter()
        .enumerate()
        .map(|(index, img)| {
            if img.len() != m {
                return Err(FormatError::MapLength { index, len: img.len(), expected: m });
            }
            Ok(QuandleMap::new(img, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let p = parse_expression("P 3 (1 2)").unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.op(1, 0), 2);
        assert_eq!(parse_expression("P 2").unwrap(), Quandle::trivial(3));
        assert_eq!(parse_expression(" T 3 ").unwrap(), Quandle::trivial(3));
        assert_eq!(parse_expression("R 5").unwrap(), Quandle::dihedral(5));
        assert_eq!(parse_expression("P 3(1 2 3)").unwrap().op(3, 0), 1);
        for bad in ["", "Q 3", "P", "P x", "T 0", "T 3 (1 2)", "P 2 (1 3)"] {
            assert!(parse_expression(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn quandle_json_round_trip() {
        let q = parse_expression("P 2 (1 2)").unwrap();
        let text = serde_json::to_string(&QuandleJson::from_quandle(&q)).unwrap();
        assert_eq!(text, r#"{"order":3,"table":[[0,0,0],[2,1,1],[1,2,2]]}"#);
        let back: QuandleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_quandle().unwrap(), q);
        let bad = QuandleJson { order: 2, table: vec![vec![0, 0], vec![0, 1]] };
        assert!(bad.to_quandle().is_err());
    }

    #[test]
    fn linking_graph_json() {
        let g: LinkingGraphJson = serde_json::from_str(r#"{"m":2,"weights":[[0,3],[3,0]]}"#).unwrap();
        assert_eq!(g.to_graph().unwrap().weight(0, 1), 3);
        let bad: LinkingGraphJson = serde_json::from_str(r#"{"m":2,"weights":[[0,3],[1,0]]}"#).unwrap();
        assert!(bad.to_graph().is_err());
    }
}
