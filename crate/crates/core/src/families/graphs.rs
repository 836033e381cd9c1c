use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toric::Configuration;

/// The configuration of a simple graph on vertices `1..=vertices`: the edge
/// `{1, i}` gives `e_1 + e_i` and an edge `{i, j}` avoiding `1` gives
/// `e_1 + e_i + e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphConfig {
    pub vertices: usize,
    /// 1-based, each edge sorted, in input order.
    pub edges: Vec<(usize, usize)>,
    pub config: Configuration,
}

pub fn graph_configuration(vertices: usize, edges: &[(usize, usize)]) -> Result<GraphConfig> {
    if vertices == 0 {
        return Err(Error::Input("a graph needs at least one vertex".into()));
    }
    let mut seen: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    let mut columns = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let (i, j) = (a.min(b), a.max(b));
        if i == j {
            return Err(Error::Input(format!("loop at vertex {i}")));
        }
        if i == 0 || j > vertices {
            return Err(Error::Input(format!(
                "edge {{{a},{b}}} outside vertices 1..={vertices}"
            )));
        }
        if seen.contains(&(i, j)) {
            return Err(Error::Input(format!("duplicate edge {{{i},{j}}}")));
        }
        seen.push((i, j));
        let mut col = vec![0i64; vertices];
        col[0] = 1;
        col[i - 1] = 1;
        col[j - 1] = 1;
        columns.push(col);
    }
    Ok(GraphConfig {
        vertices,
        edges: seen,
        config: Configuration::new(vertices, columns)?,
    })
}

/// Reads an edge list: one edge per line as two 1-based vertex indices.
/// Blank lines and `#` comments are skipped. Returns the largest vertex
/// index with the edges.
pub fn parse_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Input(format!("line {}: {e}", k + 1)))?;
        let [a, b] = nums[..] else {
            return Err(Error::Input(format!(
                "line {}: expected two vertices, got {}",
                k + 1,
                nums.len()
            )));
        };
        edges.push((a, b));
    }
    let max = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    Ok((max, edges))
}
