//! Plain-text edge lists: a header line holding the vertex count, then one
//! `i j` pair per line (0-based).

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected the vertex count as a single integer")]
    BadHeader { line: usize },
    #[error("line {line}: expected two vertex indices, found {found} tokens")]
    BadArity { line: usize, found: usize },
    #[error("line {line}: '{token}' is not a vertex index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("no vertex-count header found")]
    MissingHeader,
}

/// Parses one edge-list block. Blank lines are skipped; duplicate edges
/// collapse and both orientations of a pair are accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match &mut graph {
            None => {
                if tokens.len() != 1 {
                    return Err(EdgeListError::BadHeader { line });
                }
                let n: usize = tokens[0]
                    .parse()
                    .map_err(|_| EdgeListError::BadHeader { line })?;
                graph =
                    Some(Graph::empty(n).map_err(|source| EdgeListError::Graph { line, source })?);
            }
            Some(g) => {
                if tokens.len() != 2 {
                    return Err(EdgeListError::BadArity {
                        line,
                        found: tokens.len(),
                    });
                }
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| EdgeListError::BadToken {
                        line,
                        token: t.to_string(),
                    })
                };
                let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
                g.add_edge(u, v)
                    .map_err(|source| EdgeListError::Graph { line, source })?;
            }
        }
    }
    graph.ok_or(EdgeListError::MissingHeader)
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
