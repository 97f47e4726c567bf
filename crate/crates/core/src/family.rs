//! Ordered collections of graphs read from a file; scan reports refer to
//! members by their input position.

use crate::edgelist::{parse_edge_list, EdgeListError};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyFormat {
    /// One graph6 record per line.
    Graph6,
    /// Concatenated edge-list blocks; a line with a single integer token
    /// starts a new graph.
    EdgeList,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("line {line}: {source}")]
    Graph6 {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
}

#[derive(Debug, Clone)]
pub struct GraphFamily {
    pub members: Vec<Graph>,
    pub source: String,
}

impl GraphFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Loads a family from text. Members keep input order; blank lines are
/// skipped; the first malformed record aborts with its line number.
pub fn load_family(
    text: &str,
    format: FamilyFormat,
    source: &str,
) -> Result<GraphFamily, FamilyError> {
    let members = match format {
        FamilyFormat::Graph6 => {
            let mut members = Vec::new();
            for (idx, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line.as_bytes()).map_err(|source| FamilyError::Graph6 {
                    line: idx + 1,
                    source,
                })?;
                members.push(g);
            }
            members
        }
        FamilyFormat::EdgeList => parse_edge_list_blocks(text)?,
    };
    Ok(GraphFamily {
        members,
        source: source.to_string(),
    })
}

fn parse_edge_list_blocks(text: &str) -> Result<Vec<Graph>, FamilyError> {
    let mut members = Vec::new();
    let mut block = String::new();
    let mut block_start = 0usize;
    let flush =
        |block: &mut String, start: usize, members: &mut Vec<Graph>| -> Result<(), FamilyError> {
            if block.trim().is_empty() {
                block.clear();
                return Ok(());
            }
            // Re-map block-local line numbers to file positions.
            let g = parse_edge_list(block).map_err(|e| shift_lines(e, start))?;
            members.push(g);
            block.clear();
            Ok(())
        };
    for (idx, raw) in text.lines().enumerate() {
        let tokens = raw.split_whitespace().count();
        if tokens == 0 {
            continue;
        }
        if tokens == 1 && !block.trim().is_empty() {
            flush(&mut block, block_start, &mut members)?;
        }
        if block.trim().is_empty() {
            block_start = idx;
        }
        block.push_str(raw);
        block.push('\n');
    }
    flush(&mut block, block_start, &mut members)?;
    Ok(members)
}

fn shift_lines(err: EdgeListError, offset: usize) -> FamilyError {
    use EdgeListError::*;
    let shifted = match err {
        BadHeader { line } => BadHeader {
            line: line + offset,
        },
        BadArity { line, found } => BadArity {
            line: line + offset,
            found,
        },
        BadToken { line, token } => BadToken {
            line: line + offset,
            token,
        },
        Graph { line, source } => Graph {
            line: line + offset,
            source,
        },
        MissingHeader => MissingHeader,
    };
    FamilyError::EdgeList(shifted)
}

/// Detects the family format from content: a leading single-integer line
/// means edge-list blocks, anything else is treated as graph6.
pub fn sniff_format(text: &str) -> FamilyFormat {
    for raw in text.lines() {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() == 1 && tokens[0].parse::<usize>().is_ok() {
            return FamilyFormat::EdgeList;
        }
        return FamilyFormat::Graph6;
    }
    FamilyFormat::Graph6
}
