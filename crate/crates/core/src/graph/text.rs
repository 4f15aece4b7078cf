//! Plain-text graph exchange format.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! g 1 2 3 0
//! ```
//!
//! `n` gives the vertex count, each `e` line one undirected edge (0-based),
//! each `g` line a symmetry generator as the list of images of `0..N`.

use std::fmt::Write;

use super::{check_symmetric_graph, Graph, GraphError};
use crate::group::Perm;

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| GraphError::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let tag = tokens.next().unwrap_or("");
        let nums: Vec<usize> = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("`{t}` is not a nonnegative integer")))
            })
            .collect::<Result<_, _>>()?;
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(err("duplicate `n` line".into()));
                }
                match nums.as_slice() {
                    [count] => n = Some(*count),
                    _ => return Err(err("expected `n <N>`".into())),
                }
            }
            "e" => match nums.as_slice() {
                [k, l] => edges.push((*k, *l)),
                _ => return Err(err("expected `e <k> <l>`".into())),
            },
            "g" => {
                let count = n.ok_or_else(|| err("`g` line before `n` line".into()))?;
                if nums.len() != count {
                    return Err(err(format!(
                        "generator lists {} images, expected {count}",
                        nums.len()
                    )));
                }
                gens.push(Perm::new(nums).map_err(|e| err(e.to_string()))?);
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `n <N>` line".into(),
    })?;
    Graph::new("file", n, edges, gens)
}

/// Parses and then insists on [`check_symmetric_graph`].
pub fn parse_symmetric_graph(text: &str) -> Result<Graph, GraphError> {
    let g = parse_graph(text)?;
    check_symmetric_graph(&g)?;
    Ok(g)
}

pub fn to_text(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", g.label());
    let _ = writeln!(out, "n {}", g.vertex_count());
    for (k, l) in g.edges() {
        let _ = writeln!(out, "e {k} {l}");
    }
    for p in g.generators() {
        let images: Vec<String> = p.images().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "g {}", images.join(" "));
    }
    out
}
