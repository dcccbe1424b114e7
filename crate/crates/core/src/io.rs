//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! graph fig1
//! v a
//! v b vw=1/2
//! e a b w=2
//! ```
//!
//! Defaults are `vw=0` and `w=1`. Only whole lines starting with `#` are
//! comments, since generated labels use `#` (`v#1`, `v#2`, ...).

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, WeightedGraph};
use crate::rational::{format_rational, parse_rational, Rational};

/// A graph together with the name from its `graph` record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: WeightedGraph,
}

pub fn parse_graph(text: &str) -> Result<NamedGraph> {
    let mut name = None;
    let mut b = GraphBuilder::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let rest: Vec<&str> = fields.collect();
        match tag {
            "graph" => {
                if name.is_some() {
                    return Err(err("second `graph` record".into()));
                }
                let [n] = rest[..] else {
                    return Err(err("expected `graph <name>`".into()));
                };
                name = Some(n.to_string());
            }
            "v" => {
                let (id, opts) = rest.split_first().ok_or_else(|| err("expected `v <id> [vw=<rational>]`".into()))?;
                let vw = keyed_rational(opts, "vw", Rational::zero()).map_err(err)?;
                b.vertex(id, vw).map_err(|e| err(e.to_string()))?;
            }
            "e" => {
                let [u, v, opts @ ..] = &rest[..] else {
                    return Err(err("expected `e <id1> <id2> [w=<rational>]`".into()));
                };
                let w = keyed_rational(opts, "w", Rational::one()).map_err(err)?;
                b.edge(u, v, w).map_err(|e| err(e.to_string()))?;
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    Ok(NamedGraph { name: name.unwrap_or_else(|| "G".to_string()), graph: b.finish() })
}

fn keyed_rational(opts: &[&str], key: &str, default: Rational) -> std::result::Result<Rational, String> {
    match opts {
        [] => Ok(default),
        [opt] => {
            let value = opt
                .strip_prefix(key)
                .and_then(|s| s.strip_prefix('='))
                .ok_or_else(|| format!("expected `{key}=<rational>`, got `{opt}`"))?;
            parse_rational(value).map_err(|e| e.to_string())
        }
        _ => Err(format!("too many fields after id (expected at most `{key}=...`)")),
    }
}

/// Serializes in vertex order, then stored edges in row order. Default
/// weights are omitted, so output of a simple graph is minimal.
pub fn write_graph(name: &str, g: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name}").unwrap();
    for v in g.vertices() {
        let vw = g.vertex_weight(v.as_str()).expect("own vertex");
        if vw.is_zero() {
            writeln!(out, "v {v}").unwrap();
        } else {
            writeln!(out, "v {v} vw={}", format_rational(vw)).unwrap();
        }
    }
    for (u, v, w) in g.edges() {
        if w.is_one() {
            writeln!(out, "e {u} {v}").unwrap();
        } else {
            writeln!(out, "e {u} {v} w={}", format_rational(w)).unwrap();
        }
    }
    out
}
