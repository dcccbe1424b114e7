use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, VertexId, WeightedGraph};

/// Copies per vertex for [`blowup`]. Vertices not listed get one copy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multiplicity(BTreeMap<VertexId, u32>);

impl Multiplicity {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: &str, m: u32) -> Result<&mut Self> {
        if m == 0 {
            return Err(Error::InvalidMultiplicity(format!("`{v}` has multiplicity 0")));
        }
        self.0.insert(VertexId::new(v)?, m);
        Ok(self)
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, u32)>) -> Result<Self> {
        let mut m = Self::new();
        for (v, k) in pairs {
            m.set(v, k)?;
        }
        Ok(m)
    }

    /// Parses `v=3,u=6`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut m = Self::new();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, k) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidMultiplicity(format!("expected `vertex=count`, got `{part}`")))?;
            let k: u32 = k.trim().parse().map_err(|_| Error::InvalidMultiplicity(format!("bad count in `{part}`")))?;
            m.set(v.trim(), k)?;
        }
        Ok(m)
    }

    pub fn get(&self, v: &str) -> u32 {
        self.0.get(v).copied().unwrap_or(1)
    }
}

/// Label of copy `i` (1-based) of `v` with `m` copies: `v` itself when `m = 1`.
pub fn copy_label(v: &str, i: u32, m: u32) -> String {
    if m == 1 {
        v.to_string()
    } else {
        format!("{v}#{i}")
    }
}

/// Replaces each vertex `v` by `m(v)` independent copies and each edge `uv`
/// by a complete bipartite `K_{m(u),m(v)}` of unit edges.
pub fn blowup(g: &WeightedGraph, m: &Multiplicity) -> Result<WeightedGraph> {
    if g.has_loops() {
        return Err(Error::NotSimple("blowup input has a loop".into()));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple("blowup needs unit edge weights and zero vertex weights".into()));
    }
    if let Some(v) = m.0.keys().find(|v| !g.contains(v.as_str())) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        let k = m.get(v.as_str());
        for i in 1..=k {
            b.vertex(&copy_label(v.as_str(), i, k), Zero::zero())?;
        }
    }
    for (u, v, _) in g.edges() {
        let (mu, mv) = (m.get(u.as_str()), m.get(v.as_str()));
        for i in 1..=mu {
            for j in 1..=mv {
                b.edge(&copy_label(u.as_str(), i, mu), &copy_label(v.as_str(), j, mv), One::one())?;
            }
        }
    }
    Ok(b.finish())
}

/// Whether `a·s + b·t = a·s' + b·t'`, the vertex-count balance for two
/// blowups of a bipartite graph with sides of sizes `a` and `b`.
pub fn blowup_pair_valid(a: u64, b: u64, s: u64, t: u64, s2: u64, t2: u64) -> bool {
    a * s + b * t == a * s2 + b * t2
}
