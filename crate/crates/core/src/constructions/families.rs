//! Two infinite families of pairs `(G, G - K_{k,k})` that are cospectral for
//! the normalized Laplacian.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, VertexId, WeightedGraph};
use crate::poly::{CharPoly, Poly};
use crate::rational::{int, ratio, Rational};
use crate::twins::{coalesce_all, quotient_graph, verify_twin_subgraphs};

use super::blowup::{blowup, copy_label, Multiplicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyVariant {
    /// With the bottom `K_{k,k}`.
    Full,
    /// Without it.
    Sub,
}

impl FromStr for FamilyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(FamilyVariant::Full),
            "sub" => Ok(FamilyVariant::Sub),
            _ => Err(Error::InvalidParameter(format!("variant must be `full` or `sub`, got `{s}`"))),
        }
    }
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyVariant::Full => "full",
            FamilyVariant::Sub => "sub",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Blowup of a 5-vertex base.
    One,
    /// Twin edge gadgets on top of a 4-vertex base.
    Two,
}

impl Family {
    pub fn from_index(i: u32) -> Result<Self> {
        match i {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            _ => Err(Error::InvalidParameter(format!("family must be 1 or 2, got {i}"))),
        }
    }

    /// Role names of the coalesced vertices, in matrix order.
    pub fn roles(self) -> &'static [&'static str] {
        match self {
            Family::One => &["a", "m1", "m2", "b1", "b2"],
            Family::Two => &["t1", "t2", "u1", "u2", "b1", "b2"],
        }
    }

    pub fn graph(self, k: u32, variant: FamilyVariant) -> Result<WeightedGraph> {
        match self {
            Family::One => family_subgraph1(k, variant),
            Family::Two => family_subgraph2(k, variant),
        }
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

/// Blowup of apex `a` (`k+1` copies), middles `m1, m2`, bottoms `b1, b2`
/// (`k` copies each); `b1–b2` only in the full variant. `3k+3` vertices.
pub fn family_subgraph1(k: u32, variant: FamilyVariant) -> Result<WeightedGraph> {
    check_k(k)?;
    let mut edges = vec![("a", "m1"), ("a", "m2"), ("m1", "m2"), ("m1", "b1"), ("m2", "b2")];
    if variant == FamilyVariant::Full {
        edges.push(("b1", "b2"));
    }
    let base = WeightedGraph::simple(&["a", "m1", "m2", "b1", "b2"], &edges)?;
    blowup(&base, &Multiplicity::from_pairs([("a", k + 1), ("b1", k), ("b2", k)])?)
}

/// `k+1` disjoint edges `t1#j–t2#j` hanging from `u1` and `u2`, which are
/// adjacent and carry `k` bottoms each; the bottoms form `K_{k,k}` only in the
/// full variant. `4k+4` vertices.
pub fn family_subgraph2(k: u32, variant: FamilyVariant) -> Result<WeightedGraph> {
    check_k(k)?;
    let one = Rational::one();
    let mut b = GraphBuilder::new();
    let gadgets: Vec<(String, String)> = (1..=k + 1).map(|j| (format!("t1#{j}"), format!("t2#{j}"))).collect();
    for (t1, t2) in &gadgets {
        b.vertex(t1, Zero::zero())?.vertex(t2, Zero::zero())?;
    }
    b.vertex("u1", Zero::zero())?.vertex("u2", Zero::zero())?;
    let b1: Vec<String> = (1..=k).map(|i| copy_label("b1", i, k)).collect();
    let b2: Vec<String> = (1..=k).map(|i| copy_label("b2", i, k)).collect();
    for v in b1.iter().chain(&b2) {
        b.vertex(v, Zero::zero())?;
    }
    for (t1, t2) in &gadgets {
        b.edge(t1, t2, one.clone())?.edge(t1, "u1", one.clone())?.edge(t2, "u2", one.clone())?;
    }
    b.edge("u1", "u2", one.clone())?;
    for (x, y) in b1.iter().zip(&b2) {
        b.edge("u1", x, one.clone())?.edge("u2", y, one.clone())?;
    }
    if variant == FamilyVariant::Full {
        for x in &b1 {
            for y in &b2 {
                b.edge(x, y, one.clone())?;
            }
        }
    }
    Ok(b.finish())
}

/// The reduced family graph with vertices renamed to [`Family::roles`], and
/// the number of vertices removed. Family 1 needs only vertex twins; family 2
/// additionally folds every top gadget into the first through twin-subgraph
/// quotients.
pub fn family_coalesced(family: Family, k: u32, variant: FamilyVariant) -> Result<(WeightedGraph, usize)> {
    let g = family.graph(k, variant)?;
    let (mut reduced, _) = coalesce_all(&g)?;
    if family == Family::Two {
        for j in 2..=k + 1 {
            let v1 = ["t1#1".to_string(), "t2#1".to_string()];
            let v2 = [format!("t1#{j}"), format!("t2#{j}")];
            let v3: Vec<String> = reduced
                .vertices()
                .iter()
                .map(|v| v.as_str().to_string())
                .filter(|v| !v1.contains(v) && !v2.contains(v))
                .collect();
            let pi: BTreeMap<&str, &str> = [(v1[0].as_str(), v2[0].as_str()), (v1[1].as_str(), v2[1].as_str())].into();
            let w = verify_twin_subgraphs(&reduced, &v1, &v2, &v3, &pi)?
                .ok_or_else(|| Error::InvalidWitness(format!("top gadget {j} is not a twin of gadget 1")))?;
            reduced = quotient_graph(&reduced, &w)?;
        }
    }
    let roles = family.roles();
    if reduced.order() != roles.len() {
        return Err(Error::InvalidParameter(format!(
            "family reduced to {} vertices, expected {}",
            reduced.order(),
            roles.len()
        )));
    }
    let removed = g.order() - reduced.order();
    let labels = roles.iter().map(|r| VertexId::new(*r)).collect::<Result<Vec<_>>>()?;
    Ok((reduced.relabeled(labels)?, removed))
}

/// Closed-form transition characteristic polynomial of the reduced family
/// graph at `k`.
pub fn family_charpoly_closed(family: Family, k: u32) -> Result<CharPoly> {
    check_k(k)?;
    let k = k as i64;
    let kp = (k + 1) * (k + 1);
    let z = Rational::zero;
    let coeffs = match family {
        Family::One => vec![
            z(),
            ratio(k * (2 * k + 1), 4 * kp),
            -ratio(1, 4 * (k + 1)),
            -ratio(6 * k * k + 8 * k + 3, 4 * kp),
            z(),
            int(1),
        ],
        Family::Two => vec![
            -ratio(k * k, 16 * kp),
            z(),
            ratio(k * (13 * k + 8), 16 * kp),
            z(),
            -ratio(7 * k * k + 10 * k + 4, 4 * kp),
            z(),
            int(1),
        ],
    };
    CharPoly::from_poly(Poly::new(coeffs))
}
