//! Shared generators and an independent determinant oracle for integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::io::Write;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use twinscale::rational::{int, ratio};
use twinscale::{GraphBuilder, Rational, WeightedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Positive rational `p/q` with `p ≤ pmax`, `q ≤ qmax`.
pub fn pos_rational(rng: &mut ChaCha8Rng, pmax: i64, qmax: i64) -> Rational {
    ratio(rng.gen_range(1..=pmax), rng.gen_range(1..=qmax))
}

/// Rational in `(0, 5]`.
pub fn alpha_up_to_5(rng: &mut ChaCha8Rng) -> Rational {
    let q = rng.gen_range(1..=7);
    ratio(rng.gen_range(1..=5 * q), q)
}

#[derive(Clone, Copy)]
pub struct GraphOpts {
    pub vertex_weights: bool,
    pub loops: bool,
}

/// Connected graph on `v0..v{n-1}`: a random spanning tree plus extra edges,
/// all weights positive rationals.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, opts: GraphOpts) -> WeightedGraph {
    let name = |i: usize| format!("v{i}");
    let mut b = GraphBuilder::new();
    for i in 0..n {
        let vw = if opts.vertex_weights && rng.gen_bool(0.3) { pos_rational(rng, 6, 3) } else { int(0) };
        b.vertex(&name(i), vw).unwrap();
    }
    for i in 1..n {
        let j = rng.gen_range(0..i);
        b.edge(&name(i), &name(j), pos_rational(rng, 9, 4)).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.25) {
                b.edge(&name(i), &name(j), pos_rational(rng, 9, 4)).unwrap();
            }
        }
        if opts.loops && rng.gen_bool(0.15) {
            b.edge(&name(i), &name(i), pos_rational(rng, 5, 2)).unwrap();
        }
    }
    b.finish()
}

pub const TWIN_ALPHAS: [(i64, i64); 4] = [(1, 2), (1, 1), (2, 1), (3, 1)];

/// A loopless connected graph plus a vertex `tw` planted as an `α`-twin of
/// `u` (`α·profile(u) = profile(tw)`).
pub fn planted_twin(rng: &mut ChaCha8Rng, n0: usize) -> (WeightedGraph, String, Rational) {
    let base = random_graph(rng, n0, GraphOpts { vertex_weights: true, loops: false });
    let (p, q) = TWIN_ALPHAS[rng.gen_range(0..TWIN_ALPHAS.len())];
    let alpha = ratio(p, q);
    let u = base.vertices()[rng.gen_range(0..n0)].to_string();
    let mut b = GraphBuilder::new();
    for v in base.vertices() {
        b.vertex(v.as_str(), base.vertex_weight(v.as_str()).unwrap().clone()).unwrap();
    }
    b.vertex("tw", &alpha * base.vertex_weight(&u).unwrap()).unwrap();
    for (x, y, w) in base.edges() {
        b.edge(x.as_str(), y.as_str(), w.clone()).unwrap();
    }
    for (t, w) in base.neighbors(&u).unwrap() {
        b.edge("tw", t.as_str(), &alpha * w).unwrap();
    }
    (b.finish(), u, alpha)
}

pub struct PlantedSubgraphs {
    pub graph: WeightedGraph,
    pub v1: Vec<String>,
    pub v2: Vec<String>,
    pub v3: Vec<String>,
    pub pi: BTreeMap<String, String>,
    pub alpha: Rational,
}

pub const SUBGRAPH_ALPHAS: [(i64, i64); 6] = [(1, 2), (1, 1), (2, 1), (3, 1), (2, 3), (5, 2)];

/// `V1 = p*`, `V2 = q*` (an `α`-scaled copy of `V1` with the same attachment
/// to `V3`), `V3 = r*`. Loopless; every vertex has positive degree.
pub fn planted_twin_subgraphs(rng: &mut ChaCha8Rng) -> PlantedSubgraphs {
    let s = rng.gen_range(1..=3);
    let t = rng.gen_range(1..=5);
    let (a, c) = SUBGRAPH_ALPHAS[rng.gen_range(0..SUBGRAPH_ALPHAS.len())];
    let alpha = ratio(a, c);
    let v1: Vec<String> = (0..s).map(|i| format!("p{i}")).collect();
    let v2: Vec<String> = (0..s).map(|i| format!("q{i}")).collect();
    let v3: Vec<String> = (0..t).map(|i| format!("r{i}")).collect();

    let mut b = GraphBuilder::new();
    for i in 0..s {
        let vw = if rng.gen_bool(0.3) { pos_rational(rng, 4, 3) } else { int(0) };
        b.vertex(&v1[i], vw.clone()).unwrap();
        b.vertex(&v2[i], &alpha * vw).unwrap();
    }
    for r in &v3 {
        b.vertex(r, if rng.gen_bool(0.2) { pos_rational(rng, 4, 3) } else { int(0) }).unwrap();
    }
    for i in 1..t {
        let j = rng.gen_range(0..i);
        b.edge(&v3[i], &v3[j], pos_rational(rng, 9, 4)).unwrap();
    }
    for i in 0..s {
        for j in i + 1..s {
            if rng.gen_bool(0.5) {
                let w = pos_rational(rng, 9, 4);
                b.edge(&v1[i], &v1[j], w.clone()).unwrap();
                b.edge(&v2[i], &v2[j], &alpha * w).unwrap();
            }
        }
        let forced = rng.gen_range(0..t);
        for (k, r) in v3.iter().enumerate() {
            if k == forced || rng.gen_bool(0.3) {
                let w = pos_rational(rng, 9, 4);
                b.edge(&v1[i], r, w.clone()).unwrap();
                b.edge(&v2[i], r, &alpha * w).unwrap();
            }
        }
    }
    let pi = v1.iter().cloned().zip(v2.iter().cloned()).collect();
    PlantedSubgraphs { graph: b.finish(), v1, v2, v3, pi, alpha }
}

/// Random rational matrix of order `n`, entries `p/q` with `|p| ≤ 9`.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(0.2) { int(0) } else { ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6)) })
                .collect()
        })
        .collect()
}

// Polynomials as coefficient vectors, lowest degree first, for the oracle.
type P = Vec<Rational>;

fn p_add(a: &P, b: &P) -> P {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn p_mul(a: &P, b: &P) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn p_neg(a: &P) -> P {
    a.iter().map(|c| -c).collect()
}

fn det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return vec![int(1)];
    }
    let mut acc: P = Vec::new();
    for col in 0..n {
        let minor: Vec<Vec<P>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, e)| e.clone()).collect()).collect();
        let term = p_mul(&m[0][col], &det(&minor));
        acc = p_add(&acc, &if col % 2 == 0 { term } else { p_neg(&term) });
    }
    acc
}

/// `det(xI - M)` by cofactor expansion along the first row; coefficient `i`
/// for `x^i`, trailing zeros trimmed.
pub fn cofactor_charpoly(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    let entries: Vec<Vec<P>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { vec![-&m[i][j], int(1)] } else { vec![-&m[i][j]] })
                .collect()
        })
        .collect();
    let mut p = det(&entries);
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// One line per criterion, written past the test harness's output capture.
pub fn report(line: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}
