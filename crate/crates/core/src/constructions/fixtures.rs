//! Named example graphs.

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, WeightedGraph};
use crate::matrix::MatrixKind;
use crate::rational::int;
use crate::spectra::eigenvalues_numeric;

use super::blowup::{blowup, Multiplicity};
use super::families::{family_subgraph2, FamilyVariant};

pub const FIXTURE_NAMES: &[&str] = &[
    "c6",
    "fig1",
    "fig2_left",
    "fig2_right",
    "fig3_left",
    "fig3_right",
    "fig4",
    "fig5_Ghat",
    "fig5_H1hat",
    "fig5_H2hat",
    "fig6_left",
    "fig6_right",
    "fig8_left",
    "fig8_right",
    "fig10_left",
    "fig10_right",
];

/// Tolerance for accepting the transcribed `fig10_left`.
pub const FIG10_TOL: f64 = 1e-9;

/// Every fixture, in catalog order.
pub fn fixtures() -> Result<Vec<(&'static str, WeightedGraph)>> {
    FIXTURE_NAMES.iter().map(|&n| Ok((n, fixture(n)?))).collect()
}

pub fn fixture(name: &str) -> Result<WeightedGraph> {
    match name {
        "c6" => c6(),
        "fig1" => weighted(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "d", 1), ("a", "e", 1), ("b", "d", 2), ("b", "e", 2), ("c", "d", 1), ("c", "e", 2), ("e", "f", 1)],
        ),
        "fig2_left" => c6_blowup("b=3,d=3,f=3"),
        "fig2_right" => c6_blowup("a=2,b=2,c=2,d=2,e=2,f=2"),
        "fig3_left" => c6_blowup("a=3,b=6,c=6,d=3,e=3,f=3"),
        "fig3_right" => c6_blowup("a=4,b=4,c=8,d=2,e=4,f=2"),
        "fig4" => weighted(
            &["a", "b", "c", "d", "e", "a'", "b'"],
            &[
                ("a", "b", 1),
                ("a", "c", 1),
                ("b", "d", 1),
                ("a'", "b'", 2),
                ("a'", "c", 2),
                ("b'", "d", 2),
                ("c", "d", 1),
                ("d", "e", 1),
            ],
        ),
        "fig5_Ghat" => weighted(
            &["a", "b", "c", "d", "e"],
            &[("a", "b", 3), ("a", "c", 3), ("b", "d", 3), ("c", "d", 1), ("d", "e", 1)],
        ),
        "fig5_H1hat" => hat(&["a", "b"], 1),
        "fig5_H2hat" => hat(&["a'", "b'"], 2),
        "fig6_left" => spider("x1=2,x3=2,y1=4,y3=4,z1=5,z3=5"),
        "fig6_right" => spider("y1=3,y3=3,z1=7,z3=7"),
        "fig8_left" => family_subgraph2(2, FamilyVariant::Full),
        "fig8_right" => family_subgraph2(2, FamilyVariant::Sub),
        "fig10_left" => fig10_left(),
        "fig10_right" => WeightedGraph::simple(
            &["p1", "p2", "p3", "q1", "q2", "q3", "r1", "s1", "r2", "s2", "r3", "s3"],
            &[
                ("p1", "p2"),
                ("p2", "p3"),
                ("p1", "q1"),
                ("p2", "q2"),
                ("p3", "q3"),
                ("r1", "s1"),
                ("r2", "s2"),
                ("r3", "s3"),
            ],
        ),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn weighted(vertices: &[&str], edges: &[(&str, &str, i64)]) -> Result<WeightedGraph> {
    let mut b = GraphBuilder::new();
    for v in vertices {
        b.vertex(v, int(0))?;
    }
    for &(u, v, w) in edges {
        b.edge(u, v, int(w))?;
    }
    Ok(b.finish())
}

fn hat(pair: &[&str; 2], w: i64) -> Result<WeightedGraph> {
    let mut b = GraphBuilder::new();
    b.vertex(pair[0], int(w))?.vertex(pair[1], int(w))?.edge(pair[0], pair[1], int(w))?;
    Ok(b.finish())
}

fn c6() -> Result<WeightedGraph> {
    WeightedGraph::simple(
        &["a", "b", "c", "d", "e", "f"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a")],
    )
}

fn c6_blowup(mult: &str) -> Result<WeightedGraph> {
    blowup(&c6()?, &Multiplicity::parse(mult)?)
}

/// Center `o` with three legs `o–x1–x2–x3`, `o–y1–y2–y3`, `o–z1–z2–z3`.
fn spider(mult: &str) -> Result<WeightedGraph> {
    let mut edges = Vec::new();
    for leg in ["x", "y", "z"] {
        edges.push(("o".to_string(), format!("{leg}1")));
        edges.push((format!("{leg}1"), format!("{leg}2")));
        edges.push((format!("{leg}2"), format!("{leg}3")));
    }
    let vertices = ["o", "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];
    let edges: Vec<(&str, &str)> = edges.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
    blowup(&WeightedGraph::simple(&vertices, &edges)?, &Multiplicity::parse(mult)?)
}

/// Sorted adjacency spectrum the figure prints for `fig10_left`.
pub fn fig10_left_expected() -> Vec<f64> {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let mut v = vec![-r2, -r2, -r2, -r2, r2, r2, r2, r2, 1.0 + r3, 1.0 - r3, -1.0 + r3, -1.0 - r3];
    v.sort_by(f64::total_cmp);
    v
}

/// Sorted adjacency spectrum the figure prints for `fig10_right`.
pub fn fig10_right_expected() -> Vec<f64> {
    let r3 = 3f64.sqrt();
    let (a, b) = ((2.0 + r3).sqrt(), (2.0 - r3).sqrt());
    let mut v = vec![-1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0, a, -a, b, -b];
    v.sort_by(f64::total_cmp);
    v
}

fn fig10_left() -> Result<WeightedGraph> {
    let g = WeightedGraph::simple(
        &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"],
        &[
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "g"),
            ("g", "h"),
            ("h", "i"),
            ("i", "j"),
            ("j", "a"),
            ("a", "b"),
            ("b", "c"),
            ("c", "l"),
            ("l", "g"),
            ("a", "f"),
            ("d", "i"),
            ("l", "k"),
            ("k", "j"),
        ],
    )?;
    let got = eigenvalues_numeric(&g, MatrixKind::Adjacency)?;
    let want = fig10_left_expected();
    if let Some((x, y)) = got.iter().zip(&want).find(|(x, y)| (*x - *y).abs() > FIG10_TOL) {
        return Err(Error::FixtureValidation {
            name: "fig10_left".into(),
            reason: format!("eigenvalue {x} does not match expected {y}"),
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twins::coalesce_all;

    #[test]
    fn catalog_is_complete_and_deterministic() {
        let a = fixtures().unwrap();
        let b = fixtures().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), FIXTURE_NAMES.len());
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn fig6_sizes() {
        for name in ["fig6_left", "fig6_right"] {
            let g = fixture(name).unwrap();
            assert_eq!(g.order(), 26);
            assert_eq!(coalesce_all(&g).unwrap().1, 16);
        }
    }

    #[test]
    fn fig10_shapes() {
        let left = fixture("fig10_left").unwrap();
        assert_eq!((left.order(), left.edge_count()), (12, 16));
        let right = fixture("fig10_right").unwrap();
        let got = eigenvalues_numeric(&right, MatrixKind::Adjacency).unwrap();
        for (x, y) in got.iter().zip(fig10_right_expected()) {
            assert!((x - y).abs() < FIG10_TOL);
        }
    }

    #[test]
    fn fig8_is_twelve_vertices() {
        assert_eq!(fixture("fig8_left").unwrap().order(), 12);
        assert_eq!(fixture("fig8_right").unwrap().order(), 12);
    }
}
