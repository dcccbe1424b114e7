//! Exact tools for graphs that share a normalized-Laplacian spectrum.
//!
//! Graphs carry nonnegative rational vertex and edge weights. Characteristic
//! polynomials are computed exactly over the rationals; eigenvectors and
//! irrational eigenvalues come from a Jacobi solver on the symmetric
//! normalized Laplacian.
//!
//! ```
//! use twinscale::{cospectral, fixture, MatrixKind};
//!
//! let left = fixture("fig2_left").unwrap();
//! let right = fixture("fig2_right").unwrap();
//! assert!(cospectral(&left, &right, MatrixKind::Normalized).unwrap());
//! ```

pub mod alpha;
pub mod charpoly;
pub mod constructions;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod spectra;
pub mod twins;

pub use alpha::{alpha_cospectral_check, estimate_alpha, AlphaMode, AlphaVerdict};
pub use charpoly::char_poly_exact;
pub use constructions::{
    blowup, blowup_pair_valid, family_charpoly_closed, family_coalesced, family_subgraph1, family_subgraph2, fixture,
    fixtures, scaled_isomorphism, theorem3_check, theorem3_witness, Family, FamilyVariant, Multiplicity,
    ScaledIsomorphism,
};
pub use eigen::{symmetric_eigen, SymmetricEigen};
pub use error::{Error, Result};
pub use graph::{GraphBuilder, VertexId, WeightedGraph};
pub use io::{parse_graph, write_graph, NamedGraph};
pub use matrix::{build_matrix, exact_matrix, normalized_laplacian, GraphMatrix, MatrixKind, RationalMatrix, RealMatrix};
pub use poly::{CharPoly, Poly};
pub use rational::{format_rational, parse_rational, Rational};
pub use spectra::{char_poly, cospectral, eigenvalues_numeric, spectrum_json, symmetric_decomposition};
pub use twins::{
    coalesce_all, coalesce_class, decomposition_check, hat_subgraph, quotient_graph, twin_check, twin_classes,
    verify_twin_subgraphs, HarmonicVector, TwinClass, TwinSubgraphWitness, WitnessFile,
};
