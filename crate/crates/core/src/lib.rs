//! Spectral degree-sum bounds for simple graphs.
//!
//! The crate builds graphs (including the two-hub families `H(p,r,s)` and
//! `G(p,r,s)` and the star-plus-edge graph), computes adjacency, Laplacian
//! and signless Laplacian spectra with a dense Jacobi solver, derives exact
//! characteristic polynomials of equitable-partition quotient matrices, and
//! checks the inequalities
//!
//! ```text
//! mu_1 + ... + mu_k >= d_1 + ... + d_k + 1      (Laplacian)
//!  q_1 + ... +  q_k >= d_1 + ... + d_k + 1      (signless Laplacian)
//! ```
//!
//! either on single graphs, over parametric families, or exhaustively over
//! every labeled connected graph of small order.
//!
//! With the default `parallel` feature the exhaustive and family sweeps are
//! spread over a rayon pool; without it every sweep runs serially.

pub mod bounds;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod polynomial;
pub mod printed;
pub mod quotient;
pub mod search;
pub mod spectra;

pub use bounds::{BoundKind, BoundReport, EqualityClass, Expectation, Verdict};
pub use error::{Error, Result};
pub use families::FamilyParams;
pub use graph::{DegreeSequence, Graph};
pub use polynomial::{IntPolynomial, Rational};
pub use quotient::{QuotientFamily, QuotientMatrix};
pub use spectra::{MatrixKind, Spectrum, SymMatrix};
