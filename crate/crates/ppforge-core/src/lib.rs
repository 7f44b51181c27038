//! Exact structure-constant toolkit for Zinbiel, pre-Lie, Poisson and
//! pre-Poisson algebras, their bialgebras, r-matrices and Rota–Baxter operators.
//!
//! All scalars are exact rationals. An algebra of dimension `n` is a table
//! `c[i][j][k]` with `e_i # e_j = sum_k c[i][j][k] e_k`.

pub mod algebras;
pub mod bialgebra;
pub mod catalog;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod report;
pub mod representations;
pub mod rota_baxter;
pub mod yang_baxter;

pub use algebras::{Algebra, AlgebraKind, MultTable, PoissonAlgebra, PrePoissonAlgebra};
pub use bialgebra::{Cobracket, PrePoissonBialgebra};
pub use error::{Error, Result};
pub use geometry::{BilinearForm, SplitDecoration};
pub use linalg::{LinearMap, Matrix, Scalar, Tensor2, Tensor3, Vector};
pub use report::{CheckReport, Violation};
pub use representations::{Action, PoissonRep, PrePoissonRep};
pub use rota_baxter::{QuadraticRBPrePoisson, RBSymplecticPoisson};
pub use yang_baxter::{RClassification, RMatrix};
