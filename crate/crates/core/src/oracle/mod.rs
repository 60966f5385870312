//! Finite-dimensional `gl(1|1)`-modules as explicit matrices, used as an
//! independent check on the label-level fusion rules and on `L_0`.

pub mod algebra;
pub mod decompose;
pub mod matrix;
pub mod module;

pub use algebra::{apply_automorphism, Basis, Element, Gl11Algebra};
pub use decompose::{decompose, statistics, EigenStats, Statistics};
pub use matrix::QMatrix;
pub use module::{l0_top_matrix, realize, tensor, FinLabel, Gl11MatrixModule};
