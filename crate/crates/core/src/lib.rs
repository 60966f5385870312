//! Exact computations in the Kazhdan–Lusztig category of affine `gl(1|1)`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`symbolic`]: rationals, multivariate parameter fields, univariate rational
//!   functions and truncated Jacobi series in `(q, z, y)`.
//! - [`oracle`]: explicit matrix realisations of finite-dimensional `gl(1|1)`-modules
//!   and a brute-force tensor decomposition used to cross-check fusion.
//! - [`labels`]: module labels, conformal weights, spectral flow, contragredients and
//!   Grothendieck-group composition factors.
//! - [`fusion`]: fusion products of simple and projective modules.
//! - [`characters`]: Jacobi-variable characters.
//! - [`kz`]: the KZ-derived ODE, its hypergeometric reduction and the rigidity constant.
//! - [`extensions`]: simple current extensions to `sl(2|1)` at levels `-1/2` and `1`.
//! - [`text`]: canonical text form of labels.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod extensions;
pub mod fusion;
pub mod kz;
pub mod labels;
pub mod oracle;
pub mod symbolic;
pub mod text;

pub use error::{Error, Result};
pub use labels::{FormalSum, LabelKind, ModuleLabel};

pub use symbolic::rational::Rational;
