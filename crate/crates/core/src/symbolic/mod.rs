//! Exact arithmetic substrate.

pub mod field;
pub mod jacobi;

pub mod mpoly;
pub mod param;
pub mod ratfun;
pub mod rational;
pub mod upoly;

pub use field::Field;
pub use jacobi::JacobiSeries;

pub use mpoly::MPoly;
pub use param::{Param, ParamField};
pub use ratfun::{RatFun, RationalFunction};
pub use rational::Rational;
pub use upoly::UPoly;
