//! Plethystic and Faà di Bruno bialgebras over exact rationals.
//!
//! Comultiplications are computed twice — by substituting generic power
//! series and by counting automorphism-weighted decompositions — and the two
//! are checked against each other and against the surjection-diagram model.

pub mod arith;
pub mod base;
pub mod error;
pub mod incidence;
pub mod json;
pub mod operad;
pub mod series;
pub mod shape;
pub mod surjections;

pub use arith::{factorial, Rational};
pub use base::{Arrow, BaseCategory, FiniteCategory, ObjectId};
pub use error::{Error, Result};
pub use shape::{AutFlavor, Generator, Lambda, Shape, ShapeKind, Word};
