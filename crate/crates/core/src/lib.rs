//! Exact computations around the stratification of classical Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, sparse multivariate polynomials, polynomial matrices
//!   and their characteristic polynomials.
//! * [`rootsys`]: root systems in simple-root coordinates, Weyl groups, primitive
//!   degrees and closed symmetric root subsets.
//! * [`liealg`]: matrix models of the classical algebras, the discriminant of
//!   `ad(X)`, invariant vector fields and the Chevalley restriction.
//! * [`weylalg`]: a normal-ordered Weyl algebra, weighted V-orders and b-functions
//!   at the origin for constant-symbol systems.
//! * [`orbits`]: nilpotent orbits by partitions with their sl2 weight data.
//! * [`strata`]: strata of the Jordan stratification with quasi-b-functions and
//!   the tameness report.

pub mod bfunction;
pub mod error;
pub mod exactalg;
pub mod limits;
pub mod liealg;
pub mod orbits;
pub mod rootsys;
pub mod strata;
pub mod weylalg;

pub use bfunction::{BFunction, BKind};
pub use error::{Error, Result};
pub use exactalg::{MultiPoly, PolyMatrix, Rational};
pub use limits::Limits;
pub use liealg::LieAlgebraRealization;
pub use orbits::{NilpotentOrbit, Partition};
pub use rootsys::{RootSubset, RootSystem, WeylGroup};
pub use strata::{Stratum, TamenessReport};
pub use weylalg::{WeightVector, WeylOp};
