//! Exact arithmetic for shifted lattice vertex operator algebras `V_{L,h}`.
//!
//! * [`lattice`]: even positive-definite lattices, duals, discriminant groups,
//!   short-vector enumeration.
//! * [`qseries`]: truncated `q`-series with rational exponents, eta powers,
//!   theta functions of lattice cosets.
//! * [`voa`]: the shifted grading, spectra, partition functions, duality and
//!   the type classification.
//! * [`fock`]: explicit Heisenberg and Virasoro actions on `M(1) ⊗ C[L]`.
//!
//! Lattice data, shifts and `q`-exponents are always exact rationals; series
//! and Fock coefficients are generic over [`Scalar`].

pub mod error;
pub mod fock;
pub mod lattice;
pub mod linalg;
pub mod qseries;
pub mod scalar;
pub mod voa;

pub use error::{Error, Result};
pub use lattice::{DiscriminantGroup, Lattice, LatticeVector, NamedLattice, RationalVector};
pub use scalar::{Rational, Scalar};
pub use voa::{GradeValue, ShiftedVoa, TypeLabel, TypeRecord};

/// Exact `q`-series.
pub type QSeries = qseries::Series<Rational>;
/// Exact Fock-space vector.
pub type FockVector = fock::FockVec<Rational>;
