//! Toric ideals of Markov random fields, their Markov bases, and toric fibre
//! products of graphical models glued along a common subgraph.

pub mod budget;
pub mod error;
pub mod fiberwalk;
pub mod graphs;
pub mod ideal;
pub mod io;
pub mod model;
pub mod monoid;
pub mod scalar;
pub mod stabilize;
pub mod tfp;

pub use budget::Budget;
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rationals for evaluating parameterizations and Hadamard products.
pub type Rational = num_rational::BigRational;
/// Lattice bases with unbounded entries, as produced by [`ideal::integer_kernel`].
pub type BigLattice = ideal::LatticeBasis<num_bigint::BigInt>;
/// Lattice bases with machine-word entries.
pub type SmallLattice = ideal::LatticeBasis<i64>;
