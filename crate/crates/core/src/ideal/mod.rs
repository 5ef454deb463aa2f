//! Exact binomial ideal arithmetic: monomial orders, Buchberger, integer
//! kernels, saturation, Markov bases and minimal generating sets.

mod binomial;
mod groebner;
pub mod lattice;
mod markov;
mod monomial;
mod order;
mod saturate;
pub mod text;
mod variables;

pub use binomial::{Binomial, Polynomial};
pub use groebner::{buchberger, ideal_equal, GroebnerBasis};
pub use lattice::{integer_kernel, integer_kernel_of, lattice_basis_of, LatticeBasis};
pub use markov::{fiber_moves, histogram, lattice_basis_ideal, lattice_markov_basis, markov_basis, minimalize, DegreeHistogram, MarkovBasis, MarkovOptions};
pub use monomial::Monomial;
pub use order::{InnerOrder, MonomialOrder};
pub use saturate::{is_saturated, saturate, saturate_all, saturate_by, Saturation};
pub use variables::VariableSet;
