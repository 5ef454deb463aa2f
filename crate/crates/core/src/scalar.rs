//! Field-agnostic evaluation of monomial maps.
//!
//! Everything combinatorial in this crate is exact integer arithmetic; the
//! only place a field shows up is when a parameterization is evaluated at a
//! point. That evaluation is generic over [`Scalar`], so the same code runs
//! over `f64` for quick numerics and over `BigRational` for exact checks.

use std::fmt::Debug;

use num_traits::{One, Zero};

pub trait Scalar: Clone + Debug + PartialEq + Zero + One + std::ops::Mul<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Zero + One + std::ops::Mul<Output = T> {}

/// Entrywise product of two points of the same length.
pub fn hadamard<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    assert_eq!(a.len(), b.len(), "hadamard product of mismatched lengths");
    a.iter().zip(b).map(|(x, y)| x.clone() * y.clone()).collect()
}

/// `x^e` by repeated multiplication; exponents here are tiny.
pub fn pow<T: Scalar>(x: &T, e: u32) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc * x.clone();
    }
    acc
}

pub fn all_ones<T: Scalar>(len: usize) -> Vec<T> {
    vec![T::one(); len]
}
