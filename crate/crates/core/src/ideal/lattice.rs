//! Integer kernels via unimodular row reduction.
//!
//! Generic over the integer type: `BigInt` is the default (intermediate
//! entries can grow), fixed-width types work for small matrices.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait LatticeInt: Integer + Signed + Clone + From<i64> + ToPrimitive + std::fmt::Debug {}
impl<T> LatticeInt for T where T: Integer + Signed + Clone + From<i64> + ToPrimitive + std::fmt::Debug {}

/// A basis of a sublattice of `Z^n`, one vector per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis<T> {
    pub vectors: Vec<Vec<T>>,
}

impl<T: LatticeInt> LatticeBasis<T> {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Converts to machine integers, failing on overflow.
    pub fn to_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| x.to_i64().ok_or_else(|| Error::resource("lattice entry exceeds i64")))
                    .collect()
            })
            .collect()
    }

    /// Canonical row-style Hermite normal form; two bases span the same
    /// lattice iff their forms are equal.
    pub fn hermite_form(&self) -> Vec<Vec<T>> {
        hermite_normal_form(self.vectors.clone())
    }
}

fn sub_multiple<T: LatticeInt>(target: &mut [T], source: &[T], q: &T) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        *t = t.clone() - q.clone() * s.clone();
    }
}

/// Brings `rows` into echelon form using only unimodular row operations on
/// the first `width` columns. Returns the rank (number of leading nonzero rows).
fn echelonize<T: LatticeInt>(rows: &mut [Vec<T>], width: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row >= rows.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column at or below pivot_row
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                let (head, tail) = rows.split_at_mut(r);
                sub_multiple(&mut tail[0], &head[pivot_row], &q);
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !rows[pivot_row][col].is_zero() {
            pivot_row += 1;
        }
    }
    pivot_row
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_normal_form<T: LatticeInt>(mut rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let width = rows.first().map_or(0, Vec::len);
    let rank = echelonize(&mut rows, width);
    rows.truncate(rank);
    let mut col = 0;
    for r in 0..rows.len() {
        while rows[r][col].is_zero() {
            col += 1;
        }
        if rows[r][col].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for above in 0..r {
            let q = rows[above][col].div_floor(&rows[r][col]);
            let (head, tail) = rows.split_at_mut(r);
            sub_multiple(&mut head[above], &tail[0], &q);
        }
        col += 1;
    }
    rows
}

fn l1<T: LatticeInt>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, x| acc + x.abs())
}

/// Greedy pairwise shortening in the L1 norm. Each step is unimodular, so
/// the lattice is unchanged; short vectors give cheaper lattice ideals.
fn shorten<T: LatticeInt>(vectors: &mut [Vec<T>]) {
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..vectors.len() {
            for j in 0..vectors.len() {
                if i == j {
                    continue;
                }
                for sign in [T::one(), -T::one()] {
                    let cand: Vec<T> = vectors[i]
                        .iter()
                        .zip(&vectors[j])
                        .map(|(a, b)| a.clone() + sign.clone() * b.clone())
                        .collect();
                    if l1(&cand) < l1(&vectors[i]) {
                        vectors[i] = cand;
                        improved = true;
                    }
                }
            }
        }
    }
}

/// Basis of `{v in Z^ncols : A v = 0}` for an integer matrix given by rows.
pub fn integer_kernel_of<T: LatticeInt>(rows: &[Vec<T>], ncols: usize) -> LatticeBasis<T> {
    let m = rows.len();
    // one row per column of A: [A^T row | identity row]
    let mut work: Vec<Vec<T>> = (0..ncols)
        .map(|c| {
            let mut row: Vec<T> = rows.iter().map(|r| r[c].clone()).collect();
            row.extend((0..ncols).map(|k| if k == c { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut work, m);
    let kernel: Vec<Vec<T>> = work[rank..].iter().map(|r| r[m..].to_vec()).collect();
    let mut vectors = hermite_normal_form(kernel);
    shorten(&mut vectors);
    LatticeBasis { vectors }
}

/// Short basis of the lattice generated by `generators`.
pub fn lattice_basis_of<T: LatticeInt>(generators: Vec<Vec<T>>) -> LatticeBasis<T> {
    let mut vectors = hermite_normal_form(generators);
    shorten(&mut vectors);
    LatticeBasis { vectors }
}

/// Integer kernel of a nonnegative matrix with arbitrary-precision arithmetic.
pub fn integer_kernel(entries: &[Vec<u32>], ncols: usize) -> LatticeBasis<num_bigint::BigInt> {
    let rows: Vec<Vec<num_bigint::BigInt>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| num_bigint::BigInt::from(x)).collect())
        .collect();
    integer_kernel_of(&rows, ncols)
}
