//! Fibers `{t ≥ 0 : A·t = b}` of contingency tables, connectivity under a
//! set of moves, and a uniform random walk on a fiber.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Binomial;

/// Cell counts indexed by global configuration.
pub type Table = Vec<i64>;

pub const DEFAULT_FIBER_LIMIT: usize = 10_000;

pub fn margins(a: &[Vec<u32>], t: &[i64]) -> Vec<i64> {
    a.iter().map(|r| r.iter().zip(t).map(|(&x, &y)| x as i64 * y).sum()).collect()
}

fn ncols(a: &[Vec<u32>]) -> usize {
    a.first().map_or(0, Vec::len)
}

/// All nonnegative integer `t` with `A·t = b`, in lexicographic order.
pub fn enumerate_fiber(a: &[Vec<u32>], b: &[i64], limit: usize) -> Result<Vec<Table>> {
    let n = ncols(a);
    if b.len() != a.len() {
        return Err(Error::validation(format!("{} margins for {} rows", b.len(), a.len())));
    }
    if b.iter().any(|&x| x < 0) {
        return Ok(Vec::new());
    }
    if let Some(c) = (0..n).find(|&c| a.iter().all(|r| r[c] == 0)) {
        return Err(Error::validation(format!("column {c} is zero, so every nonempty fiber is infinite")));
    }
    // covers[c][r]: some column ≥ c touches row r
    let mut covers = vec![vec![false; a.len()]; n + 1];
    for c in (0..n).rev() {
        covers[c] = covers[c + 1].clone();
        for (r, row) in a.iter().enumerate() {
            covers[c][r] |= row[c] > 0;
        }
    }
    struct Search<'a> {
        a: &'a [Vec<u32>],
        covers: Vec<Vec<bool>>,
        limit: usize,
        out: Vec<Table>,
    }
    impl Search<'_> {
        fn go(&mut self, c: usize, t: &mut Table, rest: &mut [i64]) -> Result<()> {
            if rest.iter().zip(&self.covers[c]).any(|(&x, &cov)| x > 0 && !cov) {
                return Ok(());
            }
            if c == t.len() {
                if self.out.len() == self.limit {
                    return Err(Error::resource(format!("fiber has more than {} tables", self.limit)));
                }
                self.out.push(t.clone());
                return Ok(());
            }
            let max = self
                .a
                .iter()
                .zip(rest.iter())
                .filter(|(r, _)| r[c] > 0)
                .map(|(r, &x)| x / r[c] as i64)
                .min()
                .unwrap_or(0);
            for k in 0..=max {
                t[c] = k;
                for (r, row) in self.a.iter().enumerate() {
                    rest[r] -= k * row[c] as i64;
                }
                let res = self.go(c + 1, t, rest);
                for (r, row) in self.a.iter().enumerate() {
                    rest[r] += k * row[c] as i64;
                }
                res?;
            }
            t[c] = 0;
            Ok(())
        }
    }
    let mut s = Search { a, covers, limit, out: Vec::new() };
    s.go(0, &mut vec![0; n], &mut b.to_vec())?;
    Ok(s.out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
    pub size: usize,
}

fn move_vectors(a: &[Vec<u32>], moves: &[Binomial]) -> Result<Vec<Vec<i64>>> {
    let n = ncols(a);
    moves
        .iter()
        .map(|m| {
            if m.nvars() != n {
                return Err(Error::validation(format!("move over {} variables, table has {n} cells", m.nvars())));
            }
            let v = m.exponent_difference();
            if margins(a, &v).iter().any(|&x| x != 0) {
                return Err(Error::validation("move is not in the kernel of the matrix"));
            }
            Ok(v)
        })
        .filter(|v| !matches!(v, Ok(v) if v.iter().all(|&x| x == 0)))
        .collect()
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Components of the graph on the fiber with edges `t ~ t ± v`.
pub fn fiber_connected(a: &[Vec<u32>], b: &[i64], moves: &[Binomial], limit: usize) -> Result<Connectivity> {
    let vs = move_vectors(a, moves)?;
    let members = enumerate_fiber(a, b, limit)?;
    let index: HashMap<&Table, usize> = members.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut parent: Vec<usize> = (0..members.len()).collect();
    let mut components = members.len();
    for (i, t) in members.iter().enumerate() {
        for v in &vs {
            // t - v is reached from the other endpoint's t + v
            let s: Table = t.iter().zip(v).map(|(x, y)| x + y).collect();
            if let Some(&j) = index.get(&s) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                    components -= 1;
                }
            }
        }
    }
    Ok(Connectivity { connected: components <= 1, components, size: members.len() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkOptions {
    pub steps: usize,
    pub seed: u64,
    /// Keep every `thin`-th state (after the start).
    pub thin: usize,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions { steps: 1000, seed: 0, thin: 1 }
    }
}

/// Symmetric random walk with uniform target: pick a move and a sign
/// uniformly, apply it if the table stays nonnegative, else stay.
pub fn mcmc_walk(a: &[Vec<u32>], start: &[i64], moves: &[Binomial], options: &WalkOptions) -> Result<Vec<Table>> {
    if start.len() != ncols(a) || start.iter().any(|&x| x < 0) {
        return Err(Error::validation("start must be a nonnegative table with one entry per column"));
    }
    if options.thin == 0 {
        return Err(Error::validation("thinning interval must be positive"));
    }
    let vs = move_vectors(a, moves)?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut t = start.to_vec();
    let mut out = vec![t.clone()];
    for step in 1..=options.steps {
        if !vs.is_empty() {
            let v = &vs[rng.gen_range(0..vs.len())];
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            if t.iter().zip(v).all(|(x, y)| x + sign * y >= 0) {
                for (x, y) in t.iter_mut().zip(v) {
                    *x += sign * y;
                }
            }
        }
        if step % options.thin == 0 {
            out.push(t.clone());
        }
    }
    Ok(out)
}

/// `total` observations placed uniformly at random in the cells.
pub fn random_table<R: Rng>(rng: &mut R, ncols: usize, total: usize) -> Table {
    let mut t = vec![0; ncols];
    for _ in 0..total {
        t[rng.gen_range(0..ncols)] += 1;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn independence() -> Vec<Vec<u32>> {
        vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
    }

    fn quadric() -> Binomial {
        Binomial::from_move(&[1, -1, -1, 1])
    }

    #[test]
    fn independence_fiber() {
        let a = independence();
        let b = margins(&a, &[1, 1, 1, 1]);
        let f = enumerate_fiber(&a, &b, 100).unwrap();
        assert_eq!(f, vec![vec![0, 2, 2, 0], vec![1, 1, 1, 1], vec![2, 0, 0, 2]]);
        assert_eq!(enumerate_fiber(&a, &[0; 4], 10).unwrap(), vec![vec![0; 4]]);
        assert!(enumerate_fiber(&a, &b, 2).unwrap_err().is_resource());
    }

    #[test]
    fn injective_matrix_gives_singleton() {
        let a = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(enumerate_fiber(&a, &[3, 2], 10).unwrap(), vec![vec![3, 2]]);
    }

    #[test]
    fn connectivity() {
        let a = independence();
        let b = margins(&a, &[1, 1, 1, 1]);
        let c = fiber_connected(&a, &b, &[quadric()], 100).unwrap();
        assert_eq!(c, Connectivity { connected: true, components: 1, size: 3 });
        let c = fiber_connected(&a, &b, &[], 100).unwrap();
        assert_eq!(c.components, 3);
        assert!(fiber_connected(&a, &margins(&a, &[1, 0, 0, 0]), &[], 10).unwrap().connected);
        let bad = Binomial::from_move(&[1, -1, 0, 0]);
        assert!(fiber_connected(&a, &b, &[bad], 100).is_err());
    }

    #[test]
    fn walks() {
        let a = independence();
        let start = vec![1, 1, 1, 1];
        let opts = WalkOptions { steps: 0, seed: 1, thin: 1 };
        assert_eq!(mcmc_walk(&a, &start, &[quadric()], &opts).unwrap(), vec![start.clone()]);
        let opts = WalkOptions { steps: 50, seed: 1, thin: 1 };
        let still = mcmc_walk(&a, &start, &[], &opts).unwrap();
        assert_eq!(still.len(), 51);
        assert!(still.iter().all(|t| *t == start));
        let w1 = mcmc_walk(&a, &start, &[quadric()], &opts).unwrap();
        assert_eq!(w1, mcmc_walk(&a, &start, &[quadric()], &opts).unwrap());
        let b = margins(&a, &start);
        assert!(w1.iter().all(|t| margins(&a, t) == b));
        let thinned = mcmc_walk(&a, &start, &[quadric()], &WalkOptions { thin: 10, ..opts }).unwrap();
        assert_eq!(thinned.len(), 6);
        assert_eq!(thinned[5], w1[50]);
    }
}
