use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerOrder {
    Grevlex,
    Lex,
}

/// A monomial order on exponent vectors. Variable 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// The first `block` variables are eliminated: monomials are compared by
    /// `inner` on that block first and by `inner` on the rest on ties.
    Elimination { block: usize, inner: InnerOrder },
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn cmp_inner(inner: InnerOrder, a: &[u32], b: &[u32]) -> Ordering {
    match inner {
        InnerOrder::Grevlex => cmp_grevlex(a, b),
        InnerOrder::Lex => cmp_lex(a, b),
    }
}

impl MonomialOrder {
    pub fn elimination(block: usize) -> Self {
        MonomialOrder::Elimination { block, inner: InnerOrder::Grevlex }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Elimination { block, inner } => {
                let k = (*block).min(a.len());
                cmp_inner(*inner, &a[..k], &b[..k])
                    .then_with(|| cmp_inner(*inner, &a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block, inner } => {
                format!("elim({block},{})", if *inner == InnerOrder::Lex { "lex" } else { "grevlex" })
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2, and degree dominates
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // x1x3 vs x2^2 in grevlex: x2^2 > x1x3 (last variable penalized)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let orders = [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::elimination(2),
            MonomialOrder::Elimination { block: 1, inner: InnerOrder::Lex },
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let gen = |rng: &mut ChaCha8Rng| m(&(0..4).map(|_| rng.gen_range(0..4)).collect::<Vec<_>>());
        for order in &orders {
            for _ in 0..10_000 {
                let (u, v, w) = (gen(&mut rng), gen(&mut rng), gen(&mut rng));
                let c = order.cmp(&u, &v);
                assert_eq!(c, order.cmp(&v, &u).reverse());
                assert_eq!(c == Ordering::Equal, u == v);
                assert_eq!(order.cmp(&u.mul(&w), &v.mul(&w)), c, "{order} not multiplicative");
            }
        }
    }
}
