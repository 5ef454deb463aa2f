use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, MonomialOrder};

/// The polynomial `x^plus - x^minus`.
///
/// Toric generators have disjoint supports, but intermediate Gröbner basis
/// elements and saturation inputs may share a factor, so that is not enforced.
/// Once oriented for an order, `plus` is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Self {
        assert_eq!(plus.nvars(), minus.nvars(), "binomial terms over different rings");
        Binomial { plus, minus }
    }

    /// Binomial of an integer move `v = v+ - v-`.
    pub fn from_move(v: &[i64]) -> Self {
        let plus = v.iter().map(|&x| x.max(0) as u32).collect();
        let minus = v.iter().map(|&x| (-x).max(0) as u32).collect();
        Binomial::new(Monomial::new(plus), Monomial::new(minus))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn lead(&self) -> &Monomial {
        &self.plus
    }

    pub fn trail(&self) -> &Monomial {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    pub fn has_disjoint_support(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    pub fn negated(&self) -> Self {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// `plus - minus` as an integer vector.
    pub fn exponent_difference(&self) -> Vec<i64> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// Orders the terms so that `plus` leads; `None` for the zero binomial.
    pub fn oriented(self, order: &MonomialOrder) -> Option<Self> {
        match order.cmp(&self.plus, &self.minus) {
            Ordering::Greater => Some(self),
            Ordering::Less => Some(self.negated()),
            Ordering::Equal => None,
        }
    }

    /// Order-independent sign normalization: `plus` is the larger term in the
    /// plain lexicographic comparison of exponent vectors.
    pub fn canonical(&self) -> Self {
        if self.plus >= self.minus {
            self.clone()
        } else {
            self.negated()
        }
    }

    /// Divides out `gcd(plus, minus)`.
    pub fn without_common_factor(&self) -> Self {
        let g = self.plus.gcd(&self.minus);
        Binomial {
            plus: self.plus.div(&g).expect("gcd divides"),
            minus: self.minus.div(&g).expect("gcd divides"),
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Binomial { plus: self.plus.permuted(perm), minus: self.minus.permuted(perm) }
    }

    /// Evaluates both terms at a point and returns `(plus, minus)`.
    pub fn evaluate<T: crate::scalar::Scalar>(&self, point: &[T]) -> (T, T) {
        let eval = |m: &Monomial| {
            m.exponents()
                .iter()
                .zip(point)
                .fold(T::one(), |acc, (&e, x)| acc * crate::scalar::pow(x, e))
        };
        (eval(&self.plus), eval(&self.minus))
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.plus, self.minus)
    }
}

/// A polynomial with integer coefficients, kept only so that non-binomial
/// input can be recognized and rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(i64, Monomial)>,
}

impl Polynomial {
    /// Combines like terms and drops zeros.
    pub fn new(terms: Vec<(i64, Monomial)>) -> Self {
        let mut combined: Vec<(i64, Monomial)> = Vec::new();
        for (c, m) in terms {
            match combined.iter_mut().find(|(_, n)| *n == m) {
                Some(entry) => entry.0 += c,
                None => combined.push((c, m)),
            }
        }
        combined.retain(|(c, _)| *c != 0);
        combined.sort_by(|a, b| b.1.cmp(&a.1));
        Polynomial { terms: combined }
    }

    pub fn terms(&self) -> &[(i64, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some` when this is `m1 - m2` with unit coefficients (or zero).
    pub fn as_binomial(&self, nvars: usize) -> Option<Binomial> {
        match self.terms.as_slice() {
            [] => Some(Binomial::new(Monomial::one(nvars), Monomial::one(nvars))),
            [(1, a), (-1, b)] => Some(Binomial::new(a.clone(), b.clone())),
            [(-1, a), (1, b)] => Some(Binomial::new(b.clone(), a.clone())),
            _ => None,
        }
    }

    /// Value at the all-one point: the sum of the coefficients.
    pub fn value_at_ones(&self) -> i64 {
        self.terms.iter().map(|(c, _)| c).sum()
    }
}

impl From<&Binomial> for Polynomial {
    fn from(b: &Binomial) -> Self {
        Polynomial::new(vec![(1, b.plus.clone()), (-1, b.minus.clone())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn move_roundtrip() {
        let b = Binomial::from_move(&[1, -1, -1, 1]);
        assert_eq!(b.plus().exponents(), &[1, 0, 0, 1]);
        assert_eq!(b.minus().exponents(), &[0, 1, 1, 0]);
        assert_eq!(b.exponent_difference(), vec![1, -1, -1, 1]);
        assert!(b.has_disjoint_support());
        assert!(b.is_homogeneous());
    }

    #[test]
    fn orientation_and_zero() {
        let b = Binomial::from_move(&[0, 1, -1]);
        let o = b.clone().oriented(&MonomialOrder::Lex).unwrap();
        assert_eq!(o.lead().exponents(), &[0, 1, 0]);
        let z = Binomial::new(Monomial::new(vec![1, 1]), Monomial::new(vec![1, 1]));
        assert!(z.is_zero());
        assert!(z.oriented(&MonomialOrder::Grevlex).is_none());
    }

    #[test]
    fn common_factor_removed() {
        let b = Binomial::new(Monomial::new(vec![1, 1, 0]), Monomial::new(vec![1, 0, 1]));
        assert!(!b.has_disjoint_support());
        assert_eq!(b.without_common_factor(), Binomial::from_move(&[0, 1, -1]));
    }

    #[test]
    fn polynomial_recognizes_binomials() {
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let p = Polynomial::new(vec![(1, x.clone()), (-2, y.clone())]);
        assert!(p.as_binomial(2).is_none());
        assert_eq!(p.value_at_ones(), -1);
        let q = Polynomial::new(vec![(-1, y), (1, x)]);
        assert!(q.as_binomial(2).is_some());
    }
}
