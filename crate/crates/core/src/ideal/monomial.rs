use std::fmt;

/// Dense exponent vector over a fixed, ordered variable set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// Bit `v % 64` is set when variable `v` occurs; a cheap divisibility filter.
    pub fn mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }

    /// `self / divisor * factor` without the intermediate allocation.
    pub(crate) fn replace(&mut self, divisor: &Monomial, factor: &Monomial) {
        for ((e, &d), &f) in self.exps.iter_mut().zip(&divisor.exps).zip(&factor.exps) {
            *e = (*e - d).checked_add(f).expect("exponent overflow");
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        // perm[old] = new
        let mut exps = vec![0; self.exps.len()];
        for (old, &e) in self.exps.iter().enumerate() {
            exps[perm[old]] = e;
        }
        Monomial { exps }
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u32] {
        &mut self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(b.div(&a), Some(Monomial::new(vec![0, 1, 1])));
        assert_eq!(a.div(&b), None);
        assert!(Monomial::new(vec![1, 0, 0]).is_coprime(&Monomial::new(vec![0, 2, 1])));
    }

    #[test]
    fn replace_matches_div_mul() {
        let mut m = Monomial::new(vec![2, 1, 0]);
        let d = Monomial::new(vec![1, 1, 0]);
        let f = Monomial::new(vec![0, 0, 3]);
        let expected = m.div(&d).unwrap().mul(&f);
        m.replace(&d, &f);
        assert_eq!(m, expected);
    }
}
