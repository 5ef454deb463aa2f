use std::cmp::Ordering;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mrf_toric::ideal::{Monomial, MonomialOrder};
use mrf_toric::monoid::{
    compare, divides, os_morphisms, phi_iso, pullback, random_matrix, random_os_morphism, ColumnSumMatrix, FinMap,
    OrderedFiniteSet,
};

fn random_map(rng: &mut ChaCha8Rng, s: usize, t: usize) -> FinMap {
    let values = (0..s).map(|_| rng.gen_range(0..t)).collect();
    FinMap::new(OrderedFiniteSet::range(s), OrderedFiniteSet::range(t), values).unwrap()
}

/// Matrix over `[cols]` with the given column sum, entries at most 3.
fn matrix_with_sum(rng: &mut ChaCha8Rng, n: usize, cols: usize, sum: u32) -> ColumnSumMatrix {
    let columns = (0..cols)
        .map(|_| {
            let mut c = vec![0u32; n];
            for _ in 0..sum {
                c[rng.gen_range(0..n)] += 1;
            }
            c
        })
        .collect();
    ColumnSumMatrix::from_columns(n, columns).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pullback_is_functorial(seed in any::<u64>(), r in 1usize..5, s in 1usize..5, t in 1usize..5, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = random_map(&mut rng, r, s);
        let pi = random_map(&mut rng, s, t);
        let alpha = random_matrix(&mut rng, n, t, 3);
        let composed = pi.after(&sigma).unwrap();
        prop_assert_eq!(
            pullback(&composed, &alpha).unwrap(),
            pullback(&sigma, &pullback(&pi, &alpha).unwrap()).unwrap()
        );
        let id = FinMap::identity(alpha.cols());
        prop_assert_eq!(pullback(&id, &alpha).unwrap(), alpha.clone());
        prop_assert_eq!(pullback(&pi, &alpha).unwrap().column_sum(), alpha.column_sum());
    }

    #[test]
    fn os_pullback_is_monotone(seed in any::<u64>(), s in 1usize..=5, t in 1usize..=5, n in 1usize..=3) {
        prop_assume!(t <= s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi = random_os_morphism(&mut rng, s, t).unwrap();
        let sum = rng.gen_range(0..4);
        let a = matrix_with_sum(&mut rng, n, t, sum);
        let b = matrix_with_sum(&mut rng, n, t, sum);
        let lex = MonomialOrder::Lex;
        let before = compare(&a, &b, &lex).unwrap();
        let after = compare(&pullback(&pi, &a).unwrap(), &pullback(&pi, &b).unwrap(), &lex).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn compare_is_multiplicative(seed in any::<u64>(), cols in 1usize..5, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, n, cols, 3);
        let b = random_matrix(&mut rng, n, cols, 3);
        let c = random_matrix(&mut rng, n, cols, 3);
        for base in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let ab = compare(&a, &b, &base).unwrap();
            prop_assert_eq!(ab, compare(&a.add(&c).unwrap(), &b.add(&c).unwrap(), &base).unwrap());
            prop_assert_eq!(ab, compare(&b, &a, &base).unwrap().reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }
    }

    #[test]
    fn division_is_a_quasi_order(seed in any::<u64>(), n in 1usize..=3, t in 1usize..=3, ds in 0usize..=2, dd in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = random_matrix(&mut rng, n, t, 2);
        // reflexive with the identity and γ = 0
        let w = divides(&alpha, &alpha, 10).unwrap().unwrap();
        prop_assert_eq!(w.gamma.column_sum(), 0);

        // β = γ1 + π1*α and δ = γ2 + π2*β
        let s = t + ds;
        let pi1 = random_os_morphism(&mut rng, s, t).unwrap();
        let beta = pullback(&pi1, &alpha).unwrap().add(&random_matrix(&mut rng, n, s, 2)).unwrap();
        let u = s + dd;
        let pi2 = random_os_morphism(&mut rng, u, s).unwrap();
        let delta = pullback(&pi2, &beta).unwrap().add(&random_matrix(&mut rng, n, u, 2)).unwrap();

        let w1 = divides(&alpha, &beta, 10).unwrap().unwrap();
        let w2 = divides(&beta, &delta, 10).unwrap().unwrap();
        prop_assert_eq!(pullback(&w1.pi, &alpha).unwrap().add(&w1.gamma).unwrap(), beta.clone());
        let composed = w1.pi.after(&w2.pi).unwrap();
        prop_assert!(composed.is_os_morphism());
        let gamma = w2.gamma.add(&pullback(&w2.pi, &w1.gamma).unwrap()).unwrap();
        prop_assert_eq!(pullback(&composed, &alpha).unwrap().add(&gamma).unwrap(), delta.clone());
        prop_assert!(divides(&alpha, &delta, 10).unwrap().is_some());
    }

    #[test]
    fn phi_iso_is_multiplicative(a in prop::collection::vec(0u32..3, 8), b in prop::collection::vec(0u32..3, 8)) {
        let (ma, mb) = (Monomial::new(a), Monomial::new(b));
        let lhs = phi_iso(2, 3, &ma.mul(&mb));
        prop_assert_eq!(lhs.clone(), phi_iso(2, 3, &ma).add(&phi_iso(2, 3, &mb)).unwrap());
        prop_assert_eq!(lhs.column_sum(), ma.degree() + mb.degree());
    }
}

#[test]
fn every_listed_os_morphism_is_one() {
    for s in 0..=6 {
        for t in 0..=s {
            let all = os_morphisms(s, t);
            let brute = (0..t.pow(s as u32))
                .filter(|&code| {
                    let mut c = code;
                    let values: Vec<usize> = (0..s).map(|_| { let v = c % t; c /= t; v }).collect();
                    FinMap::new(OrderedFiniteSet::range(s), OrderedFiniteSet::range(t), values).unwrap().is_os_morphism()
                })
                .count();
            assert_eq!(all.len(), brute, "s={s} t={t}");
        }
    }
}
