use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::groebner::Engine;
use super::lattice::{hermite_normal_form, integer_kernel};
use super::saturate::saturate_by;
use super::{Binomial, Monomial, MonomialOrder};
use crate::budget::Budget;
use crate::error::Result;

/// Number of generators per degree.
pub type DegreeHistogram = BTreeMap<u32, usize>;

pub fn histogram(gens: &[Binomial]) -> DegreeHistogram {
    let mut h = DegreeHistogram::new();
    for g in gens {
        *h.entry(g.degree()).or_default() += 1;
    }
    h
}

#[derive(Clone, Debug)]
pub struct MarkovBasis {
    /// Minimal generating set of the toric ideal, grevlex-oriented, sorted.
    pub gens: Vec<Binomial>,
    pub histogram: DegreeHistogram,
    pub lattice_rank: usize,
    /// Set when a degree limit cut some Gröbner computation short.
    pub truncated: bool,
}

impl MarkovBasis {
    /// Largest generator degree ("Markov degree"); `None` for the zero ideal.
    pub fn max_degree(&self) -> Option<u32> {
        self.histogram.keys().next_back().copied()
    }
}

#[derive(Clone, Debug)]
pub struct MarkovOptions {
    /// Run a second saturation sweep and assert nothing changes.
    pub verify_fixed_point: bool,
    /// Fiber moves are precomputed up to this degree, as long as a degree
    /// has at most `seed_monomial_limit` monomials.
    pub seed_degree: u32,
    pub seed_monomial_limit: usize,
}

impl Default for MarkovOptions {
    fn default() -> Self {
        MarkovOptions { verify_fixed_point: false, seed_degree: 6, seed_monomial_limit: 250_000 }
    }
}

fn binomial_coefficient(n: usize, k: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Minimal generators of the toric ideal of degree at most `max_degree`,
/// for a matrix with constant column sums.
///
/// Once every fiber of degree `d - 1` is connected, two monomials of a
/// degree-`d` fiber are joined by lower-degree moves iff they are linked by
/// a chain of monomials sharing a variable. Each further component of the
/// fiber needs one new generator.
pub fn fiber_moves(grading: &[Vec<i64>], ncols: usize, max_degree: u32, monomial_limit: usize) -> Vec<Binomial> {
    let columns: Vec<Vec<i64>> = (0..ncols).map(|c| grading.iter().map(|r| r[c]).collect()).collect();
    let mut out = Vec::new();
    for d in 1..=max_degree as usize {
        match binomial_coefficient(ncols + d - 1, d) {
            Some(count) if count <= monomial_limit => {}
            _ => break,
        }
        let mut fibers: HashMap<Vec<i64>, Vec<Vec<usize>>> = HashMap::new();
        let mut tuple = Vec::with_capacity(d);
        let mut sum = vec![0i64; grading.len()];
        enumerate_monomials(&columns, d, 0, &mut tuple, &mut sum, &mut fibers);
        let mut keys: Vec<&Vec<i64>> = fibers.keys().filter(|k| fibers[*k].len() > 1).collect();
        keys.sort();
        for key in keys {
            let members = &fibers[key];
            let mut parent: Vec<usize> = (0..members.len()).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            let mut first_with: HashMap<usize, usize> = HashMap::new();
            for (i, m) in members.iter().enumerate() {
                for &v in m {
                    let j = *first_with.entry(v).or_insert(i);
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
            let to_monomial = |t: &[usize]| {
                let mut e = vec![0u32; ncols];
                for &v in t {
                    e[v] += 1;
                }
                Monomial::new(e)
            };
            for i in 1..members.len() {
                if find(&mut parent, i) == i {
                    out.push(Binomial::new(to_monomial(&members[0]), to_monomial(&members[i])));
                }
            }
        }
    }
    out
}

fn enumerate_monomials(
    columns: &[Vec<i64>],
    remaining: usize,
    start: usize,
    tuple: &mut Vec<usize>,
    sum: &mut Vec<i64>,
    fibers: &mut HashMap<Vec<i64>, Vec<Vec<usize>>>,
) {
    if remaining == 0 {
        fibers.entry(sum.clone()).or_default().push(tuple.clone());
        return;
    }
    for v in start..columns.len() {
        tuple.push(v);
        sum.iter_mut().zip(&columns[v]).for_each(|(s, c)| *s += c);
        enumerate_monomials(columns, remaining - 1, v, tuple, sum, fibers);
        sum.iter_mut().zip(&columns[v]).for_each(|(s, c)| *s -= c);
        tuple.pop();
    }
}

/// Binomials `x^{v+} - x^{v-}` of a lattice basis.
pub fn lattice_basis_ideal(kernel: &[Vec<i64>]) -> Vec<Binomial> {
    kernel.iter().map(|v| Binomial::from_move(v)).collect()
}

/// Minimal binomial generating set of the toric ideal of a nonnegative
/// integer matrix: integer kernel, lattice-basis ideal, saturation by every
/// variable, then minimalization.
pub fn markov_basis(
    entries: &[Vec<u32>],
    ncols: usize,
    options: &MarkovOptions,
    budget: &Budget,
) -> Result<MarkovBasis> {
    budget.check_variables(ncols)?;
    let kernel = integer_kernel(entries, ncols).to_i64()?;
    let column_sums: BTreeSet<u32> = (0..ncols).map(|c| entries.iter().map(|r| r[c]).sum()).collect();
    let graded = column_sums.len() == 1 && !column_sums.contains(&0);
    let grading: Vec<Vec<i64>> = entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    lattice_markov_basis(ncols, &kernel, graded.then_some(&grading[..]), options, budget)
}

/// Minimal generating set of the lattice ideal of the lattice spanned by
/// `kernel`.
///
/// `grading`, when given, must be a matrix whose integer kernel is exactly
/// that lattice and whose row space contains the all-one vector; it is used
/// to precompute low-degree moves from fibers.
pub fn lattice_markov_basis(
    nvars: usize,
    kernel: &[Vec<i64>],
    grading: Option<&[Vec<i64>]>,
    options: &MarkovOptions,
    budget: &Budget,
) -> Result<MarkovBasis> {
    budget.check_variables(nvars)?;
    let lattice_rank = kernel.len();
    let mut start = lattice_basis_ideal(kernel);
    let (basis, vars) = saturation_basis(nvars, kernel);
    start.extend(lattice_basis_ideal(&basis));
    if let (Some(grading), true) = (grading, lattice_rank > 0) {
        // these lie in the lattice ideal, so the saturation is unchanged;
        // they keep the intermediate Gröbner bases small
        start.extend(fiber_moves(grading, nvars, options.seed_degree, options.seed_monomial_limit));
    }
    let sat = saturate_by(nvars, &start, &vars, budget, options.verify_fixed_point)?;
    let (mut gens, histogram) = minimalize(nvars, &sat.gens, budget)?;
    gens = gens
        .into_iter()
        .filter_map(|g| g.without_common_factor().oriented(&MonomialOrder::Grevlex))
        .collect();
    let order = MonomialOrder::Grevlex;
    gens.sort_by(|a, b| order.cmp(a.lead(), b.lead()).then_with(|| order.cmp(a.trail(), b.trail())));
    Ok(MarkovBasis { gens, histogram, lattice_rank, truncated: sat.truncated })
}

/// A lattice basis and the variables its basis ideal must be saturated by.
///
/// If the Hermite form has unit pivots, each of its vectors is `e_p` plus a
/// combination of non-pivot coordinates. Once the non-pivot variables are
/// inverted, every pivot variable is a Laurent monomial in them and the basis
/// ideal agrees with the lattice ideal, so saturating by the non-pivot
/// variables alone suffices. Otherwise every variable is used.
fn saturation_basis(nvars: usize, kernel: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<usize>) {
    let all = || (0..nvars).collect::<Vec<_>>();
    if kernel.is_empty() {
        return (Vec::new(), all());
    }
    let rows: Vec<Vec<num_bigint::BigInt>> =
        kernel.iter().map(|r| r.iter().map(|&x| num_bigint::BigInt::from(x)).collect()).collect();
    let hnf = hermite_normal_form(rows);
    let mut pivots = BTreeSet::new();
    for row in &hnf {
        let p = row.iter().position(|x| !num_traits::Zero::is_zero(x)).expect("nonzero row");
        if !num_traits::One::is_one(&row[p]) {
            return (Vec::new(), all());
        }
        pivots.insert(p);
    }
    let basis: Option<Vec<Vec<i64>>> =
        hnf.iter().map(|r| r.iter().map(num_traits::ToPrimitive::to_i64).collect()).collect();
    match basis {
        Some(basis) => (basis, (0..nvars).filter(|v| !pivots.contains(v)).collect()),
        None => (Vec::new(), all()),
    }
}

/// Drops redundant generators: processed by increasing degree, a generator is
/// kept only if it is not in the ideal of those kept before it. For
/// homogeneous input the result is a minimal generating set, and the degree
/// histogram does not depend on the input order.
pub fn minimalize(nvars: usize, gens: &[Binomial], budget: &Budget) -> Result<(Vec<Binomial>, DegreeHistogram)> {
    let mut seen = BTreeSet::new();
    let mut unique: Vec<Binomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if seen.insert(g.canonical()) {
            unique.push(g.clone());
        }
    }
    unique.sort_by_key(Binomial::degree);
    let homogeneous = unique.iter().all(Binomial::is_homogeneous);

    let mut engine = Engine::new(nvars, MonomialOrder::Grevlex, budget);
    let mut kept = Vec::new();
    for g in unique {
        engine.complete(if homogeneous { Some(g.degree()) } else { None })?;
        if engine.reduce(&g).is_some() {
            engine.add_generator(&g)?;
            kept.push(g);
        }
    }
    let h = histogram(&kept);
    Ok((kept, h))
}
