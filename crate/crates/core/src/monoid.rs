//! Matrices with constant column sums, pull-backs along maps of finite
//! sets, the ordered-surjective division relation, and the rank-one
//! binomials it controls.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::{ideal_equal, Binomial, Monomial, MonomialOrder, VariableSet};
use crate::model::{configuration_at, configuration_index, configuration_name, configurations};

pub const DEFAULT_DIVISION_LIMIT: usize = 10;

/// A finite set with a linear order given by the position of each label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct OrderedFiniteSet {
    labels: Vec<String>,
}

impl TryFrom<Vec<String>> for OrderedFiniteSet {
    type Error = Error;

    fn try_from(labels: Vec<String>) -> Result<Self> {
        Self::new(labels)
    }
}

impl From<OrderedFiniteSet> for Vec<String> {
    fn from(s: OrderedFiniteSet) -> Self {
        s.labels
    }
}

impl OrderedFiniteSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::validation(format!("duplicate element {l:?}")));
            }
        }
        Ok(OrderedFiniteSet { labels })
    }

    /// `[k] = {1 < 2 < ... < k}`.
    pub fn range(k: usize) -> Self {
        OrderedFiniteSet { labels: (1..=k).map(|i| i.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A map of finite sets, stored as the position of each image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinMap {
    pub source: OrderedFiniteSet,
    pub target: OrderedFiniteSet,
    values: Vec<usize>,
}

impl FinMap {
    /// `values[i]` is the (0-based) target position of source element `i`.
    pub fn new(source: OrderedFiniteSet, target: OrderedFiniteSet, values: Vec<usize>) -> Result<Self> {
        if values.len() != source.len() {
            return Err(Error::validation("map must assign a value to every source element"));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= target.len()) {
            return Err(Error::validation(format!("value {v} outside a target of size {}", target.len())));
        }
        Ok(FinMap { source, target, values })
    }

    /// Map `[k] -> [target_len]` written with 1-based values, e.g. `(1,1,2)`.
    pub fn one_based(values: &[usize], target_len: usize) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::validation("1-based values start at 1"));
        }
        Self::new(
            OrderedFiniteSet::range(values.len()),
            OrderedFiniteSet::range(target_len),
            values.iter().map(|v| v - 1).collect(),
        )
    }

    pub fn identity(set: &OrderedFiniteSet) -> Self {
        FinMap { source: set.clone(), target: set.clone(), values: (0..set.len()).collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinMap) -> Result<FinMap> {
        if first.target != self.source {
            return Err(Error::validation("maps are not composable"));
        }
        Ok(FinMap {
            source: first.source.clone(),
            target: self.target.clone(),
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.values.iter().copied().collect();
        hit.len() == self.target.len()
    }

    /// Surjective, and `j -> min π^{-1}(j)` strictly increasing.
    pub fn is_os_morphism(&self) -> bool {
        // equivalent: the values form a restricted growth string
        let mut next = 0;
        for &v in &self.values {
            if v > next {
                return false;
            }
            if v == next {
                next += 1;
            }
        }
        next == self.target.len()
    }
}

/// All ordered-surjective maps `[s] -> [t]`, as restricted growth strings.
pub fn os_morphisms(s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(s: usize, t: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            if used == t {
                out.push(cur.clone());
            }
            return;
        }
        if t - used > s - cur.len() {
            return;
        }
        for v in 0..=used.min(t.saturating_sub(1)) {
            cur.push(v);
            go(s, t, cur, used.max(v + 1), out);
            cur.pop();
        }
    }
    if t == 0 {
        return if s == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(s, t, &mut Vec::with_capacity(s), 0, &mut out);
    out
}

/// An `n × S` matrix of nonnegative integers with all column sums equal,
/// stored by columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnSumMatrix {
    n: usize,
    cols: OrderedFiniteSet,
    columns: Vec<Vec<u32>>,
}

impl ColumnSumMatrix {
    pub fn new(n: usize, cols: OrderedFiniteSet, columns: Vec<Vec<u32>>) -> Result<Self> {
        if columns.len() != cols.len() {
            return Err(Error::validation("one column per column label is required"));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::validation(format!("column of length {} in a matrix with {n} rows", c.len())));
        }
        let sums: BTreeSet<u32> = columns.iter().map(|c| c.iter().sum()).collect();
        if sums.len() > 1 {
            return Err(Error::validation(format!("column sums differ: {sums:?}")));
        }
        Ok(ColumnSumMatrix { n, cols, columns })
    }

    /// Matrix over `[k]` with the given columns.
    pub fn from_columns(n: usize, columns: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(n, OrderedFiniteSet::range(columns.len()), columns)
    }

    pub fn zero(n: usize, cols: OrderedFiniteSet) -> Self {
        let columns = vec![vec![0; n]; cols.len()];
        ColumnSumMatrix { n, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> &OrderedFiniteSet {
        &self.cols
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.columns[j]
    }

    /// The common column sum (0 for a matrix without columns).
    pub fn column_sum(&self) -> u32 {
        self.columns.first().map_or(0, |c| c.iter().sum())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.cols != other.cols {
            return Err(Error::validation("matrices have different shapes"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(ColumnSumMatrix { n: self.n, cols: self.cols.clone(), columns })
    }

    /// `self - other` when it is entrywise nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Result<Option<Self>> {
        self.same_shape(other)?;
        let mut columns = Vec::with_capacity(self.columns.len());
        for (a, b) in self.columns.iter().zip(&other.columns) {
            let mut c = Vec::with_capacity(self.n);
            for (x, y) in a.iter().zip(b) {
                match x.checked_sub(*y) {
                    Some(d) => c.push(d),
                    None => return Ok(None),
                }
            }
            columns.push(c);
        }
        let out = ColumnSumMatrix { n: self.n, cols: self.cols.clone(), columns };
        debug_assert!(out.columns.iter().map(|c| c.iter().sum::<u32>()).collect::<BTreeSet<_>>().len() <= 1);
        Ok(Some(out))
    }
}

/// `π^* α`: column `j` of the result is column `π(j)` of `α`.
pub fn pullback(pi: &FinMap, alpha: &ColumnSumMatrix) -> Result<ColumnSumMatrix> {
    if alpha.cols != pi.target {
        return Err(Error::validation("matrix columns are not the target of the map"));
    }
    let columns = pi.values.iter().map(|&v| alpha.columns[v].clone()).collect();
    Ok(ColumnSumMatrix { n: alpha.n, cols: pi.source.clone(), columns })
}

/// The column-wise order: decided by `base` on the first differing column.
/// The default base order is lex with row 1 dominant.
pub fn compare(a: &ColumnSumMatrix, b: &ColumnSumMatrix, base: &MonomialOrder) -> Result<Ordering> {
    a.same_shape(b)?;
    Ok(a.columns
        .iter()
        .zip(&b.columns)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| base.cmp_exps(x, y)))
}

/// Witness for `α | β`: `β = γ + π^* α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Division {
    pub pi: FinMap,
    pub gamma: ColumnSumMatrix,
}

/// Searches all ordered-surjective `π: S -> T` with `β - π^* α ≥ 0`.
/// Resource error when `|S|` exceeds `limit`.
pub fn divides(alpha: &ColumnSumMatrix, beta: &ColumnSumMatrix, limit: usize) -> Result<Option<Division>> {
    let (s, t) = (beta.ncols(), alpha.ncols());
    if s > limit {
        return Err(Error::resource(format!("|S| = {s} exceeds the enumeration limit {limit}")));
    }
    if alpha.n != beta.n || t > s || (t == 0) != (s == 0) || alpha.column_sum() > beta.column_sum() {
        return Ok(None);
    }
    // fits[i][j]: column j of α fits under column i of β
    let fits: Vec<Vec<bool>> = (0..s)
        .map(|i| (0..t).map(|j| alpha.columns[j].iter().zip(&beta.columns[i]).all(|(a, b)| a <= b)).collect())
        .collect();
    fn go(fits: &[Vec<bool>], t: usize, cur: &mut Vec<usize>, used: usize) -> bool {
        let s = fits.len();
        if cur.len() == s {
            return used == t;
        }
        if t - used > s - cur.len() {
            return false;
        }
        let i = cur.len();
        for v in 0..=used.min(t - 1) {
            if fits[i][v] {
                cur.push(v);
                if go(fits, t, cur, used.max(v + 1)) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::with_capacity(s);
    if !go(&fits, t, &mut cur, 0) {
        return Ok(None);
    }
    let pi = FinMap::new(beta.cols.clone(), alpha.cols.clone(), cur)?;
    debug_assert!(pi.is_os_morphism());
    let gamma = beta.checked_sub(&pullback(&pi, alpha)?)?.expect("search only accepts fitting columns");
    assert!(
        gamma.columns.iter().map(|c| c.iter().sum::<u32>()).collect::<BTreeSet<_>>().len() <= 1,
        "difference of constant-column-sum matrices has constant column sums"
    );
    Ok(Some(Division { pi, gamma }))
}

/// First pair `i < j` (ordered by `j`, then `i`, 0-based) with
/// `seq[i] | seq[j]`.
pub fn wqo_search(seq: &[ColumnSumMatrix], limit: usize) -> Result<Option<(usize, usize, Division)>> {
    for j in 1..seq.len() {
        for i in 0..j {
            if let Some(d) = divides(&seq[i], &seq[j], limit)? {
                return Ok(Some((i, j, d)));
            }
        }
    }
    Ok(None)
}

/// Vertical concatenation of blocks over the same columns, each of which
/// must have constant column sums on its own.
pub fn constant_partial_column_sums(blocks: &[ColumnSumMatrix]) -> Result<ColumnSumMatrix> {
    let Some(first) = blocks.first() else {
        return Err(Error::validation("no blocks"));
    };
    if blocks.iter().any(|b| b.cols != first.cols) {
        return Err(Error::validation("blocks have different column sets"));
    }
    let n = blocks.iter().map(|b| b.n).sum();
    let columns = (0..first.ncols())
        .map(|j| blocks.iter().flat_map(|b| b.columns[j].iter().copied()).collect())
        .collect();
    ColumnSumMatrix::new(n, first.cols.clone(), columns)
}

/// Same as [`constant_partial_column_sums`] for raw blocks given as
/// columns, rejecting any block whose column sums are not constant.
pub fn stack_blocks(blocks: &[Vec<Vec<u32>>]) -> Result<ColumnSumMatrix> {
    let parsed: Vec<ColumnSumMatrix> = blocks
        .iter()
        .enumerate()
        .map(|(k, cols)| {
            let n = cols.first().map_or(0, Vec::len);
            ColumnSumMatrix::from_columns(n, cols.clone())
                .map_err(|e| Error::validation(format!("block {}: {e}", k + 1)))
        })
        .collect::<Result<_>>()?;
    constant_partial_column_sums(&parsed)
}

/// Variables `x_α`, `α ∈ [n]^S`, of `A_n(S)` in mixed-radix order of `α`.
pub fn tensor_variables(n: usize, s: usize) -> VariableSet {
    let states = vec![n as u32; s];
    VariableSet::new(configurations(&states).iter().map(|a| configuration_name("x", a)).collect())
        .expect("distinct indices")
}

fn tensor_states(n: usize, s: usize) -> Vec<u32> {
    vec![n as u32; s]
}

/// Variable number of `x_α` in `A_n(S)`; `α` has 1-based entries.
pub fn tensor_variable(n: usize, alpha: &[u32]) -> usize {
    configuration_index(&tensor_states(n, alpha.len()), alpha)
}

/// `α ∘ π` for `α ∈ [n]^T`.
pub fn variable_pullback(pi: &FinMap, alpha: &[u32]) -> Vec<u32> {
    assert_eq!(alpha.len(), pi.target.len(), "index length must match the target");
    pi.values.iter().map(|&v| alpha[v]).collect()
}

/// `π^*` on monomials of `A_n(T)`, landing in `A_n(S)`.
pub fn monomial_pullback(pi: &FinMap, n: usize, m: &Monomial) -> Monomial {
    let (s, t) = (pi.source.len(), pi.target.len());
    let mut e = vec![0; n.pow(s as u32)];
    for (var, &k) in m.exponents().iter().enumerate() {
        if k > 0 {
            let alpha = configuration_at(&tensor_states(n, t), var);
            e[tensor_variable(n, &variable_pullback(pi, &alpha))] += k;
        }
    }
    Monomial::new(e)
}

pub fn binomial_pullback(pi: &FinMap, n: usize, b: &Binomial) -> Binomial {
    Binomial::new(monomial_pullback(pi, n, b.plus()), monomial_pullback(pi, n, b.minus()))
}

/// `x_{α1||α2} x_{β1||β2} - x_{α1||β2} x_{β1||α2}` for the partition
/// `S = S1 ⊔ S2` (`part1` lists the 0-based positions in `S1`), nonzero
/// ones only, deduplicated up to sign.
pub fn det_binomials(n: usize, s: usize, part1: &[usize]) -> Result<Vec<Binomial>> {
    let s1: BTreeSet<usize> = part1.iter().copied().collect();
    if s1.len() != part1.len() || s1.iter().any(|&p| p >= s) || s1.is_empty() || s1.len() == s {
        return Err(Error::validation("partition parts must be nonempty subsets of S"));
    }
    let s2: Vec<usize> = (0..s).filter(|p| !s1.contains(p)).collect();
    let s1: Vec<usize> = s1.into_iter().collect();
    let halves1 = configurations(&tensor_states(n, s1.len()));
    let halves2 = configurations(&tensor_states(n, s2.len()));
    let join = |a: &[u32], b: &[u32]| {
        let mut full = vec![0u32; s];
        for (&p, &v) in s1.iter().zip(a) {
            full[p] = v;
        }
        for (&p, &v) in s2.iter().zip(b) {
            full[p] = v;
        }
        tensor_variable(n, &full)
    };
    let nvars = n.pow(s as u32);
    let quad = |u: usize, v: usize| {
        let mut e = vec![0; nvars];
        e[u] += 1;
        e[v] += 1;
        Monomial::new(e)
    };
    let mut out = BTreeSet::new();
    for a1 in &halves1 {
        for b1 in &halves1 {
            for a2 in &halves2 {
                for b2 in &halves2 {
                    let plus = quad(join(a1, a2), join(b1, b2));
                    let minus = quad(join(a1, b2), join(b1, a2));
                    if plus != minus {
                        out.insert(Binomial::new(plus, minus).canonical());
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Generators of `I_n(S)`: the 2x2 minors of every flattening along a two-part
/// partition of `S`, deduplicated.
pub fn rank_one_ideal(n: usize, s: usize) -> Vec<Binomial> {
    let mut out = BTreeSet::new();
    if s < 2 {
        return Vec::new();
    }
    // partitions with position 0 in S1 cover every unordered partition
    for mask in 0..(1u64 << (s - 1)) {
        let mut part1 = vec![0];
        part1.extend((1..s).filter(|&p| mask & (1 << (p - 1)) != 0));
        if part1.len() == s {
            continue;
        }
        out.extend(det_binomials(n, s, &part1).expect("valid partition"));
    }
    out.into_iter().collect()
}

/// All maps `[s] -> [t]`.
pub fn all_maps(s: usize, t: usize) -> Vec<Vec<usize>> {
    let count = t.pow(s as u32);
    (0..count)
        .map(|mut c| {
            let mut v = vec![0; s];
            for p in (0..s).rev() {
                v[p] = c % t;
                c /= t;
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub n: usize,
    pub s: usize,
    /// `2n² - 1`.
    pub bound: usize,
    pub pulled_back_generators: usize,
    /// `I_n(S)` equals the ideal generated by pull-backs from all `S'`
    /// with `|S'| ≤ min(|S|, bound)`.
    pub equal: bool,
    /// Whether pull-backs from sets strictly smaller than `S` already suffice.
    pub smaller_sets_suffice: bool,
}

/// Checks that `I_n(S)` is generated by pull-backs of `I_n(S')` along all
/// maps `S -> S'` with `|S'| ≤ min(|S|, 2n² - 1)`.
pub fn generation_bound_check(n: usize, s: usize, budget: &Budget) -> Result<GenerationReport> {
    let bound = 2 * n * n - 1;
    let nvars = n.pow(s as u32);
    let target = rank_one_ideal(n, s);
    let pulled = |max_size: usize| -> Result<Vec<Binomial>> {
        let mut gens = BTreeSet::new();
        for t in 2..=max_size {
            let base = rank_one_ideal(n, t);
            for values in all_maps(s, t) {
                let pi = FinMap::new(OrderedFiniteSet::range(s), OrderedFiniteSet::range(t), values)?;
                for b in &base {
                    let p = binomial_pullback(&pi, n, b);
                    if !p.is_zero() {
                        gens.insert(p.canonical());
                    }
                }
            }
        }
        Ok(gens.into_iter().collect())
    };
    let all = pulled(s.min(bound))?;
    let equal = ideal_equal(nvars, &target, &all, &MonomialOrder::Grevlex, budget)?;
    let smaller = pulled(s.saturating_sub(1).min(bound))?;
    let smaller_sets_suffice = ideal_equal(nvars, &target, &smaller, &MonomialOrder::Grevlex, budget)?;
    Ok(GenerationReport { n, s, bound, pulled_back_generators: all.len(), equal, smaller_sets_suffice })
}

/// `Φ_S`: a monomial in `A_n(S)` to the sum over its variables `x_α` of
/// the 0/1 matrices with ones at `(α_j, j)`.
pub fn phi_iso(n: usize, s: usize, m: &Monomial) -> ColumnSumMatrix {
    let mut columns = vec![vec![0u32; n]; s];
    for (var, &k) in m.exponents().iter().enumerate() {
        if k > 0 {
            let alpha = configuration_at(&tensor_states(n, s), var);
            for (j, &a) in alpha.iter().enumerate() {
                columns[j][a as usize - 1] += k;
            }
        }
    }
    ColumnSumMatrix::from_columns(n, columns).expect("every variable adds one to each column")
}

/// The monomial `u_k = ∏_m x_{1..1 2 1..1}` (the 2 in position `m`) of
/// `A_n([k])`; no `π^* u_l` divides `u_k` for `l < k`.
pub fn non_noetherian_monomial(n: usize, k: usize) -> Monomial {
    assert!(n >= 2, "needs at least two states");
    let mut e = vec![0; n.pow(k as u32)];
    for m in 0..k {
        let mut alpha = vec![1u32; k];
        alpha[m] = 2;
        e[tensor_variable(n, &alpha)] += 1;
    }
    Monomial::new(e)
}

/// Some map `π: [k] -> [l]` with `π^* u | v`, where `u ∈ A_n([l])` and
/// `v ∈ A_n([k])`, by exhaustive search.
pub fn fin_monomial_divides(n: usize, l: usize, u: &Monomial, k: usize, v: &Monomial) -> Option<FinMap> {
    all_maps(k, l).into_iter().find_map(|values| {
        let pi = FinMap::new(OrderedFiniteSet::range(k), OrderedFiniteSet::range(l), values).ok()?;
        monomial_pullback(&pi, n, u).divides(v).then_some(pi)
    })
}

/// Uniformly random ordered-surjective map `[s] -> [t]` (among all of them).
pub fn random_os_morphism<R: Rng>(rng: &mut R, s: usize, t: usize) -> Option<FinMap> {
    let all = os_morphisms(s, t);
    if all.is_empty() {
        return None;
    }
    let values = all[rng.gen_range(0..all.len())].clone();
    FinMap::new(OrderedFiniteSet::range(s), OrderedFiniteSet::range(t), values).ok()
}

/// Random matrix in `M_n([cols])` with entries at most `max_entry`.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, cols: usize, max_entry: u32) -> ColumnSumMatrix {
    let sum = rng.gen_range(0..=max_entry * n as u32);
    let columns = (0..cols)
        .map(|_| {
            // rejection sampling of a composition of `sum` with bounded parts
            loop {
                let c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
                if c.iter().sum::<u32>() == sum {
                    break c;
                }
            }
        })
        .collect();
    ColumnSumMatrix::from_columns(n, columns).expect("columns share the sum")
}
