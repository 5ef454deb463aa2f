//! Toric fibre products of binomial ideals, Hadamard stability, and the
//! comparison of glued graphical models with iterated fibre products.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::{glue, GlueSpec, StateGraph};
use crate::ideal::lattice::hermite_normal_form;
use crate::ideal::{
    buchberger, histogram, ideal_equal, integer_kernel_of, is_saturated, lattice_basis_of, lattice_markov_basis,
    markov_basis, minimalize, Binomial, DegreeHistogram, MarkovOptions, Monomial, MonomialOrder, Polynomial,
};
use crate::model::{configuration_index, grouped_layout, model_matrix, GroupedLayout};

/// An ideal in variables `x^j_i`, stored group-major: group `j` occupies a
/// contiguous block of variables.
///
/// Inside a group, the index `i` is a mixed-radix tuple over the tensor
/// factors the ideal was built from (one factor for a plain model), so
/// iterated products keep track of which copy each coordinate came from.
#[derive(Clone, Debug)]
pub struct GroupedIdeal {
    /// `factor_dims[j][f]`: dimension contributed by factor `f` to group `j`.
    factor_dims: Vec<Vec<usize>>,
    gens: Vec<Binomial>,
    /// Whether the ideal is known to be saturated by every variable.
    lattice: Option<bool>,
}

impl PartialEq for GroupedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.factor_dims == other.factor_dims && self.gens == other.gens
    }
}

impl Eq for GroupedIdeal {}

impl GroupedIdeal {
    /// A single-factor ideal with the given group dimensions.
    pub fn new(dims: Vec<usize>, gens: Vec<Binomial>) -> Result<Self> {
        Self::with_factors(dims.into_iter().map(|d| vec![d]).collect(), gens)
    }

    pub fn with_factors(factor_dims: Vec<Vec<usize>>, gens: Vec<Binomial>) -> Result<Self> {
        if factor_dims.is_empty() {
            return Err(Error::validation("a grouped ideal needs at least one group"));
        }
        let nf = factor_dims[0].len();
        if factor_dims.iter().any(|f| f.len() != nf) {
            return Err(Error::validation("groups disagree on the number of tensor factors"));
        }
        let n: usize = factor_dims.iter().map(|f| f.iter().product::<usize>()).sum();
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::validation(format!("generator has {} variables, expected {n}", g.nvars())));
        }
        Ok(GroupedIdeal { factor_dims, gens, lattice: None })
    }

    /// The zero ideal on the given group dimensions.
    pub fn full_space(dims: Vec<usize>) -> Self {
        Self::new(dims, Vec::new()).expect("no generators to check").assume_lattice(true)
    }

    /// Records whether the ideal is saturated by every variable, skipping
    /// the check in [`tfp_ideal`].
    pub fn assume_lattice(mut self, lattice: bool) -> Self {
        self.lattice = Some(lattice);
        self
    }

    /// Whether the ideal is saturated by every variable, computing it if unknown.
    pub fn is_lattice_ideal(&self, budget: &Budget) -> Result<bool> {
        match self.lattice {
            Some(known) => Ok(known),
            None => is_saturated(self.nvars(), &self.gens, budget),
        }
    }

    /// Generators over model columns, re-indexed group-major by `layout`.
    pub fn from_columns(layout: &GroupedLayout, gens: &[Binomial]) -> Result<Self> {
        let mut perm = vec![0; layout.groups.iter().map(Vec::len).sum()];
        let mut next = 0;
        for group in &layout.groups {
            for &col in group {
                perm[col] = next;
                next += 1;
            }
        }
        let gens = gens.iter().map(|g| g.permuted(&perm)).collect();
        Self::new(layout.group_sizes(), gens)
    }

    /// Ideal of a graphical model, grouped by the states of `shared`.
    pub fn of_graph<S: AsRef<str>>(g: &StateGraph, shared: &[S], budget: &Budget) -> Result<Self> {
        let m = model_matrix(g)?;
        let mb = markov_basis(&m.entries, m.ncols(), &MarkovOptions::default(), budget)?;
        Ok(Self::from_columns(&grouped_layout(g, shared)?, &mb.gens)?.assume_lattice(true))
    }

    pub fn group_count(&self) -> usize {
        self.factor_dims.len()
    }

    pub fn group_dims(&self) -> Vec<usize> {
        self.factor_dims.iter().map(|f| f.iter().product()).collect()
    }

    pub fn factor_dims(&self) -> &[Vec<usize>] {
        &self.factor_dims
    }

    pub fn factor_count(&self) -> usize {
        self.factor_dims[0].len()
    }

    pub fn nvars(&self) -> usize {
        self.group_dims().iter().sum()
    }

    pub fn gens(&self) -> &[Binomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Binomial> {
        self.gens
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.group_dims()
            .into_iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Variable number of `(group, per-factor indices)`, all 0-based.
    pub fn variable(&self, group: usize, index: &[usize]) -> usize {
        let dims = &self.factor_dims[group];
        debug_assert_eq!(index.len(), dims.len());
        let within = index.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i);
        self.offsets()[group] + within
    }

    /// Inverse of [`GroupedIdeal::variable`].
    pub fn label(&self, var: usize) -> (usize, Vec<usize>) {
        let offsets = self.offsets();
        let group = offsets.iter().rposition(|&o| o <= var).expect("offset 0 exists");
        let mut within = var - offsets[group];
        let dims = &self.factor_dims[group];
        let mut index = vec![0; dims.len()];
        for f in (0..dims.len()).rev() {
            index[f] = within % dims[f];
            within /= dims[f];
        }
        (group, index)
    }

    /// Reorders the tensor factors: new factor `f` is old factor `order[f]`.
    pub fn reorder_factors(&self, order: &[usize]) -> Result<Self> {
        let nf = self.factor_count();
        let mut seen = vec![false; nf];
        if order.len() != nf || order.iter().any(|&f| f >= nf || std::mem::replace(&mut seen[f], true)) {
            return Err(Error::validation("factor order is not a permutation"));
        }
        let factor_dims: Vec<Vec<usize>> =
            self.factor_dims.iter().map(|d| order.iter().map(|&f| d[f]).collect()).collect();
        let target = GroupedIdeal { factor_dims, gens: Vec::new(), lattice: self.lattice };
        let perm: Vec<usize> = (0..self.nvars())
            .map(|v| {
                let (j, idx) = self.label(v);
                let new_idx: Vec<usize> = order.iter().map(|&f| idx[f]).collect();
                target.variable(j, &new_idx)
            })
            .collect();
        let gens = self.gens.iter().map(|g| g.permuted(&perm)).collect();
        Ok(GroupedIdeal { gens, ..target })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TfpMethod {
    /// Lattice when both inputs are lattice ideals, elimination otherwise.
    #[default]
    Auto,
    /// Block-order elimination of the x and y variables.
    Elimination,
    /// Integer linear algebra on the lattices, then a Markov basis.
    Lattice,
}

#[derive(Clone, Debug)]
pub struct TfpResult {
    /// The product ideal; its generators form a reduced Gröbner basis in
    /// grevlex on the z-variables.
    pub ideal: GroupedIdeal,
    pub method: TfpMethod,
    /// Size of the elimination ring (x, y and z variables).
    pub elimination_vars: usize,
    pub truncated: bool,
}

/// Toric fibre product of two grouped ideals: the kernel of
/// `z^j_{ik} -> x^j_i y^j_k` modulo `I_X + I_Y`.
pub fn tfp_ideal(x: &GroupedIdeal, y: &GroupedIdeal, budget: &Budget) -> Result<TfpResult> {
    tfp_ideal_with(x, y, TfpMethod::Auto, budget)
}

pub fn tfp_ideal_with(x: &GroupedIdeal, y: &GroupedIdeal, method: TfpMethod, budget: &Budget) -> Result<TfpResult> {
    if x.group_count() != y.group_count() {
        return Err(Error::validation(format!(
            "group counts differ: {} and {}",
            x.group_count(),
            y.group_count()
        )));
    }
    let method = match method {
        TfpMethod::Auto | TfpMethod::Lattice if x.is_lattice_ideal(budget)? && y.is_lattice_ideal(budget)? => {
            TfpMethod::Lattice
        }
        TfpMethod::Lattice => return Err(Error::validation("the lattice method needs two lattice ideals")),
        _ => TfpMethod::Elimination,
    };
    let factor_dims: Vec<Vec<usize>> =
        x.factor_dims.iter().zip(&y.factor_dims).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
    let out = GroupedIdeal { factor_dims, gens: Vec::new(), lattice: None };
    let links = link_moves(x, y, &out);
    let (nx, ny, nz) = (x.nvars(), y.nvars(), out.nvars());
    let n = nx + ny + nz;
    budget.check_variables(n)?;
    let embed = |g: &Binomial, shift: usize| {
        let mut v = vec![0i64; n];
        for (k, d) in g.exponent_difference().into_iter().enumerate() {
            v[shift + k] = d;
        }
        v
    };
    let mut moves: Vec<Vec<i64>> = x.gens.iter().map(|g| embed(g, 0)).collect();
    moves.extend(y.gens.iter().map(|g| embed(g, nx)));
    moves.extend(links);

    match method {
        TfpMethod::Lattice => {
            let gens = lattice_product(&moves, nx + ny, nz, budget)?;
            Ok(TfpResult {
                ideal: GroupedIdeal { gens: gens.gens, lattice: Some(true), ..out },
                method,
                elimination_vars: n,
                truncated: gens.truncated,
            })
        }
        _ => {
            let lift = |m: &Monomial, shift: usize| {
                let mut e = vec![0; n];
                e[shift..shift + m.nvars()].copy_from_slice(m.exponents());
                Monomial::new(e)
            };
            let mut gens: Vec<Binomial> =
                x.gens.iter().map(|g| Binomial::new(lift(g.plus(), 0), lift(g.minus(), 0))).collect();
            gens.extend(y.gens.iter().map(|g| Binomial::new(lift(g.plus(), nx), lift(g.minus(), nx))));
            gens.extend(moves[x.gens.len() + y.gens.len()..].iter().map(|v| Binomial::from_move(v)));
            let gb = buchberger(n, &gens, &MonomialOrder::elimination(nx + ny), budget)?;
            let keep = |m: &Monomial| m.exponents()[..nx + ny].iter().all(|&e| e == 0);
            let z_gens: Vec<Binomial> = gb
                .elements()
                .iter()
                .filter(|g| keep(g.plus()) && keep(g.minus()))
                .map(|g| {
                    Binomial::new(
                        Monomial::new(g.plus().exponents()[nx + ny..].to_vec()),
                        Monomial::new(g.minus().exponents()[nx + ny..].to_vec()),
                    )
                })
                .collect();
            Ok(TfpResult {
                ideal: GroupedIdeal { gens: z_gens, ..out },
                method: TfpMethod::Elimination,
                elimination_vars: n,
                truncated: gb.is_truncated(),
            })
        }
    }
}

/// Exponent vectors of `z^j_{ik} - x^j_i y^j_k` in the ring `[x | y | z]`.
fn link_moves(x: &GroupedIdeal, y: &GroupedIdeal, out: &GroupedIdeal) -> Vec<Vec<i64>> {
    let (nx, ny) = (x.nvars(), y.nvars());
    let n = nx + ny + out.nvars();
    let (xo, yo, zo) = (x.offsets(), y.offsets(), out.offsets());
    let (dims_x, dims_y) = (x.group_dims(), y.group_dims());
    let mut links = Vec::new();
    for j in 0..x.group_count() {
        for i in 0..dims_x[j] {
            for k in 0..dims_y[j] {
                let mut v = vec![0i64; n];
                v[nx + ny + zo[j] + i * dims_y[j] + k] = 1;
                v[xo[j] + i] = -1;
                v[nx + yo[j] + k] = -1;
                links.push(v);
            }
        }
    }
    links
}

struct LatticeProduct {
    gens: Vec<Binomial>,
    truncated: bool,
}

/// Lattice ideal of `L ∩ Z^z`, where `L` is generated by `moves` in
/// `[eliminated | z]` coordinates, as a reduced grevlex Gröbner basis.
fn lattice_product(moves: &[Vec<i64>], eliminated: usize, nz: usize, budget: &Budget) -> Result<LatticeProduct> {
    let rows: Vec<Vec<BigInt>> = moves.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    // echelon rows whose pivot lies among the z columns span L ∩ Z^z
    let z_part: Vec<Vec<BigInt>> = hermite_normal_form(rows)
        .into_iter()
        .filter(|r| r[..eliminated].iter().all(Zero::is_zero))
        .map(|r| r[eliminated..].to_vec())
        .collect();
    let basis = lattice_basis_of(z_part);
    let kernel = basis.to_i64()?;
    if kernel.is_empty() {
        return Ok(LatticeProduct { gens: Vec::new(), truncated: false });
    }
    let perp = integer_kernel_of(&basis.vectors, nz);
    let saturated = integer_kernel_of(&perp.vectors, nz).hermite_form() == basis.hermite_form();
    let homogeneous = kernel.iter().all(|v| v.iter().sum::<i64>() == 0);
    let grading = if saturated && homogeneous { Some(perp.to_i64()?) } else { None };
    let mb = lattice_markov_basis(nz, &kernel, grading.as_deref(), &MarkovOptions::default(), budget)?;
    let gb = buchberger(nz, &mb.gens, &MonomialOrder::Grevlex, budget)?;
    Ok(LatticeProduct { truncated: mb.truncated || gb.is_truncated(), gens: gb.into_elements() })
}

/// Same factor shapes and the same ideal.
pub fn ideal_equal_grouped(a: &GroupedIdeal, b: &GroupedIdeal, budget: &Budget) -> Result<bool> {
    if a.factor_dims != b.factor_dims {
        return Ok(false);
    }
    ideal_equal(a.nvars(), &a.gens, &b.gens, &MonomialOrder::Grevlex, budget)
}

/// `X_1^{*a_1} * ... * X_s^{*a_s}`, folded left with factors expanded in
/// order. Components with multiplicity zero are skipped.
pub fn iterated_tfp(models: &[GroupedIdeal], multiplicities: &[usize], budget: &Budget) -> Result<TfpResult> {
    if models.len() != multiplicities.len() {
        return Err(Error::validation("one multiplicity per model is required"));
    }
    let factors: Vec<&GroupedIdeal> =
        models.iter().zip(multiplicities).flat_map(|(m, &a)| std::iter::repeat(m).take(a)).collect();
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::validation("all multiplicities are zero"));
    };
    let mut acc = TfpResult { ideal: (*first).clone(), method: TfpMethod::Auto, elimination_vars: 0, truncated: false };
    for f in rest {
        let next = tfp_ideal(&acc.ideal, f, budget)?;
        acc = TfpResult { truncated: acc.truncated || next.truncated, ..next };
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HadamardCheck {
    pub stable: bool,
    /// Index of the first generator that is not a difference of two monomials.
    pub witness: Option<usize>,
}

/// Whether the ideal generated by `gens` defines a Hadamard-stable set:
/// every generator is a difference of two monomials, hence vanishes at the
/// all-one point.
pub fn is_hadamard_stable(gens: &[Polynomial]) -> HadamardCheck {
    let bad = gens.iter().position(|p| {
        let ok_shape = p.is_zero() || {
            let mut coeffs: Vec<i64> = p.terms().iter().map(|(c, _)| *c).collect();
            coeffs.sort_unstable();
            coeffs == [-1, 1]
        };
        !ok_shape || p.value_at_ones() != 0
    });
    HadamardCheck { stable: bad.is_none(), witness: bad }
}

pub fn binomials_hadamard_stable(gens: &[Binomial]) -> HadamardCheck {
    let polys: Vec<Polynomial> = gens.iter().map(Polynomial::from).collect();
    is_hadamard_stable(&polys)
}

#[derive(Clone, Debug, Serialize)]
pub struct GlueReport {
    pub equal: bool,
    pub copies: Vec<usize>,
    pub glued_nodes: Vec<String>,
    pub variables: usize,
    pub glued_histogram: DegreeHistogram,
    pub tfp_histogram: DegreeHistogram,
    pub glued_generators: usize,
    pub tfp_generators: usize,
    pub glued_ms: u128,
    pub tfp_ms: u128,
    pub compare_ms: u128,
}

impl GlueReport {
    pub fn verdict(&self) -> &'static str {
        if self.equal {
            "EQUAL"
        } else {
            "DIFFERENT"
        }
    }
}

/// Glued-graph column of each variable of an iterated product of the
/// components of `spec`.
pub fn tfp_to_glued_columns(spec: &GlueSpec, product: &GroupedIdeal, glued: &StateGraph) -> Result<Vec<usize>> {
    spec.validate()?;
    let layouts: Vec<GroupedLayout> =
        spec.components.iter().map(|(g, _)| grouped_layout(g, &spec.shared)).collect::<Result<_>>()?;
    let factor_of: Vec<usize> =
        spec.components.iter().enumerate().flat_map(|(c, (_, a))| std::iter::repeat(c).take(*a)).collect();
    if factor_of.len() != product.factor_count() {
        return Err(Error::validation("product has a different number of factors than the spec"));
    }
    let shared_count = spec.shared.len();
    let states = glued.states();
    (0..product.nvars())
        .map(|v| {
            let (j, idx) = product.label(v);
            let mut config = layouts[0].keys[j].clone();
            for (f, &i) in idx.iter().enumerate() {
                let c = factor_of[f];
                let (g, _) = &spec.components[c];
                let col = layouts[c].groups[j][i];
                let beta = crate::model::configuration_at(g.states(), col);
                let rest: Vec<u32> = g
                    .nodes()
                    .iter()
                    .zip(&beta)
                    .filter(|(n, _)| !spec.shared.contains(n))
                    .map(|(_, &s)| s)
                    .collect();
                config.extend(rest);
            }
            debug_assert_eq!(config.len(), states.len());
            debug_assert!(config.len() >= shared_count);
            Ok(configuration_index(states, &config))
        })
        .collect()
}

/// Computes the ideal of the glued graph directly and as an iterated toric
/// fibre product of the component ideals, and compares them.
pub fn glue_vs_tfp(spec: &GlueSpec, budget: &Budget) -> Result<GlueReport> {
    let t0 = Instant::now();
    let glued = glue(spec)?;
    let m = model_matrix(&glued)?;
    let direct = markov_basis(&m.entries, m.ncols(), &MarkovOptions::default(), budget)?;
    let glued_ms = t0.elapsed().as_millis();

    let t1 = Instant::now();
    let components: Vec<GroupedIdeal> = spec
        .components
        .iter()
        .map(|(g, _)| GroupedIdeal::of_graph(g, &spec.shared, budget))
        .collect::<Result<_>>()?;
    let product = iterated_tfp(&components, &spec.copies(), budget)?;
    if product.truncated {
        return Err(Error::resource("toric fibre product computation was truncated"));
    }
    let perm = tfp_to_glued_columns(spec, &product.ideal, &glued)?;
    let mapped: Vec<Binomial> = product.ideal.gens().iter().map(|g| g.permuted(&perm)).collect();
    let (tfp_min, tfp_histogram) = minimalize(m.ncols(), &mapped, budget)?;
    let tfp_ms = t1.elapsed().as_millis();

    let t2 = Instant::now();
    let equal = ideal_equal(m.ncols(), &direct.gens, &mapped, &MonomialOrder::Grevlex, budget)?;
    let compare_ms = t2.elapsed().as_millis();

    Ok(GlueReport {
        equal,
        copies: spec.copies(),
        glued_nodes: glued.nodes().to_vec(),
        variables: m.ncols(),
        glued_histogram: histogram(&direct.gens),
        tfp_histogram,
        glued_generators: direct.gens.len(),
        tfp_generators: tfp_min.len(),
        glued_ms,
        tfp_ms,
        compare_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn segre_from_full_spaces() {
        let x = GroupedIdeal::full_space(vec![2]);
        let r = tfp_ideal(&x, &x, &unlimited()).unwrap();
        assert_eq!(r.ideal.gens().len(), 1);
        assert_eq!(r.ideal.gens()[0].canonical(), Binomial::from_move(&[1, -1, -1, 1]));
    }

    #[test]
    fn one_dimensional_factor_is_identity() {
        let y = GroupedIdeal::new(vec![4], vec![Binomial::from_move(&[1, -1, -1, 1])]).unwrap();
        let x = GroupedIdeal::full_space(vec![1]);
        let r = tfp_ideal(&x, &y, &unlimited()).unwrap();
        assert!(ideal_equal(4, r.ideal.gens(), y.gens(), &MonomialOrder::Grevlex, &unlimited()).unwrap());
    }

    fn both_methods(x: &GroupedIdeal, y: &GroupedIdeal) {
        let u = unlimited();
        let e = tfp_ideal_with(x, y, TfpMethod::Elimination, &u).unwrap();
        let l = tfp_ideal_with(x, y, TfpMethod::Lattice, &u).unwrap();
        assert_eq!(e.method, TfpMethod::Elimination);
        assert_eq!(l.method, TfpMethod::Lattice);
        assert_eq!(e.ideal.gens(), l.ideal.gens());
    }

    #[test]
    fn methods_agree() {
        let u = unlimited();
        let seg = GroupedIdeal::full_space(vec![2]);
        both_methods(&seg, &seg);
        let e1 = StateGraph::uniform(&["0", "1"], 2, &[("0", "1")]).unwrap();
        let edge = GroupedIdeal::of_graph(&e1, &["0"], &u).unwrap();
        both_methods(&edge, &edge);
        let iso = StateGraph::uniform(&["s", "t", "a"], 2, &[]).unwrap();
        let ind = GroupedIdeal::of_graph(&iso, &["s"], &u).unwrap();
        both_methods(&ind, &ind);
        both_methods(&ind, &edge);
    }

    #[test]
    fn lattice_method_rejects_non_lattice_ideals() {
        // x*(y - z) is not saturated
        let f = Binomial::new(Monomial::new(vec![1, 1, 0]), Monomial::new(vec![1, 0, 1]));
        let x = GroupedIdeal::new(vec![3], vec![f]).unwrap();
        let y = GroupedIdeal::full_space(vec![1]);
        assert!(tfp_ideal_with(&x, &y, TfpMethod::Lattice, &unlimited()).is_err());
        let r = tfp_ideal(&x, &y, &unlimited()).unwrap();
        assert_eq!(r.method, TfpMethod::Elimination);
        assert_eq!(r.ideal.gens().len(), 1);
    }

    #[test]
    fn group_count_mismatch() {
        let a = GroupedIdeal::full_space(vec![2]);
        let b = GroupedIdeal::full_space(vec![2, 2]);
        assert!(matches!(tfp_ideal(&a, &b, &unlimited()), Err(Error::Validation(_))));
    }

    #[test]
    fn labels_roundtrip() {
        let g = GroupedIdeal::with_factors(vec![vec![2, 3], vec![1, 2]], vec![]).unwrap();
        assert_eq!(g.nvars(), 8);
        for v in 0..8 {
            let (j, idx) = g.label(v);
            assert_eq!(g.variable(j, &idx), v);
        }
        assert_eq!(g.label(6), (1, vec![0, 0]));
    }

    #[test]
    fn iterated_single_model() {
        let y = GroupedIdeal::new(vec![4], vec![Binomial::from_move(&[1, -1, -1, 1])]).unwrap();
        let z = GroupedIdeal::full_space(vec![3]);
        let r = iterated_tfp(&[z, y.clone()], &[0, 1], &unlimited()).unwrap();
        assert_eq!(r.ideal, y);
        assert!(iterated_tfp(&[y], &[0], &unlimited()).is_err());
    }

    #[test]
    fn hadamard_checks() {
        let bad = Polynomial::new(vec![(1, Monomial::new(vec![1, 0])), (-2, Monomial::new(vec![0, 1]))]);
        let good = Polynomial::from(&Binomial::from_move(&[1, -1]));
        assert_eq!(is_hadamard_stable(&[good.clone(), bad]), HadamardCheck { stable: false, witness: Some(1) });
        assert!(is_hadamard_stable(&[good]).stable);
        assert!(is_hadamard_stable(&[]).stable);
        let monomial = Polynomial::new(vec![(1, Monomial::new(vec![1, 0]))]);
        assert!(!is_hadamard_stable(&[monomial]).stable);
    }

    #[test]
    fn path_glue_equal() {
        let e1 = StateGraph::uniform(&["0", "1"], 2, &[("0", "1")]).unwrap();
        let e2 = StateGraph::uniform(&["0", "2"], 2, &[("0", "2")]).unwrap();
        let spec = GlueSpec::new(vec!["0".into()], vec![(e1, 1), (e2, 1)]);
        let r = glue_vs_tfp(&spec, &unlimited()).unwrap();
        assert!(r.equal);
        assert_eq!(r.glued_histogram, DegreeHistogram::from([(2, 2)]));
        assert_eq!(r.tfp_histogram, r.glued_histogram);
    }

    #[test]
    fn single_component_equal() {
        let g = StateGraph::uniform(&["a", "b", "c"], 2, &[("a", "b")]).unwrap();
        let spec = GlueSpec::new(vec!["b".into()], vec![(g, 1)]);
        assert!(glue_vs_tfp(&spec, &unlimited()).unwrap().equal);
    }
}
