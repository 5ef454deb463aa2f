//! Buchberger's algorithm specialized to binomial ideals.
//!
//! With ±1 coefficients, an S-polynomial of two binomials is a binomial and
//! the normal form of a monomial is a monomial, so reduction never leaves the
//! binomial world: `NF(a - b) = NF(a) - NF(b)`. Pair management follows the
//! Gebauer–Möller update, pairs are processed by sugar degree.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Binomial, Monomial, MonomialOrder};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A reduced Gröbner basis. Every element is oriented (`plus` leads) and the
/// elements are sorted by leading monomial, so two reduced bases of the same
/// ideal under the same order compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Binomial>,
    truncated: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when S-pairs were skipped because of a degree limit; the elements
    /// are then only a partial basis.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Normal form of a monomial: repeatedly rewrite with the first element
    /// whose leading term divides.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Monomial {
        let mut m = m.clone();
        'outer: loop {
            for g in &self.elements {
                if g.lead().divides(&m) {
                    m.replace(g.lead(), g.trail());
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Remainder of `b` on division by the basis; `None` means zero, i.e. `b`
    /// is in the ideal (when the basis is not truncated).
    pub fn normal_form(&self, b: &Binomial) -> Option<Binomial> {
        let p = self.normal_form_monomial(b.plus());
        let m = self.normal_form_monomial(b.minus());
        Binomial::new(p, m).oriented(&self.order)
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.normal_form(b).is_none()
    }

    /// S-binomial of two elements, used by postcondition checks.
    pub fn s_binomial(&self, i: usize, j: usize) -> Binomial {
        s_binomial(&self.elements[i], &self.elements[j])
    }
}

fn s_binomial(f: &Binomial, g: &Binomial) -> Binomial {
    let l = f.lead().lcm(g.lead());
    let a = l.div(f.lead()).expect("lcm").mul(f.trail());
    let b = l.div(g.lead()).expect("lcm").mul(g.trail());
    Binomial::new(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: u32,
    degree: u32,
    j: usize,
    i: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    key: PairKey,
    lcm: Monomial,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

/// Incremental Buchberger state. Generators can be added at any time and the
/// pair queue completed up to a degree, which is what degree-by-degree
/// minimalization of homogeneous ideals needs.
pub(crate) struct Engine<'a> {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<Binomial>,
    sugar: Vec<u32>,
    masks: Vec<u64>,
    active: Vec<bool>,
    reducers: Vec<usize>,
    pairs: BinaryHeap<Reverse<Pair>>,
    budget: &'a Budget,
    steps: u64,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(nvars: usize, order: MonomialOrder, budget: &'a Budget) -> Self {
        Engine {
            order,
            nvars,
            polys: Vec::new(),
            sugar: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            reducers: Vec::new(),
            pairs: BinaryHeap::new(),
            budget,
            steps: 0,
        }
    }

    fn reduce_monomial(&self, m: &mut Monomial) {
        'outer: loop {
            let mask = m.mask();
            for &k in &self.reducers {
                if self.masks[k] & !mask == 0 && self.polys[k].lead().divides(m) {
                    let g = &self.polys[k];
                    m.replace(g.lead(), g.trail());
                    continue 'outer;
                }
            }
            return;
        }
    }

    pub(crate) fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        let mut p = b.plus().clone();
        let mut m = b.minus().clone();
        self.reduce_monomial(&mut p);
        self.reduce_monomial(&mut m);
        Binomial::new(p, m).oriented(&self.order)
    }

    /// Adds a generator; returns false when it already reduces to zero.
    pub(crate) fn add_generator(&mut self, b: &Binomial) -> Result<bool> {
        if b.nvars() != self.nvars {
            return Err(Error::validation(format!(
                "generator has {} variables, ring has {}",
                b.nvars(),
                self.nvars
            )));
        }
        match self.reduce(b) {
            Some(h) => {
                self.insert(h, b.degree());
                Ok(true)
            }
            None => Ok(false),
        }
    }

    fn insert(&mut self, h: Binomial, sugar: u32) {
        let idx = self.polys.len();
        self.masks.push(h.lead().mask());
        self.sugar.push(sugar.max(h.degree()));
        self.polys.push(h);
        self.active.push(true);
        self.update(idx);
        self.reducers = (0..self.polys.len()).filter(|&k| self.active[k]).collect();
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let si = self.sugar[i] + d - self.polys[i].lead().degree();
        let sj = self.sugar[j] + d - self.polys[j].lead().degree();
        si.max(sj)
    }

    /// Gebauer–Möller pair update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lead().clone();
        let mut candidates: std::collections::VecDeque<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.polys[g].lead())))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop_front() {
            let coprime = lh.is_coprime(self.polys[g1].lead());
            if coprime
                || (!candidates.iter().any(|(_, l2)| l2.divides(&l1))
                    && !kept.iter().any(|(_, l2)| l2.divides(&l1)))
            {
                kept.push((g1, l1));
            }
        }

        // Old pairs made redundant by h (chain criterion).
        let polys = &self.polys;
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|Reverse(p)| {
                if !lh.divides(&p.lcm) {
                    return true;
                }
                let li = polys[p.key.i].lead().lcm(&lh);
                let lj = polys[p.key.j].lead().lcm(&lh);
                li == p.lcm || lj == p.lcm
            })
            .collect();

        for (g, l) in kept {
            if lh.is_coprime(self.polys[g].lead()) {
                continue;
            }
            let key = PairKey { sugar: self.pair_sugar(g, h, &l), degree: l.degree(), j: h, i: g };
            self.pairs.push(Reverse(Pair { key, lcm: l }));
        }

        for g in 0..h {
            if self.active[g] && self.masks[h] & !self.masks[g] == 0 && lh.divides(self.polys[g].lead()) {
                self.active[g] = false;
            }
        }
    }

    /// Processes pending pairs with sugar at most `limit` (all when `None`).
    pub(crate) fn complete(&mut self, limit: Option<u32>) -> Result<()> {
        loop {
            match self.pairs.peek() {
                Some(Reverse(p)) if limit.map_or(true, |d| p.key.sugar <= d) => {}
                _ => return Ok(()),
            }
            let Reverse(pair) = self.pairs.pop().expect("peeked");
            self.steps += 1;
            if self.steps % 64 == 0 {
                self.budget.check_time()?;
            }
            let s = s_binomial(&self.polys[pair.key.i], &self.polys[pair.key.j]);
            if let Some(h) = self.reduce(&s) {
                self.insert(h, pair.key.sugar);
            }
        }
    }

    pub(crate) fn has_pending_pairs(&self) -> bool {
        !self.pairs.is_empty()
    }

    /// Current basis as a reduced Gröbner basis (of everything processed so far).
    pub(crate) fn reduced_basis(&self, truncated: bool) -> GroebnerBasis {
        let mut keep: Vec<usize> = Vec::new();
        for &k in &self.reducers {
            let lk = self.polys[k].lead();
            let dominated = self.reducers.iter().any(|&o| {
                o != k && {
                    let lo = self.polys[o].lead();
                    lo.divides(lk) && (lo != lk || o < k)
                }
            });
            if !dominated {
                keep.push(k);
            }
        }
        let minimal: Vec<Binomial> = keep.iter().map(|&k| self.polys[k].clone()).collect();
        let tmp = GroebnerBasis {
            order: self.order.clone(),
            nvars: self.nvars,
            elements: minimal.clone(),
            truncated,
        };
        let mut elements: Vec<Binomial> = minimal
            .into_iter()
            .map(|g| {
                let trail = tmp.normal_form_monomial(g.trail());
                Binomial::new(g.lead().clone(), trail)
            })
            .collect();
        let order = self.order.clone();
        elements.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
        GroebnerBasis { order: self.order.clone(), nvars: self.nvars, elements, truncated }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in a ring with
/// `nvars` variables. A degree limit in the budget truncates the computation
/// and marks the result.
pub fn buchberger(
    nvars: usize,
    gens: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    budget.check_variables(nvars)?;
    let mut engine = Engine::new(nvars, order.clone(), budget);
    let mut sorted: Vec<&Binomial> = gens.iter().collect();
    sorted.sort_by_key(|b| b.degree());
    for g in sorted {
        engine.add_generator(g)?;
    }
    engine.complete(budget.max_degree)?;
    let truncated = engine.has_pending_pairs();
    Ok(engine.reduced_basis(truncated))
}

/// Whether two generating sets define the same ideal: their reduced Gröbner
/// bases under `order` coincide.
pub fn ideal_equal(
    nvars: usize,
    a: &[Binomial],
    b: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<bool> {
    let ga = buchberger(nvars, a, order, budget)?;
    let gb = buchberger(nvars, b, order, budget)?;
    if ga.is_truncated() || gb.is_truncated() {
        return Err(Error::resource("cannot compare truncated Gröbner bases"));
    }
    Ok(ga.elements == gb.elements)
}
