use super::{buchberger, Binomial, Monomial, MonomialOrder};
use crate::budget::Budget;
use crate::error::Result;

/// Generators of a saturation, plus whether any Gröbner step was truncated
/// (then the generators are sound but possibly incomplete).
#[derive(Clone, Debug)]
pub struct Saturation {
    pub gens: Vec<Binomial>,
    pub truncated: bool,
}

/// `I : x_var^∞`.
///
/// Homogeneous input: a grevlex basis with `x_var` as the smallest variable;
/// every element divisible by `x_var` is divided by its full power.
/// Otherwise: eliminate `t` from `I + (t·x_var - 1)`.
pub fn saturate(nvars: usize, gens: &[Binomial], var: usize, budget: &Budget) -> Result<Saturation> {
    assert!(var < nvars, "saturation variable out of range");
    if gens.iter().all(Binomial::is_homogeneous) {
        saturate_homogeneous(nvars, gens, var, budget)
    } else {
        saturate_by_elimination(nvars, gens, var, budget)
    }
}

fn saturate_homogeneous(nvars: usize, gens: &[Binomial], var: usize, budget: &Budget) -> Result<Saturation> {
    // perm[old] = new: `var` moves to the end
    let perm: Vec<usize> = (0..nvars)
        .map(|i| match i.cmp(&var) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => nvars - 1,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    let mut inverse = vec![0; nvars];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let permuted: Vec<Binomial> = gens.iter().map(|g| g.permuted(&perm)).collect();
    let gb = buchberger(nvars, &permuted, &MonomialOrder::Grevlex, budget)?;
    let truncated = gb.is_truncated();
    let last = nvars - 1;
    let out = gb
        .into_elements()
        .into_iter()
        .map(|g| {
            let k = g.plus().exponent(last).min(g.minus().exponent(last));
            let mut p = g.plus().clone();
            let mut m = g.minus().clone();
            p.exps_mut()[last] -= k;
            m.exps_mut()[last] -= k;
            Binomial::new(p, m).permuted(&inverse)
        })
        .collect();
    Ok(Saturation { gens: out, truncated })
}

fn saturate_by_elimination(nvars: usize, gens: &[Binomial], var: usize, budget: &Budget) -> Result<Saturation> {
    let lift = |m: &Monomial| {
        let mut e = Vec::with_capacity(nvars + 1);
        e.push(0);
        e.extend_from_slice(m.exponents());
        Monomial::new(e)
    };
    let mut lifted: Vec<Binomial> = gens.iter().map(|g| Binomial::new(lift(g.plus()), lift(g.minus()))).collect();
    let mut tv = Monomial::one(nvars + 1);
    tv.exps_mut()[0] = 1;
    tv.exps_mut()[var + 1] = 1;
    lifted.push(Binomial::new(tv, Monomial::one(nvars + 1)));
    let gb = buchberger(nvars + 1, &lifted, &MonomialOrder::elimination(1), budget)?;
    let truncated = gb.is_truncated();
    let out = gb
        .into_elements()
        .into_iter()
        .filter(|g| g.plus().exponent(0) == 0 && g.minus().exponent(0) == 0)
        .map(|g| {
            Binomial::new(
                Monomial::new(g.plus().exponents()[1..].to_vec()),
                Monomial::new(g.minus().exponents()[1..].to_vec()),
            )
        })
        .collect();
    Ok(Saturation { gens: out, truncated })
}

/// Saturates by every variable in turn, i.e. computes `I : (x_1 ⋯ x_n)^∞`.
/// With `verify_fixed_point` a second sweep is run and must not change the
/// ideal.
pub fn saturate_all(
    nvars: usize,
    gens: &[Binomial],
    budget: &Budget,
    verify_fixed_point: bool,
) -> Result<Saturation> {
    let all: Vec<usize> = (0..nvars).collect();
    saturate_by(nvars, gens, &all, budget, verify_fixed_point)
}

/// Saturates by the product of the variables in `vars`, one at a time.
pub fn saturate_by(
    nvars: usize,
    gens: &[Binomial],
    vars: &[usize],
    budget: &Budget,
    verify_fixed_point: bool,
) -> Result<Saturation> {
    let mut current = Saturation { gens: gens.to_vec(), truncated: false };
    for &v in vars {
        let next = saturate(nvars, &current.gens, v, budget)?;
        current = Saturation { gens: next.gens, truncated: current.truncated || next.truncated };
    }
    if verify_fixed_point && !current.truncated {
        let mut again = current.gens.clone();
        for v in 0..nvars {
            again = saturate(nvars, &again, v, budget)?.gens;
        }
        let fixed = super::ideal_equal(nvars, &current.gens, &again, &MonomialOrder::Grevlex, budget)?;
        assert!(fixed, "saturation sweep did not reach a fixed point");
    }
    Ok(current)
}

/// Whether `I : (x_1 ⋯ x_n)^∞ = I`, i.e. the ideal is a lattice ideal.
pub fn is_saturated(nvars: usize, gens: &[Binomial], budget: &Budget) -> Result<bool> {
    if !gens.iter().all(Binomial::is_homogeneous) {
        let sat = saturate_all(nvars, gens, budget, false)?;
        return super::ideal_equal(nvars, gens, &sat.gens, &MonomialOrder::Grevlex, budget);
    }
    for var in 0..nvars {
        // with `var` last in grevlex, I : var = I iff no basis element is
        // divisible by `var`
        let perm: Vec<usize> = (0..nvars)
            .map(|i| match i.cmp(&var) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => nvars - 1,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect();
        let permuted: Vec<Binomial> = gens.iter().map(|g| g.permuted(&perm)).collect();
        let gb = buchberger(nvars, &permuted, &MonomialOrder::Grevlex, budget)?;
        if gb.is_truncated() {
            return Err(crate::error::Error::resource("saturation test needs a complete Gröbner basis"));
        }
        if gb.elements().iter().any(|g| g.plus().exponent(nvars - 1) > 0 && g.minus().exponent(nvars - 1) > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_equal;

    fn b(p: &[u32], q: &[u32]) -> Binomial {
        Binomial::new(Monomial::new(p.to_vec()), Monomial::new(q.to_vec()))
    }

    #[test]
    fn saturation_test() {
        let u = Budget::unlimited();
        assert!(is_saturated(4, &[Binomial::from_move(&[1, -1, -1, 1])], &u).unwrap());
        assert!(!is_saturated(3, &[b(&[1, 1, 0], &[1, 0, 1])], &u).unwrap());
        let lattice_basis = vec![Binomial::from_move(&[1, -2, 1, 0]), Binomial::from_move(&[0, 1, -2, 1])];
        assert!(!is_saturated(4, &lattice_basis, &u).unwrap());
    }

    #[test]
    fn strips_common_factor() {
        // x*y - x*z saturated by x is y - z
        let s = saturate(3, &[b(&[1, 1, 0], &[1, 0, 1])], 0, &Budget::unlimited()).unwrap();
        assert!(ideal_equal(3, &s.gens, &[b(&[0, 1, 0], &[0, 0, 1])], &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn nonhomogeneous_uses_elimination() {
        // x*y - x saturated by x is y - 1
        let s = saturate(2, &[b(&[1, 1], &[1, 0])], 0, &Budget::unlimited()).unwrap();
        assert!(ideal_equal(2, &s.gens, &[b(&[0, 1], &[0, 0])], &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn twisted_cubic_from_lattice_basis() {
        // lattice basis (1,-2,1,0), (0,1,-2,1)
        let gens = vec![Binomial::from_move(&[1, -2, 1, 0]), Binomial::from_move(&[0, 1, -2, 1])];
        let s = saturate_all(4, &gens, &Budget::unlimited(), true).unwrap();
        let expected = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[0, 1, 0, 1], &[0, 0, 2, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        assert!(ideal_equal(4, &s.gens, &expected, &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap());
        // the lattice-basis ideal alone is strictly smaller
        assert!(!ideal_equal(4, &gens, &expected, &MonomialOrder::Grevlex, &Budget::unlimited()).unwrap());
    }

    #[test]
    fn idempotent() {
        let gens = vec![Binomial::from_move(&[1, -2, 1, 0]), Binomial::from_move(&[0, 1, -2, 1])];
        let u = Budget::unlimited();
        for v in 0..4 {
            let once = saturate(4, &gens, v, &u).unwrap().gens;
            let twice = saturate(4, &once, v, &u).unwrap().gens;
            assert!(ideal_equal(4, &once, &twice, &MonomialOrder::Grevlex, &u).unwrap());
        }
    }
}
