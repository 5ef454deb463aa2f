//! Plain-text binomials: `x[(1,1)]*x[(2,2)] - x[(1,2)]*x[(2,1)]`.
//!
//! Variable names come from a [`VariableSet`]; powers are written `name^k`
//! and the empty monomial is `1`.

use super::{Binomial, Monomial, Polynomial, VariableSet};
use crate::error::{Error, Result};

pub fn format_monomial(m: &Monomial, vars: &VariableSet) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i).to_string()
            } else {
                format!("{}^{e}", vars.name(i))
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_binomial(b: &Binomial, vars: &VariableSet) -> String {
    format!("{} - {}", format_monomial(b.plus(), vars), format_monomial(b.minus(), vars))
}

/// Splits at top-level `+`/`-`, keeping the sign with each summand.
fn summands(s: &str) -> Result<Vec<(i64, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut sign = 1i64;
    let mut start = 0usize;
    let mut seen_content = false;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let piece = s[start..i].trim();
                if piece.is_empty() {
                    if seen_content {
                        return Err(Error::Parse(format!("empty term at byte {i} in {s:?}")));
                    }
                } else {
                    out.push((sign, piece));
                }
                seen_content = true;
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced bracket at byte {i} in {s:?}")));
        }
        if !c.is_whitespace() {
            seen_content = true;
        }
    }
    let piece = s[start..].trim();
    if piece.is_empty() {
        return Err(Error::Parse(format!("expression ends without a term: {s:?}")));
    }
    out.push((sign, piece));
    Ok(out)
}

fn parse_term(term: &str, vars: &VariableSet) -> Result<(i64, Monomial)> {
    let mut coeff = 1i64;
    let mut m = Monomial::one(vars.len());
    for factor in term.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            let c: i64 = factor.parse().map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
            coeff *= c;
            continue;
        }
        let (name, power) = match factor.rsplit_once('^') {
            Some((n, p)) => (
                n.trim(),
                p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let var = vars
            .position(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        let e = &mut m.exps_mut()[var];
        *e = e.checked_add(power).ok_or_else(|| Error::Parse("exponent overflow".into()))?;
    }
    Ok((coeff, m))
}

pub fn parse_polynomial(s: &str, vars: &VariableSet) -> Result<Polynomial> {
    let terms = summands(s)?
        .into_iter()
        .map(|(sign, t)| parse_term(t, vars).map(|(c, m)| (sign * c, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(terms))
}

/// Parses `m1 - m2`. Anything that is not a difference of two monomials with
/// unit coefficients is rejected.
pub fn parse_binomial(s: &str, vars: &VariableSet) -> Result<Binomial> {
    let p = parse_polynomial(s, vars)?;
    p.as_binomial(vars.len())
        .ok_or_else(|| Error::Parse(format!("not a binomial with unit coefficients: {s:?}")))
}
