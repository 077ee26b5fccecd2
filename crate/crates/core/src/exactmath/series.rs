//! Truncated multivariate power series / polynomials over Q.
//!
//! A [`SeriesPoly`] is a finite map from exponent vectors to nonzero rational
//! coefficients, together with optional truncation bounds (per-variable caps
//! and/or a total-degree cap). Every operation drops terms beyond the bounds,
//! and combining two series keeps the tighter bound per variable. Zero terms
//! are never stored. Multiplicative operations enforce a term-count budget
//! (default one million terms) and fail hard instead of thrashing.

use super::scalar::{format_rat, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on the number of stored terms for multiplicative operations.
pub const DEFAULT_TERM_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,
    #[error("inversion of a non-constant series needs a truncation bound")]
    MissingTruncation,
    #[error("term budget exceeded ({budget} terms)")]
    TermBudgetExceeded { budget: usize },
    #[error("no variable named {0:?} in this series")]
    NoSuchVariable(String),
    #[error("series is not univariate in {0:?}")]
    NotUnivariate(String),
    #[error("exact division impossible: {0}")]
    InexactDivision(String),
}

/// Truncation bounds. `None` entries mean unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Truncation {
    pub per_var: Vec<Option<u32>>,
    pub total: Option<u32>,
}

impl Truncation {
    fn none(nvars: usize) -> Self {
        Self { per_var: vec![None; nvars], total: None }
    }

    fn admits(&self, expo: &[u32]) -> bool {
        if let Some(t) = self.total {
            if expo.iter().sum::<u32>() > t {
                return false;
            }
        }
        expo.iter().zip(&self.per_var).all(|(e, cap)| cap.is_none_or(|c| *e <= c))
    }

    /// Componentwise tighter of the two bounds.
    fn merged(&self, other: &Self) -> Self {
        let per_var = self
            .per_var
            .iter()
            .zip(&other.per_var)
            .map(|(a, b)| match (a, b) {
                (Some(x), Some(y)) => Some(*x.min(y)),
                (Some(x), None) | (None, Some(x)) => Some(*x),
                (None, None) => None,
            })
            .collect();
        let total = match (self.total, other.total) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) | (None, x) => x,
        };
        Self { per_var, total }
    }
}

/// Truncated multivariate series with exact rational coefficients.
#[derive(Debug, Clone)]
pub struct SeriesPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
    trunc: Truncation,
    budget: Option<usize>,
}

impl SeriesPoly {
    pub fn zero(vars: &[&str]) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let trunc = Truncation::none(vars.len());
        Self { vars, terms: BTreeMap::new(), trunc, budget: None }
    }

    pub fn constant(vars: &[&str], value: Rat) -> Self {
        let mut s = Self::zero(vars);
        if !value.is_zero() {
            s.terms.insert(vec![0; s.vars.len()], value);
        }
        s
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn variable(vars: &[&str], name: &str) -> Self {
        let mut s = Self::zero(vars);
        let idx = s.var_index(name).expect("variable not in list");
        let mut expo = vec![0; s.vars.len()];
        expo[idx] = 1;
        s.terms.insert(expo, Rat::one());
        s
    }

    pub fn monomial(vars: &[&str], expo: &[u32], coeff: Rat) -> Self {
        let mut s = Self::zero(vars);
        assert_eq!(expo.len(), s.vars.len());
        if !coeff.is_zero() {
            s.terms.insert(expo.to_vec(), coeff);
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Cap a single variable's degree; terms beyond it are dropped now and in
    /// all subsequent operations.
    pub fn with_var_cap(mut self, name: &str, cap: u32) -> Self {
        let idx = self.var_index(name).expect("variable not in list");
        let new = match self.trunc.per_var[idx] {
            Some(old) => old.min(cap),
            None => cap,
        };
        self.trunc.per_var[idx] = Some(new);
        self.apply_truncation();
        self
    }

    pub fn with_total_cap(mut self, cap: u32) -> Self {
        self.trunc.total = Some(self.trunc.total.map_or(cap, |t| t.min(cap)));
        self.apply_truncation();
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    fn apply_truncation(&mut self) {
        let trunc = self.trunc.clone();
        self.terms.retain(|expo, _| trunc.admits(expo));
    }

    /// Rebuild both operands over the union variable list (left order first,
    /// unseen right variables appended), remapping exponents and bounds.
    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut union = self.vars.clone();
        for v in &other.vars {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        (self.remapped(&union), other.remapped(&union))
    }

    fn remapped(&self, union: &[String]) -> Self {
        let map: Vec<usize> =
            self.vars.iter().map(|v| union.iter().position(|u| u == v).unwrap()).collect();
        let mut terms = BTreeMap::new();
        for (expo, coeff) in &self.terms {
            let mut new = vec![0u32; union.len()];
            for (old_idx, &new_idx) in map.iter().enumerate() {
                new[new_idx] = expo[old_idx];
            }
            terms.insert(new, coeff.clone());
        }
        let mut per_var = vec![None; union.len()];
        for (old_idx, &new_idx) in map.iter().enumerate() {
            per_var[new_idx] = self.trunc.per_var[old_idx];
        }
        Self {
            vars: union.to_vec(),
            terms,
            trunc: Truncation { per_var, total: self.trunc.total },
            budget: self.budget,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        a.trunc = a.trunc.merged(&b.trunc);
        a.budget = match (a.budget, b.budget) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) | (None, x) => x,
        };
        for (expo, coeff) in b.terms {
            if !a.trunc.admits(&expo) {
                continue;
            }
            let entry = a.terms.entry(expo).or_insert_with(Rat::zero);
            *entry += coeff;
            if entry.is_zero() {
                // remove exact cancellations eagerly
            }
        }
        a.terms.retain(|_, c| !c.is_zero());
        a.apply_truncation();
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = -coeff.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        let mut out = self.clone();
        if factor.is_zero() {
            out.terms.clear();
            return out;
        }
        for coeff in out.terms.values_mut() {
            *coeff *= factor;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let (a, b) = self.aligned(other);
        let trunc = a.trunc.merged(&b.trunc);
        let budget = match (a.budget, b.budget) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) | (None, x) => x,
        };
        let limit = budget.unwrap_or(DEFAULT_TERM_BUDGET);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        // iterate the smaller operand outside for fewer passes
        let (outer, inner) = if a.terms.len() <= b.terms.len() { (&a, &b) } else { (&b, &a) };
        for (eo, co) in &outer.terms {
            for (ei, ci) in &inner.terms {
                let expo: Vec<u32> = eo.iter().zip(ei).map(|(x, y)| x + y).collect();
                if !trunc.admits(&expo) {
                    continue;
                }
                let entry = terms.entry(expo).or_insert_with(Rat::zero);
                *entry += co * ci;
                if terms.len() > limit {
                    return Err(SeriesError::TermBudgetExceeded { budget: limit });
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { vars: a.vars, terms, trunc, budget })
    }

    pub fn pow(&self, exponent: u32) -> Result<Self, SeriesError> {
        let mut acc = Self::one(&self.vars.iter().map(String::as_str).collect::<Vec<_>>());
        acc.trunc = self.trunc.clone();
        acc.budget = self.budget;
        for _ in 0..exponent {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series with nonzero constant term, as a
    /// geometric series truncated by the active bounds. A non-constant series
    /// must carry a bound on every variable it uses (or a total cap), since
    /// its inverse has infinitely many terms.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        let c = self.coefficient(&vec![0; self.vars.len()]);
        if c.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv_c = c.recip();
        if self.terms.len() == 1 {
            let mut out = self.clone();
            out.terms.clear();
            out.terms.insert(vec![0; out.vars.len()], inv_c);
            return Ok(out);
        }
        let steps = self.inversion_steps()?;
        // self = c (1 - u); 1/self = (1/c) * sum u^i
        let u = {
            let mut u = self.scale(&-inv_c.clone());
            let key = vec![0; u.vars.len()];
            let entry = u.terms.entry(key).or_insert_with(Rat::zero);
            *entry += Rat::one();
            u.terms.retain(|_, v| !v.is_zero());
            u
        };
        let one = Self::one(&self.vars.iter().map(String::as_str).collect::<Vec<_>>());
        let mut acc = one.clone();
        acc.trunc = self.trunc.clone();
        acc.budget = self.budget;
        for _ in 0..steps {
            acc = one.add(&u.mul(&acc)?);
        }
        Ok(acc.scale(&inv_c))
    }

    fn inversion_steps(&self) -> Result<u32, SeriesError> {
        if let Some(t) = self.trunc.total {
            return Ok(t);
        }
        let mut used = vec![false; self.vars.len()];
        for expo in self.terms.keys() {
            for (flag, e) in used.iter_mut().zip(expo) {
                *flag |= *e > 0;
            }
        }
        let mut sum = 0u32;
        for (i, flag) in used.iter().enumerate() {
            if *flag {
                match self.trunc.per_var[i] {
                    Some(cap) => sum += cap,
                    None => return Err(SeriesError::MissingTruncation),
                }
            }
        }
        Ok(sum)
    }

    /// Replace `name` by `replacement` (which must not itself use `name`).
    pub fn substitute(&self, name: &str, replacement: &Self) -> Result<Self, SeriesError> {
        let idx =
            self.var_index(name).ok_or_else(|| SeriesError::NoSuchVariable(name.to_string()))?;
        assert!(
            replacement.var_index(name).is_none_or(|i| replacement.terms.keys().all(|e| e[i] == 0)),
            "replacement reuses the substituted variable"
        );
        let max_e = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0);
        let rest_vars: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let mut result = SeriesPoly::zero(&rest_vars);
        let mut power =
            SeriesPoly::one(&replacement.vars.iter().map(String::as_str).collect::<Vec<_>>());
        power.trunc = replacement.trunc.clone();
        power.budget = replacement.budget;
        for e in 0..=max_e {
            let slice = self.coefficient_of(name, e)?;
            if !slice.is_zero() {
                result = result.add(&slice.mul(&power)?);
            }
            if e < max_e {
                power = power.mul(replacement)?;
            }
        }
        Ok(result)
    }

    /// The coefficient of `name^power` as a series in the remaining variables.
    pub fn coefficient_of(&self, name: &str, power: u32) -> Result<Self, SeriesError> {
        let idx =
            self.var_index(name).ok_or_else(|| SeriesError::NoSuchVariable(name.to_string()))?;
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let mut terms = BTreeMap::new();
        for (expo, coeff) in &self.terms {
            if expo[idx] == power {
                let mut new = expo.clone();
                new.remove(idx);
                terms.insert(new, coeff.clone());
            }
        }
        let mut per_var = self.trunc.per_var.clone();
        per_var.remove(idx);
        let total = self.trunc.total.map(|t| t.saturating_sub(power));
        Ok(Self { vars, terms, trunc: Truncation { per_var, total }, budget: self.budget })
    }

    pub fn coefficient(&self, expo: &[u32]) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&vec![0; self.vars.len()])
    }

    pub fn max_degree_in(&self, name: &str) -> Option<u32> {
        let idx = self.var_index(name)?;
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Divide every term by `name^power`; fails unless every term is
    /// divisible. Used to undo a clearing factor that was multiplied in to
    /// avoid negative exponents.
    pub fn shift_down(&self, name: &str, power: u32) -> Result<Self, SeriesError> {
        let idx =
            self.var_index(name).ok_or_else(|| SeriesError::NoSuchVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        for (expo, coeff) in &self.terms {
            if expo[idx] < power {
                return Err(SeriesError::InexactDivision(format!(
                    "term with {}^{} below clearing exponent {}",
                    name, expo[idx], power
                )));
            }
            let mut new = expo.clone();
            new[idx] -= power;
            terms.insert(new, coeff.clone());
        }
        let mut out = self.clone();
        out.terms = terms;
        if let Some(cap) = out.trunc.per_var[idx] {
            out.trunc.per_var[idx] = Some(cap.saturating_sub(power));
        }
        if let Some(t) = out.trunc.total {
            out.trunc.total = Some(t.saturating_sub(power));
        }
        Ok(out)
    }

    /// Coefficient vector `[c_0, ..., c_d]` for a series that only uses
    /// `name`.
    pub fn univariate_coeffs(&self, name: &str) -> Result<Vec<Rat>, SeriesError> {
        let idx =
            self.var_index(name).ok_or_else(|| SeriesError::NoSuchVariable(name.to_string()))?;
        for expo in self.terms.keys() {
            if expo.iter().enumerate().any(|(i, e)| i != idx && *e > 0) {
                return Err(SeriesError::NotUnivariate(name.to_string()));
            }
        }
        let deg = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0) as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        for (expo, coeff) in &self.terms {
            out[expo[idx] as usize] = coeff.clone();
        }
        Ok(out)
    }
}

/// Value equality after variable alignment; truncation metadata is not part
/// of the value.
impl PartialEq for SeriesPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}
impl Eq for SeriesPoly {}

impl std::fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), (*e).clone()));
        let mut first = true;
        for expo in keys {
            let coeff = &self.terms[expo];
            let mut factors = Vec::new();
            for (i, &e) in expo.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            let coeff_str = format_rat(&coeff.abs());
            let body = if factors.is_empty() {
                coeff_str
            } else if coeff.abs().is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", coeff_str, factors.join("*"))
            };
            if first {
                if coeff < &Rat::zero() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if coeff < &Rat::zero() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::rat;

    fn q() -> SeriesPoly {
        SeriesPoly::variable(&["q"], "q")
    }

    #[test]
    fn truncated_product_drops_high_terms() {
        // (1+q)^2 truncated at q^1 -> 1 + 2q
        let one_plus_q = SeriesPoly::one(&["q"]).add(&q()).with_var_cap("q", 1);
        let sq = one_plus_q.mul(&one_plus_q).unwrap();
        assert_eq!(sq, SeriesPoly::one(&["q"]).add(&q().scale(&rat(2))));
    }

    #[test]
    fn geometric_inverse_of_one_minus_q() {
        let s = SeriesPoly::one(&["q"]).sub(&q()).with_var_cap("q", 4);
        let inv = s.invert_unit().unwrap();
        let expected: Vec<Rat> = (0..=4).map(|_| rat(1)).collect();
        assert_eq!(inv.univariate_coeffs("q").unwrap(), expected);
        // inverse times original is 1 up to the cap
        assert_eq!(inv.mul(&s).unwrap(), SeriesPoly::one(&["q"]));
    }

    #[test]
    fn invert_requires_unit_and_bound() {
        let s = q();
        assert_eq!(s.invert_unit().unwrap_err(), SeriesError::ZeroConstantTerm);
        let unbounded = SeriesPoly::one(&["q"]).sub(&q());
        assert_eq!(unbounded.invert_unit().unwrap_err(), SeriesError::MissingTruncation);
    }

    #[test]
    fn bivariate_coefficient_extraction() {
        // (1 + q z)^3: [z^2] = 3 q^2
        let qz = SeriesPoly::variable(&["q", "z"], "q")
            .mul(&SeriesPoly::variable(&["q", "z"], "z"))
            .unwrap();
        let s = SeriesPoly::one(&["q", "z"]).add(&qz).pow(3).unwrap();
        let slice = s.coefficient_of("z", 2).unwrap();
        assert_eq!(slice.univariate_coeffs("q").unwrap(), vec![rat(0), rat(0), rat(3)]);
    }

    #[test]
    fn substitute_z_for_polynomial() {
        // f(q, z) = 1 + q z; z -> q gives 1 + q^2
        let qz = SeriesPoly::variable(&["q", "z"], "q")
            .mul(&SeriesPoly::variable(&["q", "z"], "z"))
            .unwrap();
        let f = SeriesPoly::one(&["q", "z"]).add(&qz);
        let sub = f.substitute("z", &q()).unwrap();
        let expected = SeriesPoly::one(&["q"]).add(&q().pow(2).unwrap());
        assert_eq!(sub, expected);
    }

    #[test]
    fn tighter_truncation_wins_when_combining() {
        let a = q().with_var_cap("q", 5);
        let b = SeriesPoly::one(&["q"]).add(&q()).with_var_cap("q", 2);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.truncation().per_var, vec![Some(2)]);
        // q*(1+q) = q + q^2, all within the cap
        assert_eq!(prod.univariate_coeffs("q").unwrap(), vec![rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn term_budget_is_enforced() {
        let a = SeriesPoly::one(&["x", "y"])
            .add(&SeriesPoly::variable(&["x", "y"], "x"))
            .add(&SeriesPoly::variable(&["x", "y"], "y"))
            .with_budget(5);
        let err = a.pow(4).unwrap_err();
        assert_eq!(err, SeriesError::TermBudgetExceeded { budget: 5 });
    }

    #[test]
    fn alignment_merges_distinct_variable_sets() {
        let a = SeriesPoly::variable(&["x"], "x");
        let b = SeriesPoly::variable(&["y"], "y");
        let sum = a.add(&b);
        assert_eq!(sum.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(sum.coefficient(&[1, 0]), rat(1));
        assert_eq!(sum.coefficient(&[0, 1]), rat(1));
    }

    #[test]
    fn shift_down_requires_divisibility() {
        let t2 = SeriesPoly::monomial(&["t"], &[2], rat(5));
        assert_eq!(t2.shift_down("t", 2).unwrap().univariate_coeffs("t").unwrap(), vec![rat(5)]);
        let bad = SeriesPoly::one(&["t"]).shift_down("t", 1);
        assert!(matches!(bad, Err(SeriesError::InexactDivision(_))));
    }

    #[test]
    fn display_is_graded_and_signed() {
        let s = SeriesPoly::one(&["q"])
            .sub(&q().scale(&rat(2)))
            .add(&q().pow(3).unwrap().scale(&crate::exactmath::scalar::ratq(1, 2)));
        assert_eq!(s.to_string(), "1 - 2*q + 1/2*q^3");
    }
}
