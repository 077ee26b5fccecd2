//! Brute-force ground truth. Everything here is computed degree by degree
//! with exact linear algebra over the rationals, straight from definitions:
//! graded dimensions of power ideals and their inverse systems, the
//! apolarity pairing, spanning families, and directional degrees of
//! polynomials. The closed formulas elsewhere in the crate are tested
//! against these numbers.
//!
//! One design point deserves a note. The ideal attached to a configuration
//! is generated by h^(rho(h)+k+1) over *all* directions h, an infinite
//! family. The function rho is constant on the (relatively open) pieces of
//! the flat decomposition, so the degree-d component of the ideal is the sum
//! over flats X of (powers of directions inside X) * (everything of
//! complementary degree). Over an infinite field, powers h^e with h ranging
//! over a dense subset of X span all of Sym^e(X) — a Veronese
//! non-degeneracy argument — so per flat the contribution is exactly
//! Sym^e(X) * Sym^(d-e)(V) with e = rho(X)+k+1. That finite description is
//! what this module row-reduces; its agreement with the independent
//! spanning-set route (spanning_set_dims) is part of the test suite.

use crate::arrangement::{ArrangementError, VectorConfiguration};
use crate::exactmath::matrix::RowSpace;
use crate::exactmath::scalar::Rat;
use crate::zonotopal::{GradedDims, LMonomial};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("power generator has an all-zero direction")]
    ZeroDirection,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("spanning families exist only for k in {{0, -1, -2}}, got {0}")]
    UnsupportedShift(i64),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// A generator h^e of a power ideal, given by an explicit direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerGenerator {
    pub direction: Vec<Rat>,
    pub exponent: u32,
}

/// A sparse polynomial with rational coefficients, exponent vectors as keys.
/// Used both for elements of the polynomial ring on V (acting as
/// differential operators) and for elements of the ring on V* (the inverse
/// system side); the pairing below ties the two together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(vec![0; nvars], value);
        }
        p
    }

    pub fn monomial(nvars: usize, exponents: &[u32], coeff: Rat) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exponents.to_vec(), coeff);
        }
        p
    }

    /// The linear form with the given coordinates.
    pub fn linear_form(coeffs: &[Rat]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut expo = vec![0; coeffs.len()];
                expo[i] = 1;
                p.terms.insert(expo, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Total degree when every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Self { nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(expo.clone()).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&expo);
                }
            }
        }
        Self { nvars: self.nvars, terms }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rat::one());
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut expo = e.clone();
            expo[var] -= 1;
            out.terms.insert(expo, c * Rat::from_integer(e[var].into()));
        }
        out
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e) {
                for _ in 0..p {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Coefficients in t of the restriction to the line anchor + t*dir,
    /// constant term first, trailing zeros trimmed.
    pub fn restrict_line(&self, anchor: &[Rat], dir: &[Rat]) -> Vec<Rat> {
        assert_eq!(anchor.len(), self.nvars);
        assert_eq!(dir.len(), self.nvars);
        let mut acc = vec![Rat::zero()];
        let mut acc_is_zero = true;
        for (e, c) in &self.terms {
            let mut term = vec![c.clone()];
            for ((a, d), &p) in anchor.iter().zip(dir).zip(e) {
                for _ in 0..p {
                    term = mul_univariate(&term, &[a.clone(), d.clone()]);
                }
            }
            if acc_is_zero {
                acc = term;
                acc_is_zero = false;
            } else {
                acc = add_univariate(&acc, &term);
            }
        }
        while acc.last().is_some_and(Zero::is_zero) {
            acc.pop();
        }
        acc
    }

    /// Apply `self` as a constant-coefficient differential operator to
    /// `target` (variable i of `self` acting as d/d(variable i of target)).
    pub fn apply_differential(&self, target: &Self) -> Self {
        assert_eq!(self.nvars, target.nvars);
        let mut out = Self::zero(self.nvars);
        for (kappa, c) in &self.terms {
            for (alpha, g) in &target.terms {
                if kappa.iter().zip(alpha).any(|(k, a)| k > a) {
                    continue;
                }
                let mut falling = BigInt::one();
                let expo: Vec<u32> = alpha
                    .iter()
                    .zip(kappa)
                    .map(|(&a, &k)| {
                        for step in 0..k {
                            falling *= BigInt::from(a - step);
                        }
                        a - k
                    })
                    .collect();
                let add = c * g * Rat::from_integer(falling);
                let entry = out.terms.entry(expo.clone()).or_insert_with(Rat::zero);
                *entry += add;
                if entry.is_zero() {
                    out.terms.remove(&expo);
                }
            }
        }
        out
    }
}

fn add_univariate(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn mul_univariate(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// The apolarity pairing: sum over exponent vectors of
/// `f_alpha * g_alpha * alpha!`. Equals `f(d/dy) g` evaluated at 0. The
/// factorials are kept (no 1/alpha! normalization); only vanishing matters
/// downstream, and exactness is free.
pub fn apolarity_pair(f: &Polynomial, g: &Polynomial) -> Rat {
    assert_eq!(f.nvars, g.nvars);
    let mut acc = Rat::zero();
    for (alpha, cf) in &f.terms {
        if let Some(cg) = g.terms.get(alpha) {
            let mut factorial = BigInt::one();
            for &a in alpha {
                factorial *= BigInt::from(crate::exactmath::factorial(a as u64));
            }
            acc += cf * cg * Rat::from_integer(factorial);
        }
    }
    acc
}

/// Exponent vectors of the degree-d monomials in `nvars` variables,
/// lexicographically largest first.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(nvars);
    fn rec(nvars: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() + 1 == nvars {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in (0..=remaining).rev() {
            current.push(v);
            rec(nvars, remaining - v, current, out);
            current.pop();
        }
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, degree, &mut current, &mut out);
    out
}

/// A power-ideal generator supported on a whole subspace: all of
/// Sym^exponent of the span of `basis`.
struct FlatGenerator {
    basis: Vec<Vec<Rat>>,
    exponent: i64,
}

/// Homogeneous generators of Sym^e(span of basis), expanded in ambient
/// coordinates: the degree-e monomials in the basis vectors seen as linear
/// forms.
fn sym_power_basis(basis: &[Vec<Rat>], e: u32, ambient: usize) -> Vec<Polynomial> {
    let forms: Vec<Polynomial> = basis.iter().map(|u| Polynomial::linear_form(u)).collect();
    let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(forms.len());
    for form in &forms {
        let mut column = Vec::with_capacity(e as usize + 1);
        column.push(Polynomial::constant(ambient, Rat::one()));
        for p in 1..=e {
            column.push(column[(p - 1) as usize].mul(form));
        }
        powers.push(column);
    }
    monomials_of_degree(basis.len(), e)
        .into_iter()
        .map(|beta| {
            let mut acc = Polynomial::constant(ambient, Rat::one());
            for (i, &b) in beta.iter().enumerate() {
                if b > 0 {
                    acc = acc.mul(&powers[i][b as usize]);
                }
            }
            acc
        })
        .collect()
}

/// Graded dimensions of the quotient by the ideal generated by the given
/// subspace powers, degrees 0..=max_degree. Any nonpositive exponent makes
/// the ideal contain 1, killing the quotient outright. Once a degree's
/// quotient hits zero it stays zero (the ideal contains the whole degree and
/// hence all multiples), so the tail is filled without further work.
fn quotient_dims(ambient: usize, gens: &[FlatGenerator], max_degree: usize) -> GradedDims {
    if gens.iter().any(|g| g.exponent <= 0) {
        return GradedDims::zero();
    }
    let mut dims = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let monomials = monomials_of_degree(ambient, d as u32);
        let index: BTreeMap<&Vec<u32>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut space = RowSpace::new(monomials.len());
        'fill: for gen in gens {
            let e = gen.exponent as u32;
            if e as usize > d {
                continue;
            }
            for sym in sym_power_basis(&gen.basis, e, ambient) {
                for cofactor in monomials_of_degree(ambient, (d - e as usize) as u32) {
                    let mut row = vec![Rat::zero(); monomials.len()];
                    for (expo, c) in sym.terms() {
                        let shifted: Vec<u32> =
                            expo.iter().zip(&cofactor).map(|(a, b)| a + b).collect();
                        row[index[&shifted]] = c.clone();
                    }
                    space.insert(row);
                    if space.is_full() {
                        break 'fill;
                    }
                }
            }
        }
        dims.push(BigUint::from(monomials.len() - space.rank()));
        if space.is_full() {
            break;
        }
    }
    GradedDims::from_dims(dims)
}

/// Quotient dimensions for an explicit list of single-direction power
/// generators.
pub fn custom_ideal_dims(
    dim: usize,
    generators: &[PowerGenerator],
    max_degree: usize,
) -> Result<GradedDims, OracleError> {
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        if g.direction.len() != dim {
            return Err(OracleError::DimensionMismatch { got: g.direction.len(), expected: dim });
        }
        if g.direction.iter().all(Zero::is_zero) {
            return Err(OracleError::ZeroDirection);
        }
        gens.push(FlatGenerator { basis: vec![g.direction.clone()], exponent: g.exponent as i64 });
    }
    Ok(quotient_dims(dim, &gens, max_degree))
}

/// Quotient dimensions of the full power ideal of the configuration with
/// shift `k`: one subspace generator per flat of dimension >= 1 (the ambient
/// space included), exponent rho(flat) + k + 1. Valid for every integer k.
pub fn flats_ideal_dims(cfg: &VectorConfiguration, k: i64, max_degree: usize) -> GradedDims {
    let gens: Vec<FlatGenerator> = cfg
        .flats(1)
        .into_iter()
        .map(|f| FlatGenerator { basis: f.basis.clone(), exponent: f.rho as i64 + k + 1 })
        .collect();
    quotient_dims(cfg.ambient_dim(), &gens, max_degree)
}

/// Quotient dimensions of the smaller ideal generated only at the
/// arrangement's lines, exponent rho(line) + k + 1 each. Needs an essential
/// configuration for the lines to cut out the right ideal.
pub fn lines_ideal_dims(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<GradedDims, OracleError> {
    let lines = cfg.lines()?;
    let gens: Vec<FlatGenerator> = lines
        .into_iter()
        .map(|dir| {
            let rational: Vec<Rat> = dir.into_iter().map(Rat::from_integer).collect();
            let rho = cfg.directional_degree(&rational) as i64;
            FlatGenerator { basis: vec![rational], exponent: rho + k + 1 }
        })
        .collect();
    Ok(quotient_dims(cfg.ambient_dim(), &gens, max_degree))
}

/// Graded ranks of the covector-product spanning families of the inverse
/// system, for k in {0, -1, -2}:
///   k =  0: products l_S over all subsets S;
///   k = -1: S whose complement has full rank;
///   k = -2: S whose complement keeps full rank after removing at most one
///           more element (whole space is zero if a coloop exists).
pub fn spanning_set_dims(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<GradedDims, OracleError> {
    if !(-2..=0).contains(&k) {
        return Err(OracleError::UnsupportedShift(k));
    }
    if k == -2 && !cfg.coloops().is_empty() {
        return Ok(GradedDims::zero());
    }
    let n = cfg.len();
    let rank = cfg.rank();
    let ambient = cfg.ambient_dim();
    let mut dims = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let monomials = monomials_of_degree(ambient, d as u32);
        let index: BTreeMap<&Vec<u32>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut space = RowSpace::new(monomials.len());
        if d <= n {
            for subset in subsets_of_size(n, d) {
                if !subset_admissible(cfg, &subset, k, rank) {
                    continue;
                }
                let mut product = Polynomial::constant(ambient, Rat::one());
                for &s in &subset {
                    product = product.mul(&Polynomial::linear_form(cfg.covector(s)));
                }
                if product.is_zero() {
                    continue;
                }
                let mut row = vec![Rat::zero(); monomials.len()];
                for (expo, c) in product.terms() {
                    row[index[expo]] = c.clone();
                }
                space.insert(row);
            }
        }
        dims.push(BigUint::from(space.rank()));
    }
    Ok(GradedDims::from_dims(dims))
}

fn subset_admissible(cfg: &VectorConfiguration, subset: &[usize], k: i64, rank: usize) -> bool {
    match k {
        0 => true,
        -1 => cfg.rank_of(complement(cfg.len(), subset)) == rank,
        // The complement must keep full rank after removing any one element —
        // including removing none, which rules out S = [n]. Quantifying only
        // over x outside S would admit S = [n] vacuously, and the product of
        // all covectors is generally not in the k = -2 space.
        _ => (0..cfg.len()).all(|x| {
            cfg.rank_of(complement(cfg.len(), subset).into_iter().filter(move |&y| y != x)) == rank
        }),
    }
}

fn complement(n: usize, subset: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !subset.contains(i)).collect()
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(
        n: usize,
        size: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < size - current.len() {
                break;
            }
            current.push(i);
            rec(n, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, size, 0, &mut current, &mut out);
    out
}

/// Membership test for the inverse system with shift k: true iff every
/// flat-based ideal generator of degree at most deg(candidate) kills the
/// candidate as a differential operator. Generators of higher degree cannot
/// fail, so the cutoff loses nothing.
pub fn annihilation_check(cfg: &VectorConfiguration, k: i64, candidate: &Polynomial) -> bool {
    if candidate.is_zero() {
        return true;
    }
    let ambient = cfg.ambient_dim();
    assert_eq!(candidate.nvars(), ambient);
    let top = candidate.degree().unwrap_or(0);
    for flat in cfg.flats(1) {
        let e = flat.rho as i64 + k + 1;
        if e <= 0 {
            // the ideal contains a unit; only the zero polynomial survives
            return false;
        }
        let e = e as u32;
        if e > top {
            continue;
        }
        for gen in sym_power_basis(&flat.basis, e, ambient) {
            if !gen.apply_differential(candidate).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Expand a basis monomial record into the actual product of covector
/// powers, as a polynomial on the dual side.
pub fn expand_monomial(cfg: &VectorConfiguration, monomial: &LMonomial) -> Polynomial {
    let mut acc = Polynomial::constant(cfg.ambient_dim(), Rat::one());
    for (i, &e) in monomial.exponents.iter().enumerate() {
        if e > 0 {
            acc = acc.mul(&Polynomial::linear_form(cfg.covector(i)).pow(e));
        }
    }
    acc
}

/// Degree of `f` along direction `h`: the t-degree of the restriction of
/// `f` to a generic line with direction `h`. Genericity can only lower the
/// reading, so the maximum over `trials` seeded random anchors is reported;
/// for homogeneous `f` the exact value is computed instead from the
/// vanishing order at `h` (degree = deg f - order) and the sampled value is
/// required not to exceed it.
pub fn directional_degree_poly(
    f: &Polynomial,
    h: &[Rat],
    trials: u32,
    seed: u64,
) -> Result<u32, OracleError> {
    if h.len() != f.nvars() {
        return Err(OracleError::DimensionMismatch { got: h.len(), expected: f.nvars() });
    }
    if h.iter().all(Zero::is_zero) {
        return Err(OracleError::ZeroDirection);
    }
    if f.is_zero() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = 0u32;
    for _ in 0..trials.max(1) {
        let anchor: Vec<Rat> = (0..f.nvars())
            .map(|_| Rat::from_integer(rng.random_range(-20i64..=20).into()))
            .collect();
        let coeffs = f.restrict_line(&anchor, h);
        sampled = sampled.max(coeffs.len().saturating_sub(1) as u32);
    }
    if let Some(d) = f.homogeneous_degree() {
        let order = vanishing_order(f, h, d);
        let exact = d - order;
        assert!(
            sampled <= exact,
            "sampled directional degree {sampled} exceeded the exact value {exact}"
        );
        return Ok(exact);
    }
    Ok(sampled)
}

/// Smallest total order of a partial derivative of `f` that is nonzero at
/// `point`; `top` bounds the search (degree of f).
fn vanishing_order(f: &Polynomial, point: &[Rat], top: u32) -> u32 {
    for order in 0..=top {
        for kappa in monomials_of_degree(f.nvars(), order) {
            let probe = Polynomial::monomial(f.nvars(), &kappa, Rat::one());
            if !probe.apply_differential(f).eval(point).is_zero() {
                return order;
            }
        }
    }
    top + 1
}
