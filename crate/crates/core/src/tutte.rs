//! The Tutte polynomial of a vector configuration, computed three
//! independent ways: the corank-nullity sum over all subsets, recursive
//! deletion-contraction, and the basis-activity expansion. The three agree
//! on every input; the test suite insists on it.
//!
//! Also here: the interval decomposition of the subset lattice induced by
//! basis activities, and the multivariate (subset-weighted) partition sum
//! that specializes both to the Tutte polynomial and to the Tutte polynomial
//! of any multiset dilation of the configuration.

use crate::arrangement::{ArrangementError, VectorConfiguration};
use crate::exactmath::matrix::{RationalMatrix, RowSpace};
use crate::exactmath::scalar::Rat;
use crate::exactmath::series::{SeriesError, SeriesPoly};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TutteError {
    #[error("the subset-weight sum needs a nonzero modulus")]
    ZeroModulus,
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// A Tutte polynomial together with the size and rank of the configuration
/// it came from (both enter the power-ideal formulas alongside the
/// coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), BigUint>,
    n: usize,
    rank: usize,
}

impl TuttePolynomial {
    fn from_signed(raw: BTreeMap<(usize, usize), BigInt>, n: usize, rank: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for ((i, j), c) in raw {
            if c.is_zero() {
                continue;
            }
            assert!(!c.is_negative(), "Tutte coefficient x^{i} y^{j} came out negative: {c}");
            coeffs.insert((i, j), c.to_biguint().unwrap());
        }
        Self { coeffs, n, rank }
    }

    /// Coefficient of `x^i y^j`.
    pub fn coefficient(&self, i: usize, j: usize) -> BigUint {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.coeffs
    }

    /// Ground-set size of the underlying configuration (with multiplicity).
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn eval_rat(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.coeffs {
            acc += Rat::from_integer(c.clone().into()) * pow_rat(x, i) * pow_rat(y, j);
        }
        acc
    }

    /// Substitute series for `x` and `y`; truncation comes from the
    /// arguments.
    pub fn eval_series(&self, x: &SeriesPoly, y: &SeriesPoly) -> Result<SeriesPoly, SeriesError> {
        let max_i = self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let xpow = successive_powers(x, max_i)?;
        let ypow = successive_powers(y, max_j)?;
        let mut acc = SeriesPoly::zero(&[]);
        for (&(i, j), c) in &self.coeffs {
            let term = xpow[i].mul(&ypow[j])?;
            acc = acc.add(&term.scale(&Rat::from_integer(c.clone().into())));
        }
        Ok(acc)
    }
}

fn pow_rat(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn successive_powers(base: &SeriesPoly, max: usize) -> Result<Vec<SeriesPoly>, SeriesError> {
    let mut powers = Vec::with_capacity(max + 1);
    powers.push(SeriesPoly::one(&[]));
    for i in 1..=max {
        powers.push(powers[i - 1].mul(base)?);
    }
    Ok(powers)
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || (i, j) == (0, 0) {
                parts.push(c.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Number of subsets in each (corank, nullity) class: entry `(a, b)` counts
/// subsets `A` with `rank - rank(A) = a` and `|A| - rank(A) = b`.
pub fn corank_nullity_counts(cfg: &VectorConfiguration) -> BTreeMap<(usize, usize), BigUint> {
    let rank = cfg.rank();
    let mut counts = BTreeMap::new();
    let space = RowSpace::new(cfg.ambient_dim());
    count_subsets(cfg, 0, 0, &space, rank, &mut counts);
    counts
}

fn count_subsets(
    cfg: &VectorConfiguration,
    next: usize,
    size: usize,
    space: &RowSpace,
    rank: usize,
    counts: &mut BTreeMap<(usize, usize), BigUint>,
) {
    if next == cfg.len() {
        let r = space.rank();
        *counts.entry((rank - r, size - r)).or_default() += 1u32;
        return;
    }
    count_subsets(cfg, next + 1, size, space, rank, counts);
    let mut included = space.clone();
    included.insert(cfg.covector(next).to_vec());
    count_subsets(cfg, next + 1, size + 1, &included, rank, counts);
}

/// Corank-nullity route: expand `sum over subsets of (x-1)^corank
/// (y-1)^nullity` into monomials.
pub fn tutte_by_subsets(cfg: &VectorConfiguration) -> TuttePolynomial {
    let rank = cfg.rank();
    let counts = corank_nullity_counts(cfg);
    let mut raw: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for ((a, b), count) in counts {
        let count = BigInt::from(count);
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                let c = BigInt::from(crate::exactmath::binomial(a as u64, i as u64))
                    * BigInt::from(crate::exactmath::binomial(b as u64, j as u64))
                    * &count
                    * sign;
                *raw.entry((i, j)).or_default() += c;
            }
        }
    }
    TuttePolynomial::from_signed(raw, cfg.len(), rank)
}

/// Deletion-contraction route: recurse on element 0, splitting it off as a
/// loop factor `y`, a coloop factor `x`, or the sum of deletion and
/// contraction. Minors with at least [`MEMO_THRESHOLD`] elements are shared
/// through a table keyed by their circuit signature; below that the table
/// costs more than the recursion it saves.
pub fn tutte_by_deletion_contraction(cfg: &VectorConfiguration) -> TuttePolynomial {
    let mut memo = BTreeMap::new();
    let raw = delcon(cfg, &mut memo);
    let signed = raw.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
    TuttePolynomial::from_signed(signed, cfg.len(), cfg.rank())
}

const MEMO_THRESHOLD: usize = 12;

type CoeffTable = BTreeMap<(usize, usize), BigUint>;

fn delcon(
    cfg: &VectorConfiguration,
    memo: &mut BTreeMap<Vec<Vec<usize>>, CoeffTable>,
) -> CoeffTable {
    if cfg.is_empty() {
        return BTreeMap::from([((0, 0), BigUint::one())]);
    }
    if cfg.is_loop(0) {
        let inner = delcon(&cfg.delete(0).unwrap(), memo);
        return inner.into_iter().map(|((i, j), c)| ((i, j + 1), c)).collect();
    }
    if cfg.is_coloop(0) {
        let inner = delcon(&cfg.contract(0).unwrap(), memo);
        return inner.into_iter().map(|((i, j), c)| ((i + 1, j), c)).collect();
    }
    if cfg.len() >= MEMO_THRESHOLD {
        let key = circuit_signature(cfg);
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let result = delcon_split(cfg, memo);
        memo.insert(key, result.clone());
        return result;
    }
    delcon_split(cfg, memo)
}

fn delcon_split(
    cfg: &VectorConfiguration,
    memo: &mut BTreeMap<Vec<Vec<usize>>, CoeffTable>,
) -> CoeffTable {
    let mut acc = delcon(&cfg.delete(0).unwrap(), memo);
    for (key, c) in delcon(&cfg.contract(0).unwrap(), memo) {
        *acc.entry(key).or_default() += c;
    }
    acc
}

/// The circuits (minimal dependent index sets) of the configuration, each
/// ascending, the whole list sorted. Two configurations with the same
/// signature have the same rank on every subset and hence the same Tutte
/// polynomial, so the signature is a sound (and exact) memoization key.
fn circuit_signature(cfg: &VectorConfiguration) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    for size in 1..=cfg.rank() + 1 {
        let mut subset = Vec::new();
        collect_circuits(cfg, 0, size, &mut subset, &mut found);
    }
    found.sort();
    found
}

fn collect_circuits(
    cfg: &VectorConfiguration,
    next: usize,
    size: usize,
    subset: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if subset.len() == size {
        // minimality: smaller circuits were collected in earlier passes
        let contains_smaller =
            found.iter().any(|c| c.len() < size && c.iter().all(|x| subset.contains(x)));
        if !contains_smaller && cfg.rank_of(subset.iter().copied()) < size {
            found.push(subset.clone());
        }
        return;
    }
    if cfg.len() - next < size - subset.len() {
        return;
    }
    for i in next..cfg.len() {
        subset.push(i);
        collect_circuits(cfg, i + 1, size, subset, found);
        subset.pop();
    }
}

/// All bases (maximal independent subsets), each as a sorted index vector.
pub fn bases(cfg: &VectorConfiguration) -> Vec<Vec<usize>> {
    let rank = cfg.rank();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let space = RowSpace::new(cfg.ambient_dim());
    collect_bases(cfg, 0, rank, &space, &mut current, &mut out);
    out
}

fn collect_bases(
    cfg: &VectorConfiguration,
    next: usize,
    rank: usize,
    space: &RowSpace,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == rank {
        out.push(current.clone());
        return;
    }
    // not enough elements left to finish
    if cfg.len() - next < rank - current.len() {
        return;
    }
    for i in next..cfg.len() {
        let mut extended = space.clone();
        if !extended.insert(cfg.covector(i).to_vec()) {
            continue;
        }
        current.push(i);
        collect_bases(cfg, i + 1, rank, &extended, current, out);
        current.pop();
    }
}

/// Supports of the fundamental circuits of a basis: for each `e` outside the
/// basis, the set of basis elements appearing with nonzero coefficient when
/// `l_e` is written in the basis. A loop has empty support.
fn circuit_supports(
    cfg: &VectorConfiguration,
    basis: &[usize],
) -> BTreeMap<usize, BTreeSet<usize>> {
    // built entry by entry: an empty basis must still give a matrix with
    // ambient_dim rows so that solving against loop covectors stays valid
    let mut matrix = RationalMatrix::zero(cfg.ambient_dim(), basis.len());
    for (j, &b) in basis.iter().enumerate() {
        for (i, v) in cfg.covector(b).iter().enumerate() {
            matrix[(i, j)] = v.clone();
        }
    }
    let mut supports = BTreeMap::new();
    for e in 0..cfg.len() {
        if basis.contains(&e) {
            continue;
        }
        let solution = matrix.solve(cfg.covector(e)).expect("basis spans the configuration");
        let support: BTreeSet<usize> = basis
            .iter()
            .zip(&solution)
            .filter(|(_, coeff)| !coeff.is_zero())
            .map(|(&b, _)| b)
            .collect();
        supports.insert(e, support);
    }
    supports
}

/// Internally and externally active elements of a basis. An element `e`
/// outside the basis is externally active when it precedes every element of
/// its fundamental circuit's support (in particular loops always are); an
/// element `i` of the basis is internally active when it precedes every
/// outside element whose fundamental circuit uses `i` (in particular coloops
/// always are).
pub fn basis_activities(
    cfg: &VectorConfiguration,
    basis: &[usize],
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let supports = circuit_supports(cfg, basis);
    let external: BTreeSet<usize> = supports
        .iter()
        .filter(|(e, support)| support.iter().all(|b| *e < b))
        .map(|(&e, _)| e)
        .collect();
    let internal: BTreeSet<usize> = basis
        .iter()
        .filter(|&&i| supports.iter().all(|(&e, support)| !support.contains(&i) || i < e))
        .copied()
        .collect();
    (internal, external)
}

/// Basis-activity route: `sum over bases of x^(internally active)
/// y^(externally active)`.
pub fn tutte_by_activities(cfg: &VectorConfiguration) -> TuttePolynomial {
    let mut raw: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for basis in bases(cfg) {
        let (internal, external) = basis_activities(cfg, &basis);
        *raw.entry((internal.len(), external.len())).or_default() += 1;
    }
    TuttePolynomial::from_signed(raw, cfg.len(), cfg.rank())
}

/// The subset intervals `[B - I(B), B + E(B)]` over all bases `B` partition
/// the whole subset lattice; return the unique basis whose interval contains
/// `subset`.
pub fn interval_decompose(cfg: &VectorConfiguration, subset: &BTreeSet<usize>) -> Vec<usize> {
    let mut hit = None;
    for basis in bases(cfg) {
        let (internal, external) = basis_activities(cfg, &basis);
        let lower_ok = basis.iter().all(|b| subset.contains(b) || internal.contains(b));
        let upper_ok = subset.iter().all(|e| basis.contains(e) || external.contains(e));
        if lower_ok && upper_ok {
            assert!(hit.is_none(), "subset lattice intervals overlap");
            hit = Some(basis);
        }
    }
    hit.expect("subset lattice intervals cover everything")
}

/// The subset-weighted partition sum `sum over subsets S of modulus^(-rank S)
/// * product of weights over S`, evaluated exactly over the rationals.
pub fn subset_weight_sum(
    cfg: &VectorConfiguration,
    modulus: &Rat,
    weights: &[Rat],
) -> Result<Rat, TutteError> {
    if modulus.is_zero() {
        return Err(TutteError::ZeroModulus);
    }
    if weights.len() != cfg.len() {
        return Err(TutteError::WeightLength { got: weights.len(), expected: cfg.len() });
    }
    let mut by_rank: Vec<Rat> = vec![Rat::zero(); cfg.rank() + 1];
    let space = RowSpace::new(cfg.ambient_dim());
    weight_dfs(cfg, 0, &space, &Rat::one(), weights, &mut by_rank);
    let inv = modulus.recip();
    let mut acc = Rat::zero();
    let mut power = Rat::one();
    for sum in &by_rank {
        acc += sum * &power;
        power *= &inv;
    }
    Ok(acc)
}

fn weight_dfs(
    cfg: &VectorConfiguration,
    next: usize,
    space: &RowSpace,
    product: &Rat,
    weights: &[Rat],
    by_rank: &mut [Rat],
) {
    if next == cfg.len() {
        by_rank[space.rank()] += product;
        return;
    }
    weight_dfs(cfg, next + 1, space, product, weights, by_rank);
    let scaled = product * &weights[next];
    if !scaled.is_zero() {
        let mut included = space.clone();
        included.insert(cfg.covector(next).to_vec());
        weight_dfs(cfg, next + 1, &included, &scaled, weights, by_rank);
    }
}

/// Tutte polynomial of the multiset dilation of `cfg` by `a`, evaluated at a
/// rational point directly from the subset-weight sum of the *undilated*
/// configuration: weight `y^(a_i) - 1` on element `i`, modulus
/// `(x-1)(y-1)`, outer factor `(x-1)^(rank of the support of a)`.
pub fn dilation_eval_via_weights(
    cfg: &VectorConfiguration,
    a: &[u32],
    x: &Rat,
    y: &Rat,
) -> Result<Rat, TutteError> {
    if a.len() != cfg.len() {
        return Err(TutteError::WeightLength { got: a.len(), expected: cfg.len() });
    }
    let one = Rat::one();
    let modulus = (x - &one) * (y - &one);
    let weights: Vec<Rat> = a.iter().map(|&ai| pow_rat(y, ai as usize) - &one).collect();
    let support_rank = cfg.rank_of((0..a.len()).filter(|&i| a[i] > 0));
    let z = subset_weight_sum(cfg, &modulus, &weights)?;
    Ok(pow_rat(&(x - &one), support_rank) * z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{boolean, braid, graphic};
    use crate::corpus;
    use crate::exactmath::scalar::{rat, ratq};

    fn all_routes(cfg: &VectorConfiguration) -> TuttePolynomial {
        let a = tutte_by_subsets(cfg);
        let b = tutte_by_deletion_contraction(cfg);
        let c = tutte_by_activities(cfg);
        assert_eq!(a, b, "subsets vs deletion-contraction");
        assert_eq!(a, c, "subsets vs activities");
        a
    }

    fn poly(entries: &[(usize, usize, u64)]) -> BTreeMap<(usize, usize), BigUint> {
        entries.iter().map(|&(i, j, c)| ((i, j), BigUint::from(c))).collect()
    }

    #[test]
    fn known_polynomials() {
        let t = all_routes(&corpus::u23());
        assert_eq!(t.coefficients(), &poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]));
        assert_eq!(t.to_string(), "x^2 + x + y");

        let t = all_routes(&corpus::b2());
        assert_eq!(t.coefficients(), &poly(&[(2, 0, 1)]));

        // an inessential configuration has the same matroid
        let t = all_routes(&boolean(2, 1));
        assert_eq!(t.coefficients(), &poly(&[(2, 0, 1)]));

        let t = all_routes(&corpus::example_g());
        assert_eq!(
            t.coefficients(),
            &poly(&[(3, 0, 1), (2, 1, 1), (2, 0, 1), (1, 2, 1), (1, 1, 1)])
        );
        assert_eq!(t.ground_size(), 5);
        assert_eq!(t.rank(), 3);

        let t = all_routes(&braid(3));
        assert_eq!(t.coefficients(), &poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]));

        let t = all_routes(&braid(4));
        assert_eq!(
            t.coefficients(),
            &poly(&[(3, 0, 1), (2, 0, 3), (1, 0, 2), (1, 1, 4), (0, 1, 2), (0, 2, 3), (0, 3, 1)])
        );

        let t = all_routes(&corpus::two_pencils());
        assert_eq!(t.eval_rat(&rat(1), &rat(1)), rat(18)); // 20 triples, one dependent per pencil
    }

    #[test]
    fn loops_contribute_y_factors() {
        let with_loop = graphic(&[(1, 2), (2, 3), (1, 3), (2, 2)]).unwrap();
        let t = all_routes(&with_loop);
        // y * (x^2 + x + y)
        assert_eq!(t.coefficients(), &poly(&[(2, 1, 1), (1, 1, 1), (0, 2, 1)]));
        let empty = VectorConfiguration::new(0, vec![]);
        assert_eq!(all_routes(&empty).coefficients(), &poly(&[(0, 0, 1)]));
    }

    #[test]
    fn multiset_dilation_keeps_routes_consistent() {
        let m = corpus::u23().expand_multiset(&[2, 1, 1]).unwrap();
        let t = all_routes(&m);
        assert_eq!(t.eval_rat(&rat(1), &rat(1)), rat(5));
        assert_eq!(t.ground_size(), 4);
    }

    #[test]
    fn forest_and_basis_counts() {
        let t3 = tutte_by_subsets(&braid(3));
        assert_eq!(t3.eval_rat(&rat(2), &rat(1)), rat(7)); // independent sets
        let t4 = tutte_by_subsets(&braid(4));
        assert_eq!(t4.eval_rat(&rat(1), &rat(1)), rat(16));
        assert_eq!(t4.eval_rat(&rat(2), &rat(1)), rat(38));
        assert_eq!(t4.eval_rat(&rat(2), &rat(2)), rat(64)); // all subsets
    }

    #[test]
    fn deletion_contraction_memoizes_large_minors() {
        // 14 pairwise independent planar vectors. The recursion meets the
        // rank-one 12-element minor twice (contract of delete and delete of
        // contract), so the signature table gets 5 inserts and 1 hit; a 6th
        // entry would mean the shared minor was recomputed.
        let cfg =
            VectorConfiguration::new(2, (0..14).map(|i| vec![rat(1), rat(i as i64)]).collect());
        let t = all_routes(&cfg);
        assert_eq!(t.eval_rat(&rat(1), &rat(1)), rat(91)); // C(14, 2) bases
        assert_eq!(t.eval_rat(&rat(2), &rat(2)), rat(1 << 14));
        let mut memo = BTreeMap::new();
        super::delcon(&cfg, &mut memo);
        assert_eq!(memo.len(), 5);
    }

    #[test]
    fn activity_supports_match_basis_exchange() {
        // The support of a fundamental circuit, computed by solving a linear
        // system, must agree with the basis-exchange test: b is in the
        // circuit of e over B exactly when B - b + e is again a basis.
        for cfg in [
            corpus::u23(),
            corpus::example_g(),
            braid(4),
            corpus::two_pencils(),
            corpus::u23().expand_multiset(&[2, 1, 1]).unwrap(),
            graphic(&[(1, 2), (2, 3), (1, 3), (2, 2)]).unwrap(),
        ] {
            let rank = cfg.rank();
            for basis in bases(&cfg) {
                let supports = super::circuit_supports(&cfg, &basis);
                for (e, support) in supports {
                    for &b in &basis {
                        let mut swapped: Vec<usize> =
                            basis.iter().copied().filter(|&x| x != b).collect();
                        swapped.push(e);
                        let exchangeable = cfg.rank_of(swapped.iter().copied()) == rank;
                        assert_eq!(support.contains(&b), exchangeable);
                    }
                }
            }
        }
    }

    #[test]
    fn activity_intervals_partition_the_subset_lattice() {
        for cfg in [
            corpus::u23(),
            corpus::example_g(),
            corpus::two_pencils(),
            corpus::u23().expand_multiset(&[2, 1, 1]).unwrap(),
            graphic(&[(1, 2), (2, 3), (1, 3), (2, 2)]).unwrap(),
        ] {
            let basis_list = bases(&cfg);
            let activities: Vec<_> = basis_list.iter().map(|b| basis_activities(&cfg, b)).collect();
            for mask in 0u32..(1 << cfg.len()) {
                let subset: BTreeSet<usize> =
                    (0..cfg.len()).filter(|i| mask & (1 << i) != 0).collect();
                let mut containing = 0;
                let mut found = None;
                for (basis, (internal, external)) in basis_list.iter().zip(&activities) {
                    let lower = basis.iter().all(|b| subset.contains(b) || internal.contains(b));
                    let upper = subset.iter().all(|e| basis.contains(e) || external.contains(e));
                    if lower && upper {
                        containing += 1;
                        found = Some(basis.clone());
                    }
                }
                assert_eq!(containing, 1, "subset {subset:?} of {cfg:?}");
                assert_eq!(interval_decompose(&cfg, &subset), found.unwrap());
            }
        }
    }

    #[test]
    fn activity_matches_lex_extremal_characterization() {
        // i is internally active in B exactly when B is the lex-smallest basis
        // containing B - i, and e is externally active exactly when B is the
        // lex-largest basis inside B + e (bases compared as ascending index
        // lists). The production route goes through fundamental circuits, so
        // this cross-checks it against the extremal-basis definition.
        for cfg in [
            corpus::u23(),
            corpus::example_g(),
            braid(3),
            braid(4),
            corpus::two_pencils(),
            corpus::u23().expand_multiset(&[2, 1, 1]).unwrap(),
            graphic(&[(1, 2), (2, 3), (1, 3), (2, 2)]).unwrap(),
        ] {
            let basis_list = bases(&cfg);
            for basis in &basis_list {
                let (internal, external) = basis_activities(&cfg, basis);
                for &i in basis {
                    let rest: Vec<usize> = basis.iter().copied().filter(|&x| x != i).collect();
                    let lex_min = basis_list
                        .iter()
                        .filter(|other| rest.iter().all(|x| other.contains(x)))
                        .min()
                        .unwrap();
                    assert_eq!(
                        internal.contains(&i),
                        lex_min == basis,
                        "internal activity of {i} in {basis:?}"
                    );
                }
                for e in 0..cfg.len() {
                    if basis.contains(&e) {
                        continue;
                    }
                    let lex_max = basis_list
                        .iter()
                        .filter(|other| other.iter().all(|x| basis.contains(x) || *x == e))
                        .max()
                        .unwrap();
                    assert_eq!(
                        external.contains(&e),
                        lex_max == basis,
                        "external activity of {e} outside {basis:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn subset_weight_sum_specializes_to_tutte() {
        // T(x, y) = (x-1)^rank * Z((x-1)(y-1); all weights y-1)
        let points =
            [(rat(2), rat(3)), (rat(3), rat(2)), (rat(-1), rat(2)), (ratq(1, 2), ratq(5, 3))];
        for cfg in [corpus::u23(), corpus::example_g(), braid(4)] {
            let t = tutte_by_subsets(&cfg);
            let ones = vec![1u32; cfg.len()];
            for (x, y) in &points {
                let direct = t.eval_rat(x, y);
                let via = dilation_eval_via_weights(&cfg, &ones, x, y).unwrap();
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn dilation_eval_matches_expanded_configuration() {
        let cases: Vec<(VectorConfiguration, Vec<u32>)> = vec![
            (corpus::u23(), vec![2, 1, 1]),
            (corpus::example_g(), vec![1, 2, 1, 0, 1]),
            (braid(3), vec![3, 1, 2]),
            (corpus::u23(), vec![0, 2, 0]),
        ];
        let points = [(rat(2), rat(3)), (rat(-2), rat(5)), (ratq(3, 2), ratq(7, 4))];
        for (cfg, a) in cases {
            let expanded = cfg.expand_multiset(&a).unwrap();
            let t = tutte_by_subsets(&expanded);
            for (x, y) in &points {
                let direct = t.eval_rat(x, y);
                let via = dilation_eval_via_weights(&cfg, &a, x, y).unwrap();
                assert_eq!(direct, via, "a = {a:?} at ({x}, {y})");
            }
        }
    }

    #[test]
    fn weight_sum_rejects_zero_modulus() {
        let cfg = corpus::u23();
        let weights = vec![rat(1); 3];
        assert_eq!(subset_weight_sum(&cfg, &rat(0), &weights), Err(TutteError::ZeroModulus));
        assert_eq!(
            subset_weight_sum(&cfg, &rat(1), &[rat(1)]),
            Err(TutteError::WeightLength { got: 1, expected: 3 })
        );
        // x = 1 makes the dilation modulus vanish
        assert_eq!(
            dilation_eval_via_weights(&cfg, &[1, 1, 1], &rat(1), &rat(2)),
            Err(TutteError::ZeroModulus)
        );
    }

    #[test]
    fn eval_series_substitutes_polynomials() {
        // T_{U23}(1+q, 1) = (1+q)^2 + (1+q) + 1 = 3 + 3q + q^2
        let t = tutte_by_subsets(&corpus::u23());
        let q = SeriesPoly::variable(&["q"], "q").with_var_cap("q", 8);
        let x = SeriesPoly::one(&["q"]).with_var_cap("q", 8).add(&q);
        let y = SeriesPoly::one(&["q"]).with_var_cap("q", 8);
        let val = t.eval_series(&x, &y).unwrap();
        assert_eq!(val.univariate_coeffs("q").unwrap(), vec![rat(3), rat(3), rat(1)]);
    }
}
