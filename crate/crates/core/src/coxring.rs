//! Multigraded Hilbert series of the zonotopal Cox ring of an essential
//! configuration and of its central and internal modules, by two routes.
//!
//! The direct route fills a table entry by entry: the dimension in bidegree
//! (d, a) is the degree-d coefficient of the inverse-system Hilbert series of
//! the multiset dilation by a, at shift 0 (ring), -1 (central) or -2
//! (internal). The closed-form route evaluates a single generating function
//! in the variables (t, t_1, ..., t_n) built from subset sums over the
//! configuration, and reads all entries out of one series expansion. The two
//! routes must agree on the whole truncation window; the tests enforce it.
//!
//! Closed forms, with r(.) the rank of a subset and every exponent in sight
//! nonnegative (so no denominator ever needs clearing):
//!
//!   ring:     [prod_i 1/(1-t_i t)] sum over B of
//!                 (1-t)^(|B|-r(B)) prod_{i in B} t_i/(1-t_i)
//!   central:  sum over pairs S subset of D, S spanning D, of
//!                 (1-t)^(|S|-r(D)) t^(|D|-|S|)
//!                 prod_{i in D} t_i/(1-t_i t) prod_{i in S} 1/(1-t_i)
//!   internal: sum over pairs B subset of D of
//!                 (-1)^(r(D)+r(B)) t^(|D|-|B|+r(B)-r(D)) (1-t)^(|B|-r(B))
//!                 prod_{i in D} t_i/(1-t_i t) prod_{i in B} 1/(1-t_i)
//!
//! (central: S spans D, so |S| >= r(S) = r(D); internal: removing D - B
//! from D drops rank by at most |D| - |B|, so the t-exponent is >= 0.)
//!
//! The grading by the lines of the configuration ("true" grading) is the
//! pushforward of the (d, a) table along a -> H a, where H is the 0/1
//! non-containment matrix between lines and hyperplanes; distinct a landing
//! on the same image add up.

use crate::arrangement::{ArrangementError, VectorConfiguration};
use crate::exactmath::scalar::{is_nonneg_integer, Rat};
use crate::exactmath::series::{SeriesError, SeriesPoly};
use crate::tutte::tutte_by_subsets;
use crate::zonotopal::{hilbert_series, ZonotopalError};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

pub const DEFAULT_MAX_T: usize = 6;
pub const DEFAULT_MAX_A: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Zonotopal(#[from] ZonotopalError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which multigraded object the table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxMode {
    Ring,
    Central,
    Internal,
}

impl CoxMode {
    /// Shift of the inverse system the direct route reads dimensions from.
    pub fn shift(self) -> i64 {
        match self {
            CoxMode::Ring => 0,
            CoxMode::Central => -1,
            CoxMode::Internal => -2,
        }
    }
}

/// 0/1 incidence between the lines of an essential configuration and its
/// hyperplanes: entry (i, j) is 0 exactly when line i lies on hyperplane j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineHyperplaneMatrix {
    lines: Vec<Vec<BigInt>>,
    entries: Vec<Vec<u8>>,
}

impl LineHyperplaneMatrix {
    /// Canonical primitive line directions, ascending.
    pub fn lines(&self) -> &[Vec<BigInt>] {
        &self.lines
    }

    pub fn lines_count(&self) -> usize {
        self.lines.len()
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    /// Image of a hyperplane multiplicity vector in the line grading:
    /// component i sums a_j over the hyperplanes j that line i avoids.
    pub fn push_forward(&self, a: &[u32]) -> Vec<u32> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(a).map(|(&e, &aj)| u32::from(e == 1) * aj).sum())
            .collect()
    }
}

/// Build the non-containment matrix by exact evaluation of every covector on
/// every line. Fails on non-essential configurations (which have no line
/// decomposition to grade by).
pub fn line_hyperplane_matrix(cfg: &VectorConfiguration) -> Result<LineHyperplaneMatrix, CoxError> {
    let lines = cfg.lines()?;
    let entries: Vec<Vec<u8>> = lines
        .iter()
        .map(|line| {
            (0..cfg.len())
                .map(|j| {
                    let value: Rat = cfg
                        .covector(j)
                        .iter()
                        .zip(line)
                        .map(|(c, l)| c * Rat::from_integer(l.clone()))
                        .sum();
                    u8::from(!value.is_zero())
                })
                .collect()
        })
        .collect();
    for (i, row) in entries.iter().enumerate() {
        assert!(row.contains(&1), "line {i} lies on every hyperplane, contradicting essentialness");
    }
    Ok(LineHyperplaneMatrix { lines, entries })
}

/// Table of multigraded dimensions in the hyperplane ("fake") grading:
/// nonzero entries (d, a) -> dim for d <= max_t and |a| <= max_a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedTable {
    mode: CoxMode,
    max_t: usize,
    max_a: usize,
    hyperplanes: usize,
    entries: BTreeMap<(usize, Vec<u32>), BigUint>,
}

impl MultigradedTable {
    pub fn mode(&self) -> CoxMode {
        self.mode
    }

    pub fn max_t(&self) -> usize {
        self.max_t
    }

    pub fn max_a(&self) -> usize {
        self.max_a
    }

    pub fn hyperplanes(&self) -> usize {
        self.hyperplanes
    }

    pub fn entry(&self, d: usize, a: &[u32]) -> BigUint {
        self.entries.get(&(d, a.to_vec())).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), BigUint> {
        &self.entries
    }

    /// The same table in the line grading: entries are pushed forward along
    /// a -> H a and entries with the same image add.
    pub fn true_grading(
        &self,
        matrix: &LineHyperplaneMatrix,
    ) -> BTreeMap<(usize, Vec<u32>), BigUint> {
        let mut out: BTreeMap<(usize, Vec<u32>), BigUint> = BTreeMap::new();
        for ((d, a), dim) in &self.entries {
            *out.entry((*d, matrix.push_forward(a))).or_default() += dim;
        }
        out
    }
}

fn require_essential(cfg: &VectorConfiguration) -> Result<(), CoxError> {
    if cfg.rank() < cfg.ambient_dim() {
        return Err(CoxError::Arrangement(ArrangementError::NotEssential {
            rank: cfg.rank(),
            dim: cfg.ambient_dim(),
        }));
    }
    Ok(())
}

/// All multiplicity vectors of length `n` with total at most `max_total`,
/// ascending in the usual lexicographic order.
pub fn multisets_up_to(n: usize, max_total: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill_multisets(n, max_total, 0, &mut current, &mut out);
    out
}

fn fill_multisets(
    n: usize,
    budget: usize,
    position: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if position == n {
        out.push(current.clone());
        return;
    }
    for value in 0..=budget {
        current[position] = value as u32;
        fill_multisets(n, budget - value, position + 1, current, out);
    }
    current[position] = 0;
}

/// Entry-by-entry route: dimension at (d, a) is the degree-d coefficient of
/// the inverse-system series of the dilation by a, at the mode's shift.
pub fn cox_table_direct(
    cfg: &VectorConfiguration,
    mode: CoxMode,
    max_t: usize,
    max_a: usize,
) -> Result<MultigradedTable, CoxError> {
    require_essential(cfg)?;
    let mut entries = BTreeMap::new();
    for a in multisets_up_to(cfg.len(), max_a) {
        let dilated = cfg.expand_multiset(&a)?;
        let series = hilbert_series(&dilated, mode.shift())?;
        for d in 0..=max_t {
            let dim = series.coefficient(d);
            if !dim.is_zero() {
                entries.insert((d, a.clone()), dim);
            }
        }
    }
    Ok(MultigradedTable { mode, max_t, max_a, hyperplanes: cfg.len(), entries })
}

/// Generating-function route: expand the mode's closed form (module doc) as
/// a truncated series in (t, t_1, ..., t_n) and read the table off its
/// coefficients.
pub fn cox_closed_form(
    cfg: &VectorConfiguration,
    mode: CoxMode,
    max_t: usize,
    max_a: usize,
) -> Result<MultigradedTable, CoxError> {
    require_essential(cfg)?;
    let n = cfg.len();
    let names: Vec<String> =
        std::iter::once("t".to_string()).chain((1..=n).map(|i| format!("t{i}"))).collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let cap = |s: SeriesPoly| {
        let mut s = s.with_var_cap("t", max_t as u32);
        for name in &names[1..] {
            s = s.with_var_cap(name, max_a as u32);
        }
        s
    };

    let one = cap(SeriesPoly::one(&vars));
    let t = cap(SeriesPoly::variable(&vars, "t"));
    let one_minus_t = one.sub(&t);
    // per element: t_i, 1/(1-t_i), and 1/(1-t_i t)
    let mut t_elem = Vec::with_capacity(n);
    let mut inv_geo = Vec::with_capacity(n);
    let mut inv_geo_t = Vec::with_capacity(n);
    for name in &names[1..] {
        let ti = cap(SeriesPoly::variable(&vars, name));
        inv_geo.push(one.sub(&ti).invert_unit()?);
        inv_geo_t.push(one.sub(&ti.mul(&t)?).invert_unit()?);
        t_elem.push(ti);
    }

    let subsets: Vec<Vec<usize>> =
        (0u32..(1 << n)).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect()).collect();
    let rank_of = |s: &[usize]| cfg.rank_of(s.iter().copied());

    let mut acc = cap(SeriesPoly::zero(&vars));
    match mode {
        CoxMode::Ring => {
            for b in &subsets {
                let mut term = one_minus_t.pow((b.len() - rank_of(b)) as u32)?;
                for &i in b {
                    term = term.mul(&t_elem[i])?.mul(&inv_geo[i])?;
                }
                acc = acc.add(&term);
            }
            for f in &inv_geo_t {
                acc = acc.mul(f)?;
            }
        }
        CoxMode::Central => {
            for d in &subsets {
                let rank_d = rank_of(d);
                let mut base = one.clone();
                for &i in d {
                    base = base.mul(&t_elem[i])?.mul(&inv_geo_t[i])?;
                }
                for mask in 0u32..(1 << d.len()) {
                    let s: Vec<usize> =
                        (0..d.len()).filter(|j| mask & (1 << j) != 0).map(|j| d[j]).collect();
                    if rank_of(&s) != rank_d {
                        continue;
                    }
                    let mut term = base
                        .mul(&one_minus_t.pow((s.len() - rank_d) as u32)?)?
                        .mul(&t.pow((d.len() - s.len()) as u32)?)?;
                    for &i in &s {
                        term = term.mul(&inv_geo[i])?;
                    }
                    acc = acc.add(&term);
                }
            }
        }
        CoxMode::Internal => {
            for d in &subsets {
                let rank_d = rank_of(d);
                let mut base = one.clone();
                for &i in d {
                    base = base.mul(&t_elem[i])?.mul(&inv_geo_t[i])?;
                }
                for mask in 0u32..(1 << d.len()) {
                    let b: Vec<usize> =
                        (0..d.len()).filter(|j| mask & (1 << j) != 0).map(|j| d[j]).collect();
                    let rank_b = rank_of(&b);
                    let mut term = base
                        .mul(&one_minus_t.pow((b.len() - rank_b) as u32)?)?
                        .mul(&t.pow((d.len() - b.len() + rank_b - rank_d) as u32)?)?;
                    for &i in &b {
                        term = term.mul(&inv_geo[i])?;
                    }
                    if (rank_d + rank_b) % 2 == 1 {
                        term = term.neg();
                    }
                    acc = acc.add(&term);
                }
            }
        }
    }

    let mut entries = BTreeMap::new();
    for (expo, coeff) in acc.terms() {
        let d = expo[0] as usize;
        let a = expo[1..].to_vec();
        if d > max_t || a.iter().sum::<u32>() as usize > max_a {
            continue;
        }
        assert!(is_nonneg_integer(coeff), "table entry ({d}, {a:?}) came out as {coeff}");
        entries.insert((d, a), coeff.numer().to_biguint().unwrap());
    }
    Ok(MultigradedTable { mode, max_t, max_a, hyperplanes: n, entries })
}

/// The three generating-function identities behind the closed forms, for the
/// weighted sum of Tutte polynomials of all multiset dilations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingIdentity {
    /// sum over a of q^r(supp a) T_dil(x, y) w^a as a subset sum of
    /// multivariate Tutte evaluations; instantiated at x = 0 by the internal
    /// closed form.
    General,
    /// the same sum weighted by (x-1)^(-r(supp a)), collapsing to a single
    /// multivariate Tutte evaluation; behind the ring closed form.
    Ring,
    /// the x = 1 specialization, with spanning-set polynomials in place of
    /// Tutte evaluations; behind the central closed form.
    Spanning,
}

/// Check one of the generating identities coefficient-exactly on the window
/// of multiplicity vectors with |a| <= trunc. Both sides are expanded as
/// truncated series in (q, X, Y, w_1, ..., w_n) where X = x - 1 and
/// Y = y - 1 are series variables in their own right; the ring identity is
/// multiplied through by X^rank on both sides, which makes every exponent
/// nonnegative (the other two need nothing cleared once grouped per subset
/// pair).
pub fn lemma_generating_check(
    cfg: &VectorConfiguration,
    which: GeneratingIdentity,
    trunc: usize,
) -> Result<bool, CoxError> {
    let n = cfg.len();
    let rank = cfg.rank();
    let names: Vec<String> = ["q", "X", "Y"]
        .into_iter()
        .map(str::to_string)
        .chain((1..=n).map(|i| format!("w{i}")))
        .collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let cap = |s: SeriesPoly| {
        let mut s = s.with_var_cap("Y", trunc as u32);
        for name in &names[3..] {
            s = s.with_var_cap(name, trunc as u32);
        }
        s
    };

    let one = cap(SeriesPoly::one(&vars));
    let q = cap(SeriesPoly::variable(&vars, "q"));
    let x_shift = cap(SeriesPoly::variable(&vars, "X"));
    let y_shift = cap(SeriesPoly::variable(&vars, "Y"));
    let x_full = one.add(&x_shift);
    let y_full = one.add(&y_shift);
    let mut w = Vec::with_capacity(n);
    let mut inv_w = Vec::with_capacity(n);
    let mut inv_yw = Vec::with_capacity(n);
    for name in &names[3..] {
        let wi = cap(SeriesPoly::variable(&vars, name));
        inv_w.push(one.sub(&wi).invert_unit()?);
        inv_yw.push(one.sub(&y_full.mul(&wi)?).invert_unit()?);
        w.push(wi);
    }

    // left side: brute-force sum over multiplicity vectors
    let mut lhs = cap(SeriesPoly::zero(&vars));
    for a in multisets_up_to(n, trunc) {
        let support: Vec<usize> = (0..n).filter(|&i| a[i] > 0).collect();
        let support_rank = cfg.rank_of(support.iter().copied());
        let tutte = tutte_by_subsets(&cfg.expand_multiset(&a)?);
        let evaluated = match which {
            GeneratingIdentity::General => {
                tutte.eval_series(&x_full, &y_full)?.mul(&q.pow(support_rank as u32)?)?
            }
            GeneratingIdentity::Ring => tutte
                .eval_series(&x_full, &y_full)?
                .mul(&x_shift.pow((rank - support_rank) as u32)?)?,
            GeneratingIdentity::Spanning => {
                tutte.eval_series(&one, &y_full)?.mul(&q.pow(support_rank as u32)?)?
            }
        };
        let mut term = evaluated;
        for (i, &ai) in a.iter().enumerate() {
            term = term.mul(&w[i].pow(ai)?)?;
        }
        lhs = lhs.add(&term);
    }

    // right side: subset sums
    let subsets: Vec<Vec<usize>> =
        (0u32..(1 << n)).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect()).collect();
    let rank_of = |s: &[usize]| cfg.rank_of(s.iter().copied());
    let mut rhs = cap(SeriesPoly::zero(&vars));
    match which {
        GeneratingIdentity::General => {
            for d in &subsets {
                let rank_d = rank_of(d);
                let mut base = q.pow(rank_d as u32)?;
                for &i in d {
                    base = base.mul(&w[i])?.mul(&inv_w[i])?;
                }
                for mask in 0u32..(1 << d.len()) {
                    let b: Vec<usize> =
                        (0..d.len()).filter(|j| mask & (1 << j) != 0).map(|j| d[j]).collect();
                    let rank_b = rank_of(&b);
                    let mut term = base
                        .mul(&x_shift.pow((rank_d - rank_b) as u32)?)?
                        .mul(&y_shift.pow((b.len() - rank_b) as u32)?)?;
                    for &i in &b {
                        term = term.mul(&inv_yw[i])?;
                    }
                    rhs = rhs.add(&term);
                }
            }
        }
        GeneratingIdentity::Ring => {
            for b in &subsets {
                let rank_b = rank_of(b);
                let mut term = x_shift
                    .pow((rank - rank_b) as u32)?
                    .mul(&y_shift.pow((b.len() - rank_b) as u32)?)?;
                for &i in b {
                    term = term.mul(&w[i])?.mul(&inv_yw[i])?;
                }
                rhs = rhs.add(&term);
            }
            for f in &inv_w {
                rhs = rhs.mul(f)?;
            }
        }
        GeneratingIdentity::Spanning => {
            for d in &subsets {
                let rank_d = rank_of(d);
                let mut base = q.pow(rank_d as u32)?;
                for &i in d {
                    base = base.mul(&w[i])?.mul(&inv_w[i])?;
                }
                for mask in 0u32..(1 << d.len()) {
                    let s: Vec<usize> =
                        (0..d.len()).filter(|j| mask & (1 << j) != 0).map(|j| d[j]).collect();
                    if rank_of(&s) != rank_d {
                        continue;
                    }
                    let mut term = base.mul(&y_shift.pow((s.len() - rank_d) as u32)?)?;
                    for &i in &s {
                        term = term.mul(&inv_yw[i])?;
                    }
                    rhs = rhs.add(&term);
                }
            }
        }
    }

    // compare on the shared window: total w-degree at most trunc
    let window = |series: &SeriesPoly| -> BTreeMap<Vec<u32>, Rat> {
        series
            .terms()
            .filter(|(expo, _)| expo[3..].iter().sum::<u32>() as usize <= trunc)
            .map(|(expo, coeff)| (expo.clone(), coeff.clone()))
            .collect()
    };
    Ok(window(&lhs) == window(&rhs))
}
