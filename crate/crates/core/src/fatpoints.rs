//! Graded series of the fat-point filtration attached to a configuration.
//!
//! A configuration of n covectors carries a chain of ideals indexed by
//! k = 0..n (the ideals of a fat-point scheme whose multiplicities drop as k
//! grows, with the k = n member the whole polynomial ring). Every graded
//! piece is read off the inverse systems of the power ideals: the k-th
//! ideal's dimension in degree n + i equals the degree-(n + i) dimension of
//! the inverse system with shift i + k, and nothing lives below degree
//! n - k. Successive differences ("quotient" mode) are the layer series of
//! the filtration; summed over all k they telescope to the full
//! polynomial-ring series 1/(1-t)^(r+m).
//!
//! Two closed forms for the layer series are also provided. The
//! corank-nullity form agrees with the direct route everywhere the tests
//! look. The Tutte-evaluation form
//!
//! ```text
//! t^(n-k)/(1-t)^m [q^(n-k)] T((2-t)/(1-t), 2-q)
//! ```
//!
//! does not: it is kept as a checked formula, returns signed coefficients
//! (it can go negative, which a dimension series never does), and the tests
//! record exactly where it disagrees.

use crate::arrangement::VectorConfiguration;
use crate::exactmath::scalar::Rat;
use crate::exactmath::series::{SeriesError, SeriesPoly};
use crate::tutte::{corank_nullity_counts, tutte_by_subsets};
use crate::zonotopal::{hilbert_series, rats_to_graded, GradedDims, ZonotopalError};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FatPointError {
    #[error("filtration index k = {k} is outside 0..={n}")]
    ShiftOutOfRange { k: i64, n: usize },
    #[error(transparent)]
    Zonotopal(#[from] ZonotopalError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which series of the filtration a [`FiltrationSeries`] records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationMode {
    /// The k-th ideal itself.
    Ideal,
    /// The k-th layer: ideal at k modulo ideal at k - 1.
    Quotient,
}

/// A truncated dimension series in t along the fat-point filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationSeries {
    k: usize,
    mode: FiltrationMode,
    dims: GradedDims,
}

impl FiltrationSeries {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> FiltrationMode {
        self.mode
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }
}

fn validate_k(k: i64, n: usize) -> Result<usize, FatPointError> {
    if k < 0 || k as u64 > n as u64 {
        return Err(FatPointError::ShiftOutOfRange { k, n });
    }
    Ok(k as usize)
}

/// Dimension series of the k-th filtration ideal, truncated at `max_degree`.
/// The coefficient of t^(n+i) is the degree-(n+i) dimension of the inverse
/// system with shift i + k; below degree n - k everything vanishes.
pub fn fatpoint_ideal_series(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<FiltrationSeries, FatPointError> {
    let n = cfg.len();
    let k = validate_k(k, n)?;
    let mut dims = vec![BigUint::zero(); max_degree + 1];
    for (d, out) in dims.iter_mut().enumerate().skip(n - k) {
        // shift = (d - n) + k, never negative in this range
        let shift = (d + k - n) as i64;
        *out = hilbert_series(cfg, shift)?.coefficient(d);
    }
    Ok(FiltrationSeries { k, mode: FiltrationMode::Ideal, dims: GradedDims::from_dims(dims) })
}

/// Layer series of the filtration at k: the difference of the k-th and
/// (k-1)-th ideal series (the k = 0 predecessor is the zero ideal). This is
/// the source of truth the closed forms are measured against.
pub fn fatpoint_quotient_direct(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<FiltrationSeries, FatPointError> {
    let upper = fatpoint_ideal_series(cfg, k, max_degree)?;
    let lower = if k == 0 {
        GradedDims::zero()
    } else {
        fatpoint_ideal_series(cfg, k - 1, max_degree)?.dims
    };
    let dims = upper
        .dims
        .checked_sub(&lower)
        .expect("filtration ideals grow with k, so the difference stays nonnegative");
    Ok(FiltrationSeries { k: upper.k, mode: FiltrationMode::Quotient, dims })
}

/// Layer series by the corank-nullity closed form
///
/// ```text
/// t^(n-k)/(1-t)^m [q^(n-k)] sum over subsets A of
///     q^(n-|A|) (1-q)^(|A|-r(A)) (1-t)^(r(A)-r)
/// ```
///
/// (every exponent on view is nonnegative). Agrees with
/// [`fatpoint_quotient_direct`]; the tests insist on it.
pub fn fatpoint_quotient_corrected(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<FiltrationSeries, FatPointError> {
    let n = cfg.len();
    let k = validate_k(k, n)?;
    let r = cfg.rank();
    let m = cfg.ambient_dim() - r;
    let qpow = (n - k) as u32;
    let Some(keep) = max_degree.checked_sub(n - k) else {
        return Ok(FiltrationSeries {
            k,
            mode: FiltrationMode::Quotient,
            dims: GradedDims::zero(),
        });
    };

    let vars = ["q", "t"];
    let cap = |s: SeriesPoly| s.with_var_cap("q", qpow).with_var_cap("t", keep as u32);
    let one = cap(SeriesPoly::one(&vars));
    let q = cap(SeriesPoly::variable(&vars, "q"));
    let t = cap(SeriesPoly::variable(&vars, "t"));
    let inv_one_minus_t = one.sub(&t).invert_unit()?;
    let one_minus_q = one.sub(&q);

    let mut acc = cap(SeriesPoly::zero(&vars));
    for ((corank, nullity), count) in corank_nullity_counts(cfg) {
        // q-exponent n - |A| = (n - r) + corank - nullity
        let qexp = (n - r + corank - nullity) as u32;
        let term =
            cap(SeriesPoly::monomial(&vars, &[qexp, 0], Rat::from_integer(BigInt::from(count))))
                .mul(&one_minus_q.pow(nullity as u32)?)?
                .mul(&inv_one_minus_t.pow(corank as u32)?)?;
        acc = acc.add(&term);
    }
    let layer = acc.coefficient_of("q", qpow)?.mul(&inv_one_minus_t.pow(m as u32)?)?;
    let mut coeffs = vec![Rat::zero(); n - k];
    coeffs.extend(pad_to(layer.univariate_coeffs("t")?, keep + 1));
    Ok(FiltrationSeries { k, mode: FiltrationMode::Quotient, dims: rats_to_graded(coeffs) })
}

/// Layer series by the Tutte-evaluation closed form
///
/// ```text
/// t^(n-k)/(1-t)^m [q^(n-k)] T((2-t)/(1-t), 2-q)
/// ```
///
/// returned as exact signed coefficients of t^0 .. t^max_degree. The formula
/// does not reproduce the direct layer series (and is not even sign-correct
/// in general); it is implemented as stated so the comparison tests can
/// print both sides of every disagreement.
pub fn fatpoint_quotient_closed(
    cfg: &VectorConfiguration,
    k: i64,
    max_degree: usize,
) -> Result<Vec<Rat>, FatPointError> {
    let n = cfg.len();
    let k = validate_k(k, n)?;
    let qpow = (n - k) as u32;
    let Some(keep) = max_degree.checked_sub(n - k) else {
        return Ok(vec![Rat::zero(); max_degree + 1]);
    };

    let vars = ["q", "t"];
    let cap = |s: SeriesPoly| s.with_var_cap("q", qpow).with_var_cap("t", keep as u32);
    let one = cap(SeriesPoly::one(&vars));
    let two = cap(SeriesPoly::constant(&vars, Rat::from_integer(2.into())));
    let q = cap(SeriesPoly::variable(&vars, "q"));
    let t = cap(SeriesPoly::variable(&vars, "t"));
    let inv_one_minus_t = one.sub(&t).invert_unit()?;
    let x_arg = two.sub(&t).mul(&inv_one_minus_t)?;
    let y_arg = two.sub(&q);

    let evaluated = tutte_by_subsets(cfg).eval_series(&x_arg, &y_arg)?;
    let m = cfg.ambient_dim() - cfg.rank();
    let layer = evaluated
        .coefficient_of("q", qpow)?
        .mul(&inv_one_minus_t.pow(m as u32)?.coefficient_of("q", 0)?)?;
    let mut coeffs = vec![Rat::zero(); n - k];
    coeffs.extend(pad_to(layer.univariate_coeffs("t")?, keep + 1));
    Ok(coeffs)
}

fn pad_to(mut coeffs: Vec<Rat>, len: usize) -> Vec<Rat> {
    coeffs.resize(len, Rat::zero());
    coeffs
}
