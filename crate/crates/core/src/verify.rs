//! The cross-check battery behind the CLI `verify` subcommand: every closed
//! form in the crate recomputed by an independent route on one configuration,
//! reported as a list of pass/fail/skip rows.
//!
//! Checks whose mathematical precondition a configuration does not meet are
//! reported as skipped with the reason, not silently dropped and not failed:
//! the negative-shift closed forms and the Cox gradings presume an essential
//! configuration (one whose covectors span the dual space), and the
//! exhaustive interval-partition check is only run when the ground set is
//! small enough to enumerate all subsets.

use crate::arrangement::VectorConfiguration;
use crate::coxring::{cox_closed_form, cox_table_direct, CoxMode};
use crate::exactmath::matrix::RationalMatrix;
use crate::exactmath::scalar::Rat;
use crate::fatpoints::fatpoint_quotient_direct;
use crate::oracle::{directional_degree_poly, expand_monomial, flats_ideal_dims, Polynomial};
use crate::tutte::{
    interval_decompose, tutte_by_activities, tutte_by_deletion_contraction, tutte_by_subsets,
};
use crate::zonotopal::{basis_monomials, hilbert_series, GradedDims};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skipped => write!(f, "skip"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), status: CheckStatus::Pass, detail: detail.into() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), status: CheckStatus::Fail, detail: detail.into() }
    }

    fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckResult { name: name.into(), status: CheckStatus::Skipped, detail: reason.into() }
    }

    fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            CheckResult::pass(name, detail)
        } else {
            CheckResult::fail(name, detail)
        }
    }
}

/// True when no row failed (skips do not count against success).
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != CheckStatus::Fail)
}

/// Run the whole battery on one configuration. `seed` feeds the sampled
/// directional-degree cross-check; everything else is deterministic outright.
pub fn run_battery(cfg: &VectorConfiguration, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    hilbert_checks(cfg, &mut out);
    tutte_checks(cfg, &mut out);
    partition_check(cfg, &mut out);
    independence_checks(cfg, &mut out);
    fatpoint_check(cfg, &mut out);
    cox_checks(cfg, &mut out);
    directional_check(cfg, seed, &mut out);
    out
}

/// The battery over every corpus configuration, labelled by corpus name.
pub fn corpus_battery(seed: u64) -> Vec<(String, Vec<CheckResult>)> {
    crate::corpus::names()
        .into_iter()
        .map(|name| {
            let cfg = crate::corpus::by_name(name).expect("corpus names enumerate themselves");
            (name.to_string(), run_battery(&cfg, seed))
        })
        .collect()
}

const ESSENTIAL_REASON: &str =
    "negative shifts presume an essential configuration (covectors spanning the dual space); \
     here the power ideal taken literally is the unit ideal";

fn hilbert_checks(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    for k in -2i64..=2 {
        let name = format!("hilbert series: closed form vs ideal oracle at k = {k}");
        if k < 0 && !cfg.is_essential() {
            out.push(CheckResult::skip(name, ESSENTIAL_REASON));
            continue;
        }
        let max_degree = cfg.len() + k.max(0) as usize + 2;
        let formula = match hilbert_series(cfg, k) {
            Ok(series) => series,
            Err(e) => {
                out.push(CheckResult::fail(name, e.to_string()));
                continue;
            }
        };
        let oracle = flats_ideal_dims(cfg, k, max_degree);
        let ok = formula.truncated(max_degree) == oracle;
        out.push(CheckResult::of(
            name,
            ok,
            format!("closed form {}, oracle {}", formula.render("q"), oracle.render("q")),
        ));
    }
}

fn tutte_checks(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    let subsets = tutte_by_subsets(cfg);
    let delcon = tutte_by_deletion_contraction(cfg);
    let activities = tutte_by_activities(cfg);
    let ok = subsets == delcon && delcon == activities;
    out.push(CheckResult::of(
        "tutte polynomial: subset, deletion-contraction and activity routes agree",
        ok,
        format!(
            "subset route has {} nonzero coefficients",
            subsets.coefficients().values().filter(|c| !c.is_zero()).count()
        ),
    ));
}

fn partition_check(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    let name = "basis activity intervals partition the subset lattice";
    let n = cfg.len();
    if n > 10 {
        out.push(CheckResult::skip(
            name,
            format!("ground set of size {n} is too large for the exhaustive subset sweep"),
        ));
        return;
    }
    // `interval_decompose` itself panics on overlap or a miss, so a clean
    // sweep of all 2^n subsets is the whole proof.
    for mask in 0u32..(1 << n) {
        let subset: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let _ = interval_decompose(cfg, &subset);
    }
    out.push(CheckResult::pass(
        name,
        format!("all {} subsets land in exactly one interval", 1u64 << n),
    ));
}

/// Exact rank of the coefficient matrix of a list of polynomials.
fn polynomial_list_rank(polys: &[Polynomial]) -> usize {
    let columns: BTreeSet<Vec<u32>> =
        polys.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).collect();
    let columns: Vec<Vec<u32>> = columns.into_iter().collect();
    let rows: Vec<Vec<Rat>> =
        polys.iter().map(|p| columns.iter().map(|c| coefficient_at(p, c)).collect()).collect();
    RationalMatrix::from_rows(rows).rank()
}

fn coefficient_at(p: &Polynomial, expo: &[u32]) -> Rat {
    p.terms().find(|(e, _)| e.as_slice() == expo).map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
}

fn independence_checks(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    for k in -2i64..=1 {
        let name = format!("monomial list at k = {k} is linearly independent");
        let monomials = match basis_monomials(cfg, k) {
            Ok(m) => m,
            Err(e) => {
                out.push(CheckResult::fail(name, e.to_string()));
                continue;
            }
        };
        let expanded: Vec<Polynomial> = monomials.iter().map(|m| expand_monomial(cfg, m)).collect();
        let rank = polynomial_list_rank(&expanded);
        out.push(CheckResult::of(
            name,
            rank == expanded.len(),
            format!("{} monomials, coefficient rank {rank}", expanded.len()),
        ));
    }
}

fn fatpoint_check(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    let name = "fat-point quotients telescope to the full polynomial ring";
    let n = cfg.len();
    let max_degree = n + 4;
    let mut sum = GradedDims::zero();
    for k in 0..=n as i64 {
        match fatpoint_quotient_direct(cfg, k, max_degree) {
            Ok(series) => sum = sum.add(series.dims()),
            Err(e) => {
                out.push(CheckResult::fail(name, e.to_string()));
                return;
            }
        }
    }
    let dim = cfg.rank() + cfg.excess();
    let full = GradedDims::from_dims((0..=max_degree).map(|d| monomial_count(dim, d)).collect());
    out.push(CheckResult::of(
        name,
        sum.truncated(max_degree) == full,
        format!("sum {}, full ring {}", sum.render("t"), full.render("t")),
    ));
}

/// Number of monomials of degree `d` in `dim` variables.
fn monomial_count(dim: usize, d: usize) -> BigUint {
    if dim == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::ZERO };
    }
    crate::exactmath::binomial((dim - 1 + d) as u64, d as u64)
}

fn cox_checks(cfg: &VectorConfiguration, out: &mut Vec<CheckResult>) {
    // window sized to keep the battery quick on six-element ground sets
    let (max_t, max_a) = if cfg.len() >= 6 { (3, 1) } else { (4, 2) };
    for mode in [CoxMode::Ring, CoxMode::Central, CoxMode::Internal] {
        let name = format!("cox table: direct route vs closed form ({})", mode_label(mode));
        if !cfg.is_essential() {
            out.push(CheckResult::skip(
                name,
                "the multigraded ring is attached to an essential configuration only",
            ));
            continue;
        }
        let direct = cox_table_direct(cfg, mode, max_t, max_a);
        let closed = cox_closed_form(cfg, mode, max_t, max_a);
        match (direct, closed) {
            (Ok(direct), Ok(closed)) => {
                out.push(CheckResult::of(
                    name,
                    direct == closed,
                    format!(
                        "{} nonzero entries with degree <= {max_t}, multiplicities summing to <= {max_a}",
                        direct.entries().len()
                    ),
                ));
            }
            (Err(e), _) | (_, Err(e)) => out.push(CheckResult::fail(name, e.to_string())),
        }
    }
}

fn mode_label(mode: CoxMode) -> &'static str {
    match mode {
        CoxMode::Ring => "ring",
        CoxMode::Central => "central",
        CoxMode::Internal => "internal",
    }
}

fn directional_check(cfg: &VectorConfiguration, seed: u64, out: &mut Vec<CheckResult>) {
    let name = format!("directional degree: covector count vs restricted polynomial (seed {seed})");
    // product of the nonzero covectors; along any direction h its restriction
    // to a generic line has degree exactly rho(h)
    let ambient = cfg.ambient_dim();
    let mut product = Polynomial::constant(ambient, Rat::one());
    for l in cfg.covectors() {
        if l.iter().any(|c| !c.is_zero()) {
            product = product.mul(&Polynomial::linear_form(l));
        }
    }
    let mut checked = 0usize;
    for l in cfg.covectors() {
        if l.iter().all(Zero::is_zero) {
            continue;
        }
        let counted = cfg.directional_degree(l);
        match directional_degree_poly(&product, l, 8, seed) {
            Ok(sampled) if sampled as usize == counted => checked += 1,
            Ok(sampled) => {
                out.push(CheckResult::fail(
                    name,
                    format!("direction {l:?}: counted {counted}, polynomial route {sampled}"),
                ));
                return;
            }
            Err(e) => {
                out.push(CheckResult::fail(name, e.to_string()));
                return;
            }
        }
    }
    out.push(CheckResult::pass(name, format!("{checked} covector directions agree")));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{boolean, braid};
    use crate::corpus;

    fn statuses(results: &[CheckResult]) -> Vec<(String, CheckStatus)> {
        results.iter().map(|r| (r.name.clone(), r.status)).collect()
    }

    #[test]
    fn battery_is_clean_on_essential_configurations() {
        for cfg in [corpus::b2(), corpus::u23(), corpus::u23_multi(), corpus::example_g()] {
            let results = run_battery(&cfg, 7);
            assert!(all_passed(&results), "{:#?}", statuses(&results));
            assert!(results.iter().all(|r| r.status == CheckStatus::Pass));
        }
    }

    #[test]
    fn battery_skips_negative_shifts_on_non_essential_input() {
        let results = run_battery(&braid(3), 7);
        assert!(all_passed(&results), "{:#?}", statuses(&results));
        let skipped: Vec<&str> = results
            .iter()
            .filter(|r| r.status == CheckStatus::Skipped)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(
            skipped,
            vec![
                "hilbert series: closed form vs ideal oracle at k = -2",
                "hilbert series: closed form vs ideal oracle at k = -1",
                "cox table: direct route vs closed form (ring)",
                "cox table: direct route vs closed form (central)",
                "cox table: direct route vs closed form (internal)",
            ]
        );
        assert!(run_battery(&boolean(2, 1), 7).iter().any(|r| r.status == CheckStatus::Skipped));
    }

    #[test]
    fn corpus_battery_never_fails_and_seed_changes_nothing() {
        for (name, results) in corpus_battery(1) {
            assert!(all_passed(&results), "{name}: {:#?}", statuses(&results));
        }
        let a = corpus_battery(3);
        let b = corpus_battery(3);
        assert_eq!(a, b);
    }

    #[test]
    fn polynomial_rank_detects_dependence() {
        let x = Polynomial::linear_form(&[Rat::one(), Rat::zero()]);
        let y = Polynomial::linear_form(&[Rat::zero(), Rat::one()]);
        let sum = x.add(&y);
        assert_eq!(polynomial_list_rank(&[x.clone(), y.clone()]), 2);
        assert_eq!(polynomial_list_rank(&[x, y, sum]), 2);
    }
}
