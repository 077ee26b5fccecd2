//! Acceptance gate: one test per criterion, one pass/fail line each in the
//! cargo output.
//!
//! Three of the checks (05, 07, 08) assert printed closed-form claims that
//! the implementation demonstrably refutes; they fail on purpose, print both
//! sides of every divergence, and pin the exact divergence pattern first so
//! that any drift from the documented behavior is caught as its own failure.
//! The pattern pins are duplicated as always-green unit tests inside the
//! library, so `--test acceptance` is the only red target in the workspace.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::time::Instant;
use zonotopal::arrangement::VectorConfiguration;
use zonotopal::corpus;
use zonotopal::coxring::{
    cox_closed_form, cox_table_direct, lemma_generating_check, CoxMode, GeneratingIdentity,
    DEFAULT_MAX_A, DEFAULT_MAX_T,
};
use zonotopal::exactmath::binomial;
use zonotopal::exactmath::scalar::{rat, Rat};
use zonotopal::fatpoints::{
    fatpoint_ideal_series, fatpoint_quotient_closed, fatpoint_quotient_direct,
};
use zonotopal::oracle::{
    annihilation_check, custom_ideal_dims, expand_monomial, flats_ideal_dims, lines_ideal_dims,
    PowerGenerator,
};
use zonotopal::tutte::{
    bases, interval_decompose, tutte_by_activities, tutte_by_deletion_contraction, tutte_by_subsets,
};
use zonotopal::zonotopal::{
    basis_monomials, hilbert_series, internal_bases, monomial_degree_counts, GradedDims,
};

fn corpus_with_names() -> Vec<(&'static str, VectorConfiguration)> {
    corpus::names()
        .into_iter()
        .map(|name| (name, corpus::by_name(name).expect("corpus name")))
        .collect()
}

fn dims_u64(values: &[u64]) -> GradedDims {
    GradedDims::from_u64(values)
}

#[test]
fn criterion_01_known_example_reproduction() {
    let start = Instant::now();
    let g = corpus::example_g();
    let tutte = tutte_by_subsets(&g);
    let expected: Vec<((usize, usize), u32)> =
        vec![((1, 1), 1), ((1, 2), 1), ((2, 0), 1), ((2, 1), 1), ((3, 0), 1)];
    let got: Vec<((usize, usize), u32)> = tutte
        .coefficients()
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&ij, c)| (ij, u32::try_from(c).unwrap()))
        .collect();
    assert_eq!(got, expected, "tutte polynomial of the five-covector example");
    assert_eq!(
        hilbert_series(&g, 0).unwrap(),
        dims_u64(&[1, 3, 5, 6, 4, 1]),
        "hilbert series at k = 0"
    );
    assert!(start.elapsed().as_secs() < 1, "criterion 1 must finish within a second");
}

#[test]
fn criterion_02_custom_power_ideal_dimensions() {
    let start = Instant::now();
    let generators = vec![
        PowerGenerator { direction: vec![rat(1), rat(0)], exponent: 4 },
        PowerGenerator { direction: vec![rat(0), rat(1)], exponent: 2 },
        PowerGenerator { direction: vec![rat(1), rat(1)], exponent: 3 },
    ];
    let dims = custom_ideal_dims(2, &generators, 6).unwrap();
    assert_eq!(dims, dims_u64(&[1, 2, 2, 1]));
    assert!(start.elapsed().as_secs() < 1, "criterion 2 must finish within a second");
}

#[test]
fn criterion_03_oracle_below_closed_form_range() {
    let dims = flats_ideal_dims(&corpus::two_pencils(), -3, 3);
    assert_eq!(dims, dims_u64(&[1, 1]), "k = -3 is oracle-only territory");
    assert!(
        hilbert_series(&corpus::two_pencils(), -3).is_err(),
        "the closed form must refuse k = -3"
    );
}

#[test]
fn criterion_04_line_ideal_divergence_at_shift_one() {
    let b2 = corpus::b2();
    let flats = flats_ideal_dims(&b2, 1, 5);
    let lines = lines_ideal_dims(&b2, 1, 5).unwrap();
    for d in 0..=5 {
        let expected_gap = if d == 4 { BigUint::one() } else { BigUint::ZERO };
        assert_eq!(
            lines.coefficient(d),
            flats.coefficient(d) + &expected_gap,
            "degree {d}: lines {} vs flats {}",
            lines.render("q"),
            flats.render("q"),
        );
    }
    for k in [-2i64, -1, 0] {
        assert_eq!(
            lines_ideal_dims(&b2, k, 5).unwrap(),
            flats_ideal_dims(&b2, k, 5),
            "the two ideals agree at k = {k}"
        );
    }
}

#[test]
fn criterion_05_closed_form_matches_oracle_on_corpus() {
    let start = Instant::now();
    let mut mismatches: Vec<(String, i64)> = Vec::new();
    let mut report = String::new();
    for (name, cfg) in corpus_with_names() {
        for k in -2i64..=3 {
            let max_degree = cfg.len() + k.max(0) as usize + 2;
            let formula = hilbert_series(&cfg, k).unwrap();
            let oracle = flats_ideal_dims(&cfg, k, max_degree);
            if formula.truncated(max_degree) != oracle {
                report.push_str(&format!(
                    "  {name} at k = {k}: closed form {}, oracle {}\n",
                    formula.render("q"),
                    oracle.render("q"),
                ));
                mismatches.push((name.to_string(), k));
            }
        }
    }
    assert!(start.elapsed().as_secs() < 60, "criterion 5 must finish within a minute");
    // pin the divergence pattern before failing: exactly the non-essential
    // configurations at negative shifts, except boolean21 at k = -2 where
    // both sides vanish for unrelated reasons
    let expected: Vec<(String, i64)> =
        [("braid3", -2), ("braid3", -1), ("braid4", -2), ("braid4", -1), ("boolean21", -1)]
            .map(|(n, k)| (n.to_string(), k))
            .to_vec();
    assert_eq!(mismatches, expected, "the closed-form/oracle divergence pattern changed");
    assert!(
        mismatches.is_empty(),
        "closed form vs oracle mismatches (all on non-essential configurations at \
         negative shifts, where the literal power ideal is the unit ideal):\n{report}"
    );
}

#[test]
fn criterion_06_activity_suite() {
    for (name, cfg) in corpus_with_names() {
        let subsets = tutte_by_subsets(&cfg);
        let delcon = tutte_by_deletion_contraction(&cfg);
        let activities = tutte_by_activities(&cfg);
        assert_eq!(subsets, delcon, "{name}: subset vs deletion-contraction");
        assert_eq!(delcon, activities, "{name}: deletion-contraction vs activities");

        let n = cfg.len();
        assert!(n <= 10, "{name}: corpus members stay exhaustively checkable");
        for mask in 0u32..(1 << n) {
            let subset: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            // panics internally on an overlap or a miss
            let _ = interval_decompose(&cfg, &subset);
        }

        assert_eq!(
            subsets.eval_rat(&rat(1), &rat(1)),
            Rat::from_integer(bases(&cfg).len().into()),
            "{name}: T(1,1) counts bases"
        );
        assert_eq!(
            subsets.eval_rat(&rat(0), &rat(1)),
            Rat::from_integer(internal_bases(&cfg).len().into()),
            "{name}: T(0,1) counts internal bases"
        );
    }
}

#[test]
fn criterion_07_monomial_basis_suite() {
    let mut failures: Vec<(String, i64, &'static str)> = Vec::new();
    let mut report = String::new();
    for (name, cfg) in corpus_with_names() {
        for k in -2i64..=1 {
            let monomials = basis_monomials(&cfg, k).unwrap();
            let expanded: Vec<_> = monomials.iter().map(|m| expand_monomial(&cfg, m)).collect();

            let rank = polynomial_rank(&expanded);
            if rank != expanded.len() {
                report.push_str(&format!(
                    "  {name} at k = {k}: {} monomials of coefficient rank {rank}\n",
                    expanded.len()
                ));
                failures.push((name.to_string(), k, "independence"));
            }

            let counts = monomial_degree_counts(&monomials);
            let series = hilbert_series(&cfg, k).unwrap();
            if counts != series {
                report.push_str(&format!(
                    "  {name} at k = {k}: degree counts {}, hilbert series {}\n",
                    counts.render("q"),
                    series.render("q"),
                ));
                failures.push((name.to_string(), k, "counts"));
            }

            let rejected: Vec<usize> = expanded
                .iter()
                .enumerate()
                .filter(|(_, p)| !annihilation_check(&cfg, k, p))
                .map(|(i, _)| i)
                .collect();
            if !rejected.is_empty() {
                report.push_str(&format!(
                    "  {name} at k = {k}: {} of {} monomials fail annihilation \
                     (exponent lists {:?})\n",
                    rejected.len(),
                    expanded.len(),
                    rejected.iter().map(|&i| &monomials[i].exponents).collect::<Vec<_>>(),
                ));
                failures.push((name.to_string(), k, "annihilation"));
            }
        }
    }
    // pin the failure pattern first; iteration order is corpus order with k
    // ascending inside, and the clauses run in the order independence,
    // counts, annihilation
    let expected: Vec<(String, i64, &'static str)> = vec![
        ("u23-211".into(), -2, "annihilation"),
        ("two-pencils".into(), -2, "annihilation"),
        ("braid3".into(), -2, "annihilation"),
        ("braid3".into(), -1, "annihilation"),
        ("braid3".into(), 1, "counts"),
        ("braid4".into(), -2, "annihilation"),
        ("braid4".into(), -1, "annihilation"),
        ("braid4".into(), 1, "counts"),
        ("boolean21".into(), -1, "annihilation"),
        ("boolean21".into(), 1, "counts"),
    ];
    assert_eq!(failures, expected, "the monomial-list failure pattern changed");
    assert!(
        failures.is_empty(),
        "monomial lists fall short of the claims (independence always holds; the \
         failing clauses are per-degree counts on non-essential configurations at \
         k = 1 and membership of the k = -2 lists):\n{report}"
    );
}

fn polynomial_rank(polys: &[zonotopal::oracle::Polynomial]) -> usize {
    use zonotopal::exactmath::matrix::RationalMatrix;
    let columns: BTreeSet<Vec<u32>> =
        polys.iter().flat_map(|p| p.terms().map(|(e, _)| e.clone())).collect();
    let columns: Vec<Vec<u32>> = columns.into_iter().collect();
    let rows: Vec<Vec<Rat>> = polys
        .iter()
        .map(|p| {
            columns
                .iter()
                .map(|c| {
                    p.terms()
                        .find(|(e, _)| *e == c)
                        .map(|(_, v)| v.clone())
                        .unwrap_or_else(Rat::zero)
                })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).rank()
}

#[test]
fn criterion_08_fat_point_filtration() {
    let mut mismatches: Vec<(String, i64)> = Vec::new();
    let mut report = String::new();
    for (name, cfg) in corpus_with_names() {
        let n = cfg.len();
        let max_degree = n + 4;
        let dim = cfg.rank() + cfg.excess();

        // telescoping: the quotient series over all filtration steps sum to
        // the series of the full polynomial ring
        let mut sum = GradedDims::zero();
        for k in 0..=n as i64 {
            sum = sum.add(fatpoint_quotient_direct(&cfg, k, max_degree).unwrap().dims());
        }
        let full = GradedDims::from_dims(
            (0..=max_degree).map(|d| binomial((dim - 1 + d) as u64, d as u64)).collect(),
        );
        assert_eq!(sum.truncated(max_degree), full, "{name}: telescoping sum");

        // the k = 0 ideal is principal on the product of all covectors
        let ideal0 = fatpoint_ideal_series(&cfg, 0, max_degree).unwrap();
        let principal = GradedDims::from_dims(
            (0..=max_degree)
                .map(|d| {
                    if d < n {
                        BigUint::ZERO
                    } else {
                        binomial((dim - 1 + d - n) as u64, (d - n) as u64)
                    }
                })
                .collect(),
        );
        assert_eq!(ideal0.dims(), &principal, "{name}: k = 0 ideal series");

        // the tutte-evaluation closed form against the direct quotients
        for k in 0..=n as i64 {
            let closed = fatpoint_quotient_closed(&cfg, k, max_degree).unwrap();
            let direct = fatpoint_quotient_direct(&cfg, k, max_degree).unwrap();
            let direct_rats: Vec<Rat> = (0..=max_degree)
                .map(|d| Rat::from_integer(direct.dims().coefficient(d).into()))
                .collect();
            let padded: Vec<Rat> = closed
                .iter()
                .cloned()
                .chain(std::iter::repeat(Rat::zero()))
                .take(max_degree + 1)
                .collect();
            if padded != direct_rats {
                report.push_str(&format!(
                    "  {name} at k = {k}: closed form [{}], direct quotient {}\n",
                    closed.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
                    direct.dims().render("t"),
                ));
                mismatches.push((name.to_string(), k));
            }
        }
    }
    // pin before failing: the closed form misses every configuration at
    // k = 0 (it extracts a q-power above the polynomial's q-degree there,
    // yielding zero against a nonzero quotient)
    for (name, _) in corpus_with_names() {
        assert!(
            mismatches.contains(&(name.to_string(), 0)),
            "{name}: expected the closed form to diverge at k = 0"
        );
    }
    assert!(
        mismatches.is_empty(),
        "tutte-evaluation closed form vs direct quotient series:\n{report}"
    );
}

#[test]
fn criterion_09_cox_dual_route_and_generating_identities() {
    let start = Instant::now();
    for (name, cfg) in [("b2", corpus::b2()), ("u23", corpus::u23()), ("g", corpus::example_g())] {
        for mode in [CoxMode::Ring, CoxMode::Central, CoxMode::Internal] {
            let direct = cox_table_direct(&cfg, mode, DEFAULT_MAX_T, DEFAULT_MAX_A).unwrap();
            let closed = cox_closed_form(&cfg, mode, DEFAULT_MAX_T, DEFAULT_MAX_A).unwrap();
            assert_eq!(direct, closed, "{name}: {mode:?} routes disagree");
        }
    }
    for (name, cfg) in [("b2", corpus::b2()), ("u23", corpus::u23())] {
        for which in
            [GeneratingIdentity::General, GeneratingIdentity::Ring, GeneratingIdentity::Spanning]
        {
            assert!(
                lemma_generating_check(&cfg, which, 3).unwrap(),
                "{name}: {which:?} generating identity"
            );
        }
    }
    assert!(start.elapsed().as_secs() < 120, "criterion 9 must finish within two minutes");
}

/// Count the forests on `v` labeled vertices by brute force: every edge
/// subset of the complete graph, acyclicity via union-find.
fn forest_count(v: usize) -> u64 {
    let mut edges = Vec::new();
    for a in 0..v {
        for b in (a + 1)..v {
            edges.push((a, b));
        }
    }
    let mut count = 0u64;
    for mask in 0u32..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut acyclic = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if acyclic {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_10_forest_enumeration() {
    // the enumerator, not a hardcoded constant, is the reference value
    for v in [3usize, 4] {
        let cfg = zonotopal::arrangement::braid(v);
        let total = hilbert_series(&cfg, 0).unwrap().total();
        let forests = forest_count(v);
        assert_eq!(
            total,
            BigUint::from(forests),
            "dim of the k = 0 inverse system for the braid configuration on {v} vertices \
             vs brute-force forest count"
        );
    }
    assert_eq!(forest_count(3), 7);
    assert_eq!(forest_count(4), 38);
}
