//! Vector configurations: finite lists of covectors (linear functionals with
//! multiplicity, zero allowed) in a rational ambient space. A configuration
//! is simultaneously a hyperplane multiarrangement (each nonzero covector
//! cuts out its kernel hyperplane) and a representation of a matroid on the
//! index set. Minors, flats of the intersection lattice, line directions and
//! the built-in families all live here.

use crate::exactmath::matrix::{RationalMatrix, RowSpace};
use crate::exactmath::scalar::{format_rat, parse_rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot contract the loop at index {0}")]
    ContractLoop(usize),
    #[error("covector index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("configuration is not essential (rank {rank} < ambient dimension {dim})")]
    NotEssential { rank: usize, dim: usize },
    #[error("multiplicity vector has length {got}, expected {expected}")]
    MultiplicityLength { got: usize, expected: usize },
    #[error("unknown family spec {0:?}")]
    BadFamily(String),
}

/// A list of covectors in `Q^ambient_dim`, kept in order and with
/// multiplicity. Indices into `covectors` are the matroid ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorConfiguration {
    ambient_dim: usize,
    covectors: Vec<Vec<Rat>>,
}

/// A flat of the intersection lattice: the subspace of the ambient space cut
/// out by some of the hyperplanes, stored with a canonical (reduced echelon)
/// basis, the set of covector indices vanishing on it, and the number that do
/// not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatSubspace {
    /// Reduced-echelon basis rows of the subspace, in ambient coordinates.
    pub basis: Vec<Vec<Rat>>,
    /// Indices of covectors vanishing identically on the flat (loops vanish
    /// on every flat).
    pub containing: BTreeSet<usize>,
    /// Number of covectors, counted with multiplicity, not vanishing on the
    /// flat; this is the common directional degree of generic points of the
    /// flat.
    pub rho: usize,
}

impl FlatSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl VectorConfiguration {
    pub fn new(ambient_dim: usize, covectors: Vec<Vec<Rat>>) -> Self {
        assert!(
            covectors.iter().all(|c| c.len() == ambient_dim),
            "covector length must equal the ambient dimension"
        );
        Self { ambient_dim, covectors }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of covectors, with multiplicity.
    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn covector(&self, i: usize) -> &[Rat] {
        &self.covectors[i]
    }

    pub fn covectors(&self) -> &[Vec<Rat>] {
        &self.covectors
    }

    /// Matroid rank of the whole configuration.
    pub fn rank(&self) -> usize {
        self.rank_of(0..self.len())
    }

    /// Rank of a subset of indices.
    pub fn rank_of(&self, indices: impl IntoIterator<Item = usize>) -> usize {
        let mut space = RowSpace::new(self.ambient_dim);
        for i in indices {
            space.insert(self.covectors[i].clone());
            if space.is_full() {
                break;
            }
        }
        space.rank()
    }

    /// Excess of the ambient space over the span: `ambient_dim - rank`.
    pub fn excess(&self) -> usize {
        self.ambient_dim - self.rank()
    }

    pub fn is_essential(&self) -> bool {
        self.excess() == 0
    }

    pub fn require_essential(&self) -> Result<(), ArrangementError> {
        if self.is_essential() {
            Ok(())
        } else {
            Err(ArrangementError::NotEssential { rank: self.rank(), dim: self.ambient_dim })
        }
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.covectors[i].iter().all(Zero::is_zero)
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        !self.is_loop(i) && self.rank_of((0..self.len()).filter(|&j| j != i)) < self.rank()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_loop(i)).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_coloop(i)).collect()
    }

    /// Remove covector `i`, ambient space unchanged.
    pub fn delete(&self, i: usize) -> Result<Self, ArrangementError> {
        if i >= self.len() {
            return Err(ArrangementError::IndexOutOfRange(i));
        }
        let mut covectors = self.covectors.clone();
        covectors.remove(i);
        Ok(Self { ambient_dim: self.ambient_dim, covectors })
    }

    /// Contract covector `i`: pass to the quotient of the dual space by the
    /// line of `l_i`, realized by eliminating the pivot coordinate of `l_i`
    /// with the smallest index. Contracting a loop is an error.
    pub fn contract(&self, i: usize) -> Result<Self, ArrangementError> {
        let pivot = self
            .covectors
            .get(i)
            .ok_or(ArrangementError::IndexOutOfRange(i))?
            .iter()
            .position(|v| !v.is_zero())
            .ok_or(ArrangementError::ContractLoop(i))?;
        self.contract_with_pivot(i, pivot)
    }

    /// Contraction with an explicit pivot coordinate choice. Any coordinate
    /// with a nonzero entry in `l_i` yields the same matroid (and the same
    /// power-ideal invariants); exposed so that tests can assert exactly
    /// that.
    pub fn contract_with_pivot(&self, i: usize, pivot: usize) -> Result<Self, ArrangementError> {
        let li = self.covectors.get(i).ok_or(ArrangementError::IndexOutOfRange(i))?;
        if li.get(pivot).is_none_or(Zero::is_zero) {
            return Err(ArrangementError::ContractLoop(i));
        }
        let scale = li[pivot].recip();
        let mut covectors = Vec::with_capacity(self.len() - 1);
        for (j, lj) in self.covectors.iter().enumerate() {
            if j == i {
                continue;
            }
            let factor = lj[pivot].clone() * &scale;
            let mut reduced: Vec<Rat> =
                lj.iter().zip(li).map(|(a, b)| a - b.clone() * &factor).collect();
            reduced.remove(pivot);
            covectors.push(reduced);
        }
        Ok(Self { ambient_dim: self.ambient_dim - 1, covectors })
    }

    /// Deletion and contraction of the same element as a pair.
    pub fn delete_contract(&self, i: usize) -> Result<(Self, Self), ArrangementError> {
        Ok((self.delete(i)?, self.contract(i)?))
    }

    /// Directional degree of a vector of the ambient space: the number of
    /// covectors, with multiplicity, that do not vanish on it.
    pub fn directional_degree(&self, h: &[Rat]) -> usize {
        assert_eq!(h.len(), self.ambient_dim);
        self.covectors.iter().filter(|l| !dot(l, h).is_zero()).count()
    }

    /// Replace each covector by `a[i]` copies of itself (copies of covector 0
    /// first, and so on). Covectors with `a[i] = 0` disappear.
    pub fn expand_multiset(&self, a: &[u32]) -> Result<Self, ArrangementError> {
        if a.len() != self.len() {
            return Err(ArrangementError::MultiplicityLength {
                got: a.len(),
                expected: self.len(),
            });
        }
        let mut covectors = Vec::new();
        for (l, &mult) in self.covectors.iter().zip(a) {
            for _ in 0..mult {
                covectors.push(l.clone());
            }
        }
        Ok(Self { ambient_dim: self.ambient_dim, covectors })
    }

    /// All flats of the intersection lattice of dimension at least `min_dim`,
    /// including the ambient space itself (the empty intersection). Ordered
    /// by decreasing dimension, then by canonical basis.
    pub fn flats(&self, min_dim: usize) -> Vec<FlatSubspace> {
        let mut found: BTreeSet<Vec<String>> = BTreeSet::new();
        let mut result: Vec<FlatSubspace> = Vec::new();
        let top_basis: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .map(|i| {
                let mut row = vec![Rat::zero(); self.ambient_dim];
                row[i] = Rat::one();
                row
            })
            .collect();
        if self.ambient_dim < min_dim {
            return result;
        }
        let mut frontier = vec![top_basis];
        found.insert(frontier[0].iter().map(|r| render_row(r)).collect());
        while let Some(basis) = frontier.pop() {
            let flat = self.flat_from_basis(basis.clone());
            let dim = flat.dim();
            if dim > min_dim {
                for j in 0..self.len() {
                    if flat.containing.contains(&j) {
                        continue;
                    }
                    let cut = intersect_with_hyperplane(&basis, &self.covectors[j]);
                    let key: Vec<String> = cut.iter().map(|r| render_row(r)).collect();
                    if found.insert(key) {
                        frontier.push(cut);
                    }
                }
            }
            result.push(flat);
        }
        result.sort_by(|a, b| {
            b.dim().cmp(&a.dim()).then_with(|| basis_key(&a.basis).cmp(&basis_key(&b.basis)))
        });
        result
    }

    fn flat_from_basis(&self, basis: Vec<Vec<Rat>>) -> FlatSubspace {
        let containing: BTreeSet<usize> = (0..self.len())
            .filter(|&i| basis.iter().all(|u| dot(&self.covectors[i], u).is_zero()))
            .collect();
        let rho = self.len() - containing.len();
        FlatSubspace { basis, containing, rho }
    }

    /// Directions of the one-dimensional flats, as primitive integer vectors
    /// (denominators cleared, gcd one, first nonzero entry positive), sorted
    /// lexicographically. Requires an essential configuration, otherwise no
    /// intersection of hyperplanes has dimension one... unless a line happens
    /// to appear anyway; the precondition keeps the notion honest.
    pub fn lines(&self) -> Result<Vec<Vec<BigInt>>, ArrangementError> {
        self.require_essential()?;
        let mut dirs: Vec<Vec<BigInt>> = self
            .flats(1)
            .into_iter()
            .filter(|f| f.dim() == 1)
            .map(|f| primitive_direction(&f.basis[0]))
            .collect();
        dirs.sort();
        Ok(dirs)
    }

    /// Serialize in the same plain-text format [`parse_arrangement`] reads.
    pub fn to_file_format(&self) -> String {
        let mut out = format!("dim {}\n", self.ambient_dim);
        for l in &self.covectors {
            let row: Vec<String> = l.iter().map(format_rat).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn render_row(row: &[Rat]) -> String {
    let parts: Vec<String> = row.iter().map(format_rat).collect();
    parts.join(",")
}

fn basis_key(basis: &[Vec<Rat>]) -> Vec<String> {
    basis.iter().map(|r| render_row(r)).collect()
}

/// Intersect the span of `basis` with the kernel of `covector`; the covector
/// must not vanish on the whole subspace, so the dimension drops by exactly
/// one. Returns a canonical (reduced echelon) basis.
fn intersect_with_hyperplane(basis: &[Vec<Rat>], covector: &[Rat]) -> Vec<Vec<Rat>> {
    let values: Vec<Rat> = basis.iter().map(|u| dot(covector, u)).collect();
    let constraint = RationalMatrix::from_rows(vec![values]);
    let kernel = constraint.rref().kernel;
    let rows: Vec<Vec<Rat>> = kernel
        .iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); basis[0].len()];
            for (coeff, u) in c.iter().zip(basis) {
                if !coeff.is_zero() {
                    for (dst, src) in v.iter_mut().zip(u) {
                        *dst += coeff * src;
                    }
                }
            }
            v
        })
        .collect();
    let reduced = RationalMatrix::from_rows(rows).rref();
    (0..reduced.rank).map(|i| reduced.reduced.row(i).to_vec()).collect()
}

/// Scale a rational vector to a primitive integer vector with positive first
/// nonzero entry.
pub fn primitive_direction(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Coordinate configuration: the standard covectors `e_1*, ..., e_n*` inside
/// a space of dimension `n + excess`.
pub fn boolean(n: usize, excess: usize) -> VectorConfiguration {
    let dim = n + excess;
    let covectors = (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); dim];
            row[i] = Rat::one();
            row
        })
        .collect();
    VectorConfiguration::new(dim, covectors)
}

/// All pairwise difference functionals `y_i - y_j` for `1 <= i < j <= n`, in
/// lexicographic pair order, inside dimension `n`. Rank `n - 1`.
pub fn braid(n: usize) -> VectorConfiguration {
    let mut covectors = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            row[j] = -Rat::one();
            covectors.push(row);
        }
    }
    VectorConfiguration::new(n, covectors)
}

/// One covector `y_a - y_b` per edge, vertices labelled from 1; the ambient
/// dimension is the largest vertex label.
pub fn graphic(edges: &[(usize, usize)]) -> Result<VectorConfiguration, ArrangementError> {
    let dim = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let mut covectors = Vec::new();
    for &(a, b) in edges {
        if a == 0 || b == 0 {
            return Err(ArrangementError::BadFamily("graphic vertices are 1-based".into()));
        }
        let mut row = vec![Rat::zero(); dim];
        if a == b {
            // self-edge: the zero covector, a loop, kept deliberately
        } else {
            row[a - 1] = Rat::one();
            row[b - 1] = -Rat::one();
        }
        covectors.push(row);
    }
    Ok(VectorConfiguration::new(dim, covectors))
}

/// Read the plain-text format: optional `#` comment lines and blank lines, a
/// `dim D` line, then one covector per line, entries `p` or `p/q` separated
/// by whitespace.
pub fn parse_arrangement(text: &str) -> Result<VectorConfiguration, ArrangementError> {
    let mut dim: Option<usize> = None;
    let mut covectors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim") {
            if dim.is_some() {
                return Err(ArrangementError::Parse {
                    line: line_no,
                    msg: "duplicate dim line".into(),
                });
            }
            let d: usize = rest.trim().parse().map_err(|_| ArrangementError::Parse {
                line: line_no,
                msg: format!("bad dimension {:?}", rest.trim()),
            })?;
            dim = Some(d);
            continue;
        }
        let Some(d) = dim else {
            return Err(ArrangementError::Parse {
                line: line_no,
                msg: "covector row before the dim line".into(),
            });
        };
        let entries: Result<Vec<Rat>, _> = line.split_whitespace().map(parse_rat).collect();
        let row =
            entries.map_err(|e| ArrangementError::Parse { line: line_no, msg: e.to_string() })?;
        if row.len() != d {
            return Err(ArrangementError::Parse {
                line: line_no,
                msg: format!("expected {} entries, found {}", d, row.len()),
            });
        }
        covectors.push(row);
    }
    let dim = dim.ok_or(ArrangementError::Parse { line: 0, msg: "missing dim line".into() })?;
    Ok(VectorConfiguration::new(dim, covectors))
}

/// Inline family specs for the CLI: `braid:4`, `boolean:3,1`,
/// `graphic:1-2,2-3,1-3`.
pub fn parse_family_spec(spec: &str) -> Result<VectorConfiguration, ArrangementError> {
    let bad = || ArrangementError::BadFamily(spec.to_string());
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    match name {
        "braid" => {
            let n: usize = args.trim().parse().map_err(|_| bad())?;
            Ok(braid(n))
        }
        "boolean" => {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(bad());
            }
            let n: usize = parts[0].trim().parse().map_err(|_| bad())?;
            let m: usize = parts[1].trim().parse().map_err(|_| bad())?;
            Ok(boolean(n, m))
        }
        "graphic" => {
            let mut edges = Vec::new();
            for part in args.split(',') {
                let (a, b) = part.split_once('-').ok_or_else(bad)?;
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                edges.push((a, b));
            }
            graphic(&edges)
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactmath::scalar::rat;

    fn u23() -> VectorConfiguration {
        corpus::u23()
    }

    #[test]
    fn ranks_of_small_configurations() {
        assert_eq!(u23().rank(), 2);
        assert_eq!(boolean(2, 0).rank(), 2);
        assert_eq!(boolean(2, 1).rank(), 2);
        assert!(!boolean(2, 1).is_essential());
        assert_eq!(braid(3).rank(), 2);
        assert_eq!(braid(4).rank(), 3);
        assert_eq!(braid(4).len(), 6);
        assert_eq!(VectorConfiguration::new(3, vec![]).rank(), 0);
    }

    #[test]
    fn loops_and_coloops() {
        let g = corpus::example_g();
        assert_eq!(g.loops(), Vec::<usize>::new());
        assert_eq!(g.coloops(), vec![2]); // l3 = y3 alone reaches the third coordinate
        let mut covs = g.covectors().to_vec();
        covs.push(vec![rat(0); 3]);
        let with_loop = VectorConfiguration::new(3, covs);
        assert_eq!(with_loop.loops(), vec![5]);
        assert_eq!(with_loop.rank(), 3);
    }

    #[test]
    fn contraction_eliminates_a_coordinate() {
        // contract the first element of U_{2,3}: the other two become equal
        let c = u23().contract(0).unwrap();
        assert_eq!(c.ambient_dim(), 1);
        assert_eq!(c.covectors(), &[vec![rat(1)], vec![rat(1)]]);

        // contract l5 = y1 - y2 of G: 4 covectors in dimension 2, rank 2
        let g = corpus::example_g().contract(4).unwrap();
        assert_eq!(g.ambient_dim(), 2);
        assert_eq!(g.len(), 4);
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn contraction_pivot_choice_gives_same_matroid() {
        let g = corpus::example_g();
        let a = g.contract_with_pivot(4, 0).unwrap();
        let b = g.contract_with_pivot(4, 1).unwrap();
        for mask in 0u32..(1 << a.len()) {
            let subset = (0..a.len()).filter(|i| mask & (1 << i) != 0);
            let subset2 = subset.clone();
            assert_eq!(a.rank_of(subset), b.rank_of(subset2), "mask {mask}");
        }
    }

    #[test]
    fn contracting_a_loop_fails() {
        let cfg = VectorConfiguration::new(2, vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
        assert_eq!(cfg.contract(0), Err(ArrangementError::ContractLoop(0)));
        assert!(cfg.contract(1).is_ok());
    }

    #[test]
    fn directional_degree_counts_nonvanishing_covectors() {
        let g = corpus::example_g();
        assert_eq!(g.directional_degree(&[rat(0), rat(0), rat(1)]), 1);
        assert_eq!(g.directional_degree(&[rat(1), rat(0), rat(0)]), 2);
        assert_eq!(g.directional_degree(&[rat(1), rat(1), rat(1)]), 4); // kills y1 - y2
        assert_eq!(g.directional_degree(&[rat(1), rat(2), rat(4)]), 5);
        // generic direction of a flat: rho of the flat
        for flat in g.flats(1) {
            if flat.dim() == 1 {
                assert_eq!(g.directional_degree(&flat.basis[0]), flat.rho);
            }
        }
    }

    #[test]
    fn flats_of_g_collapse_duplicate_hyperplanes() {
        let g = corpus::example_g();
        let flats = g.flats(1);
        let by_dim = |d: usize| flats.iter().filter(|f| f.dim() == d).count();
        assert_eq!(by_dim(3), 1); // ambient space
        assert_eq!(by_dim(2), 4); // five hyperplanes, two coincide
        assert_eq!(by_dim(1), 4);
        let top = flats.iter().find(|f| f.dim() == 3).unwrap();
        assert_eq!(top.rho, 5);
        assert!(top.containing.is_empty());
    }

    #[test]
    fn lines_of_g_and_b2() {
        let g = corpus::example_g();
        let lines = g.lines().unwrap();
        let expect: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 0.into(), 1.into()],
            vec![0.into(), 1.into(), 0.into()],
            vec![1.into(), 0.into(), 0.into()],
            vec![1.into(), 1.into(), 0.into()],
        ];
        assert_eq!(lines, expect);

        let b2 = boolean(2, 0);
        let lines = b2.lines().unwrap();
        assert_eq!(lines, vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);

        assert!(matches!(
            boolean(2, 1).lines(),
            Err(ArrangementError::NotEssential { rank: 2, dim: 3 })
        ));
    }

    #[test]
    fn zero_covector_is_invisible_to_flats() {
        let g = corpus::example_g();
        let mut covs = g.covectors().to_vec();
        covs.push(vec![rat(0); 3]);
        let with_loop = VectorConfiguration::new(3, covs);
        let a = g.flats(1);
        let b = with_loop.flats(1);
        assert_eq!(a.len(), b.len());
        for (fa, fb) in a.iter().zip(&b) {
            assert_eq!(fa.basis, fb.basis);
            assert_eq!(fa.rho, fb.rho);
            // the loop joins every containing set
            assert!(fb.containing.contains(&5));
        }
    }

    #[test]
    fn expand_multiset_repeats_covectors_in_order() {
        let m = u23().expand_multiset(&[2, 1, 1]).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.covector(0), m.covector(1));
        assert_eq!(m.rank(), 2);
        let gone = u23().expand_multiset(&[0, 1, 1]).unwrap();
        assert_eq!(gone.len(), 2);
        assert_eq!(
            u23().expand_multiset(&[1, 1]),
            Err(ArrangementError::MultiplicityLength { got: 2, expected: 3 })
        );
    }

    #[test]
    fn graphic_triangle_matches_braid_three_as_a_matroid() {
        let tri = graphic(&[(1, 2), (2, 3), (1, 3)]).unwrap();
        let br = braid(3);
        assert_eq!(tri.len(), br.len());
        for mask in 0u32..(1 << 3) {
            let subset = (0..3).filter(|i| mask & (1 << i) != 0);
            let subset2 = subset.clone();
            assert_eq!(tri.rank_of(subset), br.rank_of(subset2));
        }
    }

    #[test]
    fn file_format_round_trips() {
        for cfg in [u23(), corpus::example_g(), braid(4), boolean(2, 1)] {
            let text = cfg.to_file_format();
            let back = parse_arrangement(&text).unwrap();
            assert_eq!(back, cfg);
        }
    }

    #[test]
    fn parser_reports_line_numbers_and_shapes() {
        let ok = parse_arrangement("# a comment\n\ndim 2\n1 0\n1/2 -3\n").unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok.covector(1)[0], crate::exactmath::scalar::ratq(1, 2));

        let missing = parse_arrangement("1 0\n");
        assert!(matches!(missing, Err(ArrangementError::Parse { line: 1, .. })));
        let ragged = parse_arrangement("dim 2\n1 0 0\n");
        assert!(matches!(ragged, Err(ArrangementError::Parse { line: 2, .. })));
        let badnum = parse_arrangement("dim 1\n1/0\n");
        assert!(matches!(badnum, Err(ArrangementError::Parse { line: 2, .. })));
    }

    #[test]
    fn family_specs_parse() {
        assert_eq!(parse_family_spec("braid:4").unwrap(), braid(4));
        assert_eq!(parse_family_spec("boolean:3,1").unwrap(), boolean(3, 1));
        assert_eq!(
            parse_family_spec("graphic:1-2,2-3,1-3").unwrap(),
            graphic(&[(1, 2), (2, 3), (1, 3)]).unwrap()
        );
        assert!(parse_family_spec("frobnicate:9").is_err());
        assert!(parse_family_spec("boolean:3").is_err());
    }

    #[test]
    fn primitive_directions_are_canonical() {
        use crate::exactmath::scalar::ratq;
        assert_eq!(
            primitive_direction(&[ratq(-1, 2), ratq(1, 3)]),
            vec![BigInt::from(3), BigInt::from(-2)]
        );
        assert_eq!(
            primitive_direction(&[rat(0), rat(-4), rat(-6)]),
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(3)]
        );
    }
}
