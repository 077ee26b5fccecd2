//! Exact row reduction over Q: reduced row echelon form with rank, pivot
//! columns and a kernel basis, plus an incremental row space for cheap rank
//! accumulation with early exit.

use super::scalar::Rat;
use num_traits::{One, Zero};

/// Dense row-major matrix over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Output of [`RationalMatrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    pub reduced: RationalMatrix,
    pub pivots: Vec<usize>,
    /// Basis of the right kernel, one vector per free column.
    pub kernel: Vec<Vec<Rat>>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form by exact Gauss–Jordan elimination, first
    /// nonzero entry in column order as pivot. Also solves for the kernel:
    /// each free column yields the basis vector with 1 there and the negated
    /// pivot-row entries above.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m[(pivot_row, col)].recip();
            for j in col..m.cols {
                let v = m[(pivot_row, j)].clone() * &inv;
                m[(pivot_row, j)] = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let sub = m[(pivot_row, j)].clone() * &factor;
                        m[(r, j)] -= sub;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        let mut kernel = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; m.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        for free in 0..m.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); m.cols];
            vec[free] = Rat::one();
            for (col, &pr) in pivot_set.iter().enumerate() {
                if let Some(r) = pr {
                    vec[col] = -m[(r, free)].clone();
                }
            }
            kernel.push(vec);
        }
        Rref { rank, reduced: m, pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for i in 0..self.rows {
            space.insert(self.row(i).to_vec());
        }
        space.rank()
    }

    /// Solve `self * x = rhs` for one solution, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let red = aug.rref();
        if red.pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in red.pivots.iter().enumerate() {
            x[c] = red.reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Incrementally maintained reduced row space. `insert` reduces the candidate
/// against the rows seen so far and reports whether the rank grew; callers
/// can stop feeding rows once [`RowSpace::is_full`].
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    /// Reduced nonzero rows, each with its pivot column, kept normalized
    /// (pivot entry 1) and mutually reduced.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduce `row` against the space; if a nonzero remainder survives, add it
    /// and return true.
    pub fn insert(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (pivot, basis) in &self.rows {
            if !row[*pivot].is_zero() {
                let factor = row[*pivot].clone();
                for (dst, src) in row.iter_mut().zip(basis.iter()) {
                    if !src.is_zero() {
                        *dst -= src.clone() * &factor;
                    }
                }
            }
        }
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        // back-substitute into existing rows so future reductions stay cheap
        for (_, basis) in self.rows.iter_mut() {
            if !basis[pivot].is_zero() {
                let factor = basis[pivot].clone();
                for (dst, src) in basis.iter_mut().zip(row.iter()) {
                    if !src.is_zero() {
                        *dst -= src.clone() * &factor;
                    }
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(pos, (pivot, row));
        true
    }

    /// True if `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[Rat]) -> bool {
        let mut row = row.to_vec();
        for (pivot, basis) in &self.rows {
            if !row[*pivot].is_zero() {
                let factor = row[*pivot].clone();
                for (dst, src) in row.iter_mut().zip(basis.iter()) {
                    if !src.is_zero() {
                        *dst -= src.clone() * &factor;
                    }
                }
            }
        }
        row.iter().all(Zero::is_zero)
    }
}
