//! Sparse exact linear algebra over a [`Field`].
//!
//! Matrices store only nonzero entries, per row, sorted by column. The
//! elimination routines are fully deterministic: pivots are chosen in column
//! order, taking the first remaining row whose leading entry sits in that
//! column, so the reduced echelon form (which is canonical anyway) is reached
//! by a reproducible sequence of exact field operations.
//!
//! Nullspace bases are returned in a canonical form as well: the standard
//! free-column kernel vectors are re-echelonized as rows, which makes the
//! basis independent of implementation details and easy to compare against
//! golden data.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

/// Structural errors from matrix arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// Operand shapes are incompatible, or an entry index is out of range.
    DimensionMismatch,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch => write!(f, "matrix dimension mismatch"),
        }
    }
}

type Row<F> = Vec<(usize, F)>;

/// Sparse matrix over an exact field. No zero entries are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Row<F>>,
}

fn get_col<'a, F>(row: &'a [(usize, F)], col: usize) -> Option<&'a F> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

fn scale_row<F: Field>(row: &mut Row<F>, factor: &F) {
    for e in row.iter_mut() {
        e.1 = e.1.mul(factor);
    }
}

/// `row - factor * pivot` as a merge of two sorted rows.
fn axpy<F: Field>(row: &[(usize, F)], factor: &F, pivot: &[(usize, F)]) -> Row<F> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, factor.mul(&pivot[j].1).neg()));
            j += 1;
        } else {
            let v = row[i].1.sub(&factor.mul(&pivot[j].1));
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> SparseMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; duplicate positions are
    /// accumulated, and resulting zeros are dropped.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self, LinalgError> {
        let mut m = SparseMatrix::zero(rows, cols);
        for (r, c, v) in entries {
            m.add_to(r, c, &v)?;
        }
        Ok(m)
    }

    pub fn from_dense(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let data = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Adds `v` into position `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &F) -> Result<(), LinalgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        if v.is_zero() {
            return Ok(());
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1.add_assign(v);
                if row[i].1.is_zero() {
                    row.remove(i);
                }
            }
            Err(i) => row.insert(i, (c, v.clone())),
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&F> {
        self.data.get(r).and_then(|row| get_col(row, c))
    }

    pub fn row(&self, r: usize) -> &[(usize, F)] {
        &self.data[r]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| axpy(a, &F::one().neg(), b))
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| axpy(a, &F::one(), b))
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, factor: &F) -> Self {
        if factor.is_zero() {
            return SparseMatrix::zero(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v.mul(factor))).collect())
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            // Accumulate a sparse linear combination of rhs rows.
            let mut acc: Row<F> = Vec::new();
            for (k, a) in row {
                acc = axpy(&acc, &a.neg(), &rhs.data[*k]);
            }
            data.push(acc);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    /// Vertical concatenation; all blocks must share the column count.
    pub fn stack_rows(blocks: &[&Self]) -> Result<Self, LinalgError> {
        let cols = match blocks.first() {
            Some(b) => b.cols,
            None => return Ok(SparseMatrix::zero(0, 0)),
        };
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::DimensionMismatch);
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(SparseMatrix { rows, cols, data })
    }

    /// Matrix-vector product with a dense vector.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                let mut acc = F::zero();
                for (c, a) in row {
                    acc.add_assign(&a.mul(&v[*c]));
                }
                acc
            })
            .collect())
    }

    /// Maps every stored entry through a fallible function (zero results are
    /// dropped). Used e.g. to evaluate rational-function matrices at a point.
    pub fn try_map<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<SparseMatrix<G>, E> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut new_row = Vec::with_capacity(row.len());
            for (c, v) in row {
                let g = f(v)?;
                if !g.is_zero() {
                    new_row.push((*c, g));
                }
            }
            data.push(new_row);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Determinant of a square matrix by exact Gaussian elimination.
    pub fn determinant(&self) -> Result<F, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut a = self.to_dense();
        let n = self.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(F::zero());
            };
            if piv != col {
                a.swap(piv, col);
                det = det.neg();
            }
            det = det.mul(&a[col][col]);
            let inv = a[col][col].inv().expect("pivot nonzero");
            for r in (col + 1)..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].mul(&inv);
                for k in col..n {
                    let sub = f.mul(&a[col][k]);
                    a[r][k] = a[r][k].sub(&sub);
                }
            }
        }
        Ok(det)
    }

    fn echelon(&self, full: bool) -> (Vec<Row<F>>, Vec<usize>) {
        let mut work = self.data.clone();
        let mut pivots = Vec::new();
        let mut ptr = 0usize;
        for c in 0..self.cols {
            // Rows at or below `ptr` have had columns < c eliminated, so a
            // candidate pivot row is exactly one whose leading entry is at c.
            let mut pivot_row = None;
            for r in ptr..work.len() {
                if work[r].first().map(|e| e.0) == Some(c) {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            work.swap(ptr, pr);
            let inv = work[ptr][0].1.inv().expect("pivot entries are nonzero");
            scale_row(&mut work[ptr], &inv);
            for r in (ptr + 1)..work.len() {
                if work[r].first().map(|e| e.0) == Some(c) {
                    let f = work[r][0].1.clone();
                    work[r] = axpy(&work[r], &f, &work[ptr]);
                }
            }
            if full {
                for r in 0..ptr {
                    if let Some(f) = get_col(&work[r], c).cloned() {
                        work[r] = axpy(&work[r], &f, &work[ptr]);
                    }
                }
            }
            pivots.push(c);
            ptr += 1;
        }
        (work, pivots)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (work, pivots) = self.echelon(true);
        (
            SparseMatrix {
                rows: self.rows,
                cols: self.cols,
                data: work,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).1.len()
    }

    /// Canonical right-kernel basis: the free-column kernel vectors,
    /// re-echelonized as rows and returned densely. Empty when the matrix has
    /// full column rank.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (work, pivots) = self.echelon(true);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let mut raw = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![F::zero(); self.cols];
            v[fc] = F::one();
            for (k, &pc) in pivots.iter().enumerate() {
                if let Some(val) = get_col(&work[k], fc) {
                    v[pc] = val.neg();
                }
            }
            raw.push(v);
        }
        let (reduced, _) = SparseMatrix::from_dense(raw).rref();
        reduced
            .data
            .iter()
            .take_while(|row| !row.is_empty())
            .map(|row| {
                let mut v = vec![F::zero(); self.cols];
                for (c, val) in row {
                    v[*c] = val.clone();
                }
                v
            })
            .collect()
    }
}

impl SparseMatrix<crate::field::Rational> {
    /// Whether the determinant of a square rational matrix vanishes. Rows
    /// are cleared to integers (scaling by nonzero factors cannot change
    /// whether the determinant is zero) and eliminated fraction-free by the
    /// Bareiss recurrence, avoiding the per-step normalization cost of
    /// rational elimination on big matrices.
    pub fn determinant_is_zero(&self) -> Result<bool, LinalgError> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero;
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::from(1);
            for (_, v) in self.row(r) {
                let den = v.denominator();
                lcm = (&lcm / lcm.gcd(den)) * den;
            }
            let mut dense = vec![BigInt::from(0); n];
            for (c, v) in self.row(r) {
                dense[*c] = v.numerator() * (&lcm / v.denominator());
            }
            a.push(dense);
        }
        let mut prev = BigInt::from(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(true);
            };
            if p != k {
                a.swap(p, k);
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::from(0);
            }
            prev = a[k][k].clone();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Poly, RatFunc, Rational};

    fn rmat(rows: Vec<Vec<i64>>) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_single_relation() {
        // [2 -1] has kernel spanned by (1, 2).
        let m = rmat(alloc::vec![alloc::vec![2, -1]]);
        let ker = m.nullspace();
        assert_eq!(
            ker,
            alloc::vec![alloc::vec![Rational::from_int(1), Rational::from_int(2)]]
        );
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m: SparseMatrix<Rational> = SparseMatrix::identity(3);
        assert!(m.nullspace().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m: SparseMatrix<Rational> = SparseMatrix::zero(2, 3);
        let ker = m.nullspace();
        assert_eq!(ker.len(), 3);
        let id: SparseMatrix<Rational> = SparseMatrix::identity(3);
        assert_eq!(SparseMatrix::from_dense(ker), id);
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rmat(alloc::vec![alloc::vec![1, 2], alloc::vec![2, 4]]).rank(), 1);
        let empty: SparseMatrix<Rational> = SparseMatrix::zero(0, 0);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn symbolic_rank_over_rational_functions() {
        // The 1x1 matrix [2*t] over Q(t) has rank 1.
        let two_t = RatFunc::from_poly(Poly::monomial(Rational::from_int(2), 1));
        let m = SparseMatrix::from_dense(alloc::vec![alloc::vec![two_t]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let m = rmat(alloc::vec![
            alloc::vec![0, 2, 4],
            alloc::vec![1, 1, 1],
            alloc::vec![1, 3, 5],
        ]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        assert_eq!(p1, alloc::vec![0, 1]);
    }

    #[test]
    fn product_and_shape_errors() {
        let a = rmat(alloc::vec![alloc::vec![1, 2], alloc::vec![0, 1]]);
        let b = rmat(alloc::vec![alloc::vec![1, 0], alloc::vec![-2, 1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, rmat(alloc::vec![alloc::vec![-3, 2], alloc::vec![-2, 1]]));
        let c = rmat(alloc::vec![alloc::vec![1, 2, 3]]);
        assert_eq!(a.mul(&c).unwrap_err(), LinalgError::DimensionMismatch);
        assert_eq!(a.add(&c).unwrap_err(), LinalgError::DimensionMismatch);
    }

    #[test]
    fn entries_accumulate_and_cancel() {
        let m = SparseMatrix::from_entries(
            2,
            2,
            alloc::vec![
                (0, 0, Rational::from_int(1)),
                (0, 0, Rational::from_int(-1)),
                (1, 1, Rational::from_int(5)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.entry(1, 1), Some(&Rational::from_int(5)));
        assert!(SparseMatrix::from_entries(1, 1, alloc::vec![(1, 0, Rational::from_int(1))]).is_err());
    }

    #[test]
    fn determinants() {
        let a = rmat(alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4]]);
        assert_eq!(a.determinant().unwrap(), Rational::from_int(-2));
        assert!(!a.determinant_is_zero().unwrap());
        let s = rmat(alloc::vec![alloc::vec![1, 2], alloc::vec![2, 4]]);
        assert_eq!(s.determinant().unwrap(), Rational::zero());
        assert!(s.determinant_is_zero().unwrap());
        let empty: SparseMatrix<Rational> = SparseMatrix::zero(0, 0);
        assert_eq!(empty.determinant().unwrap(), Rational::one());
        assert!(!empty.determinant_is_zero().unwrap());
        let rect: SparseMatrix<Rational> = SparseMatrix::zero(1, 2);
        assert_eq!(rect.determinant().unwrap_err(), LinalgError::DimensionMismatch);
        assert_eq!(rect.determinant_is_zero().unwrap_err(), LinalgError::DimensionMismatch);
        // Fractional entries are cleared row by row before elimination.
        let f = SparseMatrix::from_entries(
            2,
            2,
            alloc::vec![
                (0, 0, Rational::new(1, 2).unwrap()),
                (0, 1, Rational::new(1, 3).unwrap()),
                (1, 0, Rational::new(3, 4).unwrap()),
                (1, 1, Rational::new(1, 2).unwrap()),
            ],
        )
        .unwrap();
        assert!(f.determinant_is_zero().unwrap());
    }
}
