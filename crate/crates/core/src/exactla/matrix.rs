use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{combinations, LinAlgError, Rational};

/// Dense matrix of exact rationals, row-major and immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Which minors [`QMatrix::minors`] enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorMode {
    /// Leading principal minors of orders `1..=min(rows, cols)`.
    LeadingPrincipal,
    /// Every minor of order `1..=k`; for each order, row subsets in
    /// lexicographic order and, within a row subset, column subsets in
    /// lexicographic order.
    AllUpTo(usize),
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors. An empty list gives a `0x0` matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::ShapeMismatch("ragged rows"));
        }
        let n = rows.len();
        Ok(QMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from column vectors of a common length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    /// Integer matrix literal. Panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| super::rat(v)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> QMatrix {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Concatenates matrices with equal row counts side by side.
    pub fn hstack(parts: &[&QMatrix]) -> Result<QMatrix, LinAlgError> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(LinAlgError::ShapeMismatch("hstack row counts differ"));
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for m in parts {
                entries.extend_from_slice(m.row(i));
            }
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&QMatrix]) -> Result<QMatrix, LinAlgError> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(LinAlgError::ShapeMismatch("vstack column counts differ"));
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for m in parts {
            entries.extend_from_slice(&m.entries);
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.is_square()
            && self.is_lower_triangular()
            && (0..self.rows).all(|i| self.get(i, i).is_one())
    }

    /// Entries on and above the diagonal; zeros elsewhere.
    pub fn upper_part(&self) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| {
            if j >= i {
                self.get(i, j).clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Entries strictly below the diagonal; zeros elsewhere.
    pub fn strict_lower_part(&self) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| {
            if j < i {
                self.get(i, j).clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn checked_mul(&self, rhs: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch("product inner dimensions differ"));
        }
        let mut entries = vec![Rational::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Rank by forward elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        forward_eliminate(&mut rows, self.cols).len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = gauss_jordan(&mut rows, self.cols);
        let m = QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    /// Rank and a kernel basis. The basis columns are in reduced column
    /// echelon form, so the same kernel always yields the same matrix.
    pub fn rref_rank_nullspace(&self) -> (usize, QMatrix) {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        (rank, column_echelon(self.cols, basis))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination after
    /// clearing denominators row by row.
    pub fn det(&self) -> Result<Rational, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            a.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
            scale *= l;
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(Rational::new(sign * &a[n - 1][n - 1], scale))
    }

    pub fn inverse(&self) -> Result<QMatrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = QMatrix::hstack(&[self, &QMatrix::identity(n)])?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinAlgError::Singular);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        let all: Vec<usize> = (0..n).collect();
        Ok(r.submatrix(&all, &right))
    }

    /// Some solution `X` of `self * X = rhs`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &QMatrix) -> Result<Option<QMatrix>, LinAlgError> {
        if rhs.rows != self.rows {
            return Err(LinAlgError::ShapeMismatch("right-hand side row count"));
        }
        let aug = QMatrix::hstack(&[self, rhs])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = vec![vec![Rational::zero(); rhs.cols]; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            for (j, xj) in x[p].iter_mut().enumerate() {
                *xj = r.get(row, self.cols + j).clone();
            }
        }
        Ok(Some(QMatrix::from_rows(x)?))
    }

    /// `self = V * U` with `V` unit lower triangular and `U` upper
    /// triangular, computed without pivoting.
    pub fn lu_decompose(&self) -> Result<(QMatrix, QMatrix), LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.det()?.is_zero() {
            return Err(LinAlgError::Singular);
        }
        let n = self.rows;
        let mut v = vec![vec![Rational::zero(); n]; n];
        let mut u = vec![vec![Rational::zero(); n]; n];
        for k in 0..n {
            for j in k..n {
                let mut s = self.get(k, j).clone();
                for t in 0..k {
                    s -= &v[k][t] * &u[t][j];
                }
                u[k][j] = s;
            }
            if u[k][k].is_zero() {
                return Err(LinAlgError::NoLu { order: k + 1 });
            }
            v[k][k] = Rational::one();
            for i in k + 1..n {
                let mut s = self.get(i, k).clone();
                for t in 0..k {
                    s -= &v[i][t] * &u[t][k];
                }
                v[i][k] = s / &u[k][k];
            }
        }
        Ok((QMatrix::from_rows(v)?, QMatrix::from_rows(u)?))
    }

    pub fn minors(&self, mode: MinorMode) -> Result<Vec<Rational>, LinAlgError> {
        let max = self.rows.min(self.cols);
        match mode {
            MinorMode::LeadingPrincipal => (1..=max)
                .map(|k| {
                    let idx: Vec<usize> = (0..k).collect();
                    self.submatrix(&idx, &idx).det()
                })
                .collect(),
            MinorMode::AllUpTo(k) => {
                if k == 0 || k > max {
                    return Err(LinAlgError::OrderOutOfRange { order: k, max });
                }
                let mut out = Vec::new();
                for order in 1..=k {
                    let col_sets = combinations(self.cols, order);
                    for rs in combinations(self.rows, order) {
                        for cs in &col_sets {
                            out.push(self.submatrix(&rs, cs).det()?);
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

/// The `p x p` exchange matrix: ones on the anti-diagonal.
pub fn exchange_matrix(p: usize) -> QMatrix {
    QMatrix::from_fn(p, p, |i, j| {
        if i + j + 1 == p {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Canonical basis of the span of `vectors` (each of length `len`), as the
/// columns of a matrix in reduced column echelon form.
pub(crate) fn column_echelon(len: usize, vectors: Vec<Vec<Rational>>) -> QMatrix {
    let mut rows = vectors;
    let rank = gauss_jordan(&mut rows, len).len();
    rows.truncate(rank);
    QMatrix::from_columns(len, &rows)
}

/// Gauss-Jordan in place; returns pivot columns. Pivot rows are scaled to a
/// leading one and pivots are taken as the first nonzero entry in column order.
fn gauss_jordan(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == m {
            break;
        }
        let Some(p) = (prow..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, prow);
        normalize_row(&mut rows[prow], col);
        let support: Vec<usize> = (col..cols).filter(|&j| !rows[prow][j].is_zero()).collect();
        for i in 0..m {
            if i != prow && !rows[i][col].is_zero() {
                eliminate(rows, i, prow, col, &support);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}

/// Forward elimination only (row echelon form); returns pivot columns.
fn forward_eliminate(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == m {
            break;
        }
        let Some(p) = (prow..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, prow);
        normalize_row(&mut rows[prow], col);
        let support: Vec<usize> = (col..cols).filter(|&j| !rows[prow][j].is_zero()).collect();
        for i in prow + 1..m {
            if !rows[i][col].is_zero() {
                eliminate(rows, i, prow, col, &support);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}

fn normalize_row(row: &mut [Rational], col: usize) {
    if row[col].is_one() {
        return;
    }
    let inv = row[col].recip();
    for e in row[col..].iter_mut() {
        if !e.is_zero() {
            *e *= &inv;
        }
    }
}

/// `rows[target] -= rows[target][col] * rows[pivot]`, touching only the
/// pivot row's nonzero support.
fn eliminate(rows: &mut [Vec<Rational>], target: usize, pivot: usize, col: usize, support: &[usize]) {
    let (t, p) = if target < pivot {
        let (a, b) = rows.split_at_mut(pivot);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(target);
        (&mut b[0], &a[pivot])
    };
    let factor = t[col].clone();
    for &j in support {
        t[j] -= &factor * &p[j];
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [{}]", self.rows, self.cols, self)
    }
}

/// Text form: rows separated by `;`, entries by `,`, rationals as `p/q`.
impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", e)?;
            }
        }
        Ok(())
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix difference shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// True when every entry of `v` is strictly positive.
pub(crate) fn all_positive(v: &[Rational]) -> bool {
    v.iter().all(Signed::is_positive)
}
