use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaussRat;
use crate::linalg::Scalar;
use crate::par::Exec;
use crate::poly::{MultiPoly, VarSet};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix of `nr` rows and `nc` columns starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Matrix::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Submatrix on the listed rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `[[a, b], [c, d]]` from four blocks with matching sizes.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch("block sizes disagree".into()));
        }
        let (r, cc) = (a.rows, a.cols);
        Ok(Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r, j < cc) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - cc).clone(),
            (false, true) => c.get(i - r, j).clone(),
            (false, false) => d.get(i - r, j - cc).clone(),
        }))
    }

    fn sample(&self) -> &T {
        self.data.first().expect("operation needs a non-empty matrix")
    }

    pub fn zeros_like(&self) -> Self {
        let z = self.sample().zero_like();
        Matrix { rows: self.rows, cols: self.cols, data: vec![z; self.rows * self.cols] }
    }

    pub fn identity_like(&self) -> Self {
        let z = self.sample().zero_like();
        let o = self.sample().one_like();
        Matrix::from_fn(self.rows, self.cols, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.cols == 0 {
            return Err(Error::DimensionMismatch(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).times(other.get(0, j));
            for k in 1..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
            acc
        }))
    }

    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product dimensions")
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("entrywise operation on different shapes".into()));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() })
    }

    /// Panics on a shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, T::plus).expect("matrix sum shapes")
    }

    /// Panics on a shape mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, T::minus).expect("matrix difference shapes")
    }

    pub fn neg(&self) -> Self {
        self.map(T::negated)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.times(c))
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        let mut acc = self.sample().zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.plus(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Division-free determinant by expansion over column subsets, row by row:
/// `O(n·2^n)` ring operations, exact over any commutative ring.
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Err(Error::DimensionMismatch("determinant of an empty matrix".into()));
    }
    assert!(n < 24, "subset expansion limited to small matrices");
    let zero = m.get(0, 0).zero_like();
    // minors of the first k rows, indexed by the bitmask of columns used
    let mut layer: Vec<Option<T>> = vec![None; 1 << n];
    layer[0] = Some(m.get(0, 0).one_like());
    for row in 0..n {
        let mut next: Vec<Option<T>> = vec![None; 1 << n];
        for (mask, val) in layer.iter().enumerate() {
            let Some(val) = val else { continue };
            if val.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = m.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                let above = (mask >> (col + 1)).count_ones();
                let mut term = val.times(entry);
                if above % 2 == 1 {
                    term = term.negated();
                }
                let slot = &mut next[mask | (1 << col)];
                *slot = Some(match slot.take() {
                    Some(acc) => acc.plus(&term),
                    None => term,
                });
            }
        }
        layer = next;
    }
    Ok(layer[(1 << n) - 1].take().unwrap_or(zero))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `true` iff every `k × k` minor of a square matrix is identically zero,
/// i.e. the generic rank is below `k`. Minors are expanded under `exec`.
pub fn minor_vanishing<T: Scalar>(m: &Matrix<T>, k: usize, exec: Exec) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    if k == 0 || k > m.rows {
        return Err(Error::DimensionMismatch(format!("minor size {k} for a {}x{} matrix", m.rows, m.cols)));
    }
    let subsets = combinations(m.rows, k);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = subsets.iter().flat_map(|r| subsets.iter().map(move |c| (r, c))).collect();
    Ok(exec.all(pairs.len(), |p| {
        let (r, c) = pairs[p];
        determinant(&m.select(r, c)).map(|d| d.is_zero()).unwrap_or(false)
    }))
}

impl Matrix<GaussRat> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { GaussRat::one() } else { GaussRat::zero() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| GaussRat::from_int(x)).collect()).collect())
            .expect("rectangular integer rows")
    }

    /// Single nonzero entry `1` at `(i, j)`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, GaussRat::one());
        m
    }

    pub fn diag(entries: &[GaussRat]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { GaussRat::zero() })
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    /// Row-major flattening; the inverse of [`Matrix::from_vector`].
    pub fn to_vector(&self) -> Vec<GaussRat> {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: &[GaussRat]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v.to_vec() }
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by Bareiss fraction-free elimination: every intermediate entry is
    /// a minor of the input, so entry growth stays polynomial.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut prev = GaussRat::one();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != rank {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, rank * m.cols + j);
                }
            }
            let piv = m.get(rank, c).clone();
            for i in rank + 1..m.rows {
                let f = m.get(i, c).clone();
                for j in c + 1..m.cols {
                    let v = &(&(&piv * m.get(i, j)) - &(&f * m.get(rank, j))) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, c, GaussRat::zero());
            }
            prev = piv;
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotInvertible);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    /// Monic characteristic polynomial `det(λI − M)` as coefficients from
    /// `λ^n` down to the constant term, by the Faddeev–LeVerrier recursion
    /// (exact: the only divisions are by the integers `1..=n`).
    pub fn charpoly(&self) -> Result<Vec<GaussRat>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![GaussRat::one()];
        if n == 0 {
            return Ok(coeffs);
        }
        let id = Matrix::identity(n);
        let mut aux = Matrix::zeros(n, n);
        for k in 1..=n {
            let shifted = aux.add(&id.scale(&coeffs[k - 1]));
            aux = self.mul(&shifted);
            let c = -(&aux.trace() / &GaussRat::from_int(k as i64));
            coeffs.push(c);
        }
        Ok(coeffs)
    }

    /// `Σ N^k / k!` for nilpotent `N`; the inverse is `exp(−N)`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut term = Matrix::identity(n);
        let mut acc = term.clone();
        for k in 1..=n {
            term = term.mul(self).scale(&GaussRat::frac(1, k as i64));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term);
        }
        Err(Error::NotNilpotent)
    }

    /// Embeds the entries as constants over `vars`.
    pub fn to_poly(&self, vars: &VarSet) -> Matrix<MultiPoly> {
        self.map(|c| MultiPoly::constant(vars, c.clone()))
    }
}

impl Matrix<MultiPoly> {
    /// Specializes every entry at a point given in alphabet order.
    pub fn eval(&self, point: &[GaussRat]) -> Result<Matrix<GaussRat>> {
        let data = self.data.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn zeros_over(vars: &VarSet, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![MultiPoly::zero(vars); rows * cols] }
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}
