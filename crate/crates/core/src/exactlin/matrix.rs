use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::ring::{Field, Frac, Pid, RingOps};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from rows; all rows must share `cols` entries.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }
}

impl<T: RingOps> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(d: &[T]) -> Self {
        Matrix::from_fn(d.len(), d.len(), |i, j| {
            if i == j {
                d[i].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingOps::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(T::zero(), |acc, (i, x)| {
                        acc + x.clone() * self[(i, j)].clone()
                    })
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| {
                    acc + self[(i, j)].clone() * v[j].clone()
                })
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self[(i / rhs.rows, j / rhs.cols)].clone() * rhs[(i % rhs.rows, j % rhs.cols)].clone()
        })
    }

    /// Coefficients of `det(xI - self)`, constant term first.
    ///
    /// Berkowitz's division-free recursion, so it is valid over any
    /// commutative ring and in every characteristic.
    pub fn charpoly(&self) -> Vec<T> {
        assert_eq!(
            self.rows, self.cols,
            "characteristic polynomial of a non-square matrix"
        );
        // v holds the coefficients of the leading principal minor, highest first
        let mut v = vec![T::one()];
        for r in 0..self.rows {
            let mut t = Vec::with_capacity(r + 2);
            t.push(T::one());
            t.push(-self[(r, r)].clone());
            // column above the diagonal entry, repeatedly multiplied by the minor
            let mut col: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for _ in 0..r {
                let dot = (0..r).fold(T::zero(), |acc, j| {
                    acc + self[(r, j)].clone() * col[j].clone()
                });
                t.push(-dot);
                col = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| {
                            acc + self[(i, j)].clone() * col[j].clone()
                        })
                    })
                    .collect();
            }
            let next: Vec<T> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r))
                        .filter(|&j| i - j < t.len())
                        .fold(T::zero(), |acc, j| acc + t[i - j].clone() * v[j].clone())
                })
                .collect();
            v = next;
        }
        v.reverse();
        v
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, piv);
            let s = m[(r, c)].inv();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * s.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by Gaussian elimination; panics on non-square input.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(piv) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if piv != c {
                m.swap_rows(c, piv);
                det = -det;
            }
            let p = m[(c, c)].clone();
            det = det * p.clone();
            let pinv = p.inv();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * pinv.clone();
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Basis (as rows) of the left kernel `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().right_kernel()
    }

    /// Basis (as rows) of the right kernel `{x : self * x = 0}`.
    pub fn right_kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows: Vec<Vec<F>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(k, f)].clone();
                }
                v
            })
            .collect();
        Matrix::from_rows(rows, self.cols).expect("uniform rows")
    }

    /// Solve `x * self = v` for a row vector `x`, if solvable.
    pub fn solve_left(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.cols);
        // x * A = v  <=>  A^T x^T = v^T
        let at = self.transpose();
        let aug = Matrix::from_fn(at.rows, at.cols + 1, |i, j| {
            if j < at.cols {
                at[(i, j)].clone()
            } else {
                v[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&at.cols) {
            return None;
        }
        let mut x = vec![F::zero(); at.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(k, at.cols)].clone();
        }
        Some(x)
    }

    /// Basis rows of the row space (echelon form).
    pub fn row_space(&self) -> Self {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }
}

impl<R: Pid> Matrix<Frac<R>> {
    /// Least common denominator of all entries (normalized).
    pub fn common_denominator(&self) -> R {
        self.data
            .iter()
            .fold(R::one(), |l, x| crate::ring::lcm(&l, x.den()))
    }

    /// Entries as ground-ring elements, if all integral.
    pub fn to_ring(&self) -> Option<Matrix<R>> {
        let data: Option<Vec<R>> = self.data.iter().map(Frac::to_ring).collect();
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: data?,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Frac::is_integral)
    }
}

impl<R: Pid> Matrix<R> {
    pub fn to_frac(&self) -> Matrix<Frac<R>> {
        self.map(|x| Frac::from_ring(x.clone()))
    }

    /// Determinant over `R` (computed in the fraction field).
    pub fn det_ring(&self) -> R {
        self.to_frac()
            .det()
            .to_ring()
            .expect("determinant of a ring matrix lies in the ring")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let n = rows[0].len();
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect())
                .collect(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn det_inverse_kernel() {
        let a = q(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.det(), Rational::from_i64(1));
        assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
        let s = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(s.rank(), 1);
        let k = s.right_kernel();
        assert_eq!(k.nrows(), 2);
        assert!(s.mul(&k.transpose()).is_zero());
        let lk = s.left_kernel();
        assert_eq!(lk.nrows(), 1);
        assert!(lk.mul(&s).is_zero());
    }

    #[test]
    fn solve_left_consistent() {
        let a = q(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = a.solve_left(&[
            Rational::from_i64(2),
            Rational::from_i64(3),
            Rational::from_i64(5),
        ]);
        assert_eq!(x, Some(vec![Rational::from_i64(2), Rational::from_i64(3)]));
        assert!(a
            .solve_left(&[
                Rational::from_i64(1),
                Rational::from_i64(1),
                Rational::from_i64(0)
            ])
            .is_none());
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let a = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        // det(xI - a) = x^3 - 9x^2 + 24x - 18, expanded by hand
        let expect: Vec<Rational> = [-18, 24, -9, 1]
            .iter()
            .map(|&c| Rational::from_i64(c))
            .collect();
        assert_eq!(a.charpoly(), expect);
        let b = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            b.charpoly(),
            vec![
                Rational::from_i64(-1),
                Rational::from_i64(0),
                Rational::from_i64(1)
            ]
        );
        // the constant term is (-1)^n det
        let c = q(&[&[1, 2, 0, 1], &[0, 1, 3, 2], &[5, 0, 1, 1], &[2, 2, 0, 3]]);
        assert_eq!(c.charpoly()[0], c.det());
    }
}
