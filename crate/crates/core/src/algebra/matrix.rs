use std::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Commutative ring operations needed by the determinant routines.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient, failing when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Result<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Result<Self> {
        if Zero::is_zero(o) {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        Ok(self / o)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Result<Self> {
        LaurentPoly::div_exact(self, o)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
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

    /// Build from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
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

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{}x{} matrix is not square", self.rows, self.cols)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix sum of different shapes".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix difference of different shapes".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j))))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        }))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Determinant by fraction-free Bareiss elimination. Every division is
    /// exact in an integral domain, so this works over the Laurent ring.
    pub fn det(&self) -> Result<T> {
        self.ensure_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m.get(i, j).mul(m.get(k, k)).sub(&m.get(i, k).mul(m.get(k, j)));
                    m.set(i, j, v.div_exact(&prev)?);
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign { d.neg() } else { d })
    }

    /// Determinant by Laplace expansion along the first row. Exponential
    /// cost; intended for small matrices and as an independent check.
    pub fn det_cofactor(&self) -> Result<T> {
        self.ensure_square()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_rec(0, &idx))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> T {
        if cols.is_empty() {
            return T::one();
        }
        let mut acc = T::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.cofactor_rec(row + 1, &rest));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

/// Result of reducing a rational matrix to reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix<Rational>,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl Matrix<Rational> {
    /// Reduced row echelon form with pivots chosen left to right.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !Zero::is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || Zero::is_zero(m.get(i, c)) {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![<Rational as Zero>::zero(); self.cols];
                v[f] = <Rational as One>::one();
                for (row, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.matrix.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Solve `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.ensure_square()?;
        if b.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { b[i].clone() }
        });
        let e = aug.rref();
        if e.pivots.len() != self.rows || e.pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::Consistency("singular linear system".into()));
        }
        Ok((0..self.rows).map(|i| e.matrix.get(i, self.cols).clone()).collect())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rational_determinants_agree() {
        let m = qm(&[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, 1, 1], &[3, 3, -1, 0]]);
        assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
        let singular = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det().unwrap(), rat(0));
        assert_eq!(Matrix::<Rational>::zeros(0, 0).det().unwrap(), rat(1));
        assert!(qm(&[&[1, 2]]).det().is_err());
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        let m = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det().unwrap(), rat(-1));
    }

    #[test]
    fn laurent_determinant() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let m = Matrix::from_rows(vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]]).unwrap();
        assert_eq!(m.det().unwrap(), &(&t * &t) - &one);
        assert_eq!(m.det_cofactor().unwrap(), m.det().unwrap());
    }

    #[test]
    fn rref_nullspace_solve() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for i in 0..3 {
            let dot = (0..3).fold(rat(0), |a, j| a + m.get(i, j) * &ns[0][j]);
            assert_eq!(dot, rat(0));
        }
        let a = qm(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.solve(&[rat(1), rat(2)]).unwrap(), vec![ratio(1, 5), ratio(3, 5)]);
    }
}
