//! Dense square matrices over unbounded integers, with the exact linear
//! algebra the rest of the crate relies on: characteristic polynomials via
//! Faddeev–LeVerrier (every interior division is provably exact), powers by
//! repeated squaring, and rational kernel/solve routines for marks vectors
//! and coweight expansions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalgebra::IntPolynomial;

/// A square matrix with `BigInt` entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// Zero matrix of dimension `n`.
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Build from rows of machine integers. Panics if the rows are not
    /// square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            data.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { n, data }
    }

    /// Dimension of the (square) matrix.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry accessor.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    /// Entry mutator.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = &self.data[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += aik * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix difference `self - rhs`.
    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix { n: self.n, data }
    }

    /// Entrywise negation.
    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// Transpose.
    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    /// `self^e` by repeated squaring (`e = 0` gives the identity).
    pub fn pow(&self, e: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Trace.
    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| &self.data[i * n + j] * &v[j]).sum())
            .collect()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Characteristic polynomial `det(x I - self)`, monic, computed by the
    /// Faddeev–LeVerrier recurrence. The division by the step index is exact
    /// over the integers, so the whole computation stays in `BigInt`.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        // Coefficients c[n] x^n + ... + c[0], with c[n] = 1.
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        if n == 0 {
            return IntPolynomial::from_coeffs(coeffs);
        }
        let mut m = IntMatrix::identity(n); // M_1 = I
        let mut c = -self.trace(); // c_{n-1}
        coeffs[n - 1] = c.clone();
        for k in 2..=n {
            // M_k = A * M_{k-1} + c_{n-k+1} I
            let mut am = self.mul(&m);
            for i in 0..n {
                am.data[i * n + i] += &c;
            }
            m = am;
            // c_{n-k} = -tr(A * M_k) / k
            let t = self.mul(&m).trace();
            let (q, r) = num_integer::Integer::div_rem(&(-t), &BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            c = q;
            coeffs[n - k] = c.clone();
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact determinant, read off the characteristic polynomial.
    pub fn det(&self) -> BigInt {
        let p = self.charpoly();
        let c0 = p.coeff(0);
        if self.n % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Principal submatrix obtained by deleting row and column `k`.
    pub fn delete_row_col(&self, k: usize) -> IntMatrix {
        let n = self.n;
        assert!(k < n);
        let mut out = IntMatrix::zero(n - 1);
        let mut r = 0;
        for i in 0..n {
            if i == k {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == k {
                    continue;
                }
                out.data[r * (n - 1) + c] = self.data[i * n + j].clone();
                c += 1;
            }
            r += 1;
        }
        out
    }

    /// Solve `self * u = b` exactly over the rationals by Gaussian
    /// elimination. Returns `Error::SingularMatrix` if no unique solution
    /// exists.
    pub fn solve(&self, b: &[BigInt]) -> Result<Vec<BigRational>> {
        let n = self.n;
        assert_eq!(b.len(), n, "dimension mismatch");
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|j| BigRational::from(self.data[i * n + j].clone()))
                    .collect();
                row.push(BigRational::from(b[i].clone()));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for j in col..=n {
                aug[col][j] = &aug[col][j] * &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for j in col..=n {
                        let sub = &factor * &aug[col][j];
                        aug[r][j] = &aug[r][j] - &sub;
                    }
                }
            }
        }
        Ok(aug.into_iter().map(|row| row[n].clone()).collect())
    }

    /// One-dimensional right kernel of the matrix, scaled to a primitive
    /// integer vector (entries coprime). Returns `Error::KernelDimension` if
    /// the kernel dimension differs from one.
    pub fn kernel_vector(&self) -> Result<Vec<BigInt>> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from(self.data[i * n + j].clone()))
                    .collect()
            })
            .collect();
        // Row echelon with column pivots recorded.
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) {
                a.swap(row, p);
                let inv = a[row][col].recip();
                for j in col..n {
                    a[row][j] = &a[row][j] * &inv;
                }
                for r in 0..n {
                    if r != row && !a[r][col].is_zero() {
                        let factor = a[r][col].clone();
                        for j in col..n {
                            let sub = &factor * &a[row][j];
                            a[r][j] = &a[r][j] - &sub;
                        }
                    }
                }
                pivot_cols.push(col);
                row += 1;
            }
        }
        let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        if free_cols.len() != 1 {
            return Err(Error::KernelDimension);
        }
        let free = free_cols[0];
        // Back-substitute with the free variable set to 1.
        let mut x = vec![BigRational::zero(); n];
        x[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            // Row r reads: x[pc] + sum_{c > pc, c free-ish} a[r][c] x[c] = 0.
            let mut acc = BigRational::zero();
            for c in (pc + 1)..n {
                if !a[r][c].is_zero() {
                    acc += &a[r][c] * &x[c];
                }
            }
            x[pc] = -acc;
        }
        // Clear denominators and divide by the content.
        let mut lcm = BigInt::one();
        for xi in &x {
            lcm = num_integer::lcm(lcm, xi.denom().clone());
        }
        let mut ints: Vec<BigInt> = x.iter().map(|xi| (xi * BigRational::from(lcm.clone())).to_integer()).collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = num_integer::gcd(gcd, v.clone());
        }
        if !gcd.is_zero() && !gcd.is_one() {
            for v in &mut ints {
                *v /= &gcd;
            }
        }
        // Normalize sign so the first nonzero entry is positive.
        if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                for v in &mut ints {
                    *v = -v.clone();
                }
            }
        }
        Ok(ints)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_zero_matrix() {
        // 3x3 zero matrix -> x^3
        let m = IntMatrix::zero(3);
        assert_eq!(m.charpoly(), IntPolynomial::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn charpoly_companion_2x2() {
        // [[0, -c0], [1, -c1]] has charpoly x^2 + c1 x + c0.
        let m = IntMatrix::from_rows(&[vec![0, -6], vec![1, -5]]);
        assert_eq!(m.charpoly(), IntPolynomial::from_i64(&[6, 5, 1]));
    }

    #[test]
    fn charpoly_diagonal() {
        let m = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(m.charpoly(), IntPolynomial::from_i64(&[-6, 11, -6, 1]));
        assert_eq!(m.det(), BigInt::from(6));
    }

    #[test]
    fn pow_matches_iterated_mul() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        let mut acc = IntMatrix::identity(2);
        for e in 0..8u64 {
            assert_eq!(m.pow(e), acc);
            acc = acc.mul(&m);
        }
    }

    #[test]
    fn solve_2x2() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 3]]);
        let b = vec![BigInt::from(5), BigInt::from(10)];
        let x = m.solve(&b).unwrap();
        assert_eq!(x[0], BigRational::new(BigInt::from(1), BigInt::from(1)));
        assert_eq!(x[1], BigRational::new(BigInt::from(3), BigInt::from(1)));
    }

    #[test]
    fn solve_singular_detected()
    {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        let b = vec![BigInt::from(1), BigInt::from(2)];
        assert_eq!(m.solve(&b), Err(Error::SingularMatrix));
    }

    #[test]
    fn kernel_of_rank_deficient() {
        // Rows sum to zero, kernel spanned by (1,1,1).
        let m = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let k = m.kernel_vector().unwrap();
        assert_eq!(k, vec![BigInt::one(), BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn kernel_dimension_error_on_full_rank() {
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(m.kernel_vector(), Err(Error::KernelDimension));
    }
}
