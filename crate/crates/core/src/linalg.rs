//! Small dense symmetric-matrix kernels.
//!
//! Frame computations only ever need eigendecompositions of the real
//! symmetric frame operator, whose Walnut form splits into independent
//! blocks of size `L/M`. Those blocks are tiny at desk scale, so a cyclic
//! Jacobi sweep is plenty; no external linear algebra backend is pulled in.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    /// Maximum absolute asymmetry `|A - Aᵀ|`.
    pub fn asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in 0..i {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

/// Eigendecomposition `A = Q diag(λ) Qᵀ` of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    /// Eigenvalues, ascending.
    pub eigenvalues: Vec<T>,
    /// Orthogonal matrix whose column `k` is the eigenvector of `eigenvalues[k]`.
    pub vectors: SquareMatrix<T>,
}

impl<T: Scalar> SymmetricEigen<T> {
    /// Cyclic Jacobi iteration. `a` must be symmetric; asymmetry beyond
    /// roundoff is rejected rather than silently symmetrized.
    pub fn new(a: &SquareMatrix<T>) -> Result<Self> {
        let n = a.dim();
        let scale = a.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()));
        if a.asymmetry() > T::c(1e-9) * scale.max(T::one()) {
            return Err(Error::invalid_param("matrix", "not symmetric"));
        }
        let mut m = a.clone();
        let mut q = SquareMatrix::identity(n);

        let off = |m: &SquareMatrix<T>| -> T {
            let mut s = T::zero();
            for i in 0..n {
                for j in 0..i {
                    s += m[(i, j)] * m[(i, j)];
                }
            }
            s.sqrt()
        };

        let tol = T::epsilon() * T::from_len(n.max(1)) * scale.max(T::one());
        for _sweep in 0..60 {
            if off(&m) <= tol {
                break;
            }
            for p in 0..n {
                for r in p + 1..n {
                    let apq = m[(p, r)];
                    if apq.abs() <= T::epsilon() * scale {
                        continue;
                    }
                    // Jacobi rotation annihilating m[p][r].
                    let theta = (m[(r, r)] - m[(p, p)]) / (T::c(2.0) * apq);
                    let t = {
                        let sign = if theta >= T::zero() { T::one() } else { -T::one() };
                        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                    };
                    let c = T::one() / (t * t + T::one()).sqrt();
                    let s = t * c;

                    for k in 0..n {
                        let mkp = m[(k, p)];
                        let mkr = m[(k, r)];
                        m[(k, p)] = c * mkp - s * mkr;
                        m[(k, r)] = s * mkp + c * mkr;
                    }
                    for k in 0..n {
                        let mpk = m[(p, k)];
                        let mrk = m[(r, k)];
                        m[(p, k)] = c * mpk - s * mrk;
                        m[(r, k)] = s * mpk + c * mrk;
                    }
                    for k in 0..n {
                        let qkp = q[(k, p)];
                        let qkr = q[(k, r)];
                        q[(k, p)] = c * qkp - s * qkr;
                        q[(k, r)] = s * qkp + c * qkr;
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        let diag: Vec<T> = (0..n).map(|i| m[(i, i)]).collect();
        order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

        let eigenvalues: Vec<T> = order.iter().map(|&i| diag[i]).collect();
        let mut vectors = SquareMatrix::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for k in 0..n {
                vectors[(k, new_col)] = q[(k, old_col)];
            }
        }
        Ok(Self { eigenvalues, vectors })
    }

    /// Applies `f` to every eigenvalue and returns `Q f(Λ) Qᵀ v`.
    pub fn apply_spectral(&self, v: &[T], f: impl Fn(T) -> T) -> Vec<T> {
        let n = self.vectors.dim();
        assert_eq!(v.len(), n);
        // w = Qᵀ v
        let mut w = vec![T::zero(); n];
        for k in 0..n {
            w[k] = (0..n).map(|i| self.vectors[(i, k)] * v[i]).sum();
        }
        for k in 0..n {
            w[k] *= f(self.eigenvalues[k]);
        }
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            out[i] = (0..n).map(|k| self.vectors[(i, k)] * w[k]).sum();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[f64]]) -> SquareMatrix<f64> {
        let n = rows.len();
        let mut m = SquareMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    #[test]
    fn eigen_of_diagonal() {
        let m = from_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        let e = SymmetricEigen::new(&m).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigen_known_2x2() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let m = from_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let e = SymmetricEigen::new(&m).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn reconstructs_matrix_action() {
        // Pseudo-random symmetric 7x7, checked against direct multiplication.
        let n = 7;
        let mut m = SquareMatrix::zeros(n);
        let mut state = 1u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f64) / (1u64 << 31) as f64 - 1.0
        };
        for i in 0..n {
            for j in 0..=i {
                let x = next();
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        let v: Vec<f64> = (0..n).map(|_| next()).collect();
        let e = SymmetricEigen::new(&m).unwrap();
        let via_eig = e.apply_spectral(&v, |x| x);
        let direct = m.mul_vec(&v);
        for (a, b) in via_eig.iter().zip(&direct) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn spectral_inverse_square_root() {
        let m = from_rows(&[&[4.0, 0.0], &[0.0, 9.0]]);
        let e = SymmetricEigen::new(&m).unwrap();
        let out = e.apply_spectral(&[1.0, 1.0], |x| x.powf(-0.5));
        assert!((out[0] - 0.5).abs() < 1e-14);
        assert!((out[1] - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = from_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert!(SymmetricEigen::new(&m).is_err());
    }
}
