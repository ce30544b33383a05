//! Dense exact linear algebra over `Q(zeta_n)` and over prime fields.
//!
//! Everything here is plain Gaussian elimination; matrices at desk scale are
//! small and the point is exactness, not asymptotics. [`CMat`] skips zero
//! entries in inner loops since most matrices in this crate are generalized
//! permutation matrices.

use crate::cyclo::{Cyclotomic, PrimeField, Rational};

/// Dense matrix over `Q(zeta_n)`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    conductor: u32,
    data: Vec<Cyclotomic>,
}

impl CMat {
    pub fn zeros(conductor: u32, rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            conductor,
            data: vec![Cyclotomic::zero(conductor); rows * cols],
        }
    }

    pub fn identity(conductor: u32, n: usize) -> Self {
        let mut m = Self::zeros(conductor, n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one(conductor);
        }
        m
    }

    pub fn from_fn(
        conductor: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Cyclotomic,
    ) -> Self {
        let mut m = Self::zeros(conductor, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = CMat::zeros(self.conductor, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out[(i, j)] = &out[(i, j)] + &t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> CMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.conductor, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn trace(&self) -> Cyclotomic {
        assert!(self.is_square());
        let mut t = Cyclotomic::zero(self.conductor);
        for i in 0..self.rows {
            t = &t + &self[(i, i)];
        }
        t
    }

    /// Kronecker product; row/col index `(i1, i2) -> i1 * other.rows + i2`.
    pub fn kron(&self, other: &CMat) -> CMat {
        let mut out = CMat::zeros(
            self.conductor,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = &other[(i2, j2)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Cyclotomic::zero(self.conductor); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot_row = (r..self.rows).find(|&i| !self[(i, c)].is_zero());
            let Some(p) = pivot_row else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = &f * &self[(r, j)];
                        self[(i, j)] = &self[(i, j)] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Cyclotomic>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Cyclotomic::zero(self.conductor); self.cols];
            v[f] = Cyclotomic::one(self.conductor);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[(r, f)];
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<CMat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = CMat::zeros(self.conductor, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclotomic::one(self.conductor);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(CMat::from_fn(self.conductor, n, n, |i, j| {
            aug[(i, n + j)].clone()
        }))
    }

    /// Solve `self * x = b` for one solution, if consistent.
    pub fn solve(&self, b: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        assert_eq!(self.rows, b.len());
        let mut aug = CMat::zeros(self.conductor, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Cyclotomic::zero(self.conductor); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Stack rows of several matrices with equal column counts.
    pub fn vstack(parts: &[&CMat]) -> CMat {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let conductor = parts[0].conductor;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = CMat::zeros(conductor, rows, cols);
        let mut r = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            for i in 0..m.rows {
                for j in 0..cols {
                    out[(r, j)] = m[(i, j)].clone();
                }
                r += 1;
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Columns of the matrix as vectors.
    pub fn columns(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].clone()).collect())
            .collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(conductor: u32, cols: &[Vec<Cyclotomic>]) -> CMat {
        assert!(!cols.is_empty());
        let rows = cols[0].len();
        CMat::from_fn(conductor, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn scale_rational(&self, r: &Rational) -> CMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.scale(r);
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for CMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "CMat {}x{} (conductor {}):",
            self.rows, self.cols, self.conductor
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix over `F_p`, for the finite-field character method.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    pub field: PrimeField,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMat {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j) % field.p;
            }
        }
        m
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut out = FpMat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if b != 0 {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
            }
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in c..self.cols {
                        let t = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let f = self.field;
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(m[(r, fc)]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self[(i, j)], v[j]));
            }
            out[i] = acc;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u32, v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n, v)
    }

    #[test]
    fn rref_rank_kernel() {
        let n = 4;
        let mut m = CMat::zeros(n, 2, 3);
        m[(0, 0)] = c(n, 1);
        m[(0, 1)] = c(n, 2);
        m[(0, 2)] = c(n, 3);
        m[(1, 0)] = c(n, 2);
        m[(1, 1)] = c(n, 4);
        m[(1, 2)] = c(n, 6);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let n = 4;
        let i = Cyclotomic::root_of_unity(4, 1);
        let mut m = CMat::zeros(n, 2, 2);
        m[(0, 0)] = i.clone();
        m[(0, 1)] = c(n, 1);
        m[(1, 1)] = c(n, 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), CMat::identity(n, 2));
        assert_eq!(inv.mul(&m), CMat::identity(n, 2));
        let singular = CMat::zeros(n, 2, 2);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kron_and_trace() {
        let n = 1;
        let mut a = CMat::zeros(n, 2, 2);
        a[(0, 0)] = c(n, 1);
        a[(1, 1)] = c(n, 2);
        let b = CMat::identity(n, 3);
        let k = a.kron(&b);
        assert_eq!(k.rows, 6);
        assert_eq!(k.trace().as_i64(), Some(9));
        assert_eq!(a.trace().as_i64(), Some(3));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let n = 1;
        let mut m = CMat::zeros(n, 2, 2);
        m[(0, 0)] = c(n, 1);
        m[(1, 0)] = c(n, 1);
        let b_ok = vec![c(n, 5), c(n, 5)];
        let x = m.solve(&b_ok).unwrap();
        assert_eq!(x[0].as_i64(), Some(5));
        let b_bad = vec![c(n, 5), c(n, 6)];
        assert!(m.solve(&b_bad).is_none());
    }

    #[test]
    fn fp_matrices() {
        let f = PrimeField::new(13);
        let mut m = FpMat::zeros(f, 2, 2);
        m[(0, 0)] = 2;
        m[(0, 1)] = 1;
        m[(1, 0)] = 4;
        m[(1, 1)] = 2;
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).iter().all(|&x| x == 0));
    }
}
