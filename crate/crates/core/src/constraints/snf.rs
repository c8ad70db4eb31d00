//! Integer matrices, Smith normal form, and the cyclic kernel identity.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimensions must be positive".to_string(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {}x{} matrix, found {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    /// Square matrix from a list of rows.
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".to_string()));
        }
        Self::new(r, c, rows.iter().flatten().cloned().collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, alloc::vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zero(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        Ok(m)
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.cols)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(
                "matrix shapes do not match".to_string(),
            ));
        }
        let mut out = Self::zero(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.at(i, j) += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::InvalidArgument(
                "power of a non-square matrix".to_string(),
            ));
        }
        let mut out = Self::identity(self.rows)?;
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `I − self`
    pub fn identity_minus(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::InvalidArgument(
                "identity minus a non-square matrix".to_string(),
            ));
        }
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = -core::mem::take(e);
        }
        for i in 0..self.rows {
            *out.at(i, i) += 1;
        }
        Ok(out)
    }

    /// Block matrix of `k × k` blocks sending `(v₁, …, v_k)` to
    /// `(τ v_k, τ v₁, …, τ v_{k−1})`.
    pub fn block_cyclic(tau: &Self, k: usize) -> Result<Self> {
        if !tau.is_square() || k == 0 {
            return Err(Error::InvalidArgument(
                "block_cyclic needs square tau and k >= 1".to_string(),
            ));
        }
        let m = tau.rows;
        let mut out = Self::zero(k * m, k * m)?;
        for bi in 0..k {
            let bj = (bi + k - 1) % k;
            for i in 0..m {
                for j in 0..m {
                    *out.at(bi * m + i, bj * m + j) = tau.get(i, j).clone();
                }
            }
        }
        Ok(out)
    }

    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            // smallest nonzero entry of the trailing block becomes the pivot
            let Some((pi, pj)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a.get(i, j).is_zero())
                .min_by(|&(i, j), &(k, l)| a.get(i, j).abs().cmp(&a.get(k, l).abs()))
            else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &-q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &-q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad_row = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(a.get(t, t))));
            if let Some(i) = bad_row {
                a.add_row_multiple(t, i, &BigInt::one());
                continue;
            }
            t += 1;
        }
        (0..rows.min(cols))
            .map(|i| a.get(i, i).abs())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Rank of the kernel of the map `ℤ^cols → ℤ^rows`.
    pub fn kernel_rank(&self) -> usize {
        self.cols - self.rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += c·row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        for j in 0..self.cols {
            let delta = c * self.get(source, j);
            *self.at(target, j) += delta;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        for i in 0..self.rows {
            let delta = c * self.get(i, source);
            *self.at(i, target) += delta;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", e)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `rank ker(I − λ)` for the block-cyclic `λ` built from `τ`, checked against
/// `rank ker(I − τ^k)`.
pub fn cyclic_kernel_rank(tau: &IntMatrix, k: u64) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".to_string()));
    }
    let blocks = usize::try_from(k).map_err(|_| Error::Overflow("k too large".to_string()))?;
    let lambda = IntMatrix::block_cyclic(tau, blocks)?;
    let via_lambda = lambda.identity_minus()?.kernel_rank();
    let via_power = tau.pow(k)?.identity_minus()?.kernel_rank();
    if via_lambda != via_power {
        return Err(Error::InvariantViolation(format!(
            "rank ker(I - lambda) = {} but rank ker(I - tau^{}) = {}",
            via_lambda, k, via_power
        )));
    }
    Ok(via_lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, e).unwrap()
    }

    #[test]
    fn smith_forms() {
        let a = m(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
        assert_eq!(a.invariant_factors(), [2, 6, 12].map(BigInt::from));
        let b = m(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(b.rank(), 1);
        assert_eq!(b.kernel_rank(), 2);
        assert_eq!(m(2, 2, &[0, 0, 0, 0]).rank(), 0);
        assert_eq!(
            m(2, 2, &[2, 0, 0, 3]).invariant_factors(),
            [1, 6].map(BigInt::from)
        );
    }

    #[test]
    fn cyclic_kernels() {
        let id = IntMatrix::identity(2).unwrap();
        assert_eq!(cyclic_kernel_rank(&id, 3).unwrap(), 2);
        let swap = m(2, 2, &[0, 1, 1, 0]);
        assert_eq!(cyclic_kernel_rank(&swap, 1).unwrap(), 1);
        assert_eq!(cyclic_kernel_rank(&swap, 2).unwrap(), 2);
        let minus = m(1, 1, &[-1]);
        assert_eq!(cyclic_kernel_rank(&minus, 1).unwrap(), 0);
        assert_eq!(cyclic_kernel_rank(&minus, 2).unwrap(), 1);
    }

    #[test]
    fn block_layout() {
        let tau = m(1, 1, &[5]);
        let l = IntMatrix::block_cyclic(&tau, 3).unwrap();
        assert_eq!(l, m(3, 3, &[0, 0, 5, 5, 0, 0, 0, 5, 0]));
    }

    #[test]
    fn shape_errors() {
        assert!(IntMatrix::from_i64(0, 1, &[]).is_err());
        assert!(IntMatrix::from_i64(2, 2, &[1, 2, 3]).is_err());
        assert!(m(2, 3, &[0; 6]).pow(2).is_err());
    }
}
