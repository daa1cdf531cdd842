//! Small dense and banded linear algebra: just enough for the Nystrom
//! determinant (dense LU with partial pivoting) and the collocation Newton
//! step (banded LU).

use alloc::vec;
use alloc::vec::Vec;

/// Determinant of a dense m x m matrix stored row-major, by in-place LU
/// with partial pivoting. Returns 0 for a numerically singular matrix.
pub(crate) fn lu_det(a: &mut [f64], m: usize) -> f64 {
    debug_assert_eq!(a.len(), m * m);
    let mut det = 1.0;
    for col in 0..m {
        // pivot search
        let mut piv = col;
        let mut best = a[col * m + col].abs();
        for row in (col + 1)..m {
            let v = a[row * m + col].abs();
            if v > best {
                best = v;
                piv = row;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != col {
            for k in 0..m {
                a.swap(col * m + k, piv * m + k);
            }
            det = -det;
        }
        let d = a[col * m + col];
        det *= d;
        for row in (col + 1)..m {
            let factor = a[row * m + col] / d;
            if factor == 0.0 {
                continue;
            }
            a[row * m + col] = 0.0;
            for k in (col + 1)..m {
                a[row * m + k] -= factor * a[col * m + k];
            }
        }
    }
    det
}

/// Banded matrix with `kl` subdiagonals and `ku` superdiagonals, with a
/// solver in the LAPACK band-storage style (extra `kl` rows absorb pivoting
/// fill).
pub(crate) struct Banded {
    n: usize,
    kl: usize,
    ku: usize,
    /// (2 kl + ku + 1) x n, entry (i, j) at [kl + ku + i - j][j]
    data: Vec<f64>,
}

impl Banded {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Banded {
        Banded {
            n,
            kl,
            ku,
            data: vec![0.0; (2 * kl + ku + 1) * n],
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let row = self.kl + self.ku + i - j;
        row * self.n + j
    }

    /// Set A[i][j]; requires j - ku <= i <= j + kl.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i + self.ku >= j && i <= j + self.kl);
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    /// Solve A x = b in place by banded LU with partial pivoting.
    /// Returns false if a zero pivot is met.
    pub fn solve(mut self, b: &mut [f64]) -> bool {
        let (n, kl, ku) = (self.n, self.kl, self.ku);
        debug_assert_eq!(b.len(), n);
        let width = 2 * kl + ku + 1;
        let at = |data: &Vec<f64>, i: usize, j: usize| data[(kl + ku + i - j) * n + j];
        let mut pivots = vec![0usize; n];

        for col in 0..n {
            // rows col..=col+kl are candidates
            let last = (col + kl).min(n - 1);
            let mut piv = col;
            let mut best = at(&self.data, col, col).abs();
            for row in (col + 1)..=last {
                let v = at(&self.data, row, col).abs();
                if v > best {
                    best = v;
                    piv = row;
                }
            }
            if best == 0.0 {
                return false;
            }
            pivots[col] = piv;
            if piv != col {
                // swap rows col and piv across their shared band columns
                let hi_col = (col + ku + kl).min(n - 1);
                for j in col..=hi_col {
                    let a_idx = (kl + ku + col).wrapping_sub(j).wrapping_mul(n).wrapping_add(j);
                    let b_idx = (kl + ku + piv).wrapping_sub(j).wrapping_mul(n).wrapping_add(j);
                    // bounds: both entries live inside the widened storage
                    debug_assert!(a_idx < width * n && b_idx < width * n);
                    self.data.swap(a_idx, b_idx);
                }
                b.swap(col, piv);
            }
            let d = at(&self.data, col, col);
            for row in (col + 1)..=last {
                let factor = at(&self.data, row, col) / d;
                if factor != 0.0 {
                    let hi_col = (col + ku + kl).min(n - 1);
                    for j in col..=hi_col {
                        let src = (kl + ku + col - j).wrapping_mul(n).wrapping_add(j);
                        let dst = (kl + ku + row - j).wrapping_mul(n).wrapping_add(j);
                        let v = self.data[src];
                        self.data[dst] -= factor * v;
                    }
                    b[row] -= factor * b[col];
                }
            }
        }
        // back substitution
        for col in (0..n).rev() {
            let hi_col = (col + ku + kl).min(n - 1);
            let mut s = b[col];
            for j in (col + 1)..=hi_col {
                s -= at(&self.data, col, j) * b[j];
            }
            b[col] = s / at(&self.data, col, col);
        }
        true
    }
}
