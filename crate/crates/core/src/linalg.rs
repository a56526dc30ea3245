//! Exact Gauss-Jordan elimination on small dense rational matrices.

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn pivot_row(a: &Matrix, col: usize, from: usize) -> Option<usize> {
    (from..a.len()).find(|&r| !a[r][col].is_zero())
}

pub fn determinant(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = pivot_row(&m, col, col) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let p = pivot_row(&m, col, col)?;
        m.swap(p, col);
        inv.swap(p, col);
        let scale = m[col][col].recip()?;
        for c in 0..n {
            m[col][c] *= &scale;
            inv[col][c] *= &scale;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..n {
                let dm = &factor * &m[col][c];
                m[r][c] -= dm;
                let di = &factor * &inv[col][c];
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let p = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..k).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}
