//! Small exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Rational>>`. Everything here is dense and
//! meant for the modest sizes that show up in root systems and weight spaces.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= f * s;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut work = m.clone();
    rref(&mut work, ncols).len()
}

/// One solution of `a·x = b`, free variables set to zero. `None` if the
/// system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][ncols];
    }
    Some(x)
}

/// A basis of `{x : a·x = 0}`.
pub fn nullspace(a: &Matrix, ncols: usize) -> Vec<Vec<Rational>> {
    let mut work = a.clone();
    let pivots = rref(&mut work, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::from_integer(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[row][f];
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// Sylvester inertia of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn is_psd(&self) -> bool {
        self.negative == 0
    }

    pub fn add(&mut self, other: Inertia) {
        self.positive += other.positive;
        self.zero += other.zero;
        self.negative += other.negative;
    }
}

/// Inertia by symmetric Gaussian elimination (congruence transforms only).
///
/// When every remaining diagonal entry vanishes but some off-diagonal `a_ij`
/// does not, row and column `j` are added to `i`, which puts `2·a_ij` on the
/// diagonal. Each step is exact so no tolerance is involved.
pub fn inertia(m: &Matrix) -> Inertia {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "inertia needs a square matrix"
    );
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();
    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| {
                (
                    a[i][i].denom().unsigned_abs(),
                    a[i][i].numer().unsigned_abs(),
                )
            });
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = pair else {
                    out.zero += active.len();
                    break;
                };
                for k in 0..n {
                    let v = a[j][k];
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j];
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[p][p];
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = a[i][p] / d;
            for &k in &active {
                let v = a[p][k];
                a[i][k] -= f * v;
            }
        }
        for &i in &active {
            a[i][p] = Rational::zero();
            a[p][i] = Rational::zero();
        }
    }
    out
}
