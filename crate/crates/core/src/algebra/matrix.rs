use num_traits::{One, Zero};
use serde_json::Value;

use super::{Coefficient, Exponent, Laurent};

/// Square matrix over a Laurent-polynomial ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: Vec<Vec<R>>,
}

impl<K: Exponent, C: Coefficient> Matrix<Laurent<K, C>> {
    pub fn zeros(n: usize) -> Self {
        Matrix { rows: vec![vec![Laurent::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = Laurent::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent<K, C> {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Laurent<K, C>) {
        self.rows[i][j] = v;
    }

    pub fn diagonal(&self) -> Vec<Laurent<K, C>> {
        (0..self.size()).map(|i| self.rows[i][i].clone()).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.rows[i][j].is_zero()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.rows[k][j].is_zero() {
                        out.rows[i][j] += &self.rows[i][k] * &other.rows[k][j];
                    }
                }
            }
        }
        out
    }

    /// Exact inverse of an upper triangular matrix with unit diagonal, by
    /// back-substitution. `None` otherwise.
    pub fn upper_inverse(&self) -> Option<Self> {
        if !self.is_upper_triangular() {
            return None;
        }
        let n = self.size();
        let inv_diag: Option<Vec<Laurent<K, C>>> = self.diagonal().iter().map(Laurent::inverse).collect();
        let inv_diag = inv_diag?;
        let mut out = Self::zeros(n);
        for j in 0..n {
            out.rows[j][j] = inv_diag[j].clone();
            for i in (0..j).rev() {
                let mut s = Laurent::zero();
                for k in i + 1..=j {
                    if !self.rows[i][k].is_zero() && !out.rows[k][j].is_zero() {
                        s += &self.rows[i][k] * &out.rows[k][j];
                    }
                }
                out.rows[i][j] = -(&s * &inv_diag[i]);
            }
        }
        Some(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|r| Value::Array(r.iter().map(Laurent::to_json).collect())).collect())
    }
}

