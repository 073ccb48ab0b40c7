use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::ComplexMatrix;
use crate::Complex;

/// Row-major real matrix for operators written in a basis of `g`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: f64) {
        self.data[r * self.cols + c] = x;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in row.iter_mut().zip(src) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Sets entries below `tol` relative to the largest entry to zero, so
    /// that the sparsity pattern survives rounding.
    pub fn prune(&mut self, tol: f64) {
        let cut = tol * self.max_abs().max(1.0);
        for x in &mut self.data {
            if x.abs() < cut {
                *x = 0.0;
            }
        }
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        assert_eq!(self.rows, self.cols, "square");
        ComplexMatrix::from_fn(self.rows, |r, c| Complex::new(self.get(r, c), 0.0))
    }

    /// `self · v`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).filter(|(x, _)| **x != 0.0).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    num_traits::Float::sqrt(dot(a, a))
}

/// Distance of `v` from the span of orthonormal `q`.
pub(crate) fn residual(v: &[f64], q: &[Vec<f64>]) -> f64 {
    let mut r = v.to_vec();
    for u in q {
        let c = dot(u, &r);
        if c != 0.0 {
            for (x, y) in r.iter_mut().zip(u) {
                *x -= c * y;
            }
        }
    }
    norm(&r)
}
