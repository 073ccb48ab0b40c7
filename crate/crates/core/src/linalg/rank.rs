//! Ranks and orthonormal bases of sets of matrices viewed as real vectors.
//!
//! Matrices are flattened to real coordinates `(Re, Im)` of their entries;
//! on anti-Hermitian matrices the Euclidean product of these coordinates is
//! the invariant inner product `-Re tr(XY)`. Vectors with disjoint supports
//! span independent coordinate blocks, so both routines first split the
//! input into support-connected groups and work on each group separately.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // math functions when std is not linked
use num_traits::Float;

use super::partition::components;
use super::ComplexMatrix;
use crate::{Complex, Error, Result};

/// Number of singular values above `eps` of the matrices stacked as real
/// column vectors.
pub fn subspace_rank(vectors: &[ComplexMatrix], eps: f64) -> Result<usize> {
    let first = vectors.first().ok_or(Error::EmptyList)?;
    check_dims(vectors, first.dim())?;
    let mut rank = 0;
    for group in support_groups(vectors) {
        let mut cols = group.columns(vectors);
        rank += singular_values(&mut cols).into_iter().filter(|&s| s > eps).count();
    }
    Ok(rank)
}

/// Orthonormal basis (for `-Re tr(XY)`) of the real span of `vectors`.
///
/// Directions whose residual after orthogonalization falls below `eps`
/// are dropped. The result is ordered by the input vector that produced
/// each direction.
pub fn orthonormal_basis(vectors: &[ComplexMatrix], eps: f64) -> Result<Vec<ComplexMatrix>> {
    let Some(first) = vectors.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    check_dims(vectors, dim)?;
    let mut produced: Vec<(usize, ComplexMatrix)> = Vec::new();
    for group in support_groups(vectors) {
        let cols = group.columns(vectors);
        let mut accepted: Vec<Vec<f64>> = Vec::new();
        for (col, &src) in cols.into_iter().zip(&group.members) {
            let mut v = col;
            for _ in 0..2 {
                for q in &accepted {
                    let d = dot(q, &v);
                    v.iter_mut().zip(q).for_each(|(x, y)| *x -= d * y);
                }
            }
            let norm = dot(&v, &v).sqrt();
            if norm > eps {
                v.iter_mut().for_each(|x| *x /= norm);
                produced.push((src, group.to_matrix(dim, &v)));
                accepted.push(v);
            }
        }
    }
    produced.sort_by_key(|(src, _)| *src);
    Ok(produced.into_iter().map(|(_, m)| m).collect())
}

/// Distance from `x` to the span of an orthonormal family, in the norm of
/// `-Re tr(XY)`.
pub fn residual_from_span(x: &ComplexMatrix, orthonormal: &[ComplexMatrix]) -> f64 {
    let mut r = x.clone();
    for q in orthonormal {
        let c = q.inner(&r);
        r.axpy(-c, q);
    }
    r.inner(&r).max(0.0).sqrt()
}

fn check_dims(vectors: &[ComplexMatrix], dim: usize) -> Result<()> {
    match vectors.iter().find(|v| v.dim() != dim) {
        Some(v) => Err(Error::DimensionMismatch { expected: dim, found: v.dim() }),
        None => Ok(()),
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Group {
    members: Vec<usize>,
    coords: Vec<usize>,
}

impl Group {
    fn columns(&self, vectors: &[ComplexMatrix]) -> Vec<Vec<f64>> {
        self.members
            .iter()
            .map(|&m| {
                let data = vectors[m].as_slice();
                let mut col = Vec::with_capacity(2 * self.coords.len());
                for &c in &self.coords {
                    col.push(data[c].re);
                    col.push(data[c].im);
                }
                col
            })
            .collect()
    }

    fn to_matrix(&self, dim: usize, v: &[f64]) -> ComplexMatrix {
        let mut data = vec![Complex::new(0.0, 0.0); dim * dim];
        for (k, &c) in self.coords.iter().enumerate() {
            data[c] = Complex::new(v[2 * k], v[2 * k + 1]);
        }
        ComplexMatrix::new(dim, data).expect("finite by construction")
    }
}

fn support_groups(vectors: &[ComplexMatrix]) -> Vec<Group> {
    let supports: Vec<Vec<usize>> = vectors.iter().map(ComplexMatrix::support).collect();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for (v, supp) in supports.iter().enumerate() {
        for &c in supp {
            match owner.get(&c) {
                Some(&o) => edges.push((o, v)),
                None => {
                    owner.insert(c, v);
                }
            }
        }
    }
    components(vectors.len(), edges)
        .into_iter()
        .map(|members| {
            let mut coords: Vec<usize> = members.iter().flat_map(|&m| supports[m].iter().copied()).collect();
            coords.sort_unstable();
            coords.dedup();
            Group { members, coords }
        })
        .collect()
}

/// One-sided Jacobi SVD; returns the singular values (column norms after
/// orthogonalization).
fn singular_values(cols: &mut [Vec<f64>]) -> Vec<f64> {
    let k = cols.len();
    for _ in 0..60 {
        let mut rotated = false;
        for i in 0..k {
            for j in (i + 1)..k {
                let alpha = dot(&cols[i], &cols[i]);
                let beta = dot(&cols[j], &cols[j]);
                let gamma = dot(&cols[i], &cols[j]);
                if gamma.abs() <= 1e-15 * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(j);
                for (x, y) in left[i].iter_mut().zip(right[0].iter_mut()) {
                    let (a, b) = (*x, *y);
                    *x = c * a - s * b;
                    *y = s * a + c * b;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    cols.iter().map(|c| dot(c, c).sqrt()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(n: usize, i: usize, j: usize) -> ComplexMatrix {
        &ComplexMatrix::unit(n, i, j) - &ComplexMatrix::unit(n, j, i)
    }

    #[test]
    fn parallel_units_have_rank_one() {
        let e = ComplexMatrix::unit(2, 0, 0);
        assert_eq!(subspace_rank(&[e.clone(), e.scale_real(2.0)], 1e-9).unwrap(), 1);
    }

    #[test]
    fn so3_has_rank_three() {
        let basis = [skew(3, 0, 1), skew(3, 0, 2), skew(3, 1, 2)];
        assert_eq!(subspace_rank(&basis, 1e-9).unwrap(), 3);
        let mut more = basis.to_vec();
        more.push(&basis[0] + &basis[2]);
        assert_eq!(subspace_rank(&more, 1e-9).unwrap(), 3);
    }

    #[test]
    fn empty_list_is_an_error() {
        assert_eq!(subspace_rank(&[], 1e-9), Err(Error::EmptyList));
    }

    #[test]
    fn zero_vectors_have_rank_zero() {
        assert_eq!(subspace_rank(&[ComplexMatrix::zeros(3)], 1e-9).unwrap(), 0);
    }

    #[test]
    fn orthonormalizes_overlapping_diagonals() {
        let i = Complex::new(0.0, 1.0);
        let h = |a: usize| {
            let mut m = ComplexMatrix::zeros(4);
            m[(a, a)] = i;
            m[(a + 1, a + 1)] = -i;
            m
        };
        let basis = orthonormal_basis(&[h(0), h(1), h(2)], 1e-9).unwrap();
        assert_eq!(basis.len(), 3);
        for a in 0..3 {
            for b in 0..3 {
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((basis[a].inner(&basis[b]) - want).abs() < 1e-14);
            }
        }
        assert!(residual_from_span(&h(1), &basis) < 1e-14);
    }
}
