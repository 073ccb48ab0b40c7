//! Hermitian eigensolver.
//!
//! Cyclic complex Jacobi rotations, applied independently to each
//! connected component of the sparsity pattern. Adjoint operators of the
//! canonical elements are extremely sparse in the standard bases, so the
//! components are small and the decomposition is cheap even when the Lie
//! algebra has several hundred dimensions.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // math functions when std is not linked
use num_traits::Float;
use num_traits::Zero;

use super::partition::components;
use super::ComplexMatrix;
use crate::{Complex, Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<Complex>>,
}

/// Eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = h.dim();
    let scale = h.max_abs().max(1.0);
    for i in 0..n {
        for j in i..n {
            if (h[(i, j)] - h[(j, i)].conj()).norm() > 1e-10 * scale {
                return Err(Error::Invalid("matrix is not Hermitian".into()));
            }
        }
    }

    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if !h[(i, j)].is_zero() {
                edges.push((i, j));
            }
        }
    }

    let mut pairs: Vec<(f64, Vec<Complex>)> = Vec::with_capacity(n);
    for idx in components(n, edges) {
        let m = idx.len();
        let mut a: Vec<Complex> = Vec::with_capacity(m * m);
        for &r in &idx {
            for &c in &idx {
                a.push(h[(r, c)]);
            }
        }
        let (vals, vecs) = jacobi(&mut a, m);
        for (k, &val) in vals.iter().enumerate() {
            let mut v = vec![Complex::zero(); n];
            for (local, &global) in idx.iter().enumerate() {
                v[global] = vecs[local * m + k];
            }
            pairs.push((val, v));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (values, vectors) = pairs.into_iter().unzip();
    Ok(HermitianEigen { values, vectors })
}

/// Cyclic Jacobi on a dense `m × m` Hermitian block. Returns eigenvalues
/// and the row-major eigenvector matrix (eigenvectors in columns).
fn jacobi(a: &mut [Complex], m: usize) -> (Vec<f64>, Vec<Complex>) {
    let mut v = vec![Complex::zero(); m * m];
    for i in 0..m {
        v[i * m + i] = Complex::new(1.0, 0.0);
    }
    let fro = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let target = 1e-15 * fro;

    for _ in 0..MAX_SWEEPS {
        let off: f64 =
            (0..m).flat_map(|p| ((p + 1)..m).map(move |q| (p, q))).map(|(p, q)| a[p * m + q].norm_sqr()).sum();
        if off.sqrt() <= target {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let b = a[p * m + q];
                let abs_b = b.norm();
                if abs_b <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = b / abs_b;
                let app = a[p * m + p].re;
                let aqq = a[q * m + q].re;
                let tau = (aqq - app) / (2.0 * abs_b);
                let t = if tau == 0.0 { 1.0 } else { tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt()) };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let pc = phase.conj();

                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = akp * c - pc * akq * s;
                    a[k * m + q] = akp * s + pc * akq * c;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = apk * c - phase * aqk * s;
                    a[q * m + k] = apk * s + phase * aqk * c;
                }
                a[p * m + q] = Complex::zero();
                a[q * m + p] = Complex::zero();
                a[p * m + p] = Complex::new(a[p * m + p].re, 0.0);
                a[q * m + q] = Complex::new(a[q * m + q].re, 0.0);
                for k in 0..m {
                    let vkp = v[k * m + p];
                    let vkq = v[k * m + q];
                    v[k * m + p] = vkp * c - pc * vkq * s;
                    v[k * m + q] = vkp * s + pc * vkq * c;
                }
            }
        }
    }
    let values = (0..m).map(|i| a[i * m + i].re).collect();
    (values, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        let m = ComplexMatrix::from_fn(n, |_, _| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        &m + &m.adjoint()
    }

    #[test]
    fn reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 2, 5, 12] {
            let h = random_hermitian(n, &mut rng);
            let eig = hermitian_eigen(&h).unwrap();
            for (val, v) in eig.values.iter().zip(&eig.vectors) {
                for i in 0..n {
                    let hv: Complex = (0..n).map(|j| h[(i, j)] * v[j]).sum();
                    assert!((hv - v[i] * *val).norm() < 1e-12);
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let dot: Complex = (0..n).map(|k| eig.vectors[a][k].conj() * eig.vectors[b][k]).sum();
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert!((dot - want).norm() < 1e-12);
                }
            }
            assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn block_structure_is_respected() {
        // two decoupled 2x2 blocks on indices {0,2} and {1,3}
        let mut h = ComplexMatrix::zeros(4);
        h[(0, 2)] = Complex::new(0.0, 1.0);
        h[(2, 0)] = Complex::new(0.0, -1.0);
        h[(1, 3)] = Complex::new(2.0, 0.0);
        h[(3, 1)] = Complex::new(2.0, 0.0);
        let eig = hermitian_eigen(&h).unwrap();
        let want = [-2.0, -1.0, 1.0, 2.0];
        for (got, want) in eig.values.iter().zip(want) {
            assert!((got - want).abs() < 1e-14);
        }
        // eigenvectors of the first block vanish on the second
        assert!(eig.vectors[1][1].is_zero() && eig.vectors[1][3].is_zero());
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::unit(2, 0, 1);
        assert!(hermitian_eigen(&m).is_err());
    }
}
