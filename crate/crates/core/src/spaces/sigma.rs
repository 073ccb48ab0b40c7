use alloc::vec::Vec;

use crate::linalg::ComplexMatrix;
use crate::Complex;

/// The Cartan involution `σ = Ad(s_p)` of a space, as a real-linear map on
/// matrices.
#[derive(Clone, Debug, PartialEq)]
pub enum Sigma {
    /// `X ↦ X̄`
    ComplexConjugation,
    /// `X ↦ J_m X̄ J_m⁻¹`, the quaternionic structure on `C^{2m}`.
    Quaternionic { m: usize },
    /// `X ↦ S X S` for a diagonal sign matrix `S`.
    Signature(Vec<f64>),
    /// `X ↦ J_m X J_m⁻¹`, conjugation by the complex structure.
    ComplexStructure { m: usize },
    /// `diag(A, B) ↦ diag(B, A)` on block pairs of size `n`.
    FactorSwap { n: usize },
}

impl Sigma {
    /// `I_p ⊕ -I_q`.
    pub fn block_signature(p: usize, q: usize) -> Self {
        let mut s = alloc::vec![1.0; p];
        s.extend(core::iter::repeat(-1.0).take(q));
        Sigma::Signature(s)
    }

    pub fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let n = x.dim();
        match self {
            Sigma::ComplexConjugation => x.conj(),
            Sigma::Quaternionic { m } => conjugate_by_j(x, *m).conj(),
            Sigma::ComplexStructure { m } => conjugate_by_j(x, *m),
            Sigma::Signature(s) => {
                assert_eq!(s.len(), n, "signature length");
                ComplexMatrix::from_fn(n, |i, j| x[(i, j)] * (s[i] * s[j]))
            }
            Sigma::FactorSwap { n: half } => {
                assert_eq!(2 * half, n, "factor swap on block pairs");
                ComplexMatrix::from_fn(n, |i, j| x[((i + half) % n, (j + half) % n)])
            }
        }
    }
}

impl Sigma {
    /// Where `σ` sends a single entry `v` at `(i, j)` of an `n × n` matrix.
    pub fn apply_entry(&self, n: usize, i: usize, j: usize, v: Complex) -> (usize, usize, Complex) {
        match self {
            Sigma::ComplexConjugation => (i, j, v.conj()),
            Sigma::Signature(s) => (i, j, v * (s[i] * s[j])),
            Sigma::FactorSwap { n: half } => ((i + half) % n, (j + half) % n, v),
            Sigma::ComplexStructure { m } | Sigma::Quaternionic { m } => {
                let (r, c) = ((i + m) % n, (j + m) % n);
                let sign = |x: usize| if x < *m { 1.0 } else { -1.0 };
                let w = v * (sign(r) * sign(c));
                let w = if matches!(self, Sigma::Quaternionic { .. }) { w.conj() } else { w };
                (r, c, w)
            }
        }
    }
}

/// `J X J⁻¹` for `J = J_m`: with `X = [[A, B], [C, D]]` this is
/// `[[D, -C], [-B, A]]`.
fn conjugate_by_j(x: &ComplexMatrix, m: usize) -> ComplexMatrix {
    let n = x.dim();
    assert_eq!(2 * m, n, "J_m acts on 2m x 2m matrices");
    let sign = |i: usize| if i < m { 1.0 } else { -1.0 };
    ComplexMatrix::from_fn(n, |i, j| x[((i + m) % n, (j + m) % n)] * (sign(i) * sign(j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_structure_matches_explicit_conjugation() {
        let m = 2;
        let x = ComplexMatrix::from_fn(4, |i, j| Complex::new((i * 4 + j) as f64, (i as f64) - (j as f64)));
        let j = ComplexMatrix::symplectic_j(m);
        let want = &(&j * &x) * &j.adjoint();
        assert!(Sigma::ComplexStructure { m }.apply(&x).distance(&want) < 1e-14);
        let want_q = &(&j * &x.conj()) * &j.adjoint();
        assert!(Sigma::Quaternionic { m }.apply(&x).distance(&want_q) < 1e-14);
    }

    #[test]
    fn entrywise_action_matches_matrix_action() {
        let x = ComplexMatrix::from_fn(4, |i, j| Complex::new((i * 4 + j) as f64, (i as f64) - 2.0 * (j as f64)));
        for sigma in [
            Sigma::ComplexConjugation,
            Sigma::Quaternionic { m: 2 },
            Sigma::ComplexStructure { m: 2 },
            Sigma::block_signature(1, 3),
            Sigma::FactorSwap { n: 2 },
        ] {
            let mut rebuilt = ComplexMatrix::zeros(4);
            for i in 0..4 {
                for j in 0..4 {
                    let (r, c, w) = sigma.apply_entry(4, i, j, x[(i, j)]);
                    rebuilt[(r, c)] += w;
                }
            }
            assert_eq!(rebuilt, sigma.apply(&x), "{sigma:?}");
        }
    }

    #[test]
    fn factor_swap_exchanges_blocks() {
        let a = ComplexMatrix::diagonal(&[Complex::new(1.0, 0.0)]);
        let b = ComplexMatrix::diagonal(&[Complex::new(0.0, 2.0)]);
        let ab = ComplexMatrix::direct_sum(&a, &b);
        assert_eq!(Sigma::FactorSwap { n: 1 }.apply(&ab), ComplexMatrix::direct_sum(&b, &a));
    }
}
