//! Spanning sets of the compact classical Lie algebras inside `u(N)`.

use alloc::vec::Vec;

use super::Sigma;
use crate::linalg::ComplexMatrix;
use crate::Complex;

const I: Complex = Complex::new(0.0, 1.0);

/// `E_jk - E_kj`, `i(E_jk + E_kj)` for `j < k`, and `i(E_jj - E_{j+1,j+1})`.
pub fn su_span(n: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in (j + 1)..n {
            let mut x = ComplexMatrix::zeros(n);
            x[(j, k)] = Complex::new(1.0, 0.0);
            x[(k, j)] = Complex::new(-1.0, 0.0);
            out.push(x);
            let mut y = ComplexMatrix::zeros(n);
            y[(j, k)] = I;
            y[(k, j)] = I;
            out.push(y);
        }
    }
    for j in 0..n.saturating_sub(1) {
        let mut h = ComplexMatrix::zeros(n);
        h[(j, j)] = I;
        h[(j + 1, j + 1)] = -I;
        out.push(h);
    }
    out
}

/// The fixed points `(X + τX)/2` of an involutive automorphism applied to
/// a spanning set, with zero results dropped. Spans the fixed subalgebra.
pub fn fixed_part(span: &[ComplexMatrix], tau: &Sigma) -> Vec<ComplexMatrix> {
    span.iter().map(|x| x.lin_comb(0.5, &tau.apply(x), 0.5)).filter(|y| y.max_abs() > 0.0).collect()
}

/// `so(n)` as the real points of `su(n)`.
pub fn so_span(n: usize) -> Vec<ComplexMatrix> {
    fixed_part(&su_span(n), &Sigma::ComplexConjugation)
}

/// Compact `sp(m) = {X ∈ su(2m) : J X̄ = X J}`.
pub fn sp_span(m: usize) -> Vec<ComplexMatrix> {
    fixed_part(&su_span(2 * m), &Sigma::Quaternionic { m })
}
