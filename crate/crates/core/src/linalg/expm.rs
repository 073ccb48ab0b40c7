use alloc::vec::Vec;

#[allow(unused_imports)] // math functions when std is not linked
use num_traits::Float;

use super::angle::{approximate_rational, Trig};
use super::eigen::hermitian_eigen;
use super::{ComplexMatrix, RationalAngle};
use crate::{Complex, Error, Result};

/// Largest denominator accepted when reading a diagonal phase as a rational.
const PHASE_MAX_DEN: i64 = 1000;

/// Closed forms for `exp(tξ)`, each tied to an algebraic identity of `ξ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `ξ = i·diag(θ)`: `exp(tξ) = diag(e^{itθ})`.
    DiagonalPhase,
    /// `ξ² = -¼I`: `exp(tξ) = cos(t/2)·I + 2 sin(t/2)·ξ`.
    HalfAngle,
    /// `ξ³ = -ξ`: `exp(tξ) = I + sin(t)·ξ + (1 - cos t)·ξ²`.
    RotationBlock,
}

impl ClosedForm {
    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::DiagonalPhase => "diagonal-phase",
            ClosedForm::HalfAngle => "half-angle",
            ClosedForm::RotationBlock => "rotation-block",
        }
    }

    /// How far `xi` is from satisfying the identity behind this form.
    pub fn residual(self, xi: &ComplexMatrix) -> f64 {
        let n = xi.dim();
        match self {
            ClosedForm::DiagonalPhase => {
                let mut r: f64 = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        let z = xi[(i, j)];
                        r = r.max(if i == j { z.re.abs() } else { z.norm() });
                    }
                }
                r
            }
            ClosedForm::HalfAngle => {
                let sq = xi * xi;
                sq.lin_comb(1.0, &ComplexMatrix::identity(n), 0.25).max_abs()
            }
            ClosedForm::RotationBlock => {
                let cube = &(xi * xi) * xi;
                (&cube + xi).max_abs()
            }
        }
    }

    /// The first form whose identity `xi` satisfies, trying diagonal
    /// phases, then half angles, then rotation blocks.
    pub fn detect(xi: &ComplexMatrix, eps: f64) -> Option<Self> {
        [ClosedForm::DiagonalPhase, ClosedForm::HalfAngle, ClosedForm::RotationBlock]
            .into_iter()
            .find(|f| f.residual(xi) < eps)
    }
}

/// `exp(tξ)` from a closed form, with a flag recording whether every
/// trigonometric value used was exact.
#[derive(Clone, Debug)]
pub struct StructuredExp {
    pub matrix: ComplexMatrix,
    pub exact: bool,
}

/// Evaluates `exp(t·ξ)` for `t = qπ` by the tagged closed form.
pub fn exp_structured(xi: &ComplexMatrix, t: RationalAngle, form: ClosedForm, eps: f64) -> Result<StructuredExp> {
    let residual = form.residual(xi);
    if !(residual < eps) {
        return Err(Error::FormIdentityViolated { form: form.name(), residual });
    }
    let n = xi.dim();
    match form {
        ClosedForm::DiagonalPhase => {
            let mut exact = true;
            let entries: Vec<Complex> = (0..n)
                .map(|k| {
                    let theta = xi[(k, k)].im;
                    match approximate_rational(theta, PHASE_MAX_DEN, eps) {
                        Some(q) => {
                            let angle = t * q;
                            let (c, s) = (angle.cos(), angle.sin());
                            exact &= c.exact && s.exact;
                            Complex::new(c.value, s.value)
                        }
                        None => {
                            exact = false;
                            let x = t.radians() * theta;
                            Complex::new(x.cos(), x.sin())
                        }
                    }
                })
                .collect();
            Ok(StructuredExp { matrix: ComplexMatrix::diagonal(&entries), exact })
        }
        ClosedForm::HalfAngle => {
            let h = t.half();
            let (c, s) = (h.cos(), h.sin());
            let mut m = xi.scale_real(2.0 * s.value);
            m.axpy(c.value, &ComplexMatrix::identity(n));
            Ok(StructuredExp { matrix: m, exact: c.exact && s.exact })
        }
        ClosedForm::RotationBlock => {
            let (c, s): (Trig, Trig) = (t.cos(), t.sin());
            let mut m = ComplexMatrix::identity(n);
            m.axpy(s.value, xi);
            m.axpy(1.0 - c.value, &(xi * xi));
            Ok(StructuredExp { matrix: m, exact: c.exact && s.exact })
        }
    }
}

/// `exp(t·A)` for anti-Hermitian `A`, through the eigendecomposition of
/// the Hermitian matrix `iA`.
pub fn exp_generic(a: &ComplexMatrix, t: f64, eps: f64) -> Result<ComplexMatrix> {
    let residual = a.anti_hermitian_residual();
    if !(residual < eps) {
        return Err(Error::NotAntiHermitian { residual });
    }
    let n = a.dim();
    let h = a.scale(Complex::new(0.0, 1.0));
    // iA may be Hermitian only up to rounding; symmetrize before solving.
    let h = h.lin_comb(0.5, &h.adjoint(), 0.5);
    let eig = hermitian_eigen(&h)?;
    // A = -iH, so exp(tA) = V diag(e^{-iλt}) V*.
    let mut out = ComplexMatrix::zeros(n);
    for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
        let phase = Complex::new((lambda * t).cos(), -(lambda * t).sin());
        for i in 0..n {
            let vi = v[i] * phase;
            if vi.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                out[(i, j)] += vi * v[j].conj();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-9;

    fn i() -> Complex {
        Complex::new(0.0, 1.0)
    }

    /// Scaling-and-squaring Taylor series, independent of both closed forms
    /// and the eigensolver.
    fn taylor_exp(a: &ComplexMatrix, t: f64) -> ComplexMatrix {
        let n = a.dim();
        let mut squarings = 0;
        let mut s = a.scale_real(t);
        while s.max_abs() * n as f64 > 0.25 {
            s = s.scale_real(0.5);
            squarings += 1;
        }
        let mut term = ComplexMatrix::identity(n);
        let mut sum = ComplexMatrix::identity(n);
        for k in 1..30 {
            term = (&term * &s).scale_real(1.0 / k as f64);
            sum = &sum + &term;
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum
    }

    fn aiii_xi(n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(2 * n, |r, c| if r.abs_diff(c) == n { i() * 0.5 } else { Complex::new(0.0, 0.0) })
    }

    fn bdi_rank1_xi(p: usize, q: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(p + q);
        m[(0, p)] = Complex::new(1.0, 0.0);
        m[(p, 0)] = Complex::new(-1.0, 0.0);
        m
    }

    #[test]
    fn zero_angle_is_identity() {
        let xi = aiii_xi(2);
        let e = exp_structured(&xi, RationalAngle::ZERO, ClosedForm::HalfAngle, EPS).unwrap();
        assert_eq!(e.matrix, ComplexMatrix::identity(4));
        assert!(e.exact);
        assert_eq!(exp_generic(&ComplexMatrix::zeros(3), 1.3, EPS).unwrap().distance(&ComplexMatrix::identity(3)), 0.0);
    }

    #[test]
    fn half_angle_full_turn_is_minus_identity() {
        let xi = aiii_xi(3);
        let e = exp_structured(&xi, RationalAngle::integer(2), ClosedForm::HalfAngle, EPS).unwrap();
        assert!(e.exact);
        assert_eq!(e.matrix, ComplexMatrix::identity(6).scale_real(-1.0));
        let g = exp_generic(&xi, 2.0 * core::f64::consts::PI, EPS).unwrap();
        assert!(g.distance(&e.matrix) < 1e-12);
    }

    #[test]
    fn rotation_block_at_pi() {
        let (p, q) = (2, 3);
        let xi = bdi_rank1_xi(p, q);
        let e = exp_structured(&xi, RationalAngle::integer(1), ClosedForm::RotationBlock, EPS).unwrap();
        assert!(e.exact);
        let mut want = ComplexMatrix::identity(p + q);
        want[(0, 0)] = Complex::new(-1.0, 0.0);
        want[(p, p)] = Complex::new(-1.0, 0.0);
        assert_eq!(e.matrix, want);
        // independent series oracle
        assert!(taylor_exp(&xi, core::f64::consts::PI).distance(&want) < 1e-12);
    }

    #[test]
    fn wrong_tag_is_reported() {
        let xi = bdi_rank1_xi(1, 2);
        let err = exp_structured(&xi, RationalAngle::integer(1), ClosedForm::HalfAngle, EPS).unwrap_err();
        assert!(matches!(err, Error::FormIdentityViolated { form: "half-angle", .. }));
    }

    #[test]
    fn diagonal_phase_exactness() {
        let xi = ComplexMatrix::diagonal(&[i() * (-5.0 / 6.0), i() * (1.0 / 6.0)]);
        // e^{-5πi} = e^{πi} = -1
        let e = exp_structured(&xi, RationalAngle::integer(6), ClosedForm::DiagonalPhase, EPS).unwrap();
        assert!(e.exact);
        assert_eq!(e.matrix, ComplexMatrix::identity(2).scale_real(-1.0));
        let e = exp_structured(&xi, RationalAngle::integer(12), ClosedForm::DiagonalPhase, EPS).unwrap();
        assert_eq!(e.matrix, ComplexMatrix::identity(2));
        let e = exp_structured(&xi, RationalAngle::integer(1), ClosedForm::DiagonalPhase, EPS).unwrap();
        assert!(!e.exact);
        assert!(e.matrix.distance(&taylor_exp(&xi, core::f64::consts::PI)) < 1e-12);
    }

    #[test]
    fn generic_rejects_hermitian_input() {
        let h = ComplexMatrix::diagonal(&[Complex::new(1.0, 0.0)]);
        assert!(matches!(exp_generic(&h, 1.0, EPS), Err(Error::NotAntiHermitian { .. })));
    }

    #[test]
    fn generic_matches_series_and_group_law() {
        let a = ComplexMatrix::from_fn(4, |r, c| {
            let x = Complex::new((r * 3 + c) as f64 * 0.1, (r + c) as f64 * 0.05);
            x
        });
        let a = a.lin_comb(0.5, &a.adjoint(), -0.5);
        let (t1, t2) = (0.7, -1.9);
        let e1 = exp_generic(&a, t1, EPS).unwrap();
        let e2 = exp_generic(&a, t2, EPS).unwrap();
        let e12 = exp_generic(&a, t1 + t2, EPS).unwrap();
        assert!((&e1 * &e2).distance(&e12) < 1e-12);
        assert!(e1.distance(&taylor_exp(&a, t1)) < 1e-12);
        assert!(e1.is_unitary(1e-12));
    }

    #[test]
    fn detection_order() {
        assert_eq!(ClosedForm::detect(&aiii_xi(1), EPS), Some(ClosedForm::HalfAngle));
        assert_eq!(ClosedForm::detect(&bdi_rank1_xi(1, 1), EPS), Some(ClosedForm::RotationBlock));
        assert_eq!(ClosedForm::detect(&bdi_rank1_xi(2, 2), EPS), Some(ClosedForm::RotationBlock));
        let d = ComplexMatrix::diagonal(&[i(), -i()]);
        assert_eq!(ClosedForm::detect(&d, EPS), Some(ClosedForm::DiagonalPhase));
    }
}
