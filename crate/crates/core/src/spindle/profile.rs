//! Jacobi fields along the geodesic `γ_ξ` and the dimensions of the
//! slices `M^ξ_t`.

use alloc::vec::Vec;

#[allow(unused_imports)] // math functions when std is not linked
use num_traits::Float;

use super::spectrum::AdSpectrum;
use super::split::CartanSplit;
use crate::linalg::RationalAngle;
use crate::{Error, Result};

/// What the slice `M^ξ_t` looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SliceKind {
    /// The slice collapses to a point.
    Knot,
    /// The middle slice between two consecutive knots.
    Centriole,
    Regular,
}

impl SliceKind {
    pub fn name(self) -> &'static str {
        match self {
            SliceKind::Knot => "knot",
            SliceKind::Centriole => "centriole",
            SliceKind::Regular => "regular",
        }
    }
}

impl core::fmt::Display for SliceKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// `|J_X(t)|² = Σ_j sin²(ν_j t)/ν_j² · |X_{ν_j}|²` for a Jacobi field with
/// initial derivative `X`, given the squared norms of the components of
/// `X` in `p_{ν_j}` for the nonzero frequencies.
pub fn jacobi_norm_sq(spec: &AdSpectrum, components: &[f64], t: f64) -> Result<f64> {
    let nus = spec.nonzero();
    if components.len() != nus.len() || components.iter().any(|&c| !(c >= 0.0)) || !components.iter().any(|&c| c > 0.0)
    {
        return Err(Error::InvalidComponents);
    }
    Ok(nus
        .iter()
        .zip(components)
        .map(|(&nu, &c)| {
            let s = (nu * t).sin();
            s * s / (nu * nu) * c
        })
        .sum())
}

/// Unit-norm components spread over the frequencies in proportion to
/// `dim p_ν`, as for a uniformly random direction in `p₋`.
pub fn uniform_components(spec: &AdSpectrum) -> Vec<f64> {
    let dims = spec.nonzero_p_dims();
    let total: usize = dims.iter().sum();
    dims.iter().map(|&d| d as f64 / total.max(1) as f64).collect()
}

fn dimension_real(spec: &AdSpectrum, t: f64, eps: f64) -> usize {
    spec.nonzero()
        .iter()
        .zip(spec.nonzero_p_dims())
        .filter(|(&nu, _)| (nu * t).sin().abs() > eps)
        .map(|(_, &d)| d)
        .sum()
}

fn dimension_exact(spec: &AdSpectrum, t: RationalAngle, eps: f64) -> usize {
    spec.nonzero()
        .iter()
        .zip(spec.nonzero_p_dims())
        .filter(
            |(&nu, _)| {
                if nu.fract() == 0.0 {
                    !(t * nu as i64).sin_is_zero()
                } else {
                    (nu * t.radians()).sin().abs() > eps
                }
            },
        )
        .map(|(_, &d)| d)
        .sum()
}

/// `dim M^ξ_t`: the total dimension of the `p_ν` with `sin(νt) ≠ 0`.
pub fn slice_dimension(split: &CartanSplit, t: f64, eps: f64) -> usize {
    dimension_real(&split.spectrum, t, eps)
}

/// [`slice_dimension`] at `t = qπ`, decided exactly for integer frequencies.
pub fn slice_dimension_at(split: &CartanSplit, t: RationalAngle) -> usize {
    dimension_exact(&split.spectrum, t, split.spectrum.bucket)
}

/// Slice dimension straight from a spectrum.
pub fn spectrum_slice_dimension(spec: &AdSpectrum, t: RationalAngle) -> usize {
    dimension_exact(spec, t, spec.bucket)
}

/// Knot when the slice is a point, centriole at `t ∈ (ℤ+½)π`.
pub fn classify(spec: &AdSpectrum, t: RationalAngle) -> SliceKind {
    if dimension_exact(spec, t, spec.bucket) == 0 {
        SliceKind::Knot
    } else if (t - RationalAngle::new(1, 2).expect("nonzero denominator")).is_integer() {
        SliceKind::Centriole
    } else {
        SliceKind::Regular
    }
}

/// [`classify`] for a floating-point time, with centrioles recognized to
/// within `eps` of `(ℤ+½)π`.
pub fn classify_real(spec: &AdSpectrum, t: f64, eps: f64) -> SliceKind {
    let turns = t / core::f64::consts::PI - 0.5;
    if dimension_real(spec, t, eps) == 0 {
        SliceKind::Knot
    } else if (turns - turns.round()).abs() < eps {
        SliceKind::Centriole
    } else {
        SliceKind::Regular
    }
}
