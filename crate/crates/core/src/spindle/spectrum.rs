//! The spectrum of `ad(ξ)` on `g = k ⊕ p`.
//!
//! Since `ξ ∈ p`, `ad(ξ)` exchanges `k` and `p`. Writing `A_pk` for its
//! block from `k` to `p`, `ad(ξ)²` restricted to `k` is `-A_pkᵀA_pk`, so the
//! squared frequencies and the subspaces `k_ν` come from one symmetric
//! eigenproblem of size `dim k`, and `p_ν = ad(ξ) k_ν` for `ν > 0`.

use alloc::vec::Vec;

use num_integer::Integer;
#[allow(unused_imports)] // math functions when std is not linked
use num_traits::Float;

use super::dense::Dense;
use crate::linalg::{approximate_rational, commutator, hermitian_eigen, ComplexMatrix, HermitianEigen};
use crate::spaces::SpaceInstance;
use crate::{Complex, Error, Result};

/// Largest denominator accepted for a ratio of frequencies.
const RATIO_MAX_DEN: i64 = 1000;
/// Ratios must be this close to a rational with small denominator.
const RATIO_TOL: f64 = 1e-8;

/// Frequencies `0 = ν₀ < ν₁ < … < ν_r` of `ad(ξ)` with the dimensions of
/// `k_ν` and `p_ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdSpectrum {
    /// Bucket centers, snapped to the nearest integer when within the
    /// bucket tolerance of one.
    pub frequencies: Vec<f64>,
    pub multiplicity_in_k: Vec<usize>,
    pub multiplicity_in_p: Vec<usize>,
    /// The bucketing tolerance the spectrum was computed with.
    pub bucket: f64,
}

impl AdSpectrum {
    /// The spectrum as given; used for hand-built examples.
    pub fn from_parts(
        frequencies: Vec<f64>,
        multiplicity_in_k: Vec<usize>,
        multiplicity_in_p: Vec<usize>,
        bucket: f64,
    ) -> Result<Self> {
        if frequencies.len() != multiplicity_in_k.len() || frequencies.len() != multiplicity_in_p.len() {
            return Err(Error::InvalidComponents);
        }
        Ok(Self { frequencies, multiplicity_in_k, multiplicity_in_p, bucket })
    }

    /// The nonzero frequencies `ν₁ < … < ν_r`.
    pub fn nonzero(&self) -> &[f64] {
        let start = usize::from(self.frequencies.first() == Some(&0.0));
        &self.frequencies[start..]
    }

    /// `dim p_ν` for the nonzero frequencies.
    pub fn nonzero_p_dims(&self) -> &[usize] {
        let start = usize::from(self.frequencies.first() == Some(&0.0));
        &self.multiplicity_in_p[start..]
    }

    /// The nonzero frequencies as integers, if they all are.
    pub fn integer_frequencies(&self) -> Option<Vec<u64>> {
        self.nonzero().iter().map(|&v| (v.fract() == 0.0 && v > 0.0).then_some(v as u64)).collect()
    }

    pub fn dim_k_plus(&self) -> usize {
        if self.frequencies.first() == Some(&0.0) {
            self.multiplicity_in_k[0]
        } else {
            0
        }
    }

    pub fn dim_p_plus(&self) -> usize {
        if self.frequencies.first() == Some(&0.0) {
            self.multiplicity_in_p[0]
        } else {
            0
        }
    }

    /// `dim p₋ = Σ_{ν > 0} dim p_ν`, the dimension of the orbit.
    pub fn dim_p_minus(&self) -> usize {
        self.nonzero_p_dims().iter().sum()
    }

    pub fn dim_k_minus(&self) -> usize {
        self.multiplicity_in_k.iter().sum::<usize>() - self.dim_k_plus()
    }
}

/// `A_pk` together with the eigendecomposition of `A_pkᵀA_pk`.
#[derive(Clone, Debug)]
pub(crate) struct Decomposition {
    pub spectrum: AdSpectrum,
    pub a_pk: Dense,
    /// `k_vectors[j]`: orthonormal coordinates (in the `k` basis) of `k_{ν_j}`.
    pub k_vectors: Vec<Vec<Vec<f64>>>,
}

fn check_in_p(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<()> {
    if xi.dim() != space.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: space.ambient_dim(), found: xi.dim() });
    }
    let residual = space.p_residual(xi);
    if !(residual < space.tol().eps * xi.max_abs().max(1.0)) {
        return Err(Error::NotInP { residual });
    }
    Ok(())
}

/// The block of `ad(ξ)` mapping `k` into `p`, in the orthonormal bases.
pub(crate) fn ad_block(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<Dense> {
    check_in_p(space, xi)?;
    let (dk, dp) = (space.dim_k(), space.dim_p());
    let mut a_pk = Dense::zeros(dp, dk);
    for (j, b) in space.k_basis().iter().enumerate() {
        let coords = space.coordinates(&commutator(xi, b)?);
        for (i, &c) in coords[dk..].iter().enumerate() {
            a_pk.set(i, j, c);
        }
    }
    a_pk.prune(1e-14);
    Ok(a_pk)
}

/// Groups sorted values into clusters no wider than `tol` around their mean.
fn bucket(values: &[f64], tol: f64) -> Result<Vec<(f64, Vec<usize>)>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match groups.last_mut() {
            Some(g) if values[idx] - values[*g.last().unwrap()] <= tol => g.push(idx),
            _ => groups.push(alloc::vec![idx]),
        }
    }
    groups
        .into_iter()
        .map(|g| {
            let center = g.iter().map(|&i| values[i]).sum::<f64>() / g.len() as f64;
            let spread = g.iter().map(|&i| (values[i] - center).abs()).fold(0.0, f64::max);
            if spread > tol {
                return Err(Error::IllConditionedSpectrum { value: center, spread });
            }
            Ok((center, g))
        })
        .collect()
}

pub(crate) fn decompose(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<Decomposition> {
    let tol = space.tol();
    let a_pk = ad_block(space, xi)?;
    let dk = space.dim_k();
    let dp = space.dim_p();
    let mut s_k = a_pk.transpose().mul(&a_pk);
    s_k.prune(1e-14);
    let eig = if dk == 0 {
        HermitianEigen { values: Vec::new(), vectors: Vec::new() }
    } else {
        hermitian_eigen(&s_k.to_complex())?
    };
    let nus: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0).sqrt()).collect();

    let mut frequencies = Vec::new();
    let mut mult_k = Vec::new();
    let mut mult_p = Vec::new();
    let mut k_vectors = Vec::new();
    let mut zero_seen = false;
    for (center, members) in bucket(&nus, tol.bucket)? {
        let (center, is_zero) = if center <= tol.bucket {
            (0.0, true)
        } else if (center - center.round()).abs() <= tol.bucket {
            (center.round(), false)
        } else {
            (center, false)
        };
        let vecs: Vec<Vec<f64>> = members.iter().map(|&m| eig.vectors[m].iter().map(|z| z.re).collect()).collect();
        if is_zero {
            zero_seen = true;
        }
        frequencies.push(center);
        mult_k.push(vecs.len());
        mult_p.push(if is_zero { 0 } else { vecs.len() });
        k_vectors.push(vecs);
    }
    if !zero_seen {
        frequencies.insert(0, 0.0);
        mult_k.insert(0, 0);
        mult_p.insert(0, 0);
        k_vectors.insert(0, Vec::new());
    }
    // p₊ is whatever ad(ξ)k does not reach
    let reached: usize = mult_p.iter().sum();
    mult_p[0] = dp - reached;
    debug_assert_eq!(mult_k.iter().sum::<usize>(), dk);

    let spectrum = AdSpectrum { frequencies, multiplicity_in_k: mult_k, multiplicity_in_p: mult_p, bucket: tol.bucket };
    Ok(Decomposition { spectrum, a_pk, k_vectors })
}

/// Frequencies of `ad(ξ)` and their `k`/`p` multiplicities.
pub fn ad_spectrum(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<AdSpectrum> {
    Ok(decompose(space, xi)?.spectrum)
}

/// All eigenvalues of the Hermitian operator `i·ad(ξ)` on `g`, ascending.
/// They come in pairs `±ν` around a kernel.
pub fn ad_eigenvalues(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<Vec<f64>> {
    let a_pk = ad_block(space, xi)?;
    let dk = space.dim_k();
    let n = space.dim_g();
    let mut h = ComplexMatrix::zeros(n);
    for i in 0..a_pk.rows {
        for j in 0..a_pk.cols {
            let a = a_pk.get(i, j);
            if a != 0.0 {
                // A_kp = -A_pkᵀ
                h[(dk + i, j)] = Complex::new(0.0, a);
                h[(j, dk + i)] = Complex::new(0.0, -a);
            }
        }
    }
    Ok(hermitian_eigen(&h)?.values)
}

/// Whether the nonzero frequencies are coprime integers.
pub fn is_canonical(spec: &AdSpectrum) -> Result<bool> {
    if spec.nonzero().is_empty() {
        return Err(Error::DegenerateSpectrum);
    }
    let Some(ints) = spec.integer_frequencies() else {
        return Ok(false);
    };
    Ok(ints.iter().fold(0u64, |g, &v| g.gcd(&v)) == 1)
}

/// Rescales `ξ` by the positive factor that makes it canonical.
pub fn normalize_canonical(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<ComplexMatrix> {
    let spec = ad_spectrum(space, xi)?;
    if is_canonical(&spec)? {
        return Ok(xi.clone());
    }
    let nonzero = spec.nonzero();
    let base = nonzero[0];
    let mut numerators = Vec::with_capacity(nonzero.len());
    let mut lcm_den: i64 = 1;
    for &v in nonzero {
        let ratio = v / base;
        let r = approximate_rational(ratio, RATIO_MAX_DEN, RATIO_TOL).ok_or(Error::IrrationalRatio { ratio })?;
        lcm_den = lcm_den.lcm(r.denom());
        numerators.push(r);
    }
    let ints: Vec<i64> = numerators.iter().map(|r| (r * lcm_den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, v| g.gcd(v));
    // c·ν₁ = (lcm·1)/g
    let c = lcm_den as f64 / (g as f64 * base);
    Ok(xi.scale_real(c))
}

/// `‖ad(ξ)³ + ad(ξ)‖`, largest entry in an orthonormal basis.
pub fn ad_cube_residual(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<f64> {
    let a_pk = ad_block(space, xi)?;
    // both off-diagonal blocks of ad³ + ad equal ±A_pk(I - A_pkᵀA_pk) up to transpose
    let s_k = a_pk.transpose().mul(&a_pk);
    let mut r = a_pk.mul(&s_k);
    for (x, a) in r.data.iter_mut().zip(&a_pk.data) {
        *x = a - *x;
    }
    Ok(r.max_abs())
}

/// `ad(ξ)³ = -ad(ξ)` to the space tolerance: frequencies `{0, 1}` only.
pub fn is_extrinsically_symmetric_type(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<bool> {
    Ok(ad_cube_residual(space, xi)? < space.tol().eps)
}
