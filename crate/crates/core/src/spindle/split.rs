//! The splitting `k = k₊ ⊕ k₋`, `p = p₊ ⊕ p₋` along the frequencies of a
//! canonical element, and the checks it is expected to pass.

use alloc::vec::Vec;

use super::dense::{dot, norm, residual};
use super::spectrum::{decompose, is_canonical, AdSpectrum};
use crate::linalg::{commutator, ComplexMatrix};
use crate::spaces::SpaceInstance;
use crate::{Error, Result};

/// Orthonormal bases of the pieces of `k` and `p`.
///
/// Each element is kept twice: as a matrix and as its coordinate vector in
/// the basis of `g`.
#[derive(Clone, Debug)]
pub struct CartanSplit {
    pub spectrum: AdSpectrum,
    pub k_plus: Vec<ComplexMatrix>,
    pub k_minus: Vec<ComplexMatrix>,
    pub p_plus: Vec<ComplexMatrix>,
    pub p_minus: Vec<ComplexMatrix>,
    /// `k_nu[j]` spans `k_{ν_j}` for the nonzero frequencies `ν_j`.
    pub k_nu: Vec<Vec<ComplexMatrix>>,
    /// `p_nu[j]` spans `p_{ν_j}`, with `p_nu[j][i] = [ξ, k_nu[j][i]] / ν_j`.
    pub p_nu: Vec<Vec<ComplexMatrix>>,
    coords: Coordinates,
}

#[derive(Clone, Debug, Default)]
struct Coordinates {
    k_plus: Vec<Vec<f64>>,
    k_nu: Vec<Vec<Vec<f64>>>,
    p_plus: Vec<Vec<f64>>,
    p_nu: Vec<Vec<Vec<f64>>>,
}

/// Largest violations of the expected properties of a splitting.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitChecks {
    /// `rank{[X, ξ] : X ∈ k}` equals `dim p₋`.
    pub tangent_rank_matches: bool,
    /// Largest distance of some `[X, ξ]` from `p₋`.
    pub tangent_residual: f64,
    /// Largest `|⟨a, b⟩ - δ_ab|` over all listed basis vectors.
    pub orthogonality: f64,
    /// Largest distance of `[[X, Y], Z]` from `p₊` for `X, Y, Z ∈ p₊`.
    pub curvature_p_plus: f64,
    /// Largest distance of `[[X, Y], Z]` from `p₋` for `X, Y, Z ∈ p₋`.
    pub curvature_p_minus: f64,
    /// Largest distance of `[X, Y]` from `k₊` for `X, Y ∈ p₊`.
    pub p_plus_bracket: f64,
}

impl SplitChecks {
    pub fn passes(&self, eps: f64) -> bool {
        self.tangent_rank_matches
            && [
                self.tangent_residual,
                self.orthogonality,
                self.curvature_p_plus,
                self.curvature_p_minus,
                self.p_plus_bracket,
            ]
            .iter()
            .all(|&r| r < eps)
    }
}

/// Splits `k` and `p` along the frequencies of a canonical `ξ`.
pub fn cartan_split(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<CartanSplit> {
    let dec = decompose(space, xi)?;
    if !is_canonical(&dec.spectrum)? {
        return Err(Error::NotCanonical);
    }
    let dk = space.dim_k();
    let dg = space.dim_g();
    let pad_k = |v: &[f64]| {
        let mut out = alloc::vec![0.0; dg];
        out[..dk].copy_from_slice(v);
        out
    };
    let pad_p = |v: &[f64]| {
        let mut out = alloc::vec![0.0; dg];
        out[dk..].copy_from_slice(v);
        out
    };

    let mut coords = Coordinates::default();
    let freqs = &dec.spectrum.frequencies;
    for (j, vecs) in dec.k_vectors.iter().enumerate() {
        if freqs[j] == 0.0 {
            coords.k_plus = vecs.iter().map(|v| pad_k(v)).collect();
            continue;
        }
        coords.k_nu.push(vecs.iter().map(|v| pad_k(v)).collect());
        let nu = freqs[j];
        coords.p_nu.push(
            vecs.iter()
                .map(|v| {
                    let w: Vec<f64> = dec.a_pk.apply(v).iter().map(|x| x / nu).collect();
                    pad_p(&w)
                })
                .collect(),
        );
    }

    // p₊ is the orthogonal complement of p₋ inside p
    let reached: Vec<Vec<f64>> = coords.p_nu.iter().flatten().cloned().collect();
    let target = dec.spectrum.dim_p_plus();
    for i in dk..dg {
        if coords.p_plus.len() == target {
            break;
        }
        let mut v = alloc::vec![0.0; dg];
        v[i] = 1.0;
        for _ in 0..2 {
            for u in reached.iter().chain(&coords.p_plus) {
                let c = dot(u, &v);
                if c != 0.0 {
                    for (x, y) in v.iter_mut().zip(u) {
                        *x -= c * y;
                    }
                }
            }
        }
        let nv = norm(&v);
        if nv > 1e-6 {
            for x in &mut v {
                *x /= nv;
            }
            coords.p_plus.push(v);
        }
    }
    if coords.p_plus.len() != target {
        return Err(Error::IllConditionedSpectrum {
            value: 0.0,
            spread: (target as f64 - coords.p_plus.len() as f64).abs(),
        });
    }

    let to_mats = |vs: &[Vec<f64>]| vs.iter().map(|v| space.combine(v)).collect::<Vec<_>>();
    let k_nu: Vec<Vec<ComplexMatrix>> = coords.k_nu.iter().map(|vs| to_mats(vs)).collect();
    let p_nu: Vec<Vec<ComplexMatrix>> = coords.p_nu.iter().map(|vs| to_mats(vs)).collect();
    Ok(CartanSplit {
        spectrum: dec.spectrum,
        k_plus: to_mats(&coords.k_plus),
        k_minus: k_nu.iter().flatten().cloned().collect(),
        p_plus: to_mats(&coords.p_plus),
        p_minus: p_nu.iter().flatten().cloned().collect(),
        k_nu,
        p_nu,
        coords,
    })
}

/// A small deterministic generator for choosing sample triples.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Index triples: all of them when there are at most `limit`, otherwise
/// `limit` deterministic samples.
fn triples(n: usize, limit: usize) -> Vec<(usize, usize, usize)> {
    if n == 0 {
        return Vec::new();
    }
    if n * n * n <= limit {
        let mut out = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    out.push((a, b, c));
                }
            }
        }
        return out;
    }
    let mut rng = SplitMix(n as u64);
    (0..limit).map(|_| (rng.below(n), rng.below(n), rng.below(n))).collect()
}

/// Index pairs, exhaustive up to `limit` and sampled beyond.
fn pairs(n: usize, limit: usize) -> Vec<(usize, usize)> {
    if n * n <= limit {
        return (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    }
    let mut rng = SplitMix(n as u64 + 1);
    (0..limit).map(|_| (rng.below(n), rng.below(n))).collect()
}

impl CartanSplit {
    /// Evaluates the expected properties. Triple-bracket tests are
    /// exhaustive when there are at most `sample_limit` triples and sampled
    /// otherwise.
    pub fn verify(&self, space: &SpaceInstance, xi: &ComplexMatrix, sample_limit: usize) -> Result<SplitChecks> {
        let eps = space.tol().eps;
        let p_minus: Vec<Vec<f64>> = self.coords.p_nu.iter().flatten().cloned().collect();
        let k_plus = &self.coords.k_plus;
        let p_plus = &self.coords.p_plus;

        let mut tangent_residual: f64 = 0.0;
        let mut tangent = Vec::with_capacity(space.dim_k());
        for x in space.k_basis() {
            let c = space.coordinates(&commutator(x, xi)?);
            tangent_residual = tangent_residual.max(residual(&c, &p_minus));
            tangent.push(commutator(x, xi)?);
        }
        let rank = crate::linalg::subspace_rank(&tangent, eps)?;

        let all: Vec<&Vec<f64>> =
            k_plus.iter().chain(self.coords.k_nu.iter().flatten()).chain(p_plus).chain(&p_minus).collect();
        let mut orthogonality: f64 = 0.0;
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate().skip(i) {
                let target = if i == j { 1.0 } else { 0.0 };
                orthogonality = orthogonality.max((dot(a, b) - target).abs());
            }
        }

        let curvature = |mats: &[ComplexMatrix], span: &[Vec<f64>]| -> Result<f64> {
            let mut worst: f64 = 0.0;
            for (a, b, c) in triples(mats.len(), sample_limit) {
                let inner = commutator(&mats[a], &mats[b])?;
                let t = commutator(&inner, &mats[c])?;
                worst = worst.max(residual(&space.coordinates(&t), span));
            }
            Ok(worst)
        };
        let curvature_p_plus = curvature(&self.p_plus, p_plus)?;
        let curvature_p_minus = curvature(&self.p_minus, &p_minus)?;

        let mut p_plus_bracket: f64 = 0.0;
        for (a, b) in pairs(self.p_plus.len(), sample_limit) {
            let br = commutator(&self.p_plus[a], &self.p_plus[b])?;
            p_plus_bracket = p_plus_bracket.max(residual(&space.coordinates(&br), k_plus));
        }

        Ok(SplitChecks {
            tangent_rank_matches: rank == p_minus.len(),
            tangent_residual,
            orthogonality,
            curvature_p_plus,
            curvature_p_minus,
            p_plus_bracket,
        })
    }
}
