//! The catalog of classical symmetric spaces.
//!
//! Every space is realized inside `u(N)`: an orthonormal basis of the
//! Lie algebra `g` adapted to the Cartan decomposition `g = k ⊕ p`, the
//! involution `σ`, and a membership predicate for the isotropy group `K`.
//!
//! Group families `G = (G × G)/ΔG` are realized on block-diagonal pairs
//! `diag(X, Y)`, with `σ` exchanging the factors. Then `k` is the diagonal,
//! `p` the anti-diagonal, and the distinguished element is `(ξ, -ξ)`.

mod algebra;
mod center;
mod family;
mod sigma;

use alloc::vec::Vec;

pub use algebra::{fixed_part, so_span, sp_span, su_span};
pub use center::{center_order, sp_torus, su_torus, torus_center_order, CenterOrder};
pub use family::{FamilyTag, Params, SpaceFamily};
pub use sigma::Sigma;

use crate::linalg::{orthonormal_basis, subspace_rank, ClosedForm, ComplexMatrix, Tolerance};
use crate::{Complex, Error, Result};

const I: Complex = Complex::new(0.0, 1.0);

/// A realized symmetric space.
#[derive(Clone, Debug)]
pub struct SpaceInstance {
    family: SpaceFamily,
    ambient_dim: usize,
    /// Orthonormal; the first `k_dim` elements span `k`, the rest `p`.
    basis: Vec<ComplexMatrix>,
    supports: Vec<Vec<usize>>,
    k_dim: usize,
    span_rank: usize,
    sigma: Sigma,
    tol: Tolerance,
}

/// Builds a space with the default tolerances.
pub fn build_space(family: SpaceFamily) -> Result<SpaceInstance> {
    build_space_with(family, Tolerance::default())
}

pub fn build_space_with(family: SpaceFamily, tol: Tolerance) -> Result<SpaceInstance> {
    let n = family.ambient_dim();
    let (span, sigma) = match family.tag() {
        FamilyTag::AI => (algebra::su_span(n), Sigma::ComplexConjugation),
        FamilyTag::AII => (algebra::su_span(n), Sigma::Quaternionic { m: n / 2 }),
        FamilyTag::AIII => (algebra::su_span(n), Sigma::block_signature(n / 2, n / 2)),
        FamilyTag::BdiRank1 => {
            let (p, q) = family.pq();
            (algebra::so_span(n), Sigma::block_signature(p, q))
        }
        FamilyTag::BdiSplit => (algebra::so_span(n), Sigma::block_signature(n / 2, n / 2)),
        FamilyTag::DIII => (algebra::so_span(n), Sigma::ComplexStructure { m: n / 2 }),
        FamilyTag::CI => (algebra::sp_span(n / 2), Sigma::ComplexStructure { m: n / 2 }),
        FamilyTag::CII => {
            let m = family.n();
            let mut s = Vec::with_capacity(4 * m);
            for block in 0..4 {
                let sign = if block % 2 == 0 { 1.0 } else { -1.0 };
                s.extend(core::iter::repeat(sign).take(m));
            }
            (algebra::sp_span(2 * m), Sigma::Signature(s))
        }
        FamilyTag::GrpA | FamilyTag::GrpBd | FamilyTag::GrpC | FamilyTag::GrpD => {
            let half = n / 2;
            let factor = factor_span(family.tag(), half);
            let zero = ComplexMatrix::zeros(half);
            let span = factor
                .iter()
                .flat_map(|x| [ComplexMatrix::direct_sum(x, &zero), ComplexMatrix::direct_sum(&zero, x)])
                .collect();
            (span, Sigma::FactorSwap { n: half })
        }
    };

    let span_rank = subspace_rank(&span, tol.eps)?;
    let k_cands: Vec<ComplexMatrix> = span.iter().map(|x| x.lin_comb(0.5, &sigma.apply(x), 0.5)).collect();
    let p_cands: Vec<ComplexMatrix> = span.iter().map(|x| x.lin_comb(0.5, &sigma.apply(x), -0.5)).collect();
    let mut basis = orthonormal_basis(&k_cands, tol.eps)?;
    let k_dim = basis.len();
    basis.extend(orthonormal_basis(&p_cands, tol.eps)?);
    let supports = basis.iter().map(ComplexMatrix::support).collect();

    Ok(SpaceInstance { family, ambient_dim: n, basis, supports, k_dim, span_rank, sigma, tol })
}

fn factor_span(tag: FamilyTag, n: usize) -> Vec<ComplexMatrix> {
    match tag {
        FamilyTag::GrpA => algebra::su_span(n),
        FamilyTag::GrpBd | FamilyTag::GrpD => algebra::so_span(n),
        FamilyTag::GrpC => algebra::sp_span(n / 2),
        _ => unreachable!("group family"),
    }
}

/// `i·diag(a·I_p, b·I_q)` with `a = -q/(p+q)`, `b = p/(p+q)`.
fn diagonal_phase_xi(p: usize, q: usize) -> ComplexMatrix {
    let n = (p + q) as f64;
    let a = -(q as f64) / n;
    let b = p as f64 / n;
    let entries: Vec<Complex> = (0..p + q).map(|k| I * if k < p { a } else { b }).collect();
    ComplexMatrix::diagonal(&entries)
}

/// `[[0, E], [-Eᵀ, 0]]` with `E` the `p × q` matrix unit `E_11`.
fn rank_one_xi(p: usize, q: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(p + q);
    m[(0, p)] = Complex::new(1.0, 0.0);
    m[(p, 0)] = Complex::new(-1.0, 0.0);
    m
}

/// `(i/2)·diag(I_n, -I_n)`.
fn half_i_signature_xi(n: usize) -> ComplexMatrix {
    let entries: Vec<Complex> = (0..2 * n).map(|k| I * if k < n { 0.5 } else { -0.5 }).collect();
    ComplexMatrix::diagonal(&entries)
}

/// The distinguished element of extrinsically symmetric type.
pub fn canonical_xi(family: SpaceFamily) -> ComplexMatrix {
    let tag = family.tag();
    if tag.is_group() {
        let x = factor_xi(family).expect("group family");
        return ComplexMatrix::direct_sum(&x, &x.scale_real(-1.0));
    }
    match tag {
        FamilyTag::AI => {
            let (p, q) = family.pq();
            diagonal_phase_xi(p, q)
        }
        FamilyTag::AII => {
            let (p, q) = family.pq();
            let e = diagonal_phase_xi(p, q);
            ComplexMatrix::direct_sum(&e, &e)
        }
        FamilyTag::AIII => {
            let n = family.n();
            ComplexMatrix::from_fn(2 * n, |r, c| if r.abs_diff(c) == n { I * 0.5 } else { Complex::new(0.0, 0.0) })
        }
        FamilyTag::BdiRank1 => {
            let (p, q) = family.pq();
            rank_one_xi(p, q)
        }
        FamilyTag::BdiSplit => ComplexMatrix::symplectic_j(family.n()).scale_real(0.5),
        FamilyTag::DIII => {
            let j = ComplexMatrix::symplectic_j(family.n());
            ComplexMatrix::direct_sum(&j, &j.scale_real(-1.0)).scale_real(0.5)
        }
        FamilyTag::CI => half_i_signature_xi(family.n()),
        FamilyTag::CII => {
            let n = family.n();
            ComplexMatrix::from_fn(4 * n, |r, c| {
                let (br, bc) = (r / n, c / n);
                if br + bc == 3 && r % n == c % n {
                    I * 0.5
                } else {
                    Complex::new(0.0, 0.0)
                }
            })
        }
        _ => unreachable!("non-group families handled above"),
    }
}

/// For group families, the element `ξ` of the group's own Lie algebra;
/// the space carries `(ξ, -ξ)`.
pub fn factor_xi(family: SpaceFamily) -> Option<ComplexMatrix> {
    let x = match family.tag() {
        FamilyTag::GrpA => {
            let (p, q) = family.pq();
            diagonal_phase_xi(p, q)
        }
        FamilyTag::GrpBd => {
            let (p, q) = family.pq();
            rank_one_xi(p, q)
        }
        FamilyTag::GrpC => half_i_signature_xi(family.n()),
        FamilyTag::GrpD => ComplexMatrix::symplectic_j(family.n()).scale_real(0.5),
        _ => return None,
    };
    Some(x)
}

/// The closed form of `exp(tξ)` for the distinguished element.
pub fn closed_form(tag: FamilyTag) -> ClosedForm {
    match tag {
        FamilyTag::AI | FamilyTag::AII | FamilyTag::GrpA => ClosedForm::DiagonalPhase,
        FamilyTag::BdiRank1 | FamilyTag::GrpBd => ClosedForm::RotationBlock,
        _ => ClosedForm::HalfAngle,
    }
}

/// Residuals of the structural identities of a space.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureCheck {
    pub dim_g: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    /// `max ‖σ²X - X‖` over the basis.
    pub involution: f64,
    /// `max ‖σX ∓ X‖` over the `k` / `p` basis elements.
    pub eigenspaces: f64,
    /// Largest component of `[k,k]` in `p`.
    pub kk_in_k: f64,
    /// Largest component of `[k,p]` in `k`.
    pub kp_in_p: f64,
    /// Largest component of `[p,p]` in `p`.
    pub pp_in_k: f64,
}

impl StructureCheck {
    pub fn passes(&self, eps: f64) -> bool {
        self.dim_k + self.dim_p == self.dim_g
            && [self.involution, self.eigenspaces, self.kk_in_k, self.kp_in_p, self.pp_in_k].iter().all(|&r| r < eps)
    }
}

impl SpaceInstance {
    pub fn family(&self) -> SpaceFamily {
        self.family
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn apply_sigma(&self, x: &ComplexMatrix) -> ComplexMatrix {
        self.sigma.apply(x)
    }

    /// Orthonormal basis of `g`, `k` first.
    pub fn g_basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    pub fn k_basis(&self) -> &[ComplexMatrix] {
        &self.basis[..self.k_dim]
    }

    pub fn p_basis(&self) -> &[ComplexMatrix] {
        &self.basis[self.k_dim..]
    }

    pub fn dim_g(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_k(&self) -> usize {
        self.k_dim
    }

    pub fn dim_p(&self) -> usize {
        self.basis.len() - self.k_dim
    }

    /// 2 for the Spin groups, whose spindle numbers are computed in `SO(n)`.
    pub fn cover_multiplier(&self) -> u64 {
        match self.family.tag() {
            FamilyTag::GrpBd | FamilyTag::GrpD => 2,
            _ => 1,
        }
    }

    pub fn center_order(&self) -> CenterOrder {
        center_order(self.family)
    }

    /// `⟨B_i, x⟩` for every basis element, using the sparsity of the basis.
    pub fn coordinates(&self, x: &ComplexMatrix) -> Vec<f64> {
        let n = self.ambient_dim;
        let data = x.as_slice();
        self.basis
            .iter()
            .zip(&self.supports)
            .map(|(b, supp)| {
                let bd = b.as_slice();
                let mut acc = 0.0;
                for &flat in supp {
                    let (r, c) = (flat / n, flat % n);
                    acc += (bd[flat] * data[c * n + r]).re;
                }
                -acc
            })
            .collect()
    }

    /// `Σ c_i B_i` over the basis of `g`.
    pub fn combine(&self, coeffs: &[f64]) -> ComplexMatrix {
        let n = self.ambient_dim;
        let mut out = ComplexMatrix::zeros(n);
        for ((b, supp), &c) in self.basis.iter().zip(&self.supports).zip(coeffs) {
            if c == 0.0 {
                continue;
            }
            let bd = b.as_slice();
            for &flat in supp {
                out[(flat / n, flat % n)] += bd[flat] * c;
            }
        }
        out
    }

    /// The `k` component `(X + σX)/2`.
    pub fn project_k(&self, x: &ComplexMatrix) -> ComplexMatrix {
        x.lin_comb(0.5, &self.sigma.apply(x), 0.5)
    }

    /// The `p` component `(X - σX)/2`.
    pub fn project_p(&self, x: &ComplexMatrix) -> ComplexMatrix {
        x.lin_comb(0.5, &self.sigma.apply(x), -0.5)
    }

    /// Membership `σξ = -ξ`, as a residual.
    pub fn p_residual(&self, x: &ComplexMatrix) -> f64 {
        (&self.sigma.apply(x) + x).max_abs()
    }

    /// Evaluates σ² = id, the eigenspace split, and bracket closure on the
    /// whole basis.
    pub fn check_structure(&self) -> StructureCheck {
        let mut involution: f64 = 0.0;
        let mut eigenspaces: f64 = 0.0;
        for (idx, x) in self.basis.iter().enumerate() {
            let sx = self.sigma.apply(x);
            involution = involution.max(self.sigma.apply(&sx).distance(x));
            let sign = if idx < self.k_dim { 1.0 } else { -1.0 };
            eigenspaces = eigenspaces.max(sx.lin_comb(1.0, x, -sign).max_abs());
        }
        let n = self.ambient_dim;
        let sparse: Vec<Vec<(usize, usize, Complex)>> = self
            .basis
            .iter()
            .zip(&self.supports)
            .map(|(b, supp)| supp.iter().map(|&f| (f / n, f % n, b.as_slice()[f])).collect())
            .collect();
        let (k, p) = sparse.split_at(self.k_dim);
        let mut scratch = BracketScratch::new(n);
        let mut kk: f64 = 0.0;
        for i in 0..k.len() {
            for j in (i + 1)..k.len() {
                kk = kk.max(scratch.projection_residual(&self.sigma, &k[i], &k[j], -1.0));
            }
        }
        let mut kp: f64 = 0.0;
        for x in k {
            for y in p {
                kp = kp.max(scratch.projection_residual(&self.sigma, x, y, 1.0));
            }
        }
        let mut pp: f64 = 0.0;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                pp = pp.max(scratch.projection_residual(&self.sigma, &p[i], &p[j], -1.0));
            }
        }
        StructureCheck {
            dim_g: self.span_rank,
            dim_k: self.k_dim,
            dim_p: self.dim_p(),
            involution,
            eigenspaces,
            kk_in_k: kk,
            kp_in_p: kp,
            pp_in_k: pp,
        }
    }

    /// Membership of a unitary `g` in the isotropy group `K`.
    pub fn isotropy_contains(&self, g: &ComplexMatrix) -> Result<bool> {
        let n = self.ambient_dim;
        if g.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
        }
        let residual = g.unitary_residual();
        if !(residual < self.tol.eps) {
            return Err(Error::NotUnitary { residual });
        }
        let eps = self.tol.eps;
        let one = Complex::new(1.0, 0.0);
        let commutes = |a: &ComplexMatrix, b: &ComplexMatrix| (a * b).distance(&(b * a)) < eps;
        let split = |p: usize| off_diagonal_blocks(g, p) < eps;
        let contains = match self.family.tag() {
            FamilyTag::AI => g.is_real(eps) && (g.det() - one).norm() < eps,
            FamilyTag::AII => {
                let j = ComplexMatrix::symplectic_j(n / 2);
                (g * &j).distance(&(&j * &g.conj())) < eps
            }
            FamilyTag::AIII => split(n / 2) && (g.det() - one).norm() < eps,
            FamilyTag::BdiRank1 | FamilyTag::BdiSplit => {
                let p = match self.family.tag() {
                    FamilyTag::BdiRank1 => self.family.pq().0,
                    _ => n / 2,
                };
                g.is_real(eps)
                    && split(p)
                    && (g.block(0, 0, p).det() - one).norm() < eps
                    && (g.block(p, p, n - p).det() - one).norm() < eps
            }
            FamilyTag::DIII => g.is_real(eps) && commutes(g, &ComplexMatrix::symplectic_j(n / 2)),
            FamilyTag::CI => {
                let j = ComplexMatrix::symplectic_j(n / 2);
                commutes(g, &j) && (g * &j).distance(&(&j * &g.conj())) < eps
            }
            FamilyTag::CII => {
                let j = ComplexMatrix::symplectic_j(n / 2);
                let Sigma::Signature(s) = &self.sigma else { unreachable!("CII uses a signature") };
                let s = ComplexMatrix::diagonal(&s.iter().map(|&x| Complex::new(x, 0.0)).collect::<Vec<_>>());
                (g * &j).distance(&(&j * &g.conj())) < eps && commutes(g, &s)
            }
            FamilyTag::GrpA | FamilyTag::GrpBd | FamilyTag::GrpC | FamilyTag::GrpD => {
                let half = n / 2;
                split(half) && g.block(0, 0, half).distance(&g.block(half, half, half)) < eps
            }
        };
        Ok(contains)
    }
}

/// Reusable buffers for brackets of sparse matrices.
struct BracketScratch {
    n: usize,
    bracket: Vec<Complex>,
    projected: Vec<Complex>,
    touched: Vec<usize>,
}

impl BracketScratch {
    fn new(n: usize) -> Self {
        let zero = Complex::new(0.0, 0.0);
        Self { n, bracket: alloc::vec![zero; n * n], projected: alloc::vec![zero; n * n], touched: Vec::new() }
    }

    /// Largest entry of `(Z + sign·σZ)/2` for `Z = [X, Y]`: the `k`
    /// component for `sign = 1`, the `p` component for `sign = -1`.
    fn projection_residual(
        &mut self,
        sigma: &Sigma,
        x: &[(usize, usize, Complex)],
        y: &[(usize, usize, Complex)],
        sign: f64,
    ) -> f64 {
        let n = self.n;
        let zero = Complex::new(0.0, 0.0);
        self.touched.clear();
        for &(i, k, a) in x {
            for &(k2, j, b) in y {
                if k == k2 {
                    self.bracket[i * n + j] += a * b;
                    self.touched.push(i * n + j);
                }
                if j == i {
                    self.bracket[k2 * n + k] -= b * a;
                    self.touched.push(k2 * n + k);
                }
            }
        }
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut spots = Vec::with_capacity(2 * self.touched.len());
        for &f in &self.touched {
            let z = self.bracket[f];
            self.bracket[f] = zero;
            let (r, c) = (f / n, f % n);
            self.projected[f] += z * 0.5;
            let (r2, c2, w) = sigma.apply_entry(n, r, c, z);
            self.projected[r2 * n + c2] += w * (0.5 * sign);
            spots.push(f);
            spots.push(r2 * n + c2);
        }
        let mut worst: f64 = 0.0;
        for f in spots {
            worst = worst.max(self.projected[f].norm());
            self.projected[f] = zero;
        }
        worst
    }
}

/// Largest entry outside the diagonal blocks of the `(p, N - p)` split.
fn off_diagonal_blocks(g: &ComplexMatrix, p: usize) -> f64 {
    let n = g.dim();
    let mut r: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if (i < p) != (j < p) {
                r = r.max(g[(i, j)].norm());
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, exp_structured, RationalAngle};

    fn space(tag: FamilyTag, params: &[usize]) -> SpaceInstance {
        build_space(SpaceFamily::from_slice(tag, params).unwrap()).unwrap()
    }

    fn all_small() -> Vec<SpaceFamily> {
        let mut out = Vec::new();
        for tag in FamilyTag::ALL {
            if tag.takes_pair() {
                for (p, q) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
                    out.push(SpaceFamily::pair(tag, p, q).unwrap());
                }
            } else {
                for n in 1..=3 {
                    out.push(SpaceFamily::single(tag, n).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn ai_dimensions() {
        let s = space(FamilyTag::AI, &[1, 2]);
        assert_eq!((s.dim_g(), s.dim_k(), s.dim_p()), (8, 3, 5));
    }

    #[test]
    fn ci_dimensions() {
        let s = space(FamilyTag::CI, &[1]);
        assert_eq!((s.dim_g(), s.dim_k()), (3, 1));
    }

    #[test]
    fn known_dimensions() {
        // (dim g, dim k) from the classical formulas
        let cases: [(FamilyTag, &[usize], usize, usize); 8] = [
            (FamilyTag::AII, &[1, 1], 15, 10),
            (FamilyTag::AIII, &[2], 15, 7),
            (FamilyTag::BdiRank1, &[2, 3], 10, 4),
            (FamilyTag::BdiSplit, &[3], 15, 6),
            (FamilyTag::DIII, &[1], 6, 4),
            (FamilyTag::CII, &[1], 10, 6),
            (FamilyTag::GrpA, &[1, 2], 16, 8),
            (FamilyTag::GrpC, &[2], 20, 10),
        ];
        for (tag, params, g, k) in cases {
            let s = space(tag, params);
            assert_eq!((s.dim_g(), s.dim_k()), (g, k), "{tag}");
        }
    }

    #[test]
    fn structure_of_small_spaces() {
        for fam in all_small() {
            let s = build_space(fam).unwrap();
            let check = s.check_structure();
            assert!(check.passes(1e-9), "{fam}: {check:?}");
            assert_eq!(check.dim_g, s.dim_g());
            for x in s.g_basis() {
                assert!(x.is_anti_hermitian(1e-12));
            }
        }
    }

    #[test]
    fn canonical_elements_lie_in_p() {
        for fam in all_small() {
            let s = build_space(fam).unwrap();
            let xi = canonical_xi(fam);
            assert!(s.p_residual(&xi) < 1e-12, "{fam}");
            assert!(xi.is_anti_hermitian(1e-15));
        }
    }

    #[test]
    fn canonical_xi_exact_forms() {
        let xi = canonical_xi(SpaceFamily::pair(FamilyTag::AI, 1, 5).unwrap());
        assert!((xi[(0, 0)] - I * (-5.0 / 6.0)).norm() < 1e-15);
        for k in 1..6 {
            assert!((xi[(k, k)] - I * (1.0 / 6.0)).norm() < 1e-15);
        }
        for n in 1..4 {
            let xi = canonical_xi(SpaceFamily::single(FamilyTag::AIII, n).unwrap());
            let sq = &xi * &xi;
            assert!(sq.distance(&ComplexMatrix::identity(2 * n).scale_real(-0.25)) < 1e-15);
        }
        for (p, q) in [(1, 1), (1, 4), (3, 3)] {
            let xi = canonical_xi(SpaceFamily::pair(FamilyTag::BdiRank1, p, q).unwrap());
            let cube = &(&xi * &xi) * &xi;
            assert!((&cube + &xi).max_abs() < 1e-15);
        }
    }

    #[test]
    fn identity_in_every_isotropy_group() {
        for fam in all_small() {
            let s = build_space(fam).unwrap();
            assert!(s.isotropy_contains(&ComplexMatrix::identity(s.ambient_dim())).unwrap(), "{fam}");
        }
    }

    #[test]
    fn minus_identity_in_aiii() {
        for n in 1..4 {
            let s = space(FamilyTag::AIII, &[n]);
            assert!(s.isotropy_contains(&ComplexMatrix::identity(2 * n).scale_real(-1.0)).unwrap());
        }
    }

    #[test]
    fn ai_phase_matrix_not_in_so() {
        let s = space(FamilyTag::AI, &[1, 5]);
        let a = -5.0 / 6.0 * core::f64::consts::PI;
        let b = 1.0 / 6.0 * core::f64::consts::PI;
        let entries: Vec<Complex> = (0..6)
            .map(|k| if k == 0 { Complex::new(a.cos(), a.sin()) } else { Complex::new(b.cos(), b.sin()) })
            .collect();
        assert!(!s.isotropy_contains(&ComplexMatrix::diagonal(&entries)).unwrap());
    }

    #[test]
    fn isotropy_rejects_bad_input() {
        let s = space(FamilyTag::AI, &[1, 2]);
        assert!(matches!(s.isotropy_contains(&ComplexMatrix::identity(2)), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            s.isotropy_contains(&ComplexMatrix::identity(3).scale_real(2.0)),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn isotropy_commutes_with_sigma() {
        for fam in all_small() {
            let s = build_space(fam).unwrap();
            let xi = canonical_xi(fam);
            let form = closed_form(fam.tag());
            for k in 0..=8 {
                let g = exp_structured(&xi, RationalAngle::integer(k), form, 1e-9).unwrap().matrix;
                if !s.isotropy_contains(&g).unwrap() {
                    continue;
                }
                for x in s.g_basis() {
                    let lhs = s.apply_sigma(&x.conjugate_by(&g));
                    let rhs = s.apply_sigma(x).conjugate_by(&g);
                    assert!(lhs.distance(&rhs) < 1e-9, "{fam} k={k}");
                }
            }
        }
    }

    #[test]
    fn sparse_bracket_projection_matches_dense() {
        for fam in [SpaceFamily::single(FamilyTag::CII, 1).unwrap(), SpaceFamily::pair(FamilyTag::AII, 1, 1).unwrap()] {
            let s = build_space(fam).unwrap();
            let n = s.ambient_dim();
            let sparse: Vec<Vec<(usize, usize, Complex)>> = s
                .g_basis()
                .iter()
                .map(|b| b.support().into_iter().map(|f| (f / n, f % n, b.as_slice()[f])).collect())
                .collect();
            let mut scratch = BracketScratch::new(n);
            for (a, xa) in s.g_basis().iter().zip(&sparse).step_by(3) {
                for (b, xb) in s.g_basis().iter().zip(&sparse).step_by(2) {
                    let z = commutator(a, b).unwrap();
                    let dense_k = s.project_k(&z).max_abs();
                    let dense_p = s.project_p(&z).max_abs();
                    assert!((scratch.projection_residual(s.sigma(), xa, xb, 1.0) - dense_k).abs() < 1e-14);
                    assert!((scratch.projection_residual(s.sigma(), xa, xb, -1.0) - dense_p).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn structure_check_notices_a_wrong_involution() {
        let mut s = space(FamilyTag::AI, &[1, 2]);
        s.sigma = Sigma::block_signature(1, 2);
        assert!(!s.check_structure().passes(1e-9));
    }

    #[test]
    fn coordinates_match_dense_inner_products() {
        let s = space(FamilyTag::CII, &[1]);
        let xi = canonical_xi(s.family());
        let y = commutator(&xi, &s.k_basis()[2]).unwrap();
        let coords = s.coordinates(&y);
        for (b, c) in s.g_basis().iter().zip(&coords) {
            assert!((b.inner(&y) - c).abs() < 1e-14);
        }
    }
}
