//! Spindle numbers and the propositional checks around them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;

use super::profile::spectrum_slice_dimension;
use super::spectrum::{ad_cube_residual, decompose, is_canonical, AdSpectrum};
use crate::linalg::{
    approximate_rational, exp_generic, exp_structured, hermitian_eigen, ClosedForm, ComplexMatrix, RationalAngle,
};
use crate::spaces::{canonical_xi, CenterOrder, FamilyTag, SpaceFamily, SpaceInstance};
use crate::{Complex, Error, Result};

/// Largest denominator accepted for an eigen-phase of `ξ`.
const PHASE_MAX_DEN: i64 = 1000;
/// Slice dimensions are sampled every `π / GRID_DIVISIONS`.
pub const GRID_DIVISIONS: i64 = 12;

/// Everything computed about the closed geodesic `γ_ξ`.
#[derive(Clone, Debug)]
pub struct SpindleReport {
    pub family: SpaceFamily,
    pub lambda: u64,
    /// The per-family rational-angle computation. `None` when `ξ` does not
    /// have the spectrum of the distinguished element, where no closed
    /// formula applies.
    pub method_exact: Option<u64>,
    /// First return of `exp(nπξ)` to the isotropy group, times the cover
    /// multiplier.
    pub method_numeric: u64,
    /// The table formula, from integer arithmetic alone.
    pub closed_form: u64,
    pub cover_multiplier: u64,
    /// The bound `n_max = 2·lcm(denominators of the eigen-phases of ξ)`.
    pub search_bound: u64,
    pub spectrum: AdSpectrum,
    /// `nπ` for `0 ≤ n < λ`.
    pub knot_times: Vec<RationalAngle>,
    /// `(n + ½)π` for `0 ≤ n < λ`.
    pub centriole_times: Vec<RationalAngle>,
    /// `(t, dim M^ξ_t)` for `t` on a grid of step `π/12` over `[0, λπ]`.
    pub slice_dim: Vec<(RationalAngle, usize)>,
    /// `λπ`; the geodesic has length `λπ|ξ|`.
    pub geodesic_length_over_norm: RationalAngle,
    pub center_order: CenterOrder,
    pub checks: BTreeMap<&'static str, bool>,
}

impl SpindleReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

/// The table value of `λ` by integer arithmetic.
pub fn closed_form_lambda(family: SpaceFamily) -> u64 {
    match family.tag() {
        FamilyTag::AI | FamilyTag::AII | FamilyTag::GrpA => {
            let (p, q) = family.pq();
            ((p + q) / p.gcd(&q)) as u64
        }
        FamilyTag::BdiSplit => {
            if family.n() % 2 == 0 {
                2
            } else {
                4
            }
        }
        FamilyTag::GrpD => 4,
        FamilyTag::AIII
        | FamilyTag::BdiRank1
        | FamilyTag::DIII
        | FamilyTag::CI
        | FamilyTag::CII
        | FamilyTag::GrpBd
        | FamilyTag::GrpC => 2,
    }
}

/// `exp(nπξ) ∈ K` for the distinguished element, decided with exact
/// rational angles.
fn exact_membership(family: SpaceFamily, n: i64) -> bool {
    let t = RationalAngle::integer(n);
    match family.tag() {
        FamilyTag::AI | FamilyTag::AII => {
            // diag(e^{inπa}, e^{inπb}) is real
            let (p, q) = family.pq();
            let s = (p + q) as i64;
            (t * Ratio::new(-(q as i64), s)).sin_is_zero() && (t * Ratio::new(p as i64, s)).sin_is_zero()
        }
        FamilyTag::GrpA => {
            // exp(2nπξ₀) = I
            let (p, q) = family.pq();
            let s = (p + q) as i64;
            (t * Ratio::new(-2 * q as i64, s)).cos_is_one() && (t * Ratio::new(2 * p as i64, s)).cos_is_one()
        }
        // cos(nπ/2)·I + 2 sin(nπ/2)·ξ lies in K only on the scalar part
        FamilyTag::AIII | FamilyTag::DIII | FamilyTag::CI | FamilyTag::CII => t.half().sin_is_zero(),
        // ±I_n must have determinant one on each n × n block
        FamilyTag::BdiSplit => t.half().sin_is_zero() && (t.half().cos_is_one() || family.n() % 2 == 0),
        // the rotation by nπ must be trivial on the (1, p+1) plane
        FamilyTag::BdiRank1 => t.sin_is_zero() && t.cos_is_one(),
        // exp(2nπξ₀) = cos(nπ)·I + 2 sin(nπ)·ξ₀
        FamilyTag::GrpC | FamilyTag::GrpD => t.cos_is_one(),
        // rotation by 2nπ
        FamilyTag::GrpBd => (t * 2).cos_is_one(),
    }
}

/// The spindle number of the distinguished element by rational-angle
/// arithmetic, cover multiplier included.
pub fn exact_lambda(space: &SpaceInstance) -> Result<u64> {
    let family = space.family();
    let bound = 4 * space.ambient_dim() as u64 + 4;
    let n =
        (1..=bound).find(|&n| exact_membership(family, n as i64)).ok_or(Error::NoMembershipFound { n_max: bound })?;
    Ok(n * space.cover_multiplier())
}

/// `exp(tπ·ξ)` by the closed form `ξ` satisfies, or by eigendecomposition.
fn exp_pi(xi: &ComplexMatrix, t: RationalAngle, eps: f64) -> Result<ComplexMatrix> {
    match ClosedForm::detect(xi, eps) {
        Some(form) => Ok(exp_structured(xi, t, form, eps)?.matrix),
        None => exp_generic(xi, t.radians(), eps),
    }
}

/// Eigen-phases `θ` of `ξ` (eigenvalues `iθ`), ascending.
fn eigen_phases(xi: &ComplexMatrix) -> Result<Vec<f64>> {
    let h = xi.scale(Complex::new(0.0, 1.0));
    let h = h.lin_comb(0.5, &h.adjoint(), 0.5);
    // iξ has eigenvalues -θ
    let mut phases: Vec<f64> = hermitian_eigen(&h)?.values.iter().map(|v| -v).collect();
    phases.sort_by(f64::total_cmp);
    Ok(phases)
}

/// `2·lcm` of the denominators of the eigen-phases, so `exp(n_max·πξ) = I`.
fn search_bound(phases: &[f64], eps: f64) -> Result<u64> {
    let mut den: i64 = 1;
    for &phase in phases {
        let r = approximate_rational(phase, PHASE_MAX_DEN, eps).ok_or(Error::IrrationalPhase { phase })?;
        den = den.lcm(r.denom());
    }
    Ok(2 * den as u64)
}

/// `λ(M, ξ)` by first return to the isotropy group, cross-checked against
/// exact arithmetic and the table formula.
pub fn spindle_number(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<SpindleReport> {
    let tol = space.tol();
    let eps = tol.eps;
    let family = space.family();
    let spectrum = decompose(space, xi)?.spectrum;
    if !is_canonical(&spectrum)? {
        return Err(Error::NotCanonical);
    }

    let phases = eigen_phases(xi)?;
    let n_max = search_bound(&phases, eps)?;
    let cover = space.cover_multiplier();
    let mut base = None;
    let mut memberships = Vec::new();
    for n in 1..=n_max {
        let g = exp_pi(xi, RationalAngle::integer(n as i64), eps)?;
        let inside = space.isotropy_contains(&g)?;
        memberships.push(inside);
        if inside {
            base = Some(n);
            break;
        }
    }
    let base = base.ok_or(Error::NoMembershipFound { n_max })?;
    let method_numeric = base * cover;

    let canonical_phases = eigen_phases(&canonical_xi(family))?;
    let exact_applies = phases.iter().zip(&canonical_phases).all(|(a, b)| (a - b).abs() < eps);
    let method_exact = if exact_applies { Some(exact_lambda(space)?) } else { None };
    if let Some(exact) = method_exact {
        if exact != method_numeric {
            return Err(Error::MethodMismatch { exact, numeric: method_numeric });
        }
    }
    let lambda = method_numeric;
    let closed_form = closed_form_lambda(family);

    let mut checks = BTreeMap::new();
    checks.insert("lambda_positive", lambda >= 1);
    if let Some(exact) = method_exact {
        checks.insert("methods_agree", exact == method_numeric);
        checks.insert("closed_form_agrees", closed_form == lambda);
    }
    checks.insert("extrinsically_symmetric", ad_cube_residual(space, xi)? < eps);
    let center_order = space.center_order();
    if let Some(z) = center_order.order() {
        checks.insert("center_divisibility", center_divisibility_check(lambda, z));
    }
    let adjoint = adjoint_involution_flags(space, xi)?;
    checks.insert("adjoint_order_two", adjoint.order_two);
    checks.insert("adjoint_commutes_with_sigma", adjoint.commutes_with_sigma);

    if let Some(form) = ClosedForm::detect(xi, eps) {
        let mut worst: f64 = 0.0;
        for n in 1..=base as i64 {
            let t = RationalAngle::integer(n);
            let structured = exp_structured(xi, t, form, eps)?.matrix;
            worst = worst.max(structured.distance(&exp_generic(xi, t.radians(), eps)?));
        }
        checks.insert("exp_cross_check", worst <= 1e-9);
    }

    if family.tag().is_group() {
        let half = space.ambient_dim() / 2;
        let xi0 = xi.block(0, 0, half);
        let mut agree = xi.block(half, half, half).distance(&xi0.scale_real(-1.0)) < eps;
        for (idx, &inside) in memberships.iter().enumerate() {
            let g2 = exp_pi(&xi0, RationalAngle::integer(2 * (idx as i64 + 1)), eps)?;
            agree &= (g2.distance(&ComplexMatrix::identity(half)) < eps) == inside;
        }
        checks.insert("group_reduction_agrees", agree);
    }

    let knot_times: Vec<RationalAngle> = (0..lambda as i64).map(RationalAngle::integer).collect();
    let half = RationalAngle::new(1, 2)?;
    let centriole_times: Vec<RationalAngle> = knot_times.iter().map(|&t| t + half).collect();
    checks.insert(
        "knots_degenerate",
        knot_times.iter().all(|&t| spectrum_slice_dimension(&spectrum, t) == 0)
            && centriole_times.iter().all(|&t| spectrum_slice_dimension(&spectrum, t) > 0),
    );
    let slice_dim = (0..=GRID_DIVISIONS * lambda as i64)
        .map(|k| {
            let t = RationalAngle::new(k, GRID_DIVISIONS).expect("positive denominator");
            (t, spectrum_slice_dimension(&spectrum, t))
        })
        .collect();

    Ok(SpindleReport {
        family,
        lambda,
        method_exact,
        method_numeric,
        closed_form,
        cover_multiplier: cover,
        search_bound: n_max,
        spectrum,
        knot_times,
        centriole_times,
        slice_dim,
        geodesic_length_over_norm: RationalAngle::integer(lambda as i64),
        center_order,
        checks,
    })
}

/// `λ` of a product space: the least common multiple of the factors.
pub fn product_spindle(lambda1: u64, lambda2: u64) -> Result<u64> {
    if lambda1 == 0 || lambda2 == 0 {
        return Err(Error::Invalid("spindle numbers are at least 1".into()));
    }
    Ok(lambda1.lcm(&lambda2))
}

/// `λ | 2z`, and `λ | z` when `λ` is odd.
pub fn center_divisibility_check(lambda: u64, z: u64) -> bool {
    lambda > 0 && z > 0 && (2 * z) % lambda == 0 && (lambda % 2 == 0 || z % lambda == 0)
}

/// Properties of `Ad(exp(πξ))` on `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjointFlags {
    /// `Ad(exp(πξ))² = id`.
    pub order_two: bool,
    /// `Ad(exp(πξ))` commutes with `σ`.
    pub commutes_with_sigma: bool,
}

/// Evaluates [`AdjointFlags`] for any `ξ ∈ p`.
pub fn adjoint_involution_flags(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<AdjointFlags> {
    let eps = space.tol().eps;
    let g = exp_pi(xi, RationalAngle::integer(1), eps)?;
    let g2 = &g * &g;
    let mut order_two = true;
    let mut commutes = true;
    for x in space.g_basis() {
        order_two &= x.conjugate_by(&g2).distance(x) < eps;
        let lhs = space.apply_sigma(&x.conjugate_by(&g));
        let rhs = space.apply_sigma(x).conjugate_by(&g);
        commutes &= lhs.distance(&rhs) < eps;
    }
    Ok(AdjointFlags { order_two, commutes_with_sigma: commutes })
}

/// Certifies that `exp(πξ)` acts on `g` as an involution commuting with
/// `σ`, so the geodesic closes after one knot in the adjoint space.
pub fn adjoint_space_check(space: &SpaceInstance, xi: &ComplexMatrix) -> Result<bool> {
    if !is_canonical(&decompose(space, xi)?.spectrum)? {
        return Err(Error::NotCanonical);
    }
    let flags = adjoint_involution_flags(space, xi)?;
    Ok(flags.order_two && flags.commutes_with_sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::build_space;

    fn report(tag: FamilyTag, params: &[usize]) -> SpindleReport {
        let fam = SpaceFamily::from_slice(tag, params).unwrap();
        let space = build_space(fam).unwrap();
        spindle_number(&space, &canonical_xi(fam)).unwrap()
    }

    #[test]
    fn extremal_example() {
        let r = report(FamilyTag::AI, &[1, 5]);
        assert_eq!(r.lambda, 6);
        assert_eq!(r.method_exact, Some(6));
        assert_eq!(r.center_order.order(), Some(3));
        assert!(r.all_checks_pass(), "{:?}", r.checks);
        assert_eq!(r.knot_times.len(), 6);
        assert_eq!(r.geodesic_length_over_norm, RationalAngle::integer(6));
    }

    #[test]
    fn split_parity() {
        assert_eq!(report(FamilyTag::BdiSplit, &[3]).lambda, 4);
        assert_eq!(report(FamilyTag::BdiSplit, &[4]).lambda, 2);
    }

    #[test]
    fn footnote_formula_example() {
        let r = report(FamilyTag::AI, &[2, 4]);
        assert_eq!((r.lambda, r.method_exact, r.closed_form), (3, Some(3), 3));
    }

    #[test]
    fn spin_families_double() {
        let r = report(FamilyTag::GrpBd, &[1, 2]);
        assert_eq!((r.lambda, r.cover_multiplier), (2, 2));
        let r = report(FamilyTag::GrpD, &[2]);
        assert_eq!(r.lambda, 4);
        assert!(r.all_checks_pass(), "{:?}", r.checks);
    }

    #[test]
    fn closed_forms() {
        let f = |tag, params: &[usize]| closed_form_lambda(SpaceFamily::from_slice(tag, params).unwrap());
        assert_eq!(f(FamilyTag::GrpA, &[3, 3]), 2);
        assert_eq!(f(FamilyTag::AII, &[1, 1]), 2);
        assert_eq!(f(FamilyTag::GrpD, &[5]), 4);
        assert_eq!(f(FamilyTag::AI, &[2, 3]), 5);
    }

    #[test]
    fn products_and_divisibility() {
        assert_eq!(product_spindle(2, 3).unwrap(), 6);
        assert_eq!(product_spindle(1, 7).unwrap(), 7);
        assert_eq!(product_spindle(4, 6).unwrap(), 12);
        assert!(product_spindle(0, 2).is_err());
        assert!(center_divisibility_check(6, 3));
        assert!(center_divisibility_check(3, 3));
        assert!(!center_divisibility_check(4, 1));
        assert!(!center_divisibility_check(3, 6 / 2 + 1));
    }

    #[test]
    fn adjoint_checks() {
        let fam = SpaceFamily::pair(FamilyTag::AI, 1, 2).unwrap();
        let s = build_space(fam).unwrap();
        let xi = canonical_xi(fam);
        assert!(adjoint_space_check(&s, &xi).unwrap());
        let halved = adjoint_involution_flags(&s, &xi.scale_real(0.5)).unwrap();
        assert!(!halved.order_two);
        assert!(adjoint_involution_flags(&s, &xi.scale_real(2.0)).unwrap().order_two);
        assert!(matches!(adjoint_space_check(&s, &xi.scale_real(2.0)), Err(Error::NotCanonical)));
    }

    #[test]
    fn scaled_element_is_rejected() {
        let fam = SpaceFamily::single(FamilyTag::CI, 2).unwrap();
        let s = build_space(fam).unwrap();
        assert!(matches!(spindle_number(&s, &canonical_xi(fam).scale_real(0.5)), Err(Error::NotCanonical)));
    }

    #[test]
    fn degenerate_circle_rejected() {
        let fam = SpaceFamily::pair(FamilyTag::BdiRank1, 1, 1).unwrap();
        let s = build_space(fam).unwrap();
        assert!(matches!(spindle_number(&s, &canonical_xi(fam)), Err(Error::DegenerateSpectrum)));
    }
}
