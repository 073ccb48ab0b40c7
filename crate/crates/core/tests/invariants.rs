use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spindles_core::linalg::{exp_generic, exp_structured, subspace_rank, ComplexMatrix, RationalAngle};
use spindles_core::spaces::{
    closed_form, so_span, sp_span, sp_torus, su_span, su_torus, torus_center_order, FamilyTag, Params,
};
use spindles_core::spindle::{
    ad_eigenvalues, cartan_split, is_canonical, is_extrinsically_symmetric_type, jacobi_norm_sq, normalize_canonical,
    slice_dimension, uniform_components,
};
use spindles_core::{ad_spectrum, build_space, canonical_xi, spindle_number, Complex, SpaceFamily, SpaceInstance};

fn every_family(cap: usize) -> Vec<SpaceFamily> {
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        if tag.takes_pair() {
            for p in 1..=cap {
                for q in p..=cap {
                    out.push(SpaceFamily::pair(tag, p, q).unwrap());
                }
            }
        } else {
            for n in 1..=cap {
                out.push(SpaceFamily::single(tag, n).unwrap());
            }
        }
    }
    out
}

fn random_in(space: &SpaceInstance, rng: &mut ChaCha8Rng, k_part: bool) -> ComplexMatrix {
    let basis = if k_part { space.k_basis() } else { space.p_basis() };
    let mut x = ComplexMatrix::zeros(space.ambient_dim());
    for b in basis {
        x.axpy(rng.gen_range(-1.0..1.0), b);
    }
    x
}

#[test]
fn rational_angle_predicates_on_a_million_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut wrong = 0;
    for _ in 0..1_000_000 {
        let den: i64 = rng.gen_range(1..=2000);
        // bias toward multiples so every branch is exercised
        let num: i64 =
            if rng.gen_bool(0.3) { den * rng.gen_range(-50..=50) } else { rng.gen_range(-1_000_000..=1_000_000) };
        let t = RationalAngle::new(num, den).unwrap();
        let integer = num % den == 0;
        let even = num % (2 * den) == 0;
        let odd = integer && (num / den) % 2 != 0;
        if t.sin_is_zero() != integer || t.cos_is_one() != even || t.cos_is_minus_one() != odd {
            wrong += 1;
        }
    }
    assert_eq!(wrong, 0);
}

#[test]
fn exponential_paths_agree_up_to_eight() {
    let mut worst: f64 = 0.0;
    for fam in every_family(8) {
        let xi = canonical_xi(fam);
        for k in 0..=24 {
            let t = RationalAngle::new(k, 6).unwrap();
            let a = exp_structured(&xi, t, closed_form(fam.tag()), 1e-9).unwrap().matrix;
            let b = exp_generic(&xi, t.radians(), 1e-9).unwrap();
            assert!(a.is_unitary(1e-9), "{fam}");
            worst = worst.max(a.distance(&b));
        }
    }
    assert!(worst <= 1e-9, "{worst:e}");
}

/// Times `qπ` at which `exp(qπξ)` lies in the isotropy group, written out
/// family by family from the shape of `ξ`.
fn expected_member(fam: SpaceFamily, t: RationalAngle) -> bool {
    let q = t.ratio();
    let int = |r: num_rational::Ratio<i64>| r.is_integer();
    let pair_phases = |p: usize, q_: usize| {
        let s = (p + q_) as i64;
        (num_rational::Ratio::new(-(q_ as i64), s), num_rational::Ratio::new(p as i64, s))
    };
    match (fam.tag(), fam.params()) {
        (FamilyTag::AI | FamilyTag::AII | FamilyTag::GrpA, Params::Pair(p, q_)) => {
            let (a, b) = pair_phases(p, q_);
            int(q * a) && int(q * b)
        }
        (FamilyTag::AIII | FamilyTag::DIII | FamilyTag::CI | FamilyTag::CII, _) => int(q / 2),
        (FamilyTag::BdiSplit, Params::Single(n)) => int(q / 4) || (int(q / 2) && n % 2 == 0),
        (FamilyTag::BdiRank1, _) => int(q / 2),
        (FamilyTag::GrpC | FamilyTag::GrpD, _) => int(q / 2),
        (FamilyTag::GrpBd, _) => int(q),
        _ => unreachable!(),
    }
}

#[test]
fn isotropy_scan_matches_stated_conditions() {
    for fam in every_family(8) {
        let space = build_space(fam).unwrap();
        let xi = canonical_xi(fam);
        for k in 0..=48 {
            let t = RationalAngle::new(k, 6).unwrap();
            let g = exp_structured(&xi, t, closed_form(fam.tag()), 1e-9).unwrap().matrix;
            assert_eq!(space.isotropy_contains(&g).unwrap(), expected_member(fam, t), "{fam} at {t}");
        }
    }
}

#[test]
fn methods_agree_up_to_eight() {
    for fam in SpaceFamily::table(8) {
        let space = build_space(fam).unwrap();
        let r = spindle_number(&space, &canonical_xi(fam)).unwrap();
        assert_eq!(r.method_exact, Some(r.method_numeric), "{fam}");
        assert_eq!(r.lambda, r.closed_form, "{fam}");
        assert!(r.all_checks_pass(), "{fam}: {:?}", r.checks);
        assert_eq!(r.geodesic_length_over_norm, RationalAngle::integer(r.lambda as i64));
    }
}

#[test]
fn spectra_of_random_elements_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fam in every_family(3) {
        let space = build_space(fam).unwrap();
        if space.dim_p() == 0 {
            continue;
        }
        for _ in 0..3 {
            let x = random_in(&space, &mut rng, false);
            let vals = ad_eigenvalues(&space, &x).unwrap();
            let n = vals.len();
            for i in 0..n {
                assert!((vals[i] + vals[n - 1 - i]).abs() < 1e-9, "{fam}");
            }
        }
    }
}

#[test]
fn random_elements_are_not_extrinsically_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let space = build_space(SpaceFamily::pair(FamilyTag::AI, 2, 3).unwrap()).unwrap();
    for _ in 0..10 {
        let x = random_in(&space, &mut rng, false);
        assert!(!is_extrinsically_symmetric_type(&space, &x).unwrap());
    }
}

#[test]
fn scaling_covariance() {
    for fam in SpaceFamily::table(3) {
        let space = build_space(fam).unwrap();
        let xi = canonical_xi(fam);
        let base = ad_spectrum(&space, &xi).unwrap();
        for c in [0.5, 2.0, 3.0, 7.0] {
            let scaled = ad_spectrum(&space, &xi.scale_real(c)).unwrap();
            for (a, b) in scaled.frequencies.iter().zip(&base.frequencies) {
                assert!((a - c * b).abs() < 1e-9, "{fam}");
            }
            let back = normalize_canonical(&space, &xi.scale_real(c)).unwrap();
            assert!(is_canonical(&ad_spectrum(&space, &back).unwrap()).unwrap());
            assert!(back.distance(&xi) < 1e-9, "{fam}");
        }
    }
}

#[test]
fn spindle_number_is_constant_on_isotropy_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for fam in SpaceFamily::table(3) {
        let space = build_space(fam).unwrap();
        let xi = canonical_xi(fam);
        let lambda = spindle_number(&space, &xi).unwrap().lambda;
        for _ in 0..2 {
            let k = exp_generic(&random_in(&space, &mut rng, true), 1.0, 1e-9).unwrap();
            assert!(space.isotropy_contains(&k).unwrap());
            let moved = xi.conjugate_by(&k);
            let r = spindle_number(&space, &moved).unwrap();
            assert_eq!(r.lambda, lambda, "{fam}");
        }
    }
}

#[test]
fn multi_frequency_element_has_knots_exactly_at_integer_multiples_of_pi() {
    // diagonal element of the maximal flat of AI(2,2) with frequencies 1..4
    let space = build_space(SpaceFamily::pair(FamilyTag::AI, 2, 2).unwrap()).unwrap();
    let i = Complex::new(0.0, 1.0);
    let x = ComplexMatrix::diagonal(&[i * 2.0, i, -i, i * -2.0]);
    let xi = normalize_canonical(&space, &x).unwrap();
    let split = cartan_split(&space, &xi).unwrap();
    let spec = &split.spectrum;
    assert_eq!(spec.integer_frequencies().unwrap(), vec![1, 2, 3, 4]);
    let comps = uniform_components(spec);
    for k in -240i64..=240 {
        let t = k as f64 * std::f64::consts::PI / 60.0;
        let j = jacobi_norm_sq(spec, &comps, t).unwrap();
        assert_eq!(j <= 1e-15, k % 60 == 0, "k = {k}: {j:e}");
        // dimension is symmetric about every knot
        let d = slice_dimension(&split, t, 1e-9);
        assert_eq!(d, slice_dimension(&split, -t, 1e-9));
    }
    // at a knot every Jacobi field vanishes
    let at_pi: Vec<ComplexMatrix> = split
        .p_nu
        .iter()
        .zip(spec.nonzero())
        .flat_map(|(vs, &nu)| vs.iter().map(move |v| v.scale_real((nu * std::f64::consts::PI).sin() / nu)))
        .collect();
    assert_eq!(subspace_rank(&at_pi, 1e-9).unwrap(), 0);
    let r = spindle_number(&space, &xi).unwrap();
    assert_eq!(r.method_exact, None);
    assert!(r.lambda >= 1);
}

#[test]
fn center_orders_match_torus_kernels() {
    for n in 2..=6 {
        let oracle = torus_center_order(&su_span(n), &su_torus(n), 2 * n as i64);
        let fam = SpaceFamily::pair(FamilyTag::GrpA, 1, n - 1).unwrap();
        assert_eq!(build_space(fam).unwrap().center_order().order(), Some(oracle as u64));
    }
    for m in 1..=4 {
        let oracle = torus_center_order(&sp_span(m), &sp_torus(m), 4);
        let fam = SpaceFamily::single(FamilyTag::GrpC, m).unwrap();
        assert_eq!(build_space(fam).unwrap().center_order().order(), Some(oracle as u64));
    }
    // SO(2m+1) is centerless; the Spin double cover has center Z_2
    assert_eq!(torus_center_order(&so_span(3), &[vec![1, -1, 0]], 4), 1);
}

#[test]
fn divisibility_holds_wherever_a_center_is_configured() {
    for fam in SpaceFamily::table(6) {
        let space = build_space(fam).unwrap();
        let r = spindle_number(&space, &canonical_xi(fam)).unwrap();
        if let Some(z) = r.center_order.order() {
            assert!(r.checks["center_divisibility"], "{fam}: lambda {} z {z}", r.lambda);
        }
    }
}

fn anti_hermitian(entries: &[(f64, f64)], n: usize) -> ComplexMatrix {
    let m = ComplexMatrix::from_fn(n, |r, c| {
        let (a, b) = entries[r * n + c];
        Complex::new(a, b)
    });
    m.lin_comb(0.5, &m.adjoint(), -0.5)
}

proptest! {
    #[test]
    fn exponentials_are_unitary_one_parameter_groups(
        entries in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 16),
        t1 in -5.0f64..5.0,
        t2 in -5.0f64..5.0,
    ) {
        let a = anti_hermitian(&entries, 4);
        let e1 = exp_generic(&a, t1, 1e-9).unwrap();
        let e2 = exp_generic(&a, t2, 1e-9).unwrap();
        prop_assert!(e1.is_unitary(1e-9));
        prop_assert!((&e1 * &e2).distance(&exp_generic(&a, t1 + t2, 1e-9).unwrap()) < 1e-9);
    }

    #[test]
    fn structured_group_law(k1 in -40i64..40, k2 in -40i64..40, d in 1i64..13, n in 1usize..4) {
        let fam = SpaceFamily::single(FamilyTag::CII, n).unwrap();
        let xi = canonical_xi(fam);
        let form = closed_form(fam.tag());
        let (t1, t2) = (RationalAngle::new(k1, d).unwrap(), RationalAngle::new(k2, d).unwrap());
        let e1 = exp_structured(&xi, t1, form, 1e-9).unwrap().matrix;
        let e2 = exp_structured(&xi, t2, form, 1e-9).unwrap().matrix;
        let e12 = exp_structured(&xi, t1 + t2, form, 1e-9).unwrap().matrix;
        prop_assert!(e1.is_unitary(1e-9));
        prop_assert!((&e1 * &e2).distance(&e12) < 1e-9);
    }

    #[test]
    fn commutator_is_antisymmetric(
        a in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 9),
        b in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 9),
    ) {
        let (x, y) = (anti_hermitian(&a, 3), anti_hermitian(&b, 3));
        let xy = spindles_core::linalg::commutator(&x, &y).unwrap();
        let yx = spindles_core::linalg::commutator(&y, &x).unwrap();
        prop_assert!((&xy + &yx).max_abs() < 1e-12);
    }
}

#[test]
fn so_span_dimensions() {
    for n in 2..=6 {
        assert_eq!(subspace_rank(&so_span(n), 1e-9).unwrap(), n * (n - 1) / 2);
    }
}
