use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spindles_core::linalg::{exp_generic, ComplexMatrix, Tolerance};
use spindles_core::spaces::build_space_with;
use spindles_core::spindle::{ad_eigenvalues, adjoint_space_check, cartan_split, is_canonical, product_spindle};
use spindles_core::{ad_spectrum, canonical_xi, spindle_number, SpaceFamily, SpaceInstance};

use crate::Failure;

const SEED: u64 = 0x5eed;
const SPLIT_SAMPLES: usize = 24;

#[derive(Default)]
struct Tally {
    counts: BTreeMap<String, (usize, usize)>,
    failures: Vec<String>,
    /// Checks that could not run, with how often.
    skipped: BTreeMap<String, usize>,
}

impl Tally {
    fn record(&mut self, check: &str, subject: &str, ok: bool) {
        let entry = self.counts.entry(check.to_string()).or_default();
        entry.1 += 1;
        if ok {
            entry.0 += 1;
        } else {
            self.failures.push(format!("{check} [{subject}]"));
        }
    }

    /// Records an `Err` as a failure of `check`, with the error message.
    fn record_result(&mut self, check: &str, subject: &str, result: spindles_core::Result<bool>) {
        match result {
            Ok(ok) => self.record(check, subject, ok),
            Err(e) => self.record(check, &format!("{subject}: {e}"), false),
        }
    }
}

fn random_isotropy_element(space: &SpaceInstance, rng: &mut ChaCha8Rng) -> spindles_core::Result<ComplexMatrix> {
    let mut x = ComplexMatrix::zeros(space.ambient_dim());
    for b in space.k_basis() {
        x.axpy(rng.gen_range(-1.0..1.0), b);
    }
    exp_generic(&x, 1.0, space.tol().eps)
}

fn check_space(
    family: SpaceFamily,
    scale: f64,
    tol: Tolerance,
    rng: &mut ChaCha8Rng,
    tally: &mut Tally,
) -> Option<u64> {
    let name = family.to_string();
    let eps = tol.eps;
    let space = match build_space_with(family, tol) {
        Ok(s) => s,
        Err(e) => {
            tally.record("build", &format!("{name}: {e}"), false);
            return None;
        }
    };
    tally.record("build", &name, true);
    tally.record("structure", &name, space.check_structure().passes(eps));

    let xi = canonical_xi(family).scale_real(scale);
    tally.record("xi_in_p", &name, space.p_residual(&xi) < eps);
    tally.record_result(
        "frequency_symmetry",
        &name,
        ad_eigenvalues(&space, &xi).map(|v| v.iter().zip(v.iter().rev()).all(|(a, b)| (a + b).abs() < eps)),
    );
    let canonical = ad_spectrum(&space, &xi).and_then(|s| is_canonical(&s)).unwrap_or(false);
    tally.record("canonical", &name, canonical);
    if !canonical {
        return None;
    }

    tally.record_result("adjoint_involution", &name, adjoint_space_check(&space, &xi));
    tally.record_result(
        "cartan_split",
        &name,
        cartan_split(&space, &xi).and_then(|s| s.verify(&space, &xi, SPLIT_SAMPLES)).map(|c| c.passes(eps)),
    );

    let report = match spindle_number(&space, &xi) {
        Ok(r) => r,
        Err(e) => {
            tally.record("spindle_number", &format!("{name}: {e}"), false);
            return None;
        }
    };
    tally.record("spindle_number", &name, true);
    for (check, ok) in &report.checks {
        tally.record(check, &name, *ok);
    }
    if report.center_order.order().is_none() {
        *tally.skipped.entry("center_divisibility (center unconfigured)".into()).or_default() += 1;
    }

    let p_minus = report.spectrum.dim_p_minus();
    let regular_constant = report.slice_dim.iter().all(|(t, d)| t.is_integer() || *d == p_minus);
    tally.record("constant_slice_dimension", &name, regular_constant);
    let dims: Vec<usize> = report.slice_dim.iter().map(|(_, d)| *d).collect();
    tally.record("profile_symmetry", &name, dims.iter().eq(dims.iter().rev()));

    let orbit = random_isotropy_element(&space, rng)
        .and_then(|k| spindle_number(&space, &xi.conjugate_by(&k)))
        .map(|moved| moved.lambda == report.lambda);
    tally.record_result("orbit_invariance", &name, orbit);
    Some(report.lambda)
}

/// Smallest positive multiple of both, by counting.
fn brute_lcm(a: u64, b: u64) -> u64 {
    (1..).map(|k| k * a).find(|m| m % b == 0).expect("a*b is a common multiple")
}

pub fn run(cap: usize, scale: f64, pair: Option<(u64, u64)>, tol: Tolerance) -> Result<(), Failure> {
    if cap == 0 {
        return Err(Failure::Usage("--cap must be at least 1".into()));
    }
    if !(scale.is_finite() && scale != 0.0) {
        return Err(Failure::Usage(format!("--debug-scale must be finite and nonzero, got {scale}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut tally = Tally::default();
    let mut lambdas = BTreeSet::new();
    for family in SpaceFamily::table(cap) {
        if let Some(l) = check_space(family, scale, tol, &mut rng, &mut tally) {
            lambdas.insert(l);
        }
    }

    let lambdas: Vec<u64> = lambdas.into_iter().collect();
    for (i, &a) in lambdas.iter().enumerate() {
        for &b in &lambdas[i..] {
            let ok = product_spindle(a, b).map(|l| l == brute_lcm(a, b)).unwrap_or(false);
            tally.record("product_lcm", &format!("{a} x {b}"), ok);
        }
    }
    if let Some((a, b)) = pair {
        let l = product_spindle(a, b)?;
        tally.record("product_lcm", &format!("{a} x {b}"), l == brute_lcm(a, b));
        println!("product {a} x {b}: lcm {l}");
    }

    for (check, (passed, total)) in &tally.counts {
        println!("{check}: {passed}/{total}");
    }
    for (check, n) in &tally.skipped {
        println!("skipped {check}: {n}");
    }
    if tally.failures.is_empty() {
        let total: usize = tally.counts.values().map(|c| c.0).sum();
        println!("verify: PASS ({total} checks)");
        Ok(())
    } else {
        let failing: BTreeSet<&str> = tally.failures.iter().map(|f| f.split(" [").next().unwrap_or(f)).collect();
        for f in tally.failures.iter().take(20) {
            println!("failed: {f}");
        }
        println!("verify: FAIL");
        Err(Failure::Verification(format!(
            "{} failure(s); failing checks: {}",
            tally.failures.len(),
            failing.into_iter().collect::<Vec<_>>().join(", ")
        )))
    }
}
