use std::fmt::Write;

use spindles_core::linalg::Tolerance;
use spindles_core::spaces::build_space_with;
use spindles_core::{canonical_xi, spindle_number, SpaceFamily, SpaceInstance, SpindleReport};

use crate::output::{float, report_json, time, to_pretty};
use crate::Failure;

fn text(space: &SpaceInstance, r: &SpindleReport) -> String {
    let family = r.family;
    let spec = &r.spectrum;
    let times = |ts: &[spindles_core::RationalAngle]| ts.iter().map(|t| time(*t)).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    let _ = writeln!(out, "{family}: {}", family.space_name());
    let _ = writeln!(out, "orbit: {}", family.orbit_name());
    let _ = writeln!(out, "dimensions: g {} k {} p {}", space.dim_g(), space.dim_k(), space.dim_p());
    let _ = writeln!(out, "ad(xi) frequencies:");
    for ((nu, mk), mp) in spec.frequencies.iter().zip(&spec.multiplicity_in_k).zip(&spec.multiplicity_in_p) {
        let _ = writeln!(out, "  {:>4}  dim k {mk}  dim p {mp}", float(*nu));
    }
    let _ = writeln!(
        out,
        "split: k+ {} k- {} p+ {} p- {}",
        spec.dim_k_plus(),
        spec.dim_k_minus(),
        spec.dim_p_plus(),
        spec.dim_p_minus()
    );
    let exact = r.method_exact.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    let _ = writeln!(out, "lambda: {} ({})", r.lambda, family.lambda_formula());
    let _ = writeln!(
        out,
        "methods: exact {exact} numeric {} closed form {} cover multiplier {} search bound {}",
        r.method_numeric, r.closed_form, r.cover_multiplier, r.search_bound
    );
    let _ = writeln!(out, "knots: {}", times(&r.knot_times));
    let _ = writeln!(out, "centrioles: {}", times(&r.centriole_times));
    let _ = writeln!(out, "geodesic length / |xi|: {}", time(r.geodesic_length_over_norm));
    match r.center_order.order() {
        Some(z) => {
            let _ = writeln!(out, "center order: {z} ({})", r.center_order.provenance().unwrap_or(""));
        }
        None => {
            let _ = writeln!(out, "center order: unconfigured");
        }
    }
    let _ = writeln!(out, "checks:");
    for (name, ok) in &r.checks {
        let _ = writeln!(out, "  {name}: {}", if *ok { "pass" } else { "FAIL" });
    }
    out
}

pub fn run(family: SpaceFamily, json: bool, tol: Tolerance) -> Result<(), Failure> {
    let space = build_space_with(family, tol)?;
    let report = spindle_number(&space, &canonical_xi(family))?;
    if json {
        print!("{}", to_pretty(&report_json(&space, &report)));
    } else {
        print!("{}", text(&space, &report));
    }
    let failed: Vec<&str> = report.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{family}: failed checks {}", failed.join(", "))))
    }
}
