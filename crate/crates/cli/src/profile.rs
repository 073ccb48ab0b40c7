use spindles_core::linalg::{RationalAngle, Tolerance};
use spindles_core::spaces::build_space_with;
use spindles_core::spindle::{classify, spectrum_slice_dimension, uniform_components, AdSpectrum};
use spindles_core::{canonical_xi, spindle_number, SpaceFamily};

use crate::output::{float, turns};
use crate::Failure;

const MAX_ROWS: i64 = 1_000_000;

/// `|J_X(t)|²` for a unit `X` spread evenly over `p₋`, with exact zeros
/// wherever `νt ∈ πℤ`.
fn jacobi_unit(spec: &AdSpectrum, weights: &[f64], t: RationalAngle) -> f64 {
    spec.nonzero()
        .iter()
        .zip(weights)
        .map(|(&nu, &w)| {
            let s = if nu.fract() == 0.0 { (t * nu as i64).sin().value } else { (nu * t.radians()).sin() };
            s * s / (nu * nu) * w
        })
        .sum()
}

pub fn run(family: SpaceFamily, step: RationalAngle, tol: Tolerance) -> Result<(), Failure> {
    if step.num() <= 0 {
        return Err(Failure::Usage(format!("degenerate grid: step {step} must be positive")));
    }
    let space = build_space_with(family, tol)?;
    let report = spindle_number(&space, &canonical_xi(family))?;
    let spec = &report.spectrum;
    let weights = uniform_components(spec);
    // t = kπ·step for 0 ≤ k·step ≤ λ
    let last = (report.lambda as i64)
        .checked_mul(step.den())
        .map(|v| v / step.num())
        .filter(|&k| k < MAX_ROWS)
        .ok_or_else(|| Failure::Usage(format!("degenerate grid: step {step} gives more than {MAX_ROWS} rows")))?;

    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(["t_over_pi", "jacobi_norm_sq", "slice_dimension", "classification"])?;
    for k in 0..=last {
        let t = step * k;
        w.write_record([
            turns(t),
            float(jacobi_unit(spec, &weights, t)),
            spectrum_slice_dimension(spec, t).to_string(),
            classify(spec, t).name().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
