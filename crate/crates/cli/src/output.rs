//! Deterministic serialization: JSON objects with sorted keys, floats
//! rounded to 12 significant digits, times as exact `num/den pi` strings.

use serde_json::{json, Map, Value};
use spindles_core::linalg::RationalAngle;
use spindles_core::spaces::Params;
use spindles_core::{SpaceFamily, SpaceInstance, SpindleReport};

/// `x` rounded to 12 significant digits, with `-0` folded into `0`.
pub fn round12(x: f64) -> f64 {
    let y: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

/// Shortest decimal that round-trips the 12-digit value.
pub fn float(x: f64) -> String {
    format!("{}", round12(x))
}

pub fn float_value(x: f64) -> Value {
    serde_json::Number::from_f64(round12(x)).map_or(Value::Null, Value::Number)
}

pub fn time(t: RationalAngle) -> String {
    t.to_string()
}

/// `t/π` as a bare rational, `0` or `a/b`.
pub fn turns(t: RationalAngle) -> String {
    if t.den() == 1 {
        t.num().to_string()
    } else {
        format!("{}/{}", t.num(), t.den())
    }
}

pub fn params_text(family: SpaceFamily) -> String {
    match family.params() {
        Params::Pair(p, q) => format!("{p} {q}"),
        Params::Single(n) => n.to_string(),
    }
}

fn params_value(family: SpaceFamily) -> Value {
    match family.params() {
        Params::Pair(p, q) => json!({ "p": p, "q": q }),
        Params::Single(n) => json!({ "n": n }),
    }
}

/// One catalog entry: family tag, parameters, dimensions and center order.
pub fn catalog_entry(space: &SpaceInstance) -> Value {
    let family = space.family();
    let center = space.center_order();
    json!({
        "family": family.tag().name(),
        "params": params_value(family),
        "space": family.space_name(),
        "orbit": family.orbit_name(),
        "dims": { "g": space.dim_g(), "k": space.dim_k(), "p": space.dim_p(), "ambient": space.ambient_dim() },
        "center_order": center.order(),
        "provenance": center.provenance().unwrap_or("unconfigured"),
    })
}

pub fn report_json(space: &SpaceInstance, r: &SpindleReport) -> Value {
    let family = r.family;
    let spec = &r.spectrum;
    let spectrum: Vec<Value> = spec
        .frequencies
        .iter()
        .zip(spec.multiplicity_in_k.iter().zip(&spec.multiplicity_in_p))
        .map(|(&nu, (&mk, &mp))| json!({ "frequency": float_value(nu), "dim_k": mk, "dim_p": mp }))
        .collect();
    let checks: Map<String, Value> = r.checks.iter().map(|(k, v)| (k.to_string(), Value::Bool(*v))).collect();
    let slices: Vec<Value> = r.slice_dim.iter().map(|(t, d)| json!({ "t": time(*t), "dim": d })).collect();
    json!({
        "family": family.tag().name(),
        "params": params_value(family),
        "space": family.space_name(),
        "orbit": family.orbit_name(),
        "dims": { "g": space.dim_g(), "k": space.dim_k(), "p": space.dim_p() },
        "lambda": r.lambda,
        "lambda_formula": family.lambda_formula(),
        "methods": {
            "exact": r.method_exact,
            "numeric": r.method_numeric,
            "closed_form": r.closed_form,
            "cover_multiplier": r.cover_multiplier,
            "search_bound": r.search_bound,
        },
        "spectrum": spectrum,
        "split": {
            "k_plus": spec.dim_k_plus(),
            "k_minus": spec.dim_k_minus(),
            "p_plus": spec.dim_p_plus(),
            "p_minus": spec.dim_p_minus(),
        },
        "knot_times": r.knot_times.iter().map(|t| time(*t)).collect::<Vec<_>>(),
        "centriole_times": r.centriole_times.iter().map(|t| time(*t)).collect::<Vec<_>>(),
        "slice_dimensions": slices,
        "geodesic_length_over_norm": time(r.geodesic_length_over_norm),
        "center_order": r.center_order.order(),
        "center_provenance": r.center_order.provenance().unwrap_or("unconfigured"),
        "checks": checks,
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
