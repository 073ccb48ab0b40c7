use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};
use spindles_core::linalg::Tolerance;
use spindles_core::spaces::build_space_with;
use spindles_core::{canonical_xi, spindle_number, SpaceFamily};

use crate::output::{catalog_entry, params_text, report_json, to_pretty};
use crate::Failure;

const HEADER: [&str; 10] = [
    "family",
    "params",
    "space",
    "orbit",
    "lambda_formula",
    "lambda",
    "method_exact",
    "method_numeric",
    "closed_form",
    "status",
];

enum Status {
    Ok,
    Mismatch(String),
    Error(String),
}

impl Status {
    fn text(&self) -> String {
        match self {
            Status::Ok => "ok".into(),
            Status::Mismatch(what) => format!("mismatch: {what}"),
            Status::Error(e) => format!("error: {e}"),
        }
    }
}

struct Row {
    family: SpaceFamily,
    cells: [String; 10],
    json: Value,
    status: Status,
}

fn row(family: SpaceFamily, tol: Tolerance) -> Row {
    let computed = build_space_with(family, tol).and_then(|space| {
        let report = spindle_number(&space, &canonical_xi(family))?;
        Ok((space, report))
    });
    let mut cells = [
        family.tag().name().to_string(),
        params_text(family),
        family.space_name(),
        family.orbit_name(),
        family.lambda_formula().to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ];
    let (status, report) = match &computed {
        Ok((space, r)) => {
            cells[5] = r.lambda.to_string();
            cells[6] = r.method_exact.map_or_else(|| "n/a".into(), |v| v.to_string());
            cells[7] = r.method_numeric.to_string();
            cells[8] = r.closed_form.to_string();
            let failed: Vec<&str> = r.checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
            let status = if r.method_exact != Some(r.method_numeric) {
                Status::Mismatch(format!("exact {:?} numeric {}", r.method_exact, r.method_numeric))
            } else if !failed.is_empty() {
                Status::Mismatch(failed.join(" "))
            } else {
                Status::Ok
            };
            (status, report_json(space, r))
        }
        Err(e) => (Status::Error(e.to_string()), Value::Null),
    };
    cells[9] = status.text();
    let json = json!({
        "family": cells[0],
        "params": cells[1],
        "space": cells[2],
        "orbit": cells[3],
        "lambda_formula": cells[4],
        "status": cells[9],
        "report": report,
    });
    Row { family, cells, json, status }
}

pub fn run(cap: usize, csv_path: Option<&Path>, json_path: Option<&Path>, tol: Tolerance) -> Result<(), Failure> {
    if cap == 0 {
        return Err(Failure::Usage("--cap must be at least 1".into()));
    }
    let rows: Vec<Row> = SpaceFamily::table(cap).into_iter().map(|f| row(f, tol)).collect();

    let sink: Box<dyn Write> = match csv_path {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(HEADER)?;
    for r in &rows {
        w.write_record(&r.cells)?;
    }
    w.flush()?;

    if let Some(path) = json_path {
        let doc = json!({ "cap": cap, "rows": rows.iter().map(|r| r.json.clone()).collect::<Vec<_>>() });
        std::fs::write(path, to_pretty(&doc))?;
    }

    let describe = |r: &Row| format!("{}: {}", r.family, r.status.text());
    let errors: Vec<String> = rows.iter().filter(|r| matches!(r.status, Status::Error(_))).map(describe).collect();
    if !errors.is_empty() {
        return Err(Failure::Usage(errors.join("; ")));
    }
    let mismatches: Vec<String> =
        rows.iter().filter(|r| matches!(r.status, Status::Mismatch(_))).map(describe).collect();
    if !mismatches.is_empty() {
        return Err(Failure::Verification(mismatches.join("; ")));
    }
    Ok(())
}

pub fn catalog(cap: usize, tol: Tolerance) -> Result<(), Failure> {
    if cap == 0 {
        return Err(Failure::Usage("--cap must be at least 1".into()));
    }
    let entries = SpaceFamily::table(cap)
        .into_iter()
        .map(|f| build_space_with(f, tol).map(|s| catalog_entry(&s)))
        .collect::<Result<Vec<_>, _>>()?;
    print!("{}", to_pretty(&Value::Array(entries)));
    Ok(())
}
