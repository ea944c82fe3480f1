use anyhow::Result;
use serde_json::{json, Value};
use waldron::analysis::{spacing_report, spacing_upper_bound, SpacingReport};

use crate::output::{emit, json_bytes, Cell, Format, Records};
use crate::{usage, SpacingArgs};

pub fn run(a: SpacingArgs) -> Result<()> {
    if a.grid == 0 {
        return usage("--grid must be positive");
    }
    if a.degree == Some(0) {
        return usage("--degree must be positive");
    }
    let report = spacing_report(&a.weight, a.degree, a.grid)?;
    let bytes = match a.format {
        Format::Json => json_bytes(&to_json(&report))?,
        Format::Csv => to_records(&report).to_csv()?,
    };
    emit(a.output.as_deref(), &bytes)
}

fn to_json(r: &SpacingReport<f64>) -> Value {
    let extrema = r.extrema.as_ref().map(|e| {
        json!({
            "grid": e.grid,
            "min_ratio": e.min_ratio,
            "max_ratio": e.max_ratio,
            "argmin": e.argmin,
            "argmax": e.argmax,
            "upper_bound": spacing_upper_bound(),
        })
    });
    let neighbors = r.neighbors.as_ref().map(|s| {
        json!({
            "pairs": s.pairs,
            "min_distance": s.min_distance,
            "max_distance": s.max_distance,
            "min_ratio": s.min_ratio,
            "max_ratio": s.max_ratio,
            "closest": [s.closest.0.entries(), s.closest.1.entries()],
            "farthest": [s.farthest.0.entries(), s.farthest.1.entries()],
        })
    });
    json!({ "weight": r.weight, "n": r.n, "extrema": extrema, "neighbors": neighbors })
}

/// A single flat row.
fn to_records(r: &SpacingReport<f64>) -> Records {
    let mut header = vec!["weight", "n"];
    let mut row = vec![Cell::from(r.weight.as_str()), r.n.map_or(Cell::Empty, Cell::from)];
    if let Some(e) = &r.extrema {
        header.extend(["grid", "min_ratio", "max_ratio", "upper_bound"]);
        row.extend([Cell::from(e.grid), e.min_ratio.into(), e.max_ratio.into(), spacing_upper_bound().into()]);
    }
    if let Some(s) = &r.neighbors {
        header.extend(["pairs", "min_distance", "max_distance", "neighbor_min_ratio", "neighbor_max_ratio"]);
        row.extend([
            Cell::from(s.pairs),
            s.min_distance.into(),
            s.max_distance.into(),
            s.min_ratio.into(),
            s.max_ratio.into(),
        ]);
    }
    let mut out = Records::new(header);
    out.push(row);
    out
}
