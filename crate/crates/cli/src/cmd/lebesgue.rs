use anyhow::Result;
use serde_json::{json, Value};
use waldron::analysis::{lebesgue_constant, table_scheme, FamilySpec, Grid, LebesgueReport, LebesgueTable, TableRow};
use waldron::points::node_count;
use waldron::{Error, Scheme};

use crate::output::{emit, json_bytes, Format};
use crate::{usage, LebesgueArgs};

/// One column of the comparison: a family under one interpolation scheme.
struct Column {
    family: FamilySpec<f64>,
    rational: bool,
}

impl Column {
    fn name(&self) -> String {
        if self.rational {
            format!("{}/rational", self.family.name())
        } else {
            self.family.name()
        }
    }
}

pub fn run(a: LebesgueArgs) -> Result<()> {
    let d = a.dim as usize;
    if a.families.is_empty() {
        return usage("--families is empty");
    }
    if a.rational && d != 2 {
        return usage("--rational needs --dim 2");
    }
    let mut columns = Vec::new();
    for f in &a.families {
        columns.push(Column { family: f.clone(), rational: false });
        if a.rational && matches!(f, FamilySpec::Waldron(_)) {
            columns.push(Column { family: f.clone(), rational: true });
        }
    }
    let (table, reports) = compute(&columns, &a.degrees.0, d, a.grid)?;

    let bytes = match a.out.format {
        Format::Csv => table.to_csv().into_bytes(),
        Format::Json => json_bytes(&Value::Array(reports.iter().map(report_json).collect()))?,
    };
    emit(a.out.output.as_deref(), &bytes)?;
    if a.out.output.is_some() {
        print!("{}", table.to_text());
    }
    Ok(())
}

fn compute(
    columns: &[Column],
    degrees: &[usize],
    d: usize,
    grid: Grid,
) -> Result<(LebesgueTable, Vec<LebesgueReport<f64>>)> {
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for &n in degrees {
        let mut values = Vec::new();
        for c in columns {
            let nodes = match c.family.build(d, n) {
                Ok(nodes) => nodes,
                // no tabulated radii at this degree
                Err(Error::InvalidRadii(_)) => {
                    values.push(None);
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            let scheme = if c.rational { Scheme::WaldronRational } else { table_scheme(&nodes.family) };
            let r = lebesgue_constant(&nodes, scheme, grid)?;
            if !r.stable {
                eprintln!("warning: {} n={n} did not stabilize by M={}", c.name(), r.grid);
            }
            if r.poles > 0 {
                eprintln!("warning: {} n={n} skipped {} lattice points at poles", c.name(), r.poles);
            }
            values.push(Some(r.constant));
            reports.push(r);
        }
        rows.push(TableRow { n, count: node_count(n, d), values });
    }
    let table = LebesgueTable { dim: d, columns: columns.iter().map(Column::name).collect(), rows };
    Ok((table, reports))
}

/// Everything but the timing, so identical runs give identical files.
pub fn report_json(r: &LebesgueReport<f64>) -> Value {
    json!({
        "family": r.family,
        "scheme": r.scheme.name(),
        "n": r.degree,
        "N": r.node_count,
        "grid": r.grid,
        "constant": r.constant,
        "argmax": r.argmax,
        "argmax_barycentric": r.argmax_barycentric,
        "evaluated": r.evaluated,
        "poles": r.poles,
        "symmetric": r.symmetric,
        "stable": r.stable,
    })
}
