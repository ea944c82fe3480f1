use std::fs;

use anyhow::{bail, Context, Result};
use waldron::analysis::{lebesgue_table, reference_table_2d, reference_table_3d, FamilySpec, LebesgueTable};

use crate::output::{emit, Cell, Records};
use crate::ReproArgs;

/// Accepted relative deviation from the two-decimal reference values.
const TOL_2D: f64 = 0.02;
const TOL_3D: f64 = 0.03;

pub fn run(a: ReproArgs) -> Result<()> {
    let dims: Vec<usize> = match a.dim {
        Some(d) => vec![d as usize],
        None => vec![2, 3],
    };
    if let Some(dir) = &a.out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let mut diff = Records::new(["dim", "n", "column", "computed", "reference", "relative_error", "tolerance", "status"]);
    let (mut checked, mut failed) = (0usize, 0usize);
    for d in dims {
        let (reference, tol) = if d == 2 { (reference_table_2d(), TOL_2D) } else { (reference_table_3d(), TOL_3D) };
        let families = reference
            .columns
            .iter()
            .map(|c| c.parse::<FamilySpec<f64>>())
            .collect::<Result<Vec<_>, _>>()?;
        let degrees: Vec<usize> =
            reference.rows.iter().map(|r| r.n).filter(|&n| a.max_degree.is_none_or(|m| n <= m)).collect();
        let (computed, _) = lebesgue_table(&families, &degrees, d, a.grid)?;
        if let Some(dir) = &a.out_dir {
            let path = dir.join(format!("lebesgue_{d}d.csv"));
            fs::write(&path, computed.to_csv()).with_context(|| format!("writing {}", path.display()))?;
        }
        for e in compare(&reference, &computed) {
            let rel = (e.computed - e.reference).abs() / e.reference;
            let ok = rel <= tol;
            checked += 1;
            failed += usize::from(!ok);
            diff.push(vec![
                Cell::from(d),
                Cell::from(e.n),
                Cell::Text(e.column),
                e.computed.into(),
                e.reference.into(),
                rel.into(),
                tol.into(),
                Cell::from(if ok { "PASS" } else { "FAIL" }),
            ]);
        }
    }
    emit(a.out.output.as_deref(), &diff.render(a.out.format)?)?;
    eprintln!("{} of {checked} entries within tolerance", checked - failed);
    if failed > 0 {
        bail!("{failed} entries outside tolerance");
    }
    Ok(())
}

struct Entry {
    n: usize,
    column: String,
    computed: f64,
    reference: f64,
}

/// Every cell present in both tables.
fn compare(reference: &LebesgueTable, computed: &LebesgueTable) -> Vec<Entry> {
    let mut out = Vec::new();
    for row in &computed.rows {
        for (c, v) in computed.columns.iter().zip(&row.values) {
            if let (Some(v), Some(r)) = (v, reference.value(c, row.n)) {
                out.push(Entry { n: row.n, column: c.clone(), computed: *v, reference: r });
            }
        }
    }
    out
}
