use std::f64::consts::PI;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use waldron::{Interpolant, Scheme};

use super::build_nodes;
use crate::output::{emit, Cell, Records};
use crate::{usage, InterpArgs};

/// Cartesian point and interpolant value.
type Sample = (Vec<f64>, f64);

/// `sin(π |x|²)`.
fn f1(x: &[f64]) -> f64 {
    (PI * x.iter().map(|v| v * v).sum::<f64>()).sin()
}

pub fn run(a: InterpArgs) -> Result<()> {
    if a.samples == 0 {
        return usage("--samples must be positive");
    }
    let nodes = build_nodes(a.family, &a.weight, a.degree, a.simplex.clone(), &a.concentric)?;
    let builtin = a.function == "f1";
    let values = if builtin {
        nodes.nodes.iter().map(|n| f1(&n.cartesian)).collect()
    } else {
        read_values(Path::new(&a.function))?
    };
    let scheme: Scheme = a.scheme.into();
    let q = Interpolant::new(scheme, nodes, values)?;
    let d = q.nodes().dim();
    let m = a.samples;

    let lattice = waldron::enumerate_indices(m, d);
    // None where the rational denominator vanishes
    let samples: Vec<Result<Option<Sample>>> = lattice
        .par_iter()
        .map(|beta| {
            let lambda: Vec<f64> = beta.entries().iter().map(|&b| b as f64 / m as f64).collect();
            let x = q.nodes().simplex.combine(&lambda)?;
            match q.eval_barycentric(&lambda) {
                Ok(v) => Ok(Some((x, v))),
                Err(waldron::Error::Pole { .. }) => Ok(None),
                Err(e) => Err(e.into()),
            }
        })
        .collect();

    let axes = ["x", "y", "z"];
    let mut header: Vec<String> = if d <= 3 {
        axes[..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("x_{i}")).collect()
    };
    header.push("value".into());
    let mut r = Records::new(header);
    let (mut poles, mut max_err) = (0usize, 0.0f64);
    for s in samples {
        let Some((x, v)) = s? else {
            poles += 1;
            continue;
        };
        if builtin {
            max_err = max_err.max((v - f1(&x)).abs());
        }
        let mut row: Vec<Cell> = x.iter().map(|&c| Cell::from(c)).collect();
        row.push(Cell::from(v));
        r.push(row);
    }
    if poles > 0 {
        eprintln!("warning: {poles} sample points skipped at poles of the rational interpolant");
    }
    if builtin {
        eprintln!("max |f1 - q| over the samples: {max_err:.3e}");
    }
    emit(a.out.output.as_deref(), &r.render(a.out.format)?)
}

/// Node data from the last column of a CSV with a header row.
fn read_values(path: &Path) -> Result<Vec<f64>> {
    let mut reader = csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let mut values = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let Some(last) = rec.iter().next_back() else {
            bail!("{}: empty row {}", path.display(), i + 2);
        };
        values.push(last.trim().parse().with_context(|| format!("{}: row {} is not numeric", path.display(), i + 2))?);
    }
    Ok(values)
}
