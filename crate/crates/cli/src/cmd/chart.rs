use std::fs::File;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use waldron::{Barycentric, BaryweightChart};

use crate::output::{emit, Cell, Records};
use crate::{usage, ChartArgs, ChartTarget};

pub fn run(a: ChartArgs) -> Result<()> {
    if a.cartesian && a.to == ChartTarget::Lambda {
        return usage("--cartesian applies to --to theta input only");
    }
    let input: Box<dyn Read> = match &a.input {
        Some(p) => Box::new(File::open(p).with_context(|| format!("reading {}", p.display()))?),
        None => Box::new(io::stdin()),
    };
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let d = a.simplex.dim();
    let width = if a.cartesian { d } else { d + 1 };
    let chart = BaryweightChart::new(a.simplex, a.weight);

    let mut header = Vec::new();
    match a.to {
        ChartTarget::Theta => {
            header.extend((1..=d + 1).map(|i| format!("lambda_{i}")));
            header.extend((1..=d + 1).map(|i| format!("theta_{i}")));
            header.push("shift".into());
        }
        ChartTarget::Lambda => {
            header.extend((1..=d + 1).map(|i| format!("theta_{i}")));
            header.extend((1..=d + 1).map(|i| format!("lambda_{i}")));
            header.extend((1..=d).map(|i| format!("x_{i}")));
        }
    }
    header.push("status".into());
    let cols = header.len();
    let mut r = Records::new(header);
    let mut failures = 0usize;

    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let row: Vec<f64> = rec
            .iter()
            .map(|v| v.parse::<f64>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("input row {} is not numeric", i + 2))?;
        if row.len() != width {
            bail!("input row {} has {} columns, expected {width}", i + 2, row.len());
        }
        let mut out: Vec<Cell> = Vec::with_capacity(cols);
        let status = match a.to {
            ChartTarget::Theta => {
                let lambda = if a.cartesian { chart.simplex().to_barycentric(&row)? } else { Barycentric(row) };
                out.extend(lambda.coords().iter().map(|&v| Cell::from(v)));
                match chart.invert(&lambda) {
                    Ok(inv) => {
                        out.extend(inv.theta.iter().map(|&v| Cell::from(v)));
                        out.push(Cell::from(inv.shift));
                        "ok".to_string()
                    }
                    Err(e) => {
                        failures += 1;
                        out.resize(cols - 1, Cell::Empty);
                        status_of(&e)
                    }
                }
            }
            ChartTarget::Lambda => {
                out.extend(row.iter().map(|&v| Cell::from(v)));
                match chart.forward(&row) {
                    Ok(lambda) => {
                        let x = chart.simplex().from_barycentric(&lambda)?;
                        out.extend(lambda.coords().iter().map(|&v| Cell::from(v)));
                        out.extend(x.iter().map(|&v| Cell::from(v)));
                        "ok".to_string()
                    }
                    Err(e) => {
                        failures += 1;
                        out.resize(cols - 1, Cell::Empty);
                        status_of(&e)
                    }
                }
            }
        };
        out.push(Cell::Text(status));
        r.push(out);
    }
    if failures > 0 {
        eprintln!("warning: {failures} of {} points could not be converted", r.rows.len());
    }
    emit(a.out.output.as_deref(), &r.render(a.out.format)?)
}

fn status_of(e: &waldron::Error) -> String {
    match e {
        waldron::Error::NotInImage { .. } => "not-in-image".into(),
        waldron::Error::Domain(_) => "outside".into(),
        _ => "error".into(),
    }
}
