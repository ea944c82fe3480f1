use anyhow::Result;
use waldron::points::{
    node_count, optimize_concentric_radii_from, table_radii, ConcentricLayout, ConcentricOptions, RadiiStart,
    RADII_TABLE, RADII_TABLE_VERSION,
};

use crate::output::{emit, Cell, Records};
use crate::{RadiiArgs, StartArg};

pub fn run(a: RadiiArgs) -> Result<()> {
    let records = if a.table { table() } else { optimize(&a)? };
    emit(a.out.output.as_deref(), &records.render(a.out.format)?)
}

/// The shipped rows as printed, including the `0` origin markers.
fn table() -> Records {
    let width = RADII_TABLE.iter().map(|(_, _, r)| r.len()).max().unwrap_or(0);
    let mut header = vec!["version".to_string(), "n".into(), "N".into()];
    header.extend((0..width).map(|i| format!("R_{i}")));
    let mut r = Records::new(header);
    for &(n, count, radii) in RADII_TABLE {
        let mut row = vec![Cell::from(RADII_TABLE_VERSION), Cell::from(n), Cell::from(count)];
        row.extend((0..width).map(|i| radii.get(i).copied().into()));
        r.push(row);
    }
    r
}

fn optimize(a: &RadiiArgs) -> Result<Records> {
    let layout = ConcentricLayout { outer: a.outer_edges.into(), inner: a.inner_edges.into() };
    let start = match a.start {
        StartArg::Neutral => RadiiStart::Neutral,
        StartArg::Table => RadiiStart::Table,
    };
    let opts = ConcentricOptions { start, layout, ..ConcentricOptions::default() };
    let degrees = &a.degrees.0;
    let width = degrees.iter().map(|&n| (n - 1) / 3).max().unwrap_or(0);
    let mut header = vec!["n".to_string(), "N".into()];
    header.extend((1..=width).map(|i| format!("R_{i}")));
    header.push("table_deviation".into());
    let mut r = Records::new(header);
    for &n in degrees {
        let inner = optimize_concentric_radii_from::<f64>(n, &opts)?;
        let deviation = table_radii::<f64>(n)
            .map(|t| inner.iter().zip(&t[1..]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
        let mut row = vec![Cell::from(n), Cell::from(node_count(n, 2))];
        row.extend((0..width).map(|i| inner.get(i).copied().into()));
        row.push(deviation.into());
        r.push(row);
    }
    Ok(r)
}
