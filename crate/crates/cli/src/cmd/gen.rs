use std::fmt::Write as _;
use std::fs;

use anyhow::{Context, Result};
use waldron::{spherical_full_sphere, spherical_waldron_points, NodeFamily64, NodeLabel};

use super::build_nodes;
use crate::output::{emit, Cell, Records};
use crate::{usage, FamilyArg, GenArgs};

pub fn run(a: GenArgs) -> Result<()> {
    if a.full_sphere && a.family != FamilyArg::Spherical {
        return usage("--full-sphere needs --family spherical");
    }
    let records = if a.family == FamilyArg::Spherical {
        if a.simplex.is_some() {
            return usage("--simplex does not apply to the spherical family");
        }
        if a.svg.is_some() {
            return usage("--svg needs a planar family");
        }
        spherical_records(&a)?
    } else {
        let nodes = build_nodes(a.family, &a.weight, a.degree, a.simplex.clone(), &a.concentric)?;
        if let Some(path) = &a.svg {
            if nodes.dim() != 2 {
                return usage("--svg needs a planar family");
            }
            fs::write(path, svg(&nodes)).with_context(|| format!("writing {}", path.display()))?;
        }
        node_records(&nodes)
    };
    emit(a.out.output.as_deref(), &records.render(a.out.format)?)
}

/// `alpha_*` (or `ring, slot` for concentric points), `x_*`, `lambda_*`.
pub fn node_records(nodes: &NodeFamily64) -> Records {
    let d = nodes.dim();
    let indexed = nodes.nodes.iter().all(|n| matches!(n.label, NodeLabel::Index(_)));
    let mut header: Vec<String> =
        if indexed { (1..=d + 1).map(|i| format!("alpha_{i}")).collect() } else { vec!["ring".into(), "slot".into()] };
    header.extend((1..=d).map(|i| format!("x_{i}")));
    header.extend((1..=d + 1).map(|i| format!("lambda_{i}")));
    let mut r = Records::new(header);
    for node in &nodes.nodes {
        let mut row: Vec<Cell> = match &node.label {
            NodeLabel::Index(alpha) => alpha.entries().iter().map(|&a| Cell::from(a)).collect(),
            NodeLabel::Ring { ring, slot } => vec![Cell::from(*ring), Cell::from(*slot)],
            NodeLabel::Centre => vec![Cell::Empty, Cell::Empty],
        };
        row.extend(node.cartesian.iter().map(|&x| Cell::from(x)));
        row.extend(node.barycentric.coords().iter().map(|&l| Cell::from(l)));
        r.push(row);
    }
    r
}

fn spherical_records(a: &GenArgs) -> Result<Records> {
    if a.full_sphere {
        let mut r = Records::new(["x", "y", "z"]);
        for p in spherical_full_sphere(a.degree, &a.weight)? {
            r.push(p.iter().map(|&c| Cell::from(c)).collect());
        }
        return Ok(r);
    }
    let mut r = Records::new(["alpha_1", "alpha_2", "alpha_3", "x", "y", "z"]);
    for p in spherical_waldron_points(a.degree, &a.weight)?.points {
        let mut row: Vec<Cell> = p.index.entries().iter().map(|&e| Cell::from(e)).collect();
        row.extend(p.xyz.iter().map(|&c| Cell::from(c)));
        r.push(row);
    }
    Ok(r)
}

fn svg(nodes: &NodeFamily64) -> String {
    const SIZE: f64 = 480.0;
    const PAD: f64 = 20.0;
    let verts = nodes.simplex.vertices();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for v in verts {
        for k in 0..2 {
            lo[k] = lo[k].min(v[k]);
            hi[k] = hi[k].max(v[k]);
        }
    }
    let scale = (SIZE - 2.0 * PAD) / (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let map = |p: &[f64]| (PAD + (p[0] - lo[0]) * scale, SIZE - PAD - (p[1] - lo[1]) * scale);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    );
    let outline: Vec<String> = verts
        .iter()
        .map(|v| {
            let (x, y) = map(v);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(s, "<polygon points=\"{}\" fill=\"none\" stroke=\"#888\"/>", outline.join(" "));
    for node in &nodes.nodes {
        let (x, y) = map(&node.cartesian);
        let _ = writeln!(s, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\"/>");
    }
    s.push_str("</svg>\n");
    s
}
