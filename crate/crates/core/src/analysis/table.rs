//! Lebesgue-constant tables across node families and degrees, and the
//! reference values they are compared against.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interp::Scheme;
use crate::points::{concentric_points, node_count, simplex_points, waldron_points, waldron_points_modified_3d, NodeFamily};
use crate::scalar::Scalar;
use crate::simplex::Simplex;
use crate::weights::Weight;

use super::lebesgue::{lebesgue_constant, table_scheme, Grid, LebesgueReport};

/// A node family that can be instantiated at any degree.
#[derive(Debug, Clone)]
pub enum FamilySpec<T> {
    Simplex,
    Waldron(Weight<T>),
    /// The 3D construction that keeps zero entries at zero.
    WaldronModified3D(Weight<T>),
    Concentric,
}

impl<T: Scalar> FamilySpec<T> {
    pub fn name(&self) -> String {
        match self {
            Self::Simplex => "simplex".into(),
            Self::Waldron(w) => format!("waldron:{}", w.name()),
            Self::WaldronModified3D(w) => format!("waldron3m:{}", w.name()),
            Self::Concentric => "concentric".into(),
        }
    }

    /// Nodes of degree `n` on the reference simplex of dimension `d`
    /// (equilateral triangle or centred tetrahedron).
    pub fn build(&self, d: usize, n: usize) -> Result<NodeFamily<T>> {
        let simplex = reference_simplex(d)?;
        match self {
            Self::Simplex => simplex_points(&simplex, n),
            Self::Waldron(w) => waldron_points(&simplex, n, w),
            Self::WaldronModified3D(w) => waldron_points_modified_3d(&simplex, n, w),
            Self::Concentric => {
                if d != 2 {
                    return Err(Error::Unsupported("concentric points are defined on triangles".into()));
                }
                concentric_points(n, None)
            }
        }
    }
}

/// Parses `simplex`, `concentric`, `waldron[:weight]` and `waldron3m[:weight]`;
/// the weight defaults to cosine.
impl<T: Scalar> FromStr for FamilySpec<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, weight) = match s.split_once(':') {
            Some((h, w)) => (h, Some(w)),
            None => (s, None),
        };
        let weight = || -> Result<Weight<T>> { weight.map_or(Ok(Weight::cosine()), parse_weight) };
        match head {
            "simplex" => Ok(Self::Simplex),
            "concentric" => Ok(Self::Concentric),
            "waldron" => Ok(Self::Waldron(weight()?)),
            "waldron3m" => Ok(Self::WaldronModified3D(weight()?)),
            _ => Err(Error::Domain(format!("unknown node family '{s}'"))),
        }
    }
}

/// Parses `identity`, `cosine`, `quad` and `convex:t=<t>[:<w0>:<w1>]`, the blend
/// `t·w1 + (1-t)·w0` with cosine and identity as default components.
pub fn parse_weight<T: Scalar>(s: &str) -> Result<Weight<T>> {
    match s {
        "identity" => Ok(Weight::identity()),
        "cosine" => Ok(Weight::cosine()),
        "quad" | "quadratic" => Ok(Weight::quadratic()),
        _ => {
            let Some(rest) = s.strip_prefix("convex:t=") else {
                return Err(Error::Domain(format!("unknown weight '{s}'")));
            };
            let parts: Vec<&str> = rest.split(':').collect();
            let t: f64 = parts[0].parse().map_err(|_| Error::Domain(format!("bad blend parameter in '{s}'")))?;
            let (w0, w1) = match parts.len() {
                1 => (Weight::cosine(), Weight::identity()),
                3 => (parse_weight(parts[1])?, parse_weight(parts[2])?),
                _ => return Err(Error::Domain(format!("expected convex:t=<t>[:<w0>:<w1>], got '{s}'"))),
            };
            Weight::convex(T::lit(t), w0, w1)
        }
    }
}

pub fn reference_simplex<T: Scalar>(d: usize) -> Result<Simplex<T>> {
    match d {
        1 => Ok(Simplex::interval()),
        2 => Ok(Simplex::equilateral_2d()),
        3 => Ok(Simplex::centred_3d()),
        _ => Err(Error::Unsupported(format!("dimension {d} is not supported"))),
    }
}

/// One row of a table: degree, node count and one value per column.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub count: usize,
    pub values: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LebesgueTable {
    pub dim: usize,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl LebesgueTable {
    pub fn value(&self, column: &str, n: usize) -> Option<f64> {
        let c = self.columns.iter().position(|name| name == column)?;
        self.rows.iter().find(|r| r.n == n)?.values[c]
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("n,N,{}\n", self.columns.join(","));
        for r in &self.rows {
            let _ = write!(s, "{},{}", r.n, r.count);
            for v in &r.values {
                match v {
                    Some(v) => {
                        let _ = write!(s, ",{v:.16e}");
                    }
                    None => s.push(','),
                }
            }
            s.push('\n');
        }
        s
    }

    /// Aligned text with two decimals, `-` for missing entries.
    pub fn to_text(&self) -> String {
        let width = self.columns.iter().map(|c| c.len()).max().unwrap_or(0).max(10);
        let mut s = format!("{:>4} {:>6}", "n", "N");
        for c in &self.columns {
            let _ = write!(s, " {c:>width$}");
        }
        s.push('\n');
        for r in &self.rows {
            let _ = write!(s, "{:>4} {:>6}", r.n, r.count);
            for v in &r.values {
                match v {
                    Some(v) => {
                        let _ = write!(s, " {v:>width$.2}");
                    }
                    None => {
                        let _ = write!(s, " {:>width$}", "-");
                    }
                }
            }
            s.push('\n');
        }
        s
    }
}

fn parse_table(dim: usize, text: &str) -> LebesgueTable {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let columns = header[2..].iter().map(|s| s.to_string()).collect();
    let rows = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            TableRow {
                n: f[0].parse().expect("degree"),
                count: f[1].parse().expect("count"),
                values: f[2..].iter().map(|v| if v.is_empty() { None } else { Some(v.parse().expect("value")) }).collect(),
            }
        })
        .collect();
    LebesgueTable { dim, columns, rows }
}

/// Reference triangle values: Waldron (cosine), concentric and uniform points.
pub fn reference_table_2d() -> LebesgueTable {
    parse_table(2, include_str!("../../data/lebesgue_2d.csv"))
}

/// Reference tetrahedron values: modified Waldron (cosine) and uniform points.
pub fn reference_table_3d() -> LebesgueTable {
    parse_table(3, include_str!("../../data/lebesgue_3d.csv"))
}

/// Computes Lebesgue constants for every family and degree.
///
/// Entries a family cannot produce (concentric beyond the radii table) are
/// left empty; any other failure is returned.
pub fn lebesgue_table<T: Scalar>(
    families: &[FamilySpec<T>],
    degrees: &[usize],
    d: usize,
    grid: Grid,
) -> Result<(LebesgueTable, Vec<LebesgueReport<T>>)> {
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    for &n in degrees {
        let mut values = Vec::new();
        for f in families {
            let nodes = match f.build(d, n) {
                Ok(nodes) => nodes,
                Err(Error::InvalidRadii(_)) => {
                    values.push(None);
                    continue;
                }
                Err(e) => return Err(e),
            };
            let scheme: Scheme = table_scheme(&nodes.family);
            let r = lebesgue_constant(&nodes, scheme, grid)?;
            values.push(Some(r.constant.to_f64_lossy()));
            reports.push(r);
        }
        rows.push(TableRow { n, count: node_count(n, d), values });
    }
    let table = LebesgueTable { dim: d, columns: families.iter().map(|f| f.name()).collect(), rows };
    Ok((table, reports))
}
