//! Parsers for the textual flag values: weights, simplices, degree lists, grids.

use std::path::Path;

use waldron::analysis::{parse_weight, FamilySpec, Grid};
use waldron::{Density, Simplex64, Weight64};

/// `identity`, `cosine`, `quad`, `convex:t=<t>:<w0>:<w1>` or
/// `density:file=<path>[:normalize]`.
pub fn weight(s: &str) -> Result<Weight64, String> {
    if let Some(rest) = s.strip_prefix("density:file=") {
        let (path, normalize) = match rest.strip_suffix(":normalize") {
            Some(p) => (p, true),
            None => (rest, false),
        };
        let density = read_density(Path::new(path), normalize)?;
        return Weight64::from_density(density).map_err(|e| e.to_string());
    }
    parse_weight(s).map_err(|e| e.to_string())
}

fn read_density(path: &Path, normalize: bool) -> Result<Density<f64>, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let (mut ts, mut fs) = (Vec::new(), Vec::new());
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| format!("{}: {e}", path.display()))?;
        if rec.len() != 2 {
            return Err(format!("{}: line {} needs two columns t,F(t)", path.display(), i + 1));
        }
        let (Ok(t), Ok(f)) = (rec[0].parse::<f64>(), rec[1].parse::<f64>()) else {
            if i == 0 {
                // header row
                continue;
            }
            return Err(format!("{}: line {} is not numeric", path.display(), i + 1));
        };
        ts.push(t);
        fs.push(f);
    }
    Density::from_samples(ts, fs, normalize).map_err(|e| format!("{}: {e}", path.display()))
}

/// Named reference simplices or explicit vertices `x,y;x,y;x,y`.
pub fn simplex(s: &str) -> Result<Simplex64, String> {
    match s {
        "interval" => Ok(Simplex64::interval()),
        "equilateral2d" | "triangle" => Ok(Simplex64::equilateral_2d()),
        "tetrahedron" | "centred3d" => Ok(Simplex64::centred_3d()),
        "unit1d" => Simplex64::unit(1).map_err(|e| e.to_string()),
        "unit2d" => Simplex64::unit(2).map_err(|e| e.to_string()),
        "unit3d" => Simplex64::unit(3).map_err(|e| e.to_string()),
        _ => {
            let vertices = s
                .split(';')
                .map(|v| v.split(',').map(|c| c.trim().parse::<f64>()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    format!("unknown simplex '{s}' (use interval, equilateral2d, tetrahedron, unit2d, unit3d or x,y;x,y;x,y)")
                })?;
            Simplex64::new(vertices).map_err(|e| e.to_string())
        }
    }
}

/// A parsed degree list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees(pub Vec<usize>);

/// `1..16`, `1..=16`, `3` or `1,2,5..8`.
pub fn degrees(s: &str) -> Result<Degrees, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let bad = || format!("bad degree list '{s}'");
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
            if b < a {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.contains(&0) {
        return Err("degrees must be positive".into());
    }
    Ok(Degrees(out))
}

/// `auto` or a positive subdivision count.
pub fn grid(s: &str) -> Result<Grid, String> {
    if s == "auto" {
        return Ok(Grid::Auto);
    }
    match s.parse::<usize>() {
        Ok(m) if m > 0 => Ok(Grid::Fixed(m)),
        _ => Err(format!("grid must be 'auto' or a positive integer, got '{s}'")),
    }
}

pub fn family(s: &str) -> Result<FamilySpec<f64>, String> {
    s.trim().parse().map_err(|e: waldron::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(degrees("1..3").unwrap().0, vec![1, 2, 3]);
        assert_eq!(degrees("1..=3,7").unwrap().0, vec![1, 2, 3, 7]);
        assert!(degrees("0..2").is_err());
        assert!(degrees("5..2").is_err());
        assert!(degrees("x").is_err());
    }

    #[test]
    fn simplices() {
        assert_eq!(simplex("equilateral2d").unwrap().dim(), 2);
        assert_eq!(simplex("0,0;1,0;0,1").unwrap().dim(), 2);
        assert!(simplex("0,0;1,0;2,0").is_err());
        assert!(simplex("hexagon").is_err());
    }

    #[test]
    fn grids_and_families() {
        assert_eq!(grid("auto").unwrap(), Grid::Auto);
        assert_eq!(grid("40").unwrap(), Grid::Fixed(40));
        assert!(grid("0").is_err());
        assert_eq!(family(" waldron:quad").unwrap().name(), "waldron:quad");
        assert!(family("bogus").is_err());
    }

    #[test]
    fn density_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.csv");
        std::fs::write(&p, "t,F\n0,1\n0.5,1\n").unwrap();
        let w = weight(&format!("density:file={}", p.display())).unwrap();
        assert!((w.value(0.3) - 0.3).abs() < 1e-9);
        std::fs::write(&p, "0,2\n0.5,2\n").unwrap();
        assert!(weight(&format!("density:file={}", p.display())).is_err());
        assert!(weight(&format!("density:file={}:normalize", p.display())).is_ok());
    }
}
