//! Concentric-triangle points on the centred equilateral triangle.
//!
//! For degree `n` and `s = ⌊(n-1)/3⌋`, ring `i = 0..=s` is the triangle with
//! vertices `R_i V_j` and carries `3m` points, `m = n - 3i`: the three vertices
//! plus `m - 1` Chebyshev-Lobatto points per edge. A single origin point is
//! added when `3 | n`. The inner radii maximize the Vandermonde determinant.

use crate::basis::TotalDegreeBasis;
use crate::error::{Error, Result};
use crate::numeric::legendre_lobatto;
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::scalar::Scalar;
use crate::simplex::{Barycentric, Simplex};

use super::{barycentre_node, FamilyKind, Node, NodeFamily, NodeLabel};

/// Bumped whenever [`RADII_TABLE`] changes.
pub const RADII_TABLE_VERSION: u32 = 1;

/// `(degree, point count, radii)` rows of the reference radii table. A trailing
/// `0` marks the origin point present when `3 | n`; it is not a ring radius.
pub const RADII_TABLE: &[(usize, usize, &[f64])] = &[
    (1, 3, &[1.0]),
    (2, 6, &[1.0]),
    (3, 10, &[1.0, 0.0]),
    // (1 + 3√5) / 22
    (4, 15, &[1.0, 0.350_372_906_022_698_6]),
    (5, 21, &[1.0, 0.546_713_389_097_718_3]),
    (6, 28, &[1.0, 0.662_591_473_031_731_9, 0.0]),
    (7, 36, &[1.0, 0.739_209_720_515_904_1, 0.209_917_892_283_947_6]),
    (8, 45, &[1.0, 0.792_697_959_339_717_5, 0.363_073_119_644_239_2]),
    (9, 55, &[1.0, 0.831_401_838_972_166_2, 0.471_348_179_285_692_7, 0.0]),
    (10, 66, &[1.0, 0.860_301_183_247_777_9, 0.554_788_685_816_618_2, 0.148_940_091_840_653_2]),
    (11, 78, &[1.0, 0.882_429_539_291_045_2, 0.620_729_145_541_543_3, 0.269_154_155_659_140_4]),
    (12, 91, &[1.0, 0.899_728_244_382_620_7, 0.673_454_380_954_270_8, 0.361_249_120_762_131_2, 0.0]),
];

/// The table row for degree `n`, if tabulated.
pub fn radii_table_row(n: usize) -> Option<(usize, usize, &'static [f64])> {
    RADII_TABLE.iter().copied().find(|&(deg, _, _)| deg == n)
}

/// Ring radii `R_0 = 1, R_1, …, R_s` from the table (origin marker dropped).
pub fn table_radii<T: Scalar>(n: usize) -> Option<Vec<T>> {
    let s = ring_count(n)?;
    let (_, _, row) = radii_table_row(n)?;
    Some(row[..=s].iter().map(|&r| T::lit(r)).collect())
}

/// `s = ⌊(n-1)/3⌋`, the index of the innermost ring.
fn ring_count(n: usize) -> Option<usize> {
    n.checked_sub(1).map(|k| k / 3)
}

fn validate_radii<T: Scalar>(n: usize, radii: &[T]) -> Result<()> {
    let s = ring_count(n).ok_or_else(|| Error::InvalidRadii("degree must be positive".into()))?;
    if radii.len() != s + 1 {
        return Err(Error::InvalidRadii(format!(
            "degree {n} needs {} radii (R_0 = 1 through R_{s}), got {}",
            s + 1,
            radii.len()
        )));
    }
    if (radii[0] - T::one()).abs() > T::tol(1e-12) {
        return Err(Error::InvalidRadii(format!("outer radius must be 1, got {}", radii[0])));
    }
    if radii.iter().any(|&r| !(r > T::zero() && r <= T::one())) {
        return Err(Error::InvalidRadii("radii must lie in (0, 1]".into()));
    }
    if radii.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::InvalidRadii("radii must be strictly decreasing".into()));
    }
    Ok(())
}

/// Distribution of the points along each ring edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRule {
    /// `t_k = (1 - cos(kπ/m)) / 2`.
    ChebyshevLobatto,
    /// Legendre-Gauss-Lobatto nodes mapped to `[0, 1]`.
    LegendreLobatto,
}

impl EdgeRule {
    /// The `m + 1` edge parameters in `[0, 1]`, ascending.
    pub fn params<T: Scalar>(self, m: usize) -> Vec<T> {
        let half = T::lit(0.5);
        match self {
            EdgeRule::ChebyshevLobatto => (0..=m)
                .map(|k| (T::one() - (T::PI() * T::from_usize_lossy(k) / T::from_usize_lossy(m)).cos()) * half)
                .collect(),
            EdgeRule::LegendreLobatto => legendre_lobatto::<T>(m).into_iter().map(|x| (x + T::one()) * half).collect(),
        }
    }
}

/// Edge rules for the outer ring and for every inner ring.
///
/// The default places Chebyshev-Lobatto points on all rings. The tabulated
/// radii are the determinant maximizers for Legendre-Gauss-Lobatto inner
/// edges instead ([`ConcentricLayout::radii_table`]); the outer rule does not
/// move the optimal radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConcentricLayout {
    pub outer: EdgeRule,
    pub inner: EdgeRule,
}

impl Default for ConcentricLayout {
    fn default() -> Self {
        Self { outer: EdgeRule::ChebyshevLobatto, inner: EdgeRule::ChebyshevLobatto }
    }
}

impl ConcentricLayout {
    /// The layout under which [`RADII_TABLE`] maximizes the Vandermonde determinant.
    pub fn radii_table() -> Self {
        Self { outer: EdgeRule::ChebyshevLobatto, inner: EdgeRule::LegendreLobatto }
    }
}

/// Barycentric coordinates of the concentric points, in node order.
fn concentric_barycentrics<T: Scalar>(n: usize, radii: &[T], layout: ConcentricLayout) -> Vec<(NodeLabel, Barycentric<T>)> {
    let third = T::one() / T::lit(3.0);
    let mut out = Vec::new();
    for (ring, &r) in radii.iter().enumerate() {
        let m = n - 3 * ring;
        let rule = if ring == 0 { layout.outer } else { layout.inner };
        let ts = rule.params::<T>(m);
        let mut slot = 0;
        for edge in 0..3 {
            let (a, b) = (edge, (edge + 1) % 3);
            for &t in &ts[..m] {
                // R·(V_a + t(V_b - V_a)) on a centred triangle
                let mut l = vec![(T::one() - r) * third; 3];
                l[a] += r * (T::one() - t);
                l[b] += r * t;
                out.push((NodeLabel::Ring { ring, slot }, Barycentric(l)));
                slot += 1;
            }
        }
    }
    if n.is_multiple_of(3) {
        out.push((NodeLabel::Centre, Barycentric::barycentre(2)));
    }
    out
}

/// Concentric-triangle points of degree `n` on the centred equilateral
/// triangle with the default layout. Without explicit radii the reference
/// table is used (`n ≤ 12`).
pub fn concentric_points<T: Scalar>(n: usize, radii: Option<&[T]>) -> Result<NodeFamily<T>> {
    concentric_points_with(n, radii, ConcentricLayout::default())
}

/// [`concentric_points`] with an explicit edge layout.
pub fn concentric_points_with<T: Scalar>(n: usize, radii: Option<&[T]>, layout: ConcentricLayout) -> Result<NodeFamily<T>> {
    let simplex = Simplex::equilateral_2d();
    if n == 0 {
        let node = barycentre_node(&simplex)?;
        return Ok(NodeFamily { family: FamilyKind::Concentric(vec![]), degree: 0, simplex, nodes: vec![node] });
    }
    let radii: Vec<T> = match radii {
        Some(r) => r.to_vec(),
        None => table_radii(n).ok_or_else(|| {
            Error::InvalidRadii(format!(
                "no tabulated radii for degree {n}; supply radii or run the optimizer"
            ))
        })?,
    };
    validate_radii(n, &radii)?;
    let nodes = concentric_barycentrics(n, &radii, layout)
        .into_iter()
        .map(|(label, bary)| {
            Ok(Node { cartesian: simplex.from_barycentric(&bary)?, barycentric: bary, label, baryweights: None })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NodeFamily { family: FamilyKind::Concentric(radii), degree: n, simplex, nodes })
}

/// Where the radius optimizer starts.
#[derive(Debug, Clone, PartialEq)]
pub enum RadiiStart<T> {
    /// `R_i = ((s + 1 - i) / (s + 1))^{3/2}`.
    Neutral,
    /// The reference table, falling back to `Neutral` beyond it.
    Table,
    /// Caller-supplied inner radii `R_1..R_s`.
    Given(Vec<T>),
}

#[derive(Debug, Clone)]
pub struct ConcentricOptions<T> {
    pub start: RadiiStart<T>,
    pub layout: ConcentricLayout,
    pub nelder_mead: NelderMeadOptions<T>,
}

impl<T: Scalar> Default for ConcentricOptions<T> {
    fn default() -> Self {
        Self { start: RadiiStart::Table, layout: ConcentricLayout::default(), nelder_mead: NelderMeadOptions::default() }
    }
}

fn neutral_start<T: Scalar>(s: usize) -> Vec<T> {
    let denom = T::from_usize_lossy(s + 1);
    (1..=s).map(|i| (T::from_usize_lossy(s + 1 - i) / denom).powf(T::lit(1.5))).collect()
}

/// Inner radii `R_1..R_s` maximizing `|det V|` for degree `n`, starting from
/// the table where available.
pub fn optimize_concentric_radii<T: Scalar>(n: usize) -> Result<Vec<T>> {
    optimize_concentric_radii_from(n, &ConcentricOptions::default())
}

/// Inner radii `R_1..R_s` maximizing `|det V|` for degree `n`.
///
/// Empty for `n ≤ 3`, where there is no inner ring to place.
pub fn optimize_concentric_radii_from<T: Scalar>(n: usize, opts: &ConcentricOptions<T>) -> Result<Vec<T>> {
    let s = ring_count(n).ok_or_else(|| Error::Domain("degree must be positive".into()))?;
    if s == 0 {
        return Ok(Vec::new());
    }
    let start: Vec<T> = match &opts.start {
        RadiiStart::Neutral => neutral_start(s),
        RadiiStart::Table => table_radii(n).map(|r| r[1..].to_vec()).unwrap_or_else(|| neutral_start(s)),
        RadiiStart::Given(r) => r.clone(),
    };
    if start.len() != s {
        return Err(Error::InvalidRadii(format!("degree {n} has {s} inner radii, start has {}", start.len())));
    }
    let basis = TotalDegreeBasis::new(2, n);
    let objective = |inner: &[T]| -> T {
        let mut radii = Vec::with_capacity(s + 1);
        radii.push(T::one());
        radii.extend_from_slice(inner);
        if radii.windows(2).any(|w| !(w[1] < w[0])) || !(radii[s] > T::zero()) {
            return T::infinity();
        }
        let pts = concentric_barycentrics(n, &radii, opts.layout);
        let v = basis.log_abs_vandermonde(pts.iter().map(|(_, b)| b.coords()));
        if v.is_finite() {
            -v
        } else {
            T::infinity()
        }
    };
    if !objective(&start).is_finite() {
        return Err(Error::InvalidRadii("start radii violate 1 > R_1 > … > R_s > 0".into()));
    }
    let min = nelder_mead(objective, &start, &opts.nelder_mead)?;
    Ok(min.x)
}
