//! Interpolation node families on simplices.

mod concentric;
mod index;
mod spherical;

pub use concentric::{
    concentric_points, concentric_points_with, optimize_concentric_radii, optimize_concentric_radii_from,
    radii_table_row, table_radii, ConcentricLayout, ConcentricOptions, EdgeRule, RadiiStart, RADII_TABLE,
    RADII_TABLE_VERSION,
};
pub use index::{enumerate_indices, MultiIndex};
pub use spherical::{spherical_full_sphere, spherical_waldron_points, SphericalPoint, SphericalSet};

use crate::error::{Error, Result};
use crate::numeric::binomial;
use crate::scalar::Scalar;
use crate::simplex::{distance, Barycentric, Simplex};
use crate::weights::Weight;

/// Which construction produced a [`NodeFamily`].
#[derive(Debug, Clone)]
pub enum FamilyKind<T> {
    Simplex,
    Waldron(Weight<T>),
    /// Waldron points whose zero coordinates stay zero, so every face carries
    /// the lower-dimensional Waldron points.
    WaldronModified3D(Weight<T>),
    /// Concentric triangles with radii `R_0 = 1 > R_1 > … > R_s`.
    Concentric(Vec<T>),
}

impl<T: Scalar> FamilyKind<T> {
    pub fn name(&self) -> String {
        match self {
            FamilyKind::Simplex => "simplex".into(),
            FamilyKind::Waldron(w) => format!("waldron:{}", w.name()),
            FamilyKind::WaldronModified3D(w) => format!("waldron3m:{}", w.name()),
            FamilyKind::Concentric(_) => "concentric".into(),
        }
    }
}

/// How a node is labelled within its family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeLabel {
    Index(MultiIndex),
    /// Slot `slot` on concentric ring `ring` (ring 0 is the outer triangle).
    Ring { ring: usize, slot: usize },
    /// The origin point of a concentric family with `n ≡ 0 (mod 3)`.
    Centre,
}

#[derive(Debug, Clone)]
pub struct Node<T> {
    pub label: NodeLabel,
    pub cartesian: Vec<T>,
    pub barycentric: Barycentric<T>,
    /// `w(α_j / n)` for Waldron nodes.
    pub baryweights: Option<Vec<T>>,
}

/// A generated set of interpolation nodes together with its provenance.
#[derive(Debug, Clone)]
pub struct NodeFamily<T> {
    pub family: FamilyKind<T>,
    pub degree: usize,
    pub simplex: Simplex<T>,
    pub nodes: Vec<Node<T>>,
}

impl<T: Scalar> NodeFamily<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.simplex.dim()
    }

    pub fn barycentrics(&self) -> impl Iterator<Item = &[T]> {
        self.nodes.iter().map(|n| n.barycentric.coords())
    }

    /// Multi-indices of the nodes, when the family is index-labelled.
    pub fn indices(&self) -> Option<Vec<MultiIndex>> {
        self.nodes
            .iter()
            .map(|n| match &n.label {
                NodeLabel::Index(a) => Some(a.clone()),
                _ => None,
            })
            .collect()
    }

    /// Smallest pairwise Euclidean distance between nodes.
    pub fn min_separation(&self) -> T {
        let mut best = T::infinity();
        for (i, a) in self.nodes.iter().enumerate() {
            for b in &self.nodes[i + 1..] {
                best = best.min(distance(&a.cartesian, &b.cartesian));
            }
        }
        best
    }

    /// True when every node is farther than `1e-10 · diameter` from every other.
    pub fn nodes_distinct(&self) -> bool {
        self.min_separation() > T::tol(1e-10) * self.simplex.diameter()
    }

    /// True when permuting barycentric coordinates maps the node set onto itself.
    ///
    /// Cardinal functions written in barycentric coordinates are then permuted
    /// among themselves, so the Lebesgue function shares the symmetry.
    pub fn is_permutation_invariant(&self, tol: T) -> bool {
        let k = self.dim() + 1;
        let mut sorted: Vec<Vec<T>> = self.barycentrics().map(<[T]>::to_vec).collect();
        sorted.sort_by(|a, b| lex_cmp(a, b));
        let perms = permutations(k);
        for p in &perms {
            for node in &sorted {
                let q: Vec<T> = p.iter().map(|&i| node[i]).collect();
                if !contains_close(&sorted, &q, tol) {
                    return false;
                }
            }
        }
        true
    }
}

fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    std::cmp::Ordering::Equal
}

fn contains_close<T: Scalar>(sorted: &[Vec<T>], q: &[T], tol: T) -> bool {
    // binary search on the first coordinate window, then linear scan
    let lo = sorted.partition_point(|v| v[0] < q[0] - tol);
    sorted[lo..]
        .iter()
        .take_while(|v| v[0] <= q[0] + tol)
        .any(|v| v.iter().zip(q).all(|(&a, &b)| (a - b).abs() <= tol))
}

/// All permutations of `0..k`.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn barycentre_node<T: Scalar>(simplex: &Simplex<T>) -> Result<Node<T>> {
    let d = simplex.dim();
    let bary = Barycentric::barycentre(d);
    Ok(Node {
        label: NodeLabel::Index(MultiIndex::new(vec![0; d + 1])),
        cartesian: simplex.from_barycentric(&bary)?,
        barycentric: bary,
        baryweights: None,
    })
}

/// The uniform lattice `Σ (α_i / n) V_i`, `|α| = n`.
///
/// Degree 0 yields the single barycentre node.
pub fn simplex_points<T: Scalar>(simplex: &Simplex<T>, n: usize) -> Result<NodeFamily<T>> {
    let d = simplex.dim();
    let nodes = if n == 0 {
        vec![barycentre_node(simplex)?]
    } else {
        let nn = T::from_usize_lossy(n);
        enumerate_indices(n, d)
            .into_iter()
            .map(|alpha| {
                let bary = Barycentric(alpha.iter().map(|&a| T::from_usize_lossy(a as usize) / nn).collect());
                Ok(Node {
                    cartesian: simplex.from_barycentric(&bary)?,
                    barycentric: bary,
                    label: NodeLabel::Index(alpha),
                    baryweights: None,
                })
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(NodeFamily { family: FamilyKind::Simplex, degree: n, simplex: simplex.clone(), nodes })
}

/// Waldron points: barycentrics `w(α_j/n) + (1 - Σ_i w(α_i/n)) / (d+1)`.
///
/// On a centred simplex the stored baryweights `w(α_j/n)` alone reproduce the
/// Cartesian point, `Σ w(α_j/n) V_j`.
pub fn waldron_points<T: Scalar>(simplex: &Simplex<T>, n: usize, w: &Weight<T>) -> Result<NodeFamily<T>> {
    let d = simplex.dim();
    let family = FamilyKind::Waldron(w.clone());
    if n == 0 {
        return Ok(NodeFamily { family, degree: 0, simplex: simplex.clone(), nodes: vec![barycentre_node(simplex)?] });
    }
    let levels = weight_levels(w, n);
    let share = T::one() / T::from_usize_lossy(d + 1);
    let nodes = enumerate_indices(n, d)
        .into_iter()
        .map(|alpha| {
            let ws: Vec<T> = alpha.iter().map(|&a| levels[a as usize]).collect();
            let defect = (T::one() - ws.iter().copied().sum::<T>()) * share;
            let bary = Barycentric(ws.iter().map(|&v| v + defect).collect());
            Ok(Node {
                cartesian: simplex.from_barycentric(&bary)?,
                barycentric: bary,
                label: NodeLabel::Index(alpha),
                baryweights: Some(ws),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NodeFamily { family, degree: n, simplex: simplex.clone(), nodes })
}

/// Modified three-dimensional Waldron points.
///
/// For each `α`, coordinates with `α_j = 0` are pinned to zero and the defect
/// is spread over the remaining `k` coordinates only:
/// `ω_j = w(α_j/n) + (1 - Σ_{i: α_i>0} w(α_i/n)) / k`.
pub fn waldron_points_modified_3d<T: Scalar>(
    simplex: &Simplex<T>,
    n: usize,
    w: &Weight<T>,
) -> Result<NodeFamily<T>> {
    if simplex.dim() != 3 {
        return Err(Error::Unsupported(format!(
            "modified Waldron points are defined for tetrahedra, got dimension {}",
            simplex.dim()
        )));
    }
    let family = FamilyKind::WaldronModified3D(w.clone());
    if n == 0 {
        return Ok(NodeFamily { family, degree: 0, simplex: simplex.clone(), nodes: vec![barycentre_node(simplex)?] });
    }
    let levels = weight_levels(w, n);
    let nodes = enumerate_indices(n, 3)
        .into_iter()
        .map(|alpha| {
            let ws: Vec<T> = alpha.iter().map(|&a| levels[a as usize]).collect();
            let bary = Barycentric(face_restricted_waldron(&alpha, &ws));
            Ok(Node {
                cartesian: simplex.from_barycentric(&bary)?,
                barycentric: bary,
                label: NodeLabel::Index(alpha),
                baryweights: Some(ws),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NodeFamily { family, degree: n, simplex: simplex.clone(), nodes })
}

fn face_restricted_waldron<T: Scalar>(alpha: &MultiIndex, ws: &[T]) -> Vec<T> {
    let active = alpha.iter().filter(|&&a| a > 0).count();
    let sum: T = alpha.iter().zip(ws).filter(|(&a, _)| a > 0).map(|(_, &v)| v).sum();
    let defect = (T::one() - sum) / T::from_usize_lossy(active);
    alpha.iter().zip(ws).map(|(&a, &v)| if a > 0 { v + defect } else { T::zero() }).collect()
}

/// `w(j/n)` for `j = 0..=n`.
pub(crate) fn weight_levels<T: Scalar>(w: &Weight<T>, n: usize) -> Vec<T> {
    let nn = T::from_usize_lossy(n);
    (0..=n).map(|j| w.value(T::from_usize_lossy(j) / nn)).collect()
}

/// Number of nodes `C(n + d, d)` of a degree-`n` family in dimension `d`.
pub fn node_count(n: usize, d: usize) -> usize {
    binomial(n + d, d)
}
