use waldron::analysis::{lebesgue_constant, neighbor_spacing, nearest_neighbor_distances, Grid};
use waldron::points::node_count;
use waldron::{
    concentric_points, simplex_points, spherical_full_sphere, spherical_waldron_points, waldron_points,
    waldron_points_modified_3d, Interpolant, Scheme, Simplex, Weight,
};

#[test]
fn identity_weight_recovers_simplex_points() {
    for (d, s) in [(2, Simplex::<f64>::equilateral_2d()), (3, Simplex::<f64>::centred_3d())] {
        for n in 1..=8 {
            let a = waldron_points(&s, n, &Weight::identity()).unwrap();
            let b = simplex_points(&s, n).unwrap();
            assert_eq!(a.len(), node_count(n, d));
            for (p, q) in a.nodes.iter().zip(&b.nodes) {
                for (x, y) in p.cartesian.iter().zip(&q.cartesian) {
                    assert!((x - y).abs() < 1e-14);
                }
            }
        }
    }
}

#[test]
fn families_are_symmetric_and_inside() {
    let s = Simplex::<f64>::equilateral_2d();
    for n in 1..=12 {
        for nodes in [
            simplex_points(&s, n).unwrap(),
            waldron_points(&s, n, &Weight::cosine()).unwrap(),
            waldron_points(&s, n, &Weight::quadratic()).unwrap(),
            concentric_points(n, None).unwrap(),
        ] {
            assert!(nodes.nodes_distinct(), "{} n={n}", nodes.family.name());
            assert!(nodes.is_permutation_invariant(1e-12), "{} n={n}", nodes.family.name());
            assert!(nodes.nodes.iter().all(|p| p.barycentric.is_inside()));
        }
    }
    let t = Simplex::<f64>::centred_3d();
    for n in 1..=8 {
        let nodes = waldron_points_modified_3d(&t, n, &Weight::cosine()).unwrap();
        assert!(nodes.is_permutation_invariant(1e-12));
        assert!(nodes.nodes.iter().all(|p| p.barycentric.is_inside()));
    }
}

#[test]
fn modified_points_agree_on_the_boundary_with_the_triangle() {
    // a face of the tetrahedron carries the 2D Waldron pattern
    let t = Simplex::<f64>::centred_3d();
    let w = Weight::cosine();
    let n = 6;
    let nodes = waldron_points_modified_3d(&t, n, &w).unwrap();
    let tri = waldron_points(&Simplex::<f64>::equilateral_2d(), n, &w).unwrap();
    let face: Vec<_> = nodes.nodes.iter().filter(|p| p.barycentric.coords()[3] == 0.0).collect();
    assert_eq!(face.len(), tri.len());
    for (p, q) in face.iter().zip(&tri.nodes) {
        for (a, b) in p.barycentric.coords()[..3].iter().zip(q.barycentric.coords()) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}

#[test]
fn spot_lebesgue_values() {
    let s = Simplex::<f64>::equilateral_2d();
    let r = lebesgue_constant(&simplex_points(&s, 5).unwrap(), Scheme::SimplexExplicit, Grid::Fixed(400)).unwrap();
    assert!((r.constant - 5.45).abs() < 0.06);
    let r = lebesgue_constant(&waldron_points(&s, 8, &Weight::cosine()).unwrap(), Scheme::GeneralPolynomial, Grid::Fixed(400))
        .unwrap();
    assert!((r.constant - 5.83).abs() < 0.06);
    assert!(r.constant >= 1.0);
    // rational scheme
    let r = lebesgue_constant(&waldron_points(&s, 6, &Weight::cosine()).unwrap(), Scheme::WaldronRational, Grid::Fixed(200))
        .unwrap();
    assert!(r.constant >= 1.0 && r.poles == 0);
}

#[test]
fn interpolant_reproduces_quadratics_at_concentric_points() {
    let nodes = concentric_points::<f64>(7, None).unwrap();
    let f = |x: &[f64]| 1.0 - 2.0 * x[0] + x[0] * x[1] + 0.5 * x[1] * x[1];
    let q = Interpolant::from_fn(Scheme::GeneralPolynomial, nodes, f).unwrap();
    for x in [[0.0, 0.0], [0.2, -0.3], [-0.5, -0.4], [0.1, 0.8]] {
        assert!((q.eval(&x).unwrap() - f(&x)).abs() < 1e-12);
    }
}

#[test]
fn spherical_spacing_envelope() {
    let w = Weight::<f64>::cosine();
    let n = 20;
    let unit = std::f64::consts::FRAC_PI_2 / n as f64;
    let octant: Vec<[f64; 3]> = spherical_waldron_points(n, &w).unwrap().points.iter().map(|p| p.xyz).collect();
    for d in nearest_neighbor_distances(&octant) {
        assert!((0.9..=1.6).contains(&(d / unit)), "{}", d / unit);
    }
    for n in [10, 20, 40] {
        let s = neighbor_spacing(&spherical_waldron_points(n, &w).unwrap()).unwrap();
        assert!(s.min_ratio >= 0.9 && s.max_ratio <= 1.47, "n={n}: {} {}", s.min_ratio, s.max_ratio);
    }
    assert_eq!(spherical_full_sphere(20, &w).unwrap().len(), 1602);
}
