use proptest::prelude::*;
use waldron::analysis::{spacing_d, parse_weight};
use waldron::{
    baran_distance, great_circle, sphere_lift, sum_bounds_check, Barycentric, BaryweightChart, Density, Simplex,
    Weight,
};

fn weights() -> Vec<Weight<f64>> {
    let density = Density::from_fn(|t: f64| 1.0 + 4.0 * t * t, true).unwrap();
    vec![
        Weight::identity(),
        Weight::cosine(),
        Weight::quadratic(),
        Weight::from_density(density).unwrap(),
        parse_weight("convex:t=0.3").unwrap(),
    ]
}

/// A point of the standard simplex with `k` entries from unnormalized positives.
fn simplex_point(k: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, k).prop_filter_map("degenerate", |v| {
        let s: f64 = v.iter().sum();
        (s > 1e-6).then(|| v.iter().map(|x| x / s).collect())
    })
}

proptest! {
    #[test]
    fn weight_is_complementary_and_monotone(x in 0.0f64..=1.0, y in 0.0f64..=1.0) {
        for w in weights() {
            prop_assert!(w.check_complementary(x, 1e-12).unwrap(), "{}", w.name());
            let (a, b) = if x <= y { (x, y) } else { (y, x) };
            prop_assert!(w.value(a) <= w.value(b) + 1e-15, "{}", w.name());
            prop_assert!(w.check_diagonal_bound(x).unwrap());
        }
    }

    #[test]
    fn weight_inverse_round_trips(x in 0.0f64..=1.0) {
        for w in weights() {
            let y = w.value(x);
            let back = w.inverse_value(y);
            // the inverse is ill-conditioned where w' vanishes, so compare in the image
            prop_assert!((w.value(back) - y).abs() < 1e-12, "{}: x={x} back={back}", w.name());
        }
    }

    #[test]
    fn weight_is_superadditive(theta in simplex_point(4), scale in 0.0f64..=1.0) {
        let scaled: Vec<f64> = theta.iter().map(|t| t * scale).collect();
        for w in weights() {
            prop_assert!(w.check_superadditive(&scaled).unwrap(), "{}", w.name());
            prop_assert!(w.check_partition_bound(&theta).unwrap());
        }
    }

    #[test]
    fn sum_bounds_hold(theta in simplex_point(3)) {
        for w in weights() {
            prop_assert!(sum_bounds_check(&w, &theta).is_ok(), "{}: {theta:?}", w.name());
        }
    }

    #[test]
    fn chart_round_trip_triangle(theta in simplex_point(3)) {
        for w in weights() {
            let chart = BaryweightChart::new(Simplex::equilateral_2d(), w.clone());
            let lambda = chart.forward(&theta).unwrap();
            let inv = chart.invert(&lambda).unwrap();
            let back = chart.forward(&inv.theta).unwrap();
            for (a, b) in back.coords().iter().zip(lambda.coords()) {
                prop_assert!((a - b).abs() < 1e-10, "{}", w.name());
            }
        }
    }

    #[test]
    fn chart_is_onto_the_triangle(lambda in simplex_point(3)) {
        for w in weights() {
            let chart = BaryweightChart::new(Simplex::equilateral_2d(), w);
            prop_assert!(chart.invert(&Barycentric(lambda.clone())).is_ok());
        }
    }

    #[test]
    fn simplex_coordinates_round_trip(lambda in simplex_point(4)) {
        let t = Simplex::<f64>::centred_3d();
        let x = t.from_barycentric(&Barycentric(lambda.clone())).unwrap();
        let back = t.to_barycentric(&x).unwrap();
        for (a, b) in back.coords().iter().zip(&lambda) {
            prop_assert!((a - b).abs() < 1e-13);
        }
        prop_assert!((back.sum() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn baran_distance_is_great_circle(a in simplex_point(3), b in simplex_point(3)) {
        let (a, b) = (Barycentric(a), Barycentric(b));
        let d = baran_distance(&a, &b).unwrap();
        let g = great_circle(&sphere_lift(&a).unwrap(), &sphere_lift(&b).unwrap());
        prop_assert!((d - g).abs() < 1e-12);
        prop_assert!((0.0..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&d));
        prop_assert!((baran_distance(&b, &a).unwrap() - d).abs() < 1e-15);
    }

    #[test]
    fn spacing_closed_form_matches_differences(theta in simplex_point(3)) {
        prop_assume!(theta[0] > 1e-3 && theta[1] > 1e-3);
        let v = spacing_d(&Weight::cosine(), &theta).unwrap();
        prop_assert!(v.relative_gap() < 1e-6, "{theta:?}: {v:?}");
    }
}

#[test]
fn f32_paths_agree_with_f64() {
    let w32 = Weight::<f32>::cosine();
    let w64 = Weight::<f64>::cosine();
    for k in 0..=20 {
        let x = k as f64 / 20.0;
        assert!((w32.value(x as f32) as f64 - w64.value(x)).abs() < 1e-6);
    }
    let nodes = waldron::waldron_points(&Simplex::<f32>::equilateral_2d(), 5, &w32).unwrap();
    assert_eq!(nodes.len(), 21);
    let chart = BaryweightChart::new(Simplex::<f32>::equilateral_2d(), w32);
    let inv = chart.invert(&Barycentric(vec![0.2f32, 0.3, 0.5])).unwrap();
    let back = chart.forward(&inv.theta).unwrap();
    assert!((back.coords()[2] - 0.5).abs() < 1e-5);
}
