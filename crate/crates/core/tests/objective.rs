mod common;

use common::{brute_value, random_points, wp};
use maximin_core::geom::{Containment, Point};
use maximin_core::instances::{generate, InstanceSpec};
use maximin_core::mesh::ConvexPolygon;
use maximin_core::objective::{evaluate, in_region, Evaluation};
use maximin_core::Instance;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn pruned_iff_value_below_incumbent() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let pts = random_points(&mut rng, 50);
    let mut pruned = 0;
    for _ in 0..10_000 {
        let x = Point::new(rng.gen_range(-0.5..1.5), rng.gen_range(-0.5..1.5));
        let full = evaluate(x, &pts, None).value().unwrap();
        assert!((full - brute_value(x.x, x.y, &pts)).abs() <= 1e-14 * (1.0 + full));
        let incumbent = rng.gen_range(0.0..1.0);
        match evaluate(x, &pts, Some(incumbent)) {
            Evaluation::Pruned => {
                pruned += 1;
                assert!(full < incumbent);
            }
            Evaluation::Value(v) => {
                assert!(full >= incumbent);
                assert_eq!(v, full);
            }
        }
    }
    assert!(pruned > 1_000 && pruned < 9_000);
}

#[test]
fn ties_with_the_incumbent_are_not_pruned() {
    let pts = [wp(1, 0.0, 0.0, 2.0)];
    let x = Point::new(3.0, 4.0);
    assert_eq!(evaluate(x, &pts, Some(10.0)), Evaluation::Value(10.0));
    assert_eq!(evaluate(x, &pts, Some(10.0 + 1e-12)), Evaluation::Pruned);
}

#[test]
fn objective_is_lipschitz_in_the_largest_weight() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let pts = random_points(&mut rng, 40);
    let wmax = pts.iter().map(|p| p.weight).fold(0.0, f64::max);
    for _ in 0..10_000 {
        let x = Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let y = Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let fx = evaluate(x, &pts, None).value().unwrap();
        let fy = evaluate(y, &pts, None).value().unwrap();
        assert!((fx - fy).abs() <= wmax * x.distance(&y) + 1e-12);
    }
}

#[test]
fn zero_exactly_at_demand_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let pts = random_points(&mut rng, 30);
    for p in &pts {
        assert_eq!(evaluate(p.location, &pts, None), Evaluation::Value(0.0));
    }
    for _ in 0..10_000 {
        let x = Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        if pts.iter().all(|p| p.location != x) {
            assert!(evaluate(x, &pts, None).value().unwrap() > 0.0);
        }
    }
}

#[test]
fn published_optimum_value_for_hundred_points() {
    let inst = generate(&InstanceSpec::new(100)).unwrap();
    let v = inst.value(Point::new(8.04233, 9.83530));
    assert!((v - 2.13972).abs() <= 1e-4, "{v}");
}

#[test]
fn instance_rejects_points_outside_the_region() {
    let pts = vec![wp(1, 0.0, 0.0, 1.0), wp(2, 1.0, 0.0, 1.0), wp(3, 0.0, 2.0, 1.0)];
    let square = ConvexPolygon::square(0.0, 1.0).unwrap();
    assert!(Instance::with_region(pts.clone(), square).is_err());
    let big = ConvexPolygon::square(-1.0, 3.0).unwrap();
    assert!(Instance::with_region(pts, big).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn in_region_matches_square_bounds(x in -1.0..2.0f64, y in -1.0..2.0f64) {
        let sq = ConvexPolygon::square(0.0, 1.0).unwrap();
        let c = in_region(Point::new(x, y), &sq);
        let margin = x.min(y).min(1.0 - x).min(1.0 - y);
        if margin > 1e-9 {
            prop_assert_eq!(c, Containment::Inside);
        } else if margin < -1e-9 {
            prop_assert_eq!(c, Containment::Outside);
        }
    }
}
