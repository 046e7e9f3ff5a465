use gridpath::constructions::radicals::radicals;
use gridpath::constructions::{
    check_path, circuit_f222, collision_geometry, conclusion_path_222, m_path, pbar_path,
    pbarbar_path, s5_discriminant, s5_interval, s5_solve, CircuitVariant, EpsilonPathParams,
    DEFAULT_S5_X,
};
use gridpath::geom::{closest_points, point_on_segment, tight_aabb};
use gridpath::oracle::{bisect_root, dense_min_distance, sphere_residuals};
use gridpath::verify::CycleClass;
use gridpath::{verify, Chain, Point, Segment};

fn report(c: &Chain) -> gridpath::VerificationReport {
    verify(c, c.grid(), &tight_aabb(c.vertices()).unwrap()).unwrap()
}

#[test]
fn constructions_cover_their_grids() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let chains = [
        m_path(2).unwrap(),
        m_path(3).unwrap(),
        check_path(2, DEFAULT_S5_X).unwrap(),
        check_path(3, DEFAULT_S5_X).unwrap(),
        circuit_f222(CircuitVariant::F).unwrap(),
        pbar_path((1.0 + phi) / 2.0).unwrap(),
        pbarbar_path(EpsilonPathParams::new(1e-7).unwrap()).unwrap(),
        conclusion_path_222().unwrap(),
    ];
    for c in &chains {
        let r = report(c);
        assert!(r.covers_all, "{}", c.label());
        assert!(r.noncollinear_ok, "{}", c.label());
        assert!(!r.repeated_edges, "{}", c.label());
    }
}

#[test]
fn printed_fprime_misses_the_upper_layer() {
    let c = circuit_f222(CircuitVariant::FPrime).unwrap();
    let r = report(&c);
    assert!(r.closed_ok);
    assert_eq!(r.cycle_class, CycleClass::Smart);
    let missed: Vec<&[i64]> = r
        .visit_counts
        .iter()
        .filter(|v| v.count == 0)
        .map(|v| v.point.as_slice())
        .collect();
    assert_eq!(missed, [[0, 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1]]);
    // the nearest edge passes about 0.0073 from (1, 1, 1)
    let p = Point::from([1.0, 1.0, 1.0]);
    let d = c
        .edges()
        .unwrap()
        .iter()
        .map(|e| gridpath::geom::point_segment_distance(&p, e).unwrap())
        .fold(f64::INFINITY, f64::min);
    assert!(d > 0.007 && d < 0.0075, "{d}");
}

#[test]
fn uncrossing_claims() {
    assert!(!report(&m_path(2).unwrap()).uncrossing);
    assert!(!report(&m_path(3).unwrap()).uncrossing);
    assert!(report(&check_path(2, DEFAULT_S5_X).unwrap()).uncrossing);
    for e in [1e-3, 1e-5, 1e-7] {
        let c = pbarbar_path(EpsilonPathParams::new(e).unwrap()).unwrap();
        assert!(report(&c).passed(), "epsilon {e}");
    }
    // the circuits are unconstrained: closed and covering, but self-crossing
    let f = report(&circuit_f222(CircuitVariant::F).unwrap());
    assert!(f.closed_ok && f.covers_all && f.containment_ok);
    assert!(!f.uncrossing);
    assert_eq!(f.cycle_class, CycleClass::Smart);
}

#[test]
fn volume_claim_for_the_perturbed_path() {
    for e in [1e-7, 1.1e-7] {
        let c = pbarbar_path(EpsilonPathParams::new(e).unwrap()).unwrap();
        assert!(tight_aabb(c.vertices()).unwrap().volume() < 5.5451);
    }
}

#[test]
fn interval_ends_from_independent_root_finding() {
    let (lo, hi) = s5_interval();
    let left = bisect_root(s5_discriminant, 0.3, 0.4, 1e-15).unwrap();
    assert!((left - lo).abs() < 1e-7, "{left} vs {lo}");
    // the right end is where y reaches 4 - sqrt 3, not a root of the discriminant
    let y_top = 4.0 - 3f64.sqrt();
    let right = bisect_root(
        |x| s5_solve(x).map_or(f64::NAN, |s| s.y) - y_top,
        0.8,
        hi,
        1e-14,
    )
    .unwrap();
    assert!((right - hi).abs() < 1e-9, "{right} vs {hi}");
    assert!(s5_discriminant(hi) > 0.0);
}

#[test]
fn bridge_point_on_both_spheres() {
    let (lo, hi) = s5_interval();
    for i in 0..=100 {
        let x = lo + (hi - lo) * i as f64 / 100.0;
        let s = s5_solve(x).unwrap();
        let (r1, r2) = sphere_residuals(&s.point()).unwrap();
        assert!(r1.abs() <= 1e-9 && r2.abs() <= 1e-9, "x = {x}");
    }
}

#[test]
fn bridge_edge_clears_the_middle_layer() {
    let (lo, hi) = s5_interval();
    for i in 1..20 {
        let x = lo + (hi - lo) * i as f64 / 20.0;
        let c = check_path(3, x).unwrap();
        let edges = c.edges().unwrap();
        // edges 11 and 12 meet at the bridge point; edges 13 to 17 lie in z = 1
        for bridge in [11, 12] {
            for other in 14..18 {
                let d = dense_min_distance(&edges[bridge], &edges[other], 201);
                assert!(d > 0.01, "x = {x}: edges {bridge}, {other} at {d}");
            }
        }
    }
}

#[test]
fn forbidden_collision_is_below_one() {
    let s3 = 3f64.sqrt();
    let y = (161.0 + 2.0 * s3 - (20092.0 * s3 - 17383.0).sqrt()) / 104.0;
    assert!(y < 1.0);
    assert!((collision_geometry().forbidden_y - y).abs() < 1e-12);
    assert!((radicals().forbidden_y - y).abs() < 1e-12);
}

#[test]
fn dense_distance_converges() {
    let pairs = [
        (
            Segment::new(Point::from([0.0, 0.0, 0.0]), Point::from([2.0, 1.0, 0.5])).unwrap(),
            Segment::new(Point::from([0.0, 2.0, 1.0]), Point::from([1.5, -1.0, 0.3])).unwrap(),
        ),
        (
            Segment::new(Point::from([0.0, 0.0, 0.0]), Point::from([1.0, 0.0, 0.0])).unwrap(),
            Segment::new(Point::from([0.3, 1.0, 1.0]), Point::from([0.7, -1.0, 1.0])).unwrap(),
        ),
    ];
    for (s1, s2) in pairs {
        let exact = closest_points(&s1, &s2).unwrap().distance;
        let maxlen = s1.length().max(s2.length());
        let mut prev = f64::INFINITY;
        // nested lattices: every sample of n is also a sample of 2n - 1
        for n in [3, 5, 9, 17, 33, 65, 129, 257, 513, 1025] {
            let d = dense_min_distance(&s1, &s2, n);
            assert!(d <= prev);
            assert!(d >= exact - 1e-12);
            assert!(d - exact <= 2.0 * maxlen / n as f64, "n = {n}");
            prev = d;
        }
    }
}

#[test]
fn golden_edge_does_not_contain_a_corner() {
    let x = (3.0 + 5f64.sqrt()) / 4.0;
    let s = Segment::new(Point::from([x, 0.0, x]), Point::from([0.0, 0.0, 0.0])).unwrap();
    let p = Point::from([1.0, 0.0, 0.0]);
    assert!(!point_on_segment(&p, &s, 1e-9).unwrap());
    let probe = Segment::new(p.clone(), Point::from([1.0, 0.0, 1e-6])).unwrap();
    assert!(dense_min_distance(&probe, &s, 1001) > 0.5);
}
