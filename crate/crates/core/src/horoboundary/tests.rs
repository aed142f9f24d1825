use super::*;
use crate::rational::{frac, int};

fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

fn l1() -> PolyhedralNorm {
    PolyhedralNorm::new(Polytope::convex_hull(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])]).unwrap()).unwrap()
}

// Dual ball vertices in canonical order: (-1,-1), (-1,1), (1,-1), (1,1).
const B1: usize = 0;
const B4: usize = 1;

fn h_a1(n: &PolyhedralNorm, p: &[i64]) -> Horofunction {
    Horofunction::new(n, &[B1, B4], &v(p)).unwrap()
}

#[test]
fn canonical_basepoints() {
    let n = l1();
    assert_eq!(h_a1(&n, &[5, 2]).basepoint(), &v(&[0, 2]));
    let vertex = Horofunction::new(&n, &[B1], &v(&[3, -7])).unwrap();
    assert!(vertex.basepoint().is_zero());
    assert!(matches!(Horofunction::new(&n, &[0, 1, 2, 3], &v(&[0, 0])), Err(Error::NotProper)));
    assert!(matches!(Horofunction::new(&n, &[0, 3], &v(&[0, 0])), Err(Error::NotAFace(_))));
}

#[test]
fn example_formulas() {
    let n = l1();
    let b1 = Horofunction::new(&n, &[B1], &v(&[0, 0])).unwrap();
    assert_eq!(b1.eval(&v(&[2, 5])).unwrap(), int(-7));
    let h = h_a1(&n, &[0, 2]);
    assert_eq!(h.eval(&v(&[1, 1])).unwrap(), int(-2));
    assert_eq!(h.eval(h.basepoint()).unwrap(), -n.face_pseudo_norm(h.face(), h.basepoint()).unwrap());
    assert_eq!(h.eval(h.basepoint()).unwrap(), int(-2));
    assert_eq!(h.eval(&v(&[0, 0])).unwrap(), int(0));
}

#[test]
fn ray_limits() {
    let n = l1();
    let h = limit_of_ray(&n, &v(&[0, 3]), &v(&[1, 0])).unwrap();
    assert!(h.equals(&h_a1(&n, &[0, 3])).unwrap());
    let t = int(100_000_000);
    for y in [v(&[1, 1]), v(&[-4, 7]), v(&[2, -9])] {
        let z = v(&[0, 3]).add_scaled(&t, &v(&[1, 0]));
        assert_eq!(psi(&n, &z, &y).unwrap(), h.eval(&y).unwrap());
    }
    let diag = limit_of_ray(&n, &v(&[0, 0]), &v(&[1, 1])).unwrap();
    assert_eq!(diag.face().vertex_indices(), &[B1]);
    assert!(matches!(limit_of_ray(&n, &v(&[0, 0]), &v(&[0, 0])), Err(Error::ZeroDirection)));
}

#[test]
fn equality_is_canonical() {
    let n = l1();
    assert!(h_a1(&n, &[0, 2]).equals(&h_a1(&n, &[7, 2])).unwrap());
    let b1 = Horofunction::new(&n, &[B1], &v(&[0, 0])).unwrap();
    let b2 = Horofunction::new(&n, &[2], &v(&[0, 0])).unwrap();
    assert!(!b1.equals(&b2).unwrap());
    let other = PolyhedralNorm::new(n.dual_ball().clone()).unwrap();
    let foreign = Horofunction::new(&other, &[0], &v(&[0, 0])).unwrap();
    assert!(matches!(b1.equals(&foreign), Err(Error::MismatchedNorms)));
}

#[test]
fn strata_and_walsh() {
    let n = l1();
    let strata = enumerate_strata(&n);
    assert_eq!(strata.len(), 8);
    assert_eq!(strata.iter().filter(|s| s.parameter_dim == 1).count(), 4);
    assert_eq!(walsh_criterion(&n).extreme_set_count, 9);
    let seg = PolyhedralNorm::new(Polytope::convex_hull(&[v(&[-1]), v(&[1])]).unwrap()).unwrap();
    assert_eq!(enumerate_strata(&seg).len(), 2);
    assert_eq!(walsh_criterion(&seg), WalshReport { satisfied: true, extreme_set_count: 3 });
}

#[test]
fn dual_points() {
    let n = l1();
    let b1 = Horofunction::new(&n, &[B1], &v(&[0, 0])).unwrap();
    assert_eq!(b1.to_dual_point(), vec![-1.0, -1.0]);
    assert_eq!(h_a1(&n, &[0, 0]).to_dual_point(), vec![-1.0, 0.0]);
    let far = h_a1(&n, &[0, 1_000_000]).to_dual_point();
    assert!((far[0] + 1.0).abs() < 1e-12 && (far[1] - 1.0).abs() < 1e-5);
    let near = Horofunction::new(&n, &[B1, B4], &Vector::new(vec![int(0), frac(-1, 3)])).unwrap();
    assert_eq!(near.to_dual_point(), vec![-1.0, -0.25]);
}

#[test]
fn json_round_trip() {
    let n = l1();
    let h = h_a1(&n, &[4, -3]);
    let text = serde_json::to_string(&h.to_json()).unwrap();
    assert_eq!(text, r#"{"face":[0,1],"p":["0","-3"]}"#);
    let back = Horofunction::from_json(&n, &serde_json::from_str(&text).unwrap()).unwrap();
    assert!(back.equals(&h).unwrap());
}

#[test]
fn sequences() {
    let n = l1();
    let ray = Ray::new(v(&[0, 0]), v(&[2, 1]));
    let times: Vec<Scalar> = (1..12).map(int).collect();
    let straight = SequenceSample::along_ray(&ray, &times);
    let tiny = frac(1, 1_000_000);
    assert!(almost_geodesic_check(&n, &straight, &tiny, 0).unwrap());
    assert!(chain_check(&n, &straight, &tiny, 0).unwrap());

    let zigzag = SequenceSample::new(
        (1..12).map(|k| if k % 2 == 0 { v(&[k, 0]) } else { v(&[0, k]) }).collect(),
        v(&[0, 0]),
    );
    assert!(!almost_geodesic_check(&n, &zigzag, &int(1), 0).unwrap());
    assert!(!chain_check(&n, &zigzag, &int(1), 0).unwrap());

    let still = SequenceSample::new(vec![v(&[1, 1]); 4], v(&[0, 0]));
    assert!(matches!(almost_geodesic_check(&n, &still, &int(1), 0), Err(Error::DegenerateSample(_))));
    assert!(matches!(chain_check(&n, &straight, &int(1), 10), Err(Error::DegenerateSample(_))));
}

#[test]
fn midpoints() {
    let n = l1();
    let samples = [v(&[1, 1]), v(&[-3, 2]), v(&[0, -5])];
    let r1 = Ray::new(v(&[0, 0]), v(&[1, 0]));
    let r2 = Ray::new(v(&[5, 0]), v(&[1, 0]));
    let half = MidpointSchedule::constant(frac(1, 2), 6);
    assert!(convexity_midpoint_test(&n, &r1, &r2, &half, &samples, 1e-6).unwrap());
    assert!(convexity_midpoint_test(&n, &r1, &r1, &half, &samples, 1e-6).unwrap());
    assert!(convexity_midpoint_test(&n, &r1, &r2, &MidpointSchedule::alternating(6), &samples, 1e-6).unwrap());
    let r3 = Ray::new(v(&[0, 4]), v(&[1, 0]));
    assert!(matches!(convexity_midpoint_test(&n, &r1, &r3, &half, &samples, 1e-6), Err(Error::DistinctLimits)));
}
