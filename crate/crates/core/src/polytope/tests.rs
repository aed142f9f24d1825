use super::*;
use crate::rational::{frac, int};

fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

fn l1_ball() -> Polytope {
    Polytope::convex_hull(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])]).unwrap()
}

fn square() -> Polytope {
    Polytope::convex_hull(&[v(&[-1, -1]), v(&[1, -1]), v(&[1, 1]), v(&[-1, 1])]).unwrap()
}

#[test]
fn hull_drops_interior_points() {
    let p = Polytope::convex_hull(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1]), v(&[0, 0])]).unwrap();
    assert_eq!(p.vertices().len(), 4);
    assert!(!p.vertices().contains(&v(&[0, 0])));
    assert_eq!(p, l1_ball());
}

#[test]
fn hull_drops_points_on_edges_and_duplicates() {
    let p = Polytope::convex_hull(&[v(&[0, 0]), v(&[2, 0]), v(&[1, 0]), v(&[0, 2]), v(&[2, 0])]).unwrap();
    assert_eq!(p.vertices(), &[v(&[0, 0]), v(&[0, 2]), v(&[2, 0])]);
    assert_eq!(p.facets().len(), 3);
}

#[test]
fn triangle_facets_match_pairwise_check() {
    // Oracle: for each pair of vertices, the line through them is a facet
    // iff the third vertex lies strictly on one side.
    let pts = [v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])];
    let p = Polytope::convex_hull(&pts).unwrap();
    assert_eq!(p.vertices().len(), 3);
    assert_eq!(p.facets().len(), 3);
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let d = &pts[j] - &pts[i];
        let normal = Vector::new(vec![-d[1].clone(), d[0].clone()]);
        let side = normal.dot(&(&pts[k] - &pts[i]));
        assert!(!side.is_zero());
        let normal = if side.is_positive() { normal } else { -&normal };
        let expected = Halfspace::new(normal.clone(), normal.dot(&pts[i])).unwrap();
        assert!(p.facets().contains(&expected), "missing facet through {i},{j}");
    }
}

#[test]
fn l1_ball_halfspaces_are_the_sign_vectors() {
    let p = l1_ball();
    let mut functionals: Vec<Vector> = p.facets().iter().map(|h| h.functional().unwrap().clone()).collect();
    functionals.sort();
    assert_eq!(functionals, vec![v(&[-1, -1]), v(&[-1, 1]), v(&[1, -1]), v(&[1, 1])]);
}

#[test]
fn square_from_halfspaces_matches_pairwise_solutions() {
    let hs: Vec<Halfspace> = [[1, 0], [-1, 0], [0, 1], [0, -1]]
        .iter()
        .map(|n| Halfspace::from_functional(v(n)))
        .collect();
    // Oracle: solve every 2x2 equality system and keep feasible solutions.
    let mut oracle = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            let a = [hs[i].normal().clone(), hs[j].normal().clone()];
            if let Some(x) = linalg::solve(&a, &Vector::new(vec![int(-1), int(-1)])) {
                if hs.iter().all(|h| h.contains(&x)) {
                    oracle.push(x);
                }
            }
        }
    }
    oracle.sort();
    oracle.dedup();
    assert_eq!(halfspaces_to_vertices(&hs, 2).unwrap(), oracle);
    assert_eq!(Polytope::from_halfspaces(&hs, 2).unwrap(), square());
}

#[test]
fn half_plane_is_unbounded() {
    let hs = vec![Halfspace::from_functional(v(&[1, 0]))];
    assert!(matches!(halfspaces_to_vertices(&hs, 2), Err(Error::Unbounded)));
    let hs = vec![Halfspace::from_functional(v(&[1, 0])), Halfspace::from_functional(v(&[0, 1]))];
    assert!(matches!(halfspaces_to_vertices(&hs, 2), Err(Error::Unbounded)));
}

#[test]
fn vertex_halfspace_round_trip() {
    let p = Polytope::convex_hull(&[v(&[3, 0]), v(&[0, 2]), v(&[-1, 0]), v(&[0, -1]), v(&[1, 1])]).unwrap();
    let hs = vertices_to_halfspaces(p.vertices()).unwrap();
    assert_eq!(halfspaces_to_vertices(&hs, 2).unwrap(), p.vertices());
}

#[test]
fn polar_of_l1_ball_is_square_and_back() {
    let b = l1_ball();
    let dual = b.polar_dual().unwrap();
    assert_eq!(dual, square());
    assert_eq!(dual.polar_dual().unwrap(), b);
}

#[test]
fn polar_of_triangle_solves_vertex_pairs() {
    let pts = [v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])];
    let t = Polytope::convex_hull(&pts).unwrap();
    let dual = t.polar_dual().unwrap();
    // Oracle: y with <y|a_i> = <y|a_j> = -1 for each vertex pair.
    let mut oracle = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let y = linalg::solve(&[pts[i].clone(), pts[j].clone()], &Vector::new(vec![int(-1), int(-1)])).unwrap();
            assert!(pts.iter().all(|a| y.dot(a) >= int(-1)));
            oracle.push(y);
        }
    }
    oracle.sort();
    assert_eq!(dual.vertices(), oracle.as_slice());
    assert_eq!(dual.vertices(), &[v(&[-1, -1]), v(&[-1, 2]), v(&[2, -1])]);
}

#[test]
fn polar_requires_interior_origin() {
    let off = Polytope::convex_hull(&[v(&[1, 1]), v(&[2, 1]), v(&[1, 2])]).unwrap();
    assert!(matches!(off.polar_dual(), Err(Error::OriginNotInterior)));
    let touching = Polytope::convex_hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
    assert!(matches!(touching.polar_dual(), Err(Error::OriginNotInterior)));
}

#[test]
fn lower_dimensional_polar_in_span() {
    // Hexagon of A2 roots inside the trace-zero plane of R^3.
    let roots: Vec<Vector> = [[1, -1, 0], [-1, 1, 0], [1, 0, -1], [-1, 0, 1], [0, 1, -1], [0, -1, 1]]
        .iter()
        .map(|r| v(r))
        .collect();
    let hex = Polytope::convex_hull(&roots).unwrap();
    assert_eq!(hex.affine_dim(), 2);
    assert_eq!((hex.vertices().len(), hex.facets().len()), (6, 6));
    assert!(hex.has_origin_in_relative_interior());
    let dual = hex.polar_dual().unwrap();
    for y in dual.vertices() {
        let total: Scalar = y.iter().cloned().sum();
        assert!(total.is_zero());
    }
    assert_eq!(dual.polar_dual().unwrap(), hex);
    assert_eq!(dual.vertices()[0], Vector::new(vec![frac(-2, 3), frac(1, 3), frac(1, 3)]));
}

#[test]
fn face_lattices() {
    assert_eq!(square().f_vector(), vec![4, 4, 1]);
    let b = l1_ball();
    let faces = b.face_lattice();
    assert_eq!(faces.len(), 9);
    assert_eq!(faces.last().unwrap(), &b.whole_face());
    let cube = Polytope::convex_hull(
        &(0..8).map(|i| v(&[(i & 1) * 2 - 1, ((i >> 1) & 1) * 2 - 1, ((i >> 2) & 1) * 2 - 1])).collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(cube.f_vector(), vec![8, 12, 6, 1]);
}

#[test]
fn dual_faces_of_l1_ball() {
    let b = l1_ball();
    let dual = b.polar_dual().unwrap();
    // {a_1} = {(1, 0)} maps to H_{a_1} = conv{(-1,-1), (-1,1)}.
    let a1 = b.vertex_index(&v(&[1, 0])).unwrap();
    let f = b.face(&[a1]).unwrap();
    let fd = b.dual_face(&f).unwrap();
    let mut pts = dual.face_points(&fd);
    pts.sort();
    assert_eq!(pts, vec![v(&[-1, -1]), v(&[-1, 1])]);
    assert_eq!(f.dim() + fd.dim(), 1);
    assert!(matches!(b.dual_face(&b.whole_face()), Err(Error::NotProper)));
}

#[test]
fn faces_reject_non_faces() {
    let s = square();
    assert!(matches!(s.face(&[0, 3]), Err(Error::NotAFace(_))));
    assert_eq!(s.smallest_face_containing(&[0, 3]).unwrap(), s.whole_face());
}

#[test]
fn relative_interior_points() {
    let s = square();
    assert!(s.relative_interior_point(&s.whole_face()).is_zero());
    let edge = s.face(&[0, 1]).unwrap();
    assert_eq!(s.relative_interior_point(&edge), v(&[-1, 0]));
    let vertex = s.face(&[2]).unwrap();
    assert_eq!(s.relative_interior_point(&vertex), s.vertices()[2]);
}

#[test]
fn hull_of_union_examples() {
    let s = square();
    assert_eq!(s.hull_of_union(&s).unwrap(), s);
    let big = s.map_vertices(|x| x.scale(&int(2))).unwrap();
    let rotated = Polytope::convex_hull(&[v(&[3, 0]), v(&[0, 3]), v(&[-3, 0]), v(&[0, -3])]).unwrap();
    let oct = big.hull_of_union(&rotated).unwrap();
    assert_eq!(oct.vertices().len(), 8);
    assert_eq!(oct.f_vector(), vec![8, 8, 1]);
    let line = Polytope::convex_hull(&[v(&[0, 0, 0])]).unwrap();
    assert!(matches!(s.hull_of_union(&line), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn errors_on_bad_input() {
    assert!(matches!(Polytope::convex_hull(&[]), Err(Error::EmptyInput)));
    assert!(matches!(
        Polytope::convex_hull(&[v(&[1, 0]), v(&[1, 0, 0])]),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn json_round_trip_and_validation() {
    let b = l1_ball();
    let text = b.to_json();
    assert!(text.contains("\"facets\""));
    assert_eq!(Polytope::from_json(&text).unwrap(), b);
    let bad = r#"{"dim": 2, "vertices": [["1","0"],["0","1"],["-1","0"],["0","-1"],["0","0"]]}"#;
    assert!(matches!(Polytope::from_json(bad), Err(Error::InvalidPolytope(_))));
    let wrong_facets = r#"{"dim": 2, "vertices": [["1","0"],["0","1"],["-1","0"],["0","-1"]], "facets": [["1","1"]]}"#;
    assert!(Polytope::from_json(wrong_facets).is_err());
    let fractions = r#"{"dim": 1, "vertices": [["1/2"],["-3/4"]]}"#;
    let seg = Polytope::from_json(fractions).unwrap();
    assert_eq!(seg.vertices()[0][0], frac(-3, 4));
}

#[test]
fn negation_flips_asymmetric_balls() {
    let t = Polytope::convex_hull(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])]).unwrap();
    let n = t.negated();
    assert_eq!(n.vertices(), &[v(&[-1, 0]), v(&[0, -1]), v(&[1, 1])]);
    assert_eq!(n.negated(), t);
    assert_eq!(n, Polytope::convex_hull(&[v(&[-1, 0]), v(&[0, -1]), v(&[1, 1])]).unwrap());
}
