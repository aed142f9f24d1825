use super::*;
use crate::rational::frac;

fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

#[test]
fn classical_counts() {
    for (label, positive, order) in [("A2", 3, 6), ("A3", 6, 24), ("B2", 4, 8), ("C3", 9, 48), ("D4", 12, 192), ("B1", 1, 2)] {
        let rs: RootSystem = label.parse().unwrap();
        assert_eq!(rs.positive_roots().len(), positive, "{label}");
        let w = rs.weyl_group().unwrap();
        assert_eq!(w.order(), order, "{label}");
        assert_eq!(rs.weyl_group_order(), order, "{label}");
        for g in w.elements() {
            assert!(g.is_orthogonal());
            let mut image: Vec<Vector> = rs.roots().iter().map(|a| g.apply(a)).collect();
            image.sort();
            assert_eq!(image, rs.roots());
        }
        for a in rs.positive_roots() {
            let c = rs.simple_coordinates(a).unwrap();
            assert!(c.iter().all(|x| !x.is_negative()));
        }
    }
    assert_eq!(RootSystem::build(RootKind::A, 2).unwrap().simple_roots(), &[v(&[1, -1, 0]), v(&[0, 1, -1])]);
    assert!(matches!(RootSystem::build(RootKind::A, 0), Err(Error::UnsupportedRootSystem { .. })));
    assert!("E6".parse::<RootSystem>().is_err());
}

#[test]
fn orbits() {
    let a2: RootSystem = "A2".parse().unwrap();
    let theta = a2.highest_root();
    assert_eq!(theta, v(&[1, 0, -1]));
    assert_eq!(a2.weyl_orbit(&theta).unwrap(), a2.roots());
    assert_eq!(a2.weyl_orbit(&v(&[0, 0, 0])).unwrap().len(), 1);
    let w1 = a2.weight_preset("standard").unwrap();
    assert_eq!(w1, Vector::new(vec![frac(2, 3), frac(-1, 3), frac(-1, 3)]));
    assert_eq!(a2.weyl_orbit(&w1).unwrap().len(), 3);
    let w = a2.weyl_group().unwrap();
    assert_eq!(w.orbit(&w1).unwrap().len() * w.stabilizer(&w1).len(), w.order());
}

#[test]
fn dominance() {
    let a2: RootSystem = "A2".parse().unwrap();
    assert_eq!(a2.dominant_representative(&v(&[-1, 0, 1])).unwrap(), v(&[1, 0, -1]));
    assert_eq!(a2.dominant_representative(&v(&[1, 1, -2])).unwrap(), v(&[1, 1, -2]));
    let a3: RootSystem = "A3".parse().unwrap();
    assert_eq!(a3.singular_support(&v(&[1, 0, 0, -1])).unwrap(), vec![1]);
    assert_eq!(a3.singular_support(&v(&[3, 1, 0, -4])).unwrap(), Vec::<usize>::new());
    assert_eq!(a3.singular_support(&v(&[0, 0, 0, 0])).unwrap(), vec![0, 1, 2]);
    assert!(matches!(a3.singular_support(&v(&[0, 1, 0, -1])), Err(Error::NotDominant)));
}

#[test]
fn highest_roots_and_weights() {
    let cases = [("B2", vec![1, 1]), ("C2", vec![2, 0]), ("D4", vec![1, 1, 0, 0]), ("B1", vec![1])];
    for (label, want) in cases {
        let rs: RootSystem = label.parse().unwrap();
        assert_eq!(rs.highest_root(), v(&want), "{label}");
    }
    let a3: RootSystem = "A3".parse().unwrap();
    for (k, w) in a3.fundamental_weights().iter().enumerate() {
        for i in 0..3 {
            let expected = if i == k { 1 } else { 0 };
            assert_eq!(a3.coroot_pairing(w, i).unwrap(), int(expected));
        }
    }
    assert_eq!(a3.weight_preset("dual-standard").unwrap(), -&a3.weight_preset("standard").unwrap().iter().rev().cloned().collect::<Vector>());
    assert!(a3.weight_preset("fundamental:4").is_err());
    assert!(a3.weight_preset("bogus").is_err());
    assert_eq!(a3.rho(), Vector::new(vec![frac(3, 2), frac(1, 2), frac(-1, 2), frac(-3, 2)]));
}

#[test]
fn subsets() {
    let a2: RootSystem = "A2".parse().unwrap();
    let empty = a2.subset_data(&[]).unwrap();
    assert_eq!((empty.lower.len(), empty.upper.len(), empty.weyl.order()), (2, 0, 1));
    let all = a2.subset_data(&[0, 1]).unwrap();
    assert_eq!((all.lower.len(), all.weyl.order()), (0, 6));
    let one = a2.subset_data(&[0]).unwrap();
    assert_eq!((one.lower.len(), one.upper.len(), one.weyl.order()), (1, 1, 2));
    for w in one.weyl.elements() {
        for x in &one.lower {
            assert_eq!(&w.apply(x), x);
        }
    }
    assert!(matches!(a2.subset_data(&[2]), Err(Error::BadRootIndex(2))));

    let a3: RootSystem = "A3".parse().unwrap();
    assert_eq!(a3.irreducible_components(&[0, 2]).unwrap(), vec![vec![0], vec![2]]);
    assert_eq!(a3.irreducible_components(&[1, 0]).unwrap(), vec![vec![0, 1]]);
    assert!(a3.irreducible_components(&[]).unwrap().is_empty());
}
