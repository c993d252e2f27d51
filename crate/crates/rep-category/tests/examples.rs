use hopf_objects::catalog::{cyclic, function_algebra, symmetric};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::{rat, LinMap, Morphism, VecObj};
use rep_category::{gal, gro, GalRep, GalRepMor, GroRep};

#[test]
fn unit_is_strict() {
    let s3 = symmetric(3);
    let x = GalRep::conjugation(&s3);
    assert_eq!(x.tensor(&GalRep::unit(&s3)).unwrap(), x);
    assert_eq!(GalRep::unit(&s3).tensor(&x).unwrap(), x);
    let h = function_algebra(&cyclic(3)).unwrap();
    let r = GroRep::regular(&h);
    assert_eq!(r.tensor(&GroRep::unit(&h)).unwrap(), r);
}

#[test]
fn regular_z2_squared_has_two_orbits() {
    let z2 = cyclic(2);
    let r = GalRep::regular(&z2);
    let rr = r.tensor(&r).unwrap();
    assert_eq!(rr.size(), 4);
    assert_eq!(rr.coinvariants().unwrap().obj.size(), 2);
}

#[test]
fn sign_squared_is_trivial() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let sign = gro::coaction_from_rows(&h, 1, vec![vec![rat(1)], vec![rat(-1)]]).unwrap();
    assert_eq!(sign.tensor(&sign).unwrap(), GroRep::unit(&h));
}

#[test]
fn trivial_examples() {
    let z2 = cyclic(2);
    assert_eq!(GalRep::trivial(&z2, &FinObj::unit()), GalRep::unit(&z2));
    let t3 = GalRep::trivial(&z2, &FinObj::new(3));
    assert!((0..2).all(|g| (0..3).all(|i| t3.act(g, i) == i)));
    let h = function_algebra(&cyclic(3)).unwrap();
    let t = GroRep::trivial(&h, &VecObj::new(2));
    let expected = kosmos_core::linear::tensor_map(&LinMap::identity(&VecObj::new(2)), h.unit_map());
    assert_eq!(t.coaction(), &expected);
}

#[test]
fn free_and_cofree_examples() {
    let z3 = cyclic(3);
    let f = GalRep::free(&z3, &FinObj::unit());
    assert_eq!(f.action().table(), GalRep::regular(&z3).action().table());
    let h = function_algebra(&cyclic(2)).unwrap();
    assert_eq!(GroRep::cofree(&h, &VecObj::unit()), GroRep::regular(&h));
    let z2 = cyclic(2);
    let x = GalRep::from_table(&z2, FinObj::new(2), &[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(gal::free_triangles(&x, &FinObj::new(2)).unwrap().passed());
    assert!(gro::cofree_triangles(&GroRep::regular(&h), &VecObj::new(2)).unwrap().passed());
}

#[test]
fn coinvariants_examples() {
    let z2 = cyclic(2);
    let t = GalRep::trivial(&z2, &FinObj::new(3));
    assert_eq!(t.coinvariants().unwrap().obj.size(), 3);
    assert_eq!(GalRep::regular(&cyclic(3)).coinvariants().unwrap().obj.size(), 1);
    let x = GalRep::from_table(&z2, FinObj::new(3), &[vec![0, 1, 2], vec![1, 0, 2]]).unwrap();
    let c = x.coinvariants().unwrap();
    assert_eq!(c.proj.table(), &[0, 0, 1]);
}

#[test]
fn invariants_examples() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let t = GroRep::trivial(&h, &VecObj::new(2));
    assert_eq!(t.invariants().unwrap().obj.dim(), 2);
    let inv = GroRep::regular(&h).invariants().unwrap();
    assert_eq!(inv.incl.column(0), vec![rat(1), rat(1)]);
}

#[test]
fn hom_rep_examples() {
    let z2 = cyclic(2);
    let u = GalRep::unit(&z2);
    assert_eq!(gal::hom_rep(&u, &u).unwrap().len(), 1);
    let r = GalRep::regular(&z2);
    let maps = gal::hom_rep(&r, &r).unwrap();
    assert_eq!(maps.len(), 2);
    assert!(maps.iter().any(|f| f.map.table() == [1, 0]));
    let h = function_algebra(&cyclic(2)).unwrap();
    assert_eq!(gro::hom_rep(&GroRep::unit(&h), &GroRep::unit(&h)).unwrap().len(), 1);
}

#[test]
fn projection_examples() {
    let z2 = cyclic(2);
    let z = FinObj::new(2);
    let t = GalRep::trivial(&z2, &FinObj::new(2));
    let phi = gal::projection_map(&z, &t).unwrap();
    assert!(phi.map.equals(&FinMap::identity(phi.map.dom())).unwrap());
    let reg = GalRep::regular(&z2);
    let phi = gal::projection_map(&z, &reg).unwrap();
    assert_eq!(phi.map.dom_len(), 8);
    assert!(lawcheck::certify_iso(&phi.map).is_ok());
    assert!(gal::projection_formula_check(&z, &reg).unwrap().passed());
    let h = function_algebra(&cyclic(2)).unwrap();
    let sign = gro::coaction_from_rows(&h, 1, vec![vec![rat(1)], vec![rat(-1)]]).unwrap();
    let phi = gro::projection_map(&sign, &VecObj::unit()).unwrap();
    assert_eq!(phi.map.rows(), 2);
    assert!(gro::projection_formula_check(&sign, &VecObj::unit()).unwrap().passed());
}

#[test]
fn fusion_examples() {
    let z3 = cyclic(3);
    let one = FinObj::unit();
    let chi = gal::fusion_map(&z3, &one, &one).unwrap();
    assert_eq!(chi.dom_len(), 9);
    assert!(lawcheck::certify_iso(&chi).is_ok());
    let h = function_algebra(&cyclic(2)).unwrap();
    let chi = gro::fusion_map(&h, &VecObj::unit(), &VecObj::unit()).unwrap();
    assert_eq!((chi.rows(), chi.cols()), (4, 4));
    assert!(gro::fusion_check(&h, &VecObj::unit(), &VecObj::unit()).unwrap().passed());
}

#[test]
fn probe_invariants() {
    for g in [cyclic(2), cyclic(3), symmetric(3)] {
        let probes = gal::probes(&g, 5);
        for x in &probes {
            assert!(gal::trivial_triangles(x, &FinObj::new(2)).unwrap().passed());
            assert!(gal::free_triangles(x, &FinObj::new(2)).unwrap().passed());
            for y in probes.iter().filter(|y| y.size() <= 6 && x.size() <= 6) {
                let xy = x.tensor(y).unwrap();
                assert!(xy.laws().unwrap().passed());
                assert!(GalRepMor::symmetry(x, y).unwrap().laws().unwrap().passed());
                for w in probes.iter().filter(|w| w.size() <= 6) {
                    assert_eq!(xy.tensor(w).unwrap(), x.tensor(&y.tensor(w).unwrap()).unwrap());
                }
                assert!(gal::projection_formula_check(y.carrier(), x).unwrap().passed());
            }
        }
        for n in 0..=4 {
            assert!(gal::coinvariants_of_free(&g, &FinObj::new(n)).unwrap().passed());
        }
    }
    for g in [cyclic(2), cyclic(3)] {
        let h = function_algebra(&g).unwrap();
        let probes = gro::probes(&h, 5);
        for x in &probes {
            assert!(gro::trivial_triangles(x, &VecObj::new(2)).unwrap().passed());
            assert!(gro::cofree_triangles(x, &VecObj::new(2)).unwrap().passed());
            for y in probes.iter().filter(|y| y.dim() <= 4 && x.dim() <= 4) {
                assert!(x.tensor(y).unwrap().laws().unwrap().passed());
                assert!(rep_category::GroRepMor::symmetry(x, y).unwrap().laws().unwrap().passed());
                assert!(gro::projection_formula_check(x, y.carrier()).unwrap().passed());
            }
        }
        for n in 0..=4 {
            assert!(gro::invariants_of_cofree(&h, &VecObj::new(n)).unwrap().passed());
        }
    }
}
