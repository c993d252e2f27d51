use hopf_objects::catalog::{cyclic, function_algebra, kappa, symmetric, trivial};
use hopf_objects::{CommAlgObj, FinGroupObj, HopfObj};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::{rat, LinMap, Morphism, Rat, VecObj};
use reconstruction::galois::{reflection_hatar, theta};
use reconstruction::grothendieck::coreflection_tahar;
use reconstruction::*;
use rep_category::{gal, gro, GalRep, GroRep};

/// Brute force over all bijections: is there a group isomorphism a → b?
fn isomorphic_by_search(a: &FinGroupObj, b: &FinGroupObj) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    fn extend(a: &FinGroupObj, b: &FinGroupObj, f: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.order();
        if f.len() == n {
            return (0..n).all(|x| (0..n).all(|y| f[a.m(x, y)] == b.m(f[x], f[y])));
        }
        for t in 0..n {
            if !used[t] {
                used[t] = true;
                f.push(t);
                if extend(a, b, f, used) {
                    return true;
                }
                f.pop();
                used[t] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}

#[test]
fn hatar_at_unit_is_identity() {
    let h = reflection_hatar(&cyclic(3), &FinObj::unit()).unwrap();
    assert_eq!(h.table(), &[0, 1, 2]);
}

#[test]
fn hatar_z3_on_two_points() {
    let h = reflection_hatar(&cyclic(3), &FinObj::new(2)).unwrap();
    assert_eq!(h.dom().size(), 6);
    assert!(h.is_injective() && h.is_surjective());
    // Under the strict encoding φ(x) = π⊗x and the composite collapses to the identity.
    assert_eq!(h.table(), &[0, 1, 2, 3, 4, 5]);
}

#[test]
fn tahar_examples() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let t = coreflection_tahar(&h, &VecObj::unit()).unwrap();
    assert!(t.equals(&LinMap::identity(&VecObj::new(2))).unwrap());
    let t1 = coreflection_tahar(&h, &VecObj::new(1)).unwrap();
    assert_eq!(t1.to_rows(), vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
}

#[test]
fn trivial_group_reconstructs_to_itself() {
    let r = reconstruct_galois(&trivial()).unwrap();
    assert_eq!(r.group.order(), 1);
    assert_eq!(r.witness.map.table(), &[0]);
    assert!(r.checks.passed());
}

#[test]
fn z3_table_matches_after_relabeling() {
    let r = reconstruct_galois(&cyclic(3)).unwrap();
    let w = |a: usize| r.witness.apply(a);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(r.group.m(w(a), w(b)), w((a + b) % 3));
        }
        assert_eq!(r.group.inv(w(a)), w((3 - a) % 3));
    }
    assert_eq!(r.group.unit(), w(0));
}

#[test]
fn s3_reconstruction_is_isomorphic() {
    let s3 = symmetric(3);
    let r = reconstruct_galois(&s3).unwrap();
    assert!(isomorphic_by_search(&s3, &r.group));
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(r.group.m(r.witness.apply(a), r.witness.apply(b)), r.witness.apply(s3.m(a, b)));
        }
    }
    let back = r.witness_inverse.after(&r.witness).unwrap();
    assert_eq!(back.map.table(), FinMap::identity(s3.carrier()).table());
}

#[test]
fn oracle_rejects_non_isomorphic_groups() {
    let z6 = cyclic(6);
    assert!(!isomorphic_by_search(&z6, &symmetric(3)));
    assert!(isomorphic_by_search(&z6, &hopf_objects::catalog::direct_product(&cyclic(2), &cyclic(3))));
}

#[test]
fn kappa_reconstructs_to_kappa() {
    let k = kappa().unwrap();
    let r = reconstruct_grothendieck(&k).unwrap();
    assert_eq!(r.group.dim(), 1);
    assert_eq!(r.group, k);
}

/// Structure constants of functions on a finite group, written out from the group table.
fn function_algebra_constants(g: &FinGroupObj) -> [Vec<Vec<Rat>>; 5] {
    let n = g.order();
    let d = |b: bool| rat(b as i64);
    let mul = (0..n).map(|k| (0..n * n).map(|ij| d(ij / n == k && ij % n == k)).collect()).collect();
    let unit = (0..n).map(|_| vec![rat(1)]).collect();
    let comul = (0..n * n).map(|ij| (0..n).map(|k| d(g.m(ij / n, ij % n) == k)).collect()).collect();
    let counit = vec![(0..n).map(|k| d(k == g.unit())).collect()];
    let anti = (0..n).map(|i| (0..n).map(|k| d(g.inv(k) == i)).collect()).collect();
    [mul, unit, comul, counit, anti]
}

fn structure(h: &HopfObj<Rat>) -> [Vec<Vec<Rat>>; 5] {
    [h.mul_map(), h.unit_map(), h.comul(), h.counit(), h.antipode()].map(|m| m.to_rows())
}

#[test]
fn o_z2_structure_constants_survive() {
    let z2 = cyclic(2);
    let r = reconstruct_grothendieck(&function_algebra(&z2).unwrap()).unwrap();
    assert_eq!(r.group.dim(), 2);
    assert_eq!(structure(&r.group), function_algebra_constants(&z2));
}

#[test]
fn o_s3_structure_constants_survive() {
    let s3 = symmetric(3);
    let r = reconstruct_grothendieck(&function_algebra(&s3).unwrap()).unwrap();
    assert_eq!(structure(&r.group), function_algebra_constants(&s3));
    assert!(r.checks.passed());
}

#[test]
fn comparison_functor_on_z2() {
    let z2 = cyclic(2);
    let r = reconstruct_galois(&z2).unwrap();
    let probes = vec![GalRep::trivial(&z2, &FinObj::new(2)), GalRep::regular(&z2)];
    let (imgs, checks) = comparison_functor_galois(&r, &probes).unwrap();
    assert!(checks.passed(), "{:?}", checks.failures());
    assert_eq!(imgs[0], GalRep::trivial(&r.group, &FinObj::new(2)));
    assert_eq!(imgs[1], GalRep::regular(&r.group));
}

#[test]
fn comparison_functor_on_s3_probes() {
    let s3 = symmetric(3);
    let r = reconstruct_galois(&s3).unwrap();
    let (_, checks) = comparison_functor_galois(&r, &gal::probes(&s3, 5)).unwrap();
    assert!(checks.passed(), "{:?}", checks.failures());
}

#[test]
fn comparison_functor_on_comodules() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let r = reconstruct_grothendieck(&h).unwrap();
    let probes = gro::probes(&h, 5);
    let (imgs, checks) = comparison_functor_grothendieck(&r, &probes).unwrap();
    assert!(checks.passed(), "{:?}", checks.failures());
    assert_eq!(imgs[0], GroRep::unit(&r.group));
    assert_eq!(imgs[2], GroRep::regular(&r.group));
}

#[test]
fn aut_presheaf_single_point_z2() {
    let z2 = cyclic(2);
    let c = aut_presheaf_check_galois(&z2, &FinObj::unit()).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
    let count = c.reports().iter().find(|r| r.name == "number of transformations").unwrap();
    assert_eq!(count.detail.as_deref(), Some("2"));
    let g = FinMap::new(FinObj::unit(), z2.carrier().clone(), vec![1]).unwrap();
    let t = theta(&g, &GalRep::regular(&z2)).unwrap();
    assert_eq!(t.table(), &[1, 0]);
}

#[test]
fn aut_presheaf_three_points_z3() {
    let c = aut_presheaf_check_galois(&cyclic(3), &FinObj::new(3)).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
    let rounds = c.reports().iter().filter(|r| r.name.starts_with("round trip")).count();
    assert_eq!(rounds, 27);
}

#[test]
fn aut_presheaf_s3_points() {
    let c = aut_presheaf_check_galois(&symmetric(3), &FinObj::unit()).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

#[test]
fn grothendieck_identity_point_is_the_universal_element() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let b = h.algebra();
    let id = LinMap::identity(h.carrier());
    let c = aut_presheaf_check_grothendieck(&h, &b, &[id.clone(), h.antipode().clone()]).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
    let w = GroForgetful::new(&h);
    let phi = Lax::new(&w);
    for x in gro::probes(&h, 5) {
        let t = reconstruction::grothendieck::theta(&id, &x).unwrap();
        assert!(t.equals(&phi.universal(&x).unwrap()).unwrap());
    }
}

#[test]
fn grothendieck_points_over_the_ground_field() {
    let s3 = symmetric(3);
    let h = function_algebra(&s3).unwrap();
    let k = CommAlgObj::validate(VecObj::unit(), LinMap::identity(&VecObj::unit()), LinMap::identity(&VecObj::unit()))
        .unwrap();
    let points: Vec<_> = (0..6).map(|a| hopf_objects::catalog::evaluation(&h, a)).collect();
    let c = aut_presheaf_check_grothendieck(&h, &k, &points).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

#[test]
fn non_algebra_map_is_rejected() {
    let h = function_algebra(&cyclic(2)).unwrap();
    let k = CommAlgObj::validate(VecObj::unit(), LinMap::identity(&VecObj::unit()), LinMap::identity(&VecObj::unit()))
        .unwrap();
    let bad = LinMap::from_fn(h.carrier(), &VecObj::unit(), |_, _| rat(1));
    assert!(matches!(aut_presheaf_check_grothendieck(&h, &k, &[bad]), Err(ReconError::Hopf(_))));
}
