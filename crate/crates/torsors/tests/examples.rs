use hopf_objects::catalog::{cyclic, function_algebra, grouplike_z2, symmetric, trivial};
use hopf_objects::{CommAlgObj, FinGroupObj, GalGroupMor, GalTwoCell, GroGroupMor, GroTwoCell, HopfObj};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::linear::{factor_through_mono, tensor_obj};
use kosmos_core::{rat, rat_frac, LinMap, Morphism, Rat, VecObj};
use lawcheck::certify_iso;
use reconstruction::{GalFiber, GroFiber};
use rep_category::{gal, gro, GalRep, GroRep};
use torsors::induced::{
    function_algebra_map, gal_adjunction_check, gal_induce, gal_restrict, gal_two_cell_nat, gro_adjunction_check,
    gro_coinduce, gro_restrict, gro_two_cell_nat,
};
use torsors::{gal as tg, gro as tr, rational_points_dim2, GalTorsor, GroTorsor, TorsorError};

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

fn m(dom: usize, cod: usize, rows: &[&[i64]]) -> LinMap<Rat> {
    let rows = rows.iter().map(|r| r.iter().map(|&a| rat(a)).collect()).collect();
    LinMap::new(VecObj::new(dom), VecObj::new(cod), rows).unwrap()
}

/// Q[x]/(x²−2) in the basis {1, x}, coacted on by the group-like presentation of O(Z/2).
fn sqrt2() -> (HopfObj<Rat>, GroTorsor<Rat>) {
    let h = grouplike_z2().unwrap();
    let p = VecObj::new(2);
    let mul = m(4, 2, &[&[1, 0, 0, 2], &[0, 1, 1, 0]]).retyped(&tensor_obj(&p, &p), &p).unwrap();
    let unit = m(1, 2, &[&[1], &[0]]).retyped(&VecObj::unit(), &p).unwrap();
    let alg = CommAlgObj::validate(p.clone(), mul, unit).unwrap();
    let co = m(2, 4, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    let t = GroTorsor::validate(&h, alg, co).unwrap();
    (h, t)
}

fn sign(h: &HopfObj<Rat>) -> GroRep<Rat> {
    // ρ(v) = v⊗t
    gro::coaction_from_rows(h, 1, vec![vec![rat(0)], vec![rat(1)]]).unwrap()
}

// ---- validation

#[test]
fn regular_galois_torsor_shear_inverse_uses_antipode() {
    let s3 = symmetric(3);
    let t = GalTorsor::regular(&s3).unwrap();
    for a in 0..6 {
        for g in 0..6 {
            assert_eq!(t.tau().apply(a * 6 + g), a * 6 + s3.m(a, g));
            assert_eq!(t.tau_inv().apply(a * 6 + g), a * 6 + s3.m(s3.inv(a), g));
        }
    }
    assert!(t.laws().unwrap().passed());
}

#[test]
fn constant_action_is_rejected() {
    let z3 = cyclic(3);
    let table = vec![vec![0; 3]; 3];
    let err = GalTorsor::from_table(&z3, FinObj::new(3), &table).unwrap_err();
    assert!(matches!(err, TorsorError::ActionLaw(_)), "{err}");
}

#[test]
fn empty_torsor_is_rejected() {
    let err = GalTorsor::from_table(&cyclic(2), FinObj::new(0), &[]).unwrap_err();
    assert_eq!(err, TorsorError::EmptyCarrier);
}

#[test]
fn non_free_action_has_no_shear_inverse() {
    // Z/2 acting trivially on a point: an action, but not a torsor
    let err = GalTorsor::from_table(&cyclic(2), FinObj::new(1), &[vec![0, 0]]).unwrap_err();
    assert!(matches!(err, TorsorError::TauNotIso(_)), "{err}");
}

#[test]
fn sqrt2_torsor_shear_matrices() {
    let (_, t) = sqrt2();
    // basis of p⊗p: 1⊗1, 1⊗x, x⊗1, x⊗x; of π⊗p: 1⊗1, 1⊗x, t⊗1, t⊗x
    let tau = m(4, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 2], &[0, 0, 1, 0]]);
    assert_eq!(t.tau().to_rows(), tau.to_rows());
    let half = rat_frac(1, 2);
    let z = rat(0);
    let one = rat(1);
    let inv = vec![
        vec![one.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), one.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), one.clone()],
        vec![z.clone(), z.clone(), half.clone(), z.clone()],
    ];
    assert_eq!(t.tau_inv().to_rows(), inv);
    // d(1) = 1⊗1, d(t) = x⊗x/2
    assert_eq!(t.div().to_rows(), vec![vec![one, z.clone()], vec![z.clone(), z.clone()], vec![z.clone(), z], vec![rat(0), half]]);
}

#[test]
fn regular_grothendieck_torsor_is_valid() {
    let h = function_algebra(&symmetric(3)).unwrap();
    let t = GroTorsor::regular(&h).unwrap();
    assert!(t.laws().unwrap().passed());
}

#[test]
fn coaction_that_is_not_an_algebra_map_is_rejected() {
    let h = grouplike_z2().unwrap();
    let p = VecObj::new(2);
    let alg = CommAlgObj::validate(
        p.clone(),
        m(4, 2, &[&[1, 0, 0, 2], &[0, 1, 1, 0]]).retyped(&tensor_obj(&p, &p), &p).unwrap(),
        m(1, 2, &[&[1], &[0]]).retyped(&VecObj::unit(), &p).unwrap(),
    )
    .unwrap();
    // 1 ↦ t⊗1 is coassociative only if t is group-like, but is not unital
    let co = m(2, 4, &[&[0, 0], &[0, 0], &[1, 0], &[0, 1]]);
    assert!(matches!(GroTorsor::validate(&h, alg, co), Err(TorsorError::ActionLaw(_))));
}

// ---- twisted groups

#[test]
fn twisted_group_of_z4_is_z4() {
    let z4 = cyclic(4);
    let tg = tg::twist_group(&GalTorsor::regular(&z4).unwrap()).unwrap();
    assert!(tg.checks.passed(), "{:?}", tg.checks.failures());
    assert!(tg.group.is_abelian());
    assert!(isomorphic_by_search(&tg.group, &z4));
    assert!(!isomorphic_by_search(&tg.group, &hopf_objects::catalog::direct_product(&cyclic(2), &cyclic(2))));
}

#[test]
fn twisted_group_of_s3_is_s3() {
    let s3 = symmetric(3);
    let tg = tg::twist_group(&GalTorsor::regular(&s3).unwrap()).unwrap();
    assert!(tg.checks.passed(), "{:?}", tg.checks.failures());
    assert!(!tg.group.is_abelian());
    assert!(isomorphic_by_search(&tg.group, &s3));
}

#[test]
fn twisted_group_of_sqrt2_is_functions_on_z2() {
    let (h, t) = sqrt2();
    let tg = tr::twist_group(&t).unwrap();
    assert!(tg.checks.passed(), "{:?}", tg.checks.failures());
    assert_eq!(tg.group.dim(), 2);
    // 1 ↦ 1⊗1 and t ↦ x⊗x/2, written in coordinates of the subspace
    let target = |v: [Rat; 4]| {
        let col = LinMap::new(VecObj::unit(), VecObj::new(4), v.into_iter().map(|a| vec![a]).collect()).unwrap();
        factor_through_mono(&tg.inclusion.incl, &col.retyped(&VecObj::unit(), tg.inclusion.incl.cod()).unwrap())
            .unwrap()
    };
    let one = target([rat(1), rat(0), rat(0), rat(0)]);
    let tt = target([rat(0), rat(0), rat(0), rat_frac(1, 2)]);
    let map = LinMap::from_fn(h.carrier(), tg.group.carrier(), |r, c| if c == 0 { one.get(r, 0) } else { tt.get(r, 0) });
    let iso = GroGroupMor::validate(h.clone(), tg.group.clone(), map).unwrap();
    certify_iso(&iso.map).unwrap();
}

// ---- twisted fiber functors

#[test]
fn twist_of_trivial_rep_is_the_underlying_set() {
    let z3 = cyclic(3);
    let t = GalTorsor::regular(&z3).unwrap();
    let w = tg::GalTwist::new(&t);
    let z = FinObj::new(4);
    let coh = w.trivial_coh(&z).unwrap();
    assert_eq!(coh.dom().size(), 4);
    assert_eq!(coh.cod(), &z);
    certify_iso(&coh).unwrap();
    let tf = tg::twist_fiber(&t, &gal::probes(&z3, 5)).unwrap();
    assert!(tf.checks.passed(), "{:?}", tf.checks.failures());
}

#[test]
fn twist_of_regular_z3_has_three_elements() {
    let z3 = cyclic(3);
    let t = GalTorsor::regular(&z3).unwrap();
    let q = tg::GalTwist::new(&t).coeq(&GalRep::regular(&z3)).unwrap();
    assert_eq!(q.obj.size(), 3);
}

#[test]
fn twist_of_sign_by_sqrt2_is_a_line() {
    let (h, t) = sqrt2();
    let w = tr::GroTwist::new(&t);
    assert_eq!(w.obj(&sign(&h)).unwrap().dim(), 1);
    let tf = tr::twist_fiber(&t, &[gro::probes(&h, 5), vec![sign(&h)]].concat()).unwrap();
    assert!(tf.checks.passed(), "{:?}", tf.checks.failures());
    let triv = w.trivial_coh(&VecObj::new(3)).unwrap();
    certify_iso(&triv).unwrap();
}

// ---- twisted equivalence

#[test]
fn theta_on_trivial_probe_is_the_unitor() {
    let z3 = cyclic(3);
    let tgp = tg::twist_group(&GalTorsor::regular(&z3).unwrap()).unwrap();
    let b = &tgp.bitorsor;
    let z = FinObj::new(2);
    let th = tg::theta(b, &GalRep::trivial(&z3, &z)).unwrap();
    // ω^{p̊}(ω^p(t z)) → ω^p(t z) → z undoes ϑ
    let bo = b.opposite().unwrap();
    let (y, _) = b.twist_rep(&GalRep::trivial(&z3, &z)).unwrap();
    let first = tg::GalTwist::new(bo.right()).trivial_coh(y.carrier()).unwrap();
    let second = tg::GalTwist::new(b.right()).trivial_coh(&z).unwrap();
    let back = second.compose(&first).unwrap().compose(&th.map).unwrap();
    assert_eq!(back.table(), &[0, 1]);
}

#[test]
fn theta_on_regular_z2_is_a_bijection() {
    let z2 = cyclic(2);
    let t = GalTorsor::regular(&z2).unwrap();
    let tgp = tg::twist_group(&t).unwrap();
    let th = tg::theta(&tgp.bitorsor, &GalRep::regular(&z2)).unwrap();
    assert_eq!(th.map.dom().size(), 2);
    assert_eq!(th.map.cod().size(), 2);
    assert!(th.map.is_injective() && th.map.is_surjective());
    assert!(th.laws().unwrap().passed());
    let c = tg::twisted_equiv_check(&t, &gal::probes(&z2, 5)).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

#[test]
fn theta_on_sign_for_sqrt2_is_invertible_scalar() {
    let (h, t) = sqrt2();
    let tgp = tr::twist_group(&t).unwrap();
    let th = tr::theta(&tgp.bitorsor, &sign(&h)).unwrap();
    assert_eq!((th.map.rows(), th.map.cols()), (1, 1));
    assert_ne!(th.map.get(0, 0), rat(0));
    assert!(th.laws().unwrap().passed());
    let c = tr::twisted_equiv_check(&t, &[sign(&h), GroRep::regular(&h)]).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

// ---- torsor morphisms

#[test]
fn identity_morphism_gives_identity_components() {
    let z3 = cyclic(3);
    let t = GalTorsor::regular(&z3).unwrap();
    let probes = gal::probes(&z3, 3);
    let nat = tg::torsor_iso_to_nat(&t, &t, &FinMap::identity(t.carrier()), &probes).unwrap();
    assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    for c in &nat.components {
        assert!(c.equals(&FinMap::identity(c.dom())).unwrap());
    }
}

#[test]
fn translation_of_z2_gives_nontrivial_components() {
    let z2 = cyclic(2);
    let t = GalTorsor::regular(&z2).unwrap();
    let f = FinMap::new(t.carrier().clone(), t.carrier().clone(), vec![1, 0]).unwrap();
    let probes = gal::probes(&z2, 5);
    let nat = tg::torsor_iso_to_nat(&t, &t, &f, &probes).unwrap();
    assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    let reg = probes.iter().position(|x| *x == GalRep::regular(&z2)).unwrap();
    let c = &nat.components[reg];
    assert!(!c.equals(&FinMap::identity(c.dom())).unwrap());
    // the inverse morphism gives the inverse components
    let back = tg::torsor_iso_to_nat(&t, &t, &f, &probes).unwrap();
    for (a, b) in nat.components.iter().zip(&back.components) {
        assert!(b.compose(a).unwrap().equals(&FinMap::identity(a.dom())).unwrap());
    }
}

#[test]
fn non_equivariant_map_is_not_a_torsor_morphism() {
    let z3 = cyclic(3);
    let t = GalTorsor::regular(&z3).unwrap();
    // a transposition does not commute with the action
    let f = FinMap::new(t.carrier().clone(), t.carrier().clone(), vec![0, 2, 1]).unwrap();
    let err = tg::torsor_iso_to_nat(&t, &t, &f, &[]).unwrap_err();
    assert!(matches!(err, TorsorError::NotTorsorMorphism(_)));
}

#[test]
fn grothendieck_torsor_automorphism() {
    let (h, t) = sqrt2();
    // x ↦ −x is the other automorphism of the torsor
    let f = m(2, 2, &[&[1, 0], &[0, -1]]);
    let probes = [sign(&h), GroRep::regular(&h), GroRep::trivial(&h, &VecObj::new(2))];
    let nat = tr::torsor_iso_to_nat(&t, &t, &f, &probes).unwrap();
    assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    assert_eq!(nat.components[0].get(0, 0), rat(-1));
}

// ---- induced functors

#[test]
fn identity_induces_identity_on_data() {
    let z3 = cyclic(3);
    let f = GalGroupMor::identity(&z3);
    let reg = GalRep::regular(&z3);
    assert_eq!(gal_restrict(&f, &reg).unwrap(), reg);
    assert_eq!(gal_induce(&f, &reg).unwrap().rep.size(), 3);
    let h = function_algebra(&z3).unwrap();
    let g = GroGroupMor::identity(&h);
    let r = GroRep::regular(&h);
    assert_eq!(gro_restrict(&g, &r).unwrap(), r);
    assert_eq!(gro_coinduce(&g, &r).unwrap().rep.dim(), 3);
}

#[test]
fn induction_along_quotient_z4_to_z2() {
    let f = GalGroupMor::validate(cyclic(4), cyclic(2), vec![0, 1, 0, 1]).unwrap();
    let ind = gal_induce(&f, &GalRep::regular(&cyclic(4))).unwrap();
    assert_eq!(ind.rep.size(), 2);
    let c = gal_adjunction_check(&f, &gal::probes(&cyclic(4), 5), &gal::probes(&cyclic(2), 5)).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

#[test]
fn coinduction_along_restriction_of_functions() {
    let inc = GalGroupMor::validate(cyclic(2), cyclic(4), vec![0, 2]).unwrap();
    let f = function_algebra_map(&inc).unwrap();
    let small = f.cod.clone();
    let co = gro_coinduce(&f, &GroRep::regular(&small)).unwrap();
    assert_eq!(co.rep.dim(), 4);
    let c = gro_adjunction_check(&f, &gro::probes(&f.dom, 3), &gro::probes(&small, 4)).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

#[test]
fn coinduction_along_inclusion_of_functions() {
    let quot = GalGroupMor::validate(cyclic(4), cyclic(2), vec![0, 1, 0, 1]).unwrap();
    let f = function_algebra_map(&quot).unwrap();
    let c = gro_adjunction_check(&f, &gro::probes(&f.dom, 4), &gro::probes(&f.cod, 3)).unwrap();
    assert!(c.passed(), "{:?}", c.failures());
}

// ---- 2-cells

#[test]
fn unit_two_cell_gives_identities() {
    let s3 = symmetric(3);
    let cell = GalTwoCell::identity(&GalGroupMor::identity(&s3));
    let nat = gal_two_cell_nat(&cell, &gal::probes(&s3, 3)).unwrap();
    assert!(nat.checks.passed());
    for c in &nat.components {
        assert!(c.equals(&FinMap::identity(c.dom())).unwrap());
    }
}

#[test]
fn transposition_two_cell_on_regular_s3() {
    let s3 = symmetric(3);
    let theta = s3.carrier().labels().unwrap().iter().position(|l| l == "102").unwrap();
    let f1 = GalGroupMor::identity(&s3);
    let f2 = GalGroupMor { src: s3.clone(), dst: s3.clone(), map: s3.inner_auto(theta).unwrap() };
    let cell = GalTwoCell::validate(f1, f2, theta).unwrap();
    let reg = GalRep::regular(&s3);
    let nat = gal_two_cell_nat(&cell, &[reg]).unwrap();
    assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    let c = &nat.components[0];
    for g in 0..6 {
        assert_eq!(c.apply(g), s3.m(theta, g));
    }
    assert!(c.table().iter().enumerate().all(|(i, &j)| i != j));
}

#[test]
fn sign_two_cell_is_diagonal_signs() {
    let h = grouplike_z2().unwrap();
    let theta = m(2, 1, &[&[1, -1]]).retyped(h.carrier(), &VecObj::unit()).unwrap();
    let id = GroGroupMor::identity(&h);
    let cell = GroTwoCell::validate(id.clone(), id, theta).unwrap();
    let reg = GroRep::regular(&h);
    let nat = gro_two_cell_nat(&cell, &[reg, sign(&h)]).unwrap();
    assert!(nat.checks.passed(), "{:?}", nat.checks.failures());
    assert_eq!(nat.components[0].to_rows(), vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
    assert_eq!(nat.components[1].to_rows(), vec![vec![rat(-1)]]);
}

// ---- round trip

#[test]
fn round_trip_regular_z2() {
    let z2 = cyclic(2);
    let t = GalTorsor::regular(&z2).unwrap();
    let rt = tg::fib_tors_roundtrip(&t).unwrap();
    assert!(rt.checks.passed(), "{:?}", rt.checks.failures());
    assert_eq!(rt.torsor.size(), 2);
    assert!(rt.counit.is_injective() && rt.counit.is_surjective());
    // f^p ξ = λ on p⊗π
    let q = tg::GalTwist::new(&t).coeq(&GalRep::free(&z2, &FinObj::unit())).unwrap();
    for a in 0..2 {
        for g in 0..2 {
            assert_eq!(rt.counit.apply(q.proj.apply(a * 2 + g)), z2.m(a, g));
        }
    }
}

#[test]
fn round_trip_trivial_group() {
    let t = GalTorsor::regular(&trivial()).unwrap();
    let rt = tg::fib_tors_roundtrip(&t).unwrap();
    assert!(rt.checks.passed());
    assert_eq!(rt.torsor.size(), 1);
    assert_eq!(rt.counit.table(), &[0]);
}

#[test]
fn round_trip_sqrt2() {
    let (_, t) = sqrt2();
    let rt = tr::fib_tors_roundtrip(&t).unwrap();
    assert!(rt.checks.passed(), "{:?}", rt.checks.failures());
    let alg = rt.torsor.algebra();
    assert_eq!(alg.dim(), 2);
    // the image of x squares to 2
    let fx = rt.unit.column(1);
    let one = alg.unit_map().column(0);
    let two: Vec<Rat> = one.iter().map(|a| a * rat(2)).collect();
    assert_eq!(alg.product(&fx, &fx), two);
}

// ---- points

fn algebra(mul: &[&[i64]]) -> CommAlgObj<Rat> {
    let p = VecObj::new(2);
    CommAlgObj::validate(
        p.clone(),
        m(4, 2, mul).retyped(&tensor_obj(&p, &p), &p).unwrap(),
        m(1, 2, &[&[1], &[0]]).retyped(&VecObj::unit(), &p).unwrap(),
    )
    .unwrap()
}

#[test]
fn points_of_split_algebra() {
    // basis {1, e} with e² = e
    let pts = rational_points_dim2(&algebra(&[&[1, 0, 0, 0], &[0, 1, 1, 1]])).unwrap();
    assert_eq!(pts.len(), 2);
    let vals: Vec<Vec<Rat>> = pts.iter().map(|p| p.row(0)).collect();
    assert!(vals.contains(&vec![rat(1), rat(0)]));
    assert!(vals.contains(&vec![rat(1), rat(1)]));
}

#[test]
fn points_of_sqrt2_and_dual_numbers() {
    assert!(rational_points_dim2(&algebra(&[&[1, 0, 0, 2], &[0, 1, 1, 0]])).unwrap().is_empty());
    let pts = rational_points_dim2(&algebra(&[&[1, 0, 0, 0], &[0, 1, 1, 0]])).unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].row(0), vec![rat(1), rat(0)]);
}

#[test]
fn points_reject_wrong_dimension() {
    let h = function_algebra(&cyclic(3)).unwrap();
    assert_eq!(rational_points_dim2(&h.algebra()).unwrap_err(), TorsorError::NotDimTwo(3));
}

#[test]
fn sqrt2_has_no_point_but_twists() {
    let (h, t) = sqrt2();
    assert!(rational_points_dim2(t.algebra()).unwrap().is_empty());
    assert!(tr::twist_fiber(&t, &gro::probes(&h, 5)).unwrap().checks.passed());
}
