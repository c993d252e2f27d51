use hopf_objects::catalog::{cyclic, direct_product, function_algebra, symmetric};
use hopf_objects::{hom_group, FinGroupObj};
use kosmos_core::finset::{FinMap, FinObj};
use kosmos_core::Morphism;
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = FinGroupObj> {
    prop_oneof![
        (1usize..=6).prop_map(cyclic),
        Just(direct_product(&cyclic(2), &cyclic(2))),
        Just(symmetric(3)),
    ]
}

proptest! {
    #[test]
    fn inner_auto_is_homomorphism(g in small_group(), t in 0usize..6, a in 0usize..6, b in 0usize..6) {
        let n = g.order();
        let (t, a, b) = (t % n, a % n, b % n);
        let s = g.inner_auto(t).unwrap();
        prop_assert_eq!(s.apply(g.m(a, b)), g.m(s.apply(a), s.apply(b)));
        prop_assert_eq!(s.apply(g.unit()), g.unit());
    }

    #[test]
    fn convolution_inverse(g in small_group(), raw in proptest::collection::vec(0usize..6, 0..4)) {
        let n = g.order();
        let c = FinObj::new(raw.len());
        let f = FinMap::new(c.clone(), g.carrier().clone(), raw.iter().map(|x| x % n).collect()).unwrap();
        let fi = g.inv_map().compose(&f).unwrap();
        let unit = g.convolution_unit(&c);
        prop_assert!(g.convolution(&f, &fi).unwrap().equals(&unit).unwrap());
        prop_assert!(g.convolution(&fi, &f).unwrap().equals(&unit).unwrap());
    }

    #[test]
    fn hom_group_has_pointwise_law(n in 1usize..4, k in 0usize..3, x in 0usize..64, y in 0usize..64) {
        let g = cyclic(n);
        let h = hom_group(&FinObj::new(k), &g).unwrap();
        let order = h.group.order();
        prop_assert_eq!(order, n.pow(k as u32));
        let (x, y) = (x % order, y % order);
        let (fx, fy, fxy) = (h.element(x), h.element(y), h.element(h.group.m(x, y)));
        for i in 0..k {
            prop_assert_eq!(fxy.apply(i), g.m(fx.apply(i), fy.apply(i)));
        }
    }

    #[test]
    fn function_algebra_points_multiply(g in small_group(), a in 0usize..6, b in 0usize..6) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        let h = function_algebra(&g).unwrap();
        let ea = hopf_objects::catalog::evaluation(&h, a);
        let eb = hopf_objects::catalog::evaluation(&h, b);
        let prod = hopf_objects::morphisms::point_product(&h, &ea, &eb).unwrap();
        prop_assert_eq!(prod, hopf_objects::catalog::evaluation(&h, g.m(a, b)));
    }
}
