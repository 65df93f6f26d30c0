use bordered::catalog::Catalog;
use bordered::curve::{
    curve_to_type_d, filling_dimensions, solid_torus_cfd, type_d_to_curve, vertical_segment_hits, KnotCurveSummary,
    PLCurve,
};
use bordered::gluing::{h1_of_gluing, twist_orbit, GluingMatrix};
use bordered::grading_group::{normalize_spinc, same_spinc, CosetGrading, GradingElement};
use bordered::pairing::box_tensor_graded;
use bordered::rational::{q, Q};
use bordered::surgery::{knot_complement_cfd, FilteredComplex};
use bordered::type_d::{isomorphic, TypeDStructure};
use num_integer::Integer;
use proptest::prelude::*;

fn half() -> impl Strategy<Value = Q> {
    (-12i64..=12).prop_map(|n| q(n, 2))
}

fn element() -> impl Strategy<Value = GradingElement> {
    (half(), half(), half()).prop_map(|(j, p, s)| GradingElement::new(j, p, s))
}

fn coprime_slope() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=12, 1i64..=5).prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

fn f_trefoil() -> GradingElement {
    "(3/2;0,1)".parse().unwrap()
}

fn h_s0() -> GradingElement {
    "(-1;4,-2)".parse().unwrap()
}

proptest! {
    #[test]
    fn group_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn lambda_is_central(a in element()) {
        let l = GradingElement::lambda();
        prop_assert_eq!(a.multiply(&l), l.multiply(&a));
    }

    #[test]
    fn inverse_reverses_products(a in element(), b in element()) {
        prop_assert_eq!(a.multiply(&b).inverse(), b.inverse().multiply(&a.inverse()));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
    }

    #[test]
    fn normalization_ignores_the_coset_representative(rep in element(), a in -3i64..=3, b in -3i64..=3) {
        let (f, h) = (f_trefoil(), h_s0());
        let moved = f.pow(a).multiply(&rep).multiply(&h.pow(b));
        let x = CosetGrading::new(Some(f.clone()), rep, Some(h.clone()));
        let y = CosetGrading::new(Some(f), moved, Some(h));
        prop_assert_eq!(normalize_spinc(&x).unwrap(), normalize_spinc(&y).unwrap());
    }

    #[test]
    fn same_spinc_is_an_equivalence(xs in proptest::collection::vec(element(), 1..6)) {
        let c: Vec<CosetGrading> =
            xs.into_iter().map(|g| CosetGrading::new(Some(f_trefoil()), g, Some(h_s0()))).collect();
        for x in &c {
            prop_assert!(same_spinc(x, x).unwrap());
            for y in &c {
                prop_assert_eq!(same_spinc(x, y).unwrap(), same_spinc(y, x).unwrap());
                for z in &c {
                    if same_spinc(x, y).unwrap() && same_spinc(y, z).unwrap() {
                        prop_assert!(same_spinc(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn cancellation_order_is_irrelevant(which in 0usize..2, seed in proptest::collection::vec(any::<u32>(), 20)) {
        let cat = Catalog::bundled();
        let a = cat.load_type_a("cfa.trefoil.mu-lambda").unwrap();
        let ga = a.assign_gradings_a("x1", None).unwrap();
        let (entry, base) = [("cfd.N.s0.twisted-2", "a1"), ("cfd.N.s1.twisted-2", "z1")][which];
        let d = cat.load_type_d(entry).unwrap();
        let gd = d.assign_gradings(base, None).unwrap();
        let c = box_tensor_graded(&ga, &gd).unwrap();
        let n = c.generators.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (seed[i % seed.len()], i));
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let profile = |s: Vec<usize>| {
            let mut dims: Vec<usize> = c.spinc_partition(&s).unwrap().iter().map(|x| x.len()).collect();
            dims.sort();
            let mut gr: Vec<Q> = c.relative_gradings(&s).unwrap().into_values().collect();
            gr.sort();
            (s.len(), dims, gr)
        };
        prop_assert_eq!(profile(c.homology_ordered(&rank).unwrap()), profile(c.homology().unwrap()));
    }

    #[test]
    fn a_hat_is_symmetric(k in 0i64..5, mirror in any::<bool>(), boxes in proptest::collection::vec((0i64..=3, -2i64..=2), 0..3)) {
        let mut c = if k == 0 { FilteredComplex::unknot() } else { FilteredComplex::staircase(2 * k + 1, mirror).unwrap() };
        for (i, (centre, m)) in boxes.iter().enumerate() {
            c = c.with_box(*centre, *m, &format!("p{i}"));
            if *centre != 0 {
                c = c.with_box(-centre, *m, &format!("n{i}"));
            }
        }
        c.validate().unwrap();
        let g = c.genus();
        for s in 0..=g + 1 {
            prop_assert_eq!(c.a_hat_dimension(s), c.a_hat_dimension(-s), "s={}", s);
        }
    }

    #[test]
    fn solid_torus_round_trip((p, qq) in coprime_slope()) {
        let d = solid_torus_cfd(p, qq).unwrap();
        let c = type_d_to_curve(&d).unwrap();
        prop_assert!(isomorphic(&curve_to_type_d(&c).unwrap(), &d));
        prop_assert_eq!(PLCurve::parse(&c.to_text()).unwrap(), c);
        let (back, _) = TypeDStructure::parse(&d.to_text()).unwrap();
        prop_assert!(isomorphic(&back, &d));
    }

    #[test]
    fn knot_complement_round_trip(k in 0i64..5, mirror in any::<bool>(), framing in -4i64..=4) {
        let c = if k == 0 { FilteredComplex::unknot() } else { FilteredComplex::staircase(2 * k + 1, mirror).unwrap() };
        if let Ok(d) = knot_complement_cfd(&c, framing) {
            let curve = type_d_to_curve(&d).unwrap();
            prop_assert!(isomorphic(&curve_to_type_d(&curve).unwrap(), &d));
            prop_assert_eq!(PLCurve::parse(&curve.to_text()).unwrap(), curve);
        }
    }

    #[test]
    fn homology_is_twist_invariant(half_p in -5i64..=5, r in -10i64..=10, s in -10i64..=10, n in -6i64..=6) {
        let m = GluingMatrix::new(1, r, 2 * half_p, s);
        prop_assert_eq!(h1_of_gluing(&twist_orbit(&m, n)), h1_of_gluing(&m));
    }

    #[test]
    fn l_space_summaries_fill_to_l_spaces(tau in 1i64..=4, extra in 0i64..8) {
        let s = KnotCurveSummary::l_space(tau);
        let k = 2 * tau + extra;
        let dims = filling_dimensions(&s, k, 1).unwrap();
        prop_assert_eq!(dims.len() as i64, k);
        prop_assert!(dims.iter().all(|&d| d == 1));
    }

    #[test]
    fn loose_segments_obstruct_l_space_fillings(tau in 1i64..=4, h in 0i64..4, extra in 0i64..8) {
        prop_assume!(h < tau);
        let s = KnotCurveSummary::l_space(tau).with_extra(&[h]);
        let dims = filling_dimensions(&s, 2 * tau + extra, 1).unwrap();
        prop_assert!(dims.iter().any(|&d| d > 1));
    }

    #[test]
    fn slope_two_over_q_meets_every_segment_repeatedly(qq in 2i64..=9, k in -6i64..=6, sign in prop_oneof![Just(-2i64), Just(2)]) {
        prop_assume!(qq % 2 == 1);
        prop_assert!(vertical_segment_hits(sign, qq, k).unwrap() > 1);
    }
}

#[test]
fn odd_slope_twists_can_change_homology() {
    // the twist shifts s by n·p, so only even p keeps the parity of s
    let m = GluingMatrix::new(1, 0, 1, 0);
    assert_ne!(h1_of_gluing(&twist_orbit(&m, 1)), h1_of_gluing(&m));
}

#[test]
fn group_law_is_not_commutative() {
    use bordered::torus_algebra::AlgebraElement::{Rho1, Rho2};
    let (a, b) = (Rho1.grading().unwrap(), Rho2.grading().unwrap());
    let diff = a.multiply(&b).maslov - b.multiply(&a).maslov;
    assert_eq!(num_traits::Signed::abs(&diff), q(1, 1));
}
