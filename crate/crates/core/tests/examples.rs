use bordered::catalog::Catalog;
use bordered::curve::solid_torus_cfd;
use bordered::pairing::{box_tensor, box_tensor_graded};
use bordered::torus_algebra::AlgebraElement::*;
use bordered::type_a::TypeAStructure;
use bordered::type_d::TypeDStructure;

#[test]
fn trefoil_operations_from_the_graph() {
    let d = Catalog::bundled().load_type_d("cfd.trefoil.mu-lambda").unwrap();
    let (a, _) = TypeAStructure::from_type_d(&d).unwrap();
    for (x, chords, y) in [
        ("x1", vec![Rho3, Rho2, Rho1], "y1"),
        ("x3", vec![Rho3], "y1"),
        ("x3", vec![Rho123], "y2"),
        ("y3", vec![Rho2, Rho1], "y2"),
        ("x1", vec![Rho1], "y3"),
    ] {
        assert_eq!(a.apply(x, &chords), vec![y.to_string()], "m({x}, {chords:?})");
    }
    assert_eq!(a, Catalog::bundled().load_type_a("cfa.trefoil.mu-lambda").unwrap());
}

#[test]
fn trefoil_fillings_beyond_twice_the_genus_are_l_spaces() {
    let cat = Catalog::bundled();
    let a = cat.load_type_a("cfa.trefoil.mu-lambda").unwrap();
    let ga = a.assign_gradings_a("x1", None).unwrap();
    for n in 7..=9 {
        let d = solid_torus_cfd(n, 1).unwrap();
        let gd = d.assign_gradings(&d.generators[0].name, None).unwrap();
        let rep = box_tensor_graded(&ga, &gd).unwrap().report().unwrap();
        assert_eq!(rep.dimension(), n as usize);
        assert_eq!(rep.class_dimensions().unwrap(), vec![1; n as usize]);
    }
}

#[test]
fn pairing_with_nothing() {
    let a = Catalog::bundled().load_type_a("cfa.trefoil.mu-lambda").unwrap();
    let c = box_tensor(&a, &TypeDStructure::new(vec![], vec![])).unwrap();
    assert!(c.homology().unwrap().is_empty());
}

#[test]
fn twisted_components_share_spinc_indeterminacy() {
    let cat = Catalog::bundled();
    let h0 = cat.load_type_d("cfd.N.s0.twisted-2").unwrap().assign_gradings("a1", None).unwrap();
    let h1 = cat.load_type_d("cfd.N.s1.twisted-2").unwrap().assign_gradings("z1", None).unwrap();
    assert_eq!(h0.indeterminacy.unwrap().spinc(), h1.indeterminacy.unwrap().spinc());
}

#[test]
fn edge_reduction_is_idempotent() {
    let u = Catalog::bundled().load_type_d("cfd.N.s1.unreduced").unwrap();
    let once = u.edge_reduce();
    assert!(once.generators.len() < u.generators.len());
    assert!(once.is_reduced());
    assert_eq!(once.edge_reduce(), once);
}
