use bergerlab::catalog;
use bergerlab::exactlin::Field;
use bergerlab::liealg::Symmetry;

#[test]
fn entries_are_consistent() {
    let specs = [
        "so(3)", "so(4)", "so(5)", "sp(2)", "sp(4)", "sp(6)", "sl2", "sl2:sym3", "sl2:sym5 in sp(6)",
        "tensor(so(3),so(3))", "tensor(sp(4),sp(4))", "sl2xk(sl2:sym3)", "sl2xk(sp(4))", "oplus(so(3),so(3))",
    ];
    for spec in specs {
        let e = catalog::resolve(spec, Field::QI).unwrap();
        assert!(e.rep.algebra().check_jacobi(), "{spec}");
        // Representation::new already validated homomorphism and invariance; rebuild to be sure
        let again = bergerlab::liealg::Representation::new(
            e.rep.algebra_arc().clone(),
            e.rep.matrices().to_vec(),
            e.rep.form().cloned(),
        );
        assert!(again.is_ok(), "{spec}");
    }
}

#[test]
fn irreducible_entries() {
    for spec in ["so(3)", "so(4)", "sp(4)", "sl2:sym3", "sl2:sym5", "tensor(so(3),so(3))", "sl2xk(sl2:sym3)"] {
        let e = catalog::resolve(spec, Field::QI).unwrap();
        assert!(e.rep.is_irreducible().unwrap(), "{spec}");
        assert_eq!(e.rep.invariant_bilinear_forms().dim(), 1, "{spec}");
    }
}

#[test]
fn sl2_irreps_have_one_form() {
    for k in 1..=6 {
        let e = catalog::sl2_irrep(k, Field::QI).unwrap();
        assert_eq!(e.rep.invariant_bilinear_forms().dim(), 1, "k = {k}");
        let expect = if k % 2 == 1 { Symmetry::Skew } else { Symmetry::Symmetric };
        assert_eq!(e.rep.form().unwrap().symmetry, expect);
    }
}

#[test]
fn sl2_tensor_symplectic_is_orthogonal() {
    for spec in ["sl2:sym3", "sp(4)", "sl2:sym5 in sp(6)", "sl2"] {
        let k = catalog::resolve(spec, Field::QI).unwrap();
        let e = catalog::sl2_tensor_symplectic(&k).unwrap();
        assert_eq!(e.rep.form().unwrap().symmetry, Symmetry::Symmetric, "{spec}");
        assert_eq!(e.rep.dim(), 2 * k.rep.dim());
    }
    assert!(catalog::sl2_tensor_symplectic(&catalog::so(3, Field::QI).unwrap()).is_err());
}

#[test]
fn pair_tensor_shapes() {
    let a = catalog::so_pair_tensor(3, 3, Field::QI).unwrap();
    assert_eq!((a.rep.algebra_dim(), a.rep.dim()), (6, 9));
    let b = catalog::sp_pair_tensor(2, 2, Field::QI).unwrap();
    assert_eq!((b.rep.algebra_dim(), b.rep.dim()), (6, 4));
    assert_eq!(b.rep.form().unwrap().symmetry, Symmetry::Symmetric);
    let c = catalog::so_pair_tensor(3, 4, Field::QI).unwrap();
    assert_eq!((c.rep.algebra_dim(), c.rep.dim()), (9, 12));
}

#[test]
fn lambda30_entry() {
    let e = catalog::sp6_lambda30(Field::QI).unwrap();
    assert_eq!((e.rep.algebra_dim(), e.rep.dim()), (21, 14));
    assert_eq!(e.rep.form().unwrap().symmetry, Symmetry::Skew);
}
