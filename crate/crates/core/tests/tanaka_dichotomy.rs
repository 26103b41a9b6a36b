use bergerlab::catalog;
use bergerlab::exactlin::Field;
use bergerlab::tanaka::{build_base_grading, full_prolongation, prolongation_report, Tower};

/// For irreducible k ⊊ sp(2m), m ≥ 2: dim g1 ∈ {0, 2m}, and when 2m, g2 = C, g3 = 0.
#[test]
fn g1_dichotomy() {
    for spec in ["sl2:sym3", "sl2:sym5 in sp(6)", "sp6:lambda30"] {
        let k = catalog::resolve(spec, Field::QI).unwrap();
        let n = k.rep.dim();
        let res = full_prolongation(build_base_grading(&k.rep).unwrap(), 6).unwrap();
        let dims = res.dims();
        assert!(dims[0] == 0 || dims[0] == n, "{spec}: {dims:?}");
        if dims[0] == n {
            assert_eq!(&dims[1..], &[1, 0], "{spec}");
            let rep = prolongation_report(&res).unwrap();
            assert_eq!(rep.simple, Some(true), "{spec}");
            assert_eq!(rep.killing_graded, Some(true), "{spec}");
            assert_eq!(rep.grading_element_ok, Some(true), "{spec}");
        }
    }
}

#[test]
fn g1_alternative_everywhere() {
    for spec in ["sp(4)", "sp(6)", "sl2:sym3", "sl2:sym5 in sp(6)", "sp6:lambda30"] {
        let k = catalog::resolve(spec, Field::QI).unwrap();
        let mut t = Tower::new(build_base_grading(&k.rep).unwrap());
        let alt = t.g1_alternative().unwrap();
        assert_eq!(&alt, t.prolong_step().unwrap(), "{spec}");
    }
}

/// With dim V = 2 the (F, X) conditions are no longer implied: g1 is strictly smaller.
#[test]
fn g1_alternative_m1() {
    let k = catalog::sl2(Field::QI);
    let mut t = Tower::new(build_base_grading(&k.rep).unwrap());
    let alt = t.g1_alternative().unwrap();
    let g1 = t.prolong_step().unwrap().clone();
    assert!(g1.is_subspace_of(&alt).unwrap());
    assert_eq!((g1.dim(), alt.dim()), (6, 8));
}

#[test]
fn degree_respect_after_assembly() {
    let k = catalog::resolve("sl2:sym3", Field::QI).unwrap();
    let g = full_prolongation(build_base_grading(&k.rep).unwrap(), 6).unwrap().assembled.unwrap();
    assert!(g.respects_degrees());
    assert!(g.grading_element_ok());
    assert!(g.algebra.check_jacobi());
}

/// m = 1 is computed but nothing is asserted about it.
#[test]
fn m_equals_one_runs() {
    let k = catalog::sl2(Field::QI);
    let res = full_prolongation(build_base_grading(&k.rep).unwrap(), 3).unwrap();
    assert!(!res.dims().is_empty());
}
