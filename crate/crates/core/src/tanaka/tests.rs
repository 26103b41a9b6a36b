use super::*;
use crate::catalog;
use crate::exactlin::{Field, Scalar};
use crate::liealg::LieAlgebra;

fn sym3() -> catalog::CatalogEntry {
    catalog::sl2_irrep(3, Field::QI).unwrap()
}

#[test]
fn base_dims() {
    let b = build_base_grading(&catalog::sp(4, Field::QI).unwrap().rep).unwrap();
    assert_eq!(b.graded.dims().values().copied().collect::<Vec<_>>(), vec![1, 4, 11]);
    assert!(b.graded.algebra.check_jacobi());
    assert!(b.graded.grading_element_ok());
    assert!(b.graded.respects_degrees());
    let b = build_base_grading(&sym3().rep).unwrap();
    assert_eq!(b.graded.dims().values().copied().collect::<Vec<_>>(), vec![1, 4, 4]);
    assert!(b.graded.killing_grading_check());
    assert!(build_base_grading(&catalog::so(3, Field::QI).unwrap().rep).is_err());
}

#[test]
fn wolf_case_sym3() {
    let b = build_base_grading(&sym3().rep).unwrap();
    let res = full_prolongation(b, DEFAULT_MAX_DEGREE).unwrap();
    assert_eq!(res.dims(), vec![4, 1, 0]);
    assert_eq!(res.termination, Termination::Terminated { zero_degree: 3 });
    let rep = prolongation_report(&res).unwrap();
    assert_eq!(rep.assembled_dim, Some(14));
    assert_eq!(rep.simple, Some(true));
    assert_eq!(rep.killing_graded, Some(true));
    assert_eq!(rep.grading_element_ok, Some(true));
    let g = res.assembled.as_ref().unwrap();
    assert_eq!(g.dims().values().copied().collect::<Vec<_>>(), vec![1, 4, 4, 4, 1]);
}

#[test]
fn g1_alternative_matches() {
    for entry in [catalog::sp(4, Field::QI).unwrap(), sym3(), catalog::resolve("sl2:sym5 in sp(6)", Field::QI).unwrap()] {
        let mut t = Tower::new(build_base_grading(&entry.rep).unwrap());
        let alt = t.g1_alternative().unwrap();
        let g1 = t.prolong_step().unwrap().clone();
        assert_eq!(alt, g1);
    }
}

#[test]
fn sp4_g1_and_unbounded() {
    let b = build_base_grading(&catalog::sp(4, Field::QI).unwrap().rep).unwrap();
    let res = full_prolongation(b, 3).unwrap();
    assert_eq!(res.dims(), vec![24, 46, 80]);
    assert_eq!(res.termination, Termination::Unbounded { max_degree: 3 });
    assert!(res.assembled.is_none());
    assert_eq!(res.tower.g1_diagonal_profile(), Some((4, 20)));
}

#[test]
fn sym5_terminates_immediately() {
    let e = catalog::resolve("sl2:sym5 in sp(6)", Field::QI).unwrap();
    let res = full_prolongation(build_base_grading(&e.rep).unwrap(), DEFAULT_MAX_DEGREE).unwrap();
    assert_eq!(res.dims(), vec![0]);
    let g = res.assembled.unwrap();
    assert_eq!(g.dim(), 1 + 6 + 4);
}

#[test]
fn extended_brackets_wolf() {
    let b = build_base_grading(&sym3().rep).unwrap();
    let res = full_prolongation(b, DEFAULT_MAX_DEGREE).unwrap();
    let t = &res.tower;
    let f = Field::QI;
    let unit = |n: usize, i: usize| (0..n).map(|k| Scalar::from_int((k == i) as i64, f)).collect::<Vec<_>>();
    let big_f = Elem { deg: -2, coords: unit(1, 0) };
    // [u, F] = −u(F): recovers the ψ-block
    for i in 0..4 {
        let u = Elem { deg: 1, coords: unit(4, i) };
        let v = t.bracket(&u, &big_f).unwrap();
        let amb = t.component(1).unwrap().combine(&u.coords);
        assert_eq!(v.coords, amb[..4].to_vec());
    }
    // [g_1, g_1] = g_2
    let mut hit = false;
    for i in 0..4 {
        for j in 0..4 {
            let v = t.bracket(&Elem { deg: 1, coords: unit(4, i) }, &Elem { deg: 1, coords: unit(4, j) }).unwrap();
            assert_eq!(v.deg, 2);
            hit |= !v.is_zero();
        }
    }
    assert!(hit);
    // [E, F] for E spanning g_2 is a multiple of H
    let e = Elem { deg: 2, coords: unit(1, 0) };
    let h = t.bracket(&e, &big_f).unwrap();
    assert_eq!(h.deg, 0);
    assert!(h.coords[..3].iter().all(Scalar::is_zero) && !h.coords[3].is_zero());
    assert!(t.extend_bracket(&big_f, &e).is_err());
}

#[test]
fn killing_checks() {
    let ab = GradedLieAlgebra { algebra: LieAlgebra::abelian(2, Field::Q), degrees: vec![-1, 1], grading_element: None };
    assert!(ab.killing_grading_check());
    assert!(ab.respects_degrees());
    assert!(!ab.grading_element_ok());
}

#[test]
fn proposition_sym3() {
    let rep = PropositionSetup::new(&sym3()).unwrap().verify().unwrap();
    assert_eq!((rep.p_dim, rep.g1_dim, rep.map_rank), (8, 4, 8));
    assert!(rep.holds(), "{rep:?}");
}

#[test]
fn proposition_sym5_and_zero() {
    let e = catalog::resolve("sl2:sym5 in sp(6)", Field::QI).unwrap();
    let setup = PropositionSetup::new(&e).unwrap();
    let rep = setup.verify().unwrap();
    assert_eq!((rep.p_dim, rep.g1_dim), (0, 0));
    assert!(rep.holds());
    let s = PropositionSetup::new(&sym3()).unwrap();
    let zero = vec![Scalar::zero(Field::QI); s.ps.space.ambient()];
    let (u1, u2) = s.to_g1_pair(&zero).unwrap();
    assert!(u1.iter().chain(&u2).all(Scalar::is_zero));
}
