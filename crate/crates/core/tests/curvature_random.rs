use bergerlab::catalog;
use bergerlab::curvature::{decompose_r, pspace, rspace, star_lemma_check, CurvatureSpace};
use bergerlab::exactlin::{axpy, Field, Scalar};
use bergerlab::symspace::{build_symmetric_pair, is_invariant, jacobi_characterization};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn combo(rng: &mut ChaCha8Rng, basis: &[Vec<Scalar>], len: usize, f: Field) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(f); len];
    for b in basis {
        axpy(&mut v, &Scalar::from_int(rng.gen_range(-5..=5), f), b);
    }
    v
}

#[test]
fn star_lemma_seeded() {
    for (n, seed) in [(3usize, 3u64), (4, 4)] {
        let rep = catalog::so(n, Field::Q).unwrap().rep;
        let ps = pspace(&rep).unwrap();
        for s in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + s);
            let sample: Vec<_> = (0..n).map(|_| combo(&mut rng, ps.space.basis(), ps.space.ambient(), Field::Q)).collect();
            assert!(star_lemma_check(&ps, &sample).unwrap(), "so({n}) seed {s}");
        }
    }
}

#[test]
fn jacobi_equivalence_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in [3usize, 4] {
        let rep = catalog::so(n, Field::QI).unwrap().rep;
        let rs = rspace(&rep);
        let r1 = decompose_r(&rs).unwrap().r1;
        let len = rs.space.ambient();
        for t in 0..50 {
            let r = match t % 3 {
                0 => (0..len).map(|_| Scalar::from_int(rng.gen_range(-5..=5), Field::QI)).collect(),
                1 => combo(&mut rng, rs.space.basis(), len, Field::QI),
                _ => combo(&mut rng, r1.basis(), len, Field::QI),
            };
            let j = jacobi_characterization(&rep, &r).unwrap();
            assert_eq!(j.bianchi, CurvatureSpace::satisfies_bianchi(&rep, &r));
            assert_eq!(j.invariant, is_invariant(&rep, &r));
            if t % 3 == 2 {
                assert!(j.jacobi);
            }
        }
    }
}

#[test]
fn sphere_pairs_have_nondegenerate_killing_form() {
    for n in 3..=5 {
        let rep = catalog::so(n, Field::QI).unwrap().rep;
        let r = bergerlab::curvature::identity_tensor(&rep).unwrap();
        let pair = build_symmetric_pair(&rep, &r).unwrap();
        assert_eq!(pair.algebra.dim(), n * (n + 1) / 2);
        assert!(pair.jacobi());
        assert!(pair.algebra.is_semisimple());
    }
}
