//! One line per acceptance criterion. Runs under `cargo test` with
//! `harness = false`; exits nonzero on any unexpected failure.
//!
//! Criteria listed in `KNOWN_RED` are printed as FAIL and do not change the
//! exit status; the reason is printed next to them.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bergerlab::catalog::{self, CatalogEntry};
use bergerlab::curvature::{
    decompose_p, decompose_r, first_prolongation, identity_tensor, pspace, rspace, standard_multiplicity,
    star_lemma_check, tau_image,
};
use bergerlab::exactlin::{axpy, Field, Scalar};
use bergerlab::symspace::{build_symmetric_pair, jacobi_characterization};
use bergerlab::tanaka::{build_base_grading, full_prolongation, prolongation_report, PropositionSetup, Tower};
use bergerlab::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// so(4, C) = sl2 ⊕ sl2 acts on C² ⊗ C², which occurs twice in C⁴ ⊗ so(4).
const KNOWN_RED: &[(u32, &str)] = &[(10, "so(4,C) is not simple: its defining module has two nonzero labels and multiplicity 2")];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn qi(spec: &str) -> CatalogEntry {
    catalog::resolve(spec, Field::QI).unwrap()
}

fn q(spec: &str) -> CatalogEntry {
    catalog::resolve(spec, Field::Q).unwrap()
}

fn c1_lemma_instance() -> Result<Outcome> {
    let res = full_prolongation(build_base_grading(&qi("sl2:sym3").rep)?, 6)?;
    let rep = prolongation_report(&res)?;
    let ok = rep.prolongation == [4, 1, 0]
        && rep.assembled_dim == Some(14)
        && rep.simple == Some(true)
        && rep.killing_graded == Some(true)
        && rep.grading_element_ok == Some(true);
    outcome(
        ok,
        format!(
            "g = {:?}, assembled {:?}, simple {:?}, killing-graded {:?}",
            rep.prolongation, rep.assembled_dim, rep.simple, rep.killing_graded
        ),
    )
}

fn c2_sp4_baseline() -> Result<Outcome> {
    let mut t = Tower::new(build_base_grading(&qi("sp(4)").rep)?);
    let alt = t.g1_alternative()?;
    let g1 = t.prolong_step()?.clone();
    let (psi, phi) = t.g1_diagonal_profile().unwrap();
    // Sym³C⁴ has C(6,3) = 20 monomials
    let ok = g1.dim() == 24 && psi == 4 && phi == 20 && alt == g1;
    outcome(ok, format!("dim g1 = {} = {} + {}, alternative route agrees: {}", g1.dim(), psi, phi, alt == g1))
}

fn c3_proposition() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (spec, expect) in [("sl2:sym3", 8), ("sl2:sym5 in sp(6)", 0), ("sp(4)", 48)] {
        let rep = PropositionSetup::new(&qi(spec))?.verify()?;
        ok &= rep.holds() && rep.p_dim == expect;
        parts.push(format!("{spec}: P {} = 2·{} rank {}", rep.p_dim, rep.g1_dim, rep.map_rank));
    }
    outcome(ok, parts.join("; "))
}

fn c4_pair_pspaces() -> Result<Outcome> {
    let a = pspace(&qi("tensor(so(3),so(3))").rep)?.dim();
    let b = pspace(&qi("tensor(sp(4),sp(4))").rep)?.dim();
    outcome(a == 9 && b == 16, format!("so3+so3 on C^9: {a}; sp4+sp4 on C^16: {b}"))
}

fn c5_first_prolongations() -> Result<Outcome> {
    let a = first_prolongation(&qi("sp(4)").rep).dim();
    let b = first_prolongation(&qi("sl2:sym3").rep).dim();
    let c = first_prolongation(&qi("so(3)").rep).dim();
    outcome((a, b, c) == (20, 0, 0), format!("sp(4): {a}, sl2:sym3: {b}, so(3): {c}"))
}

fn c6_split_equivalences() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for e in [q("so(4)"), q("tensor(so(3),so(3))"), qi("sl2xk(sl2:sym3)"), qi("sl2xk(sp(4))")] {
        let n = e.rep.dim();
        let rd = decompose_r(&rspace(&e.rep))?;
        let pd = decompose_p(&pspace(&e.rep)?)?;
        let holds = ((pd.p0_dim > 0) == (rd.r0_dim > 0))
            && (pd.p1_dim == 0 || pd.p1_dim == n)
            && ((pd.p1_dim > 0) == (rd.r1_dim == 1));
        ok &= holds;
        parts.push(format!("{} P0 {} R0 {} P1 {} R1 {}", e.name, pd.p0_dim, rd.r0_dim, pd.p1_dim, rd.r1_dim));
    }
    outcome(ok, parts.join("; "))
}

fn c7_tau() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in ["so(3)", "so(4)", "tensor(so(3),so(3))"] {
        let e = q(spec);
        let rs = rspace(&e.rep);
        let ps = pspace(&e.rep)?;
        let rd = decompose_r(&rs)?;
        let pd = decompose_p(&ps)?;
        let one = tau_image(&rs, &ps, &rd.r1)? == pd.p1.clone().unwrap();
        let zero_img = tau_image(&rs, &ps, &rd.r0)?;
        let inside = zero_img.is_subspace_of(&pd.p0)?;
        let equal = inside && zero_img.dim() == pd.p0_dim;
        // equality on the R0 side is only claimed for n ≥ 4
        ok &= one && inside && (equal || e.rep.dim() < 4);
        parts.push(format!("{spec}: R1→P1 {one}, R0→P0 inside {inside} equal {equal} (P0 {})", pd.p0_dim));
    }
    outcome(ok, parts.join("; "))
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vec<Scalar>], len: usize, f: Field) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(f); len];
    for b in basis {
        axpy(&mut v, &Scalar::from_int(rng.gen_range(-5..=5), f), b);
    }
    v
}

fn c8_star_lemma() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut ok = true;
    let mut count = 0;
    for spec in ["so(3)", "so(4)"] {
        let e = q(spec);
        let ps = pspace(&e.rep)?;
        for _ in 0..100 {
            let s: Vec<_> = (0..e.rep.dim())
                .map(|_| random_combination(&mut rng, ps.space.basis(), ps.space.ambient(), Field::Q))
                .collect();
            ok &= star_lemma_check(&ps, &s)?;
            count += 1;
        }
    }
    outcome(ok, format!("{count} seeded samples"))
}

fn c9_symmetric() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut ok = true;
    let mut parts = Vec::new();
    for (spec, dim, ideals) in [("so(3)", 6, 2), ("so(4)", 10, 1)] {
        let e = qi(spec);
        let rep = build_symmetric_pair(&e.rep, &identity_tensor(&e.rep)?)?.report()?;
        ok &= rep.jacobi && rep.dim == dim && rep.semisimple && rep.ideal_count == Some(ideals);
        let n = e.rep.dim();
        let len = n * (n - 1) / 2 * e.rep.algebra_dim();
        let rs = rspace(&e.rep);
        let r1 = decompose_r(&rs)?.r1;
        let (mut yes, mut no) = (0, 0);
        for t in 0..50 {
            let r = match t % 3 {
                0 => (0..len).map(|_| Scalar::from_int(rng.gen_range(-5..=5), Field::QI)).collect(),
                1 => random_combination(&mut rng, rs.space.basis(), len, Field::QI),
                _ => random_combination(&mut rng, r1.basis(), len, Field::QI),
            };
            // errors when Jacobi ⇔ (Bianchi ∧ invariance) fails
            let j = jacobi_characterization(&e.rep, &r)?;
            if j.jacobi {
                yes += 1;
            } else {
                no += 1;
            }
        }
        ok &= yes > 0 && no > 0;
        parts.push(format!("{spec}: dim {} ideals {:?}, 50 samples ({yes} Jacobi, {no} not)", rep.dim, rep.ideal_count));
    }
    outcome(ok, parts.join("; "))
}

fn c10_multiplicity() -> Result<Outcome> {
    let so4 = standard_multiplicity(&qi("so(4)").rep)?;
    let sp4 = standard_multiplicity(&qi("sp(4)").rep)?;
    let pair = standard_multiplicity(&qi("tensor(sl2,sl2:sym3)").rep)?;
    outcome(
        so4 == 1 && sp4 == 1 && pair == 2,
        format!("so(4): {so4} (expected 1), sp(4): {sp4}, sl2+sl2 on C2⊗C4: {pair}"),
    )
}

fn c11_negative_control() -> Result<Outcome> {
    let k = qi("sl2:sym5 in sp(6)");
    let res = full_prolongation(build_base_grading(&k.rep)?, 6)?;
    let p = pspace(&catalog::sl2_tensor_symplectic(&k)?.rep)?.dim();
    outcome(res.dims() == [0] && p == 0, format!("g = {:?}, dim P(sl2+k) = {p}", res.dims()))
}

type Criterion = (u32, &'static str, u64, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "Tanaka lemma instance sl2:sym3", 10, c1_lemma_instance),
        (2, "sp(4) baseline g1 = 4 + 20", 10, c2_sp4_baseline),
        (3, "P(sl2+k) = 2·dim g1 with explicit isomorphism", 60, c3_proposition),
        (4, "pair weak curvature spaces", 120, c4_pair_pspaces),
        (5, "first prolongations", 5, c5_first_prolongations),
        (6, "P0/R0 and P1/R1 equivalences", 120, c6_split_equivalences),
        (7, "tau compatibility", 60, c7_tau),
        (8, "T + T* lemma on random S", 60, c8_star_lemma),
        (9, "symmetric reconstruction and Jacobi characterization", 60, c9_symmetric),
        (10, "multiplicity of V in V⊗h", 30, c10_multiplicity),
        (11, "negative control sl2:sym5", 120, c11_negative_control),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = 0;
    for (id, label, budget, f) in criteria {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(budget);
        let (pass, detail) = match result {
            Ok(o) => (o.pass && within, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        let mut line = format!(
            "{} criterion {id:>2}: {label} [{detail}] {:.2}s / {budget}s",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !pass {
            match known {
                Some((_, why)) => line.push_str(&format!(" (known: {why})")),
                None => unexpected += 1,
            }
        }
        println!("{line}");
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
