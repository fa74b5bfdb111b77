use fermat_core::arith::{q, ExactRational, RationalInterval};
use fermat_core::audit::{claim_comparison, counterpart_existence_audit, fermat_residual_check};
use fermat_core::identity::{flt_poly_symbolic, verify_duality, MultiPoly, Var};
use fermat_core::param::{
    check_reconstruction, counterpart, from_params, reconstruction_equalities, residual, to_params,
    CounterpartPair, ParamTriple, RationalTriple,
};
use fermat_core::poly::{
    build_flt_poly, isolate_positive_roots, isolate_real_roots, rational_root_test, refine,
    sturm_count, UniPoly,
};
use fermat_core::search::{
    check_n2_law, gen_pythagorean, lemma31_divisibility_shortcut, lemma31_search,
    rational_solution_search, special_case_poly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational `h > 1` with numerator and denominator at most `height`.
fn random_h(rng: &mut ChaCha8Rng, height: i64) -> ExactRational {
    loop {
        let l = rng.gen_range(1..height);
        let k = rng.gen_range(l + 1..=height);
        let h = q(k, l);
        if h > 1 {
            return h;
        }
    }
}

fn random_positive(rng: &mut ChaCha8Rng) -> ExactRational {
    q(rng.gen_range(1..500), rng.gen_range(1..60))
}

/// Random admissible triple: positive legs and `max(a, b) < c < a + b`.
fn random_triple(rng: &mut ChaCha8Rng) -> RationalTriple {
    loop {
        let a = random_positive(rng);
        let b = random_positive(rng);
        let top = a.clone().max(b.clone());
        let t = q(rng.gen_range(1..1000), 1000);
        let c = &top + &((&(&a + &b) - &top) * t);
        let tri = RationalTriple::new(a, b, c);
        if tri.check_admissible().is_ok() {
            return tri;
        }
    }
}

#[test]
fn single_positive_root_for_h_above_one() {
    let mut r = rng(1);
    for n in 2..=20 {
        for _ in 0..100 {
            let h = random_h(&mut r, 40);
            let p = build_flt_poly(n, &h).unwrap();
            assert_eq!(p.sign_variations(), 1);
            assert_eq!(
                isolate_positive_roots(&p).unwrap().len(),
                1,
                "n = {n}, h = {h}"
            );
        }
    }
}

#[test]
fn sturm_count_matches_constructed_roots() {
    let mut r = rng(2);
    for _ in 0..200 {
        // product of distinct linear factors and irreducible quadratics
        let mut roots: Vec<ExactRational> = Vec::new();
        let mut p = UniPoly::from_ints(&[1]);
        let linear = r.gen_range(0..=5);
        while roots.len() < linear {
            let x = q(r.gen_range(-40..40), r.gen_range(1..5));
            if !roots.contains(&x) {
                p = &p * &UniPoly::linear_root(&x);
                roots.push(x);
            }
        }
        for _ in 0..r.gen_range(0..=1) {
            // x^2 + b x + c with b^2 < 4c
            let b = r.gen_range(-5..5);
            let c = b * b + r.gen_range(1..10);
            p = &p * &UniPoly::from_ints(&[c, b, 1]);
        }
        // a repeated root must still be counted once
        if let Some(x) = roots.first() {
            if r.gen_bool(0.3) {
                p = &p * &UniPoly::linear_root(x);
            }
        }
        let lo = q(r.gen_range(-30..0) * 2 + 1, 2);
        let hi = q(r.gen_range(0..30) * 2 + 1, 2);
        let iv = RationalInterval::new(lo.clone(), hi.clone()).unwrap();
        let expected = roots.iter().filter(|x| lo < **x && **x < hi).count();
        assert_eq!(sturm_count(&p, &iv).unwrap(), expected, "{p} on {iv}");
        assert_eq!(isolate_real_roots(&p).unwrap().len(), roots.len());
    }
}

#[test]
fn refinement_keeps_the_root() {
    let mut r = rng(3);
    for n in 2..=12 {
        for _ in 0..5 {
            let h = random_h(&mut r, 30);
            let p = build_flt_poly(n, &h).unwrap();
            for e in isolate_real_roots(&p).unwrap() {
                for bits in [8, 40, 96] {
                    let refined = refine(&p, &e, bits).unwrap();
                    assert!(e.interval.contains_interval(&refined.interval));
                    assert!(refined.width() <= ExactRational::pow2_neg(bits));
                    assert!(p.eval_interval(&refined.interval).contains_zero());
                }
            }
        }
    }
}

#[test]
fn quadratic_law_rational_roots() {
    let mut r = rng(4);
    for _ in 0..200 {
        let h = random_h(&mut r, 1000);
        let p = build_flt_poly(2, &h).unwrap();
        let expected = q(2, 1) * (&h - &q(1, 1));
        assert_eq!(rational_root_test(&p).unwrap(), vec![expected]);
    }
}

#[test]
fn no_rational_roots_for_higher_exponents() {
    let mut r = rng(5);
    for n in 3..=10 {
        for _ in 0..30 {
            let h = random_h(&mut r, 50);
            let roots = rational_root_test(&build_flt_poly(n, &h).unwrap()).unwrap();
            assert!(
                roots.is_empty(),
                "CRITICAL: rational root {roots:?} at n = {n}, h = {h}"
            );
        }
    }
}

#[test]
fn numeric_family_matches_symbolic_family() {
    let mut r = rng(6);
    for n in 2..=20 {
        let sym = flt_poly_symbolic(n, Var::G, Var::H).unwrap();
        for _ in 0..20 {
            let h0 = q(r.gen_range(-60..60), r.gen_range(1..20));
            let numeric = build_flt_poly(n, &h0).unwrap();
            let from_sym = sym
                .substitute(Var::H, &MultiPoly::constant(h0.clone()))
                .to_univariate(Var::G)
                .unwrap();
            assert_eq!(numeric, from_sym, "n = {n}, h0 = {h0}");
        }
    }
}

/// The same identity with `(g, h)` renamed to `(h1, h2)` and the
/// substitution list reversed.
fn duality_renamed(n: u32) -> bool {
    let p = flt_poly_symbolic(n, Var::H1, Var::H2).unwrap();
    let x = MultiPoly::var(Var::H1);
    let lhs = p
        .substitute_fractions(&[
            (Var::H2, &x + &MultiPoly::one(), x.clone()),
            (Var::H1, MultiPoly::one(), MultiPoly::var_minus(Var::H2, 1)),
        ])
        .unwrap();
    lhs == p
}

#[test]
fn duality_status_is_stable_under_renaming() {
    for n in 2..=12 {
        assert_eq!(
            verify_duality(n).unwrap().is_identity(),
            duality_renamed(n),
            "n = {n}"
        );
    }
}

#[test]
fn roundtrip_involution_and_reconstruction() {
    let mut r = rng(7);
    for _ in 0..10_000 {
        let t = random_triple(&mut r);
        let p = to_params(&t).unwrap();
        assert_eq!(from_params(&p), t);
        let c = counterpart(&p).unwrap();
        assert_eq!(counterpart(&c).unwrap(), p);
        assert_eq!(from_params(&c), t.swap_ab());
        let pair = CounterpartPair::from_first(p).unwrap();
        let [e1, e2, e3] = reconstruction_equalities(&pair);
        // the third equality is the sum of the first two
        assert!(!(e1 && e2) || e3);
        assert!(check_reconstruction(&pair));
    }
}

#[test]
fn gap_identity() {
    let mut r = rng(8);
    for _ in 0..500 {
        let p = ParamTriple::new(
            random_positive(&mut r),
            random_positive(&mut r),
            random_h(&mut r, 90),
        );
        let t = from_params(&p);
        for n in 2..=8 {
            let lhs = t.fermat_gap(n);
            let rhs = &p.g * &p.d.powu(n) * residual(&p, n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn every_generated_triple_obeys_the_quadratic_law() {
    for t in gen_pythagorean(2000).unwrap() {
        assert!(check_n2_law(&t).unwrap(), "{t:?}");
    }
}

#[test]
fn lemma31_strategies_agree() {
    for bound in [2, 3, 10, 97, 500, 2000] {
        let scan = lemma31_search(bound).unwrap();
        assert!(scan.exhaustive);
        assert_eq!(scan.hits, lemma31_divisibility_shortcut(bound).unwrap());
    }
}

#[test]
fn special_case_poly_matches_family() {
    let mut r = rng(9);
    for n in 2..=10 {
        let qn = special_case_poly(n).unwrap();
        for _ in 0..50 {
            let h0 = random_h(&mut r, 80);
            let hm1 = &h0 - &q(1, 1);
            let via_family =
                hm1.powu(n - 1) * build_flt_poly(n, &h0).unwrap().eval(&hm1.recip().unwrap());
            assert_eq!(qn.eval(&h0), via_family);
        }
    }
}

#[test]
fn searches_are_deterministic() {
    let a = rational_solution_search(3, 20).unwrap();
    let b = rational_solution_search(3, 20).unwrap();
    assert!(a.same_outcome(&b));
    let a = lemma31_search(1500).unwrap();
    let b = lemma31_search(1500).unwrap();
    assert!(a.same_outcome(&b));
    let a = rational_solution_search(2, 25).unwrap();
    let b = rational_solution_search(2, 25).unwrap();
    assert!(a.same_outcome(&b));
}

#[test]
fn fermat_residual_contains_zero_and_narrows() {
    let samples = [q(3, 2), q(2, 1), q(5, 2), q(3, 1)];
    for n in 2..=10 {
        for h1 in &samples {
            let ivs: Vec<_> = [32, 64, 128]
                .iter()
                .map(|&bits| fermat_residual_check(n, h1, bits).unwrap())
                .collect();
            assert!(
                ivs.iter().all(RationalInterval::contains_zero),
                "n = {n}, h1 = {h1}"
            );
            assert!(ivs[1].width() <= ivs[0].width() && ivs[2].width() <= ivs[1].width());
        }
    }
}

#[test]
fn quadratic_audit_reproduces_exact_counterpart() {
    let mut r = rng(10);
    for _ in 0..40 {
        let h1 = random_h(&mut r, 40);
        let report = counterpart_existence_audit(2, &h1, 64).unwrap();
        assert!(report.g1.is_exact());
        let g1 = report.g1.interval.lo().clone();
        let exact = counterpart(&ParamTriple::new(q(1, 1), g1, h1.clone())).unwrap();
        assert_eq!(report.g2, exact.g);
        assert_eq!(report.h2, RationalInterval::point(exact.h));
        assert!(report.counterpart_found);
    }
}

#[test]
fn swap_relations_hold_where_counterpart_found() {
    for n in 2..=8 {
        let cmp = claim_comparison(n, &fermat_core::audit::default_samples(), 96).unwrap();
        for report in &cmp.samples {
            if report.counterpart_found {
                assert_eq!(
                    report.swap_relations(),
                    [true, true],
                    "n = {n}, h1 = {}",
                    report.h1
                );
            }
        }
    }
}

#[test]
fn audit_reports_are_bit_identical() {
    let a = claim_comparison(4, &fermat_core::audit::default_samples(), 128).unwrap();
    let b = claim_comparison(4, &fermat_core::audit::default_samples(), 128).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}
