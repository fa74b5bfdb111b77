//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use fermat_core::arith::{q, ExactRational};
use fermat_core::audit::{counterpart_existence_audit, default_samples, fermat_residual_check};
use fermat_core::identity::{
    duality_lhs, flt_poly_symbolic, operator_step, term_match_report, verify_duality,
    verify_expansion_identity, verify_reduction_identity, DualityOutcome, MultiPoly,
    RationalFunction, Var,
};
use fermat_core::param::{
    check_reconstruction, counterpart, from_params, reconstruction_equalities, to_params,
    CounterpartPair, RationalTriple,
};
use fermat_core::poly::{rational_root_test, UniPoly};
use fermat_core::search::{
    gen_pythagorean, lemma31_divisibility_shortcut, lemma31_search, rational_solution_search,
    special_case_poly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn quadratic_law() -> Outcome {
    let triples = gen_pythagorean(10_000).map_err(err)?;
    for t in &triples {
        let p = to_params(&t.to_rational()).map_err(err)?;
        let expected = (&p.h - &ExactRational::one()) * ExactRational::from(2);
        ensure!(
            p.g == expected,
            "({}, {}, {}): g = {}, h = {}",
            t.a,
            t.b,
            t.c,
            p.g,
            p.h
        );
    }
    let primitive = triples.iter().filter(|t| t.primitive).count();
    ensure!(primitive > 0, "no primitive triples generated");
    Ok(format!(
        "{} triples ({primitive} primitive, both leg orders)",
        triples.len()
    ))
}

fn random_triple(rng: &mut ChaCha8Rng) -> RationalTriple {
    loop {
        let a = q(rng.gen_range(1..500), rng.gen_range(1..60));
        let b = q(rng.gen_range(1..500), rng.gen_range(1..60));
        let top = a.clone().max(b.clone());
        let t = q(rng.gen_range(1..1000), 1000);
        let c = &top + &((&(&a + &b) - &top) * t);
        let tri = RationalTriple::new(a, b, c);
        if tri.check_admissible().is_ok() {
            return tri;
        }
    }
}

fn roundtrip_and_involution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let count = 10_000;
    for i in 0..count {
        let t = random_triple(&mut rng);
        let p = to_params(&t).map_err(err)?;
        ensure!(
            from_params(&p) == t,
            "sample {i}: roundtrip failed for {t:?}"
        );
        let c = counterpart(&p).map_err(err)?;
        ensure!(
            counterpart(&c).map_err(err)? == p,
            "sample {i}: involution failed"
        );
        let pair = CounterpartPair::from_first(p).map_err(err)?;
        let eqs = reconstruction_equalities(&pair);
        ensure!(
            eqs == [true; 3] && check_reconstruction(&pair),
            "sample {i}: reconstruction {eqs:?}"
        );
    }
    Ok(format!("{count} random triples"))
}

fn derivation_suite() -> Outcome {
    for n in 2..=32 {
        ensure!(
            verify_expansion_identity(n).map_err(err)?,
            "expansion identity fails at n = {n}"
        );
        ensure!(
            verify_reduction_identity(n).map_err(err)?,
            "reduction to P_n fails at n = {n}"
        );
    }
    for n in 2..=12 {
        let terms = operator_step(n).map_err(err)?;
        ensure!(
            terms.len() == (n - 1) as usize,
            "n = {n}: {} terms",
            terms.len()
        );
    }
    Ok("expansion and reduction n = 2..32, operator step n = 2..12".into())
}

fn term_match() -> Outcome {
    ensure!(
        term_match_report(2).map_err(err)?.all_match,
        "n = 2 should match"
    );
    for n in 3..=12 {
        ensure!(
            !term_match_report(n).map_err(err)?.all_match,
            "n = {n} should not match"
        );
    }
    let h1 = MultiPoly::var(Var::H1);
    let h2 = MultiPoly::var(Var::H2);
    let expected = RationalFunction::new(
        (&MultiPoly::var_minus(Var::H2, 1) * &(&h2 - &h1)).scale(&ExactRational::from(3)),
        MultiPoly::var_minus(Var::H1, 1),
    )
    .map_err(err)?;
    let first = term_match_report(3).map_err(err)?.per_term_differences[0].clone();
    ensure!(
        first == expected || first == expected.neg(),
        "n = 3 first difference is {first}"
    );
    Ok(format!(
        "n = 2 matches, n = 3..12 differ; n = 3 first difference {first}"
    ))
}

fn lemma31() -> Outcome {
    let report = lemma31_search(10_000).map_err(err)?;
    ensure!(report.exhaustive, "scan did not cover every range");
    ensure!(report.hits.is_empty(), "{} hits", report.hits.len());
    let shortcut = lemma31_divisibility_shortcut(10_000).map_err(err)?;
    ensure!(
        shortcut == report.hits,
        "shortcut found {} hits",
        shortcut.len()
    );
    for n in 2..=10 {
        let roots = rational_root_test(&special_case_poly(n).map_err(err)?).map_err(err)?;
        ensure!(roots.is_empty(), "n = {n}: rational roots {roots:?}");
    }
    Ok(format!(
        "{} candidates, zero hits, strategies agree",
        report.candidates
    ))
}

fn counterpart_audit() -> Outcome {
    let report = counterpart_existence_audit(3, &q(2, 1), 128).map_err(err)?;
    let g1 = &report.g1.interval;
    // 9.3218253... truncated to seven decimals; the root lies within 1e-7 above it.
    let shown = q(93_218_253, 10_000_000);
    let next = q(93_218_254, 10_000_000);
    ensure!(*g1.lo() >= shown && *g1.hi() <= next, "g1 = {g1}");
    ensure!(
        g1.width() <= ExactRational::pow2_neg(64),
        "g1 width {}",
        g1.width()
    );
    // g1 is the positive root of g^2 - 9g - 3
    let g_quad = UniPoly::from_ints(&[-3, -9, 1]);
    ensure!(
        g_quad.sign_at(g1.lo()) * g_quad.sign_at(g1.hi()) <= 0,
        "g1 does not bracket a root of g^2 - 9g - 3"
    );
    // h2 must bracket the positive root of 3h^2 + 3h - 7
    let h_quad = UniPoly::from_ints(&[-7, 3, 3]);
    let h2 = &report.h2;
    ensure!(*h2.lo() > 0, "h2 = {h2}");
    ensure!(
        h_quad.sign_at(h2.lo()) * h_quad.sign_at(h2.hi()) <= 0,
        "h2 = {h2} misses the root of 3h^2 + 3h - 7"
    );
    ensure!(
        report.counterpart_residual.contains_zero(),
        "residual {}",
        report.counterpart_residual
    );
    ensure!(report.counterpart_found, "counterpart not found");
    Ok(format!(
        "g1 ~ {}, h2 ~ {}",
        g1.lo().to_decimal(10),
        h2.lo().to_decimal(10)
    ))
}

fn fermat_residual() -> Outcome {
    let samples = default_samples();
    for n in 3..=10 {
        for h1 in &samples {
            let r = fermat_residual_check(n, h1, 128).map_err(err)?;
            ensure!(r.contains_zero(), "n = {n}, h1 = {h1}: residual {r}");
        }
    }
    Ok(format!("n = 3..10 at {} sample points", samples.len()))
}

fn rational_scan() -> Outcome {
    for n in [3, 4] {
        let report = rational_solution_search(n, 50).map_err(err)?;
        ensure!(report.exhaustive, "n = {n}: scan incomplete");
        ensure!(
            report.hits.is_empty(),
            "n = {n}: {} hits",
            report.hits.len()
        );
    }
    let report = rational_solution_search(2, 50).map_err(err)?;
    ensure!(report.exhaustive, "n = 2: scan incomplete");
    ensure!(
        report.hits.len() as u64 == report.candidates,
        "n = 2: {} hits for {} admissible h",
        report.hits.len(),
        report.candidates
    );
    let one = ExactRational::one();
    for hit in &report.hits {
        let expected = (&hit.h - &one) * ExactRational::from(2);
        ensure!(hit.g == expected, "n = 2: h = {}, g = {}", hit.h, hit.g);
    }
    let mut hs: Vec<_> = report.hits.iter().map(|h| h.h.clone()).collect();
    hs.dedup();
    ensure!(hs.len() == report.hits.len(), "n = 2: repeated h");
    Ok(format!(
        "n = 3, 4 empty; n = 2 has {} hits on the line g = 2(h - 1)",
        report.hits.len()
    ))
}

fn duality() -> Outcome {
    let mut summary = Vec::new();
    for n in 2..=32 {
        let first = verify_duality(n).map_err(err)?;
        let second = verify_duality(n).map_err(err)?;
        ensure!(first == second, "n = {n}: verdict not deterministic");
        if n <= 3 {
            ensure!(
                first.is_identity(),
                "n = {n}: expected an identity, got {first:?}"
            );
        }
        match &first {
            DualityOutcome::Identity => summary.push("I"),
            DualityOutcome::Cofactor { cofactor } => {
                let p = flt_poly_symbolic(n, Var::G, Var::H).map_err(err)?;
                ensure!(
                    cofactor * &p == duality_lhs(n).map_err(err)?,
                    "n = {n}: cofactor inexact"
                );
                summary.push("C");
            }
            DualityOutcome::Mismatch { .. } => summary.push("M"),
        }
    }
    Ok(format!("n = 2..32 verdicts {}", summary.concat()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("quadratic law on Pythagorean triples", quadratic_law),
        (
            "roundtrip, involution, reconstruction",
            roundtrip_and_involution,
        ),
        ("derivation suite", derivation_suite),
        ("term match", term_match),
        ("Diophantine scan and special-case roots", lemma31),
        ("counterpart audit n = 3, h1 = 2", counterpart_audit),
        ("Fermat residual encloses zero", fermat_residual),
        ("rational scans", rational_scan),
        ("duality identity", duality),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
