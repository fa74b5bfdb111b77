mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use fermat_core::arith::ExactRational;
use fermat_core::audit::{claim_comparison, counterpart_existence_audit, default_samples};
use fermat_core::identity::{
    operator_step, term_match_report, verify_duality, verify_expansion_identity,
    verify_reduction_identity, DualityOutcome,
};
use fermat_core::param::{
    check_reconstruction, counterpart, reconstruction_equalities, residual, to_params,
    CounterpartPair, RationalParams, RationalTriple,
};
use fermat_core::poly::DEFAULT_PRECISION_BITS;
use fermat_core::poly::{build_flt_poly, isolate_real_roots, rational_root_test, refine};
use fermat_core::search::{
    check_n2_law, gen_pythagorean, lemma31_divisibility_shortcut, lemma31_search,
    rational_solution_search, special_case_poly, DEFAULT_HEIGHT_BOUND, DEFAULT_LEMMA31_BOUND,
};
use fermat_core::Error;

use report::{to_value, OutputFormat, Report, Table};

const MAX_PRECISION_BITS: u32 = 4096;

#[derive(Parser)]
#[command(name = "fermat", version)]
#[command(about = "Exact checks of the (d, g, h) parametrization of a^n + b^n = c^n")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    output_format: OutputFormat,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output_path: Option<PathBuf>,
    /// Bits of precision for root enclosures
    #[arg(long, global = true, env = "FERMAT_PRECISION_BITS", default_value_t = DEFAULT_PRECISION_BITS)]
    precision_bits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of P_n(g, h) as a polynomial in g for fixed h
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: ExactRational,
    },
    /// Real roots in g of P_n(g, h), refined, plus its rational roots
    Roots {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: ExactRational,
    },
    /// Parameters (d, g, h) of a triple and the residual P_n(g, h)
    Map {
        #[arg(long)]
        a: ExactRational,
        #[arg(long)]
        b: ExactRational,
        #[arg(long)]
        c: ExactRational,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Counterpart parameters and the reconstruction equalities
    Counterpart {
        #[arg(long)]
        d: ExactRational,
        #[arg(long)]
        g: ExactRational,
        #[arg(long)]
        h: ExactRational,
    },
    /// Primitive Pythagorean triples with c <= limit and the law g = 2(h - 1)
    Pythagorean {
        #[arg(long, default_value_t = 100)]
        limit: u64,
    },
    /// Coprime k > l with k <= bound solving the Diophantine special case
    Lemma31 {
        #[arg(long, default_value_t = DEFAULT_LEMMA31_BOUND)]
        bound: u64,
    },
    /// Rational roots of the special-case polynomials
    SpecialCase {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
    },
    /// Rational points of P_n(g, h) = 0 with g > 0 and h of bounded height
    Scan {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_HEIGHT_BOUND)]
        height_bound: u64,
    },
    /// Symbolic identity suite over a range of exponents
    Identities {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
    /// Counterpart existence audit; several --h1 give a side-by-side comparison
    Audit {
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Defaults to 3/2, 2, 5/2, 3
        #[arg(long)]
        h1: Vec<ExactRational>,
    },
}

/// Failure to produce a report: bad input or a broken internal invariant.
enum Failure {
    Input(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Parse(_) => Failure::Input(e.to_string()),
            other => Failure::Violated(other.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Input(msg()))
    }
}

fn check_n(n: u32) -> Result<(), Failure> {
    require(n >= 2, || format!("exponent n = {n}, need n >= 2"))
}

fn check_range(n_min: u32, n_max: u32) -> Result<(), Failure> {
    check_n(n_min)?;
    require(n_min <= n_max, || format!("empty range {n_min}..={n_max}"))
}

fn params(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

fn poly(n: u32, h: &ExactRational) -> Outcome {
    check_n(n)?;
    let p = build_flt_poly(n, h)?;
    Ok(Report {
        command: "poly",
        params: params(vec![("n", n.into()), ("h", s(h))]),
        result: json!({ "coefficients": to_value(&p), "degree": p.degree() }),
        table: Some(Table {
            headers: vec!["power", "coefficient"],
            rows: p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()])
                .collect(),
        }),
        text: format!("P_{n}(g, {h}) = {p}\n"),
        ok: true,
    })
}

fn roots(n: u32, h: &ExactRational, bits: u32) -> Outcome {
    check_n(n)?;
    let p = build_flt_poly(n, h)?;
    let enclosures = isolate_real_roots(&p)?
        .iter()
        .map(|e| refine(&p, e, bits))
        .collect::<fermat_core::Result<Vec<_>>>()?;
    let rational = rational_root_test(&p)?;
    let positive = enclosures
        .iter()
        .filter(|e| e.interval.lo().is_positive())
        .count();
    // For h > 1 the positive root in g is unique.
    let ok = *h <= 1 || positive == 1;
    let mut text = format!("P_{n}(g, {h}) = {p}\n");
    for e in &enclosures {
        text.push_str(&format!(
            "root in {} (multiplicity {})\n",
            e.interval, e.multiplicity_hint
        ));
    }
    text.push_str(&format!("rational roots: {}\n", join(&rational)));
    Ok(Report {
        command: "roots",
        params: params(vec![
            ("n", n.into()),
            ("h", s(h)),
            ("precision_bits", bits.into()),
        ]),
        result: json!({
            "polynomial": to_value(&p),
            "roots": to_value(&enclosures),
            "positive_roots": positive,
            "rational_roots": to_value(&rational),
        }),
        table: Some(Table {
            headers: vec!["lo", "hi", "exact", "multiplicity_hint"],
            rows: enclosures
                .iter()
                .map(|e| {
                    vec![
                        e.interval.lo().to_string(),
                        e.interval.hi().to_string(),
                        e.is_exact().to_string(),
                        e.multiplicity_hint.to_string(),
                    ]
                })
                .collect(),
        }),
        text,
        ok,
    })
}

fn join(xs: &[ExactRational]) -> String {
    if xs.is_empty() {
        "none".into()
    } else {
        xs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn map(a: ExactRational, b: ExactRational, c: ExactRational, n: u32) -> Outcome {
    check_n(n)?;
    let t = RationalTriple::new(a, b, c);
    let p = to_params(&t)?;
    let r = residual(&p, n)?;
    Ok(Report {
        command: "map",
        params: params(vec![
            ("a", s(&t.a)),
            ("b", s(&t.b)),
            ("c", s(&t.c)),
            ("n", n.into()),
        ]),
        result: json!({ "d": s(&p.d), "g": s(&p.g), "h": s(&p.h), "residual": s(&r) }),
        table: None,
        text: format!("d = {}, g = {}, h = {}\nP_{n}(g, h) = {r}\n", p.d, p.g, p.h),
        ok: true,
    })
}

fn counterpart_cmd(d: ExactRational, g: ExactRational, h: ExactRational) -> Outcome {
    let first = RationalParams::new(d, g, h);
    first.check_admissible()?;
    let second = counterpart(&first)?;
    let pair = CounterpartPair { first, second };
    let equalities = reconstruction_equalities(&pair);
    let ok = check_reconstruction(&pair);
    let reciprocal = pair.reciprocal_relations();
    Ok(Report {
        command: "counterpart",
        params: params(vec![("d", s(&pair.first.d)), ("g", s(&pair.first.g)), ("h", s(&pair.first.h))]),
        result: json!({
            "first": to_value(&pair.first),
            "second": to_value(&pair.second),
            "reconstruction": equalities,
            "reciprocal_relations": reciprocal,
            "consistent": ok,
        }),
        table: None,
        text: format!(
            "first:  d = {}, g = {}, h = {}\nsecond: d = {}, g = {}, h = {}\nreconstruction equalities: {equalities:?}\nreciprocal relations: {reciprocal:?}\n",
            pair.first.d, pair.first.g, pair.first.h, pair.second.d, pair.second.g, pair.second.h
        ),
        ok,
    })
}

fn pythagorean(limit: u64) -> Outcome {
    require(limit >= 5, || format!("limit {limit} < 5"))?;
    let triples = gen_pythagorean(limit)?;
    let mut rows = Vec::with_capacity(triples.len());
    let mut entries = Vec::with_capacity(triples.len());
    let mut ok = true;
    for t in &triples {
        let p = to_params(&t.to_rational())?;
        let law = check_n2_law(t)?;
        ok &= law;
        rows.push(vec![
            t.a.to_string(),
            t.b.to_string(),
            t.c.to_string(),
            t.primitive.to_string(),
            p.g.to_string(),
            p.h.to_string(),
            law.to_string(),
        ]);
        entries.push(json!({
            "a": t.a, "b": t.b, "c": t.c, "primitive": t.primitive,
            "g": s(&p.g), "h": s(&p.h), "law_holds": law,
        }));
    }
    let text = format!(
        "{} triples with c <= {limit}; g = 2(h - 1) holds for all: {ok}\n",
        triples.len()
    );
    Ok(Report {
        command: "pythagorean",
        params: params(vec![("limit", limit.into())]),
        result: json!({ "count": triples.len(), "triples": entries, "all_hold": ok }),
        table: Some(Table {
            headers: vec!["a", "b", "c", "primitive", "g", "h", "law_holds"],
            rows,
        }),
        text,
        ok,
    })
}

fn range_table(ranges: &[fermat_core::search::RangeRecord]) -> Table {
    Table {
        headers: vec!["k_lo", "k_hi", "candidates", "hits"],
        rows: ranges
            .iter()
            .map(|r| {
                vec![
                    r.k_lo.to_string(),
                    r.k_hi.to_string(),
                    r.candidates.to_string(),
                    r.hits.to_string(),
                ]
            })
            .collect(),
    }
}

fn lemma31(bound: u64) -> Outcome {
    require(bound >= 2, || format!("bound {bound} < 2"))?;
    let report = lemma31_search(bound)?;
    let shortcut = lemma31_divisibility_shortcut(bound)?;
    let agrees = shortcut == report.hits;
    let ok = report.hits.is_empty() && report.exhaustive && agrees;
    let mut result = to_value(&report);
    result["shortcut_agrees"] = agrees.into();
    Ok(Report {
        command: "lemma31",
        params: params(vec![("bound", bound.into())]),
        text: format!(
            "{} coprime pairs with k <= {bound}: {} hits, exhaustive = {}, shortcut agrees = {agrees}\n",
            report.candidates,
            report.hits.len(),
            report.exhaustive
        ),
        table: Some(range_table(&report.ranges)),
        result,
        ok,
    })
}

fn special_case(n_min: u32, n_max: u32) -> Outcome {
    check_range(n_min, n_max)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for n in n_min..=n_max {
        let p = special_case_poly(n)?;
        let roots = rational_root_test(&p)?;
        ok &= roots.is_empty();
        text.push_str(&format!("n = {n}: {p}; rational roots: {}\n", join(&roots)));
        rows.push(vec![n.to_string(), p.to_string(), join(&roots)]);
        entries.push(
            json!({ "n": n, "polynomial": to_value(&p), "rational_roots": to_value(&roots) }),
        );
    }
    Ok(Report {
        command: "special-case",
        params: params(vec![("n_min", n_min.into()), ("n_max", n_max.into())]),
        result: json!({ "polynomials": entries }),
        table: Some(Table {
            headers: vec!["n", "polynomial", "rational_roots"],
            rows,
        }),
        text,
        ok,
    })
}

fn scan(n: u32, height_bound: u64) -> Outcome {
    check_n(n)?;
    require(height_bound >= 2, || {
        format!("height bound {height_bound} < 2")
    })?;
    let report = rational_solution_search(n, height_bound)?;
    let one = ExactRational::one();
    let ok = report.exhaustive
        && if n == 2 {
            report.hits.len() as u64 == report.candidates
                && report
                    .hits
                    .iter()
                    .all(|hit| hit.g == (&hit.h - &one) * ExactRational::from(2))
        } else {
            report.hits.is_empty()
        };
    let mut text = format!(
        "n = {n}, height <= {height_bound}: {} values of h, {} rational hits, exhaustive = {}\n",
        report.candidates,
        report.hits.len(),
        report.exhaustive
    );
    for hit in report.hits.iter().take(20) {
        text.push_str(&format!("h = {}, g = {}\n", hit.h, hit.g));
    }
    if report.hits.len() > 20 {
        text.push_str("...\n");
    }
    Ok(Report {
        command: "scan",
        params: params(vec![("n", n.into()), ("height_bound", height_bound.into())]),
        table: Some(Table {
            headers: vec!["h", "g"],
            rows: report
                .hits
                .iter()
                .map(|h| vec![h.h.to_string(), h.g.to_string()])
                .collect(),
        }),
        result: to_value(&report),
        text,
        ok,
    })
}

fn identities(n_min: u32, n_max: u32) -> Outcome {
    check_range(n_min, n_max)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in n_min..=n_max {
        let expansion = verify_expansion_identity(n)?;
        let reduction = verify_reduction_identity(n)?;
        let operator = operator_step(n).is_ok();
        let tm = term_match_report(n)?;
        let duality = verify_duality(n)?;
        let status = match &duality {
            DualityOutcome::Identity => "identity",
            DualityOutcome::Cofactor { .. } => "cofactor",
            DualityOutcome::Mismatch { .. } => "mismatch",
        };
        // Term match is expected only for the quadratic case.
        ok &=
            expansion && reduction && operator && tm.all_match == (n == 2) && duality.is_identity();
        rows.push(vec![
            n.to_string(),
            expansion.to_string(),
            reduction.to_string(),
            operator.to_string(),
            tm.all_match.to_string(),
            status.to_string(),
        ]);
        entries.push(json!({
            "n": n,
            "expansion": expansion,
            "reduction": reduction,
            "operator_step": operator,
            "term_match": to_value(&tm),
            "duality": to_value(&duality),
        }));
    }
    let text = rows
        .iter()
        .map(|r| {
            format!(
                "n = {}: expansion {}, reduction {}, operator step {}, term match {}, duality {}\n",
                r[0], r[1], r[2], r[3], r[4], r[5]
            )
        })
        .collect();
    Ok(Report {
        command: "identities",
        params: params(vec![("n_min", n_min.into()), ("n_max", n_max.into())]),
        result: json!({ "exponents": entries }),
        table: Some(Table {
            headers: vec![
                "n",
                "expansion",
                "reduction",
                "operator_step",
                "term_match",
                "duality",
            ],
            rows,
        }),
        text,
        ok,
    })
}

fn audit(n: u32, h1: Vec<ExactRational>, bits: u32) -> Outcome {
    check_n(n)?;
    for h in &h1 {
        require(*h > 1, || format!("h1 = {h}, need h1 > 1"))?;
    }
    let single = h1.len() == 1;
    let samples = if h1.is_empty() { default_samples() } else { h1 };
    let sample_params: Vec<Value> = samples.iter().map(s).collect();
    let params = params(vec![
        ("n", n.into()),
        ("h1", sample_params.into()),
        ("precision_bits", bits.into()),
    ]);
    let reports = if single {
        vec![counterpart_existence_audit(n, &samples[0], bits)?]
    } else {
        claim_comparison(n, &samples, bits)?.samples
    };
    let ok = reports
        .iter()
        .all(|r| r.counterpart_found && r.fermat_residual.contains_zero());
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.h1.to_string(),
                r.g1.interval.lo().to_string(),
                r.g1.interval.hi().to_string(),
                r.g2.to_string(),
                r.h2.lo().to_string(),
                r.h2.hi().to_string(),
                r.counterpart_found.to_string(),
                r.fermat_residual.contains_zero().to_string(),
                r.syntactic_match.to_string(),
            ]
        })
        .collect();
    let text = reports.iter().map(|r| r.render_text()).collect();
    let result = if single {
        to_value(&reports[0])
    } else {
        json!({
            "n": n,
            "precision_bits": bits,
            "syntactic_match": reports.first().map(|r| r.syntactic_match),
            "samples": to_value(&reports),
        })
    };
    Ok(Report {
        command: "audit",
        params,
        result,
        table: Some(Table {
            headers: vec![
                "h1",
                "g1_lo",
                "g1_hi",
                "g2",
                "h2_lo",
                "h2_hi",
                "counterpart_found",
                "fermat_residual_contains_zero",
                "syntactic_match",
            ],
            rows,
        }),
        text,
        ok,
    })
}

fn dispatch(command: Command, bits: u32) -> Outcome {
    match command {
        Command::Poly { n, h } => poly(n, &h),
        Command::Roots { n, h } => roots(n, &h, bits),
        Command::Map { a, b, c, n } => map(a, b, c, n),
        Command::Counterpart { d, g, h } => counterpart_cmd(d, g, h),
        Command::Pythagorean { limit } => pythagorean(limit),
        Command::Lemma31 { bound } => lemma31(bound),
        Command::SpecialCase { n_min, n_max } => special_case(n_min, n_max),
        Command::Scan { n, height_bound } => scan(n, height_bound),
        Command::Identities { n_min, n_max } => identities(n_min, n_max),
        Command::Audit { n, h1 } => audit(n, h1, bits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.precision_bits == 0 || cli.precision_bits > MAX_PRECISION_BITS {
        eprintln!(
            "error: precision bits {} outside 1..={MAX_PRECISION_BITS}",
            cli.precision_bits
        );
        return ExitCode::from(2);
    }
    match dispatch(cli.command, cli.precision_bits) {
        Ok(mut report) => {
            report
                .params
                .insert("output_format".into(), to_value(&cli.output_format));
            report
                .params
                .entry("precision_bits")
                .or_insert(cli.precision_bits.into());
            if let Err(e) = report.write_to(cli.output_format, cli.output_path.as_deref()) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("fermat {}: expectation violated", report.command);
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violated(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
