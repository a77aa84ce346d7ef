//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

// `!(a > b)` is deliberate: a NaN measurement must fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cunningham::certify::{brauer_check, Certificate};
use cunningham::chains::{
    self, auxiliary_f, closed_form_term, infinite_seed, min_root_modulus, product_formula_kind1,
    proof_gadget_g, ChainKind, FamilyParams,
};
use cunningham::conjecture::{conjecture_params, conjecture_scan};
use cunningham::factorize::{is_binomial_product, split_reciprocal_parts, two_part_split_check};
use cunningham::intchains::{int_chain_length, search_int_chains, MillerRabin};
use cunningham::{decide_irreducible, factor_over_rationals, Polynomial, Quadrinomial, Rational};
use cunningham_cli::report::RunReport;
use cunningham_cli::{format_polynomial, parse_polynomial, run};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, check and time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn kind1_grid() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for m in 2..=5 {
        for k in 1..=4 {
            out.push(FamilyParams::new(ChainKind::First, m, k).unwrap());
        }
    }
    out
}

fn kind2_grid() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for m in 2u64..=5 {
        for k in 1..=4.min(m * m - 2) {
            out.push(FamilyParams::new(ChainKind::Second, m, k).unwrap());
        }
    }
    out
}

fn x_minus_one() -> Polynomial {
    Polynomial::from_i64(&[-1, 1])
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    max_degree: usize,
    bound: i64,
    nonzero_constant: bool,
) -> Polynomial {
    let d = rng.gen_range(1..=max_degree);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[d] == 0 {
        c[d] = rng.gen_range(-bound..=bound);
    }
    while nonzero_constant && c[0] == 0 {
        c[0] = rng.gen_range(-bound..=bound);
    }
    Polynomial::from_i64(&c)
}

fn witness_text(v: &cunningham::IrreducibilityVerdict) -> String {
    v.witness()
        .map(|w| {
            w.factors
                .iter()
                .map(|(g, _)| format!("({g})"))
                .collect::<Vec<_>>()
                .join("")
        })
        .unwrap_or_default()
}

/// Every deviation from "reducible exactly at k + 1" across the grid.
fn family_pattern(grid: &[FamilyParams]) -> Vec<String> {
    let mut problems = Vec::new();
    for p in grid {
        let through = p.k() as usize + 6;
        let r = match chains::family_report(p, through) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("m={} k={}: {e}", p.m(), p.k()));
                continue;
            }
        };
        if !r.verify() {
            problems.push(format!(
                "m={} k={}: report failed re-verification",
                p.m(),
                p.k()
            ));
        }
        for e in &r.entries {
            if e.verdict.is_reducible() != (e.index == p.reducible_index()) {
                problems.push(format!(
                    "m={} k={}: f_{} = {} is {} {}",
                    p.m(),
                    p.k(),
                    e.index,
                    e.poly,
                    e.verdict.status(),
                    witness_text(&e.verdict)
                ));
            }
        }
    }
    problems
}

fn verdict_line(problems: Vec<String>, ok: String) -> Outcome {
    match problems.is_empty() {
        true => Ok(ok),
        false => Err(problems.join("; ")),
    }
}

fn criterion_1() -> Outcome {
    let grid = kind1_grid();
    let mut problems = family_pattern(&grid);
    for p in &grid {
        let f = closed_form_term(p, p.reducible_index()).unwrap();
        let (a, b) = product_formula_kind1(p.m(), p.k()).unwrap();
        if &a * &b != f {
            problems.push(format!(
                "m={} k={}: product formula does not multiply back",
                p.m(),
                p.k()
            ));
        }
        let fact = match factor_over_rationals(&f) {
            Ok(fact) => fact,
            Err(e) => {
                problems.push(format!("m={} k={}: {e}", p.m(), p.k()));
                continue;
            }
        };
        let mut want = vec![(a, 1), (b, 1)];
        want.sort();
        if !(fact.sign == 1 && fact.content.is_one() && fact.factors == want) {
            let got: Vec<String> = fact.factors.iter().map(|(g, _)| format!("({g})")).collect();
            problems.push(format!(
                "m={} k={}: f_{} factors as {}, not ({})({})",
                p.m(),
                p.k(),
                p.reducible_index(),
                got.join(""),
                want[0].0,
                want[1].0
            ));
        }
    }
    verdict_line(problems, format!("{} (m, k) pairs", grid.len()))
}

fn criterion_2() -> Outcome {
    let grid = kind2_grid();
    let mut problems = family_pattern(&grid);
    for p in &grid {
        let f = closed_form_term(p, p.reducible_index()).unwrap();
        if !f.eval_at(&Rational::one()).is_zero() {
            problems.push(format!("m={} k={}: f_(k+1)(1) != 0", p.m(), p.k()));
        }
    }
    verdict_line(problems, format!("{} (m, k) pairs", grid.len()))
}

fn criterion_3() -> Outcome {
    let mut problems = Vec::new();
    let restarts = kind1_grid()
        .into_iter()
        .chain(kind2_grid())
        .collect::<Vec<_>>();
    for p in &restarts {
        // g_1 = f_(k+2) and 12 further steps
        match chains::restart_report(p, 13) {
            Ok(r) => {
                for e in r.entries.iter().filter(|e| e.verdict.is_reducible()) {
                    problems.push(format!(
                        "kind {} m={} k={}: g_{} = {} is reducible {}",
                        p.kind(),
                        p.m(),
                        p.k(),
                        e.index,
                        e.poly,
                        witness_text(&e.verdict)
                    ));
                }
            }
            Err(e) => problems.push(format!("{p:?}: {e}")),
        }
    }
    for prime in [2, 3, 5, 7] {
        let seed = infinite_seed(ChainKind::First, prime).unwrap();
        let r = chains::chain_report(&seed, ChainKind::First, 26).map_err(|e| e.to_string())?;
        if !r.reducible_indices().is_empty() {
            problems.push(format!(
                "{prime}x + 1: reducible at {:?}",
                r.reducible_indices()
            ));
        }
    }
    for c in [1, 2, 3] {
        let seed = infinite_seed(ChainKind::Second, c).unwrap();
        let r = chains::chain_report(&seed, ChainKind::Second, 26).map_err(|e| e.to_string())?;
        if !r.reducible_indices().is_empty() {
            problems.push(format!("x - {c}: reducible at {:?}", r.reducible_indices()));
        }
        for e in r.entries.iter().filter(|e| e.index >= 2) {
            if !(brauer_check(&e.poly) && Certificate::Brauer.verify(&e.poly)) {
                problems.push(format!("x - {c}: term {} not certified by Brauer", e.index));
            }
        }
    }
    verdict_line(
        problems,
        format!(
            "{} restarts, 7 infinite seeds through 26 terms",
            restarts.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut reducible = 0;
    for _ in 0..500 {
        let f = random_poly(&mut rng, 12, 9, true);
        let a = decide_irreducible(&f).map_err(|e| e.to_string())?;
        let b = decide_irreducible(&f.reciprocal().unwrap()).map_err(|e| e.to_string())?;
        ensure!(
            a.is_irreducible() == b.is_irreducible(),
            "verdicts differ for {f}"
        );
        reducible += a.is_reducible() as usize;
    }
    Ok(format!(
        "500 polynomials, {reducible} reducible, 0 violations"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..200 {
        let count = rng.gen_range(2..=3);
        let mut parts = Vec::new();
        while parts.len() < count {
            let g = random_poly(&mut rng, 8, 9, false).primitive_part();
            let g = if g.leading_coeff().unwrap() < &BigInt::zero() {
                -g
            } else {
                g
            };
            if decide_irreducible(&g)
                .map_err(|e| e.to_string())?
                .is_irreducible()
            {
                parts.push(g);
            }
        }
        let product: Polynomial = parts.iter().product();
        let mut want: BTreeMap<Polynomial, u32> = BTreeMap::new();
        for g in parts {
            *want.entry(g).or_default() += 1;
        }
        let fact = factor_over_rationals(&product).map_err(|e| e.to_string())?;
        let got: BTreeMap<Polynomial, u32> = fact.factors.iter().cloned().collect();
        ensure!(
            got == want,
            "case {case}: {product} refactored to {:?}",
            fact.factors
        );
        ensure!(
            fact.reconstruct() == product,
            "case {case}: reconstruction differs"
        );
    }
    Ok("200 products".into())
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    for p in kind1_grid().iter().chain(&kind2_grid()) {
        let kind = p.kind();
        for n in 1..=p.k() as usize + 6 {
            let f = closed_form_term(p, n).unwrap();
            let aux = auxiliary_f(p, n).unwrap();
            let mut rhs = &x_minus_one() * &f.reciprocal().unwrap();
            if kind == ChainKind::Second {
                rhs = -rhs;
            }
            ensure!(aux == rhs, "{p:?} n={n}: F_n identity fails");
            if kind == ChainKind::Second {
                ensure!(
                    aux.descartes_sign_changes().unwrap() == 2,
                    "{p:?} n={n}: sign changes"
                );
            }
            if kind == ChainKind::First && n != p.reducible_index() {
                let split = split_reciprocal_parts(&aux).unwrap();
                ensure!(
                    split.nonreciprocal_part == f.reciprocal().unwrap(),
                    "{p:?} n={n}: nonreciprocal part"
                );
            }
            // the second-kind F_1 has only three terms
            if aux.term_count() == 4 {
                let q = Quadrinomial::from_polynomial(&aux).unwrap();
                ensure!(
                    is_binomial_product(&q).is_none(),
                    "{p:?} n={n}: binomial product"
                );
                if n != p.reducible_index() {
                    let splits = two_part_split_check(&q);
                    ensure!(
                        splits.iter().all(|s| !s.has_nonreciprocal_common_factor()),
                        "{p:?} n={n}: split shares a nonreciprocal factor"
                    );
                }
            }
            checks += 1;
        }
        if kind == ChainKind::Second {
            let g = proof_gadget_g(p.m(), p.k()).unwrap();
            let c = g.coeffs();
            ensure!(c[0] == c[2], "{p:?}: gadget not palindromic");
            let disc = &c[1] * &c[1] - BigInt::from(4) * &c[0] * &c[2];
            ensure!(disc > BigInt::zero(), "{p:?}: gadget discriminant");
            let roots = chains::find_roots(&g, 1e-12)
                .map_err(|e| e.to_string())?
                .roots;
            let prod = roots[0] * roots[1];
            ensure!(
                (prod.re - 1.0).abs() < 1e-9 && prod.im.abs() < 1e-9,
                "{p:?}: root product {prod}"
            );
            ensure!(
                roots.iter().all(|z| z.re > 0.0 && z.im.abs() < 1e-9),
                "{p:?}: roots not positive real"
            );
        }
    }
    let mut min_seen = f64::INFINITY;
    for m in [2, 3] {
        for k in [1, 2] {
            let p = FamilyParams::new(ChainKind::First, m, k).unwrap();
            for n in (1..=6).filter(|&n| n != p.reducible_index()) {
                let r = closed_form_term(&p, n).unwrap().reciprocal().unwrap();
                let rep = min_root_modulus(&r, 1e-12).map_err(|e| e.to_string())?;
                ensure!(
                    rep.min_modulus > 1.0 + chains::UNIT_CIRCLE_MARGIN,
                    "m={m} k={k} n={n}: min |z| = {}",
                    rep.min_modulus
                );
                min_seen = min_seen.min(rep.min_modulus);
            }
        }
    }
    Ok(format!(
        "{checks} F_n checks, smallest root modulus {min_seen:.6}"
    ))
}

fn criterion_7() -> Outcome {
    let x_plus_2 = Polynomial::from_i64(&[2, 1]);
    for k in 1..=4 {
        let scan = conjecture_scan(k, 8).map_err(|e| e.to_string())?;
        let t = conjecture_params(k).unwrap().t;
        ensure!(
            scan.reducible_js() == vec![t],
            "k={k}: reducible at {:?}",
            scan.reducible_js()
        );
        let at_t = scan.entries.iter().find(|e| e.j == t).unwrap();
        let witness = at_t.verdict.witness().unwrap();
        ensure!(
            witness.factors.iter().any(|(g, _)| g == &x_plus_2),
            "k={k}: no x + 2 factor"
        );
        let out = run([
            "cunningham",
            "conjecture",
            "-k",
            &k.to_string(),
            "--format",
            "json",
        ]);
        ensure!(out.code == 0, "k={k}: CLI exit {}", out.code);
    }
    Ok("k = 1..4, window t-k..t+8".into())
}

fn criterion_8() -> Outcome {
    let big = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let cases = [
        (2u64, ChainKind::First, 5usize),
        (2, ChainKind::Second, 3),
        (89, ChainKind::First, 6),
    ];
    for (p, kind, len) in cases {
        let c = int_chain_length(&p.into(), kind).map_err(|e| e.to_string())?;
        ensure!(c.length() == len, "({p}, {kind:?}): length {}", c.length());
    }
    let mr = MillerRabin::default();
    let started = Instant::now();
    let found = search_int_chains(4, ChainKind::First, 10_000).map_err(|e| e.to_string())?;
    ensure!(
        found
            .iter()
            .any(|c| c.primes == big(&[509, 1019, 2039, 4079])),
        "509 missing"
    );
    ensure!(
        found.iter().all(|c| c.revalidate(&mr)),
        "revalidation failed at 10^4"
    );
    ensure!(
        started.elapsed() < Duration::from_secs(60),
        "bound 10^4 too slow"
    );
    let started = Instant::now();
    let large = search_int_chains(4, ChainKind::First, 1_000_000).map_err(|e| e.to_string())?;
    ensure!(
        large.iter().all(|c| c.revalidate(&mr)),
        "revalidation failed at 10^6"
    );
    let secs = started.elapsed().as_secs_f64();
    ensure!(secs <= 120.0, "bound 10^6 took {secs:.1}s");
    Ok(format!(
        "{} chains below 10^4, {} below 10^6 ({secs:.2}s)",
        found.len(),
        large.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let d = rng.gen_range(0..=15);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-99..=99)).collect();
        let f = Polynomial::from_i64(&c);
        let text = format_polynomial(&f);
        ensure!(
            parse_polynomial(&text).as_ref() == Ok(&f),
            "round trip failed for {text}"
        );
    }

    let out = run([
        "cunningham",
        "family",
        "--kind",
        "1",
        "-m",
        "2",
        "-k",
        "1",
        "--through",
        "5",
        "--format",
        "json",
    ]);
    ensure!(out.code == 0, "family json exit {}", out.code);
    let report: RunReport = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let reducible: Vec<usize> = report
        .entries
        .iter()
        .filter(|e| e.status == "reducible")
        .map(|e| e.i)
        .collect();
    ensure!(
        reducible == vec![2] && report.entries.len() == 5,
        "family json reducible at {reducible:?}"
    );

    let out = run([
        "cunningham",
        "factor",
        "4x^5+2x^4+2x^3+2x^2+x+1",
        "--format",
        "json",
    ]);
    ensure!(out.code == 0, "factor exit {}", out.code);
    let report: RunReport = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let factors = report.entries[0]
        .witness_factors
        .clone()
        .unwrap_or_default();
    ensure!(
        factors == ["2x^2 + x + 1", "2x^3 + 1"],
        "factor output {factors:?}"
    );

    let out = run([
        "cunningham",
        "family",
        "--kind",
        "2",
        "-m",
        "2",
        "-k",
        "3",
        "--through",
        "5",
    ]);
    ensure!(out.code == 2, "invalid family exit {}", out.code);
    Ok("200 round trips, 3 invocations".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("first-kind family grid", criterion_1, 300),
        ("second-kind family grid", criterion_2, 180),
        ("restarts and infinite seeds", criterion_3, 300),
        ("reciprocal preserves irreducibility", criterion_4, 300),
        ("factorizer oracle", criterion_5, 120),
        ("proof gadgets", criterion_6, 300),
        ("conjecture scan", criterion_7, 240),
        ("integer chains", criterion_8, 180),
        ("cli round trip and invocations", criterion_9, 300),
    ];
    let mut failed = 0;
    for (n, (name, check, budget)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = started.elapsed().as_secs_f64();
        let result = result.and_then(|msg| match secs <= *budget as f64 {
            true => Ok(msg),
            false => Err(format!("took {secs:.1}s, budget {budget}s")),
        });
        match result {
            Ok(msg) => println!("PASS  criterion {}: {name} ({msg}; {secs:.2}s)", n + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {msg}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
