//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
//! failure. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mckay_core::census::{odd_irr_count, semisimple_class_census, ClassCensus};
use mckay_core::group::{sp2n_generators, sp2n_order, ConcreteGroup, MatrixOps};
use mckay_core::sp4::{analyze_e, weyl_fixed_classes, weyl_fixed_irr, WeylConvention};
use mckay_core::sylow::{
    abelianization_order, brute_commutator_order, brute_u_order, brute_v_abelianization_order, embedded_u,
    theta_image_span, v_abelianization_order,
};
use mckay_core::symbol::{
    degree_2_valuation, denominator_exponent, enumerate_symbols, odd_degree_symbols, reference_odd_symbols,
    symbol_count,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn peak_rss_mib() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kib: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kib / 1024)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 2..=12u64 {
        let all = enumerate_symbols(n);
        ensure(all.len() as u64 == symbol_count(n), || format!("n={n}: {} symbols", all.len()))?;
        let odd = odd_degree_symbols(n).map_err(|e| e.to_string())?;
        ensure(odd.len() == 5, || format!("n={n}: {} odd symbols", odd.len()))?;
        ensure(odd == reference_odd_symbols(n).unwrap(), || format!("n={n}: odd set differs"))?;
    }
    ensure(enumerate_symbols(2).len() == 6 && enumerate_symbols(3).len() == 12, || "small counts".into())?;
    within(start, Duration::from_secs(5), "classification")?;
    Ok(format!("n=2..12 each give exactly the five odd symbols ({:?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    for m in (3..=99i64).step_by(2) {
        let sum: i64 = (1..=(m - 1) / 2).map(|i| i * (2 * m - 4 * i - 1)).sum();
        let lhs = sum - denominator_exponent(m as u64).map_err(|e| e.to_string())? as i64;
        ensure(lhs == (m - 1) * (m - 3) / 4, || format!("M={m}: {lhs}"))?;
    }
    let mut checked = 0;
    for n in 1..=12 {
        for sym in enumerate_symbols(n) {
            if sym.entry_count() > 3 {
                let v = degree_2_valuation(&sym).valuation;
                ensure(v > 0, || format!("{sym} has valuation {v}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("identity for odd M <= 99; {checked} symbols with M > 3 have positive valuation"))
}

fn criterion_3() -> Outcome {
    for n in 2..=12 {
        let enumerated = semisimple_class_census(n).map_err(|e| e.to_string())?;
        let closed = ClassCensus::closed_form(n).unwrap();
        ensure(enumerated.same_counts(&closed), || format!("n={n}: census paths differ"))?;
        ensure(enumerated.total() == 1 << n, || format!("n={n}: {} classes", enumerated.total()))?;
    }
    for n in 2..=16 {
        let c = odd_irr_count(n).unwrap();
        ensure(c == 1 << (n + 1), || format!("n={n}: {c} odd characters"))?;
    }
    Ok("census paths agree for n=2..12, odd count 2^(n+1) for n=2..16".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let g = ConcreteGroup::generate(MatrixOps { dim: 4 }, sp2n_generators(2), 1000).map_err(|e| e.to_string())?;
    ensure(g.order() == 720, || format!("order {}", g.order()))?;
    let degrees = g.dixon_degrees().map_err(|e| e.to_string())?;
    ensure(degrees == [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16], || format!("degrees {degrees:?}"))?;
    let odd = degrees.iter().filter(|d| *d % 2 == 1).count() as u64;
    ensure(odd == 8 && odd == odd_irr_count(2).unwrap(), || format!("{odd} odd degrees"))?;
    ensure(odd == abelianization_order(2).unwrap(), || "Sylow linear characters differ".into())?;
    within(start, Duration::from_secs(30), "Sp4(2) Dixon")?;
    Ok(format!("Sp4(2) degrees match, 8 odd ({:?})", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for n in 2..=12 {
        let span = theta_image_span(n).map_err(|e| e.to_string())?;
        ensure(span.codim == 2, || format!("n={n}: codim {}", span.codim))?;
    }
    for n in 2..=4usize {
        let u = brute_u_order(n).map_err(|e| e.to_string())?;
        let d = brute_commutator_order(n).map_err(|e| e.to_string())?;
        ensure(u == 1 << (n * n), || format!("n={n}: |U| = {u}"))?;
        ensure(u / d == 1 << (n + 1), || format!("n={n}: |U|/|[U,U]| = {}", u / d))?;
        ensure(u / d == abelianization_order(n).unwrap(), || format!("n={n}: span path differs"))?;
    }
    for n in 2..=5 {
        let b = brute_v_abelianization_order(n).map_err(|e| e.to_string())?;
        ensure(b == v_abelianization_order(n).unwrap(), || format!("n={n}: |V^ab| = {b}"))?;
    }
    within(start, Duration::from_secs(60), "Sylow checks")?;
    Ok(format!("codim 2 for n=2..12, closures agree for n=2..4, V for n<=5 ({:?})", start.elapsed()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let g4 = ConcreteGroup::generate(MatrixOps { dim: 4 }, sp2n_generators(2), 1000).map_err(|e| e.to_string())?;
    let n4 = g4.normalizer(&embedded_u(2).unwrap()).map_err(|e| e.to_string())?;
    ensure(n4.len() == 16, || format!("Sp4(2): |N(U)| = {}", n4.len()))?;
    within(start, Duration::from_secs(5), "Sp4(2) normalizer")?;
    let t4 = start.elapsed();

    let start = Instant::now();
    let g6 = ConcreteGroup::generate(MatrixOps { dim: 6 }, sp2n_generators(3), 2_000_000)
        .map_err(|e| e.to_string())?;
    ensure(g6.order() as u128 == sp2n_order(3), || format!("Sp6(2) order {}", g6.order()))?;
    let n6 = g6.normalizer(&embedded_u(3).unwrap()).map_err(|e| e.to_string())?;
    ensure(n6.len() == 512, || format!("Sp6(2): |N(U)| = {}", n6.len()))?;
    within(start, Duration::from_secs(600), "Sp6(2) normalizer")?;
    let rss = peak_rss_mib();
    if let Some(mib) = rss {
        ensure(mib < 1024, || format!("peak memory {mib} MiB"))?;
    }
    let rss = rss.map_or_else(|| "unknown".to_string(), |m| format!("{m} MiB"));
    Ok(format!("N(U) = U in Sp4(2) ({t4:?}) and Sp6(2) ({:?}, peak {rss})", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let conv = WeylConvention::standard();
    for q in [4u64, 8, 16] {
        for e in [1u32, 2, 4] {
            let a = analyze_e(&conv, q, e, 1..=4).map_err(|x| x.to_string())?;
            let tag = format!("q={q} e={e}");
            let product = a.invariant_factors[0] * a.invariant_factors[1];
            ensure(product == a.expected_torus_order, || format!("{tag}: torus {product}"))?;
            ensure(a.predicted_irr == a.class_count, || format!("{tag}: census {}", a.predicted_irr))?;
            let d = a.dixon.as_ref().ok_or_else(|| format!("{tag}: Dixon skipped"))?;
            ensure(d.degrees.len() as u64 == a.class_count, || format!("{tag}: Dixon count"))?;
            ensure(d.sum_of_squares == a.local_order, || format!("{tag}: sum of squares"))?;
            ensure(a.stabilizer_dichotomy, || format!("{tag}: stabilizer dichotomy"))?;
            for row in &a.fixed {
                ensure(row.brauer == row.predicted, || format!("{tag} a={}: {row:?}", row.a))?;
            }
            if (q, e) == (4, 4) {
                ensure(a.local_order == 68, || "(4,4) order".into())?;
                ensure(d.degrees == [1, 1, 1, 1, 4, 4, 4, 4], || "(4,4) degrees".into())?;
                ensure(a.fixed.iter().all(|r| r.a % 2 == 0 || r.brauer == 4), || "(4,4) odd a".into())?;
            }
            if (q, e) == (4, 1) {
                ensure(a.local_order == 72 && a.class_count == 9, || "(4,1) order or Irr".into())?;
                let want = |a: u32| if a % 2 == 1 { 3 } else { 9 };
                ensure(a.fixed.iter().all(|r| r.brauer == want(r.a)), || "(4,1) fixed".into())?;
            }
        }
    }
    for (e, a, want) in [(1, 1, 3), (2, 2, 5), (4, 1, 4)] {
        let w = weyl_fixed_irr(e, a).unwrap();
        ensure(w == want, || format!("weyl_fixed_irr({e},{a}) = {w}"))?;
        ensure(weyl_fixed_classes(&conv, e, a).unwrap() == want, || format!("W_e classes ({e},{a})"))?;
    }
    Ok("q=4,8,16: torus, census, Dixon and Brauer counts agree; pins hold".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut all_pass = true;
    for (k, f) in criteria {
        match f() {
            Ok(msg) => println!("criterion {k}: PASS: {msg}"),
            Err(msg) => {
                all_pass = false;
                println!("criterion {k}: FAIL: {msg}");
            }
        }
    }
    // The excluded global-side items are covered by the local agreement
    // suites in criteria 4 to 7.
    if all_pass {
        println!("criterion 8: PASS: replacement suites (criteria 4-7) pass in full");
        ExitCode::SUCCESS
    } else {
        println!("criterion 8: FAIL: a replacement suite failed");
        ExitCode::FAILURE
    }
}
