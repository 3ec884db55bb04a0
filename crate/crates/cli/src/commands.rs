use std::collections::HashSet;

use mckay_core::census::{census_rows, odd_irr_count, odd_irr_count_from, semisimple_class_census, ClassCensus};
use mckay_core::group::{odd_order_charpoly_buckets, sp2n_generators, sp2n_order, ConcreteGroup, MatrixOps};
use mckay_core::sp4::{
    self, weyl_fixed_classes, weyl_irr_count, unipotent_side_summary, WeylConvention,
};
use mckay_core::symbol::{enumerate_symbols, odd_degree_symbols, reference_odd_symbols, symbol_count};
use mckay_core::sylow::{
    abelianization_order, brute_commutator_order, brute_u_order, brute_v_abelianization_order,
    embedded_u, quotient_action_is_trivial, theta_image_span, v_abelianization_order, BRUTE_U_LIMIT,
    BRUTE_V_LIMIT,
};
use mckay_core::Error;
use rayon::prelude::*;

use crate::report::{Report, Table};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Highest `n` accepted for enumeration in `count`.
pub const COUNT_ENUMERATION_MAX: u64 = 12;
/// Highest `n` accepted by `count` and `sylow` (so that `2^{n+1}` fits in 64 bits).
pub const RANK_MAX: u64 = 62;
/// Approximate heap cost of one stored 6 × 6 matrix in a closure.
const BYTES_PER_ELEMENT: usize = 160;
pub const DEFAULT_MEM_CAP_MB: usize = 1024;

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn prop1(max_n: u64) -> CliResult<Report> {
    let mut report = Report::new("prop1");
    report.param("max_n", max_n);
    let per_n: Vec<_> = (2..=max_n)
        .into_par_iter()
        .map(|n| -> CliResult<Report> {
            let mut r = Report::new("prop1");
            r.check("symbol count", symbol_count(n), enumerate_symbols(n).len());
            let odd = odd_degree_symbols(n)?;
            r.check("odd-degree symbol count", 5, odd.len());
            r.check("odd-degree symbols", join(reference_odd_symbols(n)?), join(&odd));
            Ok(r)
        })
        .collect();
    for (n, r) in (2..=max_n).zip(per_n) {
        report.absorb(&format!("n={n}"), r?);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CountMode {
    Enumerate,
    Formula,
}

pub fn count(n: u64, mode: CountMode) -> CliResult<Report> {
    if !(2..=RANK_MAX).contains(&n) {
        return Err(usage(format!("--n must lie in 2..={RANK_MAX}")));
    }
    if mode == CountMode::Enumerate && n > COUNT_ENUMERATION_MAX {
        return Err(usage(format!("enumerate mode requires --n <= {COUNT_ENUMERATION_MAX}")));
    }
    let mut report = Report::new("count");
    report.param("n", n);
    report.param("mode", if mode == CountMode::Enumerate { "enumerate" } else { "formula" });
    let closed = ClassCensus::closed_form(n)?;
    let census = match mode {
        CountMode::Enumerate => {
            let c = semisimple_class_census(n)?;
            report.check_flag("enumerated census equals closed form", c.same_counts(&closed));
            c
        }
        CountMode::Formula => closed,
    };
    let rows = census_rows(&census);
    for row in &rows {
        report.value(&format!("m={} classes", row.m), row.class_count);
    }
    report.check("semisimple class count", 1u64 << n, census.total());
    report.check("odd-degree characters", 1u64 << (n + 1), odd_irr_count_from(&census));
    report.table = Some(Table {
        header: ["m", "class_count", "odd_unipotent_count", "contribution"].map(String::from).to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                [r.m, r.class_count, r.odd_unipotent_count, r.contribution].map(|x| x.to_string()).to_vec()
            })
            .collect(),
    });
    Ok(report)
}

pub fn sylow(n: u64, brute: bool) -> CliResult<Report> {
    if !(2..=RANK_MAX).contains(&n) {
        return Err(usage(format!("--n must lie in 2..={RANK_MAX}")));
    }
    if brute && n > BRUTE_U_LIMIT as u64 {
        return Err(usage(format!("--brute requires --n <= {BRUTE_U_LIMIT}")));
    }
    let mut report = Report::new("sylow");
    report.param("n", n);
    report.param("brute", brute);
    let nu = n as usize;
    let span = theta_image_span(nu)?;
    let sym_dim = nu * (nu + 1) / 2;
    report.check("dim Sym_n", sym_dim, span.sym_dim);
    report.check("dim S'", sym_dim - 2, span.span_dim);
    report.check("codim S'", 2, span.codim);
    report.check_flag("V acts trivially on Sym_n/S'", quotient_action_is_trivial(&span));
    let ab = abelianization_order(nu)?;
    report.check("|U/[U,U]|", 1u64 << (n + 1), ab);
    report.check("linear characters of U = odd-degree characters", odd_irr_count(n)?, ab);
    if brute {
        let u = brute_u_order(nu)?;
        report.check("|U|", 1u64 << (n * n), u);
        let derived = brute_commutator_order(nu)?;
        report.value("|[U,U]|", derived);
        report.check("|U|/|[U,U]| by closure", ab, u / derived);
        if nu <= BRUTE_V_LIMIT {
            report.check(
                "|V/[V,V]| by closure",
                v_abelianization_order(nu)?,
                brute_v_abelianization_order(nu)?,
            );
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleTarget {
    Sp4f2,
    Sp6f2,
}

pub fn oracle(target: OracleTarget, confirm_sp6: bool, mem_cap_mb: usize) -> CliResult<Report> {
    let n = match target {
        OracleTarget::Sp4f2 => 2usize,
        OracleTarget::Sp6f2 => {
            if !confirm_sp6 {
                return Err(usage(
                    "sp6f2 closes 1451520 matrices (about 200 MiB, several seconds); pass --confirm-sp6",
                ));
            }
            3
        }
    };
    let mut report = Report::new("oracle");
    report.param("target", if n == 2 { "sp4f2" } else { "sp6f2" });
    let cap = mem_cap_mb.saturating_mul(1 << 20) / BYTES_PER_ELEMENT;
    let g = ConcreteGroup::generate(MatrixOps { dim: 2 * n }, sp2n_generators(n), cap)?;
    report.check("group order", sp2n_order(n as u32), g.order());
    let u: HashSet<_> = embedded_u(n)?;
    report.check("|U|", 1u64 << (n * n), u.len());
    report.check("|N_G(U)| = |U|", u.len(), g.normalizer(&u)?.len());
    let buckets = odd_order_charpoly_buckets(&g);
    report.check(
        "characteristic polynomials of odd-order elements",
        ClassCensus::closed_form(n as u64)?.total(),
        buckets.len(),
    );
    if n == 2 {
        let classes = g.conjugacy_classes()?;
        let degrees = g.dixon_degrees()?;
        report.value("degrees", join(&degrees));
        report.check("Dixon degree count = class count", classes.len(), degrees.len());
        report.check("sum of squared degrees", g.order(), degrees.iter().map(|d| d * d).sum::<u64>());
        let odd = degrees.iter().filter(|d| *d % 2 == 1).count() as u64;
        report.check("odd-degree characters (census)", odd_irr_count(2)?, odd);
        report.check("odd-degree characters (|U/[U,U]|)", abelianization_order(2)?, odd);
    }
    Ok(report)
}

/// Odd primes dividing `(q⁴ - 1)(q² - 1)`.
pub fn relevant_primes(q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for mut x in [q - 1, q + 1, q * q + 1] {
        let mut p = 3;
        while x > 1 {
            if p * p > x {
                p = x;
            }
            if x % p == 0 {
                out.push(p);
                while x % p == 0 {
                    x /= p;
                }
            }
            p += 2;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn sp4_one(q: u64, ell: u64) -> CliResult<Report> {
    let mut r = Report::new("sp4");
    let a = sp4::analyze(q, ell)?;
    let e = a.e;
    r.value("e", e);
    r.value("torus", format!("Z/{} x Z/{}", a.invariant_factors[0], a.invariant_factors[1]));
    r.value("|N|", a.local_order);
    r.value("|Irr(N)|", a.class_count);
    r.value(
        "orbits by stabilizer order",
        join(a.orbits.iter().map(|(s, k)| format!("{s}:{k}"))),
    );
    r.value("fixed counts", join(a.fixed.iter().map(|f| format!("a={}:{}", f.a, f.brauer))));
    let w_order = if e == 4 { 4 } else { 8 };
    r.check("torus order", a.expected_torus_order, a.torus_order);
    r.check("|N|", a.expected_torus_order * w_order, a.local_order);
    r.check("|Irr(N)| census = class count", a.predicted_irr, a.class_count);
    match &a.dixon {
        Some(d) => {
            r.value("degrees", join(&d.degrees));
            r.check("Dixon degree count", a.class_count, d.degrees.len());
            r.check("sum of squared degrees", a.local_order, d.sum_of_squares);
        }
        None => r.value("degrees", "skipped (|N| above the Dixon cap)"),
    }
    r.check_flag("stabilizer dichotomy", a.stabilizer_dichotomy);
    let conv = WeylConvention::standard();
    for f in &a.fixed {
        r.check(format!("a={} fixed characters census = Brauer", f.a), f.predicted, f.brauer);
        r.check(
            format!("a={} fixed characters of C_W(w_e)", f.a),
            f.weyl_fixed,
            weyl_fixed_classes(&conv, e, f.a)?,
        );
        let s = unipotent_side_summary(f.a);
        let moved = match e {
            1 => s.e1,
            2 => s.e2,
            _ => s.e4,
        };
        r.check(format!("a={} moved unipotent characters", f.a), moved, weyl_irr_count(e)? - f.weyl_fixed);
    }
    Ok(r)
}

pub fn sp4(q: u64, ell: Option<u64>) -> CliResult<Report> {
    sp4::check_q(q).map_err(|e| usage(e.to_string()))?;
    let ells = match ell {
        Some(l) => {
            sp4::order_of_q_mod_ell(q, l).map_err(|e| usage(e.to_string()))?;
            vec![l]
        }
        None => relevant_primes(q),
    };
    let mut report = Report::new("sp4");
    report.param("q", q);
    report.param("ell", ell.map_or_else(|| join(&ells), |l| l.to_string()));
    let parts: Vec<_> = ells.par_iter().map(|&l| sp4_one(q, l)).collect();
    for (l, part) in ells.iter().zip(parts) {
        report.absorb(&format!("ell={l}"), part?);
    }
    Ok(report)
}
