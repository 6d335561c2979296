//! Acceptance run: one PASS/FAIL line per criterion. Every comparison is
//! exact equality of integers, polynomials or canonical rational functions.

use std::process::ExitCode;
use std::time::Instant;

use temperley_lieb::cellmod::{restriction_filtration_check, routes_agree_check};
use temperley_lieb::diagrams::{enumerate_diagrams, relations_check};
use temperley_lieb::exactring::{check_p_identities, p, IntPoly, RatFunc};
use temperley_lieb::gramdet::{branching_product, closed_form_det, closed_form_product, g_factor_product, gramdet_check};
use temperley_lieb::jucys::{separation_check, triangular_action_check, verify_jm_properties};
use temperley_lieb::murphy::{murphy_bijection, star_symmetry_check};
use temperley_lieb::seminormal::seminormal_check;
use temperley_lieb::tableaux::{dim_by_binomials, partitions_of, Partition};
use temperley_lieb::Report;

const DIRECT_LIMIT: usize = 64;

/// Catalan numbers by the convolution recurrence.
fn catalan_oracle(max: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for n in 0..max {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c
}

fn diagram_calculus() -> Report {
    let mut rep = Report::new("diagram calculus");
    for n in 2..=8 {
        rep.absorb(relations_check(n));
    }
    let cat = catalan_oracle(12);
    for n in 1..=12 {
        let count = enumerate_diagrams(n).len() as u128;
        rep.check(count == cat[n], || format!("n = {n}: {count} diagrams, expected {}", cat[n]));
    }
    rep.check(cat[12] == 208012, || "C_12".into());
    rep
}

fn murphy_basis() -> Report {
    let mut rep = Report::new("Murphy basis");
    let cat = catalan_oracle(12);
    for n in 1..=12 {
        match murphy_bijection(n) {
            Ok(b) => {
                rep.check(b.len() as u128 == cat[n], || format!("n = {n}: {} basis diagrams", b.len()));
            }
            Err(e) => rep.fail(format!("n = {n}: {e}")),
        }
    }
    for n in 1..=8 {
        rep.absorb(star_symmetry_check(n));
    }
    rep
}

fn cell_modules() -> Report {
    let mut rep = Report::new("cell modules");
    for n in 1..=8 {
        let basis = match murphy_bijection(n) {
            Ok(b) => b,
            Err(e) => {
                rep.fail(format!("n = {n}: {e}"));
                continue;
            }
        };
        for lambda in partitions_of(n) {
            rep.absorb(routes_agree_check(lambda, &basis));
            if n <= 7 {
                rep.absorb(restriction_filtration_check(lambda));
            }
        }
    }
    rep
}

fn jm_suite() -> Report {
    let mut rep = Report::new("Jucys-Murphy identities");
    for n in 2..=7 {
        rep.absorb(verify_jm_properties(n));
    }
    rep
}

fn spectra() -> Report {
    let mut rep = Report::new("spectra");
    for n in 1..=8 {
        for lambda in partitions_of(n) {
            rep.absorb(triangular_action_check(lambda));
        }
    }
    for n in 1..=10 {
        rep.absorb(separation_check(n));
    }
    rep
}

fn seminormal() -> Report {
    let mut rep = Report::new("seminormal basis");
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            rep.absorb(seminormal_check(lambda));
        }
    }
    rep
}

fn gram_determinants() -> Report {
    let mut rep = Report::new("Gram determinants");
    for n in 1..=8 {
        rep.absorb(gramdet_check(n, DIRECT_LIMIT));
    }
    rep
}

fn worked_example() -> Report {
    let mut rep = Report::new("n = 11, (5,1) determinant");
    let lambda = Partition::new(5, 1);
    let ratio = |a: usize, b: usize, e: u32| RatFunc::from_parts(p(a).pow(e), p(b).pow(e));
    let displayed = [ratio(7, 5, 1), ratio(6, 4, 10), ratio(5, 3, 44), ratio(4, 2, 110), ratio(3, 1, 165)]
        .iter()
        .fold(RatFunc::one(), |a, b| &a * b);
    let closed = closed_form_det(lambda);
    rep.check(closed == displayed, || "closed form differs from the displayed ratio product".into());
    let two = IntPoly::from(2);
    let normalized = [
        (p(7), 1),
        (&p(3) - &(&two * &p(1)), 10),
        (p(5), 43),
        (&p(3) - &p(1), 100),
        (p(3), 131),
    ]
    .iter()
    .fold(IntPoly::one(), |a, (f, e)| &a * &f.pow(*e));
    rep.check(closed.as_poly() == Some(&normalized), || "closed form differs from the Z[x] product".into());
    rep.check(branching_product(lambda) == closed_form_product(lambda), || "branching product differs".into());
    let want = [1u128, 10, 44, 110, 165];
    for (j, w) in want.iter().enumerate() {
        let mu = Partition::new(j, 11 - 2 * j);
        rep.check(dim_by_binomials(mu) == *w, || format!("dim {mu} = {}", dim_by_binomials(mu)));
        match g_factor_product(lambda, mu) {
            Ok(g) => {
                let e = g.exponent(11 - 5 - j + 1);
                rep.check(e == *w as i64, || format!("g exponent for {mu}: {e}"));
            }
            Err(e) => rep.fail(e.to_string()),
        }
    }
    rep
}

fn chebyshev() -> Report {
    let mut rep = Report::new("p-sequence identities");
    rep.absorb(check_p_identities(20));
    rep
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Report); 9] = [
        (1, diagram_calculus),
        (2, murphy_basis),
        (3, cell_modules),
        (4, jm_suite),
        (5, spectra),
        (6, seminormal),
        (7, gram_determinants),
        (8, worked_example),
        (9, chebyshev),
    ];
    let mut all = true;
    for (k, run) in criteria {
        let start = Instant::now();
        let rep = run();
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {k}: {status}  {} ({} checks, {} failed, {:.2?})",
            rep.title(),
            rep.checked(),
            rep.failed(),
            start.elapsed()
        );
        for msg in rep.failures().iter().take(10) {
            println!("    {msg}");
        }
        all &= rep.passed();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
