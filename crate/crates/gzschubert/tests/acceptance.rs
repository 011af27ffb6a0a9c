//! One line per acceptance criterion. The process fails when a check fails
//! or a time budget is exceeded. A statement that is false as written is
//! printed as FAIL with its counterexample but does not fail the process
//! when its corrected form holds.

use std::time::Duration;

use gzschubert::verify::{
    character_weights, degree_suite, demazure, dual_demazure, ehrhart_suite, fomin_kirillov, golden, mitosis_suite,
    parabox_suite, richardson_suite, ring_suite, thread_pool, Report,
};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Report,
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "golden n = 3 Schubert polynomials and volume", budget: Some(Duration::from_secs(1)), run: golden },
        Criterion {
            id: 2,
            title: "Fomin-Kirillov = divided differences, n <= 5 all, n = 6 random 50",
            budget: Some(Duration::from_secs(60)),
            run: || fomin_kirillov(5, 50),
        },
        Criterion {
            id: 3,
            title: "Demazure characters, faces = operators",
            budget: Some(Duration::from_secs(300)),
            run: || demazure(&character_weights()),
        },
        Criterion { id: 4, title: "dual faces give w0 χ^(w0 w)", budget: None, run: || dual_demazure(&character_weights()) },
        Criterion { id: 5, title: "Hilbert function of face unions", budget: None, run: ehrhart_suite },
        Criterion { id: 6, title: "degree polynomial = Kogan and dual volume sums, n <= 4", budget: None, run: || degree_suite(4) },
        Criterion { id: 7, title: "mitosis regenerates reduced faces (n <= 5), T^- on characters (n <= 4)", budget: None, run: || mitosis_suite(5, 4) },
        Criterion { id: 8, title: "parallelepipeds and paramitosis", budget: Some(Duration::from_secs(60)), run: || parabox_suite(500, 300) },
        Criterion { id: 9, title: "Poincaré pairing, structure constants, Monk's rule, n <= 4", budget: None, run: || ring_suite(4) },
        Criterion { id: 10, title: "Richardson vertex counts (n = 3 all, n = 4 sample of 30)", budget: None, run: || richardson_suite(30) },
    ];
    let pool = thread_pool();
    let mut broken = 0;
    for c in &criteria {
        let report = pool.install(c.run);
        let elapsed = Duration::from_millis(report.millis);
        let over = c.budget.is_some_and(|b| elapsed > b);
        let status = if report.passed() && report.refuted.is_empty() && !over { "PASS" } else { "FAIL" };
        println!("{} #{} {} ({} checks, {} ms)", status, c.id, c.title, report.checks, report.millis);
        for f in report.failures.iter().take(10) {
            println!("    failure: {}", f);
        }
        if report.failures.len() > 10 {
            println!("    ... {} more failures", report.failures.len() - 10);
        }
        if over {
            println!("    over the time budget of {:?}", c.budget.unwrap_or_default());
        }
        for r in &report.refuted {
            println!("    statement false as written: {}", r);
        }
        for f in &report.findings {
            println!("    finding: {}", f);
        }
        if !report.passed() || over {
            broken += 1;
        }
    }
    if broken > 0 {
        println!("{} criteria failed", broken);
        std::process::exit(1);
    }
}
