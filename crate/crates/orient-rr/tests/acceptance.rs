//! Acceptance suite: every identity the engine is contracted to satisfy,
//! checked exactly (tolerance zero) within a stated time budget. One
//! pass/fail line prints per criterion (visible with `--nocapture`).

use std::time::Instant;

use orient_rr::fgl::Theory;
use orient_rr::report::Verdict;
use orient_rr::suites;

const THEORIES: [Theory; 3] = [Theory::Additive, Theory::Multiplicative, Theory::Universal(3)];
const ORDER: u32 = 10;

fn assert_all_pass(name: &str, budget_secs: f64, verdicts: Vec<Verdict>, started: Instant) {
    let elapsed = started.elapsed().as_secs_f64();
    let failures: Vec<&Verdict> = verdicts.iter().filter(|v| !v.passed()).collect();
    let status = if failures.is_empty() { "pass" } else { "FAIL" };
    println!(
        "{name}: {status} ({} checks, {elapsed:.2}s, budget {budget_secs}s)",
        verdicts.len()
    );
    assert!(
        failures.is_empty(),
        "{name}: {} failures, first: {:?}",
        failures.len(),
        failures.first()
    );
    assert!(!verdicts.is_empty(), "{name}: no checks ran");
    assert!(
        elapsed < budget_secs,
        "{name}: took {elapsed:.2}s, budget {budget_secs}s"
    );
}

#[test]
fn criterion_01_fgl_residuals_zero() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(suites::suite_fgl(theory, ORDER).expect("fgl suite"));
    }
    assert_all_pass("criterion 1 (formal group laws)", 10.0, all, t0);
}

#[test]
fn criterion_02_projective_bundle_theorem() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(suites::suite_pbf(theory, ORDER).expect("pbf suite"));
    }
    assert_all_pass("criterion 2 (projective bundle theorem)", 1.0, all, t0);
}

#[test]
fn criterion_03_thom_equals_quotient_top_chern() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(suites::suite_thom(theory, ORDER).expect("thom suite"));
    }
    assert_all_pass("criterion 3 (Thom/quotient identity)", 10.0, all, t0);
}

#[test]
fn criterion_04_whitney_and_todd_multiplicativity() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        // 100 randomized instances per identity per theory, over P^3
        all.extend(suites::suite_classes(theory, ORDER, 100).expect("classes suite"));
    }
    assert_all_pass("criterion 4 (Whitney + Todd multiplicativity)", 30.0, all, t0);
}

#[test]
fn criterion_05_duality_triangularity() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(suites::suite_duality(theory, ORDER).expect("duality suite"));
    }
    assert_all_pass("criterion 5 (duality triangular unit diagonal)", 10.0, all, t0);
}

fn gysin_filtered(prefixes: &[&str]) -> Vec<Verdict> {
    let mut all = Vec::new();
    for theory in THEORIES {
        let verdicts = suites::suite_gysin(theory, ORDER).expect("gysin suite");
        all.extend(
            verdicts
                .into_iter()
                .filter(|v| prefixes.iter().any(|p| v.check.starts_with(p))),
        );
    }
    all
}

#[test]
fn criterion_06_section_identity_and_projection_formula() {
    let t0 = Instant::now();
    let all = gysin_filtered(&["section_identity", "projection_formula"]);
    assert_all_pass("criterion 6 (section identity + projection formula)", 30.0, all, t0);
}

#[test]
fn criterion_07_functoriality_and_factorization() {
    let t0 = Instant::now();
    let all = gysin_filtered(&["gysin_functoriality", "factorization_independence"]);
    assert_all_pass("criterion 7 (functoriality / factorization)", 10.0, all, t0);
}

#[test]
fn criterion_08_excess_self_intersection() {
    let t0 = Instant::now();
    let all = gysin_filtered(&["self_intersection", "excess"]);
    assert_all_pass("criterion 8 (excess / self-intersection)", 5.0, all, t0);
}

#[test]
fn criterion_09_riemann_roch_closed_immersions() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(orient_rr::rr::sweep_rr_closed(theory, 3, ORDER).expect("rr closed sweep"));
    }
    assert_all_pass("criterion 9 (Riemann-Roch, closed immersions)", 60.0, all, t0);
}

#[test]
fn criterion_10_riemann_roch_projections_and_lci() {
    let t0 = Instant::now();
    let mut all = Vec::new();
    for theory in THEORIES {
        all.extend(
            orient_rr::rr::sweep_rr_projection(theory, 3, ORDER).expect("rr projection sweep"),
        );
        all.extend(orient_rr::rr::sweep_grr(theory, 3, ORDER).expect("grr sweep"));
    }
    // the trivial rank-3 bundle over P^2 (the Kunneth square of P^2): all
    // nine monomial basis classes
    {
        use orient_rr::classes::OrientedCtx;
        use orient_rr::rr::OrientationPair;
        use orient_rr::space::{Bundle, Space};
        let theory = Theory::Multiplicative;
        let p2 = Space::projective_space(2, theory.coeff_ring(ORDER)).expect("P2");
        let e = Bundle::trivial(&p2, 3);
        let p2xp2 = Space::proj_bundle(&e, "P2xP2", "k").expect("square");
        let pair = OrientationPair::new(
            &theory.native_orientation(ORDER),
            &theory.reference_orientation(ORDER),
        )
        .expect("pair");
        let _ = OrientedCtx::new(theory.native_orientation(ORDER)).expect("ctx");
        assert_eq!(p2xp2.ring().rank(), 9);
        for b in p2xp2.ring().basis() {
            let alpha = p2xp2.ring().monomial(b, p2xp2.ring().coeff_ring().one());
            all.push(orient_rr::rr::verify_rr_projection(&pair, &p2xp2, &alpha));
        }
    }
    assert_all_pass("criterion 10 (Riemann-Roch, projections + lci)", 120.0, all, t0);
}

#[test]
fn criterion_11_hirzebruch_numbers() {
    let t0 = Instant::now();
    let verdicts = suites::suite_hrr(ORDER);
    // the sweep covers 0 <= n <= 3, -n <= d <= 5; cross-check the count
    let expected: usize = (0..=3u32).map(|n| (n as usize) + 6).sum();
    assert_eq!(verdicts.len(), expected);
    // and the independent Pascal oracle agrees case by case
    for n in 0..=3i64 {
        for d in 0..=5i64 {
            let chi = orient_rr::rr::hrr_number(n as u16, d, ORDER).expect("hrr");
            assert_eq!(chi, orient_rr::rr::binomial_extended(n + d, n), "n={n} d={d}");
        }
        for d in -n..0 {
            let chi = orient_rr::rr::hrr_number(n as u16, d, ORDER).expect("hrr");
            assert_eq!(chi, orient_rr::rr::binomial_extended(n + d, n), "n={n} d={d}");
        }
    }
    assert_all_pass("criterion 11 (Hirzebruch numbers)", 10.0, verdicts, t0);
}
