//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! with the case count and wall time; all identities are exact integer
//! equalities, so there are no tolerances beyond the time budgets.

use std::time::{Duration, Instant};

use orbitcat::cli::verify::{
    braid_suite, cofibration_suite, cone_suite, counting_suite, homotopy_suite, orbit_dg_suite,
    serre_suite, two_cy_suite, Report,
};
use orbitcat::clustergeom::{cluster_tilting_objects, diagonals, triangulations};
use orbitcat::exactlin::Field;
use orbitcat::orbitcat::OrbitCategory;
use orbitcat::quiverrep::Quiver;

const SEED: u64 = 0;

fn finish(criterion: u32, name: &str, reports: &[Report], started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("[{}] {}: {} vs {}", r.suite, f.inputs, f.lhs, f.rhs)))
        .collect();
    let ok = failures.is_empty() && elapsed <= budget;
    println!(
        "criterion {criterion} {name}: {} ({cases} cases, {} failures, {:.2}s of {}s)",
        if ok { "PASS" } else { "FAIL" },
        failures.len(),
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for r in reports {
        for n in &r.notes {
            println!("    {n}");
        }
    }
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {criterion}: {} violated cases", failures.len());
    assert!(elapsed <= budget, "criterion {criterion}: {elapsed:?} over the {budget:?} budget");
}

#[test]
fn criterion_1_serre_duality() {
    let t = Instant::now();
    let r = serre_suite(1..=5, (-3, 3), Field::Rational);
    finish(1, "Serre duality, A_1..A_5, shifts [-3,3]", &[r], t, Duration::from_secs(30));
}

#[test]
fn criterion_2_two_calabi_yau() {
    let t = Instant::now();
    let r = two_cy_suite(1..=4, Field::Rational);
    finish(2, "2-Calabi-Yau and Ext¹ symmetry, A_1..A_4", &[r], t, Duration::from_secs(60));
}

#[test]
fn criterion_3_finiteness_and_dg() {
    let t = Instant::now();
    let r = orbit_dg_suite(1..=5, 1..=3, 2, Field::Rational);
    finish(3, "finite orbit support (n ≤ 5), dg degree 0 (n ≤ 3)", &[r], t, Duration::from_secs(120));
}

#[test]
fn criterion_4_cone_representability() {
    let t = Instant::now();
    let r = cone_suite(SEED, 30, Field::Rational);
    finish(4, "cone representability, 30 random (f, Z) over A_2", &[r], t, Duration::from_secs(10));
}

#[test]
fn criterion_5_homotopy_oracle() {
    let t = Instant::now();
    let r = homotopy_suite(SEED, 50, Field::Rational);
    finish(5, "homology homs against brute force, 50 pairs", &[r], t, Duration::from_secs(20));
}

#[test]
fn criterion_6_counting() {
    let t = Instant::now();
    // independent figures: n(n+3)/2 and Catalan(n+1)
    let indecs = [2, 5, 9, 14];
    let tilting = [2, 5, 14, 42];
    for n in 1..=4 {
        let c = OrbitCategory::cluster(std::sync::Arc::new(Quiver::linear_a(n)), Field::Rational).unwrap();
        assert_eq!(c.indecomposables().len(), indecs[n - 1], "A_{n} orbit count");
        assert_eq!(diagonals(n).unwrap().len(), indecs[n - 1], "A_{n} diagonals");
        assert_eq!(cluster_tilting_objects(&c).unwrap().len(), tilting[n - 1], "A_{n} tilting");
        assert_eq!(triangulations(n).unwrap().len(), tilting[n - 1], "A_{n} triangulations");
    }
    let r = counting_suite(1..=4, Field::Rational);
    finish(6, "orbit, tilting and bijection counts, A_1..A_4", &[r], t, Duration::from_secs(120));
}

#[test]
fn criterion_7_braid_relations() {
    let t = Instant::now();
    let r = braid_suite(1..=6, 1..=4);
    finish(7, "braid relations (m ≤ 6), trivial quotient action (m ≤ 4)", &[r], t, Duration::from_secs(5));
}

#[test]
fn criterion_8_cofibrations() {
    let t = Instant::now();
    let r = cofibration_suite(SEED, 20, Field::Rational);
    finish(8, "quotients by cofibrations and triangle exactness", &[r], t, Duration::from_secs(15));
}
