//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Sample counts, tolerances and time budgets are pinned here.

use std::time::Instant;

use ford_core::verify::{self, SuiteOptions};

fn run(criterion: &str, suite: &str, opts: SuiteOptions, budget_secs: f64) {
    let start = Instant::now();
    let results = verify::run_suite(suite, opts).expect("known suite");
    let elapsed = start.elapsed().as_secs_f64();
    let all_passed = results.iter().all(|r| r.passed);
    let status = if all_passed && elapsed <= budget_secs {
        "PASS"
    } else {
        "FAIL"
    };
    println!("{status} {criterion} ({elapsed:.2}s, budget {budget_secs}s)");
    for r in &results {
        println!(
            "  [{}] {}: {}",
            if r.passed { "ok" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    assert!(all_passed, "{criterion}: a check failed");
    assert!(
        elapsed <= budget_secs,
        "{criterion}: {elapsed:.2}s over budget {budget_secs}s"
    );
}

#[test]
fn criterion_01_conj3_homomorphism_and_02_orthogonality() {
    // 200 random SL2(Z[i]) pairs: conj3(g)conj3(h) = conj3(gh) exactly,
    // images exactly orthogonal with det 1, and the wrong sign at entry
    // (3,2) fails on T_{1+i}.
    run(
        "criteria 1+2: conj3 homomorphism + orthogonality (exact, 200 pairs)",
        "conj3",
        SuiteOptions {
            samples: 200,
            seed: 7,
            eps: 1e-9,
        },
        5.0,
    );
}

#[test]
fn criterion_03_six_coset_structure() {
    // All 6 reps integral; rep_i rep_j^-1 in Xi12 iff i = j; closure
    // over 500 random pairs with zero failures.
    run(
        "criterion 3: six-coset structure + closure (500 pairs)",
        "cosets",
        SuiteOptions {
            samples: 500,
            seed: 7,
            eps: 1e-9,
        },
        30.0,
    );
}

#[test]
fn criterion_04_residue_systems() {
    // n = 1..12: exactly 2^n pairwise-incongruent representatives and
    // an exhaustive coefficient-box reduction scan.
    run(
        "criterion 4: residue systems for (1+i)^n, n = 1..12",
        "residues",
        SuiteOptions {
            samples: 0,
            seed: 7,
            eps: 1e-9,
        },
        10.0,
    );
}

#[test]
fn criterion_05_hecke_decomposition_exhaustive() {
    // Exhaustive scan of Gaussian 2x2 matrices with entry norms <= 2 and
    // nonzero determinant: exact round trip and label-iff-equivalence.
    run(
        "criterion 5: Hecke decomposition exhaustive scan (entry norm <= 2)",
        "hecke",
        SuiteOptions {
            samples: 300,
            seed: 7,
            eps: 1e-9,
        },
        120.0,
    );
}

#[test]
fn criterion_06_picard_tiling() {
    run(
        "criterion 6: Picard tiling (1000 points)",
        "picard",
        SuiteOptions {
            samples: 1000,
            seed: 7,
            eps: 1e-9,
        },
        30.0,
    );
}

#[test]
fn criterion_07_gamma_tiling() {
    // Witness replay error < 1e-9 and iteration count <= 100 are checks
    // inside the suite.
    run(
        "criterion 7: Ford-domain tiling for the SO3(Z[i]) preimage (1000 points)",
        "gamma",
        SuiteOptions {
            samples: 1000,
            seed: 7,
            eps: 1e-9,
        },
        60.0,
    );
}

#[test]
fn criterion_08_f1_shortcut() {
    run(
        "criterion 8: F1 nearest-center shortcut vs full quantifier (1000 points)",
        "f1",
        SuiteOptions {
            samples: 1000,
            seed: 7,
            eps: 1e-9,
        },
        30.0,
    );
}

#[test]
fn criterion_09_real_form_isomorphism() {
    run(
        "criterion 9: real-form membership iff integrality + index 2",
        "realform",
        SuiteOptions {
            samples: 1000,
            seed: 7,
            eps: 1e-9,
        },
        60.0,
    );
}

#[test]
fn criterion_10_domain_relation() {
    run(
        "criterion 10: F_R = (F union rho F) cap H^2 (1000 samples each way)",
        "relation",
        SuiteOptions {
            samples: 1000,
            seed: 7,
            eps: 1e-9,
        },
        30.0,
    );
}

#[test]
fn criterion_11_torsion_facts() {
    run(
        "criterion 11: quarter-turn torsion facts (exact)",
        "torsion",
        SuiteOptions {
            samples: 0,
            seed: 7,
            eps: 1e-9,
        },
        5.0,
    );
}
