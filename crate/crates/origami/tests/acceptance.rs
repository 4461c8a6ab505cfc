//! The acceptance suite: one test per shipped claim, each printing a
//! single pass/fail line. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines for passing criteria too).

use origami::verify::{self, Check};

fn report(criterion: &str, checks: &[Check]) {
    let pass = checks.iter().all(|c| c.pass);
    println!(
        "acceptance {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    for c in checks {
        if !c.pass {
            println!("  FAIL {} ({})", c.label, c.detail);
        }
    }
    assert!(pass, "criterion '{criterion}' failed");
}

#[test]
fn criterion_01_haga_thirds() {
    report("01 haga thirds", &verify::haga_checks().unwrap());
}

#[test]
fn criterion_02_golden_section() {
    report("02 golden section", &verify::golden_checks().unwrap());
}

#[test]
fn criterion_03_delian_doubling() {
    report("03 delian doubling", &verify::delian_checks().unwrap());
}

#[test]
fn criterion_04_trisection_with_ruler_oracle() {
    report("04 trisection", &verify::trisect_checks().unwrap());
}

#[test]
fn criterion_05_cube_roots() {
    report("05 cube roots", &verify::cuberoot_checks().unwrap());
}

#[test]
fn criterion_06_simultaneous_fold_completeness() {
    report(
        "06 simultaneous-fold completeness (1000 configs)",
        &verify::o6_completeness_checks(1000, 0x0619).unwrap(),
    );
}

#[test]
fn criterion_07_cubics_by_folding() {
    report(
        "07 cubics by folding (100 random)",
        &verify::cubic_folding_checks(100, 0xf01d).unwrap(),
    );
}

#[test]
fn criterion_08_heptagon() {
    report("08 heptagon", &verify::heptagon_checks().unwrap());
}

#[test]
fn criterion_09_heptadecagon() {
    report("09 heptadecagon", &verify::heptadecagon_checks().unwrap());
}

#[test]
fn criterion_10_ngon_tables_and_closures() {
    report("10 n-gon tables", &verify::ngon_table_checks().unwrap());
}

#[test]
fn criterion_11_quartic_solver() {
    report(
        "11 quartic solver (1000 random)",
        &verify::quartic_checks(1000, 0x4a17).unwrap(),
    );
}

#[test]
fn criterion_12_property_suites() {
    report("12 property suites", &verify::property_checks().unwrap());
}
