//! The acceptance battery, one test per numbered criterion. Each test
//! prints its own `criterion NN ... pass` line so a full run reads as a
//! scoreboard, and the test itself fails with the collected detail when a
//! criterion does not hold.

use sdimlab::verify::run_criterion;

fn check(id: usize) {
    let report = run_criterion(id);
    println!(
        "criterion {:02} {:32} {}",
        report.id,
        report.name,
        if report.pass { "pass" } else { "FAIL" }
    );
    assert!(
        report.pass,
        "criterion {:02} ({}) failed: {}",
        report.id, report.name, report.detail
    );
}

#[test]
fn criterion_01_paths() {
    check(1);
}

#[test]
fn criterion_02_cycles() {
    check(2);
}

#[test]
fn criterion_03_petersen() {
    check(3);
}

#[test]
fn criterion_04_wheels() {
    check(4);
}

#[test]
fn criterion_05_random_trees() {
    check(5);
}

#[test]
fn criterion_06_complete_multipartite() {
    check(6);
}

#[test]
fn criterion_07_gap_family() {
    check(7);
}

#[test]
fn criterion_08_corona_products() {
    check(8);
}

#[test]
fn criterion_09_lexicographic_p4_over_p3() {
    check(9);
}

#[test]
fn criterion_10_lexicographic_c5_over_p3() {
    check(10);
}

#[test]
fn criterion_11_mixed_twins_lexicographic() {
    check(11);
}

#[test]
fn criterion_12_house_lexicographic_sharpness() {
    check(12);
}

#[test]
fn criterion_13_path_grids() {
    check(13);
}

#[test]
fn criterion_14_cycle_cartesian_products() {
    check(14);
}

#[test]
fn criterion_15_cartesian_resolving_structure() {
    check(15);
}

#[test]
fn criterion_16_gap_core_cartesian_paths() {
    check(16);
}

#[test]
fn criterion_17_tree_by_complete_cartesian() {
    check(17);
}

#[test]
fn criterion_18_multipartite_matchings() {
    check(18);
}

#[test]
fn criterion_19_property_sweep() {
    check(19);
}

#[test]
fn criterion_20_odd_cycle_prisms() {
    check(20);
}
