//! Acceptance gate: one test per verification suite at the default
//! parameters, each printing a single pass or fail line.

use qcli::checks;
use qcli::{DEFAULT_BOUND, DEFAULT_CAP, DEFAULT_DEPTH};

fn report(number: u32, title: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("criterion {number} ({title}): pass"),
        Err(detail) => println!("criterion {number} ({title}): fail - {detail}"),
    }
    if let Err(detail) = outcome {
        panic!("criterion {number} ({title}) failed: {detail}");
    }
}

#[test]
fn criterion_1_projective_tables() {
    report(1, "projective tables", checks::check_projective_tables(DEFAULT_BOUND));
}

#[test]
fn criterion_2_euler_identities() {
    report(2, "euler identities", checks::check_euler_identities(DEFAULT_DEPTH));
}

#[test]
fn criterion_3_character_inversion() {
    report(3, "character inversion", checks::check_character_inversion(DEFAULT_DEPTH));
}

#[test]
fn criterion_4_hom_consistency() {
    report(4, "hom consistency", checks::check_hom_consistency(DEFAULT_BOUND, DEFAULT_CAP));
}

#[test]
fn criterion_5_radical_filtrations() {
    report(5, "radical filtrations", checks::check_radical_filtrations(DEFAULT_BOUND, DEFAULT_CAP));
}

#[test]
fn criterion_6_representation_type() {
    report(6, "representation type", checks::check_representation_type(DEFAULT_BOUND));
}

#[test]
fn criterion_7_rule_tables() {
    report(7, "rule tables", checks::check_rule_tables());
}

#[test]
fn criterion_8_property_suites() {
    report(
        8,
        "property suites",
        checks::check_property_suites(DEFAULT_DEPTH, DEFAULT_BOUND, DEFAULT_CAP),
    );
}
