//! Acceptance gate. One test per criterion; each prints a single
//! pass/fail line (visible with --nocapture) and fails the build on any
//! regression.

use leghopf::selfcheck;
use leghopf::Result;

fn gate(name: &str, result: Result<String>) {
    match result {
        Ok(detail) => println!("{name}: pass ({detail})"),
        Err(e) => {
            println!("{name}: FAIL ({e})");
            panic!("{name}: {e}");
        }
    }
}

#[test]
fn criterion_1_tight_counts() {
    gate("tight counts match closed forms", selfcheck::c1_tight_counts());
}

#[test]
fn criterion_2_cfrac_identities() {
    gate("continued fraction identities", selfcheck::c2_cfrac_identities());
}

#[test]
fn criterion_3_d3_references() {
    gate("d3 reference values", selfcheck::c3_d3_references());
}

#[test]
fn criterion_4_golden_diagrams() {
    gate("golden diagram constants", selfcheck::c4_golden_diagrams());
}

#[test]
fn criterion_5_family_sweep() {
    gate("family sweep verifies", selfcheck::c5_family_sweep());
}

#[test]
fn criterion_6_enumerations() {
    gate("enumeration cardinalities and rows", selfcheck::c6_enumerations());
}

#[test]
fn criterion_7_twisting() {
    gate("twisting realization sizes", selfcheck::c7_twisting());
}

#[test]
fn criterion_8_algebraic() {
    gate("algebraic self-checks", selfcheck::c8_algebraic());
}
