//! The exact closed forms for single kernels and the local
//! complementation chain, checked in Gaussian-integer arithmetic.
//!
//!     cargo run --release --example transform_identities

use pivotlab::anf::{BooleanFunction, Z4Function};
use pivotlab::spectral::{
    verify_h_identities, verify_lc_chain, verify_napf, verify_pivot_identity,
};
use pivotlab::suites;

fn main() {
    // H applied at one position to [m](-1)^p has a closed form whose shape
    // depends on how the factorization of m involves x_i.
    let p = BooleanFunction::parse("n=3; x1*x2").unwrap();
    let no_touch = vec![BooleanFunction::parse("n=3; x1+1").unwrap()];
    let linear = vec![BooleanFunction::parse("n=3; x0+x1+1").unwrap()];
    let general = vec![
        BooleanFunction::parse("n=3; x0*x1+x2").unwrap(),
        BooleanFunction::parse("n=3; x0+x2").unwrap(),
    ];
    for factors in [no_touch, linear, general] {
        let report = verify_h_identities(&factors, &p, 0).unwrap();
        println!(
            "factors {factors:?}: branch {:?}, holds {}, {} divisor choices",
            report.branch, report.holds, report.choices_checked
        );
    }

    // The negahadamard kernel splits a Z4 phase vector into restrictions.
    let m = BooleanFunction::parse("n=2; x0+x1+1").unwrap();
    let z4 = Z4Function::from_table(2, vec![0, 3, 1, 2]);
    println!("\nnegahadamard split holds: {}", verify_napf(&m, &z4, 1).unwrap());

    // The LC chain: three negahadamards with diagonal corrections realize
    // the pivot, and the per-position operators collapse to H x H.
    let p = BooleanFunction::parse("n=4; x0*x1+x0*x2*x3+x1*x2").unwrap();
    let chain = verify_lc_chain(&p, 0, 1).unwrap();
    println!(
        "LC chain on {p}: weighted phase {}, chain = pivot {}, operators collapse {}",
        chain.weighted_phase_matches, chain.chain_equals_pivot, chain.operators_collapse_to_h
    );
    assert!(verify_pivot_identity(&p, 0, 1).unwrap());

    // The witness that pivoting cannot reach every flat spectrum in
    // higher degree: a homogeneous cubic that is bent, with no quadratic
    // terms at all.
    let masks = suites::bent_cubic_flat_masks().unwrap();
    println!("\nwitness cubic flat IH masks: {masks:?} (identity and all-H only)");

    // Seeded batteries, the same ones `pivotlab verify` runs.
    let report = suites::transform_identity_suite(600, 7).unwrap();
    println!(
        "\ntransform-identity suite: {} cases, passed: {}",
        report.cases,
        report.passed()
    );
}
