//! Counting flat spectra of Boolean functions under the {I,H,N} tensor
//! transforms, exactly.
//!
//!     cargo run --release --example flat_spectra

use pivotlab::anf::{clique_function, BooleanFunction};
use pivotlab::graph::Graph;
use pivotlab::spectral::{count_flat, count_flat_quadratic, flat_specs, Family};

fn main() {
    // The complete graph maximizes the number of flat {I,H}^n spectra:
    // exactly 2^(n-1) of the 2^n transforms are flat.
    for n in 2..=8 {
        let count = count_flat(&clique_function(n), Family::IH).unwrap();
        println!("K_{n}: {count} flat IH spectra (2^(n-1) = {})", 1u64 << (n - 1));
    }

    // The flat transforms themselves, as kernel strings (position k acts
    // on variable x_k).
    let triangle = BooleanFunction::parse("n=3; x0*x1+x0*x2+x1*x2").unwrap();
    let witnesses = flat_specs(&triangle, Family::IH).unwrap();
    println!("\nflat IH members for the triangle:");
    for spec in witnesses {
        println!("  {spec}");
    }

    // For quadratics, flatness of one transform is a GF(2) rank question,
    // so counting scales far past direct-transform reach.
    let g = Graph::from_quadratic(&clique_function(20)).unwrap();
    println!("\nK_20 via the rank fast path: {}", count_flat_quadratic(&g, Family::IH));

    // The three families differ: adding N positions usually helps.
    let path4 = BooleanFunction::parse("n=4; x0*x1+x1*x2+x2*x3").unwrap();
    for family in [Family::IH, Family::HN, Family::IHN] {
        let count = count_flat(&path4, family).unwrap();
        println!("P4 under {:>3}: {count} of {}", family.as_str(), family.size(4));
    }
}
