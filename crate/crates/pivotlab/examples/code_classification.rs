//! Binary linear codes through their bipartite graphs: standard form,
//! information sets by pivoting, equivalence, and classification.
//!
//!     cargo run --release --example code_classification

use pivotlab::code::{
    classify_codes, equivalent, graph_from_code, information_set_count,
    information_set_count_brute, is_isodual, LinearCode,
};

fn main() {
    // The [7,4] Hamming code.
    let hamming = LinearCode::parse("7 4\n1101000\n0110100\n1110010\n1010001\n").unwrap();
    let graph = graph_from_code(&hamming).unwrap();
    println!("Hamming [7,4] block graph: {}", graph.to_hex());
    let walked = information_set_count(&hamming).unwrap();
    let brute = information_set_count_brute(&hamming);
    println!("information sets: {walked} by pivoting, {brute} by rank enumeration");

    // Equivalence is decided on the coloured pivot orbit, so a shuffled
    // copy matches and the dual (different dimension here) does not.
    let shuffled = hamming.permute(&[3, 0, 6, 2, 5, 1, 4]);
    println!(
        "shuffled copy equivalent: {}",
        equivalent(&hamming, &shuffled).unwrap()
    );
    println!(
        "equivalent to its dual: {}",
        equivalent(&hamming, &hamming.dual()).unwrap()
    );

    // The repetition code of length 2 is the smallest isodual code.
    let rep2 = LinearCode::parse("2 1\n11\n").unwrap();
    println!("[2,1] isodual: {}", is_isodual(&rep2).unwrap());

    // Classification by length: each connected bipartite pivot orbit
    // carries a code and its dual, isodual codes collapse the pair.
    println!("\nlength  orbits  indecomposable  isodual  per-dimension");
    for n in 1..=8 {
        let result = classify_codes(n, 4).unwrap();
        println!(
            "{n:>6}  {:>6}  {:>14}  {:>7}  {:?}",
            result.orbit_count,
            result.indecomposable,
            result.isodual,
            &result.per_k[1..]
        );
    }
}
