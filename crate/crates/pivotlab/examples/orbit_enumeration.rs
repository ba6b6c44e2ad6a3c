//! Orbits of graphs under pivot and local complementation, labelled and
//! up to isomorphism, and whole-universe classification.
//!
//!     cargo run --release --example orbit_enumeration

use pivotlab::graph::Graph;
use pivotlab::orbit::{
    classify, extend_bipartite, extension_count, lc_orbit, pivot_orbit, Mode, MoveSet, Universe,
};

fn main() {
    // The star on four vertices: four labelled graphs in its pivot orbit,
    // one isomorphism class.
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let report = pivot_orbit(&star, Mode::Labelled);
    println!(
        "star K_(1,3): {} labelled members, {} up to isomorphism, representative {}",
        report.labelled_size.unwrap(),
        report.unlabelled_size,
        report.representative.to_line()
    );

    // Under local complementation the path and the triangle merge.
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let report = lc_orbit(&p3, Mode::Unlabelled);
    println!("P3 under LC: orbit of {} classes", report.unlabelled_size);

    // Classify whole universes. Connected graphs on six vertices fall
    // into 35 pivot orbits and 11 LC orbits.
    for moves in [MoveSet::Pivot, MoveSet::Lc] {
        let result = classify(6, moves, Universe::Connected, Mode::Unlabelled, 4).unwrap();
        println!(
            "connected n=6 under {:>5}: {} orbits",
            moves.as_str(),
            result.orbit_count()
        );
    }

    // The extension method for bipartite orbits: every (a,b)-bipartite
    // graph has 2^a + 2^b - 2 one-vertex extensions, and the extensions of
    // orbit representatives at one size cover every orbit at the next.
    let k11 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let extensions = extend_bipartite(&[k11]);
    println!(
        "\nextensions of a single edge: {} (formula {})",
        extensions.len(),
        extension_count(1, 1)
    );
    for n in 5..=8 {
        let result =
            classify(n, MoveSet::Pivot, Universe::BipartiteConnected, Mode::Unlabelled, 4)
                .unwrap();
        let sides: Vec<_> = result
            .classes
            .iter()
            .map(|c| c.bipartite_sides.expect("orbits are bipartite"))
            .collect();
        println!("bipartite connected n={n}: {} orbits, sides {sides:?}", result.orbit_count());
    }
}
