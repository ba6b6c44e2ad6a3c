//! Bit-exact regression pins for the representative databases: the
//! classification must keep producing byte-identical files, so canonical
//! forms and orbit decompositions cannot drift silently.

use pivotlab::orbit::{classify, reps_from_database, reps_to_database, Mode, MoveSet, Universe};

fn check(golden: &str, n: usize, moves: MoveSet, universe: Universe) {
    let classes = classify(n, moves, universe, Mode::Unlabelled, 2)
        .unwrap()
        .classes;
    let text = reps_to_database(&classes);
    assert_eq!(text, golden, "database drifted for {} {} n={n}", moves.as_str(), universe.as_str());
    // The file parses back to one graph per orbit, each its own
    // representative.
    let graphs = reps_from_database(golden).unwrap();
    assert_eq!(graphs.len(), classes.len());
}

#[test]
fn pivot_connected_5() {
    check(
        include_str!("golden/pivot_connected_5.txt"),
        5,
        MoveSet::Pivot,
        Universe::Connected,
    );
}

#[test]
fn pivot_connected_6() {
    check(
        include_str!("golden/pivot_connected_6.txt"),
        6,
        MoveSet::Pivot,
        Universe::Connected,
    );
}

#[test]
fn lc_connected_6() {
    check(
        include_str!("golden/lc_connected_6.txt"),
        6,
        MoveSet::Lc,
        Universe::Connected,
    );
}

#[test]
fn pivot_bipartite_connected_7() {
    check(
        include_str!("golden/pivot_bipartite_connected_7.txt"),
        7,
        MoveSet::Pivot,
        Universe::BipartiteConnected,
    );
}
