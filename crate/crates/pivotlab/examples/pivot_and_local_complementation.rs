//! Local complementation and pivot on plain graphs, and what pivoting
//! does to cliques.
//!
//!     cargo run --release --example pivot_and_local_complementation

use pivotlab::graph::{clique_split_predict, Graph};

fn show(label: &str, g: &Graph) {
    println!("{label}: {} (edges {:?})", g.to_hex(), g.edges());
}

fn main() {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    show("path 0-1-2", &path);

    // Complementing the neighbourhood of the centre turns the path into a
    // triangle; doing it twice undoes it.
    let tri = path.local_complement(1).unwrap();
    show("LC(1)", &tri);
    assert_eq!(tri.local_complement(1).unwrap(), path);

    // Pivot on an edge is LC(u) LC(v) LC(u); the swap convention matches
    // that composition.
    let pivoted = path.pivot(0, 1, true).unwrap();
    show("pivot(0,1)", &pivoted);
    let composed = path
        .local_complement(0)
        .unwrap()
        .local_complement(1)
        .unwrap()
        .local_complement(0)
        .unwrap();
    assert_eq!(pivoted, composed);

    // A clique with one pivot endpoint inside splits into two smaller
    // cliques sharing the endpoints.
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (3, 4)]).unwrap();
    let clique = [0, 1, 2];
    let predicted = clique_split_predict(&g, &clique, 0, 3).unwrap();
    println!("\npivoting (0,3) against the triangle {{0,1,2}}: predicted clique sizes {predicted:?}");
    let after = g.pivot(0, 3, true).unwrap();
    show("after the pivot", &after);
    after.is_clique(&[1, 3]).unwrap();
    after.is_clique(&[0, 1, 3]).unwrap();
    println!("max clique before {} / after {}", g.max_clique_size(), after.max_clique_size());

    // Pivoting never leaves the bipartite world, and the side sizes are
    // invariant.
    let bip = Graph::from_edges(5, &[(0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
    let (a, b) = bip.bipartition().unwrap();
    println!("\nbipartite with sides {a:?} / {b:?}");
    let moved = bip.pivot(1, 3, true).unwrap();
    let (a2, b2) = moved.bipartition().unwrap();
    println!("after pivot(1,3): sides {a2:?} / {b2:?}");
    assert_eq!(
        (a.len().min(b.len()), a.len().max(b.len())),
        (a2.len().min(b2.len()), a2.len().max(b2.len()))
    );
}
