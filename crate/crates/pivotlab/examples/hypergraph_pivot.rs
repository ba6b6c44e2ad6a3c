//! Pivot generalized to hypergraphs through the ANF rewrite
//! p -> p + (x_u + x_v)(N_u + N_v) + N_u N_v, and the spectral identity
//! behind it: the rewrite is the H x H transform at the edge positions.
//!
//!     cargo run --release --example hypergraph_pivot

use pivotlab::anf::BooleanFunction;
use pivotlab::graph::Hypergraph;
use pivotlab::spectral::verify_pivot_identity;

fn main() {
    // A cubic hyperedge hanging off an ordinary edge.
    let p = BooleanFunction::parse("n=4; x0*x1+x1*x2*x3").unwrap();
    let h = Hypergraph::from_function(&p);
    println!("p = {p}");
    println!("admissible edges: {:?}", h.edges());

    let pivoted = h.hyper_pivot(0, 1).unwrap();
    println!("after pivot on (0,1): {}", pivoted.function());

    // The same rewrite read spectrally: H at position 0 then 1 applied to
    // (-1)^p lands exactly on (-1)^{pivoted p}.
    assert!(verify_pivot_identity(&p, 0, 1).unwrap());
    println!("H_0 H_1 (-1)^p equals (-1)^(pivoted p) exactly");

    // Pivoting twice on the same edge is the identity whenever the edge
    // stays admissible.
    assert_eq!(pivoted.hyper_pivot(0, 1).unwrap(), h);
    println!("pivoting (0,1) again restores p");

    // The admissibility condition: the pair must be a term, and must not
    // sit inside any larger term.
    let blocked = BooleanFunction::parse("n=3; x0*x1+x0*x1*x2").unwrap();
    let hb = Hypergraph::from_function(&blocked);
    println!("\np = {blocked}");
    match hb.hyper_pivot(0, 1) {
        Err(e) => println!("pivot on (0,1) is rejected: {e}"),
        Ok(_) => unreachable!("the edge divides a cubic term"),
    }

    // On quadratics the hypergraph pivot is the ordinary graph pivot.
    let quad = BooleanFunction::parse("n=3; x0*x1+x1*x2").unwrap();
    let hq = Hypergraph::from_function(&quad);
    let via_anf = hq.hyper_pivot(0, 1).unwrap().as_graph().unwrap();
    let via_graph = hq.as_graph().unwrap().pivot(0, 1, true).unwrap();
    assert_eq!(via_anf, via_graph);
    println!("\nquadratic case agrees with the graph pivot: {}", via_anf.to_hex());
}
