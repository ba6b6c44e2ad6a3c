//! The bipartite-plus-clique family: quadratic skeleton between the first
//! t variables and the rest, free function h on the first t, and a
//! guaranteed number of flat spectra.
//!
//!     cargo run --release --example flat_spectra_family

use pivotlab::anf::{family_member, BooleanFunction, Monomial};
use pivotlab::spectral::family_flat_counts;

fn main() {
    // f^{n,t} with h = 0 and the degree-t member h = x_0...x_{t-1}.
    let n = 6;
    println!("n = {n}: IH count vs bound (t+1) 2^(n-t-1), IHN count vs (n+1)x that\n");
    println!("{:>3} {:>16} {:>9} {:>9} {:>9} {:>10}", "t", "h", "IH", "bound", "IHN", "bound");
    for t in 0..n {
        let product_label = match t {
            0 => "1".to_string(),
            1 => "x0".to_string(),
            _ => format!("x0..x{}", t - 1),
        };
        for (label, h) in [
            ("0".to_string(), BooleanFunction::zero(n)),
            (
                product_label,
                if t == 0 {
                    BooleanFunction::one(n)
                } else {
                    BooleanFunction::from_terms(n, [Monomial((1u32 << t) - 1)])
                },
            ),
        ] {
            let c = family_flat_counts(n, t, &h).unwrap();
            println!(
                "{t:>3} {label:>16} {:>9} {:>9} {:>9} {:>10}",
                c.ih_count, c.ih_bound, c.ihn_count, c.ihn_bound
            );
        }
    }

    // The t = 3 product member in full: complete bipartite part, clique
    // part, and the cubic that locks the count to the bound.
    let h = BooleanFunction::from_terms(6, [Monomial(0b111)]);
    let member = family_member(6, 3, &h, &BooleanFunction::zero(6)).unwrap();
    println!("\nf^(6,3) + x0*x1*x2 = {member}");
    let c = family_flat_counts(6, 3, &h).unwrap();
    println!("flat IH count {} meets the bound {} exactly", c.ih_count, c.ih_bound);
}
