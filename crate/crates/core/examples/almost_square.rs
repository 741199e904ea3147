//! Polynomials in (j, n) for rectangles with a fixed side difference.
//!
//! ```text
//! cargo run --example almost_square
//! ```

use rectchar::closed::{corollary_poly, corollary_value, CycleParity, DiffParity, ParityCase};
use rectchar::exact::Int;
use rectchar::poly::jnpoly_text;

fn main() {
    for two_d in -5..=6i64 {
        for cycle in [CycleParity::Odd, CycleParity::Even] {
            let family = ParityCase::new(cycle, DiffParity::of(two_d)).family();
            let f = corollary_poly(two_d, cycle);
            println!("{family}  2d = {two_d:>2}: {}", jnpoly_text(&f));
        }
    }

    // evaluate one of them directly without building the polynomial
    let v = corollary_value(4, CycleParity::Odd, 3, &Int::from(30));
    println!("\nG at d = 2, j = 3, n = 30: {v}");
}
