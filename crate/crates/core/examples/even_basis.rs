//! Decomposing the (D, E) Stanley polynomial in the basis of products
//! (D^2 - r^2).
//!
//! ```text
//! cargo run --example even_basis
//! ```

use rectchar::stanley::{basis_structure, stanley_poly, substitute_ed, EvenBasis};
use rectchar::young::Partition;

fn main() {
    for j in 1..=3u32 {
        let pi = Partition::new(vec![2 * j as usize - 1]).unwrap();
        let f = substitute_ed(&stanley_poly(&pi));
        for basis in [EvenBasis::Integer, EvenBasis::HalfInteger] {
            let s = basis_structure(&f, j, basis).unwrap();
            println!("cycle {} in the {basis:?} basis:", 2 * j - 1);
            for (k, p) in s.coefficients.iter().enumerate() {
                println!("  P_{k}(E) = {}", p.to_explicit_string("E"));
            }
            println!("  product structure holds: {}", s.holds());
        }
    }
}
