//! Stanley's polynomial for a few cycle types, and its (D, E) form.
//!
//! ```text
//! cargo run --example stanley_polynomial
//! ```

use rectchar::exact::rat;
use rectchar::poly::{bipoly_text, depoly_text};
use rectchar::stanley::{stanley_eval, stanley_poly, substitute_ed, CycleHistogram};
use rectchar::young::Partition;

fn main() {
    for pi in ["1", "2", "3", "2,1", "4"] {
        let pi: Partition = pi.parse().unwrap();
        let f = stanley_poly(&pi);
        println!("Ch_{pi}(P x Q) = {}", bipoly_text(&f));
        println!(
            "   with P = E - D, Q = E + D: {}",
            depoly_text(&substitute_ed(&f))
        );
    }

    let pi: Partition = "3".parse().unwrap();
    let h = CycleHistogram::of(&pi);
    println!("\n{} permutations enumerated for {pi}", h.total());

    // the polynomial makes sense for any p, q; one row of length -1 is a known case
    for q in 1..=4 {
        println!(
            "Ch_3((-1) x {q}) = {}",
            stanley_eval(&pi, &rat(-1), &rat(q))
        );
    }
}
