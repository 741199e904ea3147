//! The Jucys–Murphy factorization of the sum of all permutations.
//!
//! ```text
//! cargo run --example jucys_murphy
//! ```

use rectchar::stanley::{jm_factorization_check, GroupRingElem, Perm};

fn main() {
    let j3 = GroupRingElem::jucys_murphy(3, 3);
    println!("J_3 in Z[S_3] has {} terms", j3.support_size());
    println!(
        "coefficient of (1 3): {}",
        j3.coeff(&Perm::transposition(3, 1, 3))
    );

    for k in 1..=6 {
        println!("k = {k}: identity holds = {}", jm_factorization_check(k));
    }
}
